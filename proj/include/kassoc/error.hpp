// Copyright 2026 The kassoc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KASSOC_ERROR_HPP_
#define KASSOC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace kassoc {

// Malformed external input: scenario files, labels, flags.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An analysis was asked to run on arguments that violate its premises
// (e.g. orienting a triple whose associations do not hold).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The oracle backend cannot answer this kind of query.
class UnsupportedBackend : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kassoc

#endif  // KASSOC_ERROR_HPP_
