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

#include "kassoc/node_set.hpp"

#include <algorithm>

namespace kassoc {

bool size_lex_less(NodeSet a, NodeSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const auto av = a.to_vector();
  const auto bv = b.to_vector();
  return std::lexicographical_compare(av.begin(), av.end(), bv.begin(), bv.end());
}

}  // namespace kassoc
