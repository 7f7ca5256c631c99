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

#ifndef KASSOC_RATIONAL_HPP_
#define KASSOC_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace kassoc {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Parses "num/den" or a bare integer "num". Throws InputError on anything
/// else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; integers are written with denominator 1 so that
/// the output always parses back to the identical value.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace kassoc

#endif  // KASSOC_RATIONAL_HPP_
