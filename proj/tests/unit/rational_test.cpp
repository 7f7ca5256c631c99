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

#include "kassoc/rational.hpp"

#include <gtest/gtest.h>

#include "kassoc/error.hpp"

namespace kassoc {
namespace {

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3, 4));
  EXPECT_EQ(parse_rational("6/8"), Rational(3, 4));
  EXPECT_EQ(parse_rational("-2/6"), Rational(-1, 3));
  EXPECT_EQ(parse_rational("5"), Rational(5));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "a/2", "1/2/3", "1.5", " 1/2", "/3", "2/"}) {
    EXPECT_THROW(parse_rational(bad), InputError) << bad;
  }
}

TEST(Rational, CanonicalStringRoundTrips) {
  EXPECT_EQ(to_string(Rational(1, 4)), "1/4");
  EXPECT_EQ(to_string(Rational(2)), "2/1");
  EXPECT_EQ(to_string(Rational(-3, 9)), "-1/3");
  for (const Rational& r : {Rational(0), Rational(7, 13), Rational(-5, 2), Rational(1) / Rational(3) * 9}) {
    EXPECT_EQ(parse_rational(to_string(r)), r);
  }
}

TEST(Rational, LargeValuesStayExact) {
  Rational x(1);
  for (int i = 0; i < 200; ++i) x *= Rational(3, 2);
  for (int i = 0; i < 200; ++i) x /= Rational(3, 2);
  EXPECT_EQ(x, Rational(1));
  EXPECT_DOUBLE_EQ(to_double(Rational(1, 8)), 0.125);
}

}  // namespace
}  // namespace kassoc
