/******************************************
 pcteq

 Copyright (c) 2026 The pcteq developers

 Permission is hereby granted, free of charge, to any person obtaining a copy
 of this software and associated documentation files (the "Software"), to deal
 in the Software without restriction, including without limitation the rights
 to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
 copies of the Software, and to permit persons to whom the Software is
 furnished to do so, subject to the following conditions:

 The above copyright notice and this permission notice shall be included in
 all copies or substantial portions of the Software.

 THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
 IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
 FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
 AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
 LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
 OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
 THE SOFTWARE.
***********************************************/

#include "doctest.h"
#include "pcteq/errors.hpp"
#include "pcteq/rational.hpp"
#include "pcteq/rng.hpp"

using namespace pcteq;

TEST_CASE("decimals parse to exact rationals, no floating point") {
  CHECK(rational_from_string("0.25") == Rational(1, 4));
  CHECK(rational_from_string(".5") == Rational(1, 2));
  CHECK(rational_from_string("0.1") == Rational(1, 10));
  CHECK(rational_from_string("-1.75") == Rational(-7, 4));
  CHECK(rational_from_string("2.") == Rational(2));
}

TEST_CASE("fractions and integers") {
  CHECK(rational_from_string("1/3") == Rational(1, 3));
  CHECK(rational_from_string("6/8") == Rational(3, 4));  // canonicalized
  CHECK(rational_from_string("7") == Rational(7));
  CHECK(rational_from_string("-2/4") == Rational(-1, 2));
}

TEST_CASE("malformed numbers are rejected") {
  CHECK_THROWS_AS(rational_from_string("1e5"), ParseError);
  CHECK_THROWS_AS(rational_from_string("1/0"), ParseError);
  CHECK_THROWS_AS(rational_from_string("abc"), ParseError);
  CHECK_THROWS_AS(rational_from_string(""), ParseError);
  CHECK_THROWS_AS(rational_from_string("1.2.3"), ParseError);
}

TEST_CASE("ceil") {
  CHECK(ceil_rational(Rational(7, 2)) == 4);
  CHECK(ceil_rational(Rational(-3, 2)) == -1);
  CHECK(ceil_rational(Rational(4, 2)) == 2);
}

TEST_CASE("rng determinism and ranges") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());

  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    uint64_t x = r.uniform(3, 9);
    CHECK(x >= 3);
    CHECK(x <= 9);
  }
  Rational u = r.unit(128);
  CHECK(u >= 0);
  CHECK(u < 1);

  // streams with different indices diverge
  Rng s0 = Rng::stream(1, 0), s1 = Rng::stream(1, 1);
  CHECK(s0.next() != s1.next());
}
