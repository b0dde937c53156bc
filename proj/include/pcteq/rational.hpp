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

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pcteq {

// All counts, weights and polynomial values are exact rationals; floats only
// appear in display code. mpq_class keeps values canonical (reduced, den > 0).
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "a", "a/b" or a plain decimal like "0.25" / ".5" / "-1.75" into an
/// exact rational. No floating point is involved; exponents are not accepted.
Rational rational_from_string(const std::string& text);

/// "num/den", or just "num" when den == 1.
std::string rational_to_string(const Rational& q);

double rational_to_double(const Rational& q);

/// Smallest integer >= q.
Integer ceil_rational(const Rational& q);

/// 2^k as an Integer, k >= 0.
Integer pow2(unsigned k);

}  // namespace pcteq
