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

#include <cstdint>
#include <random>

#include "pcteq/rational.hpp"

namespace pcteq {

/// Seeded random source. All draws go through our own helpers (rejection
/// sampling, dyadic rationals) so results are bit-identical across platforms
/// and standard-library implementations for a fixed seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  /// Independent stream derived from (master, index) by counter-mode mixing.
  /// stream(s, i) and stream(s, j) are uncorrelated for i != j; used to make
  /// per-iteration draws independent of thread scheduling.
  static Rng stream(uint64_t master, uint64_t index);

  uint64_t next() { return eng_(); }

  /// Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  uint64_t uniform(uint64_t lo, uint64_t hi);

  /// Uniform integer in [0, 2^bits).
  Integer random_bits(unsigned bits);

  /// Uniform dyadic rational Z/2^bits in [0, 1).
  Rational unit(unsigned bits = 128);

  /// True with probability p up to a dyadic grid error of 2^-bits.
  bool bernoulli(const Rational& p, unsigned bits = 128);

 private:
  std::mt19937_64 eng_;
};

}  // namespace pcteq
