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

#include "pcteq/rng.hpp"

#include <vector>

namespace pcteq {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

Rng Rng::stream(uint64_t master, uint64_t index) {
  uint64_t s = splitmix64(master ^ splitmix64(index + 0x632BE59BD9B4E019ULL));
  return Rng(s);
}

uint64_t Rng::uniform(uint64_t lo, uint64_t hi) {
  uint64_t span = hi - lo + 1;  // hi-lo < 2^64-1 in all our uses
  if (span == 0) return next();
  uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + r % span;
}

Integer Rng::random_bits(unsigned bits) {
  unsigned words = (bits + 63) / 64;
  std::vector<uint64_t> buf(words);
  for (auto& w : buf) w = next();
  unsigned excess = words * 64 - bits;
  if (excess) buf.back() >>= excess;
  Integer z;
  mpz_import(z.get_mpz_t(), words, -1 /*lsw first*/, sizeof(uint64_t), 0, 0, buf.data());
  return z;
}

Rational Rng::unit(unsigned bits) {
  Rational q(random_bits(bits), pow2(bits));
  q.canonicalize();
  return q;
}

bool Rng::bernoulli(const Rational& p, unsigned bits) {
  if (p <= 0) return false;
  if (p >= 1) return true;
  return unit(bits) < p;
}

}  // namespace pcteq
