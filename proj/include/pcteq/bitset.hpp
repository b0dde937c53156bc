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

#include <bit>
#include <cstdint>
#include <vector>

namespace pcteq {

// Fixed-width bitset for variable sets; plain vector<uint64_t> under the hood.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(uint32_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  uint32_t size() const { return nbits_; }

  void set(uint32_t i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  bool test(uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  Bitset& operator|=(const Bitset& o) {
    for (size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }

  bool intersects(const Bitset& o) const {
    for (size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  uint32_t count() const {
    uint32_t c = 0;
    for (uint64_t w : words_) c += static_cast<uint32_t>(std::popcount(w));
    return c;
  }

  bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }

 private:
  uint32_t nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace pcteq
