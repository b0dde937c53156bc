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
#include <vector>

#include "pcteq/circuit.hpp"

namespace pcteq {

/// Clause literals are signed variable indices (DIMACS convention).
struct Cnf {
  uint32_t n_vars = 0;
  std::vector<std::vector<int32_t>> clauses;
};

/// Direct clause-by-clause evaluation; deliberately independent of the
/// circuit machinery so it can serve as an oracle for it.
bool cnf_evaluate(const Cnf& f, const Assignment& sigma);

}  // namespace pcteq
