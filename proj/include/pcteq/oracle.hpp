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

#include <map>
#include <vector>

#include "pcteq/circuit.hpp"
#include "pcteq/cnf.hpp"
#include "pcteq/rational.hpp"
#include "pcteq/weights.hpp"

namespace pcteq {

// Brute-force ground truth over the full assignment space. Everything here
// is deliberately straightforward (enumerate, multiply, add) and independent
// of the engine's annotated recursions, so the two can check each other.
// All operations are guarded to n <= guard variables (default 24).

inline constexpr uint32_t kDefaultEnumerationGuard = 24;

/// Exact pmf over the satisfying assignments; values sum to exactly 1.
struct ExactPmf {
  uint32_t n_vars = 0;
  std::map<Assignment, Rational> probs;

  /// 0 for assignments outside the support.
  Rational at(const Assignment& sigma) const;
};

/// All satisfying assignments in lexicographic order (variable 1 most
/// significant).
std::vector<Assignment> enumerate_models(const Circuit& c,
                                         uint32_t guard = kDefaultEnumerationGuard);

/// Clause-by-clause CNF enumeration; independent of the circuit machinery.
std::vector<Assignment> cnf_enumerate(const Cnf& f,
                                      uint32_t guard = kDefaultEnumerationGuard);

ExactPmf exact_pmf(const Circuit& c, const WeightFn& w,
                   uint32_t guard = kDefaultEnumerationGuard);

/// Exact total variation distance (1/2) sum_sigma |P1(sigma) - P2(sigma)|.
Rational tv_exact(const Circuit& c1, const WeightFn& w1, const Circuit& c2, const WeightFn& w2,
                  uint32_t guard = kDefaultEnumerationGuard);

/// L1 distance between the empirical distribution of `samples` and `pmf`,
/// exact (sample frequencies are rationals).
Rational empirical_l1(const std::vector<Assignment>& samples, const ExactPmf& pmf);

}  // namespace pcteq
