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

#include <vector>

#include "pcteq/circuit.hpp"
#include "pcteq/rational.hpp"

namespace pcteq {

/// Literal weights: variable v gets weight w(v) in the open interval (0,1),
/// and the negative literal gets 1 - w(v). An assignment's weight is the
/// product of its literal weights, so weights over all 2^n assignments sum
/// to exactly 1.
class WeightFn {
 public:
  /// One weight per variable 1..n; each must lie strictly in (0,1).
  explicit WeightFn(std::vector<Rational> weights);
  static WeightFn uniform(uint32_t n_vars);

  uint32_t n_vars() const { return static_cast<uint32_t>(w_.size()); }
  const Rational& pos(VarId v) const { return w_[v - 1]; }
  Rational neg(VarId v) const { return 1 - w_[v - 1]; }

  /// Copy with variable v's weight replaced.
  WeightFn with(VarId v, const Rational& new_weight) const;

  bool operator==(const WeightFn& o) const { return w_ == o.w_; }

 private:
  std::vector<Rational> w_;
};

Rational weight_of(const Assignment& sigma, const WeightFn& w);

/// Weights d_v / 2^precision with integer 0 < d_v < 2^precision.
struct DyadicWeightFn {
  std::vector<Integer> numerators;  // index v-1
  unsigned precision = 1;

  uint32_t n_vars() const { return static_cast<uint32_t>(numerators.size()); }
  Rational value(VarId v) const;
  WeightFn to_weight_fn() const;
};

struct DyadicApprox {
  DyadicWeightFn weights;
  Rational max_rel_error;
};

/// Rounds each weight to the nearest d/2^precision (ties away from the lower
/// value), clamped to [1/2^p, 1 - 1/2^p]. Weights already on the grid are
/// unchanged.
DyadicApprox dyadic_approx(const WeightFn& w, unsigned precision = 16);

/// Exact conversion when every weight already has a power-of-two denominator
/// with exponent <= max_precision; throws DomainError otherwise. Explicit
/// approximation via dyadic_approx is required for anything else.
DyadicWeightFn as_dyadic(const WeightFn& w, unsigned max_precision = 64);

/// A formula over p fresh variables y_1..y_p with exactly d satisfying
/// assignments, 0 < d < 2^p. Every mentioned variable occurs exactly once,
/// so the result is trivially decomposable (for even d the powers of two are
/// realized by leaving low variables unconstrained).
Circuit chain_formula(const Integer& d, unsigned p);

/// Reduction from weighted to unweighted counting/sampling: returns a circuit
/// over n + n*p variables whose models, under the uniform distribution,
/// project onto the first n variables exactly as P(phi, w). Realized by
/// substituting each literal leaf x_v / ~x_v of the smoothed input with
/// And(x_v, C1_v) / And(~x_v, C0_v), where C1_v and C0_v are chain formulas
/// over variable block n + (v-1)*p + 1 .. n + v*p with d_v and 2^p - d_v
/// models respectively. Decomposability is preserved; the unweighted model
/// count equals w(phi) * 2^(n*p).
Circuit weighted_to_unweighted(const Circuit& c, const DyadicWeightFn& w);

}  // namespace pcteq
