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

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "pcteq/circuit.hpp"
#include "pcteq/rng.hpp"
#include "pcteq/weights.hpp"

namespace pcteq {

/// Tolerance/confidence contract for approximate counting and sampling.
struct OracleParams {
  Rational alpha;  // > 0 (0 accepted; degenerates to exact)
  Rational beta;   // in (0,1); 0 accepted, meaning no failures allowed

  OracleParams(Rational a, Rational b);
};

/// Evaluation point with integer coordinates; index i holds theta(x_{i+1}).
/// Drawn from [1..m]^n by the equivalence test, but any nonnegative values
/// are legal evaluation points (0/1 recovers the pmf).
using IntAssignment = std::vector<uint64_t>;

/// Either a sampled satisfying assignment or the failure symbol.
struct SampleOutcome {
  std::optional<Assignment> assignment;
  bool is_bottom() const { return !assignment.has_value(); }
  static SampleOutcome bottom() { return {}; }
};

/// A (circuit, weight function) pair with its per-node weighted-count
/// annotation computed once and cached. Construction verifies the structural
/// preconditions (decomposable; deterministic syntactically or, for
/// n <= semantic_limit, by exhaustive check) and smooths the circuit if
/// needed. Read-only afterwards and safe to share across threads.
class AnnotatedPc {
 public:
  AnnotatedPc(Circuit circuit, WeightFn weights, uint32_t semantic_limit = 20);

  const Circuit& circuit() const { return original_; }
  const Circuit& smoothed() const { return smoothed_; }
  const WeightFn& weights() const { return w_; }
  uint32_t n_vars() const { return original_.n_vars(); }

  /// w(phi); 0 for an unsatisfiable circuit.
  const Rational& wmc() const { return node_wmc_[smoothed_.root()]; }
  bool satisfiable() const { return wmc() != 0; }

  Rational weight_of(const Assignment& sigma) const { return pcteq::weight_of(sigma, w_); }

  /// Draws sigma with probability w(sigma)/w(phi). Or-children are chosen by
  /// exact rational cumulative comparison against a dyadic uniform draw of
  /// `bits` bits, so the per-draw bias is at most 2^-bits. Throws on an
  /// unsatisfiable circuit.
  Assignment sample(Rng& rng, unsigned bits = 128) const;

  /// Network polynomial at theta: sums at Or, products at And, leaf values
  /// w(x)theta(x) and (1-w(x))(1-theta(x)), normalized by w(phi). Exact; one
  /// bottom-up pass. Throws on an unsatisfiable circuit.
  Rational netpoly(const IntAssignment& theta) const;

  /// w'(phi) where w' is w with variable v's weight set to 1 (the weighted
  /// count of models containing the positive literal, with v's factor
  /// removed). Used by the perturbation closed form.
  Rational wmc_with_var_fixed_true(VarId v) const;

  /// Per-node weighted counts on the smoothed circuit (root entry = wmc()).
  const std::vector<Rational>& node_wmc() const { return node_wmc_; }

 private:
  Circuit original_;
  Circuit smoothed_;
  WeightFn w_;
  std::vector<Rational> node_wmc_;  // indexed by smoothed_ node ids
};

// Free-function spec surface. wmc_exact verifies structure and auto-smooths
// on every call; prefer AnnotatedPc when issuing many queries per pair.
Rational wmc_exact(const Circuit& c, const WeightFn& w);
Assignment sample(const Circuit& c, const WeightFn& w, Rng& rng);
Rational netpoly_eval(const Circuit& c, const WeightFn& w, const IntAssignment& theta);

/// Approximate-counter contract (the exact count conforms to any (alpha,
/// beta)). Implementations must guarantee
///   Pr[w(phi)/(1+alpha) <= count <= (1+alpha) w(phi)] >= 1 - beta.
struct CountingOracle {
  virtual ~CountingOracle() = default;
  virtual Rational count(const AnnotatedPc& pc, const OracleParams& p, Rng& rng) const = 0;
};

/// Approximate-sampler contract: returns bottom with probability < beta,
/// otherwise draws from a pmf whose pointwise ratio to P(phi,w) lies in
/// [1/(1+alpha), 1+alpha].
struct SamplingOracle {
  virtual ~SamplingOracle() = default;
  virtual SampleOutcome draw(const AnnotatedPc& pc, const OracleParams& p, Rng& rng) const = 0;
};

struct ExactCountingOracle final : CountingOracle {
  Rational count(const AnnotatedPc& pc, const OracleParams&, Rng&) const override;
};

struct ExactSamplingOracle final : SamplingOracle {
  SampleOutcome draw(const AnnotatedPc& pc, const OracleParams&, Rng& rng) const override;
};

/// Test harness counter that exercises the contract boundary: multiplies the
/// exact count by a uniform dyadic factor in [1/(1+alpha), 1+alpha] and, with
/// probability exactly beta, by an out-of-range factor.
struct NoisyCountingOracle final : CountingOracle {
  Rational count(const AnnotatedPc& pc, const OracleParams& p, Rng& rng) const override;
};

/// Test harness sampler: returns bottom with probability exactly beta;
/// otherwise draws from the PC distribution with variable 1's weight tilted
/// by (1+alpha), whose pointwise ratio to P(phi,w) stays inside
/// [1/(1+alpha), 1+alpha]. Perturbed annotations are cached per (pc, alpha).
class NoisySamplingOracle final : public SamplingOracle {
 public:
  SampleOutcome draw(const AnnotatedPc& pc, const OracleParams& p, Rng& rng) const override;

 private:
  mutable std::mutex mu_;
  mutable std::vector<std::pair<std::pair<const AnnotatedPc*, Rational>,
                                std::shared_ptr<const AnnotatedPc>>> cache_;
};

Rational awct(const AnnotatedPc& pc, const OracleParams& p, Rng& rng, bool noise = false);
SampleOutcome samp(const AnnotatedPc& pc, const OracleParams& p, Rng& rng, bool noise = false);

}  // namespace pcteq
