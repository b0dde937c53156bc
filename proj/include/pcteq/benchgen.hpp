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

#include "pcteq/circuit.hpp"
#include "pcteq/cnf.hpp"
#include "pcteq/rng.hpp"
#include "pcteq/weights.hpp"

namespace pcteq {

/// Uniform random 3-CNF: each clause picks 3 distinct variables and uniform
/// signs; clauses duplicating an earlier clause are resampled. Pure function
/// of (n_vars, n_clauses, rng state).
Cnf random_3cnf(uint32_t n_vars, uint32_t n_clauses, Rng& rng);

/// Default clause/variable ratio for near-threshold but mostly satisfiable
/// instances; clause count = ceil(ratio * n).
inline constexpr double kDefaultClauseRatio = 4.1;
uint32_t default_clause_count(uint32_t n_vars);

/// Exhaustive DPLL compilation to decision-DNNF: unit propagation, then a
/// branch on the lowest-index variable occurring in the residual formula
/// yields Or(x and compile(f|x=1), ~x and compile(f|x=0)) with decision
/// variable x. Identical residual formulas are cached and shared, so the
/// output is a DAG. Decomposable and syntactically deterministic by
/// construction; models equal the CNF's.
Circuit compile_decision_dnnf(const Cnf& f, uint32_t guard = 24);

/// Weights drawn uniformly from {1, ..., 2^precision - 1} / 2^precision.
WeightFn random_weights(uint32_t n_vars, Rng& rng, unsigned precision = 8);

/// A weight-function pair differing at exactly one variable, with its exact
/// TV distance in closed form: dtv = w'(phi) * (wa(v)/wa(phi) - wb(v)/wb(phi))
/// where (wa, wb) orders the pair so wa gives v the larger weight and w' sets
/// v's weight to 1.
struct PerturbedPair {
  std::shared_ptr<const Circuit> circuit;
  WeightFn w1, w2;
  VarId var = 0;
  Rational dtv_closed_form;
};

PerturbedPair perturb_one_var(std::shared_ptr<const Circuit> circuit, const WeightFn& w1,
                              VarId v, const Rational& new_weight);

struct TvTarget {
  enum class Kind : uint8_t { Close, Far } kind;
  Rational bound;

  static TvTarget close(Rational eps) { return {Kind::Close, std::move(eps)}; }
  static TvTarget far(Rational eta) { return {Kind::Far, std::move(eta)}; }
};

/// Searches single-variable perturbations (bisection on the new weight, the
/// closed form as objective) until the achieved TV distance is <= eps or
/// >= eta as requested. Throws DomainError when no single-variable
/// perturbation can reach a far target.
PerturbedPair make_pair_with_target(std::shared_ptr<const Circuit> circuit, const WeightFn& w1,
                                    const TvTarget& target, Rng& rng);

/// Compiles random 3-CNFs from seeds master_seed, master_seed+1, ... until a
/// satisfiable one appears. Returns the instance plus the seed that produced
/// it and how many attempts were discarded.
struct GeneratedInstance {
  Cnf cnf;
  std::shared_ptr<const Circuit> circuit;
  uint64_t seed = 0;
  uint32_t discarded = 0;
};

GeneratedInstance generate_satisfiable_instance(uint32_t n_vars, uint32_t n_clauses,
                                                uint64_t master_seed,
                                                uint32_t max_attempts = 64);

}  // namespace pcteq
