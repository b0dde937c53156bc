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

#include "pcteq/benchgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <set>

#include "pcteq/engine.hpp"
#include "pcteq/errors.hpp"

namespace pcteq {

Cnf random_3cnf(uint32_t n_vars, uint32_t n_clauses, Rng& rng) {
  if (n_vars < 3) throw DomainError("random_3cnf requires at least 3 variables");
  // 8 * C(n,3) distinct clauses exist; refuse requests that cannot be met.
  unsigned long long distinct =
      (unsigned long long)n_vars * (n_vars - 1) * (n_vars - 2) / 6 * 8;
  if (n_clauses > distinct)
    throw DomainError("more clauses requested than distinct 3-clauses exist");

  Cnf f;
  f.n_vars = n_vars;
  std::set<std::vector<int32_t>> seen;
  while (f.clauses.size() < n_clauses) {
    uint32_t v1 = static_cast<uint32_t>(rng.uniform(1, n_vars));
    uint32_t v2, v3;
    do {
      v2 = static_cast<uint32_t>(rng.uniform(1, n_vars));
    } while (v2 == v1);
    do {
      v3 = static_cast<uint32_t>(rng.uniform(1, n_vars));
    } while (v3 == v1 || v3 == v2);
    std::vector<int32_t> clause;
    for (uint32_t v : {v1, v2, v3})
      clause.push_back((rng.next() & 1) ? static_cast<int32_t>(v) : -static_cast<int32_t>(v));
    std::sort(clause.begin(), clause.end(),
              [](int32_t a, int32_t b) { return std::abs(a) < std::abs(b); });
    if (!seen.insert(clause).second) continue;  // duplicate clause, resample
    f.clauses.push_back(std::move(clause));
  }
  return f;
}

uint32_t default_clause_count(uint32_t n_vars) {
  return static_cast<uint32_t>(std::ceil(kDefaultClauseRatio * n_vars));
}

// ------------------------------------------------------------- compiler

namespace {

using Clauses = std::vector<std::vector<int32_t>>;

// Sorted-by-variable literals per clause, sorted clause list, duplicates and
// tautological clauses removed.
Clauses canonicalize(Clauses cls) {
  Clauses out;
  out.reserve(cls.size());
  for (auto& clause : cls) {
    std::sort(clause.begin(), clause.end(), [](int32_t a, int32_t b) {
      return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b;
    });
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
    bool tautology = false;
    for (size_t i = 0; i + 1 < clause.size(); ++i)
      if (clause[i] == -clause[i + 1]) {
        tautology = true;
        break;
      }
    if (!tautology) out.push_back(std::move(clause));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Assigns `lit` true. Returns false on an empty-clause conflict.
bool assign(const Clauses& in, int32_t lit, Clauses& out) {
  out.clear();
  out.reserve(in.size());
  for (const auto& clause : in) {
    bool satisfied = false;
    for (int32_t l : clause)
      if (l == lit) {
        satisfied = true;
        break;
      }
    if (satisfied) continue;
    std::vector<int32_t> reduced;
    reduced.reserve(clause.size());
    for (int32_t l : clause)
      if (l != -lit) reduced.push_back(l);
    if (reduced.empty()) return false;
    out.push_back(std::move(reduced));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return true;
}

struct Compiler {
  CircuitBuilder& b;
  std::map<Clauses, NodeId> cache;

  NodeId run(const Clauses& residual) {
    auto hit = cache.find(residual);
    if (hit != cache.end()) return hit->second;

    // Unit propagation to a fixpoint.
    Clauses cls = residual;
    std::vector<NodeId> forced;
    bool conflict = false;
    for (;;) {
      int32_t unit = 0;
      for (const auto& clause : cls)
        if (clause.size() == 1) {
          unit = clause[0];
          break;
        }
      if (unit == 0) break;
      forced.push_back(b.literal(static_cast<VarId>(std::abs(unit)), unit > 0));
      Clauses next;
      if (!assign(cls, unit, next)) {
        conflict = true;
        break;
      }
      cls = std::move(next);
    }

    NodeId result;
    if (conflict) {
      result = b.false_node();
    } else if (cls.empty()) {
      result = b.conj(std::move(forced));  // true when nothing was forced
    } else {
      VarId branch = static_cast<VarId>(std::abs(cls[0][0]));
      for (const auto& clause : cls)
        branch = std::min(branch, static_cast<VarId>(std::abs(clause[0])));

      Clauses sub;
      NodeId hi = b.false_node(), lo = b.false_node();
      if (assign(cls, static_cast<int32_t>(branch), sub))
        hi = b.conj({b.literal(branch, true), run(sub)});
      if (assign(cls, -static_cast<int32_t>(branch), sub))
        lo = b.conj({b.literal(branch, false), run(sub)});
      forced.push_back(b.disj({hi, lo}, branch));
      result = b.conj(std::move(forced));
    }
    cache.emplace(residual, result);
    return result;
  }
};

}  // namespace

Circuit compile_decision_dnnf(const Cnf& f, uint32_t guard) {
  if (f.n_vars > guard)
    throw CapabilityError("exhaustive compilation limited to " + std::to_string(guard) +
                          " variables, formula has " + std::to_string(f.n_vars));
  for (const auto& clause : f.clauses)
    for (int32_t lit : clause)
      if (lit == 0 || static_cast<uint32_t>(std::abs(lit)) > f.n_vars)
        throw InputError("clause literal out of range");

  CircuitBuilder b(f.n_vars);
  Compiler compiler{b, {}};
  return b.finish(compiler.run(canonicalize(f.clauses)));
}

WeightFn random_weights(uint32_t n_vars, Rng& rng, unsigned precision) {
  if (precision < 1 || precision > 62)
    throw DomainError("weight precision must be between 1 and 62 bits");
  std::vector<Rational> w;
  w.reserve(n_vars);
  uint64_t hi = (uint64_t(1) << precision) - 1;
  for (uint32_t i = 0; i < n_vars; ++i) {
    Rational q(Integer(static_cast<unsigned long>(rng.uniform(1, hi))), pow2(precision));
    q.canonicalize();
    w.push_back(std::move(q));
  }
  return WeightFn(std::move(w));
}

// -------------------------------------------------------- perturbations

namespace {

// wmc(phi, w with v's weight t) is linear: t*A + (1-t)*B. A and B are the
// weighted counts with v's factor fixed to 1 (literal v forced true / false).
struct PerturbObjective {
  Rational a_part, b_part;  // A, B
  Rational base_weight;     // w1(v)

  // Exact TV distance between the pair (w1(v)=base, w2(v)=t), Appendix-style
  // closed form with the roles ordered so the result is nonnegative.
  Rational dtv(const Rational& t) const {
    const Rational& hi = base_weight > t ? base_weight : t;
    const Rational& lo = base_weight > t ? t : base_weight;
    Rational wmc_hi = hi * a_part + (1 - hi) * b_part;
    Rational wmc_lo = lo * a_part + (1 - lo) * b_part;
    return a_part * (hi / wmc_hi - lo / wmc_lo);
  }
};

PerturbObjective make_objective(const AnnotatedPc& pc, VarId v) {
  PerturbObjective obj;
  obj.base_weight = pc.weights().pos(v);
  obj.a_part = pc.wmc_with_var_fixed_true(v);
  obj.b_part = (pc.wmc() - obj.base_weight * obj.a_part) / (1 - obj.base_weight);
  return obj;
}

}  // namespace

PerturbedPair perturb_one_var(std::shared_ptr<const Circuit> circuit, const WeightFn& w1,
                              VarId v, const Rational& new_weight) {
  if (!circuit) throw InputError("perturb_one_var requires a circuit");
  if (v == 0 || v > circuit->n_vars()) throw InputError("variable out of range");
  if (new_weight <= 0 || new_weight >= 1)
    throw DomainError("perturbed weight must lie in the open interval (0,1)");
  if (new_weight == w1.pos(v))
    throw DomainError("perturbed weight must differ from the current weight");

  AnnotatedPc pc(*circuit, w1);
  if (!pc.satisfiable()) throw InputError("perturb_one_var requires a satisfiable circuit");

  Rational dtv = make_objective(pc, v).dtv(new_weight);
  return PerturbedPair{std::move(circuit), w1, w1.with(v, new_weight), v, std::move(dtv)};
}

PerturbedPair make_pair_with_target(std::shared_ptr<const Circuit> circuit, const WeightFn& w1,
                                    const TvTarget& target, Rng& rng) {
  if (!circuit) throw InputError("make_pair_with_target requires a circuit");
  AnnotatedPc pc(*circuit, w1);
  if (!pc.satisfiable())
    throw InputError("make_pair_with_target requires a satisfiable circuit");
  const uint32_t n = circuit->n_vars();
  const Rational t_min(1, 1 << 20);
  const Rational t_max = 1 - t_min;

  if (target.kind == TvTarget::Kind::Close) {
    // dtv -> 0 as the new weight approaches the old one, so any variable
    // conforms; prefer one whose perturbation actually moves the
    // distribution so the pair is close but not equivalent.
    VarId v = static_cast<VarId>(rng.uniform(1, n));
    for (VarId probe = 1; probe <= n; ++probe) {
      VarId cand = static_cast<VarId>((v + probe - 2) % n + 1);
      PerturbObjective o = make_objective(pc, cand);
      if (o.dtv(t_min) > 0 || o.dtv(t_max) > 0) {
        v = cand;
        break;
      }
    }
    PerturbObjective obj = make_objective(pc, v);
    Rational t = obj.base_weight > Rational(1, 2) ? t_min : t_max;
    for (int iter = 0; iter < 256 && obj.dtv(t) > target.bound; ++iter)
      t = (t + obj.base_weight) / 2;
    if (obj.dtv(t) > target.bound)
      throw DomainError("could not reach the requested closeness target");
    return perturb_one_var(std::move(circuit), w1, v, t);
  }

  // Far target: find the variable and direction with the largest swing.
  VarId best_var = 0;
  Rational best_t, best_dtv(-1);
  for (VarId v = 1; v <= n; ++v) {
    PerturbObjective obj = make_objective(pc, v);
    for (const Rational& t : {t_min, t_max}) {
      Rational d = obj.dtv(t);
      if (d > best_dtv) {
        best_dtv = d;
        best_var = v;
        best_t = t;
      }
    }
  }
  if (best_dtv < target.bound)
    throw DomainError("no single-variable perturbation reaches TV distance " +
                      rational_to_string(target.bound) + " (best achievable " +
                      rational_to_string(best_dtv) + ")");

  // Bisect toward the original weight, keeping dtv >= the bound, to avoid
  // returning a needlessly extreme pair.
  PerturbObjective obj = make_objective(pc, best_var);
  Rational good = best_t;
  Rational bad = obj.base_weight;
  for (int iter = 0; iter < 64; ++iter) {
    Rational mid = (good + bad) / 2;
    if (obj.dtv(mid) >= target.bound)
      good = mid;
    else
      bad = mid;
  }
  return perturb_one_var(std::move(circuit), w1, best_var, good);
}

GeneratedInstance generate_satisfiable_instance(uint32_t n_vars, uint32_t n_clauses,
                                                uint64_t master_seed, uint32_t max_attempts) {
  for (uint32_t k = 0; k < max_attempts; ++k) {
    uint64_t seed = master_seed + k;
    Rng rng(seed);
    Cnf cnf = random_3cnf(n_vars, n_clauses, rng);
    Circuit c = compile_decision_dnnf(cnf);
    if (c.node(c.root()).kind != NodeKind::False) {
      GeneratedInstance out;
      out.cnf = std::move(cnf);
      out.circuit = std::make_shared<Circuit>(std::move(c));
      out.seed = seed;
      out.discarded = k;
      return out;
    }
  }
  throw Error("no satisfiable instance found in " + std::to_string(max_attempts) +
              " attempts (n=" + std::to_string(n_vars) +
              ", m=" + std::to_string(n_clauses) + ")");
}

}  // namespace pcteq
