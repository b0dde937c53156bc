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

#include "pcteq/engine.hpp"

#include <cassert>

#include "pcteq/errors.hpp"

namespace pcteq {

OracleParams::OracleParams(Rational a, Rational b) : alpha(std::move(a)), beta(std::move(b)) {
  if (alpha < 0) throw DomainError("oracle tolerance alpha must be >= 0");
  if (beta < 0 || beta >= 1) throw DomainError("oracle confidence beta must be in [0,1)");
}

namespace {

void require_structure(const Circuit& c, uint32_t semantic_limit) {
  if (!check_decomposable(c)) throw StructuralError("circuit is not decomposable");
  if (check_deterministic(c, DetMode::Syntactic)) return;
  if (c.n_vars() > semantic_limit)
    throw StructuralError(
        "circuit is not in decision form and is too large for the semantic "
        "determinism check (n = " + std::to_string(c.n_vars()) + ")");
  if (!check_deterministic(c, DetMode::Semantic, semantic_limit))
    throw StructuralError("circuit is not deterministic");
}

}  // namespace

AnnotatedPc::AnnotatedPc(Circuit circuit, WeightFn weights, uint32_t semantic_limit)
    : original_(std::move(circuit)), w_(std::move(weights)) {
  if (w_.n_vars() != original_.n_vars())
    throw InputError("weight function arity does not match circuit");
  require_structure(original_, semantic_limit);
  smoothed_ = check_smooth(original_) ? original_ : smooth(original_);

  node_wmc_.reserve(smoothed_.node_count());
  for (NodeId id = 0; id < smoothed_.node_count(); ++id) {
    const Node& n = smoothed_.node(id);
    switch (n.kind) {
      case NodeKind::True: node_wmc_.emplace_back(1); break;
      case NodeKind::False: node_wmc_.emplace_back(0); break;
      case NodeKind::PosLit: node_wmc_.push_back(w_.pos(n.var)); break;
      case NodeKind::NegLit: node_wmc_.push_back(w_.neg(n.var)); break;
      case NodeKind::And: {
        Rational prod(1);
        for (NodeId ch : n.children) prod *= node_wmc_[ch];
        node_wmc_.push_back(std::move(prod));
        break;
      }
      case NodeKind::Or: {
        Rational sum(0);
        for (NodeId ch : n.children) sum += node_wmc_[ch];
        node_wmc_.push_back(std::move(sum));
        break;
      }
    }
  }
}

Assignment AnnotatedPc::sample(Rng& rng, unsigned bits) const {
  if (!satisfiable()) throw StructuralError("cannot sample from an unsatisfiable circuit");
  Assignment sigma(n_vars(), 0);
  std::vector<uint8_t> assigned(n_vars(), 0);

  std::vector<NodeId> stack{smoothed_.root()};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    const Node& n = smoothed_.node(id);
    switch (n.kind) {
      case NodeKind::True: break;
      case NodeKind::False: throw StructuralError("reached false node while sampling");
      case NodeKind::PosLit:
        sigma[n.var - 1] = 1;
        assigned[n.var - 1] = 1;
        break;
      case NodeKind::NegLit:
        sigma[n.var - 1] = 0;
        assigned[n.var - 1] = 1;
        break;
      case NodeKind::And:
        for (NodeId ch : n.children) stack.push_back(ch);
        break;
      case NodeKind::Or: {
        // Pick child ch with probability wmc(ch)/wmc(node): first child whose
        // cumulative mass exceeds U * wmc(node), U a dyadic uniform.
        Rational target = rng.unit(bits) * node_wmc_[id];
        Rational cum(0);
        NodeId chosen = n.children.back();
        for (NodeId ch : n.children) {
          cum += node_wmc_[ch];
          if (target < cum) {
            chosen = ch;
            break;
          }
        }
        stack.push_back(chosen);
        break;
      }
    }
  }
  for (uint32_t i = 0; i < n_vars(); ++i) assert(assigned[i] && "smooth circuit mentions all vars");
  return sigma;
}

Rational AnnotatedPc::netpoly(const IntAssignment& theta) const {
  if (theta.size() != n_vars()) throw InputError("theta length does not match n_vars");
  if (!satisfiable())
    throw StructuralError("network polynomial undefined for unsatisfiable circuit (w(phi) = 0)");

  std::vector<Rational> val;
  val.reserve(smoothed_.node_count());
  for (NodeId id = 0; id < smoothed_.node_count(); ++id) {
    const Node& n = smoothed_.node(id);
    switch (n.kind) {
      case NodeKind::True: val.emplace_back(1); break;
      case NodeKind::False: val.emplace_back(0); break;
      case NodeKind::PosLit: {
        Rational t(Integer(static_cast<unsigned long>(theta[n.var - 1])));
        val.push_back(w_.pos(n.var) * t);
        break;
      }
      case NodeKind::NegLit: {
        Rational t(Integer(static_cast<unsigned long>(theta[n.var - 1])));
        val.push_back(w_.neg(n.var) * (1 - t));
        break;
      }
      case NodeKind::And: {
        Rational prod(1);
        for (NodeId ch : n.children) prod *= val[ch];
        val.push_back(std::move(prod));
        break;
      }
      case NodeKind::Or: {
        Rational sum(0);
        for (NodeId ch : n.children) sum += val[ch];
        val.push_back(std::move(sum));
        break;
      }
    }
  }
  return val[smoothed_.root()] / wmc();
}

Rational AnnotatedPc::wmc_with_var_fixed_true(VarId v) const {
  if (v == 0 || v > n_vars()) throw InputError("variable out of range");
  std::vector<Rational> val;
  val.reserve(smoothed_.node_count());
  for (NodeId id = 0; id < smoothed_.node_count(); ++id) {
    const Node& n = smoothed_.node(id);
    switch (n.kind) {
      case NodeKind::True: val.emplace_back(1); break;
      case NodeKind::False: val.emplace_back(0); break;
      case NodeKind::PosLit: val.push_back(n.var == v ? Rational(1) : w_.pos(n.var)); break;
      case NodeKind::NegLit: val.push_back(n.var == v ? Rational(0) : w_.neg(n.var)); break;
      case NodeKind::And: {
        Rational prod(1);
        for (NodeId ch : n.children) prod *= val[ch];
        val.push_back(std::move(prod));
        break;
      }
      case NodeKind::Or: {
        Rational sum(0);
        for (NodeId ch : n.children) sum += val[ch];
        val.push_back(std::move(sum));
        break;
      }
    }
  }
  return val[smoothed_.root()];
}

Rational wmc_exact(const Circuit& c, const WeightFn& w) {
  return AnnotatedPc(c, w).wmc();
}

Assignment sample(const Circuit& c, const WeightFn& w, Rng& rng) {
  return AnnotatedPc(c, w).sample(rng);
}

Rational netpoly_eval(const Circuit& c, const WeightFn& w, const IntAssignment& theta) {
  return AnnotatedPc(c, w).netpoly(theta);
}

// ------------------------------------------------------------- oracles

Rational ExactCountingOracle::count(const AnnotatedPc& pc, const OracleParams&, Rng&) const {
  return pc.wmc();
}

SampleOutcome ExactSamplingOracle::draw(const AnnotatedPc& pc, const OracleParams&,
                                        Rng& rng) const {
  return SampleOutcome{pc.sample(rng)};
}

Rational NoisyCountingOracle::count(const AnnotatedPc& pc, const OracleParams& p,
                                    Rng& rng) const {
  Rational lo = 1 / (1 + p.alpha);
  Rational hi = 1 + p.alpha;
  Rational factor;
  if (p.beta > 0 && rng.bernoulli(p.beta)) {
    // Deliberately out of range, either side.
    factor = (rng.next() & 1) ? hi * Rational(9, 8) : lo * Rational(8, 9);
  } else {
    factor = lo + rng.unit(64) * (hi - lo);
  }
  return pc.wmc() * factor;
}

SampleOutcome NoisySamplingOracle::draw(const AnnotatedPc& pc, const OracleParams& p,
                                        Rng& rng) const {
  if (p.beta > 0 && rng.bernoulli(p.beta)) return SampleOutcome::bottom();
  if (p.alpha == 0) return SampleOutcome{pc.sample(rng)};

  std::shared_ptr<const AnnotatedPc> tilted;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (const auto& [key, value] : cache_)
      if (key.first == &pc && key.second == p.alpha) {
        tilted = value;
        break;
      }
    if (!tilted) {
      // Retilt variable 1: v = w(1+a) / (w(1+a) + 1 - w). The resulting pmf Q
      // satisfies Q/P = g/Z with g in {1, 1+a} and Z in (1, 1+a), so the
      // pointwise ratio stays within [1/(1+a), 1+a].
      const Rational& wv = pc.weights().pos(1);
      Rational scaled = wv * (1 + p.alpha);
      Rational v = scaled / (scaled + 1 - wv);
      tilted = std::make_shared<AnnotatedPc>(pc.circuit(), pc.weights().with(1, v));
      cache_.push_back({{&pc, p.alpha}, tilted});
    }
  }
  return SampleOutcome{tilted->sample(rng)};
}

Rational awct(const AnnotatedPc& pc, const OracleParams& p, Rng& rng, bool noise) {
  if (!noise) return ExactCountingOracle{}.count(pc, p, rng);
  return NoisyCountingOracle{}.count(pc, p, rng);
}

SampleOutcome samp(const AnnotatedPc& pc, const OracleParams& p, Rng& rng, bool noise) {
  if (!noise) return ExactSamplingOracle{}.draw(pc, p, rng);
  return NoisySamplingOracle{}.draw(pc, p, rng);
}

}  // namespace pcteq
