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

#include "pcteq/weights.hpp"

#include <algorithm>

#include "pcteq/errors.hpp"

namespace pcteq {

WeightFn::WeightFn(std::vector<Rational> weights) : w_(std::move(weights)) {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] <= 0 || w_[i] >= 1)
      throw DomainError("weight of variable " + std::to_string(i + 1) + " (" +
                        rational_to_string(w_[i]) + ") is outside the open interval (0,1)");
}

WeightFn WeightFn::uniform(uint32_t n_vars) {
  return WeightFn(std::vector<Rational>(n_vars, Rational(1, 2)));
}

WeightFn WeightFn::with(VarId v, const Rational& new_weight) const {
  std::vector<Rational> w = w_;
  if (v == 0 || v > w.size()) throw InputError("variable out of range");
  w[v - 1] = new_weight;
  return WeightFn(std::move(w));
}

Rational weight_of(const Assignment& sigma, const WeightFn& w) {
  if (sigma.size() != w.n_vars()) throw InputError("assignment length does not match weights");
  Rational prod(1);
  for (VarId v = 1; v <= w.n_vars(); ++v) prod *= sigma[v - 1] ? w.pos(v) : w.neg(v);
  return prod;
}

Rational DyadicWeightFn::value(VarId v) const {
  Rational q(numerators[v - 1], pow2(precision));
  q.canonicalize();
  return q;
}

WeightFn DyadicWeightFn::to_weight_fn() const {
  std::vector<Rational> w;
  w.reserve(numerators.size());
  for (VarId v = 1; v <= n_vars(); ++v) w.push_back(value(v));
  return WeightFn(std::move(w));
}

DyadicApprox dyadic_approx(const WeightFn& w, unsigned precision) {
  if (precision < 1) throw DomainError("dyadic precision must be >= 1");
  DyadicApprox out;
  out.weights.precision = precision;
  out.max_rel_error = 0;
  Integer scale = pow2(precision);
  for (VarId v = 1; v <= w.n_vars(); ++v) {
    const Rational& q = w.pos(v);
    // round(q * 2^p), ties up
    Integer d;
    Integer num2 = 2 * q.get_num() * scale + q.get_den();
    mpz_fdiv_q(d.get_mpz_t(), num2.get_mpz_t(), Integer(2 * q.get_den()).get_mpz_t());
    if (d < 1) d = 1;
    if (d > scale - 1) d = scale - 1;
    Rational approx(d, scale);
    approx.canonicalize();
    Rational rel = abs(q - approx) / q;
    if (rel > out.max_rel_error) out.max_rel_error = rel;
    out.weights.numerators.push_back(std::move(d));
  }
  return out;
}

DyadicWeightFn as_dyadic(const WeightFn& w, unsigned max_precision) {
  unsigned precision = 1;
  for (VarId v = 1; v <= w.n_vars(); ++v) {
    const Integer& den = w.pos(v).get_den();
    if (mpz_popcount(den.get_mpz_t()) != 1)
      throw DomainError("weight of variable " + std::to_string(v) +
                        " is not dyadic; apply dyadic_approx explicitly");
    auto e = mpz_scan1(den.get_mpz_t(), 0);
    if (e > max_precision)
      throw DomainError("weight of variable " + std::to_string(v) +
                        " needs more than " + std::to_string(max_precision) +
                        " bits; apply dyadic_approx explicitly");
    precision = std::max<unsigned>(precision, static_cast<unsigned>(e));
  }
  DyadicWeightFn out;
  out.precision = precision;
  for (VarId v = 1; v <= w.n_vars(); ++v) {
    auto e = mpz_scan1(w.pos(v).get_den().get_mpz_t(), 0);
    out.numerators.push_back(w.pos(v).get_num() * pow2(precision - static_cast<unsigned>(e)));
  }
  return out;
}

namespace {

// Single-occurrence chain over vars[0..q-1] with exactly d' models on those q
// variables, d' odd. MSB-first: bit 1 adds an Or level, bit 0 conjoins the
// negated variable.
NodeId emit_odd_chain(CircuitBuilder& b, const Integer& d_odd, const std::vector<VarId>& vars) {
  size_t q = vars.size();
  NodeId f = b.literal(vars[q - 1], true);  // LSB of an odd number is 1
  for (size_t k = q - 1; k-- > 0;) {
    bool bit = mpz_tstbit(d_odd.get_mpz_t(), static_cast<mp_bitcnt_t>(q - 1 - k)) != 0;
    f = bit ? b.disj({b.literal(vars[k], true), f}) : b.conj({b.literal(vars[k], false), f});
  }
  return f;
}

// Chain with exactly d models over the 2^p assignments to `vars`
// (|vars| = p). Trailing zero bits of d become unconstrained variables.
NodeId emit_chain(CircuitBuilder& b, const Integer& d, const std::vector<VarId>& vars) {
  unsigned p = static_cast<unsigned>(vars.size());
  if (d <= 0 || d >= pow2(p)) throw DomainError("chain model count out of range (0, 2^p)");
  auto t = static_cast<unsigned>(mpz_scan1(d.get_mpz_t(), 0));
  Integer d_odd = d >> t;
  std::vector<VarId> used(vars.begin(), vars.begin() + (p - t));
  return emit_odd_chain(b, d_odd, used);
}

}  // namespace

Circuit chain_formula(const Integer& d, unsigned p) {
  if (p < 1) throw DomainError("chain bit count must be >= 1");
  CircuitBuilder b(p);
  std::vector<VarId> vars(p);
  for (unsigned i = 0; i < p; ++i) vars[i] = i + 1;
  return b.finish(emit_chain(b, d, vars));
}

Circuit weighted_to_unweighted(const Circuit& c, const DyadicWeightFn& w) {
  if (w.n_vars() != c.n_vars()) throw InputError("weight function arity does not match circuit");
  const uint32_t n = c.n_vars();
  const unsigned p = w.precision;
  Circuit sc = check_smooth(c) ? c : smooth(c);

  CircuitBuilder b(n + n * p);
  Integer scale = pow2(p);
  auto block_vars = [&](VarId v) {
    std::vector<VarId> vars(p);
    for (unsigned i = 0; i < p; ++i) vars[i] = n + (v - 1) * p + i + 1;
    return vars;
  };

  std::vector<NodeId> remap(sc.node_count());
  for (NodeId id = 0; id < sc.node_count(); ++id) {
    const Node& node = sc.node(id);
    switch (node.kind) {
      case NodeKind::True: remap[id] = b.true_node(); break;
      case NodeKind::False: remap[id] = b.false_node(); break;
      case NodeKind::PosLit:
        remap[id] = b.conj({b.literal(node.var, true),
                            emit_chain(b, w.numerators[node.var - 1], block_vars(node.var))});
        break;
      case NodeKind::NegLit:
        remap[id] = b.conj({b.literal(node.var, false),
                            emit_chain(b, scale - w.numerators[node.var - 1],
                                       block_vars(node.var))});
        break;
      case NodeKind::And: {
        std::vector<NodeId> ch;
        ch.reserve(node.children.size());
        for (NodeId x : node.children) ch.push_back(remap[x]);
        remap[id] = b.conj(std::move(ch));
        break;
      }
      case NodeKind::Or: {
        std::vector<NodeId> ch;
        ch.reserve(node.children.size());
        for (NodeId x : node.children) ch.push_back(remap[x]);
        remap[id] = b.disj(std::move(ch), node.var);
        break;
      }
    }
  }
  return b.finish(remap[sc.root()]);
}

}  // namespace pcteq
