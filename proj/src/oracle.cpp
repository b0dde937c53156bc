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

#include "pcteq/oracle.hpp"

#include <bit>
#include <functional>

#include "pcteq/errors.hpp"

namespace pcteq {

namespace {

void check_guard(uint32_t n, uint32_t guard) {
  if (n > guard)
    throw CapabilityError("enumeration over " + std::to_string(n) +
                          " variables exceeds the guard of " + std::to_string(guard) +
                          " (pass a larger guard to override)");
}

Assignment unpack(uint64_t idx, uint32_t n) {
  Assignment sigma(n);
  for (uint32_t v = 1; v <= n; ++v) sigma[v - 1] = (idx >> (n - v)) & 1;
  return sigma;
}

// Reusable per-assignment circuit evaluator (plain bottom-up pass, one byte
// per node; the scratch buffer avoids reallocating for every assignment).
struct Evaluator {
  const Circuit& c;
  std::vector<uint8_t> val;
  explicit Evaluator(const Circuit& circuit) : c(circuit), val(circuit.node_count()) {}

  bool operator()(const Assignment& sigma) {
    for (NodeId id = 0; id < c.node_count(); ++id) {
      const Node& n = c.node(id);
      switch (n.kind) {
        case NodeKind::True: val[id] = 1; break;
        case NodeKind::False: val[id] = 0; break;
        case NodeKind::PosLit: val[id] = sigma[n.var - 1]; break;
        case NodeKind::NegLit: val[id] = sigma[n.var - 1] ? 0 : 1; break;
        case NodeKind::And: {
          uint8_t x = 1;
          for (NodeId ch : n.children) x &= val[ch];
          val[id] = x;
          break;
        }
        case NodeKind::Or: {
          uint8_t x = 0;
          for (NodeId ch : n.children) x |= val[ch];
          val[id] = x;
          break;
        }
      }
    }
    return val[c.root()] != 0;
  }
};

constexpr uint64_t kLitMask[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

size_t table_words(uint32_t n) { return n >= 6 ? (size_t(1) << (n - 6)) : 1; }

void mask_tail(std::vector<uint64_t>& w, uint32_t n) {
  if (n < 6) w[0] &= (uint64_t(1) << (uint64_t(1) << n)) - 1;
}

// Truth table of the root over all 2^n assignments; bit index = assignment
// index with variable 1 most significant. Intermediate tables are freed as
// soon as their last parent has consumed them.
std::vector<uint64_t> root_table(const Circuit& c) {
  const uint32_t n = c.n_vars();
  const size_t words = table_words(n);
  std::vector<std::vector<uint64_t>> tables(c.node_count());
  std::vector<uint32_t> uses(c.node_count(), 0);
  for (NodeId id = 0; id < c.node_count(); ++id)
    for (NodeId ch : c.node(id).children) ++uses[ch];
  uses[c.root()] += 1;  // keep the root alive

  for (NodeId id = 0; id < c.node_count(); ++id) {
    const Node& node = c.node(id);
    std::vector<uint64_t> t;
    switch (node.kind) {
      case NodeKind::True:
        t.assign(words, ~uint64_t(0));
        mask_tail(t, n);
        break;
      case NodeKind::False: t.assign(words, 0); break;
      case NodeKind::PosLit:
      case NodeKind::NegLit: {
        t.resize(words);
        uint32_t shift = n - node.var;
        if (shift < 6) {
          std::fill(t.begin(), t.end(), kLitMask[shift]);
        } else {
          for (size_t k = 0; k < words; ++k)
            t[k] = ((k >> (shift - 6)) & 1) ? ~uint64_t(0) : 0;
        }
        if (node.kind == NodeKind::NegLit)
          for (auto& x : t) x = ~x;
        mask_tail(t, n);
        break;
      }
      case NodeKind::And:
        t.assign(words, ~uint64_t(0));
        mask_tail(t, n);
        for (NodeId ch : node.children)
          for (size_t k = 0; k < words; ++k) t[k] &= tables[ch][k];
        break;
      case NodeKind::Or:
        t.assign(words, 0);
        for (NodeId ch : node.children)
          for (size_t k = 0; k < words; ++k) t[k] |= tables[ch][k];
        break;
    }
    for (NodeId ch : node.children)
      if (--uses[ch] == 0) {
        tables[ch].clear();
        tables[ch].shrink_to_fit();
      }
    tables[id] = std::move(t);
  }
  return std::move(tables[c.root()]);
}

bool table_bit(const std::vector<uint64_t>& t, uint64_t idx) {
  return (t[idx >> 6] >> (idx & 63)) & 1;
}

bool table_any(const std::vector<uint64_t>& t) {
  for (uint64_t w : t)
    if (w) return true;
  return false;
}

// Depth-first walk over all assignments in lexicographic order, maintaining
// the running literal-weight product for each weight function. `leaf` gets
// the assignment index and one exact weight per weight function.
void weight_walk(uint32_t n, const std::vector<const WeightFn*>& ws,
                 const std::function<void(uint64_t, const std::vector<Rational>&)>& leaf) {
  size_t k = ws.size();
  // prods[d] holds the partial products after assigning variables 1..d.
  std::vector<std::vector<Rational>> prods(n + 1, std::vector<Rational>(k, Rational(1)));
  std::vector<Rational> scratch(k);

  std::function<void(uint32_t, uint64_t)> rec = [&](uint32_t depth, uint64_t idx) {
    if (depth == n) {
      leaf(idx, prods[n]);
      return;
    }
    VarId v = depth + 1;
    for (int bit = 0; bit <= 1; ++bit) {
      for (size_t i = 0; i < k; ++i)
        prods[depth + 1][i] = prods[depth][i] * (bit ? ws[i]->pos(v) : ws[i]->neg(v));
      rec(depth + 1, (idx << 1) | static_cast<uint64_t>(bit));
    }
  };
  rec(0, 0);
}

}  // namespace

Rational ExactPmf::at(const Assignment& sigma) const {
  auto it = probs.find(sigma);
  return it == probs.end() ? Rational(0) : it->second;
}

std::vector<Assignment> enumerate_models(const Circuit& c, uint32_t guard) {
  check_guard(c.n_vars(), guard);
  std::vector<Assignment> models;
  Evaluator eval(c);
  const uint64_t total = uint64_t(1) << c.n_vars();
  for (uint64_t idx = 0; idx < total; ++idx) {
    Assignment sigma = unpack(idx, c.n_vars());
    if (eval(sigma)) models.push_back(std::move(sigma));
  }
  return models;
}

std::vector<Assignment> cnf_enumerate(const Cnf& f, uint32_t guard) {
  check_guard(f.n_vars, guard);
  std::vector<Assignment> models;
  const uint64_t total = uint64_t(1) << f.n_vars;
  for (uint64_t idx = 0; idx < total; ++idx) {
    Assignment sigma = unpack(idx, f.n_vars);
    if (cnf_evaluate(f, sigma)) models.push_back(std::move(sigma));
  }
  return models;
}

ExactPmf exact_pmf(const Circuit& c, const WeightFn& w, uint32_t guard) {
  check_guard(c.n_vars(), guard);
  if (w.n_vars() != c.n_vars()) throw InputError("weight function arity does not match circuit");
  auto table = root_table(c);
  if (!table_any(table)) throw InputError("exact_pmf requires a satisfiable circuit");

  ExactPmf pmf;
  pmf.n_vars = c.n_vars();
  Rational total(0);
  weight_walk(c.n_vars(), {&w}, [&](uint64_t idx, const std::vector<Rational>& prod) {
    if (table_bit(table, idx)) {
      pmf.probs.emplace(unpack(idx, c.n_vars()), prod[0]);
      total += prod[0];
    }
  });
  for (auto& [sigma, p] : pmf.probs) p /= total;
  return pmf;
}

Rational tv_exact(const Circuit& c1, const WeightFn& w1, const Circuit& c2, const WeightFn& w2,
                  uint32_t guard) {
  if (c1.n_vars() != c2.n_vars())
    throw InputError("tv_exact requires circuits over the same variable set");
  check_guard(c1.n_vars(), guard);
  if (w1.n_vars() != c1.n_vars() || w2.n_vars() != c2.n_vars())
    throw InputError("weight function arity does not match circuit");

  auto t1 = root_table(c1);
  auto t2 = root_table(c2);
  if (!table_any(t1) || !table_any(t2))
    throw InputError("tv_exact requires satisfiable circuits");

  Rational total1(0), total2(0);
  weight_walk(c1.n_vars(), {&w1, &w2}, [&](uint64_t idx, const std::vector<Rational>& prod) {
    if (table_bit(t1, idx)) total1 += prod[0];
    if (table_bit(t2, idx)) total2 += prod[1];
  });

  Rational sum(0);
  weight_walk(c1.n_vars(), {&w1, &w2}, [&](uint64_t idx, const std::vector<Rational>& prod) {
    bool b1 = table_bit(t1, idx), b2 = table_bit(t2, idx);
    if (!b1 && !b2) return;
    Rational p1 = b1 ? prod[0] / total1 : Rational(0);
    Rational p2 = b2 ? prod[1] / total2 : Rational(0);
    sum += abs(p1 - p2);
  });
  return sum / 2;
}

Rational empirical_l1(const std::vector<Assignment>& samples, const ExactPmf& pmf) {
  if (samples.empty()) throw InputError("empirical_l1 requires a nonempty sample set");
  std::map<Assignment, uint64_t> counts;
  for (const auto& s : samples) {
    if (s.size() != pmf.n_vars) throw InputError("sample length does not match pmf");
    ++counts[s];
  }
  Rational total(static_cast<unsigned long>(samples.size()));
  Rational l1(0);
  for (const auto& [sigma, p] : pmf.probs) {
    auto it = counts.find(sigma);
    Rational freq = it == counts.end()
                        ? Rational(0)
                        : Rational(Integer(static_cast<unsigned long>(it->second))) / total;
    l1 += abs(freq - p);
  }
  for (const auto& [sigma, cnt] : counts) {
    if (pmf.probs.count(sigma)) continue;
    l1 += Rational(Integer(static_cast<unsigned long>(cnt))) / total;
  }
  return l1;
}

}  // namespace pcteq
