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

#include "pcteq/circuit.hpp"

#include <algorithm>
#include <bit>

#include "pcteq/errors.hpp"

namespace pcteq {

// ---------------------------------------------------------------- builder

CircuitBuilder::CircuitBuilder(uint32_t n_vars) : n_vars_(n_vars) {}

NodeId CircuitBuilder::true_node() {
  if (!true_id_) {
    true_id_ = static_cast<NodeId>(nodes_.size());
    nodes_.push_back({NodeKind::True, 0, {}});
  }
  return *true_id_;
}

NodeId CircuitBuilder::false_node() {
  if (!false_id_) {
    false_id_ = static_cast<NodeId>(nodes_.size());
    nodes_.push_back({NodeKind::False, 0, {}});
  }
  return *false_id_;
}

NodeId CircuitBuilder::literal(VarId v, bool positive) {
  if (v == 0 || v > n_vars_) throw InputError("literal variable out of range");
  uint64_t key = (uint64_t(v) << 1) | (positive ? 1 : 0);
  auto it = literal_ids_.find(key);
  if (it != literal_ids_.end()) return it->second;
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({positive ? NodeKind::PosLit : NodeKind::NegLit, v, {}});
  literal_ids_.emplace(key, id);
  return id;
}

NodeId CircuitBuilder::conj(std::vector<NodeId> children) {
  std::vector<NodeId> kept;
  kept.reserve(children.size());
  for (NodeId c : children) {
    switch (nodes_.at(c).kind) {
      case NodeKind::True: break;                       // neutral
      case NodeKind::False: return false_node();        // absorbing
      default: kept.push_back(c);
    }
  }
  if (kept.empty()) return true_node();
  if (kept.size() == 1) return kept[0];
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({NodeKind::And, 0, std::move(kept)});
  return id;
}

NodeId CircuitBuilder::disj(std::vector<NodeId> children, VarId decision_var) {
  if (decision_var > n_vars_) throw InputError("decision variable out of range");
  std::vector<NodeId> kept;
  kept.reserve(children.size());
  for (NodeId c : children) {
    switch (nodes_.at(c).kind) {
      case NodeKind::False: break;                      // neutral
      case NodeKind::True: return true_node();          // absorbing
      default: kept.push_back(c);
    }
  }
  if (kept.empty()) return false_node();
  if (kept.size() == 1) return kept[0];
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({NodeKind::Or, decision_var, std::move(kept)});
  return id;
}

Circuit CircuitBuilder::finish(NodeId root) const {
  if (root >= nodes_.size()) throw InputError("root node id out of range");

  std::vector<uint8_t> reach(nodes_.size(), 0);
  std::vector<NodeId> stack{root};
  reach[root] = 1;
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    for (NodeId c : nodes_[id].children)
      if (!reach[c]) {
        reach[c] = 1;
        stack.push_back(c);
      }
  }

  Circuit out;
  out.n_vars_ = n_vars_;
  std::vector<NodeId> remap(nodes_.size(), 0);
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    if (!reach[id]) continue;
    remap[id] = static_cast<NodeId>(out.nodes_.size());
    Node n = nodes_[id];
    for (NodeId& c : n.children) c = remap[c];
    out.edges_ += n.children.size();
    out.nodes_.push_back(std::move(n));
  }
  out.root_ = remap[root];

  out.var_sets_.reserve(out.nodes_.size());
  for (const Node& n : out.nodes_) {
    Bitset vs(n_vars_ + 1);
    if (n.kind == NodeKind::PosLit || n.kind == NodeKind::NegLit) {
      vs.set(n.var);
    } else {
      for (NodeId c : n.children) vs |= out.var_sets_[c];
    }
    out.var_sets_.push_back(std::move(vs));
  }
  return out;
}

// --------------------------------------------------------------- evaluate

bool evaluate(const Circuit& c, const Assignment& sigma) {
  if (sigma.size() != c.n_vars()) throw InputError("assignment length does not match n_vars");
  std::vector<uint8_t> val(c.node_count());
  for (NodeId id = 0; id < c.node_count(); ++id) {
    const Node& n = c.node(id);
    switch (n.kind) {
      case NodeKind::True: val[id] = 1; break;
      case NodeKind::False: val[id] = 0; break;
      case NodeKind::PosLit: val[id] = sigma[n.var - 1]; break;
      case NodeKind::NegLit: val[id] = sigma[n.var - 1] ? 0 : 1; break;
      case NodeKind::And: {
        uint8_t v = 1;
        for (NodeId ch : n.children) v &= val[ch];
        val[id] = v;
        break;
      }
      case NodeKind::Or: {
        uint8_t v = 0;
        for (NodeId ch : n.children) v |= val[ch];
        val[id] = v;
        break;
      }
    }
  }
  return val[c.root()] != 0;
}

// ----------------------------------------------------------- structure

bool check_decomposable(const Circuit& c) {
  for (NodeId id = 0; id < c.node_count(); ++id) {
    const Node& n = c.node(id);
    if (n.kind != NodeKind::And) continue;
    uint32_t total = 0;
    for (NodeId ch : n.children) total += c.var_set(ch).count();
    if (total != c.var_set(id).count()) return false;
  }
  return true;
}

namespace {

// Literals certainly implied by each node: And takes the union over children,
// Or the intersection. Sound under-approximation; exact on decision forms.
struct ImpliedLits {
  std::vector<Bitset> pos, neg;
};

ImpliedLits implied_literals(const Circuit& c) {
  ImpliedLits out;
  out.pos.reserve(c.node_count());
  out.neg.reserve(c.node_count());
  for (NodeId id = 0; id < c.node_count(); ++id) {
    const Node& n = c.node(id);
    Bitset p(c.n_vars() + 1), q(c.n_vars() + 1);
    switch (n.kind) {
      case NodeKind::True:
      case NodeKind::False:
        break;
      case NodeKind::PosLit: p.set(n.var); break;
      case NodeKind::NegLit: q.set(n.var); break;
      case NodeKind::And:
        for (NodeId ch : n.children) {
          p |= out.pos[ch];
          q |= out.neg[ch];
        }
        break;
      case NodeKind::Or: {
        bool first = true;
        for (NodeId ch : n.children) {
          if (first) {
            p = out.pos[ch];
            q = out.neg[ch];
            first = false;
          } else {
            // intersection
            Bitset np(c.n_vars() + 1), nq(c.n_vars() + 1);
            for (VarId v = 1; v <= c.n_vars(); ++v) {
              if (p.test(v) && out.pos[ch].test(v)) np.set(v);
              if (q.test(v) && out.neg[ch].test(v)) nq.set(v);
            }
            p = std::move(np);
            q = std::move(nq);
          }
        }
        break;
      }
    }
    out.pos.push_back(std::move(p));
    out.neg.push_back(std::move(q));
  }
  return out;
}

bool syntactic_deterministic(const Circuit& c) {
  ImpliedLits lits = implied_literals(c);
  for (NodeId id = 0; id < c.node_count(); ++id) {
    const Node& n = c.node(id);
    if (n.kind != NodeKind::Or || n.children.size() <= 1) continue;
    if (n.children.size() != 2) return false;
    NodeId a = n.children[0], b = n.children[1];
    auto decides_on = [&](VarId v) {
      return (lits.pos[a].test(v) && lits.neg[b].test(v)) ||
             (lits.pos[b].test(v) && lits.neg[a].test(v));
    };
    if (n.var != 0) {
      if (!decides_on(n.var)) return false;
    } else {
      bool found = false;
      for (VarId v = 1; v <= c.n_vars() && !found; ++v) found = decides_on(v);
      if (!found) return false;
    }
  }
  return true;
}

// 2^n-bit truth table, assignment index has variable 1 as the most
// significant bit (matching lexicographic enumeration order).
struct Table {
  std::vector<uint64_t> w;
};

constexpr uint64_t kLitMask[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL};

size_t table_words(uint32_t n) { return n >= 6 ? (size_t(1) << (n - 6)) : 1; }

void mask_tail(Table& t, uint32_t n) {
  if (n < 6) t.w[0] &= (uint64_t(1) << (uint64_t(1) << n)) - 1;
}

Table literal_table(uint32_t n, VarId v, bool positive) {
  Table t;
  size_t words = table_words(n);
  t.w.resize(words);
  uint32_t shift = n - v;  // sigma(v) = (idx >> shift) & 1
  if (shift < 6) {
    std::fill(t.w.begin(), t.w.end(), kLitMask[shift]);
  } else {
    for (size_t k = 0; k < words; ++k) t.w[k] = ((k >> (shift - 6)) & 1) ? ~uint64_t(0) : 0;
  }
  if (!positive)
    for (auto& x : t.w) x = ~x;
  mask_tail(t, n);
  return t;
}

uint64_t table_count(const Table& t) {
  uint64_t c = 0;
  for (uint64_t x : t.w) c += std::popcount(x);
  return c;
}

bool semantic_deterministic(const Circuit& c) {
  const uint32_t n = c.n_vars();
  std::vector<Table> tables(c.node_count());
  std::vector<uint32_t> uses(c.node_count(), 0);
  for (NodeId id = 0; id < c.node_count(); ++id)
    for (NodeId ch : c.node(id).children) ++uses[ch];

  for (NodeId id = 0; id < c.node_count(); ++id) {
    const Node& node = c.node(id);
    Table t;
    switch (node.kind) {
      case NodeKind::True:
        t.w.assign(table_words(n), ~uint64_t(0));
        mask_tail(t, n);
        break;
      case NodeKind::False: t.w.assign(table_words(n), 0); break;
      case NodeKind::PosLit: t = literal_table(n, node.var, true); break;
      case NodeKind::NegLit: t = literal_table(n, node.var, false); break;
      case NodeKind::And: {
        t.w.assign(table_words(n), ~uint64_t(0));
        mask_tail(t, n);
        for (NodeId ch : node.children)
          for (size_t k = 0; k < t.w.size(); ++k) t.w[k] &= tables[ch].w[k];
        break;
      }
      case NodeKind::Or: {
        t.w.assign(table_words(n), 0);
        uint64_t child_sum = 0;
        for (NodeId ch : node.children) {
          child_sum += table_count(tables[ch]);
          for (size_t k = 0; k < t.w.size(); ++k) t.w[k] |= tables[ch].w[k];
        }
        if (child_sum != table_count(t)) return false;  // two children overlap
        break;
      }
    }
    for (NodeId ch : node.children)
      if (--uses[ch] == 0) tables[ch].w.clear();
    tables[id] = std::move(t);
  }
  return true;
}

}  // namespace

bool check_deterministic(const Circuit& c, DetMode mode, uint32_t semantic_limit) {
  if (mode == DetMode::Syntactic) return syntactic_deterministic(c);
  if (c.n_vars() > semantic_limit)
    throw CapabilityError("semantic determinism check limited to " +
                          std::to_string(semantic_limit) + " variables, circuit has " +
                          std::to_string(c.n_vars()));
  return semantic_deterministic(c);
}

bool check_smooth(const Circuit& c) {
  for (NodeId id = 0; id < c.node_count(); ++id) {
    const Node& n = c.node(id);
    if (n.kind != NodeKind::Or) continue;
    for (NodeId ch : n.children)
      if (!(c.var_set(ch) == c.var_set(id))) return false;
  }
  // The root must mention every declared variable, unless unsatisfiable.
  if (c.node(c.root()).kind == NodeKind::False) return true;
  return c.root_var_set().count() == c.n_vars();
}

Circuit smooth(const Circuit& c) {
  if (!check_decomposable(c)) throw StructuralError("smooth() requires a decomposable circuit");

  CircuitBuilder b(c.n_vars());
  std::vector<NodeId> gadget(c.n_vars() + 1, 0);
  std::vector<uint8_t> have_gadget(c.n_vars() + 1, 0);
  auto var_gadget = [&](VarId v) {
    if (!have_gadget[v]) {
      gadget[v] = b.disj({b.literal(v, true), b.literal(v, false)}, v);
      have_gadget[v] = 1;
    }
    return gadget[v];
  };
  // Wraps `id` (already mapped) so it mentions all of `want`.
  auto pad = [&](NodeId mapped, const Bitset& have, const Bitset& want) {
    std::vector<NodeId> parts{mapped};
    for (VarId v = 1; v <= c.n_vars(); ++v)
      if (want.test(v) && !have.test(v)) parts.push_back(var_gadget(v));
    if (parts.size() == 1) return mapped;
    return b.conj(std::move(parts));
  };

  std::vector<NodeId> remap(c.node_count());
  for (NodeId id = 0; id < c.node_count(); ++id) {
    const Node& n = c.node(id);
    switch (n.kind) {
      case NodeKind::True: remap[id] = b.true_node(); break;
      case NodeKind::False: remap[id] = b.false_node(); break;
      case NodeKind::PosLit: remap[id] = b.literal(n.var, true); break;
      case NodeKind::NegLit: remap[id] = b.literal(n.var, false); break;
      case NodeKind::And: {
        std::vector<NodeId> ch;
        ch.reserve(n.children.size());
        for (NodeId x : n.children) ch.push_back(remap[x]);
        remap[id] = b.conj(std::move(ch));
        break;
      }
      case NodeKind::Or: {
        std::vector<NodeId> ch;
        ch.reserve(n.children.size());
        for (NodeId x : n.children) ch.push_back(pad(remap[x], c.var_set(x), c.var_set(id)));
        remap[id] = b.disj(std::move(ch), n.var);
        break;
      }
    }
  }

  NodeId root = remap[c.root()];
  if (c.node(c.root()).kind != NodeKind::False) {
    Bitset all(c.n_vars() + 1);
    for (VarId v = 1; v <= c.n_vars(); ++v) all.set(v);
    root = pad(root, c.root_var_set(), all);
  }
  return b.finish(root);
}

StructuralReport analyze_structure(const Circuit& c, uint32_t semantic_limit) {
  StructuralReport r;
  r.decomposable = check_decomposable(c);
  r.smooth = check_smooth(c);
  if (syntactic_deterministic(c)) {
    r.deterministic = Determinism::SyntacticDecision;
  } else if (c.n_vars() <= semantic_limit) {
    r.deterministic =
        semantic_deterministic(c) ? Determinism::SemanticVerified : Determinism::No;
  } else {
    r.deterministic = Determinism::Unknown;
  }
  return r;
}

const char* to_string(Determinism d) {
  switch (d) {
    case Determinism::No: return "no";
    case Determinism::SyntacticDecision: return "syntactic-decision";
    case Determinism::SemanticVerified: return "semantic-verified";
    case Determinism::Unknown: return "unknown";
  }
  return "?";
}

}  // namespace pcteq
