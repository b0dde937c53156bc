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
#include <optional>
#include <unordered_map>
#include <vector>

#include "pcteq/bitset.hpp"

namespace pcteq {

/// Variables are dense 1..n.
using VarId = uint32_t;
using NodeId = uint32_t;

enum class NodeKind : uint8_t { True, False, PosLit, NegLit, And, Or };

struct Node {
  NodeKind kind;
  /// Literal variable for PosLit/NegLit; decision variable for Or (0 = none).
  VarId var = 0;
  std::vector<NodeId> children;

  bool operator==(const Node& o) const = default;
};

/// Total 0/1 assignment; index i holds the value of variable i+1.
using Assignment = std::vector<uint8_t>;

enum class Determinism : uint8_t { No, SyntacticDecision, SemanticVerified, Unknown };

struct StructuralReport {
  bool decomposable = false;
  Determinism deterministic = Determinism::Unknown;
  bool smooth = false;
};

enum class DetMode : uint8_t { Syntactic, Semantic };

/// Immutable rooted DAG in negation normal form. Nodes are stored so that
/// children always precede parents; the root is the last node. Every node is
/// reachable from the root (construction prunes the rest) and per-node
/// variable sets are cached. Safe for concurrent reads once built.
class Circuit {
 public:
  uint32_t n_vars() const { return n_vars_; }
  NodeId root() const { return root_; }
  uint32_t node_count() const { return static_cast<uint32_t>(nodes_.size()); }
  uint64_t edge_count() const { return edges_; }
  /// |phi| = nodes + edges.
  uint64_t size() const { return node_count() + edges_; }

  const Node& node(NodeId id) const { return nodes_[id]; }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Bitset& var_set(NodeId id) const { return var_sets_[id]; }
  const Bitset& root_var_set() const { return var_sets_[root_]; }

  bool operator==(const Circuit& o) const {
    return n_vars_ == o.n_vars_ && root_ == o.root_ && nodes_ == o.nodes_;
  }

 private:
  friend class CircuitBuilder;
  uint32_t n_vars_ = 0;
  NodeId root_ = 0;
  uint64_t edges_ = 0;
  std::vector<Node> nodes_;
  std::vector<Bitset> var_sets_;
};

/// Builds circuits bottom-up. Children must already exist, which enforces
/// acyclicity. Constants are folded and one-child And/Or collapse to the
/// child, so False can only survive as the root of an unsatisfiable circuit.
/// Literal nodes are shared.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(uint32_t n_vars);

  uint32_t n_vars() const { return n_vars_; }

  NodeId true_node();
  NodeId false_node();
  NodeId literal(VarId v, bool positive);
  NodeId conj(std::vector<NodeId> children);
  NodeId disj(std::vector<NodeId> children, VarId decision_var = 0);

  /// Prunes nodes unreachable from `root`, renumbers (order-preserving, so
  /// the result stays topologically sorted with the root last) and computes
  /// cached variable sets.
  Circuit finish(NodeId root) const;

 private:
  uint32_t n_vars_;
  std::vector<Node> nodes_;
  std::optional<NodeId> true_id_, false_id_;
  std::unordered_map<uint64_t, NodeId> literal_ids_;
};

/// phi(sigma) by one bottom-up pass; O(|phi|).
bool evaluate(const Circuit& c, const Assignment& sigma);

/// True iff every And node's children have pairwise disjoint variable sets.
bool check_decomposable(const Circuit& c);

/// Syntactic: every Or node with >= 2 children is a decision node, i.e. has
/// exactly two children, one implying x and the other ~x for some variable x
/// (the annotated decision variable when present). Semantic: no assignment
/// satisfies two distinct children of any Or node, verified by exhausting all
/// 2^n assignments; throws CapabilityError when n_vars > semantic_limit.
bool check_deterministic(const Circuit& c, DetMode mode, uint32_t semantic_limit = 20);

/// True iff all children of every Or node mention the same variable set and
/// the root mentions all declared variables (the form the weighted-count and
/// network-polynomial recursions require).
bool check_smooth(const Circuit& c);

/// Smoothing transform: conjoins an (x or ~x) gadget per missing variable at
/// under-smoothed Or children and pads the root to mention all n variables.
/// Models and per-model weights are unchanged; decomposability and
/// determinism are preserved; idempotent. Requires a decomposable input.
Circuit smooth(const Circuit& c);

StructuralReport analyze_structure(const Circuit& c, uint32_t semantic_limit = 20);

const char* to_string(Determinism d);

}  // namespace pcteq
