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

#include <sstream>
#include <string>
#include <vector>

#include "pcteq/benchgen.hpp"
#include "pcteq/circuit.hpp"
#include "pcteq/formats.hpp"
#include "pcteq/rng.hpp"

namespace pcteq::testing {

/// x_1 as a 1-variable circuit.
inline Circuit lit_circuit(bool positive = true) {
  CircuitBuilder b(1);
  return b.finish(b.literal(1, positive));
}

/// Or(x_1, ~x_1) over n variables (valid on variable 1, others free).
inline Circuit valid_1var_circuit(uint32_t n = 1) {
  CircuitBuilder b(n);
  return b.finish(b.disj({b.literal(1, true), b.literal(1, false)}, 1));
}

/// The circuit with all 2^n assignments as models.
inline Circuit valid_circuit(uint32_t n) {
  return compile_decision_dnnf(Cnf{n, {}});
}

/// Serializes, randomly reshuffles the node lines (topologically valid, root
/// kept last) and reparses: a structurally different circuit with the same
/// distribution.
inline Circuit permuted_file_form(const Circuit& c, Rng& rng) {
  const uint32_t count = c.node_count();
  std::vector<uint32_t> remaining_children(count, 0);
  std::vector<std::vector<NodeId>> parents(count);
  for (NodeId id = 0; id < count; ++id) {
    remaining_children[id] = static_cast<uint32_t>(c.node(id).children.size());
    for (NodeId ch : c.node(id).children) parents[ch].push_back(id);
  }

  std::vector<NodeId> ready;
  for (NodeId id = 0; id < count; ++id)
    if (remaining_children[id] == 0 && id != c.root()) ready.push_back(id);

  std::vector<NodeId> order;
  order.reserve(count);
  while (!ready.empty()) {
    size_t pick = static_cast<size_t>(rng.uniform(0, ready.size() - 1));
    NodeId id = ready[pick];
    ready.erase(ready.begin() + static_cast<long>(pick));
    order.push_back(id);
    for (NodeId p : parents[id])
      if (--remaining_children[p] == 0 && p != c.root()) ready.push_back(p);
  }
  order.push_back(c.root());

  std::vector<NodeId> pos(count);
  for (uint32_t i = 0; i < order.size(); ++i) pos[order[i]] = i;

  std::ostringstream out;
  out << "nnf " << count << ' ' << c.edge_count() << ' ' << c.n_vars() << '\n';
  for (NodeId id : order) {
    const Node& n = c.node(id);
    switch (n.kind) {
      case NodeKind::True: out << "A 0\n"; break;
      case NodeKind::False: out << "O 0 0\n"; break;
      case NodeKind::PosLit: out << "L " << n.var << '\n'; break;
      case NodeKind::NegLit: out << "L -" << n.var << '\n'; break;
      case NodeKind::And:
        out << "A " << n.children.size();
        for (NodeId ch : n.children) out << ' ' << pos[ch];
        out << '\n';
        break;
      case NodeKind::Or:
        out << "O " << n.var << ' ' << n.children.size();
        for (NodeId ch : n.children) out << ' ' << pos[ch];
        out << '\n';
        break;
    }
  }
  return parse_nnf_string(out.str());
}

inline Assignment bits(std::initializer_list<int> values) {
  Assignment a;
  for (int v : values) a.push_back(static_cast<uint8_t>(v));
  return a;
}

}  // namespace pcteq::testing
