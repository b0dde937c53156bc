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

#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "pcteq/benchgen.hpp"
#include "pcteq/errors.hpp"
#include "pcteq/formats.hpp"

using namespace pcteq;
using namespace pcteq::testing;

TEST_CASE("nnf: smallest file") {
  Circuit c = parse_nnf_string("nnf 1 0 1\nL 1\n");
  CHECK(c.n_vars() == 1);
  CHECK(c.node_count() == 1);
  CHECK(c.node(c.root()).kind == NodeKind::PosLit);
  CHECK(c.node(c.root()).var == 1);
}

TEST_CASE("nnf: tautology circuit with decision variable") {
  Circuit c = parse_nnf_string("nnf 3 2 1\nL 1\nL -1\nO 1 2 0 1\n");
  const Node& root = c.node(c.root());
  CHECK(root.kind == NodeKind::Or);
  CHECK(root.var == 1);
  REQUIRE(root.children.size() == 2);
  CHECK(c.node(root.children[0]).kind == NodeKind::PosLit);
  CHECK(c.node(root.children[1]).kind == NodeKind::NegLit);
}

TEST_CASE("nnf: CRLF accepted") {
  Circuit c = parse_nnf_string("nnf 1 0 1\r\nL 1\r\n");
  CHECK(c.node(c.root()).kind == NodeKind::PosLit);
}

TEST_CASE("nnf: parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> unsigned {
    try {
      parse_nnf_string(text);
    } catch (const ParseError& e) {
      return e.line;
    }
    return 0;
  };
  CHECK(line_of("nf 1 0 1\nL 1\n") == 1);               // malformed header
  CHECK(line_of("nnf 2 1 1\nA 1 1\nL 1\n") == 2);       // forward reference
  CHECK(line_of("nnf 2 1 1\nL 1\nA 1 7\n") == 3);       // index out of range
  CHECK(line_of("nnf 1 0 1\nL 2\n") == 2);              // literal var > n
  CHECK(line_of("nnf 1 0 1\nL 1\nL 1\n") == 3);         // trailing content
  CHECK(line_of("nnf 2 5 1\nL 1\nL -1\n") > 0);         // edge count mismatch
  CHECK_THROWS_AS(parse_nnf_string("nnf 2 0 1\nL 1\n"), ParseError);  // missing node line
  CHECK_THROWS_AS(parse_nnf_string(""), ParseError);
}

TEST_CASE("nnf: constant node conventions") {
  CircuitBuilder bt(2);
  Circuit t = bt.finish(bt.true_node());
  CHECK(write_nnf_string(t) == "nnf 1 0 2\nA 0\n");
  CHECK(parse_nnf_string(write_nnf_string(t)) == t);

  CircuitBuilder bf(2);
  Circuit f = bf.finish(bf.false_node());
  CHECK(write_nnf_string(f) == "nnf 1 0 2\nO 0 0\n");
  CHECK(parse_nnf_string(write_nnf_string(f)) == f);
}

TEST_CASE("nnf: round-trip is the identity on compiled circuits") {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    auto inst = generate_satisfiable_instance(8, 33, 1000 + seed);
    std::string text = write_nnf_string(*inst.circuit);
    Circuit back = parse_nnf_string(text);
    CHECK(back == *inst.circuit);
    CHECK(write_nnf_string(back) == text);  // idempotent on reparse
  }
}

TEST_CASE("nnf: header counts match a recount of the body") {
  auto inst = generate_satisfiable_instance(6, 25, 9);
  std::string text = write_nnf_string(*inst.circuit);
  std::istringstream ss(text);
  std::string tok;
  long v, e, n;
  ss >> tok >> v >> e >> n;
  long nodes = 0, edges = 0;
  std::string line;
  std::getline(ss, line);
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    ++nodes;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "A") {
      long c;
      ls >> c;
      edges += c;
    } else if (kind == "O") {
      long j, c;
      ls >> j >> c;
      edges += c;
    }
  }
  CHECK(nodes == v);
  CHECK(edges == e);
}

TEST_CASE("dimacs: basic clauses") {
  Cnf f = parse_dimacs_string("p cnf 1 1\n1 0\n");
  CHECK(f.n_vars == 1);
  REQUIRE(f.clauses.size() == 1);
  CHECK(f.clauses[0] == std::vector<int32_t>{1});

  Cnf g = parse_dimacs_string("c comment\np cnf 2 2\n1 -2 0\n-1 2 0\n");
  CHECK(g.n_vars == 2);
  REQUIRE(g.clauses.size() == 2);
  CHECK(g.clauses[0] == std::vector<int32_t>{1, -2});
  CHECK(g.clauses[1] == std::vector<int32_t>{-1, 2});

  // clauses may span lines
  Cnf h = parse_dimacs_string("p cnf 3 1\n1\n2 3 0\n");
  REQUIRE(h.clauses.size() == 1);
  CHECK(h.clauses[0] == std::vector<int32_t>{1, 2, 3});
}

TEST_CASE("dimacs: errors") {
  CHECK_THROWS_AS(parse_dimacs_string("1 0\n"), ParseError);            // clause before header
  CHECK_THROWS_AS(parse_dimacs_string("p cnf 1 1\n2 0\n"), ParseError); // literal out of range
  CHECK_THROWS_AS(parse_dimacs_string("p cnf 2 1\n1 2\n"), ParseError); // unterminated clause
  CHECK_THROWS_AS(parse_dimacs_string("p cnf 2 2\n1 0\n"), ParseError); // count mismatch
  CHECK_THROWS_AS(parse_dimacs_string(""), ParseError);                 // missing header
}

TEST_CASE("dimacs: generated 3-CNF round-trips") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    Cnf f = random_3cnf(10, 30, rng);
    Cnf back = parse_dimacs_string(write_dimacs_string(f));
    CHECK(back.n_vars == f.n_vars);
    CHECK(back.clauses == f.clauses);
  }
}

TEST_CASE("weights: parsing") {
  WeightFn w = parse_weights_string("w 1 1/3\n", 1);
  CHECK(w.pos(1) == Rational(1, 3));

  // empty file defaults to uniform
  WeightFn u = parse_weights_string("", 3);
  for (VarId v = 1; v <= 3; ++v) CHECK(u.pos(v) == Rational(1, 2));

  // decimals are exact
  WeightFn d = parse_weights_string("w 1 0.25\n", 1);
  CHECK(d.pos(1) == Rational(1, 4));

  // duplicate: last wins
  WeightFn dup = parse_weights_string("w 1 1/3\nw 1 1/5\n", 1);
  CHECK(dup.pos(1) == Rational(1, 5));

  // comments allowed
  WeightFn c = parse_weights_string("c a comment\nw 2 3/7\n", 2);
  CHECK(c.pos(1) == Rational(1, 2));
  CHECK(c.pos(2) == Rational(3, 7));
}

TEST_CASE("weights: domain and range errors") {
  CHECK_THROWS_AS(parse_weights_string("w 1 0\n", 1), DomainError);
  CHECK_THROWS_AS(parse_weights_string("w 1 1\n", 1), DomainError);
  CHECK_THROWS_AS(parse_weights_string("w 1 5/4\n", 1), DomainError);
  CHECK_THROWS_AS(parse_weights_string("w 2 1/2\n", 1), ParseError);  // var out of range
  CHECK_THROWS_AS(parse_weights_string("v 1 1/2\n", 1), ParseError);  // unknown line
}

TEST_CASE("weights: round-trip") {
  Rng rng(5);
  WeightFn w = random_weights(6, rng);
  WeightFn back = parse_weights_string(write_weights_string(w), 6);
  CHECK(back == w);
}
