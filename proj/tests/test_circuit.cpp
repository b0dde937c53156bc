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

#include "doctest.h"
#include "helpers.hpp"
#include "pcteq/benchgen.hpp"
#include "pcteq/circuit.hpp"
#include "pcteq/engine.hpp"
#include "pcteq/errors.hpp"
#include "pcteq/oracle.hpp"

using namespace pcteq;
using namespace pcteq::testing;

TEST_CASE("evaluate literal and contradiction") {
  Circuit x1 = lit_circuit();
  CHECK(evaluate(x1, bits({1})));
  CHECK_FALSE(evaluate(x1, bits({0})));

  CircuitBuilder b(1);
  Circuit contra = b.finish(b.conj({b.literal(1, true), b.literal(1, false)}));
  CHECK_FALSE(evaluate(contra, bits({0})));
  CHECK_FALSE(evaluate(contra, bits({1})));

  CHECK_THROWS_AS(evaluate(x1, bits({0, 1})), InputError);
}

TEST_CASE("evaluate agrees with direct CNF evaluation on compiled circuits") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    Cnf f = random_3cnf(8, 20, rng);
    Circuit c = compile_decision_dnnf(f);
    for (int k = 0; k < 50; ++k) {
      Assignment sigma(8);
      for (auto& bit : sigma) bit = rng.next() & 1;
      CHECK(evaluate(c, sigma) == cnf_evaluate(f, sigma));
    }
  }
}

TEST_CASE("decomposability") {
  CircuitBuilder b(2);
  Circuit shared = b.finish(b.conj({b.literal(1, true), b.literal(1, true)}));
  // duplicate literal children share the variable
  if (shared.node(shared.root()).kind == NodeKind::And) CHECK_FALSE(check_decomposable(shared));

  CircuitBuilder b2(2);
  Circuit disjoint = b2.finish(b2.conj({b2.literal(1, true), b2.literal(2, true)}));
  CHECK(check_decomposable(disjoint));

  for (uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = generate_satisfiable_instance(8, 33, seed);
    CHECK(check_decomposable(*inst.circuit));
  }
}

TEST_CASE("determinism checks") {
  // Or over {x1 & x2, ~x1 & x2} with decision variable 1
  CircuitBuilder b(2);
  NodeId hi = b.conj({b.literal(1, true), b.literal(2, true)});
  NodeId lo = b.conj({b.literal(1, false), b.literal(2, true)});
  Circuit dec = b.finish(b.disj({hi, lo}, 1));
  CHECK(check_deterministic(dec, DetMode::Syntactic));
  CHECK(check_deterministic(dec, DetMode::Semantic));

  // Or over {x1, x2}: sigma = [1,1] satisfies both children
  CircuitBuilder b2(2);
  Circuit overlap = b2.finish(b2.disj({b2.literal(1, true), b2.literal(2, true)}));
  CHECK_FALSE(check_deterministic(overlap, DetMode::Syntactic));
  CHECK_FALSE(check_deterministic(overlap, DetMode::Semantic));

  // compiler output is decision-form, and the semantic check agrees
  auto inst = generate_satisfiable_instance(10, 41, 3);
  CHECK(check_deterministic(*inst.circuit, DetMode::Syntactic));
  CHECK(check_deterministic(*inst.circuit, DetMode::Semantic));

  CircuitBuilder b3(30);
  Circuit big = b3.finish(b3.disj({b3.literal(1, true), b3.literal(2, true)}));
  CHECK_THROWS_AS(check_deterministic(big, DetMode::Semantic), CapabilityError);
}

TEST_CASE("syntactic determinism implies semantic on compiled circuits") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    auto inst = generate_satisfiable_instance(12, 49, 100 + seed);
    REQUIRE(check_deterministic(*inst.circuit, DetMode::Syntactic));
    CHECK(check_deterministic(*inst.circuit, DetMode::Semantic));
  }
}

TEST_CASE("smooth: idempotent on already-smooth circuits") {
  Circuit c = valid_1var_circuit();
  CHECK(check_smooth(c));
  CHECK(smooth(c) == c);
}

TEST_CASE("smooth: Or(x1, x1&x2) keeps the model set") {
  CircuitBuilder b(2);
  NodeId branch = b.conj({b.literal(1, true), b.literal(2, true)});
  Circuit c = b.finish(b.disj({b.literal(1, true), branch}));
  CHECK_FALSE(check_smooth(c));

  Circuit s = smooth(c);
  CHECK(check_smooth(s));
  CHECK(check_decomposable(s) == check_decomposable(c));
  CHECK(enumerate_models(s) == enumerate_models(c));
  CHECK(smooth(s) == s);

  // both Or branches now mention {x1, x2}
  for (NodeId ch : s.node(s.root()).children) CHECK(s.var_set(ch).count() == 2);
}

TEST_CASE("smooth requires decomposability") {
  CircuitBuilder b(1);
  Circuit c = b.finish(b.conj({b.literal(1, true), b.literal(1, true)}));
  if (c.node(c.root()).kind == NodeKind::And) CHECK_THROWS_AS(smooth(c), StructuralError);
}

TEST_CASE("smoothing preserves weighted counts on compiled circuits") {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    auto inst = generate_satisfiable_instance(9, 37, 500 + seed);
    Rng wr(seed * 13 + 1);
    WeightFn w = random_weights(9, wr);
    Circuit s = smooth(*inst.circuit);
    CHECK(check_smooth(s));
    CHECK(enumerate_models(s) == enumerate_models(*inst.circuit));
    CHECK(wmc_exact(s, w) == wmc_exact(*inst.circuit, w));
  }
}

TEST_CASE("structural report") {
  auto inst = generate_satisfiable_instance(8, 33, 77);
  StructuralReport r = analyze_structure(*inst.circuit);
  CHECK(r.decomposable);
  CHECK(r.deterministic == Determinism::SyntacticDecision);

  CircuitBuilder b(30);
  Circuit big = b.finish(b.disj({b.literal(1, true), b.literal(2, true)}));
  StructuralReport rb = analyze_structure(big);
  CHECK(rb.deterministic == Determinism::Unknown);

  CircuitBuilder b2(2);
  Circuit overlap = b2.finish(b2.disj({b2.literal(1, true), b2.literal(2, true)}));
  CHECK(analyze_structure(overlap).deterministic == Determinism::No);
}
