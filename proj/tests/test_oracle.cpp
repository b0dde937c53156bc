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
#include "pcteq/engine.hpp"
#include "pcteq/errors.hpp"
#include "pcteq/oracle.hpp"

using namespace pcteq;
using namespace pcteq::testing;

TEST_CASE("enumerate_models: basics and lexicographic order") {
  Circuit c = valid_1var_circuit();
  auto models = enumerate_models(c);
  REQUIRE(models.size() == 2);
  CHECK(models[0] == bits({0}));
  CHECK(models[1] == bits({1}));

  CircuitBuilder b(1);
  Circuit contra = b.finish(b.conj({b.literal(1, true), b.literal(1, false)}));
  CHECK(enumerate_models(contra).empty());

  CircuitBuilder big(30);
  Circuit large = big.finish(big.literal(1, true));
  CHECK_THROWS_AS(enumerate_models(large), CapabilityError);
}

TEST_CASE("enumerate_models matches direct CNF enumeration") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    Rng rng(seed);
    Cnf f = random_3cnf(9, 30, rng);
    Circuit c = compile_decision_dnnf(f);
    CHECK(enumerate_models(c) == cnf_enumerate(f));
  }
}

TEST_CASE("exact_pmf: small circuits") {
  Circuit c = valid_1var_circuit();
  ExactPmf u = exact_pmf(c, WeightFn::uniform(1));
  CHECK(u.at(bits({0})) == Rational(1, 2));
  CHECK(u.at(bits({1})) == Rational(1, 2));

  ExactPmf q = exact_pmf(c, WeightFn(std::vector<Rational>{Rational(1, 4)}));
  CHECK(q.at(bits({1})) == Rational(1, 4));
  CHECK(q.at(bits({0})) == Rational(3, 4));
  CHECK(q.at(bits({1})) + q.at(bits({0})) == 1);
}

TEST_CASE("exact_pmf: normalization on random instances") {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    uint32_t n = 5 + static_cast<uint32_t>(seed % 4);
    auto inst = generate_satisfiable_instance(n, default_clause_count(n), 6000 + seed);
    Rng wr(seed);
    WeightFn w = random_weights(n, wr);
    ExactPmf pmf = exact_pmf(*inst.circuit, w);
    Rational sum(0);
    for (const auto& [sigma, p] : pmf.probs) {
      CHECK(evaluate(*inst.circuit, sigma));
      sum += p;
    }
    CHECK(sum == 1);
  }
}

TEST_CASE("exact_pmf requires satisfiability") {
  Circuit f = compile_decision_dnnf(parse_dimacs_string("p cnf 1 2\n1 0\n-1 0\n"));
  CHECK_THROWS_AS(exact_pmf(f, WeightFn::uniform(1)), InputError);
}

TEST_CASE("tv_exact: identical, disjoint, perturbed") {
  Circuit c = valid_1var_circuit();
  WeightFn u = WeightFn::uniform(1);
  CHECK(tv_exact(c, u, c, u) == 0);

  Circuit pos = lit_circuit(true), neg = lit_circuit(false);
  CHECK(tv_exact(pos, u, neg, u) == 1);

  // one-variable perturbation on the valid 2-var circuit: 1/2 -> 1/4 gives 1/4
  Circuit v2 = valid_circuit(2);
  WeightFn w1 = WeightFn::uniform(2);
  WeightFn w2 = w1.with(1, Rational(1, 4));
  CHECK(tv_exact(v2, w1, v2, w2) == Rational(1, 4));
}

TEST_CASE("tv_exact: metric properties on random triples") {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    auto a = generate_satisfiable_instance(6, 25, 7000 + seed);
    auto b = generate_satisfiable_instance(6, 25, 7100 + seed);
    auto c = generate_satisfiable_instance(6, 25, 7200 + seed);
    Rng wr(seed);
    WeightFn wa = random_weights(6, wr), wb = random_weights(6, wr), wc = random_weights(6, wr);

    Rational ab = tv_exact(*a.circuit, wa, *b.circuit, wb);
    Rational ba = tv_exact(*b.circuit, wb, *a.circuit, wa);
    Rational bc = tv_exact(*b.circuit, wb, *c.circuit, wc);
    Rational ac = tv_exact(*a.circuit, wa, *c.circuit, wc);
    CHECK(ab == ba);                    // symmetry
    CHECK(ab >= 0);
    CHECK(ab <= 1);
    CHECK(ac <= ab + bc);               // triangle inequality
    CHECK(tv_exact(*a.circuit, wa, *a.circuit, wa) == 0);
  }
}

TEST_CASE("tv_exact: input validation") {
  Circuit c1 = valid_1var_circuit(1), c2 = valid_circuit(2);
  CHECK_THROWS_AS(tv_exact(c1, WeightFn::uniform(1), c2, WeightFn::uniform(2)), InputError);

  Circuit f = compile_decision_dnnf(parse_dimacs_string("p cnf 1 2\n1 0\n-1 0\n"));
  CHECK_THROWS_AS(tv_exact(f, WeightFn::uniform(1), c1, WeightFn::uniform(1)), InputError);
}

TEST_CASE("empirical_l1: trivial cases") {
  ExactPmf pmf;
  pmf.n_vars = 1;
  pmf.probs[bits({0})] = Rational(1, 2);
  pmf.probs[bits({1})] = Rational(1, 2);

  // all mass on one of two uniform points
  std::vector<Assignment> one_sided(10, bits({1}));
  CHECK(empirical_l1(one_sided, pmf) == 1);

  // exact proportions give zero residual
  std::vector<Assignment> balanced{bits({0}), bits({1}), bits({0}), bits({1})};
  CHECK(empirical_l1(balanced, pmf) == 0);

  // samples outside the support count in full
  ExactPmf point;
  point.n_vars = 1;
  point.probs[bits({0})] = Rational(1);
  std::vector<Assignment> off{bits({1}), bits({0})};
  CHECK(empirical_l1(off, point) == 1);

  CHECK_THROWS_AS(empirical_l1({}, pmf), InputError);
}

TEST_CASE("engine and oracle agree: wmc equals the enumerated weighted sum") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    uint32_t n = 6 + static_cast<uint32_t>(seed % 5);
    auto inst = generate_satisfiable_instance(n, default_clause_count(n), 8000 + seed);
    Rng wr(seed * 7 + 5);
    WeightFn w = random_weights(n, wr);
    Rational brute(0);
    for (const auto& sigma : enumerate_models(*inst.circuit)) brute += weight_of(sigma, w);
    CHECK(wmc_exact(*inst.circuit, w) == brute);
  }
}
