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

namespace {

Rational brute_wmc(const Circuit& c, const WeightFn& w) {
  Rational sum(0);
  for (const auto& sigma : enumerate_models(c)) sum += weight_of(sigma, w);
  return sum;
}

}  // namespace

TEST_CASE("wmc: valid circuit counts to one") {
  Circuit c = valid_1var_circuit();
  CHECK(wmc_exact(c, WeightFn::uniform(1)) == 1);
  CHECK(wmc_exact(c, WeightFn(std::vector<Rational>{Rational(3, 7)})) == 1);
}

TEST_CASE("wmc: single literal") {
  CHECK(wmc_exact(lit_circuit(), WeightFn(std::vector<Rational>{Rational(1, 3)})) ==
        Rational(1, 3));
}

TEST_CASE("wmc: unsatisfiable circuit counts to zero") {
  Circuit f = compile_decision_dnnf(parse_dimacs_string("p cnf 1 2\n1 0\n-1 0\n"));
  CHECK(wmc_exact(f, WeightFn::uniform(1)) == 0);
}

TEST_CASE("wmc: structural preconditions") {
  CircuitBuilder b(2);
  Circuit nondet = b.finish(b.disj({b.literal(1, true), b.literal(2, true)}));
  CHECK_THROWS_AS(wmc_exact(nondet, WeightFn::uniform(2)), StructuralError);

  CircuitBuilder b2(2);
  Circuit nondec = b2.finish(b2.conj({b2.literal(1, true), b2.literal(1, true)}));
  if (nondec.node(nondec.root()).kind == NodeKind::And)
    CHECK_THROWS_AS(wmc_exact(nondec, WeightFn::uniform(2)), StructuralError);
}

TEST_CASE("wmc agrees exactly with the brute-force weighted sum") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    uint32_t n = 8 + static_cast<uint32_t>(seed % 5);
    auto inst = generate_satisfiable_instance(n, default_clause_count(n), 2000 + seed);
    Rng wr(seed + 1);
    WeightFn w = random_weights(n, wr);
    CHECK(wmc_exact(*inst.circuit, w) == brute_wmc(*inst.circuit, w));
  }
}

TEST_CASE("wmc is invariant under node-order permutation of the file form") {
  auto inst = generate_satisfiable_instance(8, 33, 4);
  Rng rng(11);
  WeightFn w = random_weights(8, rng);
  Rational reference = wmc_exact(*inst.circuit, w);
  for (int k = 0; k < 5; ++k) {
    Circuit p = permuted_file_form(*inst.circuit, rng);
    CHECK(wmc_exact(p, w) == reference);
  }
}

TEST_CASE("sample: single-model circuit always returns that model") {
  Circuit c = compile_decision_dnnf(parse_dimacs_string("p cnf 2 2\n1 0\n2 0\n"));
  AnnotatedPc pc(c, WeightFn::uniform(2));
  Rng rng(3);
  for (int i = 0; i < 20; ++i) CHECK(pc.sample(rng) == bits({1, 1}));
}

TEST_CASE("sample: unsatisfiable circuit is an error") {
  Circuit f = compile_decision_dnnf(parse_dimacs_string("p cnf 1 2\n1 0\n-1 0\n"));
  AnnotatedPc pc(f, WeightFn::uniform(1));
  Rng rng(0);
  CHECK_THROWS_AS(pc.sample(rng), StructuralError);
}

TEST_CASE("sample: empirical frequency matches the weight") {
  AnnotatedPc pc(valid_1var_circuit(), WeightFn(std::vector<Rational>{Rational(3, 4)}));
  Rng rng(17);
  int ones = 0;
  const int draws = 10000;
  for (int i = 0; i < draws; ++i) ones += pc.sample(rng)[0];
  double freq = double(ones) / draws;
  CHECK(freq > 0.73);
  CHECK(freq < 0.77);
}

TEST_CASE("sample: fixed seed is reproducible") {
  auto inst = generate_satisfiable_instance(8, 33, 8);
  AnnotatedPc pc(*inst.circuit, WeightFn::uniform(8));
  Rng a(99), b(99);
  for (int i = 0; i < 50; ++i) CHECK(pc.sample(a) == pc.sample(b));
}

TEST_CASE("sample: chosen-branch probabilities multiply to the pmf") {
  // Walk each model's resolution path through the smoothed circuit and check
  // that the product of wmc(child)/wmc(or-node) equals w(sigma)/w(phi).
  for (uint64_t seed = 0; seed < 5; ++seed) {
    uint32_t n = 5 + static_cast<uint32_t>(seed % 3);
    auto inst = generate_satisfiable_instance(n, default_clause_count(n), 3000 + seed);
    Rng wr(seed);
    WeightFn w = random_weights(n, wr);
    AnnotatedPc pc(*inst.circuit, w);
    const Circuit& s = pc.smoothed();
    const auto& ann = pc.node_wmc();

    for (const auto& sigma : enumerate_models(*inst.circuit)) {
      Rational path_prob(1);
      std::vector<NodeId> stack{s.root()};
      while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        const Node& node = s.node(id);
        if (node.kind == NodeKind::And) {
          for (NodeId ch : node.children) stack.push_back(ch);
        } else if (node.kind == NodeKind::Or) {
          int satisfied = 0;
          for (NodeId ch : node.children) {
            // evaluate the child subtree under sigma
            std::vector<uint8_t> val(s.node_count(), 2);
            std::vector<NodeId> order;
            std::vector<NodeId> st2{ch};
            while (!st2.empty()) {
              NodeId x = st2.back();
              st2.pop_back();
              order.push_back(x);
              for (NodeId y : s.node(x).children) st2.push_back(y);
            }
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
              const Node& m = s.node(*it);
              switch (m.kind) {
                case NodeKind::True: val[*it] = 1; break;
                case NodeKind::False: val[*it] = 0; break;
                case NodeKind::PosLit: val[*it] = sigma[m.var - 1]; break;
                case NodeKind::NegLit: val[*it] = sigma[m.var - 1] ? 0 : 1; break;
                case NodeKind::And: {
                  uint8_t acc = 1;
                  for (NodeId y : m.children) acc &= val[y];
                  val[*it] = acc;
                  break;
                }
                case NodeKind::Or: {
                  uint8_t acc = 0;
                  for (NodeId y : m.children) acc |= val[y];
                  val[*it] = acc;
                  break;
                }
              }
            }
            if (val[ch] == 1) {
              ++satisfied;
              path_prob *= ann[ch] / ann[id];
              stack.push_back(ch);
            }
          }
          CHECK(satisfied == 1);  // determinism: exactly one child per model
        }
      }
      CHECK(path_prob == pc.weight_of(sigma) / pc.wmc());
    }
  }
}

TEST_CASE("awct: exact mode returns the count, noise mode stays in range") {
  auto inst = generate_satisfiable_instance(6, 25, 6);
  WeightFn w = WeightFn::uniform(6);
  AnnotatedPc pc(*inst.circuit, w);
  Rng rng(1);

  OracleParams exact_params(Rational(1, 10), Rational(1, 100));
  CHECK(awct(pc, exact_params, rng) == pc.wmc());

  // alpha = 1/10, beta = 0: factor always within [10/11, 11/10]
  OracleParams noise_params(Rational(1, 10), Rational(0));
  for (int i = 0; i < 500; ++i) {
    Rational ratio = awct(pc, noise_params, rng, true) / pc.wmc();
    CHECK(ratio >= Rational(10, 11));
    CHECK(ratio <= Rational(11, 10));
  }

  // failures happen at most around beta of the time
  OracleParams fail_params(Rational(1, 10), Rational(1, 10));
  int out_of_range = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    Rational ratio = awct(pc, fail_params, rng, true) / pc.wmc();
    if (ratio < Rational(10, 11) || ratio > Rational(11, 10)) ++out_of_range;
  }
  CHECK(out_of_range > trials / 10 - 120);
  CHECK(out_of_range < trials / 10 + 120);

  // alpha -> 0 collapses the interval
  OracleParams zero(Rational(0), Rational(0));
  CHECK(awct(pc, zero, rng, true) == pc.wmc());
}

TEST_CASE("samp: bottom frequency and degenerate noise") {
  auto inst = generate_satisfiable_instance(5, 21, 12);
  AnnotatedPc pc(*inst.circuit, WeightFn::uniform(5));

  // exact mode never fails
  Rng rng(2);
  OracleParams p(Rational(1, 10), Rational(1, 100));
  for (int i = 0; i < 200; ++i) CHECK_FALSE(samp(pc, p, rng).is_bottom());

  // noise mode: bottom frequency <= 0.015 over 10^4 trials at beta = 1/100
  int bottoms = 0;
  const int trials = 10000;
  NoisySamplingOracle noisy;
  for (int i = 0; i < trials; ++i) {
    Rng r = Rng::stream(7, static_cast<uint64_t>(i));
    if (noisy.draw(pc, p, r).is_bottom()) ++bottoms;
  }
  CHECK(bottoms <= 150);

  // alpha = 0, beta = 0 reproduces the exact sampler draw for draw
  OracleParams degenerate(Rational(0), Rational(0));
  Rng r1(42), r2(42);
  for (int i = 0; i < 50; ++i) {
    SampleOutcome a = samp(pc, degenerate, r1, true);
    CHECK(*a.assignment == pc.sample(r2));
  }
}

TEST_CASE("samp: noisy sampler ratio bound holds empirically") {
  // Small circuit, compare noisy-sampler frequencies against the exact pmf.
  AnnotatedPc pc(valid_circuit(2), WeightFn::uniform(2));
  ExactPmf pmf = exact_pmf(valid_circuit(2), WeightFn::uniform(2));
  Rational alpha(1, 2);
  OracleParams p(alpha, Rational(0));
  NoisySamplingOracle noisy;
  std::map<Assignment, int> counts;
  const int trials = 40000;
  for (int i = 0; i < trials; ++i) {
    Rng r = Rng::stream(21, static_cast<uint64_t>(i));
    counts[*noisy.draw(pc, p, r).assignment] += 1;
  }
  for (const auto& [sigma, cnt] : counts) {
    double ratio = (double(cnt) / trials) / rational_to_double(pmf.at(sigma));
    CHECK(ratio > 1.0 / 1.55);
    CHECK(ratio < 1.55);
  }
}

TEST_CASE("netpoly: direct formula on a literal") {
  WeightFn w = WeightFn::uniform(1);
  CHECK(netpoly_eval(lit_circuit(), w, IntAssignment{3}) == 3);
}

TEST_CASE("netpoly: interpolates the pmf at 0/1 corners") {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    uint32_t n = 4 + static_cast<uint32_t>(seed);
    auto inst = generate_satisfiable_instance(n, default_clause_count(n), 4000 + seed);
    Rng wr(seed + 3);
    WeightFn w = random_weights(n, wr);
    AnnotatedPc pc(*inst.circuit, w);
    ExactPmf pmf = exact_pmf(*inst.circuit, w);
    for (uint64_t idx = 0; idx < (uint64_t(1) << n); ++idx) {
      IntAssignment theta(n);
      Assignment sigma(n);
      for (uint32_t v = 1; v <= n; ++v) {
        uint64_t bit = (idx >> (n - v)) & 1;
        theta[v - 1] = bit;
        sigma[v - 1] = static_cast<uint8_t>(bit);
      }
      CHECK(pc.netpoly(theta) == pmf.at(sigma));
    }
  }
}

TEST_CASE("netpoly: identical distributions agree at random integer points") {
  auto inst = generate_satisfiable_instance(6, 25, 31);
  Rng wr(9);
  WeightFn w = random_weights(6, wr);
  AnnotatedPc a(*inst.circuit, w);
  AnnotatedPc b(smooth(*inst.circuit), w);
  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    IntAssignment theta(6);
    for (auto& t : theta) t = rng.uniform(1, 60);
    CHECK(a.netpoly(theta) == b.netpoly(theta));
  }
}

TEST_CASE("netpoly: unsatisfiable circuit is an error") {
  Circuit f = compile_decision_dnnf(parse_dimacs_string("p cnf 1 2\n1 0\n-1 0\n"));
  AnnotatedPc pc(f, WeightFn::uniform(1));
  CHECK_THROWS_AS(pc.netpoly(IntAssignment{1}), StructuralError);
}
