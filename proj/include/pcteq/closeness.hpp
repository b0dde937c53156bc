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
#include <vector>

#include "pcteq/engine.hpp"

namespace pcteq {

/// Two published sample-size formulas exist for the same test; `conservative`
/// matches the Chernoff constants of the correctness proof,
/// m = ceil(2 ln(4/delta) / gamma^2), while `experiment` is the variant the
/// reported run counts are consistent with, m = ceil(ln(2/delta) / (2
/// gamma^2)). Natural logarithms; gamma = (eta - eps)/2.
enum class SampleSizeMode : uint8_t { Conservative, Experiment };

/// Closeness-test parameters: accept when the distributions are eps-close,
/// reject when eta-far, each with probability >= 1 - delta.
struct TeqParams {
  Rational eps;    // in [0, 1)
  Rational eta;    // in (eps, 1]
  Rational delta;  // in (0, 1)
  SampleSizeMode mode = SampleSizeMode::Experiment;

  TeqParams(Rational e, Rational h, Rational d,
            SampleSizeMode m = SampleSizeMode::Experiment);

  Rational gamma() const { return (eta - eps) / 2; }
};

enum class Decision : uint8_t { Accept, Reject };

struct Verdict {
  Decision decision;
  Rational statistic;  // sum of the per-iteration Gamma values
  Rational threshold;  // m (eps + gamma); Accept iff statistic <= threshold
  uint64_t m = 0;
  uint64_t skipped = 0;  // iterations whose sampler call returned bottom
};

struct TeqIteration {
  std::optional<Assignment> sigma;  // nullopt = bottom
  Rational s1, s2;                  // literal weights; s2 = 0 when sigma is not a model of phi2
  Rational r;                       // (s2/k2)(k1/s1)
  Rational gamma_i;                 // 1 - r when r < 1, else 0
};

struct TeqTrace {
  Rational k1, k2;  // approximate weighted counts
  std::vector<TeqIteration> iterations;
};

struct TeqResult {
  Verdict verdict;
  TeqTrace trace;
};

/// Number of sampler calls for the given parameters. The ceiling is taken on
/// a certified enclosure of the transcendental bound (directed-rounding
/// logs), so it is exact.
uint64_t sample_size(const TeqParams& params);

/// The closeness test. Draws m samples from (phi1, w1) only; per sample
/// computes r = (s2/k2)(k1/s1) with s2 zeroed when the sample falsifies
/// phi2, accumulates Gamma_i = max(0, 1-r), and accepts iff the sum is at
/// most m(eps+gamma) (inclusive). Counter tolerance sqrt(1+gamma/4)-1
/// (passed as a 128-bit inward dyadic rounding) with confidence delta/8;
/// sampler tolerance gamma/(4 eta - 2 gamma) with confidence delta/(4m).
/// Bottom samples leave Gamma_i = 0 and are counted in `skipped`.
///
/// Per-iteration randomness comes from counter-split streams of `seed`, so
/// results are bit-identical for any `threads` value; both circuits must be
/// satisfiable and over the same variable count.
TeqResult teq(const AnnotatedPc& pc1, const AnnotatedPc& pc2, const TeqParams& params,
              uint64_t seed, const CountingOracle& counter = ExactCountingOracle{},
              const SamplingOracle& sampler = ExactSamplingOracle{}, unsigned threads = 1);

/// The equivalence test: evaluates both network polynomials at one uniform
/// theta in [m]^n with m = ceil(n/delta), exact-rational comparison. Accepts
/// with probability 1 on equivalent distributions; rejects with probability
/// >= 1 - delta otherwise.
Verdict peq(const AnnotatedPc& pc1, const AnnotatedPc& pc2, const Rational& delta,
            uint64_t seed);

/// Diagnostic summary of a completed run: statistic/m is a point estimate of
/// the one-sided TV component the test thresholds.
struct TvBoundReport {
  Rational estimate;   // statistic / m
  Rational gamma;
  Rational threshold;  // eps + gamma (per-sample scale)
  uint64_t m = 0;
  uint64_t skipped = 0;
};

TvBoundReport tv_bound_report(const Verdict& verdict, const TeqParams& params);

}  // namespace pcteq
