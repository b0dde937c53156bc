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

#include "pcteq/closeness.hpp"

#include <mpfr.h>

#include <thread>

#include "pcteq/errors.hpp"

namespace pcteq {

TeqParams::TeqParams(Rational e, Rational h, Rational d, SampleSizeMode m)
    : eps(std::move(e)), eta(std::move(h)), delta(std::move(d)), mode(m) {
  if (eps < 0 || eps >= 1) throw DomainError("eps must be in [0,1)");
  if (eta <= eps || eta > 1) throw DomainError("eta must satisfy eps < eta <= 1");
  if (delta <= 0 || delta >= 1) throw DomainError("delta must be in (0,1)");
}

namespace {

// ceil(ln(log_arg) * mult) on a certified enclosure: both endpoints are
// computed with directed rounding and the precision is raised until their
// ceilings agree. log_arg > 1 makes the bound irrational, so this terminates.
Integer certified_ceil_log_mult(const Rational& log_arg, const Rational& mult) {
  for (mpfr_prec_t prec = 128; prec <= (mpfr_prec_t(1) << 20); prec *= 2) {
    Integer bounds[2];
    for (int side = 0; side < 2; ++side) {
      mpfr_rnd_t rnd = side == 0 ? MPFR_RNDD : MPFR_RNDU;
      mpfr_t t;
      mpfr_init2(t, prec);
      mpfr_set_q(t, log_arg.get_mpq_t(), rnd);
      mpfr_log(t, t, rnd);
      mpfr_mul_q(t, t, mult.get_mpq_t(), rnd);
      mpfr_get_z(bounds[side].get_mpz_t(), t, MPFR_RNDU);  // ceil
      mpfr_clear(t);
    }
    if (bounds[0] == bounds[1]) return bounds[0];
  }
  throw Error("sample size bound did not separate from an integer");
}

// Largest 128-bit dyadic rational <= sqrt(x) - 1 (counter tolerance; inward
// rounding keeps a noise oracle built on it conforming).
Rational sqrt_minus_one_lower(const Rational& x) {
  mpfr_t t;
  mpfr_init2(t, 128);
  mpfr_set_q(t, x.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(t, t, MPFR_RNDD);
  mpfr_sub_ui(t, t, 1, MPFR_RNDD);
  Rational q;
  mpfr_get_q(q.get_mpq_t(), t);
  mpfr_clear(t);
  if (q < 0) q = 0;
  return q;
}

}  // namespace

uint64_t sample_size(const TeqParams& params) {
  Rational g = params.gamma();
  Rational g2 = g * g;
  Rational log_arg, mult;
  if (params.mode == SampleSizeMode::Conservative) {
    log_arg = 4 / params.delta;
    mult = 2 / g2;
  } else {
    log_arg = 2 / params.delta;
    mult = 1 / (2 * g2);
  }
  Integer m = certified_ceil_log_mult(log_arg, mult);
  if (m < 1) m = 1;
  if (!m.fits_ulong_p())
    throw CapabilityError("sample size " + m.get_str() + " does not fit in a machine word");
  return static_cast<uint64_t>(m.get_ui());
}

TeqResult teq(const AnnotatedPc& pc1, const AnnotatedPc& pc2, const TeqParams& params,
              uint64_t seed, const CountingOracle& counter, const SamplingOracle& sampler,
              unsigned threads) {
  if (pc1.n_vars() != pc2.n_vars())
    throw InputError("teq requires circuits over the same variable set");
  if (!pc1.satisfiable() || !pc2.satisfiable())
    throw InputError("teq requires satisfiable circuits");

  const Rational gamma = params.gamma();
  const uint64_t m = sample_size(params);
  const Rational m_rat(Integer(static_cast<unsigned long>(m)));
  const Rational threshold = m_rat * (params.eps + gamma);

  const OracleParams count_params(sqrt_minus_one_lower(1 + gamma / 4), params.delta / 8);
  Rng rng_k1 = Rng::stream(seed, m);
  Rng rng_k2 = Rng::stream(seed, m + 1);
  const Rational k1 = counter.count(pc1, count_params, rng_k1);
  const Rational k2 = counter.count(pc2, count_params, rng_k2);

  const OracleParams samp_params(gamma / (4 * params.eta - 2 * gamma),
                                 params.delta / (4 * m_rat));

  std::vector<TeqIteration> iterations(m);
  auto run_range = [&](uint64_t begin, uint64_t end) {
    for (uint64_t i = begin; i < end; ++i) {
      Rng rng = Rng::stream(seed, i);
      SampleOutcome out = sampler.draw(pc1, samp_params, rng);
      TeqIteration it;
      if (!out.is_bottom()) {
        const Assignment& sigma = *out.assignment;
        it.s1 = pc1.weight_of(sigma);
        it.s2 = evaluate(pc2.circuit(), sigma) ? pc2.weight_of(sigma) : Rational(0);
        it.r = (it.s2 * k1) / (k2 * it.s1);
        if (it.r < 1) it.gamma_i = 1 - it.r;
        it.sigma = sigma;
      }
      iterations[i] = std::move(it);
    }
  };

  unsigned t = threads == 0 ? 1 : threads;
  if (t <= 1 || m < 2) {
    run_range(0, m);
  } else {
    t = static_cast<unsigned>(std::min<uint64_t>(t, m));
    std::vector<std::thread> pool;
    pool.reserve(t);
    uint64_t chunk = (m + t - 1) / t;
    for (unsigned k = 0; k < t; ++k) {
      uint64_t b = k * chunk, e = std::min(m, b + chunk);
      if (b >= e) break;
      pool.emplace_back(run_range, b, e);
    }
    for (auto& th : pool) th.join();
  }

  Verdict v;
  v.m = m;
  v.statistic = 0;
  for (const auto& it : iterations) {
    v.statistic += it.gamma_i;
    if (!it.sigma) ++v.skipped;
  }
  v.threshold = threshold;
  v.decision = v.statistic <= threshold ? Decision::Accept : Decision::Reject;
  return TeqResult{std::move(v), TeqTrace{k1, k2, std::move(iterations)}};
}

Verdict peq(const AnnotatedPc& pc1, const AnnotatedPc& pc2, const Rational& delta,
            uint64_t seed) {
  if (pc1.n_vars() != pc2.n_vars())
    throw InputError("peq requires circuits over the same variable set");
  if (!pc1.satisfiable() || !pc2.satisfiable())
    throw InputError("peq requires satisfiable circuits");
  if (delta <= 0 || delta >= 1) throw DomainError("delta must be in (0,1)");

  const uint32_t n = pc1.n_vars();
  Integer m_z = ceil_rational(Rational(static_cast<unsigned long>(n)) / delta);
  if (!m_z.fits_ulong_p())
    throw CapabilityError("peq grid bound " + m_z.get_str() + " does not fit in a machine word");
  const uint64_t m = static_cast<uint64_t>(m_z.get_ui());

  Rng rng(seed);
  IntAssignment theta(n);
  for (uint32_t i = 0; i < n; ++i) theta[i] = rng.uniform(1, m);

  Rational pi1 = pc1.netpoly(theta);
  Rational pi2 = pc2.netpoly(theta);

  Verdict v;
  v.m = m;
  v.skipped = 0;
  v.statistic = abs(pi1 - pi2);
  v.threshold = 0;
  v.decision = pi1 == pi2 ? Decision::Accept : Decision::Reject;
  return v;
}

TvBoundReport tv_bound_report(const Verdict& verdict, const TeqParams& params) {
  if (verdict.m == 0) throw InputError("tv_bound_report requires a completed run");
  TvBoundReport r;
  r.gamma = params.gamma();
  r.threshold = params.eps + r.gamma;
  r.m = verdict.m;
  r.skipped = verdict.skipped;
  r.estimate = verdict.statistic / Rational(Integer(static_cast<unsigned long>(verdict.m)));
  return r;
}

}  // namespace pcteq
