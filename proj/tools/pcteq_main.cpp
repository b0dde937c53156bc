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

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "pcteq/benchgen.hpp"
#include "pcteq/closeness.hpp"
#include "pcteq/engine.hpp"
#include "pcteq/errors.hpp"
#include "pcteq/formats.hpp"
#include "pcteq/oracle.hpp"

using json = nlohmann::ordered_json;
using namespace pcteq;

namespace {

constexpr int kExitAccept = 0;
constexpr int kExitReject = 1;
constexpr int kExitError = 2;
constexpr int kExitUsage = 64;

enum class Format { Text, Json, Csv };

struct GlobalOpts {
  std::optional<uint64_t> seed;
  Format format = Format::Text;
  SampleSizeMode mode = SampleSizeMode::Experiment;
  bool swap = false;
  unsigned threads = 1;
};

uint64_t resolve_seed(const GlobalOpts& g) {
  if (g.seed) return *g.seed;
  std::random_device rd;
  return (uint64_t(rd()) << 32) ^ rd();
}

double elapsed_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Circuit load_nnf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_nnf(in);
}

Cnf load_cnf(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_dimacs(in);
}

WeightFn load_weights(const std::string& path, uint32_t n_vars) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_weights(in, n_vars);
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

std::string decision_str(Decision d) { return d == Decision::Accept ? "Accept" : "Reject"; }

void emit(const GlobalOpts& g, const json& record, const std::string& csv_row) {
  switch (g.format) {
    case Format::Json: std::cout << record.dump(2) << '\n'; break;
    case Format::Csv: std::cout << csv_row << '\n'; break;
    case Format::Text:
      for (const auto& [key, value] : record.items()) {
        if (key == "subcommand" || key == "inputs") continue;
        if (value.is_string())
          std::cout << key << ": " << value.get<std::string>() << '\n';
        else
          std::cout << key << ": " << value.dump() << '\n';
      }
      break;
  }
}

std::string fmt_double(double x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

// ------------------------------------------------------------ subcommands

int run_count(const GlobalOpts& g, const std::string& nnf_path, const std::string& w_path) {
  auto t0 = std::chrono::steady_clock::now();
  Circuit c = load_nnf(nnf_path);
  WeightFn w = w_path.empty() ? WeightFn::uniform(c.n_vars()) : load_weights(w_path, c.n_vars());
  Rational wmc = wmc_exact(c, w);

  json rec;
  rec["subcommand"] = "count";
  rec["inputs"] = json::array({nnf_path, w_path});
  rec["n_vars"] = c.n_vars();
  rec["wmc"] = rational_to_string(wmc);
  rec["wmc_decimal"] = rational_to_double(wmc);
  rec["seconds"] = elapsed_since(t0);
  emit(g, rec,
       stem_of(nnf_path) + "," + rational_to_string(wmc) + "," + fmt_double(elapsed_since(t0)));
  return kExitAccept;
}

int run_sample(const GlobalOpts& g, const std::string& nnf_path, const std::string& w_path,
               uint64_t n_samples) {
  auto t0 = std::chrono::steady_clock::now();
  uint64_t seed = resolve_seed(g);
  Circuit c = load_nnf(nnf_path);
  WeightFn w = w_path.empty() ? WeightFn::uniform(c.n_vars()) : load_weights(w_path, c.n_vars());
  AnnotatedPc pc(c, w);

  json samples = json::array();
  for (uint64_t i = 0; i < n_samples; ++i) {
    Rng rng = Rng::stream(seed, i);
    Assignment sigma = pc.sample(rng);
    std::string bits(sigma.size(), '0');
    for (size_t k = 0; k < sigma.size(); ++k)
      if (sigma[k]) bits[k] = '1';
    samples.push_back(bits);
  }

  if (g.format == Format::Text) {
    std::cout << "seed: " << seed << '\n';
    for (const auto& s : samples) std::cout << s.get<std::string>() << '\n';
  } else {
    json rec;
    rec["subcommand"] = "sample";
    rec["inputs"] = json::array({nnf_path, w_path});
    rec["seed"] = seed;
    rec["n"] = n_samples;
    rec["samples"] = samples;
    rec["seconds"] = elapsed_since(t0);
    emit(g, rec,
         stem_of(nnf_path) + "," + std::to_string(n_samples) + "," + std::to_string(seed));
  }
  return kExitAccept;
}

int run_tv_exact(const GlobalOpts& g, std::vector<std::string> paths, uint32_t guard) {
  auto t0 = std::chrono::steady_clock::now();
  if (g.swap) {
    std::swap(paths[0], paths[2]);
    std::swap(paths[1], paths[3]);
  }
  Circuit c1 = load_nnf(paths[0]);
  Circuit c2 = load_nnf(paths[2]);
  WeightFn w1 = load_weights(paths[1], c1.n_vars());
  WeightFn w2 = load_weights(paths[3], c2.n_vars());
  Rational dtv = tv_exact(c1, w1, c2, w2, guard);

  json rec;
  rec["subcommand"] = "tv-exact";
  rec["inputs"] = json(paths);
  rec["dtv"] = rational_to_string(dtv);
  rec["dtv_decimal"] = rational_to_double(dtv);
  rec["seconds"] = elapsed_since(t0);
  emit(g, rec,
       stem_of(paths[0]) + "," + rational_to_string(dtv) + "," + fmt_double(elapsed_since(t0)));
  return kExitAccept;
}

int run_teq(const GlobalOpts& g, std::vector<std::string> paths, const std::string& eps_s,
            const std::string& eta_s, const std::string& delta_s, const std::string& dtv_s) {
  auto t0 = std::chrono::steady_clock::now();
  uint64_t seed = resolve_seed(g);
  if (g.swap) {
    std::swap(paths[0], paths[2]);
    std::swap(paths[1], paths[3]);
  }
  Circuit c1 = load_nnf(paths[0]);
  Circuit c2 = load_nnf(paths[2]);
  AnnotatedPc pc1(c1, load_weights(paths[1], c1.n_vars()));
  AnnotatedPc pc2(c2, load_weights(paths[3], c2.n_vars()));

  TeqParams params(rational_from_string(eps_s), rational_from_string(eta_s),
                   rational_from_string(delta_s), g.mode);
  TeqResult res =
      teq(pc1, pc2, params, seed, ExactCountingOracle{}, ExactSamplingOracle{}, g.threads);
  TvBoundReport rep = tv_bound_report(res.verdict, params);
  double secs = elapsed_since(t0);

  json rec;
  rec["subcommand"] = "teq";
  rec["inputs"] = json(paths);
  rec["eps"] = rational_to_string(params.eps);
  rec["eta"] = rational_to_string(params.eta);
  rec["delta"] = rational_to_string(params.delta);
  rec["mode"] = g.mode == SampleSizeMode::Experiment ? "experiment" : "conservative";
  rec["seed"] = seed;
  rec["swap"] = g.swap;
  rec["threads"] = g.threads;
  rec["m"] = res.verdict.m;
  rec["skipped"] = res.verdict.skipped;
  rec["statistic"] = rational_to_string(res.verdict.statistic);
  rec["threshold"] = rational_to_string(res.verdict.threshold);
  rec["estimate"] = rational_to_string(rep.estimate);
  if (!dtv_s.empty()) rec["dtv"] = rational_to_string(rational_from_string(dtv_s));
  rec["result"] = decision_str(res.verdict.decision);
  rec["seconds"] = secs;

  std::string csv = stem_of(paths[0]) + "," + rational_to_string(params.eps) + "," +
                    rational_to_string(params.eta) + "," + (dtv_s.empty() ? "" : dtv_s) + "," +
                    (res.verdict.decision == Decision::Accept ? "A" : "R") + "," +
                    fmt_double(secs);
  emit(g, rec, csv);
  return res.verdict.decision == Decision::Accept ? kExitAccept : kExitReject;
}

int run_peq(const GlobalOpts& g, std::vector<std::string> paths, const std::string& delta_s) {
  auto t0 = std::chrono::steady_clock::now();
  uint64_t seed = resolve_seed(g);
  if (g.swap) {
    std::swap(paths[0], paths[2]);
    std::swap(paths[1], paths[3]);
  }
  Circuit c1 = load_nnf(paths[0]);
  Circuit c2 = load_nnf(paths[2]);
  AnnotatedPc pc1(c1, load_weights(paths[1], c1.n_vars()));
  AnnotatedPc pc2(c2, load_weights(paths[3], c2.n_vars()));
  Verdict v = peq(pc1, pc2, rational_from_string(delta_s), seed);
  double secs = elapsed_since(t0);

  json rec;
  rec["subcommand"] = "peq";
  rec["inputs"] = json(paths);
  rec["delta"] = delta_s;
  rec["seed"] = seed;
  rec["m"] = v.m;
  rec["difference"] = rational_to_string(v.statistic);
  rec["result"] = decision_str(v.decision);
  rec["seconds"] = secs;
  emit(g, rec,
       stem_of(paths[0]) + ",,,," + (v.decision == Decision::Accept ? "A" : "R") + "," +
           fmt_double(secs));
  return v.decision == Decision::Accept ? kExitAccept : kExitReject;
}

TvTarget parse_target(const std::string& spec) {
  auto eq = spec.find('=');
  if (eq == std::string::npos)
    throw Error("target must look like close=0.01 or far=0.2, got '" + spec + "'");
  std::string kind = spec.substr(0, eq);
  Rational bound = rational_from_string(spec.substr(eq + 1));
  if (kind == "close") return TvTarget::close(bound);
  if (kind == "far") return TvTarget::far(bound);
  throw Error("unknown target kind '" + kind + "'");
}

int run_gen(const GlobalOpts& g, const std::string& out_dir, uint32_t n_vars,
            uint32_t n_clauses, uint32_t count, const std::string& target_s,
            unsigned precision) {
  auto t0 = std::chrono::steady_clock::now();
  uint64_t seed = resolve_seed(g);
  if (n_clauses == 0) n_clauses = default_clause_count(n_vars);
  TvTarget target = parse_target(target_s);

  std::filesystem::create_directories(out_dir);
  json manifest;
  manifest["seed"] = seed;
  manifest["n_vars"] = n_vars;
  manifest["n_clauses"] = n_clauses;
  manifest["target"] = target_s;
  manifest["weight_precision"] = precision;
  json pairs = json::array();

  uint64_t attempt = 0;
  for (uint32_t i = 0; i < count; ++i) {
    // A far target can be unreachable on a particular instance; draw fresh
    // instances until the perturbation search succeeds.
    for (;;) {
      uint64_t inst_seed = seed + attempt;
      ++attempt;
      auto inst = generate_satisfiable_instance(n_vars, n_clauses, inst_seed * 1000003ULL);
      Rng rng = Rng::stream(inst_seed, 1);
      WeightFn w1 = random_weights(n_vars, rng, precision);
      std::optional<PerturbedPair> pair;
      try {
        pair = make_pair_with_target(inst.circuit, w1, target, rng);
      } catch (const DomainError&) {
        continue;  // infeasible on this instance
      }

      std::string name = "pair_" + std::to_string(i);
      auto path = [&](const std::string& ext) {
        return (std::filesystem::path(out_dir) / (name + ext)).string();
      };
      {
        std::ofstream f(path(".cnf"));
        write_dimacs(inst.cnf, f);
      }
      {
        std::ofstream f(path(".nnf"));
        write_nnf(*inst.circuit, f);
      }
      {
        std::ofstream f(path(".w1"));
        write_weights(pair->w1, f);
      }
      {
        std::ofstream f(path(".w2"));
        write_weights(pair->w2, f);
      }

      json entry;
      entry["name"] = name;
      entry["cnf"] = name + ".cnf";
      entry["nnf"] = name + ".nnf";
      entry["weights1"] = name + ".w1";
      entry["weights2"] = name + ".w2";
      entry["instance_seed"] = inst_seed;
      entry["discarded_unsat"] = inst.discarded;
      entry["perturbed_var"] = pair->var;
      entry["dtv"] = rational_to_string(pair->dtv_closed_form);
      entry["dtv_decimal"] = rational_to_double(pair->dtv_closed_form);
      pairs.push_back(entry);
      break;
    }
  }
  manifest["pairs"] = pairs;

  std::string manifest_path = (std::filesystem::path(out_dir) / "manifest.json").string();
  {
    std::ofstream f(manifest_path);
    f << manifest.dump(2) << '\n';
  }
  if (g.format == Format::Json)
    std::cout << manifest.dump(2) << '\n';
  else
    std::cout << "wrote " << pairs.size() << " pair(s) to " << out_dir << " (manifest "
              << manifest_path << ", seed " << seed << ", "
              << fmt_double(elapsed_since(t0)) << "s)\n";
  return kExitAccept;
}

int run_compile(const GlobalOpts& g, const std::string& cnf_path, const std::string& out_path,
                bool do_smooth, uint32_t guard) {
  auto t0 = std::chrono::steady_clock::now();
  Cnf f = load_cnf(cnf_path);
  Circuit c = compile_decision_dnnf(f, guard);
  if (do_smooth) c = smooth(c);

  if (out_path.empty()) {
    write_nnf(c, std::cout);
  } else {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write '" + out_path + "'");
    write_nnf(c, out);
  }
  if (g.format == Format::Json) {
    json rec;
    rec["subcommand"] = "compile";
    rec["inputs"] = json::array({cnf_path});
    rec["output"] = out_path;
    rec["n_vars"] = c.n_vars();
    rec["nodes"] = c.node_count();
    rec["edges"] = c.edge_count();
    rec["satisfiable"] = c.node(c.root()).kind != NodeKind::False;
    rec["seconds"] = elapsed_since(t0);
    std::cout << rec.dump(2) << '\n';
  } else if (!out_path.empty()) {
    std::cerr << "c compiled " << cnf_path << " -> " << out_path << " (" << c.node_count()
              << " nodes)\n";
  }
  return kExitAccept;
}

int run_check(const GlobalOpts& g, const std::string& nnf_path, uint32_t semantic_limit) {
  auto t0 = std::chrono::steady_clock::now();
  Circuit c = load_nnf(nnf_path);
  StructuralReport r = analyze_structure(c, semantic_limit);

  json rec;
  rec["subcommand"] = "check";
  rec["inputs"] = json::array({nnf_path});
  rec["n_vars"] = c.n_vars();
  rec["nodes"] = c.node_count();
  rec["edges"] = c.edge_count();
  rec["size"] = c.size();
  rec["decomposable"] = r.decomposable;
  rec["deterministic"] = to_string(r.deterministic);
  rec["smooth"] = r.smooth;
  rec["seconds"] = elapsed_since(t0);
  emit(g, rec,
       stem_of(nnf_path) + "," + (r.decomposable ? "d" : "-") + "," +
           to_string(r.deterministic) + "," + (r.smooth ? "s" : "-"));
  return kExitAccept;
}

int run_reduce(const GlobalOpts& g, const std::string& nnf_path, const std::string& w_path,
               const std::string& out_path, int approx_bits) {
  auto t0 = std::chrono::steady_clock::now();
  Circuit c = load_nnf(nnf_path);
  WeightFn w = load_weights(w_path, c.n_vars());

  DyadicWeightFn dw;
  Rational max_rel_error(0);
  bool approximated = false;
  try {
    dw = as_dyadic(w);
  } catch (const DomainError&) {
    if (approx_bits <= 0)
      throw DomainError(
          "weights are not dyadic; pass --approx-bits <p> to round them explicitly "
          "(no silent approximation)");
    DyadicApprox a = dyadic_approx(w, static_cast<unsigned>(approx_bits));
    dw = std::move(a.weights);
    max_rel_error = a.max_rel_error;
    approximated = true;
  }

  Circuit out = weighted_to_unweighted(c, dw);
  if (out_path.empty()) {
    write_nnf(out, std::cout);
  } else {
    std::ofstream f(out_path);
    if (!f) throw Error("cannot write '" + out_path + "'");
    write_nnf(out, f);
  }

  if (g.format == Format::Json) {
    json rec;
    rec["subcommand"] = "reduce";
    rec["inputs"] = json::array({nnf_path, w_path});
    rec["output"] = out_path;
    rec["precision"] = dw.precision;
    rec["approximated"] = approximated;
    rec["max_rel_error"] = rational_to_string(max_rel_error);
    rec["n_vars_in"] = c.n_vars();
    rec["n_vars_out"] = out.n_vars();
    rec["nodes"] = out.node_count();
    rec["seconds"] = elapsed_since(t0);
    std::cout << rec.dump(2) << '\n';
  } else if (!out_path.empty()) {
    std::cerr << "c reduced to " << out.n_vars() << " variables, " << out.node_count()
              << " nodes\n";
  }
  return kExitAccept;
}

int run_netpoly(const GlobalOpts& g, const std::string& nnf_path, const std::string& w_path,
                const std::string& theta_s) {
  auto t0 = std::chrono::steady_clock::now();
  Circuit c = load_nnf(nnf_path);
  WeightFn w = load_weights(w_path, c.n_vars());

  IntAssignment theta;
  std::istringstream ss(theta_s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      theta.push_back(std::stoull(tok));
    } catch (const std::exception&) {
      throw Error("theta coordinate '" + tok + "' is not a nonnegative integer");
    }
  }
  if (theta.size() != c.n_vars())
    throw InputError("theta has " + std::to_string(theta.size()) +
                     " coordinates, circuit has " + std::to_string(c.n_vars()) + " variables");

  Rational value = netpoly_eval(c, w, theta);
  json rec;
  rec["subcommand"] = "netpoly";
  rec["inputs"] = json::array({nnf_path, w_path});
  rec["theta"] = theta_s;
  rec["value"] = rational_to_string(value);
  rec["value_decimal"] = rational_to_double(value);
  rec["seconds"] = elapsed_since(t0);
  emit(g, rec, stem_of(nnf_path) + "," + rational_to_string(value));
  return kExitAccept;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcteq - weighted d-DNNF toolkit and distribution closeness tester"};
  app.require_subcommand(1);

  GlobalOpts g;
  uint64_t seed_opt = 0;
  bool seed_given = false;
  std::string format_s = "text", mode_s = "experiment";
  app.add_option("--seed", seed_opt, "RNG seed (auto-chosen and reported if absent)")
      ->each([&](const std::string&) { seed_given = true; });
  app.add_option("--format", format_s, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--mode", mode_s, "Sample-size mode for teq")
      ->check(CLI::IsMember({"conservative", "experiment"}));
  app.add_flag("--swap", g.swap, "Swap the two (circuit, weights) pairs");
  app.add_option("--threads", g.threads, "Worker threads for teq iterations (1 = reference)");

  auto* count_cmd = app.add_subcommand("count", "Exact weighted model count");
  count_cmd->fallthrough();
  std::string count_nnf, count_w;
  count_cmd->add_option("nnf", count_nnf, "circuit file")->required();
  count_cmd->add_option("weights", count_w, "weight file (default: uniform)");

  auto* sample_cmd = app.add_subcommand("sample", "Draw samples from P(phi, w)");
  sample_cmd->fallthrough();
  std::string sample_nnf, sample_w;
  uint64_t sample_n = 1;
  sample_cmd->add_option("nnf", sample_nnf, "circuit file")->required();
  sample_cmd->add_option("weights", sample_w, "weight file (default: uniform)");
  sample_cmd->add_option("-N,--samples", sample_n, "number of draws");

  auto* tv_cmd = app.add_subcommand("tv-exact", "Brute-force exact TV distance");
  tv_cmd->fallthrough();
  std::vector<std::string> tv_paths(4);
  uint32_t tv_guard = kDefaultEnumerationGuard;
  tv_cmd->add_option("nnf1", tv_paths[0])->required();
  tv_cmd->add_option("w1", tv_paths[1])->required();
  tv_cmd->add_option("nnf2", tv_paths[2])->required();
  tv_cmd->add_option("w2", tv_paths[3])->required();
  tv_cmd->add_option("--guard", tv_guard, "variable-count guard for enumeration");

  auto* teq_cmd = app.add_subcommand("teq", "Closeness test (sampling + counting)");
  teq_cmd->fallthrough();
  std::vector<std::string> teq_paths(4);
  std::string teq_eps, teq_eta, teq_delta, teq_dtv;
  teq_cmd->add_option("nnf1", teq_paths[0])->required();
  teq_cmd->add_option("w1", teq_paths[1])->required();
  teq_cmd->add_option("nnf2", teq_paths[2])->required();
  teq_cmd->add_option("w2", teq_paths[3])->required();
  teq_cmd->add_option("-e,--eps", teq_eps, "closeness parameter")->required();
  teq_cmd->add_option("-n,--eta", teq_eta, "farness parameter")->required();
  teq_cmd->add_option("-d,--delta", teq_delta, "confidence parameter")->required();
  teq_cmd->add_option("--dtv", teq_dtv, "known TV distance, echoed into reports");

  auto* peq_cmd = app.add_subcommand("peq", "Equivalence test (network polynomial)");
  peq_cmd->fallthrough();
  std::vector<std::string> peq_paths(4);
  std::string peq_delta;
  peq_cmd->add_option("nnf1", peq_paths[0])->required();
  peq_cmd->add_option("w1", peq_paths[1])->required();
  peq_cmd->add_option("nnf2", peq_paths[2])->required();
  peq_cmd->add_option("w2", peq_paths[3])->required();
  peq_cmd->add_option("-d,--delta", peq_delta, "confidence parameter")->required();

  auto* gen_cmd = app.add_subcommand("gen", "Generate benchmark pairs with known TV distance");
  gen_cmd->fallthrough();
  std::string gen_out = "bench", gen_target = "far=0.2";
  uint32_t gen_vars = 14, gen_clauses = 0, gen_count = 1;
  unsigned gen_precision = 8;
  gen_cmd->add_option("-o,--out", gen_out, "output directory");
  gen_cmd->add_option("--vars", gen_vars, "variables per instance");
  gen_cmd->add_option("--clauses", gen_clauses, "clauses per instance (default ceil(4.1 n))");
  gen_cmd->add_option("--count", gen_count, "number of pairs");
  gen_cmd->add_option("--target", gen_target, "close=<eps> or far=<eta>");
  gen_cmd->add_option("--precision", gen_precision, "weight precision in bits");

  auto* compile_cmd = app.add_subcommand("compile", "Compile DIMACS CNF to decision-DNNF");
  compile_cmd->fallthrough();
  std::string compile_cnf, compile_out;
  bool compile_smooth = false;
  uint32_t compile_guard = 24;
  compile_cmd->add_option("cnf", compile_cnf)->required();
  compile_cmd->add_option("-o,--out", compile_out, "output .nnf (default: stdout)");
  compile_cmd->add_flag("--smooth", compile_smooth, "smooth the result");
  compile_cmd->add_option("--guard", compile_guard, "variable-count guard");

  auto* check_cmd = app.add_subcommand("check", "Structural report for a circuit");
  check_cmd->fallthrough();
  std::string check_nnf;
  uint32_t check_limit = 20;
  check_cmd->add_option("nnf", check_nnf)->required();
  check_cmd->add_option("--semantic-limit", check_limit,
                        "max variables for the exhaustive determinism check");

  auto* reduce_cmd = app.add_subcommand("reduce", "Weighted-to-unweighted chain reduction");
  reduce_cmd->fallthrough();
  std::string reduce_nnf, reduce_w, reduce_out;
  int reduce_bits = 0;
  reduce_cmd->add_option("nnf", reduce_nnf)->required();
  reduce_cmd->add_option("weights", reduce_w)->required();
  reduce_cmd->add_option("-o,--out", reduce_out, "output .nnf (default: stdout)");
  reduce_cmd->add_option("--approx-bits", reduce_bits,
                         "round non-dyadic weights to this precision (default: refuse)");

  auto* netpoly_cmd = app.add_subcommand("netpoly", "Evaluate the network polynomial at theta");
  netpoly_cmd->fallthrough();
  std::string np_nnf, np_w, np_theta;
  netpoly_cmd->add_option("nnf", np_nnf)->required();
  netpoly_cmd->add_option("weights", np_w)->required();
  netpoly_cmd->add_option("--theta", np_theta, "comma-separated integer coordinates")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (seed_given) g.seed = seed_opt;
  g.format = format_s == "json" ? Format::Json : format_s == "csv" ? Format::Csv : Format::Text;
  g.mode = mode_s == "conservative" ? SampleSizeMode::Conservative : SampleSizeMode::Experiment;

  try {
    if (*count_cmd) return run_count(g, count_nnf, count_w);
    if (*sample_cmd) return run_sample(g, sample_nnf, sample_w, sample_n);
    if (*tv_cmd) return run_tv_exact(g, tv_paths, tv_guard);
    if (*teq_cmd) return run_teq(g, teq_paths, teq_eps, teq_eta, teq_delta, teq_dtv);
    if (*peq_cmd) return run_peq(g, peq_paths, peq_delta);
    if (*gen_cmd)
      return run_gen(g, gen_out, gen_vars, gen_clauses, gen_count, gen_target, gen_precision);
    if (*compile_cmd)
      return run_compile(g, compile_cnf, compile_out, compile_smooth, compile_guard);
    if (*check_cmd) return run_check(g, check_nnf, check_limit);
    if (*reduce_cmd) return run_reduce(g, reduce_nnf, reduce_w, reduce_out, reduce_bits);
    if (*netpoly_cmd) return run_netpoly(g, np_nnf, np_w, np_theta);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
