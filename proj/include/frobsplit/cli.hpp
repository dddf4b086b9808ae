#ifndef FROBSPLIT_CLI_HPP
#define FROBSPLIT_CLI_HPP

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "frobsplit/experiments.hpp"
#include "frobsplit/gb_cache.hpp"

namespace frobsplit {

namespace cli_detail {

struct UsageError {
  std::string msg;
};

// Inline ring descriptions arrive as one shell word, e.g.
// "p=7 vars=x y z order=grevlex".  Every token containing '=' opens a new
// key line; bare tokens continue the previous value (variable lists).
inline std::string normalize_ring_inline(const std::string& s) {
  std::istringstream in(s);
  std::string tok;
  std::vector<std::string> lines;
  while (in >> tok) {
    if (tok.find('=') != std::string::npos || lines.empty())
      lines.push_back(tok);
    else
      lines.back() += " " + tok;
  }
  std::string out;
  for (const auto& l : lines) {
    out += l;
    out += '\n';
  }
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Err::ParseError, "cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ProblemArgs {
  std::string input_path;
  std::string ring_text;
  std::string f_text;
  std::string eps_text;
  std::string c_text;
};

struct Problem {
  Ring ring;
  std::optional<Polynomial> f;
  std::optional<Polynomial> eps;
  std::optional<Polynomial> c;
};

inline Problem load_problem(const ProblemArgs& pa) {
  Problem pb;
  if (!pa.input_path.empty()) {
    ProblemFile pf = parse_problem_file(read_file(pa.input_path));
    pb.ring = pf.ring;
    pb.f = pf.f;
    pb.eps = pf.eps;
    pb.c = pf.c;
  } else {
    if (pa.ring_text.empty()) throw UsageError{"provide --ring or -i <file>"};
    pb.ring = parse_ring_spec(normalize_ring_inline(pa.ring_text));
  }
  if (!pa.f_text.empty()) pb.f = parse_poly(pa.f_text, pb.ring);
  if (!pa.eps_text.empty()) pb.eps = parse_poly(pa.eps_text, pb.ring);
  if (!pa.c_text.empty()) pb.c = parse_poly(pa.c_text, pb.ring);
  return pb;
}

inline const Polynomial& need_f(const Problem& pb) {
  if (!pb.f) throw UsageError{"no f given (use --f or an f= line in the input file)"};
  return *pb.f;
}

inline std::string join_list(const std::vector<std::string>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i];
  }
  return s;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  using cli_detail::UsageError;

  CLI::App app{"Frobenius splitting invariants of hypersurfaces over F_p"};
  app.require_subcommand(1);

  cli_detail::ProblemArgs pa;
  bool want_json = false;
  std::string cache_dir;
  if (const char* envdir = std::getenv("FROBTOOL_CACHE_DIR")) cache_dir = envdir;

  auto add_common = [&](CLI::App* sub, bool takes_f = true) {
    sub->add_option("-i,--input", pa.input_path,
                    "problem file: ring keys plus f=/eps=/c= lines, # comments");
    sub->add_option("--ring", pa.ring_text,
                    "inline ring, e.g. \"p=7 vars=x y z order=grevlex\"");
    if (takes_f) sub->add_option("-f,--f", pa.f_text, "hypersurface polynomial");
    sub->add_flag("--json", want_json, "emit a JSON report");
    sub->add_option("--cache-dir", cache_dir,
                    "directory for cached basis computations (env FROBTOOL_CACHE_DIR)");
  };

  int e_level = 1;
  int max_e = 2;
  int max_iter = 30;
  std::string theorem;
  std::string example_id;
  bool no_stretch = false;
  int samples = 3;
  uint64_t seed = 42;
  int e0 = 1;
  CampaignConfig ccfg;

  CLI::App* cmd_fpure = app.add_subcommand("fpure", "Fedder test for F-purity");
  add_common(cmd_fpure);

  CLI::App* cmd_ideal = app.add_subcommand("splitting-ideal", "generators of I_e");
  add_common(cmd_ideal);
  cmd_ideal->add_option("-e,--e", e_level, "Frobenius level e (default 1)");

  CLI::App* cmd_numbers =
      app.add_subcommand("splitting-numbers", "splitting numbers a_e for e = 1..max");
  add_common(cmd_numbers);
  cmd_numbers->add_option("--max-e", max_e, "largest level to attempt (default 2)");

  CLI::App* cmd_prime = app.add_subcommand("splitting-prime", "stable ideal of the chain J_k");
  add_common(cmd_prime);
  cmd_prime->add_option("--max-iter", max_iter, "iteration cap (default 30)");

  CLI::App* cmd_dim = app.add_subcommand("dimension", "splitting dimension");
  add_common(cmd_dim);
  cmd_dim->add_option("--max-iter", max_iter, "iteration cap (default 30)");

  CLI::App* cmd_ratio = app.add_subcommand("ratio", "a_e / p^{e n} as an exact fraction");
  add_common(cmd_ratio);
  cmd_ratio->add_option("-e,--e", e_level, "Frobenius level e (default 1)");
  cmd_ratio->add_option("--max-iter", max_iter, "iteration cap (default 30)");

  CLI::App* cmd_jac = app.add_subcommand("jacobian", "partial-derivative ideal of f");
  add_common(cmd_jac);

  CLI::App* cmd_sfr =
      app.add_subcommand("sfr-check", "strong F-regularity witness for an element c");
  add_common(cmd_sfr);
  cmd_sfr->add_option("-c,--c", pa.c_text, "candidate witness polynomial");
  cmd_sfr->add_option("--max-e", max_e, "largest level to try (default 2)");

  CLI::App* cmd_perturb =
      app.add_subcommand("perturb", "stability of invariants under perturbations of f");
  add_common(cmd_perturb);
  cmd_perturb->add_option("--theorem", theorem, "which stability statement: A or B")
      ->required()
      ->check(CLI::IsMember({"A", "B"}));
  cmd_perturb->add_option("--eps", pa.eps_text, "explicit perturbation (skips sampling)");
  cmd_perturb->add_option("--samples", samples, "random perturbations to draw (default 3)");
  cmd_perturb->add_option("--seed", seed, "sampling seed (default 42)");
  cmd_perturb->add_option("--max-e", e_level, "A: check a_e for e = 1..max (default 1)");
  cmd_perturb->add_option("--e0", e0, "B: perturbations from the e0-th bracket power (default 1)");

  CLI::App* cmd_example = app.add_subcommand("example", "run a bundled worked instance");
  cmd_example->add_option("id", example_id, "instance id: 4.1 or 4.2")->required();
  cmd_example->add_flag("--no-stretch", no_stretch, "skip the optional level-2 block of 4.2");
  cmd_example->add_flag("--json", want_json, "emit a JSON report");
  cmd_example->add_option("--cache-dir", cache_dir, "directory for cached basis computations");

  CLI::App* cmd_campaign =
      app.add_subcommand("campaign", "random hypersurfaces through the full battery");
  cmd_campaign->add_option("-p,--p", ccfg.p, "characteristic (default 3)");
  cmd_campaign->add_option("--nvars", ccfg.nvars, "number of variables (default 2)");
  cmd_campaign->add_option("--max-deg", ccfg.max_deg, "degree bound for f (default 4)");
  cmd_campaign->add_option("--trials", ccfg.trials, "random draws (default 50)");
  cmd_campaign->add_option("--seed", ccfg.seed, "campaign seed (default 42)");
  cmd_campaign->add_option("--eps-samples", ccfg.eps_samples,
                           "perturbations per theorem per trial (default 3)");
  cmd_campaign->add_option("--max-e", ccfg.e_max, "battery depth (default 2)");
  cmd_campaign->add_option("--budget-seconds", ccfg.budget_seconds,
                           "soft time budget, 0 disables (default 0)");
  cmd_campaign->add_flag("--json", want_json, "emit the full JSON report");
  cmd_campaign->add_option("--cache-dir", cache_dir, "directory for cached basis computations");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  std::optional<GbCacheScope> cache_scope;
  if (!cache_dir.empty()) cache_scope.emplace(cache_dir);

  try {
    if (cmd_fpure->parsed()) {
      auto pb = cli_detail::load_problem(pa);
      auto ctx = make_context(pb.ring, cli_detail::need_f(pb));
      bool v = fedder_fpure(ctx);
      if (want_json) {
        ojson j;
        j["v"] = 1;
        j["kind"] = "fpure";
        j["ring"] = ring_to_json(pb.ring);
        j["f"] = poly_to_string(ctx.f);
        j["fpure"] = v;
        out << j.dump(2) << "\n";
      } else {
        out << "F-pure: " << (v ? "true" : "false") << "\n";
      }
      return 0;
    }

    if (cmd_ideal->parsed()) {
      auto pb = cli_detail::load_problem(pa);
      auto ctx = make_context(pb.ring, cli_detail::need_f(pb));
      Ideal I = splitting_ideal(ctx, e_level);
      auto gens = ideal_gen_strings(I);
      if (want_json) {
        ojson j;
        j["v"] = 1;
        j["kind"] = "splitting-ideal";
        j["ring"] = ring_to_json(pb.ring);
        j["f"] = poly_to_string(ctx.f);
        j["e"] = e_level;
        j["generators"] = gens;
        out << j.dump(2) << "\n";
      } else {
        out << cli_detail::join_list(gens) << "\n";
      }
      return 0;
    }

    if (cmd_numbers->parsed()) {
      auto pb = cli_detail::load_problem(pa);
      auto ctx = make_context(pb.ring, cli_detail::need_f(pb));
      ojson levels = ojson::array();
      for (int e = 1; e <= max_e; ++e) {
        ojson lv;
        lv["e"] = e;
        try {
          int64_t a = splitting_number(ctx, e);
          lv["a"] = a;
          if (!want_json) out << "a_" << e << " = " << a << "\n";
        } catch (const AlgebraError& ae) {
          if (ae.code() != Err::TooLarge && ae.code() != Err::Overflow) throw;
          const char* reason = ae.code() == Err::Overflow ? "overflow" : "budget";
          lv["skipped"] = reason;
          if (!want_json) out << "a_" << e << " skipped (" << reason << ")\n";
        }
        levels.push_back(std::move(lv));
      }
      if (want_json) {
        ojson j;
        j["v"] = 1;
        j["kind"] = "splitting-numbers";
        j["ring"] = ring_to_json(pb.ring);
        j["f"] = poly_to_string(ctx.f);
        j["levels"] = std::move(levels);
        out << j.dump(2) << "\n";
      }
      return 0;
    }

    if (cmd_prime->parsed()) {
      auto pb = cli_detail::load_problem(pa);
      auto ctx = make_context(pb.ring, cli_detail::need_f(pb));
      SplittingPrimeResult pr = splitting_prime(ctx, max_iter);
      auto gens = ideal_gen_strings(pr.prime);
      if (want_json) {
        ojson j;
        j["v"] = 1;
        j["kind"] = "splitting-prime";
        j["ring"] = ring_to_json(pb.ring);
        j["f"] = poly_to_string(ctx.f);
        j["generators"] = gens;
        j["method"] = prime_method_name(pr.method);
        j["primality_certified"] = pr.primality_certified;
        j["zero_in_quotient"] = pr.zero_in_quotient;
        j["iterations"] = pr.iterations;
        out << j.dump(2) << "\n";
      } else {
        out << cli_detail::join_list(gens) << "\n";
      }
      return 0;
    }

    if (cmd_dim->parsed()) {
      auto pb = cli_detail::load_problem(pa);
      auto ctx = make_context(pb.ring, cli_detail::need_f(pb));
      SplittingPrimeResult pr = splitting_prime(ctx, max_iter);
      int dim = splitting_dimension(ctx, pr);
      if (want_json) {
        ojson j;
        j["v"] = 1;
        j["kind"] = "dimension";
        j["ring"] = ring_to_json(pb.ring);
        j["f"] = poly_to_string(ctx.f);
        j["dimension"] = dim;
        j["prime"] = ideal_gen_strings(pr.prime);
        j["method"] = prime_method_name(pr.method);
        out << j.dump(2) << "\n";
      } else {
        out << dim << "\n";
      }
      return 0;
    }

    if (cmd_ratio->parsed()) {
      auto pb = cli_detail::load_problem(pa);
      auto ctx = make_context(pb.ring, cli_detail::need_f(pb));
      Rational rt = splitting_ratio_estimate(ctx, e_level, max_iter);
      Rational red = rational_reduce(rt);
      if (want_json) {
        ojson j;
        j["v"] = 1;
        j["kind"] = "ratio";
        j["ring"] = ring_to_json(pb.ring);
        j["f"] = poly_to_string(ctx.f);
        j["e"] = e_level;
        j["ratio"] = rational_to_json(rt);
        out << j.dump(2) << "\n";
      } else {
        out << rt.num << "/" << rt.den;
        if (red.num != rt.num || red.den != rt.den) {
          out << " = " << red.num;
          if (red.den != 1) out << "/" << red.den;
        }
        out << "\n";
      }
      return 0;
    }

    if (cmd_jac->parsed()) {
      auto pb = cli_detail::load_problem(pa);
      const Polynomial& f = cli_detail::need_f(pb);
      Ideal jac = jacobian_ideal(f);
      std::vector<std::string> gens;
      for (const auto& g : jac.gens) gens.push_back(poly_to_string(g));
      if (want_json) {
        ojson j;
        j["v"] = 1;
        j["kind"] = "jacobian";
        j["ring"] = ring_to_json(pb.ring);
        j["f"] = poly_to_string(f);
        j["generators"] = gens;
        out << j.dump(2) << "\n";
      } else {
        out << cli_detail::join_list(gens) << "\n";
      }
      return 0;
    }

    if (cmd_sfr->parsed()) {
      auto pb = cli_detail::load_problem(pa);
      auto ctx = make_context(pb.ring, cli_detail::need_f(pb));
      if (!pb.c) throw UsageError{"no witness given (use --c or a c= line in the input file)"};
      WitnessResult w = glassbrenner_witness(ctx, *pb.c, max_e);
      if (want_json) {
        ojson j;
        j["v"] = 1;
        j["kind"] = "sfr-witness";
        j["ring"] = ring_to_json(pb.ring);
        j["f"] = poly_to_string(ctx.f);
        j["c"] = poly_to_string(*pb.c);
        j["verdict"] = w.verdict;
        j["witness_e"] = w.witness_e ? ojson(*w.witness_e) : ojson(nullptr);
        out << j.dump(2) << "\n";
      } else {
        if (w.verdict)
          out << "witness: true (e=" << *w.witness_e << ")\n";
        else
          out << "witness: false\n";
      }
      return 0;
    }

    if (cmd_perturb->parsed()) {
      auto pb = cli_detail::load_problem(pa);
      auto ctx = make_context(pb.ring, cli_detail::need_f(pb));
      std::vector<int> e_range;
      for (int e = 1; e <= e_level; ++e) e_range.push_back(e);
      std::vector<PerturbationOutcome> outs;
      if (pb.eps) {
        if (theorem == "A")
          outs.push_back(evaluate_perturbation_A(ctx, *pb.eps, e_range));
        else
          outs.push_back(evaluate_perturbation_B(ctx, *pb.eps));
      } else {
        outs = theorem == "A" ? perturb_theorem_A(ctx, samples, e_range, seed)
                              : perturb_theorem_B(ctx, samples, e0, seed);
      }
      int bad = 0;
      ojson arr = ojson::array();
      for (size_t i = 0; i < outs.size(); ++i) {
        const auto& o = outs[i];
        arr.push_back(outcome_to_json(o));
        if (!want_json) {
          out << "sample " << i << ": ";
          if (o.skipped) {
            out << "skipped (" << o.skip_reason << ")\n";
          } else if (o.theorem == "A") {
            out << (o.verdict ? "ok" : "VIOLATION") << "  a: ";
            for (size_t k = 0; k < o.a_before.size(); ++k) {
              if (k) out << " ";
              out << o.a_before[k] << "->" << o.a_after[k];
            }
            out << "  eps: " << o.eps_str << "\n";
          } else {
            out << (o.verdict ? "ok" : "VIOLATION") << "  dim: " << o.dim_before << "->"
                << o.dim_after << "  eps: " << o.eps_str << "\n";
          }
        }
        if (!o.skipped && !o.verdict) ++bad;
      }
      if (want_json) {
        ojson j;
        j["v"] = 1;
        j["kind"] = "perturbation";
        j["ring"] = ring_to_json(pb.ring);
        j["f"] = poly_to_string(ctx.f);
        j["theorem"] = theorem;
        j["outcomes"] = std::move(arr);
        j["violations"] = bad;
        out << j.dump(2) << "\n";
      } else {
        out << "violations: " << bad << "\n";
      }
      return bad ? 4 : 0;
    }

    if (cmd_example->parsed()) {
      GoldenOutcome g;
      if (example_id == "4.1")
        g = run_example_4_1();
      else if (example_id == "4.2")
        g = run_example_4_2(!no_stretch);
      else
        throw UsageError{"unknown example id: " + example_id + " (expected 4.1 or 4.2)"};
      if (want_json) {
        out << g.json.dump(2) << "\n";
      } else {
        for (const auto& c : g.checks)
          out << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << "\n";
        out << "result: " << (g.ok ? "ok" : "FAIL") << "\n";
      }
      return g.ok ? 0 : 4;
    }

    if (cmd_campaign->parsed()) {
      CampaignResult res = random_campaign(ccfg);
      if (want_json) {
        out << res.json.dump(2) << "\n";
      } else {
        out << "trials run: " << res.trials_run << "\n";
        out << "F-pure: " << res.fpure_count << "\n";
        out << "violations: " << res.violations << "\n";
      }
      return res.violations ? 4 : 0;
    }
  } catch (const UsageError& ue) {
    err << "usage error: " << ue.msg << "\n";
    return 2;
  } catch (const AlgebraError& ae) {
    err << "error: " << ae.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace frobsplit

#endif
