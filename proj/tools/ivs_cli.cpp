// Copyright 2026 The ivs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command line surface over the interval-space library. All element I/O uses
// the canonical text grammar, one element per line, UTF-8.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ivs/ivs.hpp"

namespace {

using namespace ivs;

std::string read_line_or(const std::string& given) {
  if (!given.empty()) return given;
  std::string line;
  if (!std::getline(std::cin, line)) throw Error("expected an element on stdin");
  return line;
}

GenSpec spec_from(uint64_t seed, int max_intervals, int alphabet, int dim,
                  long long denom, const std::string& eps_min,
                  const std::string& eps_max, const std::string& span_max) {
  GenSpec s;
  s.seed = seed;
  s.max_intervals = max_intervals;
  s.alphabet_size = alphabet;
  s.dim = dim;
  s.denominator = denom;
  s.eps_min = parse_q(eps_min);
  s.eps_max = parse_q(eps_max);
  s.span_max = parse_q(span_max);
  return s;
}

int run_normalize(const std::string& labels, const std::string& input) {
  std::string text = read_line_or(input);
  if (labels == "sign") {
    auto cfg = parse_config_generic<SignLabel>(
        text, [](const std::string& s) { return parse_sign(detail::Cursor{s}.token("")); });
    RawConfig<SignLabel> raw{cfg.dim, cfg.items};
    std::cout << print_config(normalize_config(SignPam{}, raw)) << "\n";
  } else if (labels == "smash") {
    auto cfg = parse_config_generic<SmashLabel>(
        text, [](const std::string& s) { return parse_smash(s); });
    RawConfig<SmashLabel> raw{cfg.dim, cfg.items};
    std::cout << print_config(normalize_config(SmashPam{}, raw)) << "\n";
  } else if (labels == "pointed") {
    auto cfg = parse_config_pointed(text);
    RawConfig<PointedSym> raw{cfg.dim, cfg.items};
    std::cout << print_config(normalize_config(PointedPam{}, raw)) << "\n";
  } else if (labels == "iclass") {
    std::cout << print_class(parse_class(text)) << "\n";
  } else if (labels == "mirror") {
    std::cout << print_mirror(parse_mirror(text)) << "\n";
  } else {
    throw Error("unknown label kind '" + labels + "'");
  }
  return 0;
}

int run_sum(const std::string& kind, const std::string& a_text,
            const std::string& b_text) {
  std::string a = read_line_or(a_text);
  std::string b = b_text.empty() ? read_line_or("") : b_text;
  if (kind == "iclass") {
    std::cout << print_class(class_sum(parse_class(a), parse_class(b))) << "\n";
  } else if (kind == "mirror") {
    std::cout << print_mirror(mirror_sum(parse_mirror(a), parse_mirror(b))) << "\n";
  } else if (kind == "sign") {
    auto ca = parse_config_generic<SignLabel>(
        a, [](const std::string& s) { return parse_sign(detail::Cursor{s}.token("")); });
    auto cb = parse_config_generic<SignLabel>(
        b, [](const std::string& s) { return parse_sign(detail::Cursor{s}.token("")); });
    std::cout << print_config(config_sum(SignPam{}, ca, cb)) << "\n";
  } else {
    throw Error("unknown sum kind '" + kind + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact interval configuration spaces: rewriting, scanning, homotopies"};
  app.require_subcommand(1);

  // normalize
  std::string n_labels = "iclass", n_input;
  auto* normalize = app.add_subcommand("normalize", "reduce an element to normal form");
  normalize->add_option("--labels", n_labels,
                        "element kind: iclass|mirror|pointed|sign|smash");
  normalize->add_option("--input", n_input, "element text (default: stdin)");

  // sum
  std::string s_kind = "iclass", s_a, s_b;
  auto* sum = app.add_subcommand("sum", "partial sum of two elements");
  sum->add_option("--kind", s_kind, "iclass|mirror|sign");
  sum->add_option("--a", s_a, "first element (default: stdin line 1)");
  sum->add_option("--b", s_b, "second element (default: stdin line 2)");

  // separated
  std::string sep_eps = "1/2", sep_kind = "iclass", sep_input;
  auto* separated = app.add_subcommand("separated", "test eps-separation");
  separated->add_option("--eps", sep_eps, "separation parameter p/q");
  separated->add_option("--kind", sep_kind, "iclass|mirror");
  separated->add_option("--input", sep_input, "element text (default: stdin)");

  // scan
  std::string scan_eps = "1/2", scan_input;
  int scan_grid = 16;
  auto* scan = app.add_subcommand("scan", "emit the scan of a class as CSV");
  scan->add_option("--eps", scan_eps, "separation parameter p/q");
  scan->add_option("--grid", scan_grid, "uniform sample count in addition to breakpoints");
  scan->add_option("--input", scan_input, "I(0,s){...} element (default: stdin)");

  // eval
  std::string ev_eps = "1/2", ev_t = "0", ev_input;
  auto* eval = app.add_subcommand("eval", "evaluate the scan of a class at t");
  eval->add_option("--eps", ev_eps, "separation parameter p/q");
  eval->add_option("--t", ev_t, "parameter p/q");
  eval->add_option("--input", ev_input, "I(0,s){...} element (default: stdin)");

  // project
  std::string pr_input;
  auto* project = app.add_subcommand("project", "scan a TE element at the origin");
  project->add_option("--input", pr_input, "TE(eps,s)C..{..} element (default: stdin)");

  // homotopy
  std::string h_name = "contract", h_t = "1/2", h_input, h_z;
  bool h_audit = false;
  auto* homotopy = app.add_subcommand("homotopy", "evaluate a homotopy at t");
  homotopy->add_option("--name", h_name, "contract|bigH|k|deform");
  homotopy->add_option("--t", h_t, "parameter p/q in [0,1]");
  homotopy->add_option("--z", h_z, "suspension configuration (for k)");
  homotopy->add_option("--input", h_input, "element text (default: stdin)");
  homotopy->add_flag("--audit", h_audit, "emit a validity report at 11 sampled t");

  // gen
  uint64_t g_seed = 1;
  int g_count = 1, g_maxiv = 3, g_alpha = 2, g_dim = 1;
  long long g_denom = 8;
  std::string g_kind = "iclass", g_epsmin = "1/4", g_epsmax = "1/2", g_spanmax = "12";
  auto* gen_cmd = app.add_subcommand("gen", "generate random elements");
  gen_cmd->add_option("--seed", g_seed, "PRNG seed");
  gen_cmd->add_option("--count", g_count, "number of elements");
  gen_cmd->add_option("--kind", g_kind, "iclass|mirror|tildeI|tildeE|suspension-config");
  gen_cmd->add_option("--max-intervals", g_maxiv, "intervals per element");
  gen_cmd->add_option("--alphabet", g_alpha, "label alphabet size");
  gen_cmd->add_option("--dim", g_dim, "configuration dimension");
  gen_cmd->add_option("--denom", g_denom, "grid denominator");
  gen_cmd->add_option("--eps-min", g_epsmin, "smallest eps");
  gen_cmd->add_option("--eps-max", g_epsmax, "largest eps");
  gen_cmd->add_option("--span-max", g_spanmax, "largest span");

  // oracle
  std::string o_input;
  int o_budget = 1;
  long long o_denom = 8;
  auto* oracle = app.add_subcommand("oracle", "BFS closure of rewrites; prints irreducibles");
  oracle->add_option("--input", o_input, "I(lo,hi){...} sequence (default: stdin)");
  oracle->add_option("--budget", o_budget, "expansion budget");
  oracle->add_option("--denom", o_denom, "grid denominator for cuts/insertions");

  // check
  std::vector<std::string> c_suites;
  bool c_all = false;
  long c_trials = 200;
  uint64_t c_seed = 1;
  auto* check = app.add_subcommand("check", "run property suites");
  check->add_option("--suite", c_suites, "suite names");
  check->add_flag("--all", c_all, "run every suite");
  check->add_option("--trials", c_trials, "trials per suite");
  check->add_option("--seed", c_seed, "PRNG seed");

  // render
  std::string r_format = "svg", r_kind = "iclass", r_input, r_eps = "1/2";
  int r_grid = 16;
  auto* render = app.add_subcommand("render", "render an element as CSV or SVG");
  render->add_option("--format", r_format, "csv|svg");
  render->add_option("--kind", r_kind, "iclass|mirror|config");
  render->add_option("--eps", r_eps, "eps for csv scans");
  render->add_option("--grid", r_grid, "sample count");
  render->add_option("--input", r_input, "element text (default: stdin)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (normalize->parsed()) return run_normalize(n_labels, n_input);
    if (sum->parsed()) return run_sum(s_kind, s_a, s_b);
    if (separated->parsed()) {
      std::string text = read_line_or(sep_input);
      bool ok = sep_kind == "mirror"
                    ? mirror_eps_separated(parse_mirror(text), parse_q(sep_eps))
                    : eps_separated(parse_class(text), parse_q(sep_eps));
      std::cout << (ok ? "true" : "false") << "\n";
      return 0;
    }
    if (scan->parsed()) {
      IntervalClass c = parse_class(read_line_or(scan_input));
      std::cout << render_loop_csv(alpha1(c, parse_q(scan_eps)), scan_grid);
      return 0;
    }
    if (eval->parsed()) {
      IntervalClass c = parse_class(read_line_or(ev_input));
      PiecewiseLoop f = alpha1(c, parse_q(ev_eps));
      std::cout << print_susp(eval_loop(f, parse_q(ev_t))) << "\n";
      return 0;
    }
    if (project->parsed()) {
      TildeE e = parse_tilde_e(read_line_or(pr_input));
      std::cout << print_config(scan_p(e)) << "\n";
      return 0;
    }
    if (homotopy->parsed()) {
      Q t = parse_q(h_t);
      auto audit_ts = [&]() {
        std::vector<Q> ts;
        for (int i = 0; i <= 10; ++i) ts.push_back(Q(i, 10));
        return ts;
      };
      if (h_name == "contract") {
        MirrorClass m = parse_mirror(read_line_or(h_input));
        if (h_audit) {
          for (const Q& u : audit_ts()) {
            try {
              MirrorClass r = contract_H(m, u);
              std::cout << "t=" << q_str(u) << " ok " << print_mirror(r) << "\n";
            } catch (const Error& ex) {
              std::cout << "t=" << q_str(u) << " INVALID: " << ex.what() << "\n";
            }
          }
          return 0;
        }
        std::cout << print_mirror(contract_H(m, t)) << "\n";
      } else if (h_name == "bigH") {
        TildeE e = parse_tilde_e(read_line_or(h_input));
        if (h_audit) {
          for (const Q& u : audit_ts()) {
            try {
              TildeE r = bigH(e, u);
              std::cout << "t=" << q_str(u) << " ok " << print_tilde(r) << "\n";
            } catch (const Error& ex) {
              std::cout << "t=" << q_str(u) << " INVALID: " << ex.what() << "\n";
            }
          }
          return 0;
        }
        std::cout << print_tilde(bigH(e, t)) << "\n";
      } else if (h_name == "k") {
        TildeI e = parse_tilde_i(read_line_or(h_input));
        PointConfig<SuspensionPoint> z =
            h_z.empty() ? PointConfig<SuspensionPoint>{e.config.dim, {}}
                        : parse_config_susp(h_z);
        if (h_audit) {
          for (const Q& u : audit_ts()) {
            try {
              TildeI r = k_homotopy(z, e, u);
              std::cout << "t=" << q_str(u) << " ok " << print_tilde(r) << "\n";
            } catch (const Error& ex) {
              std::cout << "t=" << q_str(u) << " INVALID: " << ex.what() << "\n";
            }
          }
          return 0;
        }
        std::cout << print_tilde(k_homotopy(z, e, t)) << "\n";
      } else if (h_name == "deform") {
        TildeE e = parse_tilde_e(read_line_or(h_input));
        NdrData ndr = NdrData::canonical();
        if (h_audit) {
          for (const Q& u : audit_ts()) {
            try {
              TildeE r = deform_total(e, u, ndr);
              std::cout << "t=" << q_str(u) << " ok " << print_tilde(r) << "\n";
            } catch (const Error& ex) {
              std::cout << "t=" << q_str(u) << " INVALID: " << ex.what() << "\n";
            }
          }
          return 0;
        }
        std::cout << print_tilde(deform_total(e, t, ndr)) << "\n";
      } else {
        throw Error("unknown homotopy '" + h_name + "'");
      }
      return 0;
    }
    if (gen_cmd->parsed()) {
      GenSpec spec = spec_from(g_seed, g_maxiv, g_alpha, g_dim, g_denom, g_epsmin,
                               g_epsmax, g_spanmax);
      Gen gen(spec);
      for (int i = 0; i < g_count; ++i) {
        if (g_kind == "iclass") {
          Q span;
          std::cout << print_class(gen.iclass(gen.pick_eps(), span)) << "\n";
        } else if (g_kind == "mirror") {
          Q span;
          std::cout << print_mirror(gen.mirror(gen.pick_eps(), span)) << "\n";
        } else if (g_kind == "tildeI") {
          std::cout << print_tilde(gen.tilde_i()) << "\n";
        } else if (g_kind == "tildeE") {
          std::cout << print_tilde(gen.tilde_e()) << "\n";
        } else if (g_kind == "suspension-config") {
          std::cout << print_config(gen.susp_config()) << "\n";
        } else {
          throw Error("unknown kind '" + g_kind + "'");
        }
      }
      return 0;
    }
    if (oracle->parsed()) {
      IntervalSeq seq = parse_seq(read_line_or(o_input));
      OracleLimits lim;
      lim.expansion_budget = o_budget;
      lim.denominator = o_denom;
      lim.max_items = static_cast<int>(seq.items.size()) + 4;
      OracleResult r = oracle_reduce_bfs(seq, lim);
      for (const auto& irr : r.irreducibles) std::cout << print_seq(irr) << "\n";
      std::cerr << "states visited: " << r.states_visited << "\n";
      return 0;
    }
    if (check->parsed()) {
      GenSpec spec;
      spec.seed = c_seed;
      std::vector<std::string> names = c_all ? all_suite_names() : c_suites;
      if (names.empty()) throw Error("check: give --suite names or --all");
      SuiteReport report = run_property_suite(names, spec, c_trials);
      for (const auto& r : report.results)
        std::cout << format_suite_result(r) << "\n";
      return report.pass() ? 0 : 1;
    }
    if (render->parsed()) {
      std::string text = read_line_or(r_input);
      if (r_format == "csv") {
        IntervalClass c = parse_class(text);
        std::cout << render_loop_csv(alpha1(c, parse_q(r_eps)), r_grid);
      } else if (r_format == "svg") {
        if (r_kind == "iclass")
          std::cout << render_class_svg(parse_class(text));
        else if (r_kind == "mirror")
          std::cout << render_mirror_svg(parse_mirror(text));
        else if (r_kind == "config")
          std::cout << render_config_svg(parse_config_susp(text));
        else
          throw UnsupportedKindError("render: unknown kind '" + r_kind + "'");
      } else {
        throw UnsupportedKindError("render: unknown format '" + r_format + "'");
      }
      return 0;
    }
  } catch (const ivs::Error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
