// Copyright 2026 The minlink Authors
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

#include "minlink/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "minlink/curve1d.hpp"
#include "minlink/curve_io.hpp"
#include "minlink/frechet.hpp"
#include "minlink/gadget.hpp"
#include "minlink/hausdorff.hpp"
#include "minlink/nonrestricted.hpp"
#include "minlink/oracles.hpp"
#include "minlink/report.hpp"
#include "minlink/vertex_frechet.hpp"

namespace minlink {
namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int log_level() {
  const char* v = std::getenv("MINLINK_LOG");
  if (v == nullptr || *v == '\0') return 1;
  const std::string s(v);
  if (s == "0" || s == "quiet") return 0;
  if (s == "2" || s == "debug") return 2;
  return 1;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

PolyCurve load(const std::string& path, std::ostream& err, int level) {
  LoadedCurve lc = load_curve(path);
  if (level >= 1) {
    for (const auto& w : lc.warnings) err << "warning: " << path << ": " << w << '\n';
  }
  return std::move(lc.curve);
}

std::vector<std::int64_t> parse_set(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("bad set element '" + item + "'");
    }
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational(text);
  } catch (const std::exception&) {
    throw InputError("bad rational '" + text + "'");
  }
}

struct SimplifyArgs {
  std::string variant, input, output;
  double delta = -1.0;
  double eps = 0.5;
  bool oracle = false;
};

int do_simplify(const SimplifyArgs& a, std::ostream& out, std::ostream& err, int level) {
  const auto variant = parse_variant(a.variant);
  if (!variant) throw InputError("unknown variant '" + a.variant + "'");
  if (!(a.delta >= 0.0)) throw InputError("--delta must be non-negative");
  const PolyCurve p = load(a.input, err, level);
  RunReport r;
  r.variant = *variant;
  r.input_digest = curve_digest(p);
  r.delta = a.delta;
  const auto start = std::chrono::steady_clock::now();
  switch (*variant) {
    case Variant::kVertexFrechet:
      r.result = min_link_simplify_vr(p, a.delta);
      break;
    case Variant::kNonrestrictedFrechet:
      if (!(a.eps > 0.0 && a.eps <= 1.0)) throw InputError("--eps must lie in (0, 1]");
      r.eps = a.eps;
      r.result = simplify_nonrestricted(p, a.delta, a.eps);
      break;
    case Variant::kVertexHausdorff:
      r.result = simplify_vr_hausdorff(p, a.delta);
      break;
    case Variant::kCurve1d:
      if (p.dim() != 1) throw InputError("curve1d needs a 1D curve");
      r.result = greedy_simplify_1d(p, a.delta);
      break;
  }
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (a.oracle) {
    try {
      if (*variant == Variant::kVertexFrechet) r.oracle_link_count = brute_vr_frechet(p, a.delta);
      if (*variant == Variant::kVertexHausdorff) {
        r.oracle_link_count = brute_vr_hausdorff(p, a.delta);
      }
    } catch (const OracleBudgetExceeded& e) {
      if (level >= 1) err << "warning: oracle skipped: " << e.what() << '\n';
    }
  }
  audit(r, p);
  if (level >= 2) err << "solver time " << r.wall_seconds << " s\n";
  out << r.to_json() << '\n';
  if (!r.result.achieved) {
    if (level >= 1) err << "infeasible: " << r.result.note << '\n';
    return kExitInfeasible;
  }
  if (!a.output.empty()) save_curve(r.result.curve(), a.output);
  return kExitOk;
}

int do_gadget_gen(const std::string& set, std::int64_t target, const std::string& gamma,
                  const std::string& zeta, const std::string& path, std::ostream& out) {
  GadgetParams params;
  if (!gamma.empty()) params.gamma = parse_rational(gamma);
  if (!zeta.empty()) params.zeta = parse_rational(zeta);
  const GadgetCurve c = generate_gadget({parse_set(set), target}, params);
  const std::string text = gadget_to_json(c);
  if (path.empty()) {
    out << text << '\n';
  } else {
    write_file(path, text);
  }
  return kExitOk;
}

int do_gadget_solve(const std::string& path, std::ostream& out) {
  const GadgetCurve c = gadget_from_json(read_file(path));
  const auto hp = solve_gadget(c);
  nlohmann::ordered_json j;
  j["solvable"] = hp.has_value();
  if (hp) {
    std::vector<std::int64_t> subset;
    for (std::size_t i = 0; i < hp->choices.size(); ++i) {
      if (hp->choices[i]) subset.push_back(c.instance.a[i]);
    }
    j["subset"] = subset;
    const VerifyReport v = verify_simplification(c, *hp);
    j["verified"] = v.ok;
    if (!v.ok) j["reason"] = v.reason;
    nlohmann::json verts = nlohmann::json::array();
    for (std::size_t k = 0; k < hp->vertices.size(); ++k) {
      verts.push_back({{"level", c.levels[hp->hosts[k]].name()},
                       {"x", hp->vertices[k].x.str()},
                       {"y", hp->vertices[k].y.str()}});
    }
    j["path"] = verts;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int do_frechet(const std::string& fa, const std::string& fb, double tol, std::ostream& out,
               std::ostream& err, int level) {
  if (!(tol > 0.0)) throw InputError("--tol must be positive");
  const PolyCurve a = load(fa, err, level), b = load(fb, err, level);
  if (a.dim() != b.dim()) throw InputError("curves have different dimensions");
  nlohmann::ordered_json j;
  j["frechet_distance"] = frechet_distance(a, b, tol);
  j["tol"] = tol;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int do_plot(const std::string& input, const std::string& simplified, double delta,
            const std::string& path, std::ostream& err, int level) {
  const PolyCurve p = load(input, err, level);
  std::optional<PolyCurve> q;
  if (!simplified.empty()) q = load(simplified, err, level);
  if (p.dim() != 2 || (q && q->dim() != 2)) throw InputError("plot needs 2D curves");
  write_file(path, render_svg(p, q, delta > 0 ? std::optional<double>(delta) : std::nullopt));
  return kExitOk;
}

// Small seeded audit of every solver against the oracles.
int do_selftest(unsigned seed, int count, std::ostream& out) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  int checks = 0, failures = 0;
  for (int rep = 0; rep < count; ++rep) {
    const std::size_t d = 1 + rep % 3, n = 4 + rep % 5;
    std::vector<Point> pts;
    while (pts.size() < n) {
      std::vector<double> c(d);
      for (double& x : c) x = u(rng);
      if (!pts.empty() && Point(c) == pts.back()) continue;
      pts.emplace_back(std::move(c));
    }
    const PolyCurve p(std::move(pts));
    std::vector<double> dists;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) dists.push_back(distance(p.vertex(i), p.vertex(j)));
    }
    std::sort(dists.begin(), dists.end());
    const double delta = dists[dists.size() / 2];
    auto expect = [&](bool ok) {
      ++checks;
      failures += ok ? 0 : 1;
    };
    const auto vr = min_link_simplify_vr(p, delta);
    expect(int(vr.link_count) == brute_vr_frechet(p, delta));
    expect(decide_frechet(p, vr.curve(), delta));
    expect(int(simplify_vr_hausdorff(p, delta).link_count) == brute_vr_hausdorff(p, delta));
    const auto nr = simplify_nonrestricted(p, delta, 1.0);
    expect(nr.achieved && nr.link_count <= 2 * vr.link_count + 1);
    if (d == 1) {
      const auto g = greedy_simplify_1d(p, delta);
      expect(decide_frechet(p, g.curve(), delta) && g.link_count <= vr.link_count);
    }
  }
  nlohmann::ordered_json j;
  j["seed"] = seed;
  j["curves"] = count;
  j["checks"] = checks;
  j["failures"] = failures;
  out << j.dump(2) << '\n';
  return failures == 0 ? kExitOk : kExitInfeasible;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const int level = log_level();
  CLI::App app{"Min-# polygonal curve simplification", "minlink"};
  app.require_subcommand(1);

  SimplifyArgs sa;
  auto* simplify = app.add_subcommand("simplify", "Simplify a curve");
  simplify->add_option("--variant", sa.variant,
                       "vertex-frechet | nonrestricted-frechet | vertex-hausdorff | curve1d")
      ->required();
  simplify->add_option("--delta", sa.delta, "Distance bound")->required();
  simplify->add_option("--eps", sa.eps, "Grid accuracy for nonrestricted-frechet");
  simplify->add_option("--input", sa.input, "Curve file (.json or .csv)")->required();
  simplify->add_option("--output", sa.output, "Write the simplified curve here");
  simplify->add_flag("--oracle", sa.oracle, "Also run the exhaustive oracle (small n)");

  auto* gadget = app.add_subcommand("gadget", "Subset Sum reduction curve");
  gadget->require_subcommand(1);
  std::string set, gamma, zeta, gen_out, solve_in;
  std::int64_t target = 0;
  auto* gen = gadget->add_subcommand("gen", "Generate the curve");
  gen->add_option("--set", set, "Comma separated positive integers")->required();
  gen->add_option("--target", target, "Target sum")->required();
  gen->add_option("--gamma", gamma, "Spike size as N/D");
  gen->add_option("--zeta", zeta, "Hole width as N/D");
  gen->add_option("--out", gen_out, "Output file (stdout when absent)");
  auto* solve = gadget->add_subcommand("solve", "Search hole paths and verify");
  solve->add_option("--in", solve_in, "Gadget JSON")->required();

  std::string fa, fb;
  double tol = 1e-9;
  auto* frechet = app.add_subcommand("frechet", "Frechet distance of two curves");
  frechet->add_option("--a", fa)->required();
  frechet->add_option("--b", fb)->required();
  frechet->add_option("--tol", tol, "Absolute tolerance");

  std::string plot_in, plot_simpl, plot_out;
  double plot_delta = 0.0;
  auto* plot = app.add_subcommand("plot", "Render 2D curves to SVG");
  plot->add_option("--input", plot_in)->required();
  plot->add_option("--simplified", plot_simpl);
  plot->add_option("--delta", plot_delta, "Draw the delta-tube");
  plot->add_option("--out", plot_out)->required();

  unsigned seed = 0;
  int count = 30;
  auto* selftest = app.add_subcommand("selftest", "Check solvers against the oracles");
  selftest->add_option("--seed", seed);
  selftest->add_option("--count", count);

  std::vector<std::string> argv{"minlink"};
  argv.insert(argv.end(), args.begin(), args.end());
  std::vector<char*> cargv;
  for (auto& s : argv) cargv.push_back(s.data());
  try {
    app.parse(static_cast<int>(cargv.size()), cargv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*simplify) return do_simplify(sa, out, err, level);
    if (*gen) return do_gadget_gen(set, target, gamma, zeta, gen_out, out);
    if (*solve) return do_gadget_solve(solve_in, out);
    if (*frechet) return do_frechet(fa, fb, tol, out, err, level);
    if (*plot) return do_plot(plot_in, plot_simpl, plot_delta, plot_out, err, level);
    if (*selftest) return do_selftest(seed, count, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const CurveFormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const GadgetError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}

}  // namespace minlink
