/*
 * Copyright 2026 The qsx Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// qsx: command-line front end.
//
// Exit codes: 0 success, 2 rejected input, 1 numeric failure or failed check.
// Errors are reported on stderr as a single line {"error": code, "message": ..}.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsx/error.hpp"
#include "qsx/figure.hpp"
#include "qsx/finsler.hpp"
#include "qsx/geodesic.hpp"
#include "qsx/io.hpp"
#include "qsx/quasimetric.hpp"
#include "qsx/stochastic.hpp"
#include "qsx/verify.hpp"

namespace {

using qsx::ErrorCode;
using qsx::Json;

struct GeneratorOptions {
  std::string spec = "identity";
  std::optional<double> alpha;
  std::optional<double> a;

  qsx::GeneratorFunction build() const {
    if (!spec.empty() && spec.front() == '{') return qsx::generator_from_json(qsx::parse_json(spec));
    std::map<std::string, double> params;
    if (alpha) params["alpha"] = *alpha;
    if (a) params["a"] = *a;
    return qsx::generator(spec, params);
  }
};

void add_generator_options(CLI::App* cmd, GeneratorOptions& g) {
  cmd->add_option("-g,--generator", g.spec,
                  "identity, power, log, arcsin or a generator JSON object")
      ->envname("QSX_GENERATOR")
      ->capture_default_str();
  cmd->add_option("--alpha", g.alpha, "exponent of the power generator")->envname("QSX_ALPHA");
  cmd->add_option("--log-a", g.a, "parameter a of the log generator")->envname("QSX_LOG_A");
}

// Inline JSON, '-' for stdin, or a file path.
Json read_document(const std::string& source) {
  if (source == "-") {
    const std::string text{std::istreambuf_iterator<char>(std::cin), {}};
    return qsx::parse_json(text);
  }
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    return qsx::parse_json(source);
  }
  std::ifstream in(source);
  if (!in) qsx::fail(ErrorCode::InvalidInput, "cannot read '" + source + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return qsx::parse_json(text.str());
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) qsx::fail(ErrorCode::InvalidInput, "cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

void emit(const Json& doc, const std::string& path) {
  Output out(path);
  out.stream() << doc.dump(2) << '\n';
}

std::string csv_number(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

void require_positive(double x, const char* what) {
  if (!(x > 0.0)) qsx::fail(ErrorCode::InvalidInput, std::string(what) + " must be positive");
}

void report_error(std::string_view code, const std::string& message) {
  std::cerr << Json{{"error", code}, {"message", message}}.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Max-type quasimetrics on probability simplices"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("-o,--out", out_path, "write the document here instead of stdout");

  GeneratorOptions gen;
  double geodesic_tol = 1e-12;
  double length_tol = 1e-10;
  std::uint64_t seed = qsx::kDefaultSeed;
  std::string p_source;
  std::string q_source;
  std::string format = "json";

  auto* dist = app.add_subcommand("dist", "forward, backward and symmetrized distances");
  add_generator_options(dist, gen);
  dist->add_option("-p,--p", p_source, "point P (JSON, file or -)")->required();
  dist->add_option("-q,--q", q_source, "point Q (JSON, file or -)")->required();

  auto* ball = app.add_subcommand("ball", "ball vertex and corner points");
  add_generator_options(ball, gen);
  double radius = 0.1;
  std::string direction = "forward";
  std::string csv_path;
  ball->add_option("-p,--p", p_source, "center P")->required();
  ball->add_option("-r,--radius", radius)->capture_default_str();
  ball->add_option("--direction", direction)
      ->check(CLI::IsMember({"forward", "backward"}))
      ->capture_default_str();
  ball->add_option("--csv", csv_path, "also write the boundary polygon (2-simplex) as CSV x0,x1,x2");

  auto* geodesic = app.add_subcommand("geodesic", "sample the f-geodesic from P to Q");
  add_generator_options(geodesic, gen);
  std::size_t samples = 33;
  geodesic->add_option("-p,--p", p_source)->required();
  geodesic->add_option("-q,--q", q_source)->required();
  geodesic->add_option("-n,--samples", samples)->capture_default_str();
  geodesic->add_option("--format", format, "json or csv (columns t,mu,p_0..p_N)")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("QSX_FORMAT");
  geodesic->add_option("--tol", geodesic_tol, "solver tolerance for mu")
      ->envname("QSX_TOL")
      ->capture_default_str();

  auto* length = app.add_subcommand("length", "forward and backward length of a curve");
  add_generator_options(length, gen);
  std::string curve_source;
  length->add_option("-c,--curve", curve_source, "curve JSON, file or -")->required();
  length->add_option("--tol", length_tol, "refinement stops when levels differ by less")
      ->envname("QSX_TOL")
      ->capture_default_str();

  auto* finsler = app.add_subcommand("finsler", "Finsler function F(v) at a base point");
  std::string finsler_source;
  bool bm_check = false;
  finsler->add_option("-i,--input", finsler_source, R"({"generator":..,"base":[..],"v":[..]})")
      ->required();
  finsler->add_flag("--bm-check", bm_check, "emit chord quotients as CSV t,quotient,deviation");

  auto* monotone = app.add_subcommand("monotone", "random bistochastic monotonicity sweep");
  add_generator_options(monotone, gen);
  std::size_t trials = 10000;
  std::size_t dim = 0;
  std::size_t perms = 0;
  bool force = false;
  monotone->add_option("--trials", trials)->envname("QSX_TRIALS")->capture_default_str();
  monotone->add_option("--dim", dim, "matrix size N+1 (0: random 2..7)")->capture_default_str();
  monotone->add_option("--k", perms, "permutations per matrix (0: random)")->capture_default_str();
  monotone->add_option("--seed", seed)->envname("QSX_SEED");
  monotone->add_flag("--force", force, "run generators outside the theorem's hypotheses");

  auto* counter = app.add_subcommand("counterexample", "stochastic map that increases D_id");

  auto* verify = app.add_subcommand("verify", "run the acceptance battery");
  add_generator_options(verify, gen);
  std::vector<int> only;
  verify->add_option("--trials", trials)->envname("QSX_TRIALS")->capture_default_str();
  verify->add_option("--seed", seed)->envname("QSX_SEED");
  verify->add_option("--criterion", only, "run only these criteria");
  verify->add_flag("--force", force, "add a diagnostic monotonicity probe for --generator");

  auto* figure = app.add_subcommand("figure-data", "ball and geodesic data for the 2-simplex");
  GeneratorOptions figure_gen{.spec = "power", .alpha = 1.0 / 3.0, .a = std::nullopt};
  std::vector<double> radii{0.1};
  figure->add_option("-g,--generator", figure_gen.spec)->capture_default_str();
  figure->add_option("--alpha", figure_gen.alpha);
  figure->add_option("--log-a", figure_gen.a);
  figure->add_option("-p,--p", p_source, "center (default (2/9,1/3,4/9))");
  figure->add_option("-r,--radius", radii, "ball radii")->capture_default_str();
  figure->add_option("-n,--samples", samples, "samples per geodesic")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    report_error("InvalidInput", e.what());
    return 2;
  }

  try {
    if (*dist) {
      const auto f = gen.build();
      const auto p = qsx::point_from_json(read_document(p_source));
      const auto q = qsx::point_from_json(read_document(q_source));
      const auto forward = qsx::quasi_dist_detail(f, p, q);
      emit({{"forward", forward.value},
            {"backward", qsx::quasi_dist(f, q, p)},
            {"sym_max", qsx::symmetrize_max(f, p, q)},
            {"argmax_index", forward.argmax}},
           out_path);
    } else if (*ball) {
      const auto f = gen.build();
      const auto p = qsx::point_from_json(read_document(p_source));
      const auto d = direction == "forward" ? qsx::Direction::Forward : qsx::Direction::Backward;
      const auto geometry = qsx::ball_geometry(f, p, radius, d);
      if (!csv_path.empty()) {
        Output csv(csv_path);
        csv.stream() << "x0,x1,x2\n";
        for (const auto& x : qsx::ball_boundary_polygon(f, p, radius, d)) {
          csv.stream() << csv_number(x[0]) << ',' << csv_number(x[1]) << ',' << csv_number(x[2])
                       << '\n';
        }
      }
      emit({{"vertex", geometry.shifted_vertex}, {"corners", geometry.corners}}, out_path);
    } else if (*geodesic) {
      require_positive(geodesic_tol, "--tol");
      if (samples < 2) qsx::fail(ErrorCode::InvalidInput, "--samples must be at least 2");
      const auto f = gen.build();
      const auto g = qsx::make_geodesic(f, qsx::point_from_json(read_document(p_source)),
                                        qsx::point_from_json(read_document(q_source)), geodesic_tol);
      Json rows = Json::array();
      Output out(out_path);
      if (format == "csv") {
        out.stream() << "t,mu";
        for (std::size_t i = 0; i < g.start().size(); ++i) out.stream() << ",p_" << i;
        out.stream() << '\n';
      }
      for (std::size_t k = 0; k < samples; ++k) {
        const double t = g.r() * static_cast<double>(k) / static_cast<double>(samples - 1);
        const double mu = g.is_degenerate() ? 0.0 : g.mu(t);
        const auto x = g.point(t);
        if (format == "csv") {
          out.stream() << csv_number(t) << ',' << csv_number(mu);
          for (double c : x) out.stream() << ',' << csv_number(c);
          out.stream() << '\n';
        } else {
          rows.push_back({{"t", t}, {"mu", mu}, {"point", std::vector<double>(x.begin(), x.end())}});
        }
      }
      if (format == "json") out.stream() << Json{{"r", g.r()}, {"samples", rows}}.dump(2) << '\n';
    } else if (*length) {
      require_positive(length_tol, "--tol");
      const auto f = gen.build();
      const auto curve = qsx::curve_from_json(read_document(curve_source), f);
      const auto forward = qsx::forward_length(f, curve, length_tol);
      const auto backward = qsx::backward_length(f, curve, length_tol);
      emit({{"forward", forward.value},
            {"backward", backward.value},
            {"knots_used", std::max(forward.knots, backward.knots)}},
           out_path);
    } else if (*finsler) {
      const Json doc = read_document(finsler_source);
      if (!doc.is_object() || !doc.contains("generator") || !doc.contains("base") ||
          !doc.contains("v")) {
        qsx::fail(ErrorCode::SchemaError, "finsler input needs generator, base and v");
      }
      const auto f = qsx::generator_from_json(doc["generator"]);
      const auto base = qsx::point_from_json(doc["base"]);
      if (!doc["v"].is_array()) qsx::fail(ErrorCode::SchemaError, "v must be an array");
      std::vector<double> components;
      for (const Json& x : doc["v"]) {
        if (!x.is_number()) qsx::fail(ErrorCode::SchemaError, "v must hold numbers");
        components.push_back(x.get<double>());
      }
      const auto v = qsx::tangent(base, components);
      const auto value = qsx::finsler_F(f, v);
      if (bm_check) {
        std::vector<double> ts;
        for (int e = 1; e <= 8; ++e) ts.push_back(std::pow(10.0, -e));
        const auto quotients = qsx::bm_derivative(f, v, ts);
        Output out(out_path);
        out.stream() << "t,quotient,deviation\n";
        for (std::size_t k = 0; k < ts.size(); ++k) {
          out.stream() << csv_number(ts[k]) << ',' << csv_number(quotients[k]) << ','
                       << csv_number(std::abs(quotients[k] - value.value)) << '\n';
        }
      } else {
        emit({{"F", value.value}, {"argmax", value.argmax}}, out_path);
      }
    } else if (*monotone) {
      if (trials == 0) qsx::fail(ErrorCode::InvalidInput, "--trials must be at least 1");
      const auto f = gen.build();
      const auto probe = qsx::monotonicity_probe(f, trials, dim, perms, seed, force);
      emit({{"generator", qsx::to_json(f)},
            {"force", force},
            {"trials", probe.trials},
            {"violations", probe.violations},
            {"worst_margin", probe.worst_margin}},
           out_path);
      if (probe.violations > 0 && !force) return 1;
    } else if (*counter) {
      const auto r = qsx::stochastic_counterexample();
      Json rows = Json::array();
      for (std::size_t i = 0; i < r.s.rows(); ++i) {
        std::vector<double> row;
        for (std::size_t j = 0; j < r.s.cols(); ++j) row.push_back(r.s(i, j));
        rows.push_back(row);
      }
      auto coords = [](const qsx::ProbVector& x) { return std::vector<double>(x.begin(), x.end()); };
      emit({{"generator", qsx::to_json(qsx::identity_generator())},
            {"S", rows},
            {"P", coords(r.p)},
            {"Q", coords(r.q)},
            {"SP", coords(r.sp)},
            {"SQ", coords(r.sq)},
            {"D(P,Q)", r.dist},
            {"D(SP,SQ)", r.image_dist},
            {"column_sums", r.s.column_sums()},
            {"row_sums", r.s.row_sums()},
            {"stochastic", r.stochastic},
            {"bistochastic", r.bistochastic},
            {"monotonicity_violated", r.violated}},
           out_path);
    } else if (*verify) {
      if (trials == 0) qsx::fail(ErrorCode::InvalidInput, "--trials must be at least 1");
      const qsx::VerifyConfig config{.trials = trials, .seed = seed};
      std::vector<qsx::CriterionResult> results;
      if (only.empty()) {
        results = qsx::run_acceptance(config);
      } else {
        for (int id : only) results.push_back(qsx::run_criterion(id, config));
      }
      bool ok = true;
      Json report = Json::array();
      for (const auto& r : results) {
        ok = ok && r.passed;
        report.push_back({{"id", r.id},
                          {"property", r.name},
                          {"passed", r.passed},
                          {"trials", r.trials},
                          {"worst_margin", r.worst_margin},
                          {"runtime_seconds", r.runtime_seconds},
                          {"detail", r.detail}});
      }
      Json doc{{"seed", seed}, {"trials", trials}, {"criteria", report}};
      const bool probe_requested = app.get_subcommand("verify")->count("--generator") > 0 || force;
      if (probe_requested) {
        const auto f = gen.build();
        const auto probe = qsx::monotonicity_probe(f, trials, 0, 0, seed, force);
        doc["probe"] = {{"generator", qsx::to_json(f)},
                        {"force", force},
                        {"trials", probe.trials},
                        {"violations", probe.violations},
                        {"worst_margin", probe.worst_margin}};
        // Forced probes are diagnostics outside the theorem; they never fail the run.
        if (!force && probe.violations > 0) ok = false;
      }
      doc["passed"] = ok;
      emit(doc, out_path);
      return ok ? 0 : 1;
    } else if (*figure) {
      qsx::FigureConfig config;
      config.f = figure_gen.build();
      if (!p_source.empty()) config.center = qsx::point_from_json(read_document(p_source));
      config.radii = radii;
      config.geodesic_samples = samples;
      for (double r : radii) require_positive(r, "--radius");
      emit(qsx::figure_data(config), out_path);
    }
  } catch (const qsx::Error& e) {
    report_error(qsx::to_string(e.code()), e.what());
    return qsx::is_numeric_failure(e.code()) ? 1 : 2;
  } catch (const Json::exception& e) {
    report_error("SchemaError", e.what());
    return 2;
  }
  return 0;
}
