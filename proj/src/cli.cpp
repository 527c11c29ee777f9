// Copyright 2026 The xsep authors
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

#include "xsep/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "xsep/criteria.hpp"
#include "xsep/decompose.hpp"
#include "xsep/json_io.hpp"
#include "xsep/oracle.hpp"

namespace xsep::cli {

namespace {

using io::json;

std::string read_input(const std::string& spec, std::istream& in) {
  if (spec == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  if (!spec.empty() && (spec[0] == '{' || spec[0] == '[')) return spec;
  std::ifstream f(spec);
  if (!f) throw ParseError("cannot open input file: " + spec);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

XState load_state(const std::string& spec, double tol_override) {
  XState s = io::xstate_from_string(read_input(spec, std::cin));
  if (tol_override > 0) return XState(s.a(), s.b(), s.c(), tol_override);
  return s;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Largest t in [0, hi] where pred holds, assuming pred is monotone along the
// ray; bisected to width 5e-8.
double bisect_edge(const std::function<bool(double)>& pred, double hi) {
  double lo = 0.0;
  if (pred(hi)) return hi;
  while (hi - lo > 5e-8) {
    const double mid = 0.5 * (lo + hi);
    (pred(mid) ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

XState example1_state(double r, double theta) {
  const cplx e(std::cos(theta), std::sin(theta));
  return XState({1, 1, 1, 1}, {1, 1, 1, 1}, {r, r, r * e, r});
}

int cmd_classify(const std::string& input, double tol, std::ostream& out) {
  const XState s = load_state(input, tol);
  const Verdict v = classify(s);
  out << io::to_json(v).dump() << "\n";
  return v.tag == Verdict::Tag::NotAState ? 2 : 0;
}

int cmd_validate(const std::string& input, double tol, std::ostream& out) {
  const XState s = load_state(input, tol);
  json j = io::to_json(invariants(s));
  const bool positive = is_positive(s);
  j["positive"] = positive;
  j["ppt"] = positive ? json(is_ppt(s)) : json(nullptr);
  out << j.dump() << "\n";
  return positive ? 0 : 2;
}

int cmd_decompose(const std::string& input, double tol, std::ostream& out) {
  const XState s = load_state(input, tol);
  const Verdict v = classify(s);
  if (v.tag == Verdict::Tag::NotAState) throw NotAState();
  if (v.tag != Verdict::Tag::Separable || !v.certificate)
    throw NotDecomposable("verdict is " + std::string(to_string(v.tag)) +
                          (v.criterion.empty() ? "" : " (" + v.criterion + ")"));

  json j;
  j["decomposition"] = io::to_json(*v.certificate);
  j["terms"] = v.certificate->size();
  const double err = oracle::decomposition_error(s, *v.certificate);
  j["max_err"] = err;
  j["verified"] =
      oracle::verify_decomposition(s, *v.certificate, s.tol());
  if (!s.is_diagonal() && is_positive(s) && rank(s) == 6 &&
      v.criterion == "rank<=6 characterization")
    j["plan"] = io::to_json(optimal_decompose_rank6(s).second);
  out << j.dump() << "\n";
  return 0;
}

int cmd_witness(const std::string& input, const std::string& ztext, double tol,
                std::ostream& out) {
  const XState s = load_state(input, tol);
  const auto z = io::z4_from_string(ztext);
  out << io::to_json(evaluate_guhne_witness(s, z)).dump() << "\n";
  return 0;
}

int cmd_random(const std::string& profile_name, std::uint64_t seed, int count,
               std::ostream& out) {
  const auto profile = oracle::parse_profile(profile_name, seed, count);
  for (const XState& s : oracle::random_states(profile))
    out << io::to_json(s).dump() << "\n";
  return 0;
}

// Rows accumulate as (header, values) so the same sweep can be emitted as
// CSV or as a JSON array.
struct CurveTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void emit(const std::string& format, std::ostream& out) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& row : rows) {
        json obj;
        for (std::size_t i = 0; i < columns.size(); ++i) obj[columns[i]] = row[i];
        arr.push_back(std::move(obj));
      }
      out << arr.dump() << "\n";
      return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i)
      out << (i ? "," : "") << columns[i];
    out << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        out << (i ? "," : "") << fmt17(row[i]);
      out << "\n";
    }
  }
};

CurveTable curve_example1(int samples) {
  CurveTable t;
  t.columns = {"theta", "r_separable", "r_ppt"};
  for (int k = 0; k < samples; ++k) {
    const double theta = kTwoPi * k / (samples - 1);
    const double r_sep = bisect_edge(
        [&](double r) {
          return classify(example1_state(r, theta)).tag ==
                 Verdict::Tag::Separable;
        },
        1.5);
    const double r_ppt = bisect_edge(
        [&](double r) {
          const XState s = example1_state(r, theta);
          return is_positive(s) && is_ppt(s);
        },
        1.5);
    t.rows.push_back({theta, r_sep, r_ppt});
  }
  return t;
}

CurveTable curve_example2(int samples) {
  CurveTable t;
  t.columns = {"psi",    "p_A", "q_A",     "r_state",
               "r_diag", "r_A", "r_phase", "r_sufficient"};
  for (int k = 0; k < samples; ++k) {
    const double psi = kTwoPi * k / samples;
    const double cp = std::cos(psi), sq = std::sin(psi);
    auto state_at = [&](double rad) {
      const double p = rad * cp, q = rad * sq;
      return XState({1, 1, 1, 1}, {1, 1, 1, 1}, {p, p, q, -q});
    };
    const double r_state = bisect_edge(
        [&](double rad) { return is_positive(state_at(rad)); }, 4.0);
    auto edge = [&](auto criterion) {
      return bisect_edge(
          [&](double rad) {
            const XState s = state_at(rad);
            return is_positive(s) && criterion(s).pass;
          },
          r_state);
    };
    const double r_diag = edge([](const XState& s) { return criterion_diag(s); });
    const double r_a = edge([](const XState& s) { return criterion_A(s); });
    const double r_phase =
        edge([](const XState& s) { return criterion_phase(s); });
    const double r_suff =
        edge([](const XState& s) { return criterion_sufficient_eps(s); });
    t.rows.push_back(
        {psi, r_a * cp, r_a * sq, r_state, r_diag, r_a, r_phase, r_suff});
  }
  return t;
}

CurveTable curve_suff_phi(int samples) {
  // common-magnitude ray with prescribed phase difference phi:
  // c = (r, r, r e^{-i phi}, r)
  CurveTable t;
  t.columns = {"phi", "r_sufficient", "r_exact", "r_necessary"};
  for (int k = 0; k < samples; ++k) {
    const double phi = kTwoPi * k / samples;
    auto state_at = [&](double r) {
      const cplx e(std::cos(phi), -std::sin(phi));
      return XState({1, 1, 1, 1}, {1, 1, 1, 1}, {r, r, r * e, r});
    };
    const double r_suff = bisect_edge(
        [&](double r) { return criterion_sufficient_eps(state_at(r)).pass; },
        1.0);
    const double r_exact = bisect_edge(
        [&](double r) {
          return classify(state_at(r)).tag == Verdict::Tag::Separable;
        },
        1.0);
    const double r_nec = bisect_edge(
        [&](double r) { return criterion_diag(state_at(r)).pass; }, 1.0);
    t.rows.push_back({phi, r_suff, r_exact, r_nec});
  }
  return t;
}

int cmd_curve(const std::string& family, int samples, const std::string& format,
              std::ostream& out) {
  if (samples < 8) throw ParseError("curve: need at least 8 samples");
  CurveTable table;
  if (family == "example1")
    table = curve_example1(samples);
  else if (family == "example2")
    table = curve_example2(samples);
  else if (family == "suffPhi")
    table = curve_suff_phi(samples);
  else
    throw ParseError("unknown curve family: " + family);
  table.emit(format, out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"three-qubit X-state separability toolkit"};
  app.require_subcommand(1);

  double tol = -1.0;
  app.add_option("--tol", tol, "comparison tolerance override");

  std::string input, ztext, family, profile = "product_mixture";
  std::uint64_t seed = 0;
  int samples = 64;

  auto* c_validate = app.add_subcommand("validate", "invariants and positivity");
  c_validate->add_option("input", input, "file path, '-' or inline JSON")
      ->required();

  auto* c_classify = app.add_subcommand("classify", "separability verdict");
  c_classify->add_option("input", input)->required();

  auto* c_decompose =
      app.add_subcommand("decompose", "product-state certificate");
  c_decompose->add_option("input", input)->required();

  auto* c_witness = app.add_subcommand("witness", "evaluate a witness at z");
  c_witness->add_option("input", input)->required();
  c_witness->add_option("--z", ztext, "4 complex numbers as JSON")->required();

  auto* c_curve = app.add_subcommand("curve", "boundary sweep as CSV");
  c_curve->add_option("family", family, "example1 | example2 | suffPhi")
      ->required();
  c_curve->add_option("--samples", samples, "number of grid points");
  std::string format = "csv";
  c_curve->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* c_random = app.add_subcommand("random", "sample reproducible states");
  c_random->add_option("profile", profile,
                       "product_mixture | random_ppt | near_boundary | "
                       "random_rank(k)");
  c_random->add_option("--seed", seed, "stream seed");
  c_random->add_option("--samples", samples, "number of states");

  std::vector<const char*> argv;
  argv.push_back("xsep");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (c_validate->parsed()) return cmd_validate(input, tol, out);
    if (c_classify->parsed()) return cmd_classify(input, tol, out);
    if (c_decompose->parsed()) return cmd_decompose(input, tol, out);
    if (c_witness->parsed()) return cmd_witness(input, ztext, tol, out);
    if (c_curve->parsed()) return cmd_curve(family, samples, format, out);
    if (c_random->parsed()) return cmd_random(profile, seed, samples, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidProfile& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const NotAState&) {
    err << "error: input is not a state (positivity fails)\n";
    return 2;
  } catch (const NotDecomposable& e) {
    err << "error: not decomposable: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 70;
  }
  return 0;
}

}  // namespace xsep::cli
