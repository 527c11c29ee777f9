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

#include "xsep/json_io.hpp"

namespace xsep::io {

json to_json(const cplx& z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("field '" + field + "': expected [re, im]");
  return {j[0].get<double>(), j[1].get<double>()};
}

namespace {

std::array<double, 4> reals4(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 4)
    throw ParseError("field '" + field + "': expected 4 numbers");
  std::array<double, 4> out;
  for (int i = 0; i < 4; ++i) {
    if (!j[i].is_number())
      throw ParseError("field '" + field + "': entry " + std::to_string(i) +
                       " is not a number");
    out[i] = j[i].get<double>();
  }
  return out;
}

json factor_to_json(const std::array<cplx, 2>& f) {
  return json::array({to_json(f[0]), to_json(f[1])});
}

}  // namespace

XState xstate_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  for (const char* req : {"a", "b", "c"})
    if (!j.contains(req)) throw ParseError(std::string("missing field '") + req + "'");

  const auto a = reals4(j.at("a"), "a");
  const auto b = reals4(j.at("b"), "b");

  const auto& jc = j.at("c");
  if (!jc.is_array() || jc.size() != 4)
    throw ParseError("field 'c': expected 4 complex entries");
  std::array<cplx, 4> c;
  for (int i = 0; i < 4; ++i)
    c[i] = cplx_from_json(jc[i], "c[" + std::to_string(i) + "]");

  double tol = kDefaultTol;
  if (j.contains("tol")) {
    if (!j.at("tol").is_number() || !(j.at("tol").get<double>() > 0))
      throw ParseError("field 'tol': expected a positive number");
    tol = j.at("tol").get<double>();
  }
  try {
    return XState(a, b, c, tol);
  } catch (const NegativeDiagonal& e) {
    throw ParseError(std::string("invalid state: ") + e.what());
  }
}

XState xstate_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return xstate_from_json(j);
}

json to_json(const XState& s) {
  json j;
  j["a"] = s.a();
  j["b"] = s.b();
  j["c"] = json::array({to_json(s.c(0)), to_json(s.c(1)), to_json(s.c(2)),
                        to_json(s.c(3))});
  j["tol"] = s.tol();
  return j;
}

json to_json(const WeightedDecomposition& d) {
  json terms = json::array();
  for (const auto& t : d.terms) {
    json e;
    e["w"] = t.weight;
    e["x"] = factor_to_json(t.vector.x);
    e["y"] = factor_to_json(t.vector.y);
    e["z"] = factor_to_json(t.vector.z);
    terms.push_back(std::move(e));
  }
  return json{{"terms", std::move(terms)}};
}

json to_json(const Verdict& v) {
  json j;
  j["tag"] = to_string(v.tag);
  if (!v.criterion.empty()) j["criterion"] = v.criterion;
  if (v.lhs) j["lhs"] = *v.lhs;
  if (v.rhs) j["rhs"] = *v.rhs;
  if (v.certificate) j["certificate"] = to_json(*v.certificate);
  return j;
}

json to_json(const InvariantSummary& inv) {
  json j;
  j["delta"] = inv.delta;
  j["big_r"] = inv.big_r;
  j["small_r"] = inv.small_r;
  j["phi"] = inv.phi ? json(*inv.phi) : json(nullptr);
  json th = json::array();
  for (const auto& t : inv.thetas) th.push_back(t ? json(*t) : json(nullptr));
  j["thetas"] = std::move(th);
  j["rank"] = inv.rank;
  j["pt_ranks"] = inv.pt_ranks;
  j["p_score"] = inv.p_score;
  return j;
}

json to_json(const WitnessEval& w) {
  json j;
  j["z"] = json::array({to_json(w.z[0]), to_json(w.z[1]), to_json(w.z[2]),
                        to_json(w.z[3])});
  j["lhs"] = w.lhs;
  j["rhs"] = w.rhs;
  j["tau_star"] = w.tau_star;
  j["violation"] = w.violation();
  return j;
}

json to_json(const Rank6Plan& plan) {
  json j;
  j["partition"] = json::array({plan.partition[0] + 1, plan.partition[1] + 1});
  json ops = json::array();
  for (auto op : plan.canonical_ops) ops.push_back(to_string(op));
  j["canonical_ops"] = std::move(ops);
  j["t"] = plan.t;
  j["theta"] = plan.theta;
  j["r"] = plan.r;
  j["s"] = plan.s;
  json al = json::array(), be = json::array();
  for (const auto& a : plan.alphas) al.push_back(to_json(a));
  for (const auto& b : plan.betas) be.push_back(to_json(b));
  j["alphas"] = std::move(al);
  j["betas"] = std::move(be);
  j["p"] = plan.p;
  j["q"] = plan.q;
  j["z"] = plan.z ? json::array({to_json((*plan.z)[0]), to_json((*plan.z)[1])})
                  : json(nullptr);
  j["zprime"] = plan.zprime
                    ? json::array({to_json((*plan.zprime)[0]),
                                   to_json((*plan.zprime)[1])})
                    : json(nullptr);
  j["A_plus"] = plan.a_plus;
  j["A_minus"] = plan.a_minus;
  j["B_plus"] = plan.b_plus;
  j["B_minus"] = plan.b_minus;
  j["x"] = plan.x;
  j["y"] = plan.y;
  j["gamma_rho"] = plan.gamma_rho;
  j["ell_rho"] = plan.ell_rho;
  return j;
}

std::array<cplx, 4> z4_from_string(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON for z: ") + e.what());
  }
  if (!j.is_array() || j.size() != 4)
    throw ParseError("z: expected 4 complex entries");
  std::array<cplx, 4> z;
  for (int i = 0; i < 4; ++i)
    z[i] = cplx_from_json(j[i], "z[" + std::to_string(i) + "]");
  return z;
}

}  // namespace xsep::io
