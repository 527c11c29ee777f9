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

#include "xsep/criteria.hpp"

#include <cmath>

#include "xsep/decompose.hpp"
#include "xsep/oracle.hpp"

namespace xsep {

namespace {

constexpr int kGridN = 4096;
constexpr double kInvTwoSqrt2 = 0.35355339059327373;  // 1 / (2 sqrt 2)

double phase_factor(const InvariantSummary& inv) {
  return inv.phi ? std::abs(std::sin(*inv.phi / 2.0)) : 0.0;
}

}  // namespace

CriterionEval criterion_diag(const XState& s) {
  if (!is_positive(s)) throw NotAState();
  const auto inv = invariants(s);
  return {approx_ge(inv.delta, inv.big_r, s.tol()), inv.big_r, inv.delta};
}

CriterionEval criterion_phase(const XState& s) {
  if (!is_positive(s)) throw NotAState();
  const auto inv = invariants(s);
  const double lhs = inv.small_r * std::sqrt(1.0 + phase_factor(inv));
  const bool vacuous = inv.small_r <= s.tol() * s.scale();
  return {vacuous || approx_ge(inv.delta, lhs, s.tol()), lhs, inv.delta};
}

double a_rho(const XState& s) {
  const cplx c1 = s.c(0), c2 = s.c(1), c3 = s.c(2), c4 = s.c(3);
  if (std::abs(c1) + std::abs(c2) + std::abs(c3) + std::abs(c4) == 0) return 0;
  auto f = [&](double th) {
    const cplx e(std::cos(th), std::sin(th));
    return std::abs(c1 * e + c2) + std::abs(c3 * e - c4);
  };
  return kInvTwoSqrt2 * oracle::max_on_circle(f, kGridN).value;
}

CriterionEval criterion_A(const XState& s) {
  if (!is_positive(s)) throw NotAState();
  const auto inv = invariants(s);
  const double lhs = a_rho(s);
  return {approx_ge(inv.delta, lhs, s.tol()), lhs, inv.delta};
}

CriterionEval criterion_sufficient_eps(const XState& s) {
  if (!is_positive(s)) throw NotAState();
  const auto inv = invariants(s);
  double factor;
  if (inv.phi) {
    factor = std::max(std::abs(std::sin(*inv.phi / 2.0)),
                      std::abs(std::cos(*inv.phi / 2.0)));
  } else {
    // some antidiagonal slot vanishes: the sign-string phases are free, so
    // only the worst-case factor is available
    factor = 1.0;
  }
  const double lhs = inv.big_r * std::sqrt(1.0 + factor);
  return {approx_ge(inv.delta, lhs, s.tol()), lhs, inv.delta};
}

WitnessEval evaluate_guhne_witness(const XState& s,
                                   const std::array<cplx, 4>& z) {
  WitnessEval w;
  w.z = z;
  w.lhs = std::abs((z[0] * s.c(0) + z[1] * s.c(1) + z[2] * s.c(2) +
                    z[3] * std::conj(s.c(3)))
                       .real());
  auto f = [&](double tau) {
    const cplx e(std::cos(tau), std::sin(tau));
    return std::abs(z[0] * e + z[3]) + std::abs(z[1] * e + std::conj(z[2]));
  };
  const auto m = oracle::max_on_circle(f, kGridN);
  w.rhs = invariants(s).delta * m.value;
  w.tau_star = m.arg;
  return w;
}

std::array<cplx, 4> criterion_A_witness(const XState& s) {
  const cplx c1 = s.c(0), c2 = s.c(1), c3 = s.c(2), c4 = s.c(3);
  auto f = [&](double th) {
    const cplx e(std::cos(th), std::sin(th));
    return std::abs(c1 * e + c2) + std::abs(c3 * e - c4);
  };
  const double th = oracle::max_on_circle(f, kGridN).arg;
  const cplx e(std::cos(th), std::sin(th));
  const double phi = -std::arg(c1 * e + c2);
  const double psi = -std::arg(c3 * e - c4);
  auto u = [](double t) { return cplx(std::cos(t), std::sin(t)); };
  return {u(th + phi), u(phi), u(th + psi), -u(-psi)};
}

CommonMagnitudeDecision decide_common_magnitude(const XState& s) {
  if (!is_positive(s)) throw NotAState();
  const auto inv = invariants(s);
  if (!approx_eq(inv.big_r, inv.small_r, s.tol())) throw NotCommonMagnitude();
  const double lhs = inv.big_r * std::sqrt(1.0 + phase_factor(inv));
  return {approx_ge(inv.delta, lhs, s.tol()), lhs, inv.delta};
}

const char* to_string(Verdict::Tag t) {
  switch (t) {
    case Verdict::Tag::NotAState: return "NotAState";
    case Verdict::Tag::NptEntangled: return "NptEntangled";
    case Verdict::Tag::PptEntangled: return "PptEntangled";
    case Verdict::Tag::Separable: return "Separable";
    default: return "Inconclusive";
  }
}

namespace {

Verdict separable_verdict(std::string via, WeightedDecomposition cert) {
  Verdict v;
  v.tag = Verdict::Tag::Separable;
  v.criterion = std::move(via);
  v.certificate = std::move(cert);
  return v;
}

// classify must stay total: when a certificate construction trips over a
// tolerance-boundary precondition, report Separable without one.
template <typename Fn>
Verdict separable_verdict_try(std::string via, Fn&& build) {
  Verdict v;
  v.tag = Verdict::Tag::Separable;
  v.criterion = std::move(via);
  try {
    v.certificate = build();
  } catch (const Error&) {
  }
  return v;
}

Verdict ppt_entangled(std::string criterion, double lhs, double rhs) {
  Verdict v;
  v.tag = Verdict::Tag::PptEntangled;
  v.criterion = std::move(criterion);
  v.lhs = lhs;
  v.rhs = rhs;
  return v;
}

// Diagnostic numbers for a failed rank <= 6 characterization: which of the
// three conditions broke, with lhs > rhs quantifying the violation.
Verdict rank6_failure(const XState& s, const InvariantSummary& inv) {
  if (!approx_ge(inv.delta, inv.big_r, s.tol()))
    return ppt_entangled("rank<=6 characterization: diag", inv.big_r, inv.delta);

  bool partition_exists = false;
  for (int i = 0; i < 4 && !partition_exists; ++i)
    for (int j = i + 1; j < 4 && !partition_exists; ++j) {
      bool ok = true;
      for (int k = 0; k < 4; ++k) {
        const double gm = std::sqrt(s.a(k) * s.b(k));
        const double m = std::abs(s.c(k));
        if (k == i || k == j)
          ok = ok && approx_eq(gm, inv.big_r, s.tol()) &&
               approx_eq(m, inv.big_r, s.tol());
        else
          ok = ok && approx_ge(gm, inv.big_r, s.tol()) &&
               approx_eq(m, inv.small_r, s.tol());
      }
      partition_exists = ok;
    }
  if (!partition_exists)
    return ppt_entangled("rank<=6 characterization: partition", 1.0, 0.0);

  // phase identity defect, in radians
  const cplx w = s.c(0) * s.c(3) * std::conj(s.c(1) * s.c(2));
  const double defect = std::abs(std::arg(w));
  return ppt_entangled("rank<=6 characterization: phase identity", defect, 0.0);
}

}  // namespace

Verdict classify(const XState& s) {
  if (!is_positive(s)) {
    Verdict v;
    v.tag = Verdict::Tag::NotAState;
    v.criterion = "positivity";
    for (int i = 0; i < 4; ++i) {
      const double prod = s.a(i) * s.b(i), m2 = std::norm(s.c(i));
      if (prod < m2) {
        v.lhs = m2;
        v.rhs = prod;
        break;
      }
    }
    return v;
  }

  if (!is_ppt(s)) {
    Verdict v;
    v.tag = Verdict::Tag::NptEntangled;
    const System systems[3] = {System::A, System::B, System::C};
    for (System sys : systems) {
      if (!is_positive(partial_transpose(s, sys))) {
        v.criterion = std::string("ppt(") + to_string(sys) + ")";
        break;
      }
    }
    const auto inv = invariants(s);
    double min_gm = std::sqrt(s.a(0) * s.b(0));
    for (int i = 1; i < 4; ++i)
      min_gm = std::min(min_gm, std::sqrt(s.a(i) * s.b(i)));
    v.lhs = inv.big_r;
    v.rhs = min_gm;
    return v;
  }

  const auto inv = invariants(s);
  const bool diagonal = s.is_diagonal();

  if (inv.rank <= 6 && !diagonal) {
    const auto chk = check_rank6_separability(s);
    if (chk.status == Rank6Check::Status::Separable) {
      return separable_verdict_try("rank<=6 characterization", [&] {
        switch (inv.rank) {
          case 4: return decompose_rank4(s);
          case 5: return decompose_rank5(s);
          default: return optimal_decompose_rank6(s).first;
        }
      });
    }
    return rank6_failure(s, inv);
  }

  if (diagonal) return separable_verdict("diagonal", decompose_diagonal(s));

  if (approx_eq(inv.big_r, inv.small_r, s.tol())) {
    const auto dec = decide_common_magnitude(s);
    if (dec.separable)
      return separable_verdict_try(
          "common magnitude", [&] { return decompose_common_magnitude(s); });
    return ppt_entangled("phase", dec.lhs, dec.rhs);
  }

  if (const auto e = criterion_diag(s); !e.pass)
    return ppt_entangled("diag", e.lhs, e.rhs);
  if (const auto e = criterion_phase(s); !e.pass)
    return ppt_entangled("phase", e.lhs, e.rhs);
  if (const auto e = criterion_A(s); !e.pass)
    return ppt_entangled("A", e.lhs, e.rhs);

  if (criterion_sufficient_eps(s).pass)
    return separable_verdict_try("sufficient eps-mixture",
                                 [&] { return decompose_eps_mixture(s); });

  return Verdict{};  // Inconclusive
}

}  // namespace xsep
