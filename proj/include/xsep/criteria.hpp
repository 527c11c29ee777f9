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

#pragma once

#include <optional>
#include <string>

#include "xsep/state.hpp"

namespace xsep {

/// One evaluated inequality. For the necessary criteria the state is
/// entangled when lhs (an antidiagonal functional) exceeds rhs (delta).
struct CriterionEval {
  bool pass;
  double lhs;
  double rhs;
};

/// Necessary: delta >= R. Throws NotAState.
CriterionEval criterion_diag(const XState& s);

/// Necessary: delta >= r * sqrt(1 + |sin(phi/2)|); vacuous when r = 0.
/// Throws NotAState.
CriterionEval criterion_phase(const XState& s);

/// (1 / 2*sqrt(2)) * max_theta (|c1 e^{i theta} + c2| + |c3 e^{i theta} - c4|),
/// by a 4096-point grid plus golden-section refinement. Invariant under all
/// three partial transposes.
double a_rho(const XState& s);

/// Necessary and at least as strong as criterion_phase: delta >= a_rho.
/// Throws NotAState.
CriterionEval criterion_A(const XState& s);

/// Sufficient: delta >= R * sqrt(1 + max{|sin(phi/2)|, |cos(phi/2)|}); the
/// max factor degrades to sqrt(2) when some |c_i| vanishes. A pass admits a
/// product-state certificate (decompose_eps_mixture). Throws NotAState.
CriterionEval criterion_sufficient_eps(const XState& s);

struct WitnessEval {
  std::array<cplx, 4> z;
  double lhs = 0;       // |Re(z1 c1 + z2 c2 + z3 c3 + z4 conj(c4))|
  double rhs = 0;       // delta * max_tau (|z1 e^{i tau} + z4| + |z2 e^{i tau} + conj(z3)|)
  double tau_star = 0;  // arg max of the rhs
  bool violation(double tol = kDefaultTol) const { return lhs > rhs + tol; }
};

/// Evaluates the diagonal/antidiagonal witness inequality at a caller-chosen
/// z; a violation certifies entanglement.
WitnessEval evaluate_guhne_witness(const XState& s, const std::array<cplx, 4>& z);

/// The z whose witness evaluation reproduces criterion_A's verdict, built
/// from the maximizing angle of a_rho.
std::array<cplx, 4> criterion_A_witness(const XState& s);

struct CommonMagnitudeDecision {
  bool separable;
  double lhs;  // R * sqrt(1 + |sin(phi/2)|)
  double rhs;  // delta
};

/// Exact decision for states whose |c_i| all coincide: separable iff
/// criterion_phase holds (equivalently criterion_A). Throws NotAState /
/// NotCommonMagnitude.
CommonMagnitudeDecision decide_common_magnitude(const XState& s);

struct Verdict {
  enum class Tag { NotAState, NptEntangled, PptEntangled, Separable, Inconclusive };
  Tag tag = Tag::Inconclusive;
  std::string criterion;  // violated criterion, or certificate provenance
  std::optional<double> lhs, rhs;
  std::optional<WeightedDecomposition> certificate;
};

const char* to_string(Verdict::Tag t);

/// Total classifier. Exact branches (rank <= 6, diagonal, common magnitude)
/// are decided before the inexact necessary/sufficient bands, so
/// Inconclusive is returned only where no exact characterization applies.
Verdict classify(const XState& s);

}  // namespace xsep
