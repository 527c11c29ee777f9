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
#include <utility>
#include <vector>

#include "xsep/state.hpp"

// Constructive separability certificates. Every decomposer returns weights
// and pure product vectors whose dense recomposition equals the embedded
// input entrywise; oracle::verify_decomposition is the acceptance check.

namespace xsep {

/// X-part of |xi><xi| together with the four sign-flipped product vectors
/// whose equal mixture reproduces that X-part exactly (as a full 8x8
/// matrix). The flips negate the second component of two of the three
/// factors: (+++), (+--), (-+-), (--+).
std::pair<XState, std::array<ProductVector, 4>> product_xpart_family(
    const ProductVector& xi);

/// Rank-four separability conditions: a1 a4 = a2 a3, sqrt(a_i b_i) = |c_j|
/// for all i, j, and c1 c4 = c2 c3 (all at the state's tolerance).
bool rank4_conditions(const XState& s);

/// The canonical product vector of a separable rank-four X-state and its
/// sign-flip family, with the phase angles used to build it.
struct Rank4Data {
  ProductVector xi;
  std::array<ProductVector, 4> family;
  double alpha = 0, beta = 0, gamma = 0;
};

Rank4Data build_rank4(const XState& s);  // throws ConditionsFail

/// Four equally weighted terms recomposing embed(s) exactly.
WeightedDecomposition decompose_rank4(const XState& s);

/// Splits s into a rank-four X-state plus a diagonal remainder. Requires
/// delta >= R = r and c1 c4 = c2 c3; at most 4 + 8 terms.
WeightedDecomposition decompose_suff4(const XState& s);

/// Certificate for a separable common-magnitude state: s is written as a
/// two-point mixture over antidiagonals rotated by the co-linear pair
/// u = r e^{i phi/2}, v = r e^{i(phi/2 - pi/2)}, each summand handled by
/// decompose_suff4. Throws NotSeparable.
WeightedDecomposition decompose_common_magnitude(const XState& s);

/// Per-slot sign mixture: weight of each sign string epsilon in the convex
/// expansion of s over common-magnitude states X(a, b, R * Phi^epsilon).
/// Strings carry slot i's sign in bit i (set = +1); zero-weight strings are
/// dropped.
std::vector<std::pair<int, double>> eps_mixture_weights(const XState& s);

/// Certificate for a state passing criterion_sufficient_eps: convex
/// combination of common-magnitude states, one per sign string, each
/// decomposed by decompose_common_magnitude.
WeightedDecomposition decompose_eps_mixture(const XState& s);

struct Rank6Check {
  enum class Status { Separable, Entangled, NotApplicable };
  Status status = Status::NotApplicable;
  /// 0-based slots {i1, i2} carrying sqrt(a_i b_i) = R = |c_i|;
  /// lexicographically smallest valid partition.
  std::optional<std::array<int, 2>> partition;
};

/// Exact separability test for non-diagonal states of rank <= 6:
/// (i) delta >= R, (ii) a partition {i1,i2} | {i3,i4} with
/// sqrt(a_i b_i) = R = |c_i| on one side and sqrt(a_j b_j) >= R >= r = |c_j|
/// on the other, (iii) the phase identity when r > 0.
Rank6Check check_rank6_separability(const XState& s);

/// Symmetry ops mapping a partition onto {1,2} (0-based {0,1}).
std::vector<SymmetryOp> canonical_ops_for(const std::array<int, 2>& partition);

/// Constructive certificate for any separable rank <= 6 state: two
/// rank-four halves with antidiagonal slots 3,4 pushed out to magnitude R,
/// plus a diagonal remainder. Not minimal in general. Throws NotSeparable.
WeightedDecomposition decompose_rank6(const XState& s);

/// Rank-five split: the forced rank-four X-state plus a diagonal remainder
/// of rank one or two (5 or 6 terms). Throws NotSeparable / WrongRank.
WeightedDecomposition decompose_rank5(const XState& s);

/// max rank over s and its three partial transposes. Throws NotAState.
int gamma(const XState& s);

/// Minimal number of product states for a separable rank-6 state: gamma(s),
/// except 8 in the exceptional class (gamma = 7 with a1 a4 != a2 a3 and
/// b1 b4 != b2 b3 after canonicalization). Throws PreconditionFail.
int length_rank6(const XState& s);

/// Everything the minimal-length construction committed to, in the
/// canonical frame ({i1,i2} -> {1,2}, R scaled to 1).
struct Rank6Plan {
  std::array<int, 2> partition{};          // 0-based, pre-canonicalization
  std::vector<SymmetryOp> canonical_ops;
  double t = 0;      // c4 = (2t - 1) e^{2 i theta}
  double theta = 0;
  double r = 0, s = 0;                     // roots of w^2 - x w + y
  std::vector<cplx> alphas, betas;         // 3 each, or 2 when t = 1
  std::vector<double> p, q;
  std::optional<std::array<cplx, 2>> z, zprime;  // absent when r = s
  double a_plus = 0, a_minus = 0, b_plus = 0, b_minus = 0;
  double x = 0, y = 0;
  int gamma_rho = 0;
  int ell_rho = 0;
};

/// Minimal-length decomposition of a separable rank-6 state; the term count
/// equals length_rank6(s). Throws NotSeparable / WrongRank.
std::pair<WeightedDecomposition, Rank6Plan> optimal_decompose_rank6(
    const XState& s);

/// Basis-state certificate for a diagonal state.
WeightedDecomposition decompose_diagonal(const XState& s);

/// Extreme point of the convex body of separable X-states: non-diagonal of
/// rank four, or diagonal of rank one. Throws NotSeparable when the
/// classifier cannot certify separability.
bool is_extreme_in_SX(const XState& s);

}  // namespace xsep
