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

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "xsep/state.hpp"

// Independent verification machinery: dense recomposition, a self-contained
// 8x8 Hermitian eigensolver, a 1-D global maximizer on the circle, and
// seeded random-state generators. Everything here is deliberately free of
// the block-structure shortcuts used by the main code paths, so the two can
// check each other.

namespace xsep::oracle {

/// Sum of w_k |v_k><v_k| with each product vector normalized before the
/// outer product. Hermitian PSD by construction.
Dense8 recompose(const WeightedDecomposition& d);

/// Entrywise check: max |recompose(d) - embed(s)| <= tol * (1 + max|embed(s)|).
bool verify_decomposition(const XState& s, const WeightedDecomposition& d,
                          double tol = kDefaultTol);
/// Same check, returning the raw entrywise error.
double decomposition_error(const XState& s, const WeightedDecomposition& d);

struct CircleMax {
  double arg;
  double value;
};

/// Global maximum of f over [0, 2*pi): dense grid (grid_n >= 64 points),
/// then golden-section refinement of every local bracket down to width
/// 1e-12.
CircleMax max_on_circle(const std::function<double(double)>& f, int grid_n);

/// Eigenvalues of an 8x8 Hermitian matrix by cyclic Jacobi rotations
/// (convergence threshold 1e-13 relative), ascending order. Throws
/// NotHermitian.
std::array<double, 8> hermitian_eigenvalues(Dense8 m);

/// Number of eigenvalues exceeding tol * max|eigenvalue| in magnitude.
int dense_rank(const Dense8& m, double tol = 1e-7);

/// min eigenvalue >= -tol * max(1, max|eigenvalue|).
bool dense_is_psd(const Dense8& m, double tol = 1e-7);

enum class ProfileKind { ProductMixture, RandomPpt, NearBoundary, RandomRank };

/// Reproducible generator request: identical profile + seed reproduces the
/// same states bit for bit. `rank_target` applies to RandomRank only;
/// `boundary_ratio` to NearBoundary (antidiagonal magnitude as a fraction of
/// delta).
struct RandomProfile {
  ProfileKind kind = ProfileKind::ProductMixture;
  std::uint64_t seed = 0;
  int count = 1;
  int rank_target = 4;
  double boundary_ratio = 0.95;
};

std::vector<XState> random_states(const RandomProfile& profile);

/// Parses "product_mixture", "random_ppt", "near_boundary" or
/// "random_rank(k)"; throws InvalidProfile.
RandomProfile parse_profile(const std::string& name, std::uint64_t seed,
                            int count);

}  // namespace xsep::oracle
