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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "xsep/errors.hpp"

namespace xsep {

using cplx = std::complex<double>;

inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// x >= y up to a hybrid absolute/relative slack.
inline bool approx_ge(double x, double y, double tol) {
  return x >= y - tol * std::max({std::abs(x), std::abs(y), 1.0});
}

inline bool approx_eq(double x, double y, double tol) {
  return std::abs(x - y) <= tol * std::max({std::abs(x), std::abs(y), 1.0});
}

/// Wraps an angle into [0, 2*pi).
inline double wrap_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0) r += kTwoPi;
  if (r >= kTwoPi) r = 0;
  return r;
}

/// Dense 8x8 complex matrix in the lexicographic three-qubit product basis
/// |000>, |001>, ..., |111>.
class Dense8 {
 public:
  cplx& operator()(int i, int j) { return m_[i * 8 + j]; }
  const cplx& operator()(int i, int j) const { return m_[i * 8 + j]; }

  static Dense8 identity();

  Dense8& operator+=(const Dense8& o);
  Dense8& operator-=(const Dense8& o);
  Dense8& operator*=(double k);
  friend Dense8 operator+(Dense8 l, const Dense8& r) { return l += r; }
  friend Dense8 operator-(Dense8 l, const Dense8& r) { return l -= r; }
  friend Dense8 operator*(double k, Dense8 m) { return m *= k; }

  double max_abs() const;
  /// max_{ij} |m_ij - conj(m_ji)|
  double hermiticity_defect() const;
  /// this += w * |v><v|
  void add_scaled_outer(const std::array<cplx, 8>& v, double w);

 private:
  std::array<cplx, 64> m_{};
};

double max_abs_diff(const Dense8& l, const Dense8& r);

/// Pure product vector x (x) y (x) z with two-component factors for the
/// three subsystems. ket() lists the 8 amplitudes in lexicographic order.
struct ProductVector {
  std::array<cplx, 2> x{}, y{}, z{};

  std::array<cplx, 8> ket() const;
  double norm2() const;  // squared norm of ket()
};

struct WeightedTerm {
  double weight;  // > 0
  ProductVector vector;
};

/// Convex combination of pure product states; the separability certificates
/// produced by the decomposers.
struct WeightedDecomposition {
  std::vector<WeightedTerm> terms;

  void add(double w, const ProductVector& v) { terms.push_back({w, v}); }
  /// Appends every term of `other`, with weights multiplied by `factor`.
  void append(const WeightedDecomposition& other, double factor = 1.0);
  int size() const { return static_cast<int>(terms.size()); }
};

enum class System { A, B, C };

enum class SymmetryOp { SwapAB, SwapAC, SwapBC, FlipA, FlipB, FlipC };

const char* to_string(System s);
const char* to_string(SymmetryOp op);

/// Three-qubit X-shaped Hermitian matrix
///
///   diag  a1 a2 a3 a4 b4 b3 b2 b1     antidiag  c1 c2 c3 c4 conj(c4..c1)
///
/// States are not required to have unit trace; every criterion in this
/// library is homogeneous of degree one in the state.
class XState {
 public:
  XState(const std::array<double, 4>& a, const std::array<double, 4>& b,
         const std::array<cplx, 4>& c, double tol = kDefaultTol);

  double a(int i) const { return a_[i]; }
  double b(int i) const { return b_[i]; }
  cplx c(int i) const { return c_[i]; }
  const std::array<double, 4>& a() const { return a_; }
  const std::array<double, 4>& b() const { return b_; }
  const std::array<cplx, 4>& c() const { return c_; }
  double tol() const { return tol_; }

  /// Largest magnitude among the entries, floored at 1; used to scale
  /// tolerance comparisons.
  double scale() const { return scale_; }
  /// True when every antidiagonal entry is negligible at this state's scale.
  bool is_diagonal() const;

  /// Same diagonal, new antidiagonal.
  XState with_c(const std::array<cplx, 4>& c) const;

 private:
  std::array<double, 4> a_, b_;
  std::array<cplx, 4> c_;
  double tol_;
  double scale_;
};

XState operator*(double k, const XState& s);
XState operator+(const XState& l, const XState& r);

/// Scalar invariants: delta is the minimum of the six diagonal radicals
/// sqrt(a_i b_i), (a1 b2 b3 a4)^(1/4), (b1 a2 a3 b4)^(1/4); big_r / small_r
/// are the extreme antidiagonal magnitudes; phi is the phase difference
/// (theta1+theta4)-(theta2+theta3) mod 2*pi, reported only when every |c_i|
/// clears the tolerance.
struct InvariantSummary {
  double delta = 0;
  double big_r = 0;
  double small_r = 0;
  std::optional<double> phi;
  std::array<std::optional<double>, 4> thetas;
  int rank = 0;
  std::array<int, 3> pt_ranks{};  // systems A, B, C
  int p_score = 0;
};

Dense8 embed(const XState& s);

/// Keeps the diagonal and antidiagonal of m, discards everything else.
/// Throws NotHermitian when m is not Hermitian within tol.
XState xpart(const Dense8& m, double tol = kDefaultTol);

/// Partial transpose over one subsystem. Diagonals are unchanged; the
/// antidiagonal permutes as
///   A: (conj c4, conj c3, conj c2, conj c1)
///   B: (c3, c4, c1, c2)
///   C: (c2, c1, c4, c3)
XState partial_transpose(const XState& s, System sys);

/// Partial transpose of a dense matrix, by index bookkeeping. Independent of
/// the XState permutation rules; used to cross-check them.
Dense8 dense_partial_transpose(const Dense8& m, System sys);

/// Positivity reduces to the four 2x2 blocks: a_i b_i >= |c_i|^2 for all i.
bool is_positive(const XState& s);

/// All three partial transposes positive; for a positive X-state this is
/// min_i sqrt(a_i b_i) >= max_i |c_i|. Throws NotAState.
bool is_ppt(const XState& s);

/// Matrix rank via the block structure (each 2x2 block contributes 0, 1 or
/// 2). Throws NotAState.
int rank(const XState& s);

InvariantSummary invariants(const XState& s);

/// theta1 + theta4 == theta2 + theta3 (mod 2*pi). Requires every |c_i| > tol,
/// else throws PhaseUndefined.
bool phase_identity_holds(const XState& s);

/// Conjugation by the local permutation unitary named by op (subsystem swap
/// or |0><->|1| flip). Computed densely and re-extracted; the result is
/// exactly X-shaped.
XState local_symmetry(const XState& s, SymmetryOp op);

/// The same symmetry applied to a product vector, factor by factor.
ProductVector apply_symmetry(const ProductVector& v, SymmetryOp op);

/// Computational basis state |ijk> (pos = 4i+2j+k, 0-based) as a product
/// vector.
ProductVector basis_product_vector(int pos);

}  // namespace xsep
