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

#include "xsep/state.hpp"

#include <limits>

namespace xsep {

Dense8 Dense8::identity() {
  Dense8 m;
  for (int i = 0; i < 8; ++i) m(i, i) = 1.0;
  return m;
}

Dense8& Dense8::operator+=(const Dense8& o) {
  for (int k = 0; k < 64; ++k) m_[k] += o.m_[k];
  return *this;
}

Dense8& Dense8::operator-=(const Dense8& o) {
  for (int k = 0; k < 64; ++k) m_[k] -= o.m_[k];
  return *this;
}

Dense8& Dense8::operator*=(double k) {
  for (auto& v : m_) v *= k;
  return *this;
}

double Dense8::max_abs() const {
  double m = 0;
  for (const auto& v : m_) m = std::max(m, std::abs(v));
  return m;
}

double Dense8::hermiticity_defect() const {
  double d = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

void Dense8::add_scaled_outer(const std::array<cplx, 8>& v, double w) {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) (*this)(i, j) += w * v[i] * std::conj(v[j]);
}

double max_abs_diff(const Dense8& l, const Dense8& r) {
  double d = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) d = std::max(d, std::abs(l(i, j) - r(i, j)));
  return d;
}

std::array<cplx, 8> ProductVector::ket() const {
  std::array<cplx, 8> v;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) v[4 * i + 2 * j + k] = x[i] * y[j] * z[k];
  return v;
}

double ProductVector::norm2() const {
  auto n = [](const std::array<cplx, 2>& f) {
    return std::norm(f[0]) + std::norm(f[1]);
  };
  return n(x) * n(y) * n(z);
}

void WeightedDecomposition::append(const WeightedDecomposition& other,
                                   double factor) {
  for (const auto& t : other.terms) terms.push_back({factor * t.weight, t.vector});
}

const char* to_string(System s) {
  switch (s) {
    case System::A: return "A";
    case System::B: return "B";
    default: return "C";
  }
}

const char* to_string(SymmetryOp op) {
  switch (op) {
    case SymmetryOp::SwapAB: return "SwapAB";
    case SymmetryOp::SwapAC: return "SwapAC";
    case SymmetryOp::SwapBC: return "SwapBC";
    case SymmetryOp::FlipA: return "FlipA";
    case SymmetryOp::FlipB: return "FlipB";
    default: return "FlipC";
  }
}

XState::XState(const std::array<double, 4>& a, const std::array<double, 4>& b,
               const std::array<cplx, 4>& c, double tol)
    : a_(a), b_(b), c_(c), tol_(tol) {
  if (!(tol > 0)) throw Error("tolerance must be positive");
  for (int i = 0; i < 4; ++i) {
    if (a_[i] < -tol_) throw NegativeDiagonal(i);
    if (b_[i] < -tol_) throw NegativeDiagonal(i);
    // values in [-tol, 0) are rounding noise
    if (a_[i] < 0) a_[i] = 0;
    if (b_[i] < 0) b_[i] = 0;
  }
  scale_ = 1.0;
  for (int i = 0; i < 4; ++i)
    scale_ = std::max({scale_, a_[i], b_[i], std::abs(c_[i])});
}

bool XState::is_diagonal() const {
  for (int i = 0; i < 4; ++i)
    if (std::abs(c_[i]) > tol_ * scale_) return false;
  return true;
}

XState XState::with_c(const std::array<cplx, 4>& c) const {
  return XState(a_, b_, c, tol_);
}

XState operator*(double k, const XState& s) {
  std::array<double, 4> a, b;
  std::array<cplx, 4> c;
  for (int i = 0; i < 4; ++i) {
    a[i] = k * s.a(i);
    b[i] = k * s.b(i);
    c[i] = k * s.c(i);
  }
  return XState(a, b, c, s.tol());
}

XState operator+(const XState& l, const XState& r) {
  std::array<double, 4> a, b;
  std::array<cplx, 4> c;
  for (int i = 0; i < 4; ++i) {
    a[i] = l.a(i) + r.a(i);
    b[i] = l.b(i) + r.b(i);
    c[i] = l.c(i) + r.c(i);
  }
  return XState(a, b, c, std::max(l.tol(), r.tol()));
}

Dense8 embed(const XState& s) {
  Dense8 m;
  for (int i = 0; i < 4; ++i) {
    m(i, i) = s.a(i);
    m(7 - i, 7 - i) = s.b(i);
    m(i, 7 - i) = s.c(i);
    m(7 - i, i) = std::conj(s.c(i));
  }
  return m;
}

XState xpart(const Dense8& m, double tol) {
  if (m.hermiticity_defect() > tol * std::max(1.0, m.max_abs()))
    throw NotHermitian();
  std::array<double, 4> a, b;
  std::array<cplx, 4> c;
  for (int i = 0; i < 4; ++i) {
    a[i] = m(i, i).real();
    b[i] = m(7 - i, 7 - i).real();
    c[i] = m(i, 7 - i);
  }
  return XState(a, b, c, tol);
}

XState partial_transpose(const XState& s, System sys) {
  const auto& c = s.c();
  std::array<cplx, 4> p;
  switch (sys) {
    case System::A:
      p = {std::conj(c[3]), std::conj(c[2]), std::conj(c[1]), std::conj(c[0])};
      break;
    case System::B:
      p = {c[2], c[3], c[0], c[1]};
      break;
    default:
      p = {c[1], c[0], c[3], c[2]};
      break;
  }
  return s.with_c(p);
}

Dense8 dense_partial_transpose(const Dense8& m, System sys) {
  const int bit = sys == System::A ? 2 : sys == System::B ? 1 : 0;
  const int mask = 1 << bit;
  Dense8 out;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      // swap the chosen qubit's row and column indices
      const int ii = (i & ~mask) | (j & mask);
      const int jj = (j & ~mask) | (i & mask);
      out(i, j) = m(ii, jj);
    }
  return out;
}

bool is_positive(const XState& s) {
  for (int i = 0; i < 4; ++i) {
    const double prod = s.a(i) * s.b(i);
    const double m2 = std::norm(s.c(i));
    if (!(prod >= m2 - s.tol() * std::max({prod, m2, 1.0}))) return false;
  }
  return true;
}

bool is_ppt(const XState& s) {
  if (!is_positive(s)) throw NotAState();
  double min_gm = std::numeric_limits<double>::infinity();
  double big_r = 0;
  for (int i = 0; i < 4; ++i) {
    min_gm = std::min(min_gm, std::sqrt(s.a(i) * s.b(i)));
    big_r = std::max(big_r, std::abs(s.c(i)));
  }
  return approx_ge(min_gm, big_r, s.tol());
}

namespace {

int block_rank(double a, double b, cplx c, double zero_thr, double tol) {
  const double m = std::abs(c);
  if (a <= zero_thr && b <= zero_thr && m <= zero_thr) return 0;
  const double det = a * b - m * m;
  const double sc = std::max({a * b, m * m, 1.0});
  if (std::abs(det) <= tol * sc) return 1;
  return 2;
}

int block_rank_sum(const XState& s) {
  const double zero_thr = s.tol() * s.scale();
  int r = 0;
  for (int i = 0; i < 4; ++i)
    r += block_rank(s.a(i), s.b(i), s.c(i), zero_thr, s.tol());
  return r;
}

}  // namespace

int rank(const XState& s) {
  if (!is_positive(s)) throw NotAState();
  return block_rank_sum(s);
}

InvariantSummary invariants(const XState& s) {
  InvariantSummary out;
  double d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) d = std::min(d, std::sqrt(s.a(i) * s.b(i)));
  d = std::min(d, std::pow(s.a(0) * s.b(1) * s.b(2) * s.a(3), 0.25));
  d = std::min(d, std::pow(s.b(0) * s.a(1) * s.a(2) * s.b(3), 0.25));
  out.delta = d;

  double big = 0, small = std::numeric_limits<double>::infinity();
  const double zero_thr = s.tol() * s.scale();
  bool all_phases = true;
  for (int i = 0; i < 4; ++i) {
    const double m = std::abs(s.c(i));
    big = std::max(big, m);
    small = std::min(small, m);
    if (m > zero_thr)
      out.thetas[i] = wrap_two_pi(std::arg(s.c(i)));
    else
      all_phases = false;
  }
  out.big_r = big;
  out.small_r = small;
  if (all_phases)
    out.phi = wrap_two_pi(*out.thetas[0] + *out.thetas[3] - *out.thetas[1] -
                          *out.thetas[2]);

  out.rank = block_rank_sum(s);
  const System systems[3] = {System::A, System::B, System::C};
  out.p_score = out.rank;
  for (int k = 0; k < 3; ++k) {
    out.pt_ranks[k] = block_rank_sum(partial_transpose(s, systems[k]));
    out.p_score += out.pt_ranks[k];
  }
  return out;
}

bool phase_identity_holds(const XState& s) {
  const double zero_thr = s.tol() * s.scale();
  double mag = 1.0;
  for (int i = 0; i < 4; ++i) {
    const double m = std::abs(s.c(i));
    if (m <= zero_thr) throw PhaseUndefined();
    mag *= m;
  }
  const cplx w = s.c(0) * s.c(3) * std::conj(s.c(1) * s.c(2));
  return std::abs(w.imag()) <= s.tol() * std::sqrt(mag) * s.scale() &&
         w.real() > 0;
}

namespace {

// Basis permutation for each local symmetry, as an index map on 0..7 with
// bits (i_A, i_B, i_C).
int permute_index(int i, SymmetryOp op) {
  const int ia = (i >> 2) & 1, ib = (i >> 1) & 1, ic = i & 1;
  switch (op) {
    case SymmetryOp::SwapAB: return 4 * ib + 2 * ia + ic;
    case SymmetryOp::SwapAC: return 4 * ic + 2 * ib + ia;
    case SymmetryOp::SwapBC: return 4 * ia + 2 * ic + ib;
    case SymmetryOp::FlipA: return i ^ 4;
    case SymmetryOp::FlipB: return i ^ 2;
    default: return i ^ 1;
  }
}

}  // namespace

XState local_symmetry(const XState& s, SymmetryOp op) {
  const Dense8 m = embed(s);
  Dense8 out;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      out(permute_index(i, op), permute_index(j, op)) = m(i, j);
  return xpart(out, s.tol());
}

ProductVector apply_symmetry(const ProductVector& v, SymmetryOp op) {
  ProductVector w = v;
  auto flip = [](std::array<cplx, 2>& f) { std::swap(f[0], f[1]); };
  switch (op) {
    case SymmetryOp::SwapAB: std::swap(w.x, w.y); break;
    case SymmetryOp::SwapAC: std::swap(w.x, w.z); break;
    case SymmetryOp::SwapBC: std::swap(w.y, w.z); break;
    case SymmetryOp::FlipA: flip(w.x); break;
    case SymmetryOp::FlipB: flip(w.y); break;
    default: flip(w.z); break;
  }
  return w;
}

ProductVector basis_product_vector(int pos) {
  auto e = [](int bit) -> std::array<cplx, 2> {
    return bit ? std::array<cplx, 2>{0.0, 1.0} : std::array<cplx, 2>{1.0, 0.0};
  };
  return ProductVector{e((pos >> 2) & 1), e((pos >> 1) & 1), e(pos & 1)};
}

}  // namespace xsep
