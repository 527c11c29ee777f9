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

#include "xsep/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "xsep/rng.hpp"

namespace xsep::oracle {

Dense8 recompose(const WeightedDecomposition& d) {
  Dense8 m;
  for (const auto& t : d.terms) {
    const double n2 = t.vector.norm2();
    if (!(n2 > 0)) throw Error("recompose: zero product vector");
    m.add_scaled_outer(t.vector.ket(), t.weight / n2);
  }
  return m;
}

double decomposition_error(const XState& s, const WeightedDecomposition& d) {
  return max_abs_diff(recompose(d), embed(s));
}

bool verify_decomposition(const XState& s, const WeightedDecomposition& d,
                          double tol) {
  return decomposition_error(s, d) <= tol * (1.0 + embed(s).max_abs());
}

namespace {

// Golden-section maximization on [lo, hi], bracket width 1e-12.
CircleMax golden_max(const std::function<double(double)>& f, double lo,
                     double hi) {
  constexpr double kGr = 0.6180339887498949;
  double a = lo, b = hi;
  double c1 = b - kGr * (b - a), c2 = a + kGr * (b - a);
  double f1 = f(c1), f2 = f(c2);
  while (b - a > 1e-12) {
    if (f1 < f2) {
      a = c1;
      c1 = c2;
      f1 = f2;
      c2 = a + kGr * (b - a);
      f2 = f(c2);
    } else {
      b = c2;
      c2 = c1;
      f2 = f1;
      c1 = b - kGr * (b - a);
      f1 = f(c1);
    }
  }
  const double mid = 0.5 * (a + b);
  return {mid, f(mid)};
}

}  // namespace

CircleMax max_on_circle(const std::function<double(double)>& f, int grid_n) {
  if (grid_n < 64) grid_n = 64;
  const double h = kTwoPi / grid_n;
  std::vector<double> val(grid_n);
  for (int k = 0; k < grid_n; ++k) val[k] = f(k * h);

  CircleMax best{0.0, -std::numeric_limits<double>::infinity()};
  for (int k = 0; k < grid_n; ++k) {
    const double prev = val[(k + grid_n - 1) % grid_n];
    const double next = val[(k + 1) % grid_n];
    if (val[k] < prev || val[k] < next) continue;  // not a local bracket
    CircleMax m = golden_max(f, k * h - h, k * h + h);
    if (m.value > best.value) best = m;
  }
  best.arg = wrap_two_pi(best.arg);
  return best;
}

std::array<double, 8> hermitian_eigenvalues(Dense8 m) {
  const double scale = std::max(m.max_abs(), 1e-300);
  if (m.hermiticity_defect() > 1e-9 * scale) throw NotHermitian();

  // cyclic Jacobi; each rotation zeroes one off-diagonal pair exactly
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < 8; ++p)
      for (int q = p + 1; q < 8; ++q) off = std::max(off, std::abs(m(p, q)));
    if (off <= 1e-13 * scale) break;

    for (int p = 0; p < 8; ++p) {
      for (int q = p + 1; q < 8; ++q) {
        const double mag = std::abs(m(p, q));
        if (mag <= 1e-300) continue;
        const cplx phase = m(p, q) / mag;
        const double app = m(p, p).real(), aqq = m(q, q).real();
        const double tau = (aqq - app) / (2.0 * mag);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double cth = 1.0 / std::sqrt(1.0 + t * t);
        const double sth = t * cth;
        const cplx s = sth * phase;

        for (int k = 0; k < 8; ++k) {
          if (k == p || k == q) continue;
          const cplx akp = m(k, p), akq = m(k, q);
          m(k, p) = cth * akp - std::conj(s) * akq;
          m(p, k) = std::conj(m(k, p));
          m(k, q) = s * akp + cth * akq;
          m(q, k) = std::conj(m(k, q));
        }
        m(p, p) = cth * cth * app + sth * sth * aqq - 2.0 * cth * sth * mag;
        m(q, q) = sth * sth * app + cth * cth * aqq + 2.0 * cth * sth * mag;
        m(p, q) = m(q, p) = 0.0;
      }
    }
  }

  std::array<double, 8> eig;
  for (int i = 0; i < 8; ++i) eig[i] = m(i, i).real();
  std::sort(eig.begin(), eig.end());
  return eig;
}

int dense_rank(const Dense8& m, double tol) {
  const auto eig = hermitian_eigenvalues(m);
  double emax = 0;
  for (double e : eig) emax = std::max(emax, std::abs(e));
  int r = 0;
  for (double e : eig)
    if (std::abs(e) > tol * emax) ++r;
  return r;
}

bool dense_is_psd(const Dense8& m, double tol) {
  const auto eig = hermitian_eigenvalues(m);
  return eig.front() >= -tol * std::max(1.0, std::abs(eig.back()));
}

namespace {

constexpr std::uint64_t kTagProduct = 0x70726f64;  // stream tags per kind
constexpr std::uint64_t kTagPpt = 0x707074;
constexpr std::uint64_t kTagBoundary = 0x626e6479;
constexpr std::uint64_t kTagRank = 0x72616e6b;

ProductVector random_product_vector(Rng& rng) {
  ProductVector v;
  for (auto* f : {&v.x, &v.y, &v.z}) {
    (*f)[0] = rng.complex_normal();
    (*f)[1] = rng.complex_normal();
  }
  return v;
}

XState xpart_of_mixture(const std::vector<WeightedTerm>& terms, double tol) {
  Dense8 m;
  for (const auto& t : terms) m.add_scaled_outer(t.vector.ket(), t.weight);
  return xpart(m, tol);
}

XState draw_product_mixture(Rng& rng) {
  const int k = rng.uniform_int(1, 16);
  std::vector<WeightedTerm> terms;
  for (int i = 0; i < k; ++i)
    terms.push_back({rng.uniform(0.05, 1.0), random_product_vector(rng)});
  return xpart_of_mixture(terms, kDefaultTol);
}

XState draw_random_ppt(Rng& rng) {
  std::array<double, 4> a, b;
  for (int i = 0; i < 4; ++i) {
    a[i] = rng.uniform(0.2, 2.0);
    b[i] = rng.uniform(0.2, 2.0);
  }
  double min_gm = std::numeric_limits<double>::infinity();
  for (int i = 0; i < 4; ++i) min_gm = std::min(min_gm, std::sqrt(a[i] * b[i]));
  std::array<cplx, 4> c;
  const double cap = min_gm * rng.uniform(0.0, 1.0);
  for (int i = 0; i < 4; ++i) c[i] = cap * rng.uniform() * rng.unit_phase();
  return XState(a, b, c);
}

XState draw_near_boundary(Rng& rng, double ratio) {
  XState s = draw_random_ppt(rng);
  const auto inv = invariants(s);
  if (inv.big_r <= 0) return s;
  const double k = ratio * inv.delta / inv.big_r;
  std::array<cplx, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = k * s.c(i);
  return s.with_c(c);
}

XState draw_random_rank(Rng& rng, int target) {
  // split the target over the four 2x2 blocks: n2 blocks of rank 2,
  // n1 of rank 1, the rest zero
  int n2 = std::max(0, target - 4);
  int n1 = target - 2 * n2;
  while (n1 + n2 > 4) {  // unreachable for target <= 8, kept as a guard
    ++n2;
    n1 -= 2;
  }
  std::array<int, 4> br{};
  std::array<int, 4> order{0, 1, 2, 3};
  for (int i = 3; i > 0; --i) std::swap(order[i], order[rng.uniform_int(0, i)]);
  int slot = 0;
  for (int i = 0; i < n2; ++i) br[order[slot++]] = 2;
  for (int i = 0; i < n1; ++i) br[order[slot++]] = 1;

  std::array<double, 4> a{}, b{};
  std::array<cplx, 4> c{};
  for (int i = 0; i < 4; ++i) {
    if (br[i] == 0) continue;
    a[i] = rng.uniform(0.3, 1.5);
    b[i] = rng.uniform(0.3, 1.5);
    const double gm = std::sqrt(a[i] * b[i]);
    const double mag = br[i] == 1 ? gm : gm * rng.uniform(0.1, 0.85);
    c[i] = mag * rng.unit_phase();
  }
  return XState(a, b, c);
}

}  // namespace

std::vector<XState> random_states(const RandomProfile& profile) {
  if (profile.count < 0) throw InvalidProfile("negative count");
  std::vector<XState> out;
  out.reserve(profile.count);
  for (int i = 0; i < profile.count; ++i) {
    std::uint64_t tag;
    switch (profile.kind) {
      case ProfileKind::ProductMixture: tag = kTagProduct; break;
      case ProfileKind::RandomPpt: tag = kTagPpt; break;
      case ProfileKind::NearBoundary: tag = kTagBoundary; break;
      default: tag = kTagRank + 16 * profile.rank_target; break;
    }
    Rng rng(substream_seed(profile.seed, tag, i));
    switch (profile.kind) {
      case ProfileKind::ProductMixture: out.push_back(draw_product_mixture(rng)); break;
      case ProfileKind::RandomPpt: out.push_back(draw_random_ppt(rng)); break;
      case ProfileKind::NearBoundary:
        out.push_back(draw_near_boundary(rng, profile.boundary_ratio));
        break;
      default: out.push_back(draw_random_rank(rng, profile.rank_target)); break;
    }
  }
  return out;
}

RandomProfile parse_profile(const std::string& name, std::uint64_t seed,
                            int count) {
  RandomProfile p;
  p.seed = seed;
  p.count = count;
  if (name == "product_mixture") {
    p.kind = ProfileKind::ProductMixture;
  } else if (name == "random_ppt") {
    p.kind = ProfileKind::RandomPpt;
  } else if (name == "near_boundary") {
    p.kind = ProfileKind::NearBoundary;
  } else if (name.rfind("random_rank(", 0) == 0 && name.back() == ')') {
    p.kind = ProfileKind::RandomRank;
    try {
      p.rank_target = std::stoi(name.substr(12, name.size() - 13));
    } catch (const std::exception&) {
      throw InvalidProfile("bad rank in profile: " + name);
    }
    if (p.rank_target < 1 || p.rank_target > 8)
      throw InvalidProfile("rank target must be in 1..8");
  } else {
    throw InvalidProfile("unknown profile: " + name);
  }
  return p;
}

}  // namespace xsep::oracle
