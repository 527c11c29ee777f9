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
#include <cmath>

#include "xsep/rng.hpp"
#include "xsep/state.hpp"

namespace xsep::test {

inline XState ones(const std::array<cplx, 4>& c) {
  return XState({1, 1, 1, 1}, {1, 1, 1, 1}, c);
}

/// X(1,1,(r, r, r e^{i theta}, r))
inline XState example1_state(double r, double theta) {
  const cplx e(std::cos(theta), std::sin(theta));
  return ones({r, r, r * e, r});
}

/// X(1,1,(p, p, q, -q))
inline XState example2_state(double p, double q) {
  return ones({p, p, q, -q});
}

/// Generic Hermitian X-matrix; positivity not guaranteed (|c_i| may exceed
/// sqrt(a_i b_i)).
inline XState random_hermitian_x(Rng& rng) {
  std::array<double, 4> a, b;
  std::array<cplx, 4> c;
  for (int i = 0; i < 4; ++i) {
    a[i] = rng.uniform(0.05, 1.5);
    b[i] = rng.uniform(0.05, 1.5);
    c[i] = rng.uniform(0.0, 1.25) * std::sqrt(a[i] * b[i]) * rng.unit_phase();
  }
  return XState(a, b, c);
}

/// Positive X-state; PPT not guaranteed.
inline XState random_positive_x(Rng& rng) {
  std::array<double, 4> a, b;
  std::array<cplx, 4> c;
  for (int i = 0; i < 4; ++i) {
    a[i] = rng.uniform(0.05, 1.5);
    b[i] = rng.uniform(0.05, 1.5);
    c[i] = rng.uniform(0.0, 1.0) * std::sqrt(a[i] * b[i]) * rng.unit_phase();
  }
  return XState(a, b, c);
}

}  // namespace xsep::test
