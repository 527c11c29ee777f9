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

#include <stdexcept>
#include <string>

namespace xsep {

/// Base class for every contract violation raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A diagonal entry was below -tol at construction. `index` is the 0-based
/// slot (0..3 within the a- or b-block).
struct NegativeDiagonal : Error {
  int index;
  explicit NegativeDiagonal(int i)
      : Error("negative diagonal entry at slot " + std::to_string(i + 1)),
        index(i) {}
};

struct NotHermitian : Error {
  NotHermitian() : Error("matrix is not Hermitian within tolerance") {}
};

struct NotAState : Error {
  NotAState() : Error("matrix is not positive semidefinite") {}
};

struct PhaseUndefined : Error {
  PhaseUndefined() : Error("phase difference undefined: some |c_i| vanishes") {}
};

struct NotCommonMagnitude : Error {
  NotCommonMagnitude() : Error("antidiagonal magnitudes are not all equal") {}
};

struct ConditionsFail : Error {
  explicit ConditionsFail(const std::string& what) : Error(what) {}
};

struct PreconditionFail : Error {
  explicit PreconditionFail(const std::string& what) : Error(what) {}
};

struct NotSeparable : Error {
  NotSeparable() : Error("state is not separable") {}
  explicit NotSeparable(const std::string& what) : Error(what) {}
};

struct WrongRank : Error {
  explicit WrongRank(const std::string& what) : Error(what) {}
};

struct NotDecomposable : Error {
  explicit NotDecomposable(const std::string& what) : Error(what) {}
};

struct InvalidProfile : Error {
  explicit InvalidProfile(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace xsep
