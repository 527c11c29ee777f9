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

#include <string>

#include <json.hpp>

#include "xsep/criteria.hpp"
#include "xsep/decompose.hpp"
#include "xsep/state.hpp"

// JSON wire formats.
//
// XState     {"a":[r,r,r,r], "b":[r,r,r,r],
//             "c":[[re,im],[re,im],[re,im],[re,im]], "tol":r?}
// Verdict    {"tag":str, "criterion":str?, "lhs":r?, "rhs":r?,
//             "certificate":decomposition?}
// Decomposition  {"terms":[{"w":r, "x":[[re,im],[re,im]], "y":..., "z":...}]}
// Rank6Plan mirrors the struct; partition indices are 1-based on the wire.

namespace xsep::io {

using json = nlohmann::json;

json to_json(const cplx& z);
cplx cplx_from_json(const json& j, const std::string& field);

/// Throws ParseError with the offending field named.
XState xstate_from_json(const json& j);
XState xstate_from_string(const std::string& text);
json to_json(const XState& s);

json to_json(const WeightedDecomposition& d);
json to_json(const Verdict& v);
json to_json(const InvariantSummary& inv);
json to_json(const WitnessEval& w);
json to_json(const Rank6Plan& plan);

std::array<cplx, 4> z4_from_string(const std::string& text);

}  // namespace xsep::io
