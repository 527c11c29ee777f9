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

#include <iosfwd>
#include <string>
#include <vector>

namespace xsep::cli {

/// Runs the command-line tool on the given arguments (without argv[0]) and
/// returns the process exit code: 0 success, 1 parse error, 2 not a state,
/// 3 not decomposable.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace xsep::cli
