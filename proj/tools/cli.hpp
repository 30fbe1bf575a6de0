// Copyright 2026 The ckpoints Authors.
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

#include <ostream>

namespace ckp::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "ckpoints.report/1";

/// Runs one subcommand and writes its report to out (usage and parse errors
/// to err). Returns 0 when the command succeeded and, for classify, the
/// status is classified; 1 on a domain or integrity error or an unsettled
/// result; CLI11's code on bad arguments.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ckp::cli
