// Copyright 2026 The qmac Authors
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
#include <string>

namespace qmac::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;
inline constexpr int kExitVerificationFailed = 3;

/// Runs the command line. Artifacts go to --out when given, else to `out`;
/// diagnostics and usage text go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Renders x with 12 significant digits, independent of the locale.
std::string format_number(double x);

}  // namespace qmac::cli
