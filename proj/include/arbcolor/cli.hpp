// Copyright 2026 The arbcolor Authors
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


#ifndef ARBCOLOR_CLI_HPP
#define ARBCOLOR_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace arbcolor {

/// Entry point of the arbcolor tool. `args` excludes the program name.
/// Exit codes: 0 success, 1 improper coloring, 2 usage, I/O, parse or
/// infeasible-spec error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

/// ARBCOLOR_SEED if set and numeric, else 1.
std::uint64_t default_seed();

}  // namespace arbcolor

#endif  // ARBCOLOR_CLI_HPP
