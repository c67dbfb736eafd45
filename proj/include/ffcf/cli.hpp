/*
   Copyright 2026 the ffcf authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFCF_CLI_HPP
#define FFCF_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ffcf::cli {

/**
 * Runs one CLI invocation (arguments without the program name).
 *
 * Exit codes: 0 on success with deterministic output, 1 on parse or
 * precondition errors (one-line diagnostic naming the offending flag),
 * 2 on internal budget exhaustion. Never throws on user input.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffcf::cli

#endif  // FFCF_CLI_HPP
