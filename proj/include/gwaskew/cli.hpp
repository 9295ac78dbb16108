/*
   Copyright 2026 The gwa-skew Authors

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


#ifndef GWASKEW_CLI_HPP
#define GWASKEW_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gwa::cli {

/// Exit codes: 0 success, 1 verification or domain failure, 2 malformed input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitMalformed = 2;

/// Runs one invocation; args excludes the program name. JSON goes to out.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out);

}  // namespace gwa::cli

#endif  // GWASKEW_CLI_HPP
