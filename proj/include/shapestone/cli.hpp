/*
 * Copyright 2026 The Shapestone Authors. All rights reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef SHAPESTONE_CLI_HPP_
#define SHAPESTONE_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace shapestone {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (without the program name).  Returns 0 on
/// success or conformance, 1 on a violation or a distinguished pair, 2 on
/// usage, parse or dialect errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shapestone

#endif  // SHAPESTONE_CLI_HPP_
