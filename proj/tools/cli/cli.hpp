// Copyright 2026 The dilator Authors.
// SPDX-License-Identifier: Apache-2.0
//
// The `dilator` command line. Exit codes: 0 pass, 1 a law was violated,
// 2 usage or input error.

#ifndef DILATOR_TOOLS_CLI_HPP_
#define DILATOR_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace dilator::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dilator::cli

#endif  // DILATOR_TOOLS_CLI_HPP_
