#pragma once

// Command-line driver. Commands:
//   check <file>
//   verify <file> [--sections 1,2,3,4] [--seed N] [--json]
//   dual <file> [-o <file>]
//   corpus list
//   corpus emit <name> [-o <file>]
// Exit codes: 0 success, 1 input error, 2 structure-law failure,
// 3 an applicable identity fails in verify.

#include <ostream>
#include <string>
#include <vector>

namespace wbalg {

inline constexpr int exit_ok = 0;
inline constexpr int exit_input = 1;
inline constexpr int exit_structure = 2;
inline constexpr int exit_identity = 3;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wbalg
