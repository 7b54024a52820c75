// Command-line dispatcher.  Exit codes: 0 computed, 2 input/schema error,
// 3 precondition violation.
//
// SPDX-License-Identifier: MIT
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropfan {

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tropfan
