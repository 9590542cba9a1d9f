// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace steiner::cli {

/// Runs one command. `args` excludes the program name. Returns 0 on success,
/// 1 for an infeasible or invalid verdict (the report is still written),
/// 2 for usage or input errors (one-line diagnostic on `err`).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace steiner::cli
