// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "steiner/chain.hpp"
#include "steiner/extremal.hpp"
#include "steiner/feasibility.hpp"

namespace steiner::io {

/// 17 significant digits, round-trip exact for IEEE-754 doubles.
std::string format_number(double value);

std::string chain_to_json(const Chain<double>& chain);

/// Parses the document written by chain_to_json. Throws InputError.
Chain<double> chain_from_json(std::string_view text);

std::string chain_report_to_json(const ChainReport<double>& report);

std::string feasibility_to_json(const FeasibilityReport<double>& report);

/// Header `t,S,L`, one row per grid point.
std::string sweep_to_csv(const std::vector<SweepRow<double>>& rows);

/// Chain circles in order, then the inner and outer Soddy circles. Six
/// decimals, viewBox fitted to the outer circle with a 5% margin.
std::string emit_chain_svg(const Chain<double>& chain, const Circle<double>& inner,
                           const Circle<double>& outer);

}  // namespace steiner::io
