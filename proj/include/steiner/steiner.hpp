// Copyright (C) 2026 The steinerchain authors
// SPDX-License-Identifier: Apache-2.0
//

#pragma once

#include "steiner/annulus_map.hpp"
#include "steiner/chain.hpp"
#include "steiner/circle.hpp"
#include "steiner/errors.hpp"
#include "steiner/extremal.hpp"
#include "steiner/feasibility.hpp"
#include "steiner/gauge.hpp"
#include "steiner/invariants.hpp"
#include "steiner/polynomial.hpp"
#include "steiner/socle.hpp"
