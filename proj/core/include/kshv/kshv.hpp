// Copyright (c) 2026 kshv developers.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "kshv/experiment.hpp"
#include "kshv/geometry.hpp"
#include "kshv/inequalities.hpp"
#include "kshv/qm.hpp"
#include "kshv/quadrature.hpp"
#include "kshv/rng.hpp"
#include "kshv/single_qubit.hpp"
#include "kshv/two_qubit.hpp"
