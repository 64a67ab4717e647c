// SPDX-License-Identifier: Apache-2.0
// SPDX-FileCopyrightText: Copyright 2026 The harmonic-certify Authors

/// \file hcert.hpp
/// Umbrella header.
#ifndef HCERT_HCERT_HPP
#define HCERT_HCERT_HPP

#include "error.hpp"
#include "torus.hpp"
#include "localizing.hpp"
#include "bounds.hpp"
#include "vandermonde.hpp"
#include "estimation.hpp"
#include "noise.hpp"
#include "io.hpp"
#include "random_configs.hpp"
#include "experiments.hpp"

#endif
