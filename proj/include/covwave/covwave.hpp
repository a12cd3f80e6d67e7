// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The covwave Authors

#pragma once

#include "covwave/covariance.hpp"
#include "covwave/entropy.hpp"
#include "covwave/error.hpp"
#include "covwave/io.hpp"
#include "covwave/kernels.hpp"
#include "covwave/numerics.hpp"
#include "covwave/photon.hpp"
#include "covwave/spectral.hpp"
#include "covwave/windowing.hpp"
