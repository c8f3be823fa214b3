// Copyright 2026 The qcorr Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// @file qcorr.hpp
/// Convenience header pulling in the whole library.

#ifndef QCORR_QCORR_HPP
#define QCORR_QCORR_HPP

#include "qcorr/complex_matrix.hpp"
#include "qcorr/discord.hpp"
#include "qcorr/eig.hpp"
#include "qcorr/entropy.hpp"
#include "qcorr/layout.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/protocols.hpp"
#include "qcorr/resource_calc.hpp"
#include "qcorr/rng.hpp"
#include "qcorr/state_io.hpp"
#include "qcorr/states.hpp"

#endif  // QCORR_QCORR_HPP
