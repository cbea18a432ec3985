// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/massaction.hpp"
#include "core/region.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace acrlab {

struct SimConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  double boundary_eps = 1e-8;
  double blowup_bound = 1e8;
  double t_max = 1e4;
  double convergence_tol = 1e-6;
  double dwell = 10.0;
  /// ||f||_inf below steady_tol * max(1, ||x||_inf) counts as a steady state,
  /// as does a state that stays within the error tolerance for a dwell
  /// interval with ||f||_inf below sqrt(steady_tol) * max(1, ||x||_inf).
  double steady_tol = 1e-12;
  std::uint64_t seed = 0;
  /// Integrate the orbitally equivalent field divided by the minimal source
  /// monomial.
  bool rescale = false;
  bool record = true;
  std::size_t max_steps = 20'000'000;

  /// Defaults for verification campaigns: rescaled time, long horizon.
  static SimConfig verification();
};

/// Throws std::invalid_argument unless every field is positive and
/// convergence_tol > abs_tol.
void validate(const SimConfig& cfg);

enum class Terminal { converged, boundary, blow_up, horizon, interior_steady_state };

std::string to_string(Terminal t);

struct Trajectory {
  std::vector<double> times;
  std::vector<std::vector<double>> states;
  Terminal terminal = Terminal::horizon;
  double t_final = 0;
  std::vector<double> final_state;
  std::size_t steps = 0;
  /// Set for verdicts taken at a finite escape or uncertified horizon.
  bool low_confidence = false;

  // Distance to the target hyperplane, when one was given.
  double initial_distance = 0;
  double final_distance = 0;
  double min_distance = 0;
  std::optional<double> first_within_tol;
  /// Largest increase of the distance over one accepted step.
  double max_distance_increase = 0;
};

/// Adaptive Dormand-Prince 5(4) integration with boundary, blow-up, steady
/// state and convergence events. Throws std::invalid_argument on a
/// non-positive x0 and NumericError on step size underflow.
Trajectory integrate(const VectorField& field, std::span<const double> x0, const SimConfig& cfg,
                     std::optional<Hyperplane> target = std::nullopt);

/// Header `t,<species...>`, 17 significant digits.
std::string trajectory_csv(const Trajectory& traj, const std::vector<std::string>& species);

}  // namespace acrlab
