// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/classify.hpp"
#include "core/sim.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace acrlab {

enum class Expectation { converge, no_converge, no_converge_closer };

std::string to_string(Expectation e);

struct SampleVerdict {
  std::size_t index = 0;
  std::vector<double> x0;
  std::string region;
  Expectation expected = Expectation::converge;
  Terminal terminal = Terminal::horizon;
  bool converged = false;
  bool moved_closer = false;
  bool low_confidence = false;
  double initial_distance = 0;
  double final_distance = 0;
  double t_final = 0;
  bool agrees = false;
  std::string error;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  SimConfig config;
  std::string prediction;
  Hyperplane hyperplane;
  std::optional<double> cylinder_radius;
  std::vector<SampleVerdict> samples;
  double agreement_rate = 0;
  std::size_t converged = 0;
  std::size_t moved_closer = 0;
  std::vector<std::size_t> counterexamples;
};

/// Monte-Carlo check of a report against trajectories. Samples are drawn
/// log-uniformly from [1e-2, 1e2]^n or from the predicted basin region.
/// Throws std::invalid_argument for zero samples and DomainError when the
/// report has no hyperplane.
VerificationReport verify(const ReactionNetwork& net, const RateAssignment& k, const AcrReport& report,
                          std::size_t samples, const SimConfig& cfg);

/// Half-width of a cylinder around the hyperplane on which the rescaled
/// field points toward the hyperplane and pushes the other coordinate up by
/// at least half its on-hyperplane rate. Throws DomainError when no such
/// cylinder exists.
double cylinder_radius(const VectorField& field, const Hyperplane& h);

/// Log-uniform draw in [lo, hi].
double log_uniform(std::mt19937_64& rng, double lo, double hi);

/// A point of the coset region: on-hyperplane base point moved along the
/// generator, with the ACR coordinate drawn log-uniformly in [lo, hi].
std::vector<double> sample_coset(std::mt19937_64& rng, const RegionSpec& coset, std::size_t dim, double lo,
                                 double hi);

struct BasinCell {
  std::vector<double> x0;
  Terminal terminal = Terminal::horizon;
  bool converged = false;
};

struct BasinMap {
  std::size_t grid = 0;
  double lo = 0;
  double hi = 0;
  Hyperplane target;
  std::vector<std::string> species;
  /// Row-major, first coordinate varying fastest.
  std::vector<BasinCell> cells;
};

/// Integrates from cell centers of a grid over [lo, hi]^n (n = 1 or 2).
BasinMap basin_map(const ReactionNetwork& net, const RateAssignment& k, std::size_t grid, const SimConfig& cfg,
                   const Hyperplane& target, double lo, double hi);

std::string basin_map_csv(const BasinMap& map);

/// Grid of colored cells, green where the start converged. 2-D maps only.
std::string basin_map_svg(const BasinMap& map);

}  // namespace acrlab
