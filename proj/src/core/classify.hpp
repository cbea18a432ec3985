// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/massaction.hpp"
#include "core/network.hpp"
#include "core/region.hpp"

#include <array>
#include <bitset>
#include <optional>
#include <string>
#include <vector>

namespace acrlab {

/// Basin types, strongest first. `none` means no hyperplane at all.
enum class BasinKind {
  full_basin,
  full_space,
  cylinder,
  subspace,
  neighborhood,
  almost_cylinder,
  almost_neighborhood,
  null,
  none,
};

inline constexpr std::size_t kBasinKindCount = 8;  // excluding none
using BasinSet = std::bitset<kBasinKindCount>;

enum class Width { full, wide, narrow, not_applicable };

std::string to_string(BasinKind b);
std::string to_string(Width w);

struct AcrForm {
  bool static_acr = false;
  bool strong_static = false;
  bool weak_dynamic = false;
  bool dynamic = false;

  bool any() const { return static_acr || strong_static || weak_dynamic || dynamic; }
};

struct Diagnostic {
  std::string tag;
  std::string condition;
  bool holds = false;
};

/// Network-level (all rate constants) verdicts for one-species networks.
struct CapacityReport {
  bool capacity_static = false;
  bool static_acr = false;
  bool capacity_dynamic = false;
  bool dynamic = false;
  std::size_t achievable_patterns = 0;
  bool table_calibrated = false;
};

struct AcrReport {
  std::vector<std::string> species;
  std::optional<std::size_t> acr_species;
  AcrForm form;
  bool stable_hyperplane = false;
  bool weakly_stable_hyperplane = false;
  bool steady_state_exists = false;
  BasinKind basin = BasinKind::none;
  BasinSet basin_set;
  Width width = Width::not_applicable;
  std::optional<double> acr_value;
  std::optional<Hyperplane> hyperplane;
  /// Direction whose coset through the hyperplane is a convergence basin.
  std::optional<std::vector<double>> subspace_generator;
  std::optional<std::string> motif;
  std::optional<CapacityReport> capacity;
  std::vector<PositiveRoot> roots;
  std::vector<Diagnostic> diagnostics;

  bool has(BasinKind b) const { return b != BasinKind::none && basin_set.test(static_cast<std::size_t>(b)); }
};

/// The basin kind together with everything it implies.
BasinSet basin_closure(BasinKind b);

/// Dispatches by size. Throws DomainError on zero reactions or networks
/// beyond two reactions and two species (one-species networks of any size
/// are accepted).
AcrReport classify(const ReactionNetwork& net, const RateAssignment& k);

AcrReport classify_one_reaction(const ReactionNetwork& net);
AcrReport classify_one_species(const ReactionNetwork& net, const RateAssignment& k);
AcrReport classify_two_reaction(const ReactionNetwork& net, const RateAssignment& k);

/// Network-level verdicts from the achievable merged sign patterns.
CapacityReport one_species_capacity(const ReactionNetwork& net);

/// Throws DomainError when no ACR flag holds.
double acr_value(const ReactionNetwork& net, const RateAssignment& k);

/// Unique invariant coordinate hyperplane of a two-reaction, two-species
/// network, if any.
std::optional<Hyperplane> invariant_hyperplane(const ReactionNetwork& net, const RateAssignment& k);

/// Names of violated implication edges; empty when the report is consistent.
std::vector<std::string> lattice_check(const AcrReport& report);

}  // namespace acrlab
