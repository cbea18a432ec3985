// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/network.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace acrlab {

struct AcrReport;

enum class Compass { E, NE, N, NW, W, SW, S, SE };

std::string to_string(Compass c);

/// Normalized shape of a two-reaction network: sources share the vertical
/// coordinate, "left" is the source with the smaller horizontal coordinate.
/// Slope signs treat vertical vectors as signed infinities.
struct MotifDescriptor {
  int dim = 0;
  Compass left = Compass::E;
  Compass right = Compass::W;
  int slope_sum = 0;
  int slope_diff = 0;

  friend bool operator==(const MotifDescriptor&, const MotifDescriptor&) = default;
};

/// e.g. "dim2 NE/SW sum+ diff+".
std::string motif_name(const MotifDescriptor& m);

/// Reaction vectors in normalized (horizontal, vertical) coordinates.
struct MotifArrows {
  std::array<double, 2> left{};
  std::array<double, 2> right{};
};

std::optional<MotifArrows> motif_arrows(const ReactionNetwork& net);

/// Present iff the network has two reactions, at most two species, and
/// distinct sources sharing exactly one coordinate.
std::optional<MotifDescriptor> motif_of(const ReactionNetwork& net);

enum class AtlasSet { static_acr, weak };

enum class AtlasCategory {
  full_basin,
  cylinder,
  dim1_diagonal,
  null,
  static_only,
  dynamic_full,
  dynamic_wide,
  dynamic_narrow,
};

struct AtlasEntry {
  std::string id;
  AtlasSet set = AtlasSet::weak;
  /// Wheel position in degrees; ignored for the center entry.
  double angle = 0;
  bool center = false;
  MotifDescriptor motif;
  AtlasCategory category = AtlasCategory::null;
  std::string label;
  std::string example_text;
  ReactionNetwork example;
};

struct Atlas {
  std::vector<AtlasEntry> static_entries;
  std::vector<AtlasEntry> weak_entries;
};

const Atlas& enumerate_atlas();

/// Whether a classification of the entry's example agrees with its label.
bool label_consistent(const AtlasEntry& entry, const AcrReport& report);

/// Deterministic wheel drawing; one glyph per entry.
std::string atlas_svg(std::span<const AtlasEntry> entries);

}  // namespace acrlab
