// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace acrlab {

/// {x : x[species] == value}, value > 0.
struct Hyperplane {
  std::size_t species = 0;
  double value = 1.0;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

enum class RegionKind {
  full_orthant,
  coset_of_subspace,
  cylinder,
  almost_cylinder,
  neighborhood_union,
  hyperplane_only,
};

std::string to_string(RegionKind kind);

/// A membership predicate over the open positive orthant.
///
/// Parameters by kind:
///   coset_of_subspace   points z with z - beta*generator on the hyperplane
///                       and positive for some beta
///   cylinder            |z_i - a*| < radius
///   almost_cylinder     |z_i - a*| < radius, z_j > radius*|v_j|/|v_i|
///   neighborhood_union  union of the almost-cylinders over 0 < radius < a*
struct RegionSpec {
  RegionKind kind = RegionKind::full_orthant;
  Hyperplane hyperplane;
  double radius = 0.0;
  std::vector<double> generator;
};

bool region_contains(const RegionSpec& region, std::span<const double> p);

RegionSpec full_orthant_region();
RegionSpec hyperplane_region(const Hyperplane& h);
RegionSpec cylinder_region(const Hyperplane& h, double radius);
RegionSpec coset_region(const Hyperplane& h, std::vector<double> generator);
RegionSpec neighborhood_union_region(const Hyperplane& h, std::vector<double> generator);

/// Throws std::invalid_argument unless v[h.species] != 0 and 0 < eps < h.value.
RegionSpec almost_cylinder_region(const Hyperplane& h, std::vector<double> v, double eps);

/// Moves z along the generator onto the hyperplane: z - beta*v with
/// beta = (z_i - a*)/v_i.
std::vector<double> project_along(const RegionSpec& region, std::span<const double> z);

}  // namespace acrlab
