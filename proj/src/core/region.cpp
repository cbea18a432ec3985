// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/region.hpp"

#include <cmath>
#include <stdexcept>

namespace acrlab {

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::full_orthant: return "full-orthant";
    case RegionKind::coset_of_subspace: return "coset-of-subspace";
    case RegionKind::cylinder: return "cylinder";
    case RegionKind::almost_cylinder: return "almost-cylinder";
    case RegionKind::neighborhood_union: return "neighborhood-union";
    case RegionKind::hyperplane_only: return "hyperplane-only";
  }
  return "unknown";
}

namespace {

void require_hyperplane(const Hyperplane& h) {
  if (!(h.value > 0) || !std::isfinite(h.value)) throw std::invalid_argument("hyperplane value must be positive");
}

void require_generator(const Hyperplane& h, const std::vector<double>& v) {
  if (h.species >= v.size() || v[h.species] == 0) {
    throw std::invalid_argument("generator must have a nonzero component in the fixed coordinate");
  }
}

}  // namespace

bool region_contains(const RegionSpec& region, std::span<const double> p) {
  for (double x : p) {
    if (!(x > 0)) return false;
  }
  const std::size_t i = region.hyperplane.species;
  const double a = region.hyperplane.value;
  switch (region.kind) {
    case RegionKind::full_orthant:
      return true;
    case RegionKind::hyperplane_only:
      return p[i] == a;
    case RegionKind::cylinder:
      return std::abs(p[i] - a) < region.radius;
    case RegionKind::coset_of_subspace: {
      std::vector<double> w = project_along(region, p);
      for (double x : w) {
        if (!(x > 0)) return false;
      }
      return true;
    }
    case RegionKind::almost_cylinder: {
      const auto& v = region.generator;
      if (!(std::abs(p[i] - a) < region.radius)) return false;
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (j == i) continue;
        if (!(p[j] > region.radius * std::abs(v[j]) / std::abs(v[i]))) return false;
      }
      return true;
    }
    case RegionKind::neighborhood_union: {
      // Membership in some almost-cylinder: take eps just above |z_i - a*|.
      const auto& v = region.generator;
      const double d = std::abs(p[i] - a);
      if (!(d < a)) return false;
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (j == i) continue;
        if (!(p[j] > d * std::abs(v[j]) / std::abs(v[i]))) return false;
      }
      return true;
    }
  }
  return false;
}

RegionSpec full_orthant_region() { return {}; }

RegionSpec hyperplane_region(const Hyperplane& h) {
  require_hyperplane(h);
  RegionSpec r;
  r.kind = RegionKind::hyperplane_only;
  r.hyperplane = h;
  return r;
}

RegionSpec cylinder_region(const Hyperplane& h, double radius) {
  require_hyperplane(h);
  if (!(radius > 0)) throw std::invalid_argument("cylinder radius must be positive");
  RegionSpec r;
  r.kind = RegionKind::cylinder;
  r.hyperplane = h;
  r.radius = radius;
  return r;
}

RegionSpec coset_region(const Hyperplane& h, std::vector<double> generator) {
  require_hyperplane(h);
  require_generator(h, generator);
  RegionSpec r;
  r.kind = RegionKind::coset_of_subspace;
  r.hyperplane = h;
  r.generator = std::move(generator);
  return r;
}

RegionSpec neighborhood_union_region(const Hyperplane& h, std::vector<double> generator) {
  RegionSpec r = coset_region(h, std::move(generator));
  r.kind = RegionKind::neighborhood_union;
  return r;
}

RegionSpec almost_cylinder_region(const Hyperplane& h, std::vector<double> v, double eps) {
  require_hyperplane(h);
  require_generator(h, v);
  if (!(eps > 0) || !(eps < h.value)) throw std::invalid_argument("eps must lie strictly between 0 and the hyperplane value");
  RegionSpec r;
  r.kind = RegionKind::almost_cylinder;
  r.hyperplane = h;
  r.radius = eps;
  r.generator = std::move(v);
  return r;
}

std::vector<double> project_along(const RegionSpec& region, std::span<const double> z) {
  const std::size_t i = region.hyperplane.species;
  const auto& v = region.generator;
  if (v.size() != z.size() || v[i] == 0) throw std::invalid_argument("region has no usable generator");
  const double beta = (z[i] - region.hyperplane.value) / v[i];
  std::vector<double> w(z.begin(), z.end());
  for (std::size_t j = 0; j < w.size(); ++j) w[j] -= beta * v[j];
  w[i] = region.hyperplane.value;
  return w;
}

}  // namespace acrlab
