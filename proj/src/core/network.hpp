// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acrlab {

using SpeciesIndex = std::size_t;

/// Sparse nonnegative combination of species. The empty complex is "0".
class Complex {
 public:
  Complex() = default;
  /// Throws std::invalid_argument on a non-positive coefficient.
  explicit Complex(std::map<SpeciesIndex, Rational> terms);

  Rational coefficient(SpeciesIndex s) const;
  const std::map<SpeciesIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const Complex&, const Complex&) = default;
  friend bool operator<(const Complex& a, const Complex& b) { return a.terms_ < b.terms_; }

 private:
  std::map<SpeciesIndex, Rational> terms_;
};

struct Reaction {
  Complex reactant;
  Complex product;

  friend bool operator==(const Reaction&, const Reaction&) = default;
};

class ReactionNetwork {
 public:
  /// Validates species references, product != reactant and duplicates.
  ReactionNetwork(std::vector<std::string> species, std::vector<Reaction> reactions);

  const std::vector<std::string>& species() const { return species_; }
  const std::vector<Reaction>& reactions() const { return reactions_; }
  std::size_t species_count() const { return species_.size(); }
  std::size_t reaction_count() const { return reactions_.size(); }

  std::optional<SpeciesIndex> find_species(std::string_view name) const;

  /// Dense reactant coefficients of reaction r.
  RationalVector source(std::size_t r) const;
  /// product - reactant of reaction r.
  RationalVector reaction_vector(std::size_t r) const;

  friend bool operator==(const ReactionNetwork&, const ReactionNetwork&) = default;

 private:
  std::vector<std::string> species_;
  std::vector<Reaction> reactions_;
};

class RateAssignment {
 public:
  RateAssignment() = default;
  /// Throws std::invalid_argument unless every rate is finite and > 0.
  explicit RateAssignment(std::vector<double> rates);

  const std::vector<double>& rates() const { return rates_; }
  double operator[](std::size_t i) const { return rates_[i]; }
  std::size_t size() const { return rates_.size(); }

  friend bool operator==(const RateAssignment&, const RateAssignment&) = default;

 private:
  std::vector<double> rates_;
};

struct ParsedNetwork {
  ReactionNetwork network;
  RateAssignment rates;
};

/// Parses the line-oriented reaction DSL. Throws ParseError.
ParsedNetwork parse_network(std::string_view text);

/// Emits DSL text that parses back to the same network and rates.
std::string serialize_network(const ReactionNetwork& net, const RateAssignment& k);

std::string complex_to_string(const ReactionNetwork& net, const Complex& c);

struct StoichData {
  std::vector<RationalVector> vectors;
  std::size_t dim = 0;
  /// Set when exactly two reactions satisfy v1 = -mu * v2 with mu > 0.
  std::optional<Rational> antiparallel_mu;
};

StoichData stoich_data(const ReactionNetwork& net);

/// Exact test: q - p in the span of the reaction vectors.
bool compatible(const ReactionNetwork& net, std::span<const Rational> p, std::span<const Rational> q);

/// Floating point test with 1e-12 relative residual tolerance.
bool compatible(const ReactionNetwork& net, std::span<const double> p, std::span<const double> q);

}  // namespace acrlab
