// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/network.hpp"
#include "core/rational.hpp"

#include <span>
#include <vector>

namespace acrlab {

struct FieldTerm {
  double rate = 0;
  std::vector<double> exponents;
  std::vector<double> delta;
};

/// x' = sum_r k_r * x^{reactant_r} * v_r.
class VectorField {
 public:
  VectorField() = default;
  VectorField(std::size_t dim, std::vector<FieldTerm> terms);

  std::size_t dimension() const { return dim_; }
  const std::vector<FieldTerm>& terms() const { return terms_; }

  void evaluate(std::span<const double> x, std::span<double> out) const;
  std::vector<double> operator()(std::span<const double> x) const;

  /// Same field divided by the monomial of componentwise minimal reactant
  /// exponents. Orbits in the open orthant are unchanged.
  VectorField rescaled() const;

 private:
  std::size_t dim_ = 0;
  std::vector<FieldTerm> terms_;
};

/// x^e with coordinates <= 0 contributing 0 (or 1 for e == 0).
double monomial(std::span<const double> x, std::span<const double> exponents);

VectorField build_field(const ReactionNetwork& net, const RateAssignment& k);

struct SignomialTerm {
  double coefficient = 0;
  Rational exponent;

  friend bool operator==(const SignomialTerm&, const SignomialTerm&) = default;
};

/// Sum of c * x^e with nonzero coefficients and strictly increasing exponents.
class Signomial {
 public:
  Signomial() = default;
  /// Merges equal exponents and drops zero coefficients.
  explicit Signomial(std::vector<SignomialTerm> terms);

  const std::vector<SignomialTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  double operator()(double x) const;
  /// Sum of |c| x^e; the natural size of the value at x.
  double magnitude(double x) const;

  friend bool operator==(const Signomial&, const Signomial&) = default;

 private:
  std::vector<SignomialTerm> terms_;
};

/// f(x) = sum_r k_r * (product - reactant) * x^{reactant}, merged exactly.
Signomial one_species_signomial(const ReactionNetwork& net, const RateAssignment& k);

enum class Crossing { plus_to_minus, minus_to_plus, touch };

std::string to_string(Crossing c);

struct PositiveRoot {
  double value = 0;
  Crossing crossing = Crossing::touch;
};

/// All distinct positive roots in increasing order. Throws DomainError on an
/// empty signomial.
std::vector<PositiveRoot> positive_roots(const Signomial& s);

struct SignPattern {
  std::size_t changes = 0;
  int first = 0;
  int last = 0;
};

SignPattern sign_changes(const Signomial& s);

}  // namespace acrlab
