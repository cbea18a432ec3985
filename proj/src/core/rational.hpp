// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace acrlab {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using RationalVector = std::vector<Rational>;

int sign(const Rational& r);
double to_double(const Rational& r);

/// Exact conversion; every finite double is a dyadic rational.
Rational from_double(double d);

/// "p" or "p/q" in lowest terms.
std::string to_string(const Rational& r);

/// Rank of a set of rational row vectors (fraction-free elimination is not
/// needed at these sizes).
std::size_t rank(std::vector<RationalVector> rows);

/// Least common multiple of the denominators.
Integer common_denominator(const std::vector<Rational>& values);

}  // namespace acrlab
