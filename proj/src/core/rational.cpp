// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/rational.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cmath>
#include <stdexcept>

namespace acrlab {

int sign(const Rational& r) { return r.sign(); }

double to_double(const Rational& r) { return r.convert_to<double>(); }

Rational from_double(double d) {
  if (!std::isfinite(d)) throw std::invalid_argument("non-finite value has no rational form");
  return Rational(d);
}

std::string to_string(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::size_t rank(std::vector<RationalVector> rows) {
  std::size_t r = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  return r;
}

Integer common_denominator(const std::vector<Rational>& values) {
  Integer l = 1;
  for (const auto& v : values) l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(v)));
  return l;
}

}  // namespace acrlab
