// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
// Shared helpers for the unit and acceptance tests: fixtures, hand-rolled
// generators and double-precision oracles that do not call into classify.
#pragma once

#include "core/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace acrlab::testing {

inline ParsedNetwork net(const std::string& text) { return parse_network(text); }

#ifdef ACRLAB_SCENARIOS
/// Bundled scenario by file name; ACRLAB_EXAMPLES overrides the directory.
inline ParsedNetwork scenario(const std::string& file) {
  const char* env = std::getenv("ACRLAB_EXAMPLES");
  const std::string path = std::string(env && *env ? env : ACRLAB_SCENARIOS) + "/" + file;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_network(ss.str());
}
#endif

inline Rational q(long p, long d = 1) { return Rational(p) / d; }

inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

// Coefficient in {0, 1/2, ..., 4}.
inline Rational half_step(std::mt19937_64& rng) {
  return Rational(std::uniform_int_distribution<int>(0, 8)(rng)) / 2;
}

inline Complex make_complex(const Rational& x, const Rational& y) {
  std::map<SpeciesIndex, Rational> t;
  if (x != 0) t[0] = x;
  if (y != 0) t[1] = y;
  return Complex(std::move(t));
}

/// Random two-species network with the given reaction count; rates
/// log-uniform in [klo, khi]. Retries until the network is valid.
inline ParsedNetwork random_network(std::mt19937_64& rng, std::size_t reactions, double klo = 1e-2,
                                    double khi = 1e2) {
  while (true) {
    std::vector<Reaction> rx;
    for (std::size_t r = 0; r < reactions; ++r) {
      rx.push_back({make_complex(half_step(rng), half_step(rng)), make_complex(half_step(rng), half_step(rng))});
    }
    std::vector<double> k;
    for (std::size_t r = 0; r < reactions; ++r) k.push_back(log_uniform(rng, klo, khi));
    try {
      return {ReactionNetwork({"X", "Y"}, std::move(rx)), RateAssignment(std::move(k))};
    } catch (const std::invalid_argument&) {
      // product == reactant or duplicate; draw again
    }
  }
}

/// Whether every species is used and listed in order of first appearance,
/// which is the only species order the text format can express.
inline bool first_appearance_order(const ReactionNetwork& n) {
  std::vector<SpeciesIndex> seen;
  for (const auto& r : n.reactions()) {
    for (const Complex* c : {&r.reactant, &r.product}) {
      for (const auto& [s, coef] : c->terms()) {
        if (std::find(seen.begin(), seen.end(), s) == seen.end()) seen.push_back(s);
      }
    }
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != i) return false;
  }
  return seen.size() == n.species_count();
}

/// Random two-reaction network whose sources share the Y coordinate and
/// differ in X, i.e. a motif embedding with X horizontal.
inline ParsedNetwork random_motif(std::mt19937_64& rng, double klo = 1e-2, double khi = 1e2) {
  while (true) {
    const Rational b = half_step(rng);
    const Rational a1 = half_step(rng);
    const Rational a2 = half_step(rng);
    if (a1 == a2) continue;
    std::vector<Reaction> rx{{make_complex(a1, b), make_complex(half_step(rng), half_step(rng))},
                             {make_complex(a2, b), make_complex(half_step(rng), half_step(rng))}};
    std::vector<double> k{log_uniform(rng, klo, khi), log_uniform(rng, klo, khi)};
    try {
      return {ReactionNetwork({"X", "Y"}, std::move(rx)), RateAssignment(std::move(k))};
    } catch (const std::invalid_argument&) {
    }
  }
}

/// Bisection root of g on [lo, hi] in log space; g must change sign.
inline std::optional<double> bisect_root(const std::function<double(double)>& g, double lo, double hi) {
  double glo = g(lo);
  const double ghi = g(hi);
  if (glo == 0) return lo;
  if (ghi == 0) return hi;
  if ((glo > 0) == (ghi > 0)) return std::nullopt;
  for (int i = 0; i < 400; ++i) {
    const double mid = std::sqrt(lo * hi);
    const double gm = g(mid);
    if (gm == 0) return mid;
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
    if (hi / lo - 1 < 1e-15) break;
  }
  return std::sqrt(lo * hi);
}

/// Mass-action right-hand side written out term by term from the network,
/// independent of the library's VectorField.
inline std::vector<double> brute_field(const ParsedNetwork& pn, const std::vector<double>& x) {
  const auto& net = pn.network;
  std::vector<double> f(net.species_count(), 0.0);
  for (std::size_t r = 0; r < net.reaction_count(); ++r) {
    double rate = pn.rates[r];
    for (const auto& [s, c] : net.reactions()[r].reactant.terms()) {
      rate *= std::pow(x[s], c.convert_to<double>());
    }
    for (std::size_t s = 0; s < net.species_count(); ++s) {
      const Rational d = net.reactions()[r].product.coefficient(s) - net.reactions()[r].reactant.coefficient(s);
      f[s] += rate * d.convert_to<double>();
    }
  }
  return f;
}

}  // namespace acrlab::testing
