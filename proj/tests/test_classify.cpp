// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/classify.hpp"
#include "core/errors.hpp"
#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace acrlab;
using namespace acrlab::testing;

namespace {

bool has_diag(const AcrReport& r, const std::string& tag) {
  return std::any_of(r.diagnostics.begin(), r.diagnostics.end(), [&](const Diagnostic& d) { return d.tag == tag; });
}

const Diagnostic& diag(const AcrReport& r, const std::string& tag) {
  auto it = std::find_if(r.diagnostics.begin(), r.diagnostics.end(), [&](const Diagnostic& d) { return d.tag == tag; });
  REQUIRE(it != r.diagnostics.end());
  return *it;
}

ParsedNetwork swap_species(const ParsedNetwork& pn) {
  std::vector<Reaction> rx;
  auto flip = [](const Complex& c) {
    std::map<SpeciesIndex, Rational> t;
    for (const auto& [s, v] : c.terms()) t[1 - s] = v;
    return Complex(std::move(t));
  };
  for (const auto& r : pn.network.reactions()) rx.push_back({flip(r.reactant), flip(r.product)});
  const auto& sp = pn.network.species();
  return {ReactionNetwork({sp[1], sp[0]}, std::move(rx)), pn.rates};
}

ParsedNetwork swap_reactions(const ParsedNetwork& pn) {
  auto rx = pn.network.reactions();
  std::reverse(rx.begin(), rx.end());
  auto k = pn.rates.rates();
  std::reverse(k.begin(), k.end());
  return {ReactionNetwork(pn.network.species(), std::move(rx)), RateAssignment(std::move(k))};
}

// Brute-force invariance test on the raw field: f_i vanishes on {x_i = c}
// at several values of the other coordinate.
bool invariant_at(const ParsedNetwork& pn, std::size_t i, double c) {
  for (double y : {0.3, 1.0, 3.7}) {
    std::vector<double> x(2, y);
    x[i] = c;
    const auto f = brute_field(pn, x);
    std::vector<double> xs = x;
    xs[i] = c * 1.01;
    const double scale = std::abs(brute_field(pn, xs)[i]) + 1e-300;
    if (std::abs(f[i]) > 1e-8 * scale) return false;
  }
  return true;
}

// Whether the field points toward {x_i = c} just off it on both sides.
bool inward_at(const ParsedNetwork& pn, std::size_t i, double c) {
  for (double y : {0.3, 1.0, 3.7}) {
    std::vector<double> lo(2, y), hi(2, y);
    lo[i] = c * (1 - 1e-3);
    hi[i] = c * (1 + 1e-3);
    if (!(brute_field(pn, lo)[i] > 0 && brute_field(pn, hi)[i] < 0)) return false;
  }
  return true;
}

bool frozen(const ParsedNetwork& pn, std::size_t i) {
  const auto s = stoich_data(pn.network);
  return std::all_of(s.vectors.begin(), s.vectors.end(), [&](const RationalVector& v) { return v[i] == 0; });
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("one-reaction networks have no ACR") {
    for (const char* text : {"0 -> A ; k=1", "A + B -> 2B ; k=1", "2A -> 3A ; k=1"}) {
      const auto pn = net(text);
      const auto r = classify(pn.network, pn.rates);
      CHECK_FALSE(r.form.any());
      CHECK_FALSE(r.acr_species);
      CHECK_FALSE(r.acr_value);
      if (pn.network.species_count() == 2) CHECK(r.basin == BasinKind::none);
    }
    const auto two = net("A + B -> 2B ; k=1");
    CHECK(classify_one_reaction(two.network).basin == BasinKind::none);
  }

  TEST_CASE("archetype: static and wide full-space dynamic ACR") {
    const auto pn = net("A+B -> 2B ; k=1\nB -> A ; k=1");
    const auto r = classify(pn.network, pn.rates);
    CHECK(r.form.static_acr);
    CHECK(r.form.strong_static);
    CHECK(r.form.weak_dynamic);
    CHECK(r.form.dynamic);
    CHECK(r.acr_species == 0u);
    CHECK(r.basin == BasinKind::full_space);
    CHECK(r.width == Width::wide);
    REQUIRE(r.acr_value);
    CHECK(*r.acr_value == doctest::Approx(1).epsilon(1e-15));
    REQUIRE(r.hyperplane);
    CHECK(r.hyperplane->species == 0);
    CHECK(r.hyperplane->value == doctest::Approx(1).epsilon(1e-15));
    CHECK(lattice_check(r).empty());
  }

  TEST_CASE("archetype value scales with k2/k1") {
    // a* solves k1 a = k2 at b > 0.
    const auto pn = net("A+B -> 2B ; k=2\nB -> A ; k=6");
    CHECK(acr_value(pn.network, pn.rates) == doctest::Approx(3).epsilon(1e-14));
  }

  TEST_CASE("weak-only: null basin, value sqrt(k2/(2k1))") {
    const auto pn = net("2A+B -> 2B ; k=1\nB -> A ; k=1");
    const auto r = classify(pn.network, pn.rates);
    CHECK(r.form.weak_dynamic);
    CHECK_FALSE(r.form.dynamic);
    CHECK_FALSE(r.form.static_acr);
    CHECK(r.basin == BasinKind::null);
    REQUIRE(r.acr_value);
    CHECK(std::abs(*r.acr_value - std::sqrt(0.5)) < 1e-12);
    CHECK(lattice_check(r).empty());
  }

  TEST_CASE("subspace network: cylinder and subspace basins, wide") {
    const auto pn = net("A+B -> 3B ; k=1\nB -> A ; k=1");
    const auto r = classify(pn.network, pn.rates);
    CHECK(r.form.weak_dynamic);
    CHECK(r.form.dynamic);
    CHECK_FALSE(r.form.static_acr);
    CHECK(r.basin == BasinKind::cylinder);
    CHECK(r.has(BasinKind::subspace));
    CHECK(r.width == Width::wide);
    CHECK(*r.acr_value == doctest::Approx(1).epsilon(1e-15));
    REQUIRE(r.subspace_generator);
    // Generator parallel to (-1, 1).
    CHECK((*r.subspace_generator)[0] == doctest::Approx(-(*r.subspace_generator)[1]));
    const auto pk = net("A+B -> 3B ; k=3\nB -> A ; k=6");
    CHECK(acr_value(pk.network, pk.rates) == doctest::Approx(2).epsilon(1e-14));
  }

  TEST_CASE("sign-correction instance: cylinder basin at x = k1/(2k2)") {
    const auto pn = net("X + Y -> 2X + 3Y ; k=1\n2X + Y -> Y ; k=1");
    const auto r = classify(pn.network, pn.rates);
    CHECK(r.form.weak_dynamic);
    CHECK(r.form.dynamic);
    CHECK(r.has(BasinKind::cylinder));
    CHECK(*r.acr_value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(diag(r, "basin/corrected").holds);
    CHECK_FALSE(diag(r, "basin/as-printed").holds);
    CHECK(has_diag(r, "basin/combined"));
    const auto h = invariant_hyperplane(pn.network, pn.rates);
    REQUIRE(h);
    CHECK(h->value == doctest::Approx(0.5).epsilon(1e-15));
    const auto pk = net("X + Y -> 2X + 3Y ; k=3\n2X + Y -> Y ; k=0.25");
    CHECK(acr_value(pk.network, pk.rates) == doctest::Approx(3 / (2 * 0.25)).epsilon(1e-14));
  }

  TEST_CASE("invariant hyperplane absent when the ACR-coordinate rates agree in sign") {
    const auto pn = net("A+B -> 2B ; k=1\nA -> 2A ; k=1");
    CHECK_FALSE(invariant_hyperplane(pn.network, pn.rates));
    // No {b = c} is invariant: b' = ab + ... never changes sign along a line.
    for (double c : {0.1, 0.5, 1.0, 2.0, 10.0}) CHECK_FALSE(invariant_at(pn, 1, c));
    const auto arch = net("A+B -> 2B ; k=1\nB -> A ; k=1");
    CHECK(invariant_hyperplane(arch.network, arch.rates)->value == doctest::Approx(1));
  }

  TEST_CASE("acr_value throws without ACR") {
    const auto pn = net("A+B -> 2B ; k=1\nA -> 2A ; k=1");
    CHECK_THROWS_AS(acr_value(pn.network, pn.rates), DomainError);
  }

  TEST_CASE("size guard") {
    const auto big = net("A -> B ; k=1\nB -> C ; k=1");
    CHECK_THROWS_AS(classify(big.network, big.rates), DomainError);
    const auto three = net("A -> B ; k=1\nB -> A + B ; k=1\n2A -> B ; k=1");
    CHECK_THROWS_AS(classify(three.network, three.rates), DomainError);
  }

  TEST_CASE("one-species table") {
    struct Row {
      const char* text;
      bool cap_static, is_static, cap_dynamic, is_dynamic;
    };
    const Row rows[] = {
        {"0 -> A ; k=1", false, false, false, false},
        {"0 <-> A ; kf=1, kr=1", true, true, true, true},
        {"0 -> A ; k=1\n2A -> 3A ; k=1", false, false, false, false},
        {"0 -> A ; k=1\n3A -> 2A ; k=1", true, true, true, true},
        {"A -> 0 ; k=1\n2A -> 3A ; k=1", true, true, false, false},
        {"A -> 0 ; k=1\n3A -> 2A ; k=1", false, false, false, false},
        {"2A <-> 3A ; kf=1, kr=1", true, true, true, true},
        {"0 <-> A ; kf=1, kr=1\n2A -> 3A ; k=1", true, false, false, false},
        {"0 <-> A ; kf=1, kr=1\n3A -> 2A ; k=1", true, true, true, true},
        {"0 -> A ; k=1\n2A <-> 3A ; kf=1, kr=1", true, true, true, true},
        {"A -> 0 ; k=1\n2A <-> 3A ; kf=1, kr=1", true, false, false, false},
        {"0 <-> A ; kf=1, kr=1\n2A <-> 3A ; kf=1, kr=1", true, false, true, false},
    };
    for (const Row& row : rows) {
      CAPTURE(row.text);
      const auto pn = net(row.text);
      const auto c = one_species_capacity(pn.network);
      CHECK(c.capacity_static == row.cap_static);
      CHECK(c.static_acr == row.is_static);
      CHECK(c.capacity_dynamic == row.cap_dynamic);
      CHECK(c.dynamic == row.is_dynamic);
    }
  }

  TEST_CASE("one-species instances") {
    SUBCASE("linear relaxation") {
      const auto pn = net("0 <-> A ; kf=1, kr=1");
      const auto r = classify(pn.network, pn.rates);
      CHECK(r.form.static_acr);
      CHECK(r.form.dynamic);
      CHECK(r.basin == BasinKind::full_basin);
      CHECK(*r.acr_value == doctest::Approx(1));
    }
    SUBCASE("repelling root") {
      const auto pn = net("A -> 0 ; k=1\n2A -> 3A ; k=1");
      const auto r = classify(pn.network, pn.rates);
      CHECK(r.form.static_acr);
      CHECK_FALSE(r.form.dynamic);
      REQUIRE(r.roots.size() == 1);
      CHECK(r.roots[0].crossing == Crossing::minus_to_plus);
    }
    SUBCASE("identically zero rate function") {
      const auto pn = net("A -> 2A ; k=1\nA -> 0 ; k=1");
      const auto r = classify(pn.network, pn.rates);
      CHECK_FALSE(r.form.static_acr);
      CHECK(lattice_check(r).empty());
    }
    SUBCASE("table-calibrated diagnostic") {
      const auto pn = net("0 <-> A ; kf=1, kr=1\n2A <-> 3A ; kf=1, kr=1");
      const auto r = classify(pn.network, pn.rates);
      REQUIRE(r.capacity);
      CHECK(r.capacity->table_calibrated);
    }
  }

  TEST_CASE("property: one-species instance verdicts match a sign scan") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> coef(0, 4);
    int checked = 0;
    for (int i = 0; i < 400; ++i) {
      std::string text;
      const int n = 1 + i % 4;
      for (int r = 0; r < n; ++r) {
        int s = coef(rng), p = coef(rng);
        if (s == p) p = s + 1;
        auto side = [](int c) { return c == 0 ? std::string("0") : std::to_string(c) + "A"; };
        text += side(s) + " -> " + side(p) + " ; k=" + std::to_string(log_uniform(rng, 0.1, 10)) + "\n";
      }
      ParsedNetwork pn = [&] {
        try {
          return net(text);
        } catch (const std::exception&) {
          return net("0 -> A ; k=1");
        }
      }();
      if (pn.network.species_count() != 1) continue;
      if (one_species_signomial(pn.network, pn.rates).empty()) continue;
      const auto r = classify(pn.network, pn.rates);
      // Scan the raw field for sign changes on a log grid.
      std::vector<std::pair<double, int>> crossings;
      double prev = brute_field(pn, {1e-4})[0];
      double prev_x = 1e-4;
      for (int g = 1; g <= 8000; ++g) {
        const double x = 1e-4 * std::pow(1e8, g / 8000.0);
        const double v = brute_field(pn, {x})[0];
        if (v != 0 && prev != 0 && (v > 0) != (prev > 0)) crossings.emplace_back(std::sqrt(x * prev_x), prev > 0 ? 1 : -1);
        if (v != 0) {
          prev = v;
          prev_x = x;
        }
      }
      CAPTURE(text);
      CHECK(r.form.static_acr == (crossings.size() == 1));
      CHECK(r.form.dynamic == (crossings.size() == 1 && crossings[0].second == 1));
      if (crossings.size() == 1) CHECK(*r.acr_value == doctest::Approx(crossings[0].first).epsilon(1e-3));
      ++checked;
    }
    CHECK(checked > 300);
  }

  TEST_CASE("property: reported hyperplanes are invariant and attraction matches the field") {
    std::mt19937_64 rng(42);
    int with_plane = 0;
    for (int i = 0; i < 1000; ++i) {
      const auto pn = i % 2 ? random_motif(rng) : random_network(rng, 2);
      const auto r = classify(pn.network, pn.rates);
      if (r.hyperplane) {
        const auto h = *r.hyperplane;
        if (frozen(pn, h.species)) continue;
        ++with_plane;
        CHECK(invariant_at(pn, h.species, h.value));
        CHECK(r.form.weak_dynamic == inward_at(pn, h.species, h.value));
      } else {
        // No coordinate line through a root of f_i at y = 1 is invariant.
        for (std::size_t s = 0; s < 2; ++s) {
          if (frozen(pn, s)) continue;
          auto g = [&](double c) {
            std::vector<double> x(2, 1.0);
            x[s] = c;
            return brute_field(pn, x)[s];
          };
          double lo = 1e-3;
          for (int step = 1; step <= 400; ++step) {
            const double hi = 1e-3 * std::pow(1e6, step / 400.0);
            if (auto root = bisect_root(g, lo, hi)) CHECK_FALSE(invariant_at(pn, s, *root));
            lo = hi;
          }
        }
      }
    }
    CHECK(with_plane > 200);
  }

  TEST_CASE("property: static width matches the incompatible set") {
    // wide: the ACR coordinate is bounded where the coset misses the
    // hyperplane; narrow: unbounded there.
    std::mt19937_64 rng(43);
    int checked = 0;
    for (int i = 0; i < 100000 && checked < 150; ++i) {
      const auto pn = random_motif(rng, 0.5, 2);
      const auto r = classify(pn.network, pn.rates);
      if (!r.form.static_acr || !r.form.dynamic || r.width == Width::full) continue;
      ++checked;
      const auto h = *r.hyperplane;
      const auto v = stoich_data(pn.network).vectors[0];
      const double vi = to_double(v[h.species]);
      const double vo = to_double(v[1 - h.species]);
      double max_incompatible = 0;
      for (int s = 0; s < 400; ++s) {
        std::vector<double> z{log_uniform(rng, 1e-2, 1e3), log_uniform(rng, 1e-2, 1e3)};
        const double beta = (z[h.species] - h.value) / vi;
        const double other = z[1 - h.species] - beta * vo;
        if (other <= 0) max_incompatible = std::max(max_incompatible, z[h.species]);
      }
      CAPTURE(h.value);
      if (r.width == Width::wide) {
        CHECK(max_incompatible <= h.value);
      } else {
        CHECK(max_incompatible > 10 * h.value);
      }
    }
    CHECK(checked == 150);
  }

  TEST_CASE("property: lattice and exclusivity over random networks") {
    std::mt19937_64 rng(44);
    for (int i = 0; i < 1000; ++i) {
      const auto pn = i % 3 == 0 ? random_motif(rng) : random_network(rng, 1 + i % 2);
      const auto r = classify(pn.network, pn.rates);
      CHECK(lattice_check(r).empty());
      if (r.form.any()) {
        REQUIRE(r.acr_species);
        CHECK(r.acr_value);
      } else {
        CHECK_FALSE(r.acr_value);
      }
      if (r.form.static_acr) CHECK(r.form.strong_static);
    }
  }

  TEST_CASE("lattice_check catches broken reports") {
    AcrReport r;
    r.form.dynamic = true;
    r.acr_species = 0;
    r.acr_value = 1;
    r.hyperplane = Hyperplane{0, 1};
    r.basin = BasinKind::full_basin;
    r.basin_set = basin_closure(BasinKind::full_basin);
    auto v = lattice_check(r);
    CHECK(std::find(v.begin(), v.end(), "dynamic⇒weak-dynamic") != v.end());

    AcrReport c;
    c.form = {false, false, true, true};
    c.acr_species = 0;
    c.acr_value = 1;
    c.hyperplane = Hyperplane{0, 1};
    c.basin = BasinKind::cylinder;
    c.basin_set = basin_closure(BasinKind::cylinder);
    CHECK(lattice_check(c).empty());
    c.basin_set.reset(static_cast<std::size_t>(BasinKind::neighborhood));
    CHECK_FALSE(lattice_check(c).empty());
  }

  TEST_CASE("property: verdicts are invariant under rate scaling") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 500; ++i) {
      const auto pn = random_motif(rng);
      const double c = log_uniform(rng, 1e-3, 1e3);
      const RateAssignment scaled({pn.rates[0] * c, pn.rates[1] * c});
      const auto a = classify(pn.network, pn.rates);
      const auto b = classify(pn.network, scaled);
      CHECK(a.form.static_acr == b.form.static_acr);
      CHECK(a.form.weak_dynamic == b.form.weak_dynamic);
      CHECK(a.form.dynamic == b.form.dynamic);
      CHECK(a.basin == b.basin);
      CHECK(a.width == b.width);
      CHECK(a.acr_value.has_value() == b.acr_value.has_value());
      if (a.acr_value) CHECK(*b.acr_value == doctest::Approx(*a.acr_value).epsilon(1e-12));
    }
  }

  TEST_CASE("property: verdicts are invariant under relabeling") {
    std::mt19937_64 rng(46);
    for (int i = 0; i < 500; ++i) {
      const auto pn = random_motif(rng);
      const auto a = classify(pn.network, pn.rates);
      for (const auto& other : {swap_species(pn), swap_reactions(pn)}) {
        const auto b = classify(other.network, other.rates);
        const bool swapped = other.network.species() != pn.network.species();
        CHECK(a.form.static_acr == b.form.static_acr);
        CHECK(a.form.weak_dynamic == b.form.weak_dynamic);
        CHECK(a.form.dynamic == b.form.dynamic);
        CHECK(a.basin == b.basin);
        CHECK(a.width == b.width);
        CHECK(a.motif == b.motif);
        if (a.acr_species) {
          REQUIRE(b.acr_species);
          CHECK(*b.acr_species == (swapped ? 1 - *a.acr_species : *a.acr_species));
          CHECK(*b.acr_value == doctest::Approx(*a.acr_value).epsilon(1e-12));
        }
      }
    }
  }
}
