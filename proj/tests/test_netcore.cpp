// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/errors.hpp"
#include "core/network.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace acrlab;
using namespace acrlab::testing;

TEST_SUITE("netcore") {
  TEST_CASE("parse archetype network") {
    const auto pn = net("A+B -> 2B ; k=1\nB -> A ; k=1");
    CHECK(pn.network.species() == std::vector<std::string>{"A", "B"});
    REQUIRE(pn.network.reaction_count() == 2);
    CHECK(pn.rates.rates() == std::vector<double>{1, 1});
    CHECK(pn.network.reactions()[0].product.coefficient(1) == 2);
    CHECK(pn.network.reactions()[0].product.coefficient(0) == 0);
  }

  TEST_CASE("zero complex source") {
    const auto pn = net("0 -> A ; k=2");
    CHECK(pn.network.species_count() == 1);
    CHECK(pn.network.reactions()[0].reactant.is_zero());
    CHECK(pn.rates[0] == 2);
  }

  TEST_CASE("reversible arrow expands in source order") {
    const auto pn = net("2A <-> 3A ; kf=1, kr=1");
    REQUIRE(pn.network.reaction_count() == 2);
    CHECK(pn.network.reactions()[0].reactant.coefficient(0) == 2);
    CHECK(pn.network.reactions()[0].product.coefficient(0) == 3);
    CHECK(pn.network.reactions()[1].reactant.coefficient(0) == 3);
    CHECK(pn.network.reactions()[1].product.coefficient(0) == 2);
    CHECK(pn.rates.rates() == std::vector<double>{1, 1});
  }

  TEST_CASE("rational coefficients are kept exactly") {
    const auto pn = net("3/2 A + B -> 7/3 B ; k=0.5 # trailing comment\n# whole-line comment\n");
    CHECK(pn.network.reactions()[0].reactant.coefficient(0) == q(3, 2));
    CHECK(pn.network.reactions()[0].product.coefficient(1) == q(7, 3));
  }

  TEST_CASE("parse errors carry line and column") {
    auto fails_at = [](const std::string& text, std::size_t line, std::size_t col) {
      try {
        parse_network(text);
      } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() == col);
        return;
      }
      FAIL("expected a parse error for: " << text);
    };
    fails_at("A -> B ; k=0", 1, 12);
    fails_at("A -> B ; k=-1", 1, 12);
    fails_at("A -> A ; k=1", 1, 1);
    fails_at("A -> B ; k=1\nB ->> A ; k=1", 2, 5);
    fails_at("A -> B \\t ; k=1", 1, 8);
    fails_at("A -> B", 1, 7);
    fails_at("A -> B ; k=1\nA -> B ; k=2", 2, 1);
  }

  TEST_CASE("stoichiometric data") {
    SUBCASE("archetype is antiparallel") {
      const auto s = stoich_data(net("A+B -> 2B ; k=1\nB -> A ; k=1").network);
      CHECK(s.vectors == std::vector<RationalVector>{{-1, 1}, {1, -1}});
      CHECK(s.dim == 1);
      REQUIRE(s.antiparallel_mu);
      CHECK(*s.antiparallel_mu == 1);
    }
    SUBCASE("subspace network spans the plane") {
      const auto s = stoich_data(net("A+B -> 3B ; k=1\nB -> A ; k=1").network);
      CHECK(s.vectors == std::vector<RationalVector>{{-1, 2}, {1, -1}});
      CHECK(s.dim == 2);
      CHECK_FALSE(s.antiparallel_mu);
    }
    SUBCASE("single reaction") {
      const auto s = stoich_data(net("2A -> 3A ; k=1").network);
      CHECK(s.vectors == std::vector<RationalVector>{{1}});
      CHECK(s.dim == 1);
    }
  }

  TEST_CASE("compatibility examples") {
    const auto pn = net("A+B -> 2B ; k=1\nB -> A ; k=1");
    const auto& n = pn.network;
    const std::vector<double> p{2, 1};
    CHECK(compatible(n, p, std::vector<double>{1, 2}));
    CHECK_FALSE(compatible(n, p, std::vector<double>{1, 1}));
    CHECK(compatible(n, p, p));
    const RationalVector pr{2, 1};
    CHECK(compatible(n, pr, RationalVector{1, 2}));
    CHECK_FALSE(compatible(n, pr, RationalVector{1, 1}));
    CHECK_THROWS_AS(compatible(n, p, std::vector<double>{1}), std::invalid_argument);
  }

  TEST_CASE("property: serialize then parse is the identity") {
    std::mt19937_64 rng(11);
    int checked = 0;
    for (int i = 0; checked < 300; ++i) {
      const auto pn = random_network(rng, 1 + i % 3);
      if (!first_appearance_order(pn.network)) continue;
      ++checked;
      const auto back = parse_network(serialize_network(pn.network, pn.rates));
      CHECK(back.network == pn.network);
      CHECK(back.rates == pn.rates);
    }
  }

  TEST_CASE("property: reaction vectors are product minus reactant") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
      const auto pn = random_network(rng, 2);
      const auto s = stoich_data(pn.network);
      for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t j = 0; j < 2; ++j) {
          const auto& rx = pn.network.reactions()[r];
          CHECK(s.vectors[r][j] == rx.product.coefficient(j) - rx.reactant.coefficient(j));
        }
      }
      if (s.antiparallel_mu) {
        CHECK(*s.antiparallel_mu > 0);
        for (std::size_t j = 0; j < 2; ++j) CHECK(s.vectors[0][j] + *s.antiparallel_mu * s.vectors[1][j] == 0);
        CHECK(s.dim == 1);
      }
    }
  }

  TEST_CASE("property: compatibility is an equivalence relation") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 100; ++i) {
      const auto pn = random_network(rng, 1 + i % 2);
      const auto& n = pn.network;
      const auto s = stoich_data(n);
      // Half the points are built inside one class so that positives occur.
      std::vector<RationalVector> pts;
      const RationalVector base{q(std::uniform_int_distribution<int>(1, 9)(rng)), q(3)};
      for (int m = 0; m < 6; ++m) {
        RationalVector p = base;
        if (m % 2 == 0) {
          const Rational t(std::uniform_int_distribution<int>(-4, 4)(rng), 4);
          for (std::size_t j = 0; j < 2; ++j) p[j] += t * s.vectors[0][j];
        } else {
          p = {q(std::uniform_int_distribution<int>(0, 9)(rng)), q(std::uniform_int_distribution<int>(0, 9)(rng))};
        }
        pts.push_back(p);
      }
      for (const auto& a : pts) {
        CHECK(compatible(n, a, a));
        for (const auto& b : pts) {
          CHECK(compatible(n, a, b) == compatible(n, b, a));
          for (const auto& c : pts) {
            if (compatible(n, a, b) && compatible(n, b, c)) CHECK(compatible(n, a, c));
          }
        }
      }
    }
  }

  TEST_CASE("property: floating and exact compatibility agree on rational points") {
    std::mt19937_64 rng(14);
    for (int i = 0; i < 200; ++i) {
      const auto pn = random_network(rng, 1);
      const auto v = stoich_data(pn.network).vectors[0];
      const RationalVector p{q(2), q(5)};
      const Rational t(std::uniform_int_distribution<int>(-8, 8)(rng), 8);
      const RationalVector inside{p[0] + t * v[0], p[1] + t * v[1]};
      const RationalVector off{p[0] + 1, p[1]};
      for (const auto& z : {inside, off}) {
        const std::vector<double> pd{p[0].convert_to<double>(), p[1].convert_to<double>()};
        const std::vector<double> zd{z[0].convert_to<double>(), z[1].convert_to<double>()};
        CHECK(compatible(pn.network, p, z) == compatible(pn.network, pd, zd));
      }
    }
  }
}
