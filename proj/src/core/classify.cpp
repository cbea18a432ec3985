// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/classify.hpp"

#include "core/errors.hpp"
#include "core/motif.hpp"

#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>

namespace acrlab {

std::string to_string(BasinKind b) {
  switch (b) {
    case BasinKind::full_basin: return "full-basin";
    case BasinKind::full_space: return "full-space";
    case BasinKind::cylinder: return "cylinder";
    case BasinKind::subspace: return "subspace";
    case BasinKind::neighborhood: return "neighborhood";
    case BasinKind::almost_cylinder: return "almost-cylinder";
    case BasinKind::almost_neighborhood: return "almost-neighborhood";
    case BasinKind::null: return "null";
    case BasinKind::none: return "none";
  }
  return "unknown";
}

std::string to_string(Width w) {
  switch (w) {
    case Width::full: return "full";
    case Width::wide: return "wide";
    case Width::narrow: return "narrow";
    case Width::not_applicable: return "n/a";
  }
  return "unknown";
}

namespace {

using B = BasinKind;

constexpr std::array<std::pair<BasinKind, BasinKind>, 11> kBasinEdges{{
    {B::full_basin, B::full_space},
    {B::full_basin, B::cylinder},
    {B::full_space, B::subspace},
    {B::subspace, B::null},
    {B::subspace, B::neighborhood},
    {B::subspace, B::almost_cylinder},
    {B::cylinder, B::neighborhood},
    {B::cylinder, B::almost_cylinder},
    {B::neighborhood, B::almost_neighborhood},
    {B::almost_cylinder, B::almost_neighborhood},
    {B::neighborhood, B::null},
}};

std::size_t bit(BasinKind b) { return static_cast<std::size_t>(b); }

std::string sgn_text(const Rational& r) { return to_string(r); }

void note(AcrReport& rep, std::string tag, std::string condition, bool holds) {
  rep.diagnostics.push_back({std::move(tag), std::move(condition), holds});
}

AcrReport blank_report(const ReactionNetwork& net) {
  AcrReport rep;
  rep.species = net.species();
  return rep;
}

void set_basin(AcrReport& rep, BasinKind primary, std::initializer_list<BasinKind> extra = {}) {
  rep.basin = primary;
  rep.basin_set = basin_closure(primary);
  for (BasinKind b : extra) rep.basin_set |= basin_closure(b);
}

// Reactant and reaction vector in two coordinates; a one-species network is
// embedded with a zero second coordinate.
struct Planar {
  std::array<std::array<Rational, 2>, 2> src;
  std::array<std::array<Rational, 2>, 2> vec;
};

Planar planar(const ReactionNetwork& net) {
  Planar p;
  for (std::size_t r = 0; r < 2; ++r) {
    RationalVector s = net.source(r);
    RationalVector v = net.reaction_vector(r);
    for (std::size_t j = 0; j < 2; ++j) {
      p.src[r][j] = j < s.size() ? s[j] : Rational(0);
      p.vec[r][j] = j < v.size() ? v[j] : Rational(0);
    }
  }
  return p;
}

std::optional<Rational> antiparallel(const std::array<Rational, 2>& v1, const std::array<Rational, 2>& v2) {
  std::optional<Rational> mu;
  for (std::size_t j = 0; j < 2; ++j) {
    if (v2[j] != 0) {
      mu = -v1[j] / v2[j];
      break;
    }
  }
  if (!mu || *mu <= 0) return std::nullopt;
  for (std::size_t j = 0; j < 2; ++j) {
    if (v1[j] + *mu * v2[j] != 0) return std::nullopt;
  }
  return mu;
}

// Positive root of k1*da1 + k2*da2*x^(a2-a1) = 0.
double hyperplane_value(double k1, const Rational& da1, double k2, const Rational& da2, const Rational& a1,
                        const Rational& a2) {
  const double ratio = -(k2 * to_double(da2)) / (k1 * to_double(da1));
  return std::pow(ratio, 1.0 / to_double(a1 - a2));
}

}  // namespace

BasinSet basin_closure(BasinKind b) {
  BasinSet s;
  if (b == BasinKind::none) return s;
  s.set(bit(b));
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [from, to] : kBasinEdges) {
      if (s.test(bit(from)) && !s.test(bit(to))) {
        s.set(bit(to));
        grew = true;
      }
    }
  }
  return s;
}

AcrReport classify_one_reaction(const ReactionNetwork& net) {
  if (net.reaction_count() != 1) throw DomainError("one-reaction classifier needs exactly one reaction");
  AcrReport rep = blank_report(net);
  note(rep, "one-reaction", "a single nonzero reaction vector admits no positive steady state", true);
  return rep;
}

CapacityReport one_species_capacity(const ReactionNetwork& net) {
  if (net.species_count() != 1) throw DomainError("one-species classifier needs exactly one species");
  // Per source exponent, the signs the merged coefficient can take.
  std::map<Rational, std::set<int>> signs;
  for (std::size_t r = 0; r < net.reaction_count(); ++r) {
    signs[net.source(r)[0]].insert(sign(net.reaction_vector(r)[0]));
  }
  std::vector<std::vector<int>> choices;
  std::size_t mixed = 0;
  for (const auto& [e, s] : signs) {
    if (s.size() == 1) {
      choices.push_back({*s.begin()});
    } else {
      choices.push_back({1, -1, 0});
      ++mixed;
    }
  }
  if (mixed > 12) throw DomainError("too many shared source complexes for pattern enumeration");

  CapacityReport cap;
  cap.static_acr = true;
  cap.dynamic = true;
  std::vector<std::size_t> idx(choices.size(), 0);
  while (true) {
    std::vector<int> pattern;
    for (std::size_t g = 0; g < choices.size(); ++g) {
      if (choices[g][idx[g]] != 0) pattern.push_back(choices[g][idx[g]]);
    }
    ++cap.achievable_patterns;
    std::size_t changes = 0;
    for (std::size_t i = 1; i < pattern.size(); ++i) changes += pattern[i] != pattern[i - 1];
    const bool plus_minus = !pattern.empty() && pattern.front() > 0 && pattern.back() < 0;
    cap.capacity_static = cap.capacity_static || changes >= 1;
    cap.capacity_dynamic = cap.capacity_dynamic || plus_minus;
    cap.static_acr = cap.static_acr && changes == 1;
    cap.dynamic = cap.dynamic && changes == 1 && plus_minus;
    cap.table_calibrated = cap.table_calibrated || changes > 1;

    std::size_t g = 0;
    while (g < idx.size() && ++idx[g] == choices[g].size()) idx[g++] = 0;
    if (g == idx.size()) break;
  }
  return cap;
}

AcrReport classify_one_species(const ReactionNetwork& net, const RateAssignment& k) {
  if (net.species_count() != 1) throw DomainError("one-species classifier needs exactly one species");
  AcrReport rep = blank_report(net);
  rep.capacity = one_species_capacity(net);
  if (rep.capacity->table_calibrated) {
    note(rep, "table-calibrated rule", "some achievable sign pattern has more than one sign change", true);
  }

  const Signomial f = one_species_signomial(net, k);
  if (f.empty()) {
    note(rep, "one-species/identically-zero", "every positive point is a steady state", true);
    return rep;
  }
  const SignPattern pat = sign_changes(f);
  note(rep, "one-species/sign-changes", "merged rate function has " + std::to_string(pat.changes) + " sign change(s)",
       pat.changes >= 1);
  rep.roots = positive_roots(f);
  rep.steady_state_exists = !rep.roots.empty();
  const bool unique = rep.roots.size() == 1;
  note(rep, "one-species/static", "exactly one positive root (" + std::to_string(rep.roots.size()) + " found)",
       unique);
  if (!unique) return rep;

  const PositiveRoot& root = rep.roots.front();
  rep.acr_species = 0;
  rep.acr_value = root.value;
  rep.hyperplane = Hyperplane{0, root.value};
  rep.form.static_acr = rep.form.strong_static = true;
  const bool attracting = root.crossing == Crossing::plus_to_minus;
  note(rep, "one-species/dynamic", "root crossing is " + to_string(root.crossing), attracting);
  if (attracting) {
    rep.form.weak_dynamic = rep.form.dynamic = true;
    rep.stable_hyperplane = rep.weakly_stable_hyperplane = true;
    rep.width = Width::full;
    set_basin(rep, BasinKind::full_basin);
  } else {
    set_basin(rep, BasinKind::null);
  }
  return rep;
}

AcrReport classify_two_reaction(const ReactionNetwork& net, const RateAssignment& k) {
  if (net.reaction_count() != 2 || net.species_count() > 2 || net.species_count() == 0) {
    throw DomainError("two-reaction classifier needs two reactions and at most two species");
  }
  if (k.size() != 2) throw std::invalid_argument("rate count does not match reaction count");
  AcrReport rep = blank_report(net);
  const Planar p = planar(net);

  const bool distinct = p.src[0] != p.src[1];
  note(rep, "sources-distinct", "source complexes differ", distinct);
  if (!distinct) {
    note(rep, "static", "identical sources: never static", false);
    return rep;
  }
  const bool share_x = p.src[0][0] == p.src[1][0];
  const bool share_y = p.src[0][1] == p.src[1][1];
  note(rep, "shared-coordinate", "sources share exactly one coordinate", share_x != share_y);
  if (share_x == share_y) return rep;

  // h: coordinate where the sources differ (the candidate ACR species).
  const std::size_t h = share_y ? 0 : 1;
  const std::size_t o = 1 - h;
  const Rational& a1 = p.src[0][h];
  const Rational& a2 = p.src[1][h];
  const Rational& da1 = p.vec[0][h];
  const Rational& da2 = p.vec[1][h];
  const Rational& db1 = p.vec[0][o];
  const Rational& db2 = p.vec[1][o];
  const double k1 = k[0];
  const double k2 = k[1];

  const std::optional<Rational> mu = antiparallel(p.vec[0], p.vec[1]);
  note(rep, "static", "v1 = -mu v2 with mu > 0" + (mu ? " (mu = " + to_string(*mu) + ")" : std::string()),
       mu.has_value());

  if (mu) {
    rep.acr_species = h;
    rep.form.static_acr = rep.form.strong_static = true;
    rep.steady_state_exists = true;
    const double value = std::pow(k2 / (to_double(*mu) * k1), 1.0 / to_double(a1 - a2));
    rep.acr_value = value;
    rep.hyperplane = Hyperplane{h, value};

    const Rational a6 = da1 * (a2 - a1) + db1 * (p.src[1][o] - p.src[0][o]);
    const bool dynamic = a6 > 0;
    note(rep, "dynamic/inward", "(a~1-a1)(a2-a1) + (b~1-b1)(b2-b1) = " + sgn_text(a6) + " > 0", dynamic);
    if (da1 == 0) note(rep, "frozen", "ACR coordinate has zero derivative everywhere", true);
    if (!dynamic) {
      set_basin(rep, BasinKind::null);
      return rep;
    }
    rep.form.weak_dynamic = rep.form.dynamic = true;
    rep.stable_hyperplane = rep.weakly_stable_hyperplane = true;
    std::vector<double> gen{to_double(p.vec[0][0]), to_double(p.vec[0][1])};
    gen.resize(net.species_count());
    rep.subspace_generator = gen;
    const Rational w = da1 * db1;
    note(rep, "width", "(a~1-a1)(b~1-b1) = " + sgn_text(w), true);
    if (w == 0) {
      rep.width = Width::full;
      set_basin(rep, BasinKind::full_basin);
    } else {
      rep.width = w < 0 ? Width::wide : Width::narrow;
      set_basin(rep, BasinKind::full_space);
    }
    return rep;
  }

  const Rational inv = da1 * da2;
  const bool invariant = inv < 0;
  note(rep, "invariant-hyperplane", "(a~1-a1)(a~2-a2) = " + sgn_text(inv) + " < 0", invariant);
  if (!invariant) return rep;

  const double value = hyperplane_value(k1, da1, k2, da2, a1, a2);
  rep.hyperplane = Hyperplane{h, value};
  const Rational attract = da1 * (a2 - a1);
  const bool inward = attract > 0;
  note(rep, "weak-attraction", "(a2-a1)(a~1-a1) = " + sgn_text(attract) + " > 0", inward);
  if (!inward) {
    note(rep, "repelling", "invariant hyperplane repels nearby trajectories", true);
    set_basin(rep, BasinKind::null);
    return rep;
  }
  rep.acr_species = h;
  rep.acr_value = value;
  rep.form.weak_dynamic = true;
  rep.weakly_stable_hyperplane = true;

  // Left reaction: smaller source in the ACR coordinate.
  const bool first_left = a1 < a2;
  const std::size_t L = first_left ? 0 : 1;
  const std::size_t R = 1 - L;
  const Rational& aL = p.src[L][h];
  const Rational& aR = p.src[R][h];
  const Rational sigL = p.vec[L][o] / p.vec[L][h];
  const Rational sigR = p.vec[R][o] / p.vec[R][h];
  const Rational corrected = (aR - aL) * (sigL - sigR);
  const Rational printed = (aR - aL) * (sigR - sigL);
  const Rational combined = (a2 - a1) * (db1 / da1) + (a1 - a2) * (db2 / da2);
  note(rep, "basin/corrected", "(aR-aL)(sigmaL-sigmaR) = " + sgn_text(corrected) + " > 0 gives cylinder",
       corrected > 0);
  note(rep, "basin/as-printed", "(aR-aL)(sigmaR-sigmaL) = " + sgn_text(printed) + " > 0 gives cylinder",
       printed > 0);
  note(rep, "basin/combined", "sum over i!=j of (aj-ai)(b~i-bi)/(a~i-ai) = " + sgn_text(combined) + " >= 0",
       combined >= 0);
  if (corrected == 0) throw std::logic_error("equal slopes with an invariant non-static hyperplane");
  if (corrected < 0) {
    set_basin(rep, BasinKind::null);
    return rep;
  }

  rep.form.dynamic = true;
  rep.stable_hyperplane = true;
  rep.subspace_generator = std::vector<double>{to_double(p.vec[L][0]), to_double(p.vec[L][1])};
  const bool full = p.vec[L][o] >= 0 && p.vec[R][o] >= 0;
  note(rep, "full-basin", "b~L >= bL and b~R >= bR", full);
  if (full) {
    rep.width = Width::full;
    set_basin(rep, BasinKind::full_basin);
    return rep;
  }
  const Rational wL = p.vec[L][o] * (aL - aR);
  const Rational wR = p.vec[R][o] * (aR - aL);
  note(rep, "width", "(b~i-bi)(ai-aj) = (" + sgn_text(wL) + ", " + sgn_text(wR) + ")", true);
  if (wL > 0 && wR > 0) {
    rep.width = Width::wide;
  } else if (wL < 0 && wR < 0) {
    rep.width = Width::narrow;
  } else {
    throw std::logic_error("inconsistent width signs for a cylinder basin");
  }
  set_basin(rep, BasinKind::cylinder, {BasinKind::subspace});
  return rep;
}

AcrReport classify(const ReactionNetwork& net, const RateAssignment& k) {
  if (k.size() != net.reaction_count()) throw std::invalid_argument("rate count does not match reaction count");
  if (net.reaction_count() == 0) throw DomainError("network has no reactions");
  if (net.species_count() > 2) throw DomainError("classification covers at most two species");
  AcrReport rep;
  if (net.species_count() == 1) {
    rep = classify_one_species(net, k);
  } else if (net.reaction_count() == 1) {
    rep = classify_one_reaction(net);
  } else if (net.reaction_count() == 2) {
    rep = classify_two_reaction(net, k);
  } else {
    throw DomainError("classification covers at most two reactions for two-species networks");
  }
  if (net.reaction_count() == 2) {
    if (auto m = motif_of(net)) rep.motif = motif_name(*m);
  }
  return rep;
}

double acr_value(const ReactionNetwork& net, const RateAssignment& k) {
  AcrReport rep = classify(net, k);
  if (!rep.form.any() || !rep.acr_value) throw DomainError("network has no ACR for these rate constants");
  return *rep.acr_value;
}

std::optional<Hyperplane> invariant_hyperplane(const ReactionNetwork& net, const RateAssignment& k) {
  if (net.reaction_count() != 2 || net.species_count() != 2) {
    throw DomainError("invariant hyperplane search needs two reactions and two species");
  }
  const Planar p = planar(net);
  const bool share_x = p.src[0][0] == p.src[1][0];
  const bool share_y = p.src[0][1] == p.src[1][1];
  if (share_x == share_y) return std::nullopt;
  const std::size_t h = share_y ? 0 : 1;
  const Rational& da1 = p.vec[0][h];
  const Rational& da2 = p.vec[1][h];
  if (!(da1 * da2 < 0)) return std::nullopt;
  return Hyperplane{h, hyperplane_value(k[0], da1, k[1], da2, p.src[0][h], p.src[1][h])};
}

std::vector<std::string> lattice_check(const AcrReport& r) {
  std::vector<std::string> v;
  const AcrForm& f = r.form;
  if (f.dynamic && !f.weak_dynamic) v.push_back("dynamic⇒weak-dynamic");
  if (f.strong_static && !f.static_acr) v.push_back("strong-static⇒static");
  if (r.stable_hyperplane && !f.dynamic) v.push_back("stable⇒dynamic");
  if (r.stable_hyperplane && !r.weakly_stable_hyperplane) v.push_back("stable⇒weakly-stable");
  if (r.weakly_stable_hyperplane && !f.weak_dynamic) v.push_back("weakly-stable⇒weak-dynamic");
  if (f.weak_dynamic && r.steady_state_exists && !f.static_acr) v.push_back("weak-dynamic∧steady-state⇒static");
  for (const auto& [from, to] : kBasinEdges) {
    if (r.has(from) && !r.has(to)) v.push_back(to_string(from) + "⇒" + to_string(to));
  }
  if (r.basin != BasinKind::none && !r.has(r.basin)) v.push_back("basin∈basin-set");
  if (r.basin == BasinKind::none && r.basin_set.any()) v.push_back("none⇒empty-basin-set");
  if (f.weak_dynamic && !r.has(BasinKind::null)) v.push_back("weak-dynamic⇒null");
  if (f.dynamic) {
    BasinSet strong = r.basin_set;
    strong.reset(bit(BasinKind::null));
    strong.reset(bit(BasinKind::almost_neighborhood));
    if (strong.none()) v.push_back("dynamic⇒non-null-basin");
  }
  if (f.any() != r.acr_value.has_value()) v.push_back("acr-value⇔flag");
  if (f.any() && !r.acr_species) v.push_back("flag⇒acr-species");
  if (f.weak_dynamic && !r.hyperplane) v.push_back("weak-dynamic⇒hyperplane");
  return v;
}

}  // namespace acrlab
