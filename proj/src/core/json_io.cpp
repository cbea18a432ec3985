// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/json_io.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace acrlab {

namespace {

Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw ParseError(1, 1, "expected an integer");
}

[[noreturn]] void bad(const std::string& what) { throw ParseError(1, 1, what); }

Json optional_double(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json hyperplane_json(const Hyperplane& h, const std::vector<std::string>& species) {
  Json j;
  j["species"] = h.species < species.size() ? Json(species[h.species]) : Json(h.species);
  j["index"] = h.species;
  j["value"] = h.value;
  return j;
}

Json complex_json(const ReactionNetwork& net, const Complex& c) {
  Json j = Json::object();
  for (const auto& [s, coef] : c.terms()) j[net.species()[s]] = rational_json(coef);
  return j;
}

Complex complex_from_json(const Json& j, const std::vector<std::string>& species) {
  if (!j.is_object()) bad("complex must be an object of species coefficients");
  std::map<SpeciesIndex, Rational> terms;
  for (const auto& [name, coef] : j.items()) {
    auto it = std::find(species.begin(), species.end(), name);
    if (it == species.end()) bad("unknown species '" + name + "'");
    const Rational r = rational_from_json(coef);
    if (r <= 0) bad("coefficients must be positive");
    terms[static_cast<SpeciesIndex>(it - species.begin())] = r;
  }
  return Complex(std::move(terms));
}

}  // namespace

Json rational_json(const Rational& r) {
  return Json{{"num", integer_json(numerator(r))}, {"den", integer_json(denominator(r))}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) bad("rational must be {\"num\":p,\"den\":q}");
  const Integer den = integer_from_json(j.at("den"));
  if (den == 0) bad("zero denominator");
  return Rational(integer_from_json(j.at("num")), den);
}

Json network_json(const ReactionNetwork& net, const RateAssignment& k) {
  Json j;
  j["species"] = net.species();
  Json rx = Json::array();
  for (std::size_t r = 0; r < net.reaction_count(); ++r) {
    Json e;
    e["reactant"] = complex_json(net, net.reactions()[r].reactant);
    e["product"] = complex_json(net, net.reactions()[r].product);
    e["k"] = r < k.size() ? Json(k[r]) : Json(nullptr);
    rx.push_back(std::move(e));
  }
  j["reactions"] = std::move(rx);
  return j;
}

ParsedNetwork network_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("species") || !j.contains("reactions")) {
      bad("network document needs \"species\" and \"reactions\"");
    }
    const auto species = j.at("species").get<std::vector<std::string>>();
    std::vector<Reaction> reactions;
    std::vector<double> rates;
    for (const Json& e : j.at("reactions")) {
      reactions.push_back({complex_from_json(e.at("reactant"), species), complex_from_json(e.at("product"), species)});
      if (!e.at("k").is_number()) bad("rate constant must be a number");
      const double k = e.at("k").get<double>();
      if (!(k > 0) || !std::isfinite(k)) bad("rate constants must be positive and finite");
      rates.push_back(k);
    }
    return {ReactionNetwork(species, std::move(reactions)), RateAssignment(std::move(rates))};
  } catch (const Json::exception& e) {
    bad(e.what());
  } catch (const std::invalid_argument& e) {
    bad(e.what());
  }
}

Json signomial_json(const Signomial& s) {
  Json j = Json::array();
  for (const auto& t : s.terms()) {
    j.push_back(Json::array({t.coefficient, integer_json(numerator(t.exponent)), integer_json(denominator(t.exponent))}));
  }
  return j;
}

Json report_json(const AcrReport& r) {
  Json j;
  j["species"] = r.species;
  j["acr_species"] = r.acr_species ? Json(r.species[*r.acr_species]) : Json(nullptr);
  j["static"] = r.form.static_acr;
  j["strong_static"] = r.form.strong_static;
  j["weak_dynamic"] = r.form.weak_dynamic;
  j["dynamic"] = r.form.dynamic;
  j["stable_hyperplane"] = r.stable_hyperplane;
  j["weakly_stable_hyperplane"] = r.weakly_stable_hyperplane;
  j["steady_state_exists"] = r.steady_state_exists;
  j["basin"] = to_string(r.basin);
  Json set = Json::array();
  for (std::size_t b = 0; b < kBasinKindCount; ++b) {
    if (r.basin_set.test(b)) set.push_back(to_string(static_cast<BasinKind>(b)));
  }
  j["basin_set"] = std::move(set);
  j["width"] = to_string(r.width);
  j["acr_value"] = optional_double(r.acr_value);
  j["hyperplane"] = r.hyperplane ? hyperplane_json(*r.hyperplane, r.species) : Json(nullptr);
  j["subspace_generator"] = r.subspace_generator ? Json(*r.subspace_generator) : Json(nullptr);
  j["motif"] = r.motif ? Json(*r.motif) : Json(nullptr);
  if (r.capacity) {
    const CapacityReport& c = *r.capacity;
    j["capacity"] = {{"capacity_static", c.capacity_static},
                     {"static", c.static_acr},
                     {"capacity_dynamic", c.capacity_dynamic},
                     {"dynamic", c.dynamic},
                     {"achievable_patterns", c.achievable_patterns},
                     {"table_calibrated", c.table_calibrated}};
  } else {
    j["capacity"] = nullptr;
  }
  Json roots = Json::array();
  for (const auto& root : r.roots) roots.push_back({{"value", root.value}, {"crossing", to_string(root.crossing)}});
  j["roots"] = std::move(roots);
  Json diags = Json::array();
  for (const auto& d : r.diagnostics) diags.push_back({{"tag", d.tag}, {"condition", d.condition}, {"holds", d.holds}});
  j["diagnostics"] = std::move(diags);
  return j;
}

Json atlas_json(std::span<const AtlasEntry> entries) {
  Json j = Json::array();
  for (const AtlasEntry& e : entries) {
    const MotifDescriptor& m = e.motif;
    auto s = [](int v) { return v > 0 ? "+" : v < 0 ? "-" : "0"; };
    j.push_back({{"id", e.id},
                 {"set", e.set == AtlasSet::weak ? "weak" : "static"},
                 {"angle", e.angle},
                 {"center", e.center},
                 {"motif",
                  {{"dim", m.dim},
                   {"left", to_string(m.left)},
                   {"right", to_string(m.right)},
                   {"slope_sum", s(m.slope_sum)},
                   {"slope_diff", s(m.slope_diff)}}},
                 {"name", motif_name(m)},
                 {"label", e.label},
                 {"example", e.example_text}});
  }
  return j;
}

Json sim_config_json(const SimConfig& c) {
  return {{"abs_tol", c.abs_tol},
          {"rel_tol", c.rel_tol},
          {"boundary_eps", c.boundary_eps},
          {"blowup_bound", c.blowup_bound},
          {"t_max", c.t_max},
          {"convergence_tol", c.convergence_tol},
          {"dwell", c.dwell},
          {"steady_tol", c.steady_tol},
          {"seed", c.seed},
          {"rescale", c.rescale}};
}

Json verification_json(const VerificationReport& v) {
  Json j;
  j["seed"] = v.seed;
  j["config"] = sim_config_json(v.config);
  j["prediction"] = v.prediction;
  j["hyperplane"] = {{"index", v.hyperplane.species}, {"value", v.hyperplane.value}};
  j["cylinder_radius"] = optional_double(v.cylinder_radius);
  j["samples"] = v.samples.size();
  j["agreement_rate"] = v.agreement_rate;
  j["converged"] = v.converged;
  j["moved_closer"] = v.moved_closer;
  j["counterexamples"] = v.counterexamples;
  Json verdicts = Json::array();
  for (const auto& s : v.samples) {
    Json e{{"index", s.index},
           {"x0", s.x0},
           {"region", s.region},
           {"expected", to_string(s.expected)},
           {"terminal", to_string(s.terminal)},
           {"converged", s.converged},
           {"moved_closer", s.moved_closer},
           {"low_confidence", s.low_confidence},
           {"initial_distance", s.initial_distance},
           {"final_distance", s.final_distance},
           {"t_final", s.t_final},
           {"agrees", s.agrees}};
    if (!s.error.empty()) e["error"] = s.error;
    verdicts.push_back(std::move(e));
  }
  j["verdicts"] = std::move(verdicts);
  return j;
}

}  // namespace acrlab
