// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "acrlab/acrlab.h"

#include "core/classify.hpp"
#include "core/errors.hpp"
#include "core/json_io.hpp"
#include "core/motif.hpp"
#include "core/sim.hpp"
#include "core/verify.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

struct acrlab_network {
  acrlab::ParsedNetwork parsed;
};

struct acrlab_report {
  acrlab::AcrReport report;
  std::string basin;
  std::string width;
};

namespace {

thread_local std::string g_last_error;

acrlab_status fail(acrlab_status s, const std::string& what) {
  g_last_error = what;
  return s;
}

// Maps exceptions from the core onto status codes.
template <class Fn>
acrlab_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return ACRLAB_OK;
  } catch (const acrlab::ParseError& e) {
    return fail(ACRLAB_ERR_PARSE, e.what());
  } catch (const acrlab::DomainError& e) {
    return fail(ACRLAB_ERR_DOMAIN, e.what());
  } catch (const acrlab::NumericError& e) {
    return fail(ACRLAB_ERR_NUMERIC, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(ACRLAB_ERR_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ACRLAB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ACRLAB_ERR_INTERNAL, e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

acrlab::SimConfig to_core(const acrlab_sim_config& c) {
  acrlab::SimConfig s;
  s.abs_tol = c.abs_tol;
  s.rel_tol = c.rel_tol;
  s.boundary_eps = c.boundary_eps;
  s.blowup_bound = c.blowup_bound;
  s.t_max = c.t_max;
  s.convergence_tol = c.convergence_tol;
  s.dwell = c.dwell;
  s.steady_tol = c.steady_tol;
  s.seed = c.seed;
  s.rescale = c.rescale != 0;
  return s;
}

acrlab_sim_config from_core(const acrlab::SimConfig& s) {
  return {s.abs_tol, s.rel_tol, s.boundary_eps, s.blowup_bound, s.t_max, s.convergence_tol,
          s.dwell,   s.steady_tol, s.seed,      s.rescale ? 1 : 0};
}

}  // namespace

extern "C" {

const char* acrlab_last_error(void) { return g_last_error.c_str(); }

void acrlab_string_free(char* s) { std::free(s); }

const char* acrlab_version(void) { return "0.1.0"; }

acrlab_status acrlab_network_parse(const char* text, acrlab_network** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = new acrlab_network{acrlab::parse_network(text)};
  });
}

acrlab_status acrlab_network_from_json(const char* json, acrlab_network** out) {
  return guarded([&] {
    require(json && out, "null argument");
    acrlab::Json j;
    try {
      j = acrlab::Json::parse(json);
    } catch (const acrlab::Json::parse_error& e) {
      throw acrlab::ParseError(1, e.byte, e.what());
    }
    *out = new acrlab_network{acrlab::network_from_json(j)};
  });
}

void acrlab_network_free(acrlab_network* net) { delete net; }

size_t acrlab_network_species_count(const acrlab_network* net) {
  return net ? net->parsed.network.species_count() : 0;
}

size_t acrlab_network_reaction_count(const acrlab_network* net) {
  return net ? net->parsed.network.reaction_count() : 0;
}

const char* acrlab_network_species_name(const acrlab_network* net, size_t index) {
  if (!net || index >= net->parsed.network.species_count()) return nullptr;
  return net->parsed.network.species()[index].c_str();
}

acrlab_status acrlab_network_with_rates(const acrlab_network* net, const double* rates, size_t n,
                                        acrlab_network** out) {
  return guarded([&] {
    require(net && rates && out, "null argument");
    require(n == net->parsed.network.reaction_count(), "rate count must equal the reaction count");
    acrlab::RateAssignment k(std::vector<double>(rates, rates + n));
    *out = new acrlab_network{acrlab::ParsedNetwork{net->parsed.network, std::move(k)}};
  });
}

acrlab_status acrlab_network_to_json(const acrlab_network* net, char** out) {
  return guarded([&] {
    require(net && out, "null argument");
    *out = dup(acrlab::network_json(net->parsed.network, net->parsed.rates).dump(2) + "\n");
  });
}

acrlab_status acrlab_network_to_text(const acrlab_network* net, char** out) {
  return guarded([&] {
    require(net && out, "null argument");
    *out = dup(acrlab::serialize_network(net->parsed.network, net->parsed.rates));
  });
}

acrlab_status acrlab_classify(const acrlab_network* net, acrlab_report** out) {
  return guarded([&] {
    require(net && out, "null argument");
    acrlab::AcrReport r = acrlab::classify(net->parsed.network, net->parsed.rates);
    std::string basin = acrlab::to_string(r.basin);
    std::string width = acrlab::to_string(r.width);
    *out = new acrlab_report{std::move(r), std::move(basin), std::move(width)};
  });
}

void acrlab_report_free(acrlab_report* report) { delete report; }

acrlab_form acrlab_report_form(const acrlab_report* report) {
  if (!report) return {0, 0, 0, 0};
  const auto& f = report->report.form;
  return {f.static_acr, f.strong_static, f.weak_dynamic, f.dynamic};
}

long acrlab_report_acr_species(const acrlab_report* report) {
  if (!report || !report->report.acr_species) return -1;
  return static_cast<long>(*report->report.acr_species);
}

acrlab_status acrlab_report_acr_value(const acrlab_report* report, double* out) {
  if (!report || !out) return fail(ACRLAB_ERR_ARGUMENT, "null argument");
  if (!report->report.acr_value) return fail(ACRLAB_ERR_DOMAIN, "report has no ACR value");
  *out = *report->report.acr_value;
  return ACRLAB_OK;
}

const char* acrlab_report_basin(const acrlab_report* report) { return report ? report->basin.c_str() : nullptr; }

const char* acrlab_report_width(const acrlab_report* report) { return report ? report->width.c_str() : nullptr; }

size_t acrlab_report_lattice_violations(const acrlab_report* report) {
  return report ? acrlab::lattice_check(report->report).size() : 0;
}

acrlab_status acrlab_report_to_json(const acrlab_report* report, char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    acrlab::Json j = acrlab::report_json(report->report);
    j["lattice_violations"] = acrlab::lattice_check(report->report);
    *out = dup(j.dump(2) + "\n");
  });
}

acrlab_status acrlab_atlas(acrlab_atlas_set set, acrlab_format format, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const acrlab::Atlas& atlas = acrlab::enumerate_atlas();
    std::vector<acrlab::AtlasEntry> entries;
    if (set == ACRLAB_ATLAS_STATIC || set == ACRLAB_ATLAS_ALL) {
      entries.insert(entries.end(), atlas.static_entries.begin(), atlas.static_entries.end());
    }
    if (set == ACRLAB_ATLAS_WEAK || set == ACRLAB_ATLAS_ALL) {
      entries.insert(entries.end(), atlas.weak_entries.begin(), atlas.weak_entries.end());
    }
    require(set == ACRLAB_ATLAS_STATIC || set == ACRLAB_ATLAS_WEAK || set == ACRLAB_ATLAS_ALL, "unknown atlas set");
    if (format == ACRLAB_FORMAT_JSON) {
      *out = dup(acrlab::atlas_json(entries).dump(2) + "\n");
    } else if (format == ACRLAB_FORMAT_SVG) {
      *out = dup(acrlab::atlas_svg(entries));
    } else {
      throw std::invalid_argument("atlas output is json or svg");
    }
  });
}

acrlab_sim_config acrlab_sim_config_default(void) { return from_core(acrlab::SimConfig{}); }

acrlab_sim_config acrlab_sim_config_verification(void) { return from_core(acrlab::SimConfig::verification()); }

acrlab_status acrlab_simulate(const acrlab_network* net, const double* x0, size_t n, const acrlab_sim_config* cfg,
                              long target_species, double target_value, char** csv, char** summary_json) {
  return guarded([&] {
    require(net && x0 && cfg, "null argument");
    const auto& pn = net->parsed;
    std::optional<acrlab::Hyperplane> target;
    if (target_species >= 0) {
      require(static_cast<size_t>(target_species) < pn.network.species_count(), "target species out of range");
      require(target_value > 0 && std::isfinite(target_value), "target value must be positive");
      target = acrlab::Hyperplane{static_cast<size_t>(target_species), target_value};
    } else {
      try {
        target = acrlab::classify(pn.network, pn.rates).hyperplane;
      } catch (const acrlab::DomainError&) {
        // Unclassifiable networks still integrate, just without a target.
      }
    }
    acrlab::SimConfig c = to_core(*cfg);
    c.record = csv != nullptr;
    const acrlab::VectorField field = acrlab::build_field(pn.network, pn.rates);
    const acrlab::Trajectory tr = acrlab::integrate(field, std::span<const double>(x0, n), c, target);
    if (csv) *csv = dup(acrlab::trajectory_csv(tr, pn.network.species()));
    if (summary_json) {
      acrlab::Json j;
      j["terminal"] = acrlab::to_string(tr.terminal);
      j["t_final"] = tr.t_final;
      j["final_state"] = tr.final_state;
      j["steps"] = tr.steps;
      j["low_confidence"] = tr.low_confidence;
      if (target) {
        j["target"] = {{"index", target->species}, {"value", target->value}};
        j["initial_distance"] = tr.initial_distance;
        j["final_distance"] = tr.final_distance;
      } else {
        j["target"] = nullptr;
      }
      *summary_json = dup(j.dump(2) + "\n");
    }
  });
}

acrlab_status acrlab_verify_json(const acrlab_network* net, size_t samples, const acrlab_sim_config* cfg, char** out) {
  return guarded([&] {
    require(net && cfg && out, "null argument");
    const auto& pn = net->parsed;
    const acrlab::AcrReport report = acrlab::classify(pn.network, pn.rates);
    const acrlab::VerificationReport v = acrlab::verify(pn.network, pn.rates, report, samples, to_core(*cfg));
    acrlab::Json j = acrlab::verification_json(v);
    j["lattice_violations"] = acrlab::lattice_check(report);
    *out = dup(j.dump(2) + "\n");
  });
}

acrlab_status acrlab_basin_map(const acrlab_network* net, size_t grid, double lo, double hi, size_t target_species,
                               double target_value, const acrlab_sim_config* cfg, acrlab_format format, char** out) {
  return guarded([&] {
    require(net && cfg && out, "null argument");
    const auto& pn = net->parsed;
    acrlab::Hyperplane target;
    if (std::isnan(target_value)) {
      const auto h = acrlab::classify(pn.network, pn.rates).hyperplane;
      if (!h) throw acrlab::DomainError("network has no ACR hyperplane; pass a target");
      target = *h;
    } else {
      require(target_species < pn.network.species_count(), "target species out of range");
      require(target_value > 0 && std::isfinite(target_value), "target value must be positive");
      target = {target_species, target_value};
    }
    const acrlab::BasinMap map = acrlab::basin_map(pn.network, pn.rates, grid, to_core(*cfg), target, lo, hi);
    if (format == ACRLAB_FORMAT_CSV) {
      *out = dup(acrlab::basin_map_csv(map));
    } else if (format == ACRLAB_FORMAT_SVG) {
      *out = dup(acrlab::basin_map_svg(map));
    } else {
      throw std::invalid_argument("basin maps are csv or svg");
    }
  });
}

}  // extern "C"
