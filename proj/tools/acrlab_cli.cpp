// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
// Command-line front end. Talks to the library only through the C API.
#include "acrlab/acrlab.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Thrown with the exit code the process should return.
struct Exit {
  int code;
};

int exit_code(acrlab_status s) {
  switch (s) {
    case ACRLAB_OK: return 0;
    case ACRLAB_ERR_PARSE:
    case ACRLAB_ERR_ARGUMENT: return kExitUsage;
    default: return kExitDomain;
  }
}

void check(acrlab_status s) {
  if (s == ACRLAB_OK) return;
  std::cerr << "acrlab: " << acrlab_last_error() << "\n";
  throw Exit{exit_code(s)};
}

[[noreturn]] void usage(const std::string& what) {
  std::cerr << "acrlab: " << what << "\n";
  throw Exit{kExitUsage};
}

struct NetDeleter {
  void operator()(acrlab_network* n) const { acrlab_network_free(n); }
};
struct ReportDeleter {
  void operator()(acrlab_report* r) const { acrlab_report_free(r); }
};
using NetPtr = std::unique_ptr<acrlab_network, NetDeleter>;
using ReportPtr = std::unique_ptr<acrlab_report, ReportDeleter>;

// Owns a string returned by the library and writes it to stdout.
void emit(char* s) {
  std::fputs(s, stdout);
  acrlab_string_free(s);
}

std::string scenario_dir() {
  if (const char* env = std::getenv("ACRLAB_EXAMPLES"); env && *env) return env;
  return ACRLAB_DEFAULT_SCENARIOS;
}

// Existing paths win; otherwise the file name is looked up among the bundled
// scenarios, so "examples/archetype.rxn" works from any directory.
fs::path resolve(const std::string& input) {
  fs::path p(input);
  if (fs::exists(p)) return p;
  fs::path bundled = fs::path(scenario_dir()) / p.filename();
  if (fs::exists(bundled)) return bundled;
  usage("no such file: " + input);
}

NetPtr load(const std::string& input) {
  std::string text;
  bool json = false;
  if (input == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else if (input.find("->") != std::string::npos && !fs::exists(input)) {
    text = input;  // inline network
  } else {
    const fs::path p = resolve(input);
    std::ifstream in(p, std::ios::binary);
    if (!in) usage("cannot read " + p.string());
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
    json = p.extension() == ".json";
  }
  if (!json) {
    const auto first = text.find_first_not_of(" \t\r\n");
    json = first != std::string::npos && text[first] == '{';
  }
  acrlab_network* raw = nullptr;
  check(json ? acrlab_network_from_json(text.c_str(), &raw) : acrlab_network_parse(text.c_str(), &raw));
  return NetPtr(raw);
}

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') usage(std::string("bad number in ") + what + ": '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) usage(std::string("empty ") + what);
  return out;
}

NetPtr with_rates(NetPtr net, const std::string& k) {
  if (k.empty()) return net;
  const std::vector<double> rates = parse_list(k, "--k");
  acrlab_network* raw = nullptr;
  check(acrlab_network_with_rates(net.get(), rates.data(), rates.size(), &raw));
  return NetPtr(raw);
}

struct Common {
  std::string input;
  std::string k;
  bool json = false;
  bool csv = false;
  bool svg = false;
  std::string format;
};

struct SimOptions {
  double tmax = 0;
  double tol = 0;
  std::uint64_t seed = 0;
  std::string target;
};

void apply(const SimOptions& o, acrlab_sim_config& cfg) {
  if (o.tmax > 0) cfg.t_max = o.tmax;
  if (o.tol > 0) {
    cfg.rel_tol = o.tol;
    cfg.abs_tol = o.tol * 1e-2;
  }
  cfg.seed = o.seed;
}

// "--target A=1.5" names a species and a value.
bool parse_target(const acrlab_network* net, const std::string& spec, size_t& species, double& value) {
  if (spec.empty()) return false;
  const auto eq = spec.find('=');
  if (eq == std::string::npos) usage("--target expects SPECIES=VALUE");
  const std::string name = spec.substr(0, eq);
  for (size_t i = 0; i < acrlab_network_species_count(net); ++i) {
    if (name == acrlab_network_species_name(net, i)) {
      species = i;
      value = parse_list(spec.substr(eq + 1), "--target").at(0);
      return true;
    }
  }
  usage("unknown species in --target: " + name);
}

std::string format_of(const Common& c, const std::string& fallback) {
  if (c.json + c.csv + c.svg > 1) usage("choose one of --json, --csv, --svg");
  if (c.json) return "json";
  if (c.csv) return "csv";
  if (c.svg) return "svg";
  return c.format.empty() ? fallback : c.format;
}

void print_report_text(const acrlab_network* net, const acrlab_report* r) {
  const acrlab_form f = acrlab_report_form(r);
  const long s = acrlab_report_acr_species(r);
  auto yn = [](int v) { return v ? "yes" : "no"; };
  std::printf("acr species:   %s\n", s < 0 ? "none" : acrlab_network_species_name(net, static_cast<size_t>(s)));
  std::printf("static:        %s\n", yn(f.static_acr));
  std::printf("strong static: %s\n", yn(f.strong_static));
  std::printf("weak dynamic:  %s\n", yn(f.weak_dynamic));
  std::printf("dynamic:       %s\n", yn(f.dynamic));
  std::printf("basin:         %s\n", acrlab_report_basin(r));
  std::printf("width:         %s\n", acrlab_report_width(r));
  double v = 0;
  if (acrlab_report_acr_value(r, &v) == ACRLAB_OK) std::printf("acr value:     %.17g\n", v);
}

void add_input(CLI::App* sub, Common& c) {
  sub->add_option("network", c.input, "Network file (.rxn or .json), inline text, or - for stdin")->required();
  sub->add_option("--k", c.k, "Comma-separated rate constants overriding the file");
}

void add_formats(CLI::App* sub, Common& c, const std::string& choices) {
  sub->add_flag("--json", c.json, "JSON output");
  if (choices.find("csv") != std::string::npos) sub->add_flag("--csv", c.csv, "CSV output");
  if (choices.find("svg") != std::string::npos) sub->add_flag("--svg", c.svg, "SVG output");
  sub->add_option("--format", c.format, "Output format: " + choices);
}

void add_sim(CLI::App* sub, SimOptions& o) {
  sub->add_option("--tmax", o.tmax, "Integration horizon")->check(CLI::PositiveNumber);
  sub->add_option("--tol", o.tol, "Relative step tolerance (absolute is 1/100 of it)")->check(CLI::PositiveNumber);
  sub->add_option("--target", o.target, "Target hyperplane as SPECIES=VALUE");
}

int run(int argc, char** argv) {
  CLI::App app{"Absolute concentration robustness toolkit for small mass-action networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", acrlab_version());

  Common c;
  SimOptions so;
  std::size_t samples = 100;
  std::size_t grid = 40;
  std::string x0;
  std::string range;
  std::string set = "weak";

  auto* validate = app.add_subcommand("validate", "Parse a network and report its size");
  add_input(validate, c);
  add_formats(validate, c, "text|json");

  auto* classify = app.add_subcommand("classify", "Decide ACR forms, basin and value");
  add_input(classify, c);
  add_formats(classify, c, "text|json");

  auto* atlas = app.add_subcommand("atlas", "List or draw the motif atlas");
  atlas->add_option("--set", set, "static, weak or all")->check(CLI::IsMember({"static", "weak", "all"}));
  add_formats(atlas, c, "json|svg");

  auto* simulate = app.add_subcommand("simulate", "Integrate one trajectory");
  add_input(simulate, c);
  add_formats(simulate, c, "csv|json");
  add_sim(simulate, so);
  simulate->add_option("--x0", x0, "Comma-separated initial state")->required();

  auto* verify = app.add_subcommand("verify", "Check a classification against sampled trajectories");
  add_input(verify, c);
  add_formats(verify, c, "json");
  add_sim(verify, so);
  verify->add_option("--samples", samples, "Number of initial conditions")->check(CLI::PositiveNumber);
  verify->add_option("--seed", so.seed, "Random seed");

  auto* plot = app.add_subcommand("plot", "Basin map over a square grid");
  add_input(plot, c);
  add_formats(plot, c, "svg|csv");
  add_sim(plot, so);
  plot->add_option("--grid", grid, "Cells per axis")->check(CLI::PositiveNumber);
  plot->add_option("--range", range, "Grid bounds as LO,HI (default 0.01,10)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*validate) {
    NetPtr net = with_rates(load(c.input), c.k);
    if (format_of(c, "text") == "json") {
      char* s = nullptr;
      check(acrlab_network_to_json(net.get(), &s));
      emit(s);
    } else {
      std::printf("ok: %zu species, %zu reactions\n", acrlab_network_species_count(net.get()),
                  acrlab_network_reaction_count(net.get()));
    }
    return 0;
  }

  if (*classify) {
    NetPtr net = with_rates(load(c.input), c.k);
    acrlab_report* raw = nullptr;
    check(acrlab_classify(net.get(), &raw));
    ReportPtr report(raw);
    const std::string fmt = format_of(c, "text");
    if (fmt == "json") {
      char* s = nullptr;
      check(acrlab_report_to_json(report.get(), &s));
      emit(s);
    } else if (fmt == "text") {
      print_report_text(net.get(), report.get());
    } else {
      usage("classify output is text or json");
    }
    return 0;
  }

  if (*atlas) {
    const std::string fmt = format_of(c, "json");
    if (fmt != "json" && fmt != "svg") usage("atlas output is json or svg");
    const acrlab_atlas_set which = set == "static" ? ACRLAB_ATLAS_STATIC
                                   : set == "weak" ? ACRLAB_ATLAS_WEAK
                                                   : ACRLAB_ATLAS_ALL;
    char* s = nullptr;
    check(acrlab_atlas(which, fmt == "json" ? ACRLAB_FORMAT_JSON : ACRLAB_FORMAT_SVG, &s));
    emit(s);
    return 0;
  }

  if (*simulate) {
    NetPtr net = with_rates(load(c.input), c.k);
    const std::vector<double> state = parse_list(x0, "--x0");
    acrlab_sim_config cfg = acrlab_sim_config_default();
    apply(so, cfg);
    size_t species = 0;
    double value = 0;
    const bool has_target = parse_target(net.get(), so.target, species, value);
    const long ts = has_target ? static_cast<long>(species) : -1;
    const std::string fmt = format_of(c, "csv");
    char* out = nullptr;
    if (fmt == "csv") {
      check(acrlab_simulate(net.get(), state.data(), state.size(), &cfg, ts, value, &out, nullptr));
    } else if (fmt == "json") {
      check(acrlab_simulate(net.get(), state.data(), state.size(), &cfg, ts, value, nullptr, &out));
    } else {
      usage("simulate output is csv or json");
    }
    emit(out);
    return 0;
  }

  if (*verify) {
    NetPtr net = with_rates(load(c.input), c.k);
    if (format_of(c, "json") != "json") usage("verify output is json");
    acrlab_sim_config cfg = acrlab_sim_config_verification();
    apply(so, cfg);
    char* s = nullptr;
    check(acrlab_verify_json(net.get(), samples, &cfg, &s));
    emit(s);
    return 0;
  }

  if (*plot) {
    NetPtr net = with_rates(load(c.input), c.k);
    const std::string fmt = format_of(c, "svg");
    if (fmt != "svg" && fmt != "csv") usage("plot output is svg or csv");
    double lo = 0.01;
    double hi = 10;
    if (!range.empty()) {
      const auto r = parse_list(range, "--range");
      if (r.size() != 2) usage("--range expects LO,HI");
      lo = r[0];
      hi = r[1];
    }
    acrlab_sim_config cfg = acrlab_sim_config_verification();
    apply(so, cfg);
    size_t species = 0;
    double value = NAN;
    parse_target(net.get(), so.target, species, value);
    char* s = nullptr;
    check(acrlab_basin_map(net.get(), grid, lo, hi, species, value, &cfg,
                           fmt == "svg" ? ACRLAB_FORMAT_SVG : ACRLAB_FORMAT_CSV, &s));
    emit(s);
    return 0;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Exit& e) {
    return e.code;
  }
}
