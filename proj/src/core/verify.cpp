// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/verify.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

namespace acrlab {

std::string to_string(Expectation e) {
  switch (e) {
    case Expectation::converge: return "converge";
    case Expectation::no_converge: return "no-converge";
    case Expectation::no_converge_closer: return "no-converge-closer";
  }
  return "unknown";
}

namespace {

constexpr double kBoxLo = 1e-2;
constexpr double kBoxHi = 1e2;

// Runs fn(i) for i in [0, n) on a small thread pool. Results must be keyed by
// index so that output does not depend on scheduling.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), n));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

std::vector<double> box_point(std::mt19937_64& rng, std::size_t dim) {
  std::vector<double> p(dim);
  for (auto& v : p) v = log_uniform(rng, kBoxLo, kBoxHi);
  return p;
}

struct Plan {
  std::vector<double> x0;
  std::string region;
  Expectation expected;
};

}  // namespace

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
  return std::exp(u(rng));
}

std::vector<double> sample_coset(std::mt19937_64& rng, const RegionSpec& coset, std::size_t dim, double lo,
                                 double hi) {
  const std::size_t i = coset.hyperplane.species;
  const auto& v = coset.generator;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    std::vector<double> w(dim);
    for (std::size_t j = 0; j < dim; ++j) w[j] = j == i ? coset.hyperplane.value : log_uniform(rng, lo, hi);
    const double zi = log_uniform(rng, lo, hi);
    const double beta = (zi - coset.hyperplane.value) / v[i];
    std::vector<double> z(dim);
    bool positive = true;
    for (std::size_t j = 0; j < dim; ++j) {
      z[j] = j == i ? zi : w[j] + beta * v[j];
      positive = positive && z[j] > 0;
    }
    if (positive) return z;
  }
  throw DomainError("could not sample the compatible region");
}

double cylinder_radius(const VectorField& field, const Hyperplane& h) {
  const VectorField g = field.rescaled();
  const std::size_t n = g.dimension();
  const std::size_t i = h.species;
  const double a = h.value;
  const std::array<double, 5> probes{1e-2, 1e-1, 1.0, 1e1, 1e2};

  auto ok = [&](double delta) {
    for (double y : probes) {
      std::vector<double> p(n, y);
      p[i] = a;
      const std::vector<double> on = g(p);
      for (int s = -32; s <= 32; ++s) {
        p[i] = a + delta * s / 32.0;
        const std::vector<double> f = g(p);
        if (f[i] * (a - p[i]) < 0) return false;
        for (std::size_t j = 0; j < n; ++j) {
          if (j == i) continue;
          if (!(on[j] > 0) || f[j] < 0.5 * on[j]) return false;
        }
      }
    }
    return true;
  };
  for (double delta = 0.5 * a; delta > 1e-12 * a; delta *= 0.5) {
    if (ok(delta)) return delta;
  }
  throw DomainError("no attracting cylinder around the hyperplane");
}

VerificationReport verify(const ReactionNetwork& net, const RateAssignment& k, const AcrReport& report,
                          std::size_t samples, const SimConfig& cfg) {
  if (samples == 0) throw std::invalid_argument("sample count must be positive");
  validate(cfg);
  if (!report.hyperplane) throw DomainError("report has no hyperplane to verify against");
  const std::size_t n = net.species_count();
  const Hyperplane H = *report.hyperplane;
  const VectorField field = build_field(net, k);

  VerificationReport out;
  out.seed = cfg.seed;
  out.config = cfg;
  out.hyperplane = H;
  std::mt19937_64 rng(cfg.seed);
  std::vector<Plan> plans;

  auto off_hyperplane = [&] {
    std::vector<double> p;
    do {
      p = box_point(rng, n);
    } while (p[H.species] == H.value);
    return p;
  };

  if (n == 1) {
    // Scalar flow: a sample converges iff it starts moving toward the root.
    out.prediction = report.form.dynamic ? "full-basin" : "static-only";
    for (std::size_t s = 0; s < samples; ++s) {
      auto p = off_hyperplane();
      const double f = field(p)[0];
      const bool toward = f * (H.value - p[0]) > 0;
      plans.push_back({p, "box", toward ? Expectation::converge : Expectation::no_converge});
    }
  } else if (report.form.dynamic && report.basin == BasinKind::full_basin) {
    out.prediction = "full-basin";
    for (std::size_t s = 0; s < samples; ++s) plans.push_back({box_point(rng, n), "box", Expectation::converge});
  } else if (report.form.dynamic && report.basin == BasinKind::full_space) {
    out.prediction = "full-space";
    const RegionSpec coset = coset_region(H, *report.subspace_generator);
    for (std::size_t s = 0; s < samples; ++s) {
      auto p = off_hyperplane();
      const bool inside = region_contains(coset, p);
      plans.push_back({p, inside ? "compatible" : "incompatible",
                       inside ? Expectation::converge : Expectation::no_converge_closer});
    }
  } else if (report.form.dynamic && report.basin == BasinKind::cylinder) {
    out.prediction = "cylinder";
    const double delta = cylinder_radius(field, H);
    out.cylinder_radius = delta;
    const RegionSpec coset = coset_region(H, *report.subspace_generator);
    for (std::size_t s = 0; s < samples; ++s) {
      if (s % 2 == 0) {
        std::vector<double> p = box_point(rng, n);
        std::uniform_real_distribution<double> u(-delta, delta);
        p[H.species] = H.value + u(rng);
        plans.push_back({p, "cylinder", Expectation::converge});
      } else {
        plans.push_back({sample_coset(rng, coset, n, kBoxLo, kBoxHi), "compatible", Expectation::converge});
      }
    }
  } else if (report.form.weak_dynamic) {
    out.prediction = "null";
    for (std::size_t s = 0; s < samples; ++s) plans.push_back({off_hyperplane(), "box", Expectation::no_converge_closer});
  } else {
    out.prediction = report.form.static_acr ? "static-only" : "repelling";
    for (std::size_t s = 0; s < samples; ++s) plans.push_back({off_hyperplane(), "box", Expectation::no_converge});
  }

  out.samples.resize(plans.size());
  parallel_for(plans.size(), [&](std::size_t idx) {
    SampleVerdict v;
    v.index = idx;
    v.x0 = plans[idx].x0;
    v.region = plans[idx].region;
    v.expected = plans[idx].expected;
    try {
      SimConfig c = cfg;
      c.record = false;
      const Trajectory tr = integrate(field, v.x0, c, H);
      v.terminal = tr.terminal;
      v.converged = tr.terminal == Terminal::converged;
      v.low_confidence = tr.low_confidence;
      v.initial_distance = tr.initial_distance;
      v.final_distance = tr.final_distance;
      v.moved_closer = tr.final_distance < tr.initial_distance;
      v.t_final = tr.t_final;
      switch (v.expected) {
        case Expectation::converge: v.agrees = v.converged; break;
        case Expectation::no_converge: v.agrees = !v.converged; break;
        case Expectation::no_converge_closer: v.agrees = !v.converged && v.moved_closer; break;
      }
    } catch (const NumericError& e) {
      v.error = e.what();
      v.agrees = false;
    }
    out.samples[idx] = std::move(v);
  });

  std::size_t agree = 0;
  for (const auto& v : out.samples) {
    agree += v.agrees;
    out.converged += v.converged;
    out.moved_closer += v.moved_closer;
    if (!v.agrees) out.counterexamples.push_back(v.index);
  }
  out.agreement_rate = static_cast<double>(agree) / static_cast<double>(out.samples.size());
  return out;
}

BasinMap basin_map(const ReactionNetwork& net, const RateAssignment& k, std::size_t grid, const SimConfig& cfg,
                   const Hyperplane& target, double lo, double hi) {
  const std::size_t n = net.species_count();
  if (n == 0 || n > 2) throw DomainError("basin maps need one or two species");
  if (grid == 0) throw std::invalid_argument("grid resolution must be positive");
  if (!(lo > 0) || !(hi > lo)) throw std::invalid_argument("grid range must satisfy 0 < lo < hi");
  validate(cfg);
  const VectorField field = build_field(net, k);

  BasinMap map;
  map.grid = grid;
  map.lo = lo;
  map.hi = hi;
  map.target = target;
  map.species = net.species();
  const std::size_t cells = n == 1 ? grid : grid * grid;
  map.cells.resize(cells);
  auto coord = [&](std::size_t i) { return lo + (hi - lo) * (static_cast<double>(i) + 0.5) / static_cast<double>(grid); };
  parallel_for(cells, [&](std::size_t idx) {
    BasinCell c;
    c.x0 = n == 1 ? std::vector<double>{coord(idx)} : std::vector<double>{coord(idx % grid), coord(idx / grid)};
    SimConfig sc = cfg;
    sc.record = false;
    try {
      const Trajectory tr = integrate(field, c.x0, sc, target);
      c.terminal = tr.terminal;
      c.converged = tr.terminal == Terminal::converged;
    } catch (const NumericError&) {
      c.terminal = Terminal::horizon;
    }
    map.cells[idx] = std::move(c);
  });
  return map;
}

std::string basin_map_csv(const BasinMap& map) {
  std::string out;
  for (const auto& s : map.species) out += s + "0,";
  out += "terminal,converged\n";
  char buf[64];
  for (const auto& c : map.cells) {
    for (double v : c.x0) {
      std::snprintf(buf, sizeof buf, "%.16e,", v);
      out += buf;
    }
    out += to_string(c.terminal) + "," + (c.converged ? "1" : "0") + "\n";
  }
  return out;
}

}  // namespace acrlab
