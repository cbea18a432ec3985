// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/sim.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace acrlab {

SimConfig SimConfig::verification() {
  SimConfig cfg;
  cfg.rescale = true;
  cfg.t_max = 1e7;
  cfg.record = false;
  return cfg;
}

void validate(const SimConfig& c) {
  for (double v : {c.abs_tol, c.rel_tol, c.boundary_eps, c.blowup_bound, c.t_max, c.convergence_tol, c.dwell,
                   c.steady_tol}) {
    if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument("simulation settings must be positive and finite");
  }
  if (!(c.convergence_tol > c.abs_tol)) throw std::invalid_argument("convergence tolerance must exceed abs-tol");
  if (c.max_steps == 0) throw std::invalid_argument("max_steps must be positive");
}

std::string to_string(Terminal t) {
  switch (t) {
    case Terminal::converged: return "converged-to-hyperplane";
    case Terminal::boundary: return "boundary";
    case Terminal::blow_up: return "blow-up";
    case Terminal::horizon: return "horizon";
    case Terminal::interior_steady_state: return "interior-steady-state";
  }
  return "unknown";
}

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;

class Stepper {
 public:
  Stepper(const VectorField& f, std::size_t n) : f_(f), n_(n) {
    for (auto& k : k_) k.resize(n);
    tmp_.resize(n);
  }

  // One step of size h from x with f(x) = k1. Fills out and returns the
  // scaled error norm; k7 holds f(out).
  double step(std::span<const double> x, std::span<const double> k1, double h, std::vector<double>& out,
              std::vector<double>& k7, double atol, double rtol) {
    auto& [K2, K3, K4, K5, K6] = k_;
    for (std::size_t i = 0; i < n_; ++i) tmp_[i] = x[i] + h * a21 * k1[i];
    f_.evaluate(tmp_, K2);
    for (std::size_t i = 0; i < n_; ++i) tmp_[i] = x[i] + h * (a31 * k1[i] + a32 * K2[i]);
    f_.evaluate(tmp_, K3);
    for (std::size_t i = 0; i < n_; ++i) tmp_[i] = x[i] + h * (a41 * k1[i] + a42 * K2[i] + a43 * K3[i]);
    f_.evaluate(tmp_, K4);
    for (std::size_t i = 0; i < n_; ++i) {
      tmp_[i] = x[i] + h * (a51 * k1[i] + a52 * K2[i] + a53 * K3[i] + a54 * K4[i]);
    }
    f_.evaluate(tmp_, K5);
    for (std::size_t i = 0; i < n_; ++i) {
      tmp_[i] = x[i] + h * (a61 * k1[i] + a62 * K2[i] + a63 * K3[i] + a64 * K4[i] + a65 * K5[i]);
    }
    f_.evaluate(tmp_, K6);
    out.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      out[i] = x[i] + h * (b1 * k1[i] + b3 * K3[i] + b4 * K4[i] + b5 * K5[i] + b6 * K6[i]);
    }
    k7.resize(n_);
    f_.evaluate(out, k7);
    double err = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      const double e = h * (e1 * k1[i] + e3 * K3[i] + e4 * K4[i] + e5 * K5[i] + e6 * K6[i] + e7 * k7[i]);
      const double sc = atol + rtol * std::max(std::abs(x[i]), std::abs(out[i]));
      err += (e / sc) * (e / sc);
    }
    return std::sqrt(err / static_cast<double>(n_));
  }

 private:
  const VectorField& f_;
  std::size_t n_;
  std::array<std::vector<double>, 5> k_;
  std::vector<double> tmp_;
};

constexpr double kSettleRatio = 1e3;
// Stall ball radius in units of the local error tolerance.
constexpr double kStallRadius = 100;

double inf_norm(std::span<const double> v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double min_coord(std::span<const double> v) { return *std::min_element(v.begin(), v.end()); }

}  // namespace

Trajectory integrate(const VectorField& field, std::span<const double> x0, const SimConfig& cfg,
                     std::optional<Hyperplane> target) {
  validate(cfg);
  const std::size_t n = field.dimension();
  if (x0.size() != n) throw std::invalid_argument("initial condition dimension mismatch");
  for (double v : x0) {
    if (!(v > 0) || !std::isfinite(v)) throw std::invalid_argument("initial condition must be strictly positive");
  }
  if (target && target->species >= n) throw std::invalid_argument("target hyperplane species out of range");

  const VectorField F = cfg.rescale ? field.rescaled() : field;
  Stepper stepper(F, n);
  Trajectory tr;
  std::vector<double> x(x0.begin(), x0.end());
  std::vector<double> f = F(x);
  double t = 0;

  auto distance = [&](std::span<const double> s) {
    return target ? std::abs(s[target->species] - target->value) : 0.0;
  };
  double d = distance(x);
  tr.initial_distance = tr.final_distance = tr.min_distance = d;
  bool in_tol = target && d < cfg.convergence_tol;
  double in_tol_since = 0;
  if (in_tol) tr.first_within_tol = 0.0;

  auto record = [&] {
    if (!cfg.record) return;
    tr.times.push_back(t);
    tr.states.push_back(x);
  };
  auto finish = [&](Terminal term) {
    tr.terminal = term;
    tr.t_final = t;
    tr.final_state = x;
    tr.final_distance = distance(x);
    if (cfg.record && (tr.times.empty() || tr.times.back() != t)) record();
    return tr;
  };
  auto is_steady = [&](std::span<const double> fx, std::span<const double> s) {
    return inf_norm(fx) <= cfg.steady_tol * std::max(1.0, inf_norm(s));
  };

  // Explicit steps near a stable equilibrium sit at the stability limit and
  // leave |f| at tolerance level, so is_steady alone never fires there.
  std::vector<double> anchor = x;
  double anchor_t = 0;
  auto stalled = [&] {
    double r = 0;
    for (std::size_t j = 0; j < n; ++j) r = std::max(r, std::abs(x[j] - anchor[j]));
    if (r > kStallRadius * (cfg.abs_tol + cfg.rel_tol * inf_norm(anchor))) {
      anchor = x;
      anchor_t = t;
      return false;
    }
    return t - anchor_t >= cfg.dwell && inf_norm(f) <= std::sqrt(cfg.steady_tol) * std::max(1.0, inf_norm(x));
  };

  record();
  if (is_steady(f, x)) {
    return finish(target && d < cfg.convergence_tol ? Terminal::converged : Terminal::interior_steady_state);
  }

  double h = std::min(cfg.t_max, 1e-2 * std::max(inf_norm(x), 1e-3) / std::max(inf_norm(f), 1e-300));
  std::vector<double> xn;
  std::vector<double> fn;
  std::vector<double> probe;
  std::vector<double> fprobe;

  // Shrinks an accepted step onto the first crossing of an event function.
  auto bisect = [&](double h_full, auto&& past_event) {
    double lo = 0;
    double hi = h_full;
    for (int it = 0; it < 80 && hi - lo > 1e-15 * std::max(1.0, t); ++it) {
      const double mid = 0.5 * (lo + hi);
      stepper.step(x, f, mid, probe, fprobe, cfg.abs_tol, cfg.rel_tol);
      if (past_event(probe)) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    stepper.step(x, f, hi, probe, fprobe, cfg.abs_tol, cfg.rel_tol);
    t += hi;
    x = probe;
    f = fprobe;
  };

  while (true) {
    if (tr.steps >= cfg.max_steps) {
      tr.low_confidence = true;
      return finish(Terminal::horizon);
    }
    h = std::min(h, cfg.t_max - t);
    const double err = stepper.step(x, f, h, xn, fn, cfg.abs_tol, cfg.rel_tol);
    if (!(err <= 1.0)) {
      h *= std::isfinite(err) ? std::max(0.2, 0.9 * std::pow(err, -0.2)) : 0.2;
      if (h < 1e-14 * std::max(1.0, t)) {
        throw NumericError("step size underflow at t = " + std::to_string(t));
      }
      continue;
    }
    ++tr.steps;

    if (min_coord(xn) < cfg.boundary_eps) {
      bisect(h, [&](std::span<const double> s) { return min_coord(s) < cfg.boundary_eps; });
      return finish(Terminal::boundary);
    }
    if (inf_norm(xn) > cfg.blowup_bound) {
      bisect(h, [&](std::span<const double> s) { return inf_norm(s) > cfg.blowup_bound; });
      if (target && distance(x) < cfg.convergence_tol) {
        tr.low_confidence = true;
        return finish(Terminal::converged);
      }
      return finish(Terminal::blow_up);
    }

    t += h;
    x.swap(xn);
    f.swap(fn);
    record();

    if (target) {
      const double dn = distance(x);
      tr.max_distance_increase = std::max(tr.max_distance_increase, dn - d);
      d = dn;
      tr.min_distance = std::min(tr.min_distance, d);
      if (d < cfg.convergence_tol) {
        if (!in_tol) {
          in_tol = true;
          in_tol_since = t;
        }
        if (!tr.first_within_tol) tr.first_within_tol = t;
      } else {
        in_tol = false;
      }
    }

    if (is_steady(f, x)) {
      return finish(target && d < cfg.convergence_tol ? Terminal::converged : Terminal::interior_steady_state);
    }
    if (target && in_tol && t - in_tol_since >= cfg.dwell) {
      // A non-target coordinate may still be falling if it falls no faster
      // than the target moves: near a hyperplane of steady states both rates
      // vanish together, while a null-basin drift keeps f_j bounded away.
      bool settled = true;
      const double fi = std::abs(f[target->species]);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != target->species && f[j] < 0 && -f[j] > kSettleRatio * fi) settled = false;
      }
      if (settled) return finish(Terminal::converged);
    }
    if (!in_tol && stalled()) return finish(Terminal::interior_steady_state);
    if (t >= cfg.t_max) {
      if (target && in_tol && t - in_tol_since >= cfg.dwell) tr.low_confidence = true;
      return finish(Terminal::horizon);
    }
    h *= err > 0 ? std::min(5.0, std::max(0.2, 0.9 * std::pow(err, -0.2))) : 5.0;
  }
}

std::string trajectory_csv(const Trajectory& traj, const std::vector<std::string>& species) {
  std::string out = "t";
  for (const auto& s : species) out += "," + s;
  out += "\n";
  char buf[64];
  for (std::size_t r = 0; r < traj.times.size(); ++r) {
    std::snprintf(buf, sizeof buf, "%.16e", traj.times[r]);
    out += buf;
    for (double v : traj.states[r]) {
      std::snprintf(buf, sizeof buf, ",%.16e", v);
      out += buf;
    }
    out += "\n";
  }
  return out;
}

}  // namespace acrlab
