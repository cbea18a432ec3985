// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/massaction.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace acrlab {

VectorField::VectorField(std::size_t dim, std::vector<FieldTerm> terms) : dim_(dim), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.exponents.size() != dim_ || t.delta.size() != dim_) {
      throw std::invalid_argument("field term dimension mismatch");
    }
  }
}

double monomial(std::span<const double> x, std::span<const double> exponents) {
  double m = 1.0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const double e = exponents[j];
    if (e == 0) continue;
    if (!(x[j] > 0)) return 0.0;
    if (e == 1) {
      m *= x[j];
    } else if (e == 2) {
      m *= x[j] * x[j];
    } else {
      m *= std::pow(x[j], e);
    }
  }
  return m;
}

void VectorField::evaluate(std::span<const double> x, std::span<double> out) const {
  std::fill(out.begin(), out.end(), 0.0);
  for (const auto& t : terms_) {
    const double flux = t.rate * monomial(x, t.exponents);
    if (flux == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) out[j] += flux * t.delta[j];
  }
}

std::vector<double> VectorField::operator()(std::span<const double> x) const {
  std::vector<double> out(dim_);
  evaluate(x, out);
  return out;
}

VectorField VectorField::rescaled() const {
  if (terms_.empty()) return *this;
  std::vector<double> m(dim_, std::numeric_limits<double>::infinity());
  for (const auto& t : terms_) {
    for (std::size_t j = 0; j < dim_; ++j) m[j] = std::min(m[j], t.exponents[j]);
  }
  VectorField out = *this;
  for (auto& t : out.terms_) {
    for (std::size_t j = 0; j < dim_; ++j) t.exponents[j] -= m[j];
  }
  return out;
}

VectorField build_field(const ReactionNetwork& net, const RateAssignment& k) {
  if (k.size() != net.reaction_count()) throw std::invalid_argument("rate count does not match reaction count");
  std::vector<FieldTerm> terms;
  for (std::size_t r = 0; r < net.reaction_count(); ++r) {
    FieldTerm t;
    t.rate = k[r];
    for (const auto& c : net.source(r)) t.exponents.push_back(to_double(c));
    for (const auto& c : net.reaction_vector(r)) t.delta.push_back(to_double(c));
    terms.push_back(std::move(t));
  }
  return VectorField(net.species_count(), std::move(terms));
}

Signomial::Signomial(std::vector<SignomialTerm> terms) {
  std::map<Rational, Rational> merged;
  for (const auto& t : terms) {
    if (t.exponent < 0) throw std::invalid_argument("signomial exponents must be nonnegative");
    merged[t.exponent] += from_double(t.coefficient);
  }
  for (const auto& [e, c] : merged) {
    if (c != 0) terms_.push_back({to_double(c), e});
  }
}

double Signomial::operator()(double x) const {
  double s = 0;
  for (const auto& t : terms_) s += t.coefficient * std::pow(x, to_double(t.exponent));
  return s;
}

double Signomial::magnitude(double x) const {
  double s = 0;
  for (const auto& t : terms_) s += std::abs(t.coefficient) * std::pow(x, to_double(t.exponent));
  return s;
}

Signomial one_species_signomial(const ReactionNetwork& net, const RateAssignment& k) {
  if (net.species_count() != 1) throw DomainError("one-species signomial needs exactly one species");
  if (k.size() != net.reaction_count()) throw std::invalid_argument("rate count does not match reaction count");
  // Merge exactly before rounding so that cancellations are exact.
  std::map<Rational, Rational> merged;
  for (std::size_t r = 0; r < net.reaction_count(); ++r) {
    merged[net.source(r)[0]] += from_double(k[r]) * net.reaction_vector(r)[0];
  }
  std::vector<SignomialTerm> terms;
  for (const auto& [e, c] : merged) {
    if (c != 0) terms.push_back({to_double(c), e});
  }
  return Signomial(std::move(terms));
}

std::string to_string(Crossing c) {
  switch (c) {
    case Crossing::plus_to_minus: return "+to-";
    case Crossing::minus_to_plus: return "-to+";
    case Crossing::touch: return "touch";
  }
  return "unknown";
}

SignPattern sign_changes(const Signomial& s) {
  SignPattern p;
  if (s.empty()) return p;
  p.first = s.terms().front().coefficient > 0 ? 1 : -1;
  p.last = s.terms().back().coefficient > 0 ? 1 : -1;
  int prev = p.first;
  for (const auto& t : s.terms()) {
    int cur = t.coefficient > 0 ? 1 : -1;
    if (cur != prev) ++p.changes;
    prev = cur;
  }
  return p;
}

namespace {

// Dense polynomial, index = degree, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

// Remainder of a / b; b nonzero.
Poly remainder(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

Poly quotient(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

// Scales by a positive constant so the leading coefficient is +-1.
void normalize(Poly& p) {
  if (p.empty()) return;
  const Rational lead = abs(p.back());
  for (auto& c : p) c /= lead;
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
    normalize(b);
  }
  normalize(a);
  return a;
}

int sign_at(const Poly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc.sign();
}

std::vector<Poly> sturm_chain(const Poly& s) {
  std::vector<Poly> chain{s, derivative(s)};
  normalize(chain[1]);
  while (chain.back().size() > 1) {
    Poly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    normalize(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

int variations(const std::vector<Poly>& chain, const Rational& x) {
  int count = 0;
  int prev = 0;
  for (const auto& p : chain) {
    int s = sign_at(p, x);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

// Sign of p at a double point: floating Horner with a running error bound,
// exact evaluation when the bound cannot certify the sign.
int sign_at_double(const Poly& exact, const std::vector<double>& approx, double x) {
  double acc = 0;
  double mag = 0;
  for (std::size_t i = approx.size(); i-- > 0;) {
    acc = acc * x + approx[i];
    mag = mag * std::abs(x) + std::abs(approx[i]);
  }
  const double bound = 4.0 * static_cast<double>(approx.size() + 1) * std::numeric_limits<double>::epsilon() * mag;
  if (std::abs(acc) > bound) return acc > 0 ? 1 : -1;
  return sign_at(exact, from_double(x));
}

}  // namespace

std::vector<PositiveRoot> positive_roots(const Signomial& s) {
  if (s.empty()) throw DomainError("identically zero rate function: every positive point is a steady state");

  std::vector<Rational> exps;
  for (const auto& t : s.terms()) exps.push_back(t.exponent);
  const Integer q = common_denominator(exps);
  const Rational lo_exp = exps.front() * q;
  const Rational hi_exp = exps.back() * q;
  if (hi_exp - lo_exp > 4096) throw DomainError("signomial degree too large for exact root isolation");

  // t = x^(1/q); dividing by t^min leaves P(0) != 0.
  const std::size_t degree = static_cast<std::size_t>((hi_exp - lo_exp).convert_to<long>());
  Poly p(degree + 1);
  for (const auto& t : s.terms()) {
    const auto d = static_cast<std::size_t>((t.exponent * q - lo_exp).convert_to<long>());
    p[d] = from_double(t.coefficient);
  }
  if (degree == 0) return {};

  Poly g = gcd(p, derivative(p));
  Poly sq = g.size() > 1 ? quotient(p, g) : p;
  normalize(sq);
  const std::vector<Poly> chain = sturm_chain(sq);

  // Root bounds from the Cauchy bound of P and of its reversal.
  Rational upper = 0;
  for (std::size_t i = 0; i + 1 < sq.size(); ++i) upper = std::max(upper, Rational(abs(sq[i] / sq.back())));
  upper += 2;
  Rational inv = 0;
  for (std::size_t i = 1; i < sq.size(); ++i) inv = std::max(inv, Rational(abs(sq[i] / sq.front())));
  Rational lower = 1 / (inv + 2);

  struct Interval {
    Rational lo, hi;
    int count;
  };
  std::vector<Interval> pending{{lower, upper, variations(chain, lower) - variations(chain, upper)}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!pending.empty()) {
    Interval iv = pending.back();
    pending.pop_back();
    if (iv.count <= 0) continue;
    if (iv.count == 1) {
      isolated.emplace_back(iv.lo, iv.hi);
      continue;
    }
    // Split off-center when the midpoint is itself a root.
    Rational mid;
    for (long k = 2;; ++k) {
      mid = iv.lo + (iv.hi - iv.lo) / k;
      if (sign_at(sq, mid) != 0) break;
    }
    const int vmid = variations(chain, mid);
    pending.push_back({iv.lo, mid, variations(chain, iv.lo) - vmid});
    pending.push_back({mid, iv.hi, vmid - variations(chain, iv.hi)});
  }
  std::sort(isolated.begin(), isolated.end());

  std::vector<double> approx;
  for (const auto& c : sq) approx.push_back(to_double(c));

  std::vector<PositiveRoot> roots;
  for (const auto& [lo, hi] : isolated) {
    const int sp_lo = sign_at(p, lo);
    const int sp_hi = sign_at(p, hi);
    Crossing crossing = Crossing::touch;
    if (sp_lo > 0 && sp_hi < 0) crossing = Crossing::plus_to_minus;
    if (sp_lo < 0 && sp_hi > 0) crossing = Crossing::minus_to_plus;

    double a = to_double(lo);
    double b = to_double(hi);
    const int sa = sign_at(sq, from_double(a));
    if (sa == 0 || sa == sign_at(sq, from_double(b))) {
      // Interval narrower than the double grid around the root.
      roots.push_back({std::pow(sa == 0 ? a : 0.5 * (a + b), q.convert_to<double>()), crossing});
      continue;
    }
    double root = 0.5 * (a + b);
    for (int it = 0; it < 400; ++it) {
      const double m = 0.5 * (a + b);
      if (m <= a || m >= b) break;
      const int sm = sign_at_double(sq, approx, m);
      root = m;
      if (sm == 0) break;
      if (sm == sa) {
        a = m;
      } else {
        b = m;
      }
      root = 0.5 * (a + b);
    }
    roots.push_back({std::pow(root, q.convert_to<double>()), crossing});
  }
  return roots;
}

}  // namespace acrlab
