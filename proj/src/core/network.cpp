// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/network.hpp"

#include "core/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace acrlab {

Complex::Complex(std::map<SpeciesIndex, Rational> terms) : terms_(std::move(terms)) {
  for (const auto& [s, c] : terms_) {
    if (c <= 0) throw std::invalid_argument("complex coefficients must be positive");
  }
}

Rational Complex::coefficient(SpeciesIndex s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? Rational(0) : it->second;
}

ReactionNetwork::ReactionNetwork(std::vector<std::string> species, std::vector<Reaction> reactions)
    : species_(std::move(species)), reactions_(std::move(reactions)) {
  std::set<std::pair<Complex, Complex>> seen;
  for (const auto& r : reactions_) {
    for (const Complex* c : {&r.reactant, &r.product}) {
      for (const auto& [s, coeff] : c->terms()) {
        if (s >= species_.size()) throw std::invalid_argument("complex references unknown species");
      }
    }
    if (r.reactant == r.product) throw std::invalid_argument("reaction product equals reactant");
    if (!seen.emplace(r.reactant, r.product).second) throw std::invalid_argument("duplicate reaction");
  }
  std::set<std::string> names(species_.begin(), species_.end());
  if (names.size() != species_.size()) throw std::invalid_argument("duplicate species name");
}

std::optional<SpeciesIndex> ReactionNetwork::find_species(std::string_view name) const {
  for (std::size_t i = 0; i < species_.size(); ++i) {
    if (species_[i] == name) return i;
  }
  return std::nullopt;
}

RationalVector ReactionNetwork::source(std::size_t r) const {
  RationalVector out(species_.size());
  for (const auto& [s, c] : reactions_.at(r).reactant.terms()) out[s] = c;
  return out;
}

RationalVector ReactionNetwork::reaction_vector(std::size_t r) const {
  RationalVector out(species_.size());
  const Reaction& rx = reactions_.at(r);
  for (const auto& [s, c] : rx.product.terms()) out[s] += c;
  for (const auto& [s, c] : rx.reactant.terms()) out[s] -= c;
  return out;
}

RateAssignment::RateAssignment(std::vector<double> rates) : rates_(std::move(rates)) {
  for (double k : rates_) {
    if (!std::isfinite(k) || k <= 0) throw std::invalid_argument("rate constants must be finite and positive");
  }
}

namespace {

constexpr std::size_t kMaxDigits = 18;

class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(std::string_view token) {
    skip_space();
    if (text_.substr(pos_).starts_with(token)) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  void expect(std::string_view token, const char* what) {
    if (!consume(token)) fail(std::string("expected ") + what);
  }
  std::size_t column() const { return pos_ + 1; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, pos_ + 1, what); }
  [[noreturn]] void fail_at(std::size_t column, const std::string& what) const {
    throw ParseError(line_, column, what);
  }

  std::string_view digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ - start > kMaxDigits) fail_at(start + 1, "integer has too many digits");
    return text_.substr(start, pos_ - start);
  }

  std::string_view identifier() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) return {};
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  double positive_number() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || std::strchr(".eE+-", text_[pos_]))) {
      ++pos_;
    }
    std::string token(text_.substr(start, pos_ - start));
    if (token.empty()) fail_at(start + 1, "expected a number");
    char* end = nullptr;
    double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size()) fail_at(start + 1, "malformed number '" + token + "'");
    if (!std::isfinite(value) || value <= 0) fail_at(start + 1, "rate must be positive and finite");
    return value;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

class Parser {
 public:
  ParsedNetwork run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      ++line_no;
      parse_line(text.substr(start, end - start), line_no);
      start = end + 1;
    }
    try {
      return {ReactionNetwork(species_, reactions_), RateAssignment(rates_)};
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, 1, e.what());
    }
  }

 private:
  void parse_line(std::string_view line, std::size_t line_no) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (auto bs = line.find('\\'); bs != std::string_view::npos) {
      std::string seq = "\\";
      if (bs + 1 < line.size()) seq += line[bs + 1];
      throw ParseError(line_no, bs + 1, "unknown escape sequence '" + seq + "'");
    }
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    LineScanner sc(line, line_no);
    if (sc.at_end()) return;

    Complex lhs = parse_complex(sc);
    bool reversible = false;
    if (sc.consume("<->")) {
      reversible = true;
    } else if (!sc.consume("->")) {
      sc.fail("expected '->' or '<->'");
    }
    Complex rhs = parse_complex(sc);
    sc.expect(";", "';' before rate constants");

    if (!reversible) {
      if (sc.identifier() != "k") sc.fail("expected 'k='");
      sc.expect("=", "'='");
      double k = sc.positive_number();
      if (!sc.at_end()) sc.fail("unexpected trailing text");
      add(sc, lhs, rhs, k);
    } else {
      if (sc.identifier() != "kf") sc.fail("expected 'kf='");
      sc.expect("=", "'='");
      double kf = sc.positive_number();
      sc.expect(",", "','");
      if (sc.identifier() != "kr") sc.fail("expected 'kr='");
      sc.expect("=", "'='");
      double kr = sc.positive_number();
      if (!sc.at_end()) sc.fail("unexpected trailing text");
      add(sc, lhs, rhs, kf);
      add(sc, rhs, lhs, kr);
    }
  }

  void add(const LineScanner& sc, const Complex& reactant, const Complex& product, double k) {
    if (reactant == product) sc.fail_at(1, "reaction product equals reactant");
    for (const auto& r : reactions_) {
      if (r.reactant == reactant && r.product == product) sc.fail_at(1, "duplicate reaction");
    }
    reactions_.push_back({reactant, product});
    rates_.push_back(k);
  }

  Complex parse_complex(LineScanner& sc) {
    std::map<SpeciesIndex, Rational> terms;
    bool first = true;
    do {
      sc.skip_space();
      const std::size_t col = sc.column();
      Rational coeff = 1;
      bool explicit_coeff = false;
      bool fraction = false;
      if (std::isdigit(static_cast<unsigned char>(sc.peek()))) {
        explicit_coeff = true;
        Integer num(std::string(sc.digits()));
        Integer den = 1;
        if (sc.consume("/")) {
          fraction = true;
          std::string_view d = sc.digits();
          if (d.empty()) sc.fail("expected denominator");
          den = Integer(std::string(d));
          if (den == 0) sc.fail_at(col, "zero denominator");
        }
        coeff = Rational(num, den);
      }
      std::string_view name = sc.identifier();
      if (name.empty()) {
        if (first && explicit_coeff && !fraction && coeff == 0) {
          char next = sc.peek();
          if (next == '+') sc.fail("the zero complex cannot be combined with other terms");
          return Complex();
        }
        sc.fail("expected species name");
      }
      if (coeff == 0) sc.fail_at(col, "zero stoichiometric coefficient");
      terms[intern(name)] += coeff;
      first = false;
    } while (sc.consume("+"));
    return Complex(std::move(terms));
  }

  SpeciesIndex intern(std::string_view name) {
    auto it = index_.find(std::string(name));
    if (it != index_.end()) return it->second;
    species_.emplace_back(name);
    index_.emplace(std::string(name), species_.size() - 1);
    return species_.size() - 1;
  }

  std::vector<std::string> species_;
  std::unordered_map<std::string, SpeciesIndex> index_;
  std::vector<Reaction> reactions_;
  std::vector<double> rates_;
};

std::string format_rate(double k) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", k);
  return buf;
}

}  // namespace

ParsedNetwork parse_network(std::string_view text) { return Parser().run(text); }

std::string complex_to_string(const ReactionNetwork& net, const Complex& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [s, coeff] : c.terms()) {
    if (!out.empty()) out += " + ";
    if (coeff != 1) {
      out += to_string(coeff);
      if (boost::multiprecision::denominator(coeff) != 1) out += ' ';
    }
    out += net.species()[s];
  }
  return out;
}

std::string serialize_network(const ReactionNetwork& net, const RateAssignment& k) {
  if (k.size() != net.reaction_count()) throw std::invalid_argument("rate count does not match reaction count");
  std::string out;
  for (std::size_t i = 0; i < net.reaction_count(); ++i) {
    const Reaction& r = net.reactions()[i];
    out += complex_to_string(net, r.reactant) + " -> " + complex_to_string(net, r.product) +
           " ; k=" + format_rate(k[i]) + "\n";
  }
  return out;
}

StoichData stoich_data(const ReactionNetwork& net) {
  StoichData d;
  for (std::size_t r = 0; r < net.reaction_count(); ++r) d.vectors.push_back(net.reaction_vector(r));
  d.dim = rank(d.vectors);
  if (d.vectors.size() == 2) {
    const auto& v1 = d.vectors[0];
    const auto& v2 = d.vectors[1];
    std::optional<Rational> mu;
    for (std::size_t j = 0; j < v2.size(); ++j) {
      if (v2[j] != 0) {
        mu = -v1[j] / v2[j];
        break;
      }
    }
    if (mu && *mu > 0) {
      bool ok = true;
      for (std::size_t j = 0; j < v1.size(); ++j) ok = ok && (v1[j] + *mu * v2[j] == 0);
      if (ok) d.antiparallel_mu = mu;
    }
  }
  return d;
}

bool compatible(const ReactionNetwork& net, std::span<const Rational> p, std::span<const Rational> q) {
  if (p.size() != net.species_count() || q.size() != net.species_count()) {
    throw std::invalid_argument("point dimension does not match species count");
  }
  std::vector<RationalVector> rows = stoich_data(net).vectors;
  std::size_t base = rank(rows);
  RationalVector diff(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) diff[i] = q[i] - p[i];
  rows.push_back(std::move(diff));
  return rank(std::move(rows)) == base;
}

bool compatible(const ReactionNetwork& net, std::span<const double> p, std::span<const double> q) {
  const std::size_t n = net.species_count();
  if (p.size() != n || q.size() != n) throw std::invalid_argument("point dimension does not match species count");
  std::vector<double> diff(n);
  double scale = 0;
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = q[i] - p[i];
    scale = std::max({scale, std::abs(p[i]), std::abs(q[i])});
  }
  // Orthonormal basis of the stoichiometric subspace, then the residual.
  std::vector<std::vector<double>> basis;
  for (std::size_t r = 0; r < net.reaction_count(); ++r) {
    RationalVector v = net.reaction_vector(r);
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = to_double(v[i]);
    double orig = 0;
    for (double x : w) orig = std::max(orig, std::abs(x));
    for (const auto& b : basis) {
      double dot = 0;
      for (std::size_t i = 0; i < n; ++i) dot += w[i] * b[i];
      for (std::size_t i = 0; i < n; ++i) w[i] -= dot * b[i];
    }
    double norm = 0;
    for (double x : w) norm += x * x;
    norm = std::sqrt(norm);
    if (norm <= 1e-12 * orig) continue;
    for (double& x : w) x /= norm;
    basis.push_back(std::move(w));
  }
  for (const auto& b : basis) {
    double dot = 0;
    for (std::size_t i = 0; i < n; ++i) dot += diff[i] * b[i];
    for (std::size_t i = 0; i < n; ++i) diff[i] -= dot * b[i];
  }
  double res = 0;
  for (double x : diff) res = std::max(res, std::abs(x));
  return res <= 1e-12 * std::max(scale, 1e-300);
}

}  // namespace acrlab
