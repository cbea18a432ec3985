// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/motif.hpp"

#include "core/classify.hpp"

#include <array>
#include <stdexcept>

namespace acrlab {

std::string to_string(Compass c) {
  static constexpr std::array<const char*, 8> names{"E", "NE", "N", "NW", "W", "SW", "S", "SE"};
  return names[static_cast<std::size_t>(c)];
}

std::string motif_name(const MotifDescriptor& m) {
  auto s = [](int v) { return v > 0 ? "+" : v < 0 ? "-" : "0"; };
  return "dim" + std::to_string(m.dim) + " " + to_string(m.left) + "/" + to_string(m.right) + " sum" +
         s(m.slope_sum) + " diff" + s(m.slope_diff);
}

namespace {

Compass compass(int dh, int dv) {
  if (dh > 0) return dv > 0 ? Compass::NE : dv < 0 ? Compass::SE : Compass::E;
  if (dh < 0) return dv > 0 ? Compass::NW : dv < 0 ? Compass::SW : Compass::W;
  if (dv > 0) return Compass::N;
  if (dv < 0) return Compass::S;
  throw std::logic_error("zero reaction vector has no direction");
}

// Slope dv/dh with vertical vectors as signed infinity.
struct Slope {
  int inf = 0;
  Rational finite;
};

Slope slope(const Rational& dh, const Rational& dv) {
  if (dh == 0) return {sign(dv), 0};
  return {0, dv / dh};
}

int sum_sign(const Slope& a, const Slope& b) {
  if (a.inf != 0 || b.inf != 0) {
    const int s = a.inf + b.inf;
    return s > 0 ? 1 : s < 0 ? -1 : 0;
  }
  return sign(a.finite + b.finite);
}

int diff_sign(const Slope& a, const Slope& b) {
  if (a.inf != 0 || b.inf != 0) {
    const int s = a.inf - b.inf;
    return s > 0 ? 1 : s < 0 ? -1 : 0;
  }
  return sign(a.finite - b.finite);
}

struct Normalized {
  std::array<Rational, 2> left;
  std::array<Rational, 2> right;
};

// Sources share the vertical coordinate; left has the smaller horizontal one.
std::optional<Normalized> normalize(const ReactionNetwork& net) {
  if (net.reaction_count() != 2 || net.species_count() == 0 || net.species_count() > 2) return std::nullopt;
  std::array<std::array<Rational, 2>, 2> src;
  std::array<std::array<Rational, 2>, 2> vec;
  for (std::size_t r = 0; r < 2; ++r) {
    RationalVector s = net.source(r);
    RationalVector v = net.reaction_vector(r);
    for (std::size_t j = 0; j < 2; ++j) {
      src[r][j] = j < s.size() ? s[j] : Rational(0);
      vec[r][j] = j < v.size() ? v[j] : Rational(0);
    }
  }
  const bool share_x = src[0][0] == src[1][0];
  const bool share_y = src[0][1] == src[1][1];
  if (share_x == share_y) return std::nullopt;
  const std::size_t h = share_y ? 0 : 1;
  const std::size_t o = 1 - h;
  const std::size_t L = src[0][h] < src[1][h] ? 0 : 1;
  const std::size_t R = 1 - L;
  return Normalized{{vec[L][h], vec[L][o]}, {vec[R][h], vec[R][o]}};
}

}  // namespace

std::optional<MotifDescriptor> motif_of(const ReactionNetwork& net) {
  const auto nv = normalize(net);
  if (!nv) return std::nullopt;
  const auto& [l, r] = *nv;
  MotifDescriptor m;
  m.dim = static_cast<int>(rank({RationalVector(l.begin(), l.end()), RationalVector(r.begin(), r.end())}));
  m.left = compass(sign(l[0]), sign(l[1]));
  m.right = compass(sign(r[0]), sign(r[1]));
  const Slope sl = slope(l[0], l[1]);
  const Slope sr = slope(r[0], r[1]);
  m.slope_sum = sum_sign(sl, sr);
  m.slope_diff = diff_sign(sl, sr);
  return m;
}

std::optional<MotifArrows> motif_arrows(const ReactionNetwork& net) {
  const auto nv = normalize(net);
  if (!nv) return std::nullopt;
  return MotifArrows{{to_double(nv->left[0]), to_double(nv->left[1])},
                     {to_double(nv->right[0]), to_double(nv->right[1])}};
}

namespace {

struct Seed {
  const char* id;
  double angle;
  bool center;
  AtlasCategory category;
  const char* label;
  const char* example;
};

constexpr const char* kFull = "full-basin DACR";
constexpr const char* kNull = "null DACR";
constexpr const char* kStaticOnly = "static only";

// Canonical embeddings, smallest nonnegative integer coefficients.
constexpr std::array<Seed, 8> kStaticSeeds{{
    {"static-90", 90, false, AtlasCategory::static_only, kStaticOnly, "Y -> 2Y ; k=1\nX + Y -> X ; k=1\n"},
    {"static-45", 45, false, AtlasCategory::dynamic_narrow, "narrow-basin DACR",
     "Y -> X + 2Y ; k=1\nX + Y -> 0 ; k=1\n"},
    {"static-0", 0, false, AtlasCategory::dynamic_full, kFull, "0 -> X ; k=1\nX -> 0 ; k=1\n"},
    {"static--45", -45, false, AtlasCategory::dynamic_wide, "wide-basin DACR", "Y -> X ; k=1\nX + Y -> 2Y ; k=1\n"},
    {"static--90", -90, false, AtlasCategory::static_only, kStaticOnly, "Y -> 0 ; k=1\nX + Y -> X + 2Y ; k=1\n"},
    {"static--135", -135, false, AtlasCategory::static_only, kStaticOnly,
     "X + Y -> 0 ; k=1\n2X + Y -> 3X + 2Y ; k=1\n"},
    {"static-180", 180, false, AtlasCategory::static_only, kStaticOnly, "X -> 0 ; k=1\n2X -> 3X ; k=1\n"},
    {"static-135", 135, false, AtlasCategory::static_only, kStaticOnly, "X + Y -> 2Y ; k=1\n2X + Y -> 3X ; k=1\n"},
}};

constexpr std::array<Seed, 17> kWeakSeeds{{
    {"weak-center", 0, true, AtlasCategory::full_basin, kFull, "0 -> X ; k=1\nX -> 0 ; k=1\n"},
    {"weak-90", 90, false, AtlasCategory::full_basin, kFull, "0 -> X + Y ; k=1\nX -> Y ; k=1\n"},
    {"weak-67.5", 67.5, false, AtlasCategory::full_basin, kFull, "0 -> X + 2Y ; k=1\nX -> Y ; k=1\n"},
    {"weak-112.5", 112.5, false, AtlasCategory::full_basin, kFull, "0 -> X + Y ; k=1\nX -> 2Y ; k=1\n"},
    {"weak-45", 45, false, AtlasCategory::full_basin, kFull, "0 -> X + Y ; k=1\nX -> 0 ; k=1\n"},
    {"weak-135", 135, false, AtlasCategory::full_basin, kFull, "0 -> X ; k=1\nX -> Y ; k=1\n"},
    {"weak-22.5", 22.5, false, AtlasCategory::cylinder, "cylinder DACR + narrow-basin subspace",
     "Y -> X + 3Y ; k=1\nX + Y -> 0 ; k=1\n"},
    {"weak-157.5", 157.5, false, AtlasCategory::cylinder, "cylinder DACR + wide-basin subspace",
     "Y -> X ; k=1\nX + Y -> 3Y ; k=1\n"},
    {"weak-0", 0, false, AtlasCategory::dim1_diagonal, "neighborhood & almost-cylinder DACR, narrow-basin full-space",
     "Y -> X + 2Y ; k=1\nX + Y -> 0 ; k=1\n"},
    {"weak-180", 180, false, AtlasCategory::dim1_diagonal, "neighborhood & almost-cylinder DACR, wide-basin full-space",
     "Y -> X ; k=1\nX + Y -> 2Y ; k=1\n"},
    {"weak--22.5", -22.5, false, AtlasCategory::null, kNull, "2Y -> X + 3Y ; k=1\nX + 2Y -> 0 ; k=1\n"},
    {"weak--45", -45, false, AtlasCategory::null, kNull, "Y -> X + Y ; k=1\nX + Y -> 0 ; k=1\n"},
    {"weak--67.5", -67.5, false, AtlasCategory::null, kNull, "2Y -> X + Y ; k=1\nX + 2Y -> 0 ; k=1\n"},
    {"weak--90", -90, false, AtlasCategory::null, kNull, "Y -> X ; k=1\nX + Y -> 0 ; k=1\n"},
    {"weak-247.5", 247.5, false, AtlasCategory::null, kNull, "2Y -> X ; k=1\nX + 2Y -> Y ; k=1\n"},
    {"weak-225", 225, false, AtlasCategory::null, kNull, "Y -> X ; k=1\nX + Y -> Y ; k=1\n"},
    {"weak-202.5", 202.5, false, AtlasCategory::null, kNull, "2Y -> X ; k=1\nX + 2Y -> 3Y ; k=1\n"},
}};

template <std::size_t N>
std::vector<AtlasEntry> build(const std::array<Seed, N>& seeds, AtlasSet set) {
  std::vector<AtlasEntry> out;
  for (const Seed& s : seeds) {
    ParsedNetwork parsed = parse_network(s.example);
    auto m = motif_of(parsed.network);
    if (!m) throw std::logic_error(std::string("atlas example is not a motif: ") + s.id);
    out.push_back(AtlasEntry{s.id, set, s.angle, s.center, *m, s.category, s.label, s.example,
                             std::move(parsed.network)});
  }
  return out;
}

}  // namespace

const Atlas& enumerate_atlas() {
  static const Atlas atlas{build(kStaticSeeds, AtlasSet::static_acr), build(kWeakSeeds, AtlasSet::weak)};
  return atlas;
}

bool label_consistent(const AtlasEntry& e, const AcrReport& r) {
  const AcrForm& f = r.form;
  switch (e.category) {
    case AtlasCategory::full_basin:
      return f.weak_dynamic && f.dynamic && r.basin == BasinKind::full_basin;
    case AtlasCategory::cylinder:
      return f.weak_dynamic && f.dynamic && !f.static_acr && r.basin == BasinKind::cylinder &&
             r.has(BasinKind::subspace) && r.width != Width::full && r.width != Width::not_applicable &&
             (e.label.find("narrow") != std::string::npos) == (r.width == Width::narrow);
    case AtlasCategory::dim1_diagonal:
      return f.static_acr && f.dynamic && r.basin == BasinKind::full_space && r.has(BasinKind::neighborhood) &&
             r.has(BasinKind::almost_cylinder) &&
             (e.label.find("narrow") != std::string::npos) == (r.width == Width::narrow);
    case AtlasCategory::null:
      return f.weak_dynamic && !f.dynamic && r.basin == BasinKind::null;
    case AtlasCategory::static_only:
      return f.static_acr && f.strong_static && !f.weak_dynamic && !f.dynamic;
    case AtlasCategory::dynamic_full:
      return f.static_acr && f.dynamic && r.width == Width::full;
    case AtlasCategory::dynamic_wide:
      return f.static_acr && f.dynamic && r.width == Width::wide;
    case AtlasCategory::dynamic_narrow:
      return f.static_acr && f.dynamic && r.width == Width::narrow;
  }
  return false;
}

}  // namespace acrlab
