// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#include "core/motif.hpp"
#include "core/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace acrlab {

namespace {

constexpr double kCanvas = 800;
constexpr double kWheel = 300;
constexpr double kGlyph = 36;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 5e-3 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string arrow(double x, double y, double dx, double dy) {
  const double len = std::hypot(dx, dy);
  if (len == 0) return {};
  const double ux = dx / len;
  const double uy = dy / len;
  const double ex = x + ux * kGlyph;
  const double ey = y - uy * kGlyph;
  // Arrowhead as two short strokes.
  const double hx1 = ex - 8 * (ux * 0.866 - uy * 0.5);
  const double hy1 = ey + 8 * (uy * 0.866 + ux * 0.5);
  const double hx2 = ex - 8 * (ux * 0.866 + uy * 0.5);
  const double hy2 = ey + 8 * (uy * 0.866 - ux * 0.5);
  return "<path class=\"arrow\" stroke=\"red\" stroke-width=\"2\" fill=\"none\" d=\"M" + fmt(x) + " " + fmt(y) + " L" +
         fmt(ex) + " " + fmt(ey) + " M" + fmt(hx1) + " " + fmt(hy1) + " L" + fmt(ex) + " " + fmt(ey) + " L" +
         fmt(hx2) + " " + fmt(hy2) + "\"/>";
}

}  // namespace

std::string atlas_svg(std::span<const AtlasEntry> entries) {
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n";
  out += "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
  const double c = kCanvas / 2;
  for (const AtlasEntry& e : entries) {
    const double rad = e.angle * std::numbers::pi / 180;
    const double cx = e.center ? c : c + kWheel * std::cos(rad);
    const double cy = e.center ? c : c - kWheel * std::sin(rad);
    out += "<g class=\"motif\" id=\"" + escape(e.id) + "\">\n";
    out += "<title>" + escape(e.label) + " (" + escape(motif_name(e.motif)) + ")</title>\n";
    const double lx = cx - kGlyph / 2;
    const double rx = cx + kGlyph / 2;
    out += "<line class=\"polytope\" stroke=\"green\" stroke-width=\"3\" x1=\"" + fmt(lx) + "\" y1=\"" + fmt(cy) +
           "\" x2=\"" + fmt(rx) + "\" y2=\"" + fmt(cy) + "\"/>\n";
    if (const auto arrows = motif_arrows(e.example)) {
      out += arrow(lx, cy, arrows->left[0], arrows->left[1]) + "\n";
      out += arrow(rx, cy, arrows->right[0], arrows->right[1]) + "\n";
    }
    out += "<text x=\"" + fmt(cx) + "\" y=\"" + fmt(cy + kGlyph + 14) +
           "\" font-size=\"10\" text-anchor=\"middle\">" + escape(e.id) + "</text>\n";
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string basin_map_svg(const BasinMap& map) {
  if (map.species.size() != 2) throw std::invalid_argument("svg basin maps need two species");
  const double cell = 600.0 / static_cast<double>(map.grid);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"680\" height=\"680\" viewBox=\"0 0 680 680\">\n";
  out += "<rect width=\"680\" height=\"680\" fill=\"white\"/>\n";
  for (std::size_t idx = 0; idx < map.cells.size(); ++idx) {
    const std::size_t col = idx % map.grid;
    const std::size_t row = idx / map.grid;
    const double x = 40 + cell * static_cast<double>(col);
    const double y = 640 - cell * static_cast<double>(row + 1);
    const char* color = map.cells[idx].converged ? "#3a9a3a" : "#d9d9d9";
    out += "<rect class=\"cell\" x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(cell) + "\" height=\"" +
           fmt(cell) + "\" fill=\"" + color + "\"/>\n";
  }
  const double span = map.hi - map.lo;
  const double pos = (map.target.value - map.lo) / span * 600;
  if (pos >= 0 && pos <= 600) {
    if (map.target.species == 0) {
      out += "<line class=\"hyperplane\" stroke=\"black\" stroke-dasharray=\"4 3\" x1=\"" + fmt(40 + pos) +
             "\" y1=\"40\" x2=\"" + fmt(40 + pos) + "\" y2=\"640\"/>\n";
    } else {
      out += "<line class=\"hyperplane\" stroke=\"black\" stroke-dasharray=\"4 3\" x1=\"40\" y1=\"" + fmt(640 - pos) +
             "\" x2=\"640\" y2=\"" + fmt(640 - pos) + "\"/>\n";
    }
  }
  out += "<text x=\"340\" y=\"670\" font-size=\"14\" text-anchor=\"middle\">" + escape(map.species[0]) + "</text>\n";
  out += "<text x=\"16\" y=\"340\" font-size=\"14\" text-anchor=\"middle\">" + escape(map.species[1]) + "</text>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace acrlab
