#pragma once

// SVG drawing of the real part of an arrangement in the affine chart z = 1.

#include <cmath>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mnet/arrangement.hpp"
#include "mnet/multinet.hpp"

namespace mnet {

struct RenderResult {
  std::string svg;
  std::size_t drawn_lines = 0;
  std::size_t nonreal_lines = 0;
  bool line_at_infinity = false;
  std::size_t outside_window = 0;
  std::size_t marked_points = 0;
  std::vector<std::string> warnings;
};

namespace detail {

inline bool real_triple(const Triple& t) {
  return t[0].is_real() && t[1].is_real() && t[2].is_real();
}

// Endpoints of a x + b y + c = 0 inside [-w, w]^2, if it crosses the window.
inline std::optional<std::pair<std::pair<double, double>, std::pair<double, double>>> clip_line(double a, double b,
                                                                                             double c, double w) {
  std::vector<std::pair<double, double>> pts;
  const double eps = 1e-12;
  for (double x : {-w, w})
    if (std::abs(b) > eps) {
      const double y = -(a * x + c) / b;
      if (std::abs(y) <= w + eps) pts.emplace_back(x, y);
    }
  for (double y : {-w, w})
    if (std::abs(a) > eps) {
      const double x = -(b * y + c) / a;
      if (std::abs(x) <= w + eps) pts.emplace_back(x, y);
    }
  double best = -1;
  std::pair<std::pair<double, double>, std::pair<double, double>> seg;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const double dx = pts[i].first - pts[j].first, dy = pts[i].second - pts[j].second;
      if (dx * dx + dy * dy > best) {
        best = dx * dx + dy * dy;
        seg = {pts[i], pts[j]};
      }
    }
  if (best <= eps) return std::nullopt;
  return seg;
}

}  // namespace detail

/// Draws every real line except z = 0 within the window [-w, w]^2, marks real
/// multiple points, labels multiplicities other than 1 and colours lines by
/// class when a multinet is given.
inline RenderResult render_svg(const MultiArrangement& arr, double window = 3.0, const WeakMultinet* mn = nullptr) {
  static constexpr const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  constexpr double size = 600.0;
  RenderResult out;
  const auto& lines = arr.lines();
  const double w = window > 0 ? window : 3.0;
  auto sx = [&](double x) { return (x + w) / (2 * w) * size; };
  auto sy = [&](double y) { return (w - y) / (2 * w) * size; };
  std::vector<std::size_t> cls;
  if (mn) cls = mn->class_of(lines.size());
  const auto& mult = mn ? mn->multiplicity : arr.multiplicities();

  std::ostringstream svg;
  svg.setf(std::ios::fixed);
  svg.precision(2);
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& c = lines[i].coeffs();
    if (!detail::real_triple(c)) {
      ++out.nonreal_lines;
      continue;
    }
    if (c[0].is_zero() && c[1].is_zero()) {
      out.line_at_infinity = true;
      continue;
    }
    const double a = approx(c[0]).real(), b = approx(c[1]).real(), k = approx(c[2]).real();
    const auto seg = detail::clip_line(a, b, k, w);
    if (!seg) {
      ++out.outside_window;
      continue;
    }
    const char* colour = "black";
    if (mn && cls[i] != static_cast<std::size_t>(-1)) colour = palette[cls[i] % 6];
    svg << "<line x1=\"" << sx(seg->first.first) << "\" y1=\"" << sy(seg->first.second) << "\" x2=\""
        << sx(seg->second.first) << "\" y2=\"" << sy(seg->second.second) << "\" stroke=\"" << colour
        << "\" stroke-width=\"2\"><title>" << arr.labels()[i] << "</title></line>\n";
    if (mult[i] != 1)
      svg << "<text x=\"" << sx(seg->first.first * 0.9) << "\" y=\"" << sy(seg->first.second * 0.9)
          << "\" font-size=\"16\" fill=\"" << colour << "\">" << mult[i] << "</text>\n";
    ++out.drawn_lines;
  }
  const auto lat = build_lattice(arr);
  for (std::size_t p : multiple_points(lat)) {
    const auto& t = lat.point(p).coords->coords();
    if (!detail::real_triple(t) || t[2].is_zero()) continue;
    const double x = approx(t[0] / t[2]).real(), y = approx(t[1] / t[2]).real();
    if (std::abs(x) > w || std::abs(y) > w) continue;
    svg << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"5\" fill=\"black\"><title>"
        << lat.point(p).str() << " m=" << lat.point(p).multiplicity() << "</title></circle>\n";
    ++out.marked_points;
  }
  svg << "</svg>\n";
  out.svg = svg.str();
  if (out.nonreal_lines)
    out.warnings.push_back(std::to_string(out.nonreal_lines) + " non-real lines omitted");
  if (out.line_at_infinity) out.warnings.push_back("line at infinity z = 0 omitted");
  if (out.outside_window)
    out.warnings.push_back(std::to_string(out.outside_window) + " lines miss the window");
  return out;
}

}  // namespace mnet
