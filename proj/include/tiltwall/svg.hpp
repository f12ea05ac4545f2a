#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiltwall/tilt_geometry.hpp"

namespace tiltwall {

/// A window of the (beta, alpha) half-plane with walls and marked points.
struct PlotSpec {
  std::pair<Rational, Rational> beta_range{-1, 1};
  Rational alpha_max{1};
  std::vector<Wall> walls;
  std::vector<TiltPoint> marks;
  std::optional<Wall> q_wall;

  friend bool operator==(const PlotSpec&, const PlotSpec&) = default;
};

/// Throws DomainError unless beta_range.first < beta_range.second and alpha_max > 0.
void validate(const PlotSpec& spec);

/// SVG 1.1 on an 800x400 canvas. Byte-identical for equal specs.
std::string render_svg(const PlotSpec& spec);

/// a + b sqrt(q) rounded to 6 decimals, ties to even. q >= 0.
std::string fixed6(const Rational& a, const Rational& b = Rational(), const Rational& q = Rational());

}  // namespace tiltwall
