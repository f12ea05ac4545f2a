#pragma once

#include <optional>

#include "tiltwall/chern_lattice.hpp"
#include "tiltwall/rational.hpp"

namespace tiltwall {

/// Point (beta, alpha) of the upper half-plane.
struct TiltPoint {
  Rational beta;
  Rational alpha;

  friend bool operator==(const TiltPoint&, const TiltPoint&) = default;
};

/// Numerical wall W(v, w). Semicircles carry radius squared, never the radius.
///
/// Only wall_between (and from_center_radius, which synthesizes a pair of
/// classes realizing the given data) constructs walls, so center and radius
/// always agree with the stored classes.
class Wall {
 public:
  enum class Kind { semicircle, vertical };

  /// A semicircular wall with the given data, realized by the rank-0 class
  /// (0, 1, s) against (1, 0, (rho^2 - s^2)/2).
  static Wall from_center_radius(const Rational& center, const Rational& radius_sq);

  Kind kind() const { return kind_; }
  bool is_semicircle() const { return kind_ == Kind::semicircle; }
  /// Center on the beta axis, or the line position for vertical walls.
  const Rational& center() const { return center_; }
  const Rational& radius_sq() const;
  const HChern& left_class() const { return left_; }
  const HChern& right_class() const { return right_; }

  /// Same locus (kind, center, radius^2); provenance is ignored.
  bool same_locus(const Wall& other) const;

  friend bool operator==(const Wall&, const Wall&) = default;

 private:
  friend std::optional<Wall> wall_between(const HChern& v, const HChern& w);
  Wall(Kind kind, Rational center, std::optional<Rational> radius_sq, HChern left, HChern right);

  Kind kind_ = Kind::semicircle;
  Rational center_;
  std::optional<Rational> radius_sq_;
  HChern left_;
  HChern right_;
};

/// Raw cross-product data of a pair of classes, before deciding whether a wall
/// exists: kappa = v0 w1 - w0 v1, mu2 = v0 w2 - w0 v2, mu1 = v1 w2 - w1 v2.
struct WallData {
  Rational kappa;
  Rational mu2;
  Rational mu1;

  /// s = mu2 / kappa (kappa != 0).
  Rational center() const;
  /// s^2 - 2 mu1 / kappa, possibly <= 0 (kappa != 0).
  Rational radius_sq() const;
};

WallData wall_data(const HChern& v, const HChern& w);

/// nu_{alpha,beta}(v). alpha must be positive unless allow_closure is set.
ExtendedRational tilt_slope(const HChern& v, const TiltPoint& p, bool allow_closure = false);
/// Same slope at beta with alpha^2 given directly (alpha may be irrational).
ExtendedRational tilt_slope_sq(const HChern& v, const Rational& beta, const Rational& alpha_sq);

std::optional<Wall> wall_between(const HChern& v, const HChern& w);

/// W_Q = W(v, (e1, 2 e2, 3 e3)).
std::optional<Wall> wall_q(const HChern& v);

/// alpha^2 Delta + 4 (ch2^beta)^2 - 6 ch1^beta ch3^beta; alpha >= 0.
Rational q_form(const HChern& v, const TiltPoint& p);
Rational q_form_sq(const HChern& v, const Rational& beta, const Rational& alpha_sq);

enum class PointPosition { inside, on, outside };

PointPosition point_vs_wall(const Wall& wall, const TiltPoint& p);
PointPosition point_vs_wall_sq(const Wall& wall, const Rational& beta, const Rational& alpha_sq);

enum class WallRelation { first_inside, second_inside, equal, disjoint, crossing };

/// Containment of two semicircles, decided by squared comparisons only.
WallRelation wall_compare(const Wall& first, const Wall& second);

/// Delta(E) / (4 rA (rA - e0(E))) with rA = H^n ch0(A) > e0(E) >= 0.
Rational higher_rank_radius_bound(const HChern& e, const Rational& sub_rank);

const char* to_string(PointPosition p);
const char* to_string(WallRelation r);
const char* to_string(Wall::Kind k);

}  // namespace tiltwall
