#include "tiltwall/tilt_geometry.hpp"

#include "tiltwall/errors.hpp"

namespace tiltwall {

Wall::Wall(Kind kind, Rational center, std::optional<Rational> radius_sq, HChern left, HChern right)
    : kind_(kind),
      center_(std::move(center)),
      radius_sq_(std::move(radius_sq)),
      left_(std::move(left)),
      right_(std::move(right)) {}

Wall Wall::from_center_radius(const Rational& center, const Rational& radius_sq) {
  if (radius_sq.sign() <= 0) throw DomainError("semicircle needs positive radius^2");
  auto wall = wall_between(HChern::p3(0, 1, center),
                           HChern::p3(1, 0, (radius_sq - square(center)) / Rational(2)));
  return *wall;
}

const Rational& Wall::radius_sq() const {
  if (!radius_sq_) throw DomainError("vertical wall has no radius");
  return *radius_sq_;
}

bool Wall::same_locus(const Wall& other) const {
  return kind_ == other.kind_ && center_ == other.center_ && radius_sq_ == other.radius_sq_;
}

Rational WallData::center() const { return mu2 / kappa; }

Rational WallData::radius_sq() const {
  const Rational s = center();
  return square(s) - Rational(2) * mu1 / kappa;
}

WallData wall_data(const HChern& v, const HChern& w) {
  if (v.space() != w.space()) throw DomainError("ambient-space mismatch");
  return {v[0] * w[1] - w[0] * v[1], v[0] * w[2] - w[0] * v[2], v[1] * w[2] - w[1] * v[2]};
}

ExtendedRational tilt_slope_sq(const HChern& v, const Rational& beta, const Rational& alpha_sq) {
  if (alpha_sq.sign() < 0) throw DomainError("alpha^2 must be non-negative");
  const HChern t = twist(v.truncated(), beta);
  if (t[1].is_zero()) return ExtendedRational::infinity();
  return (t[2] - alpha_sq / Rational(2) * t[0]) / t[1];
}

ExtendedRational tilt_slope(const HChern& v, const TiltPoint& p, bool allow_closure) {
  const int s = p.alpha.sign();
  if (s < 0 || (s == 0 && !allow_closure)) {
    throw DomainError("tilt slope needs alpha > 0 (alpha = 0 only with closure evaluation)");
  }
  return tilt_slope_sq(v, p.beta, square(p.alpha));
}

std::optional<Wall> wall_between(const HChern& v, const HChern& w) {
  const WallData data = wall_data(v, w);
  // Orient the stored pair canonically so W(v, w) == W(w, v) as values.
  const bool swap = data.kappa.sign() < 0 || (data.kappa.is_zero() && data.mu2.sign() < 0);
  HChern left = (swap ? w : v).truncated();
  HChern right = (swap ? v : w).truncated();
  if (!data.kappa.is_zero()) {
    Rational rsq = data.radius_sq();
    if (rsq.sign() <= 0) return std::nullopt;
    return Wall(Wall::Kind::semicircle, data.center(), std::move(rsq), std::move(left),
                std::move(right));
  }
  if (!data.mu2.is_zero()) {
    return Wall(Wall::Kind::vertical, data.mu1 / data.mu2, std::nullopt, std::move(left),
                std::move(right));
  }
  return std::nullopt;
}

namespace {

void require_ch3(const HChern& v, const char* op) {
  if (v.space().dim != 3) throw DomainError(std::string(op) + " requires P^3");
  if (!v.has_ch3()) throw DomainError(std::string(op) + " needs ch3");
}

}  // namespace

std::optional<Wall> wall_q(const HChern& v) {
  require_ch3(v, "wall_q");
  const HChern w = HChern::p3(v[1], Rational(2) * v[2], Rational(3) * v[3]);
  return wall_between(v, w);
}

Rational q_form_sq(const HChern& v, const Rational& beta, const Rational& alpha_sq) {
  require_ch3(v, "q_form");
  if (alpha_sq.sign() < 0) throw DomainError("q_form needs alpha >= 0");
  const HChern t = twist(v, beta);
  return alpha_sq * delta(v) + Rational(4) * square(t[2]) - Rational(6) * t[1] * t[3];
}

Rational q_form(const HChern& v, const TiltPoint& p) {
  if (p.alpha.sign() < 0) throw DomainError("q_form needs alpha >= 0");
  return q_form_sq(v, p.beta, square(p.alpha));
}

PointPosition point_vs_wall_sq(const Wall& wall, const Rational& beta, const Rational& alpha_sq) {
  if (!wall.is_semicircle()) throw DomainError("point_vs_wall needs a semicircular wall");
  if (alpha_sq.sign() < 0) throw DomainError("alpha^2 must be non-negative");
  const Rational lhs = square(beta - wall.center()) + alpha_sq;
  const auto c = lhs <=> wall.radius_sq();
  if (c < 0) return PointPosition::inside;
  if (c > 0) return PointPosition::outside;
  return PointPosition::on;
}

PointPosition point_vs_wall(const Wall& wall, const TiltPoint& p) {
  if (p.alpha.sign() < 0) throw DomainError("point below the beta axis");
  return point_vs_wall_sq(wall, p.beta, square(p.alpha));
}

WallRelation wall_compare(const Wall& first, const Wall& second) {
  if (!first.is_semicircle() || !second.is_semicircle()) {
    throw DomainError("wall_compare needs semicircular walls");
  }
  const Rational& a = first.radius_sq();
  const Rational& b = second.radius_sq();
  const Rational dsq = square(first.center() - second.center());
  if (dsq.is_zero() && a == b) return WallRelation::equal;

  // Nested: |D| + r_small <= r_big  <=>  r_small <= r_big and
  // 2 r_small r_big <= a + b - D^2, i.e. a + b - D^2 >= 0 and 4ab <= (a + b - D^2)^2.
  const Rational sum = a + b - dsq;
  const bool nested = sum.sign() >= 0 && Rational(4) * a * b <= square(sum);
  if (nested) return a < b ? WallRelation::first_inside : WallRelation::second_inside;

  // Side by side: |D| >= r1 + r2  <=>  D^2 - a - b >= 0 and (D^2 - a - b)^2 >= 4ab.
  const Rational gap = dsq - a - b;
  if (gap.sign() >= 0 && square(gap) >= Rational(4) * a * b) return WallRelation::disjoint;
  return WallRelation::crossing;
}

Rational higher_rank_radius_bound(const HChern& e, const Rational& sub_rank) {
  if (e[0].sign() < 0 || sub_rank <= e[0]) {
    throw DomainError("higher_rank_radius_bound needs rA > e0(E) >= 0");
  }
  return delta(e) / (Rational(4) * sub_rank * (sub_rank - e[0]));
}

const char* to_string(PointPosition p) {
  switch (p) {
    case PointPosition::inside: return "inside";
    case PointPosition::on: return "on";
    case PointPosition::outside: return "outside";
  }
  return "?";
}

const char* to_string(WallRelation r) {
  switch (r) {
    case WallRelation::first_inside: return "first_inside";
    case WallRelation::second_inside: return "second_inside";
    case WallRelation::equal: return "equal";
    case WallRelation::disjoint: return "disjoint";
    case WallRelation::crossing: return "crossing";
  }
  return "?";
}

const char* to_string(Wall::Kind k) {
  return k == Wall::Kind::semicircle ? "semicircle" : "vertical";
}

}  // namespace tiltwall
