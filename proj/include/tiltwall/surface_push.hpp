#pragma once

#include <array>

#include "tiltwall/chern_lattice.hpp"
#include "tiltwall/tilt_geometry.hpp"

namespace tiltwall {

/// Todd data for a degree-d hypersurface S in P^3.
class SurfaceContext {
 public:
  explicit SurfaceContext(int degree);

  /// "d=<int>" as accepted by --surface.
  static SurfaceContext parse(std::string_view flag);

  int degree() const { return degree_; }
  Space space() const { return Space::surface(degree_); }

  /// (1, 2 - d/2, d^3/6 - d^2 + 11d/6); the middle entry is the coefficient of H.
  const std::array<Rational, 3>& todd_s() const { return todd_s_; }
  static const std::array<Rational, 4>& todd_p3();
  /// Power-series inverse of todd_p3, truncated at degree 3.
  static const std::array<Rational, 4>& todd_p3_inverse();

 private:
  int degree_;
  std::array<Rational, 3> todd_s_;
};

/// ch(i_* E) on P^3 from ch_S(E) in surface H-coordinates, by GRR.
HChern push_to_p3(const SurfaceContext& ctx, const HChern& surface_class);

/// e1^2 - 2 e0 e2 on S.
Rational delta_surface(const SurfaceContext& ctx, const HChern& surface_class);

/// chi(E) on S, integral of ch_S td_S.
Rational euler_char_surface(const SurfaceContext& ctx, const HChern& surface_class);

struct BogomolovCheck {
  bool holds;
  TiltPoint witness;
  Rational q_value;
  HChern pushed;
};

/// Pushes ch_S = (2, xH, zH^2), evaluates Q at (beta, alpha) = (x/2 - c/2, c/2).
BogomolovCheck bogomolov_hypersurface_check(const SurfaceContext& ctx, long x, const Rational& z);

}  // namespace tiltwall
