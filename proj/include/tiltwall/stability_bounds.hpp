#pragma once

#include <optional>
#include <string>

#include "tiltwall/chern_lattice.hpp"

namespace tiltwall {

/// Which proven inequality decided a verdict.
enum class BoundRule {
  rank_one_plane_curve,   // e <= d(d+1)/2 for (+-1, 0, -+d, e)
  rank_two_c0_d0,         // e <= 0
  rank_two_c0_d1,         // e <= 0
  rank_two_c0_d2,         // e <= 2
  rank_two_c1_d_half,     // e <= 5/6
  rank_two_c1_d_three_halves,  // e <= 17/6
};

const char* to_string(BoundRule rule);
BoundRule parse_bound_rule(std::string_view name);

struct BoundVerdict {
  bool admissible = false;
  BoundRule binding = BoundRule::rank_one_plane_curve;
  /// Largest admissible ch3 under the binding rule.
  Rational bound;
  bool extremal = false;
  std::optional<std::string> extremal_note;

  friend bool operator==(const BoundVerdict&, const BoundVerdict&) = default;
};

/// (1, 0, -d, e) or (-1, 0, d, e) on P^3.
BoundVerdict rank_one_bound(const HChern& v);

/// ch = (2, c, d, e) with (c, d) one of the five proven shapes.
BoundVerdict rank_two_bound(const HChern& v);

/// ch = (-2, c, d, e): decided on the shifted dual, whose ch3 only drops
/// under the zero-dimensional correction.
BoundVerdict rank_minus_two_bound(const HChern& v);

/// Integer k such that tensor_line_bundle(v, k) has e1 = 0 (rank +-1) or
/// e1 in {0, -1} (rank +-2).
long suggest_normalizing_twist(const HChern& v);

enum class SurfaceC1 { minus_h, zero };

SurfaceC1 parse_surface_c1(std::string_view text);
const char* to_string(SurfaceC1 mode);

struct SurfaceBound {
  Rational discriminant_min;  ///< 3d^2 - 4d or 4d^2
  Rational e_max;             ///< 1 - d/2 or -d
};

/// Discriminant floor for slope-stable rank two sheaves on a very general
/// degree-d surface, d >= 5.
SurfaceBound surface_discriminant_bound(int degree, SurfaceC1 mode);

}  // namespace tiltwall
