#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tiltwall/chern_lattice.hpp"
#include "tiltwall/tilt_geometry.hpp"

namespace tiltwall {

/// Hypotheses that cut down the candidate destabilizing classes of a class v.
struct WallConstraints {
  /// Walls must have radius^2 >= rho_sq_min.
  Rational rho_sq_min;
  /// |ch0| of both the subobject and the quotient is at most rank_max.
  std::optional<long> rank_max;
  /// Raise the radius floor to rho_Q^2(v) (v needs ch3).
  bool use_q_wall_floor = false;
  /// ch1^beta of sub and quotient strictly positive at the interval endpoints too.
  bool strict_interval_positivity = false;
  /// For v = (0, 2c, d): rank-one pieces must have walls inside W(v, O(ch1(F) - c)).
  bool rank0_line_bundle_filter = false;
  /// For v = (0, 2c, d): radius^2 <= c^2 / 4 (walls of rank-two pushforwards).
  bool torsion_rank_two_ceiling = false;
  /// Restrict ch2 to the integral lattice of P^3: 2 ch2 = ch1^2 mod 2.
  bool ch2_parity = false;
  /// Worker threads for the rank partition; output is identical for any value.
  unsigned threads = 1;
};

struct CandidateWall {
  Wall wall;
  /// (r, c, x): the candidate subobject class; the quotient is v - subclass.
  HChern subclass;
  /// Every enabled rule, with its outcome (always true for emitted candidates).
  std::vector<std::pair<std::string, bool>> checks;

  friend bool operator==(const CandidateWall&, const CandidateWall&) = default;
};

/// One numerical wall with all classes that generate it.
struct WallGroup {
  Wall wall;
  std::vector<HChern> classes;
};

/// Inclusive ranges for brute-force search; x is enumerated through 2x.
struct SearchBox {
  long r_lo = 0, r_hi = -1;
  long c_lo = 0, c_hi = -1;
  long x2_lo = 0, x2_hi = -1;

  bool empty() const { return r_lo > r_hi || c_lo > c_hi || x2_lo > x2_hi; }
  bool contains(const HChern& w) const;
  /// "r=a..b,c=a..b,x2=a..b".
  static SearchBox parse(std::string_view text);
};

/// All lattice classes w with a semicircular wall W(v, w) that survives the
/// constraint pipeline, sorted by (radius^2 desc, center, r, c, x).
std::vector<CandidateWall> enumerate_walls(const HChern& v, const WallConstraints& cons);

/// Rank-zero specialization: v = (0, e1, e2), e1 > 0. Every wall is centered at
/// e2 / e1; the c^2/4 ceiling applies when torsion_rank_two_ceiling is set.
std::vector<CandidateWall> enumerate_walls_torsion(const HChern& v, const WallConstraints& cons);

/// Same checks as enumerate_walls, by exhaustive search over a finite box.
std::vector<CandidateWall> brute_force_walls(const HChern& v, const SearchBox& box,
                                             const WallConstraints& cons);

std::vector<CandidateWall> restrict_to_box(const std::vector<CandidateWall>& walls,
                                           const SearchBox& box);

/// Groups candidates by (center, radius^2), keeping the canonical order.
std::vector<WallGroup> group_by_wall(const std::vector<CandidateWall>& walls);

struct RankOneAdmissibility {
  bool admissible = false;
  /// F written as (1, 0, -y, z) ch(O(x)).
  Rational x;
  Rational y;
  /// y >= -c^2/2 + c x - d/2 characterizes admissibility.
  Rational y_lower_bound;
  /// radius^2 of W(v, F) and of W(v, O(x - c)); may be <= 0 (no wall).
  Rational rho_sq_sub;
  Rational rho_sq_line_bundle;
  std::optional<Wall> sub_wall;
  std::optional<Wall> line_bundle_wall;
  std::optional<WallRelation> relation;
};

/// Compares W(v, F) for a rank-one F against W(v, O(ch1(F) - c)), v = (0, 2c, d).
RankOneAdmissibility rank_one_admissibility(const HChern& v, const HChern& w);

}  // namespace tiltwall
