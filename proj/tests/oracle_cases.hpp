#pragma once

#include <vector>

#include "support.hpp"
#include "tiltwall/tilt_geometry.hpp"
#include "tiltwall/wall_finder.hpp"

namespace testing {

struct OracleCase {
  tiltwall::HChern v;
  tiltwall::WallConstraints cons;
  tiltwall::SearchBox box;
};

inline long box_points(const tiltwall::SearchBox& b) {
  return (b.r_hi - b.r_lo + 1) * (b.c_hi - b.c_lo + 1) * (b.x2_hi - b.x2_lo + 1);
}

/// Randomized (class, constraints, box) triples with at most 1e5 lattice points per box.
inline std::vector<OracleCase> oracle_cases(int count, std::uint64_t seed) {
  using namespace tiltwall;
  Gen gen(seed);
  std::vector<OracleCase> out;
  // the fixed instance from the pushforward at d = 5, e = -4
  {
    OracleCase c{HChern::p3(0, 10, -25, Rational(113, 3)), {}, {-4, 4, -20, 20, -60, 60}};
    c.cons.use_q_wall_floor = true;
    out.push_back(c);
  }
  while (static_cast<int>(out.size()) < count) {
    const long r = gen.integer(0, 3);
    const long c1 = r == 0 ? gen.integer(1, 8) : gen.integer(-6, 6);
    const HChern v = HChern::p3(r, c1, Rational(gen.integer(-40, 20), 2), Rational(gen.integer(-60, 60), 6));
    if (delta(v).sign() <= 0) continue;
    OracleCase oc{v, {}, {}};
    const long pick = gen.integer(0, 3);
    static const Rational floors[] = {Rational(1, 4), Rational(1, 2), Rational(1), Rational(2)};
    oc.cons.rho_sq_min = floors[pick];
    if (gen.integer(0, 4) == 0) oc.cons.rank_max = gen.integer(1, 4);
    oc.cons.strict_interval_positivity = gen.coin();
    oc.cons.ch2_parity = gen.coin();
    if (gen.coin()) {
      const auto wq = wall_q(v);
      if (wq && wq->is_semicircle()) oc.cons.use_q_wall_floor = true;
    }
    if (r == 0 && gen.coin()) oc.cons.torsion_rank_two_ceiling = true;
    const long rw = gen.integer(2, 5);
    const long cw = gen.integer(8, 20);
    const long xw = gen.integer(20, 80);
    oc.box = {-rw, rw, -cw, cw, -xw, xw};
    if (box_points(oc.box) > 100000) continue;
    out.push_back(oc);
  }
  return out;
}

}  // namespace testing
