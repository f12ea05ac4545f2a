#include "ledger_compute.hpp"

#include <algorithm>

#include "tiltwall/errors.hpp"
#include "tiltwall/stability_bounds.hpp"
#include "tiltwall/surface_push.hpp"
#include "tiltwall/wall_finder.hpp"

namespace tiltwall::computed {

long to_long(const R& value) {
  if (!value.is_integer() || !value.numerator().fits_slong_p()) {
    throw DomainError("expected an integer, got " + value.str());
  }
  return value.numerator().get_si();
}

namespace {

HChern push(const R& degree, SurfaceInput mode, const R& rank, const R& c1, const R& c2) {
  const int d = static_cast<int>(to_long(degree));
  return push_to_p3(SurfaceContext(d), surface_class(d, mode, rank, c1, c2));
}

}  // namespace

HChern push_minus_h(const R& d, const R& e) { return push(d, SurfaceInput::plain, 2, -1, e); }
HChern push_zero(const R& d, const R& e) { return push(d, SurfaceInput::plain, 2, 0, e); }
HChern push_h_powers(const R& c, const R& x, const R& z) {
  return push(c, SurfaceInput::h_powers, 2, x, z);
}

R rho_q(const HChern& v) {
  const auto wall = wall_q(v);
  if (!wall) throw DomainError("no Q-wall for " + v.str());
  return wall->radius_sq();
}

R q_on_axis(const HChern& v, const R& beta) { return q_form(v, TiltPoint{beta, 0}); }

R radius_sq(const HChern& v, const HChern& w) { return wall_data(v, w).radius_sq(); }
R center(const HChern& v, const HChern& w) { return wall_data(v, w).center(); }

std::map<R, std::vector<R>> rank_two_slice(const HChern& v, const R& floor) {
  WallConstraints cons;
  cons.rho_sq_min = floor;
  cons.torsion_rank_two_ceiling = true;
  cons.ch2_parity = true;
  std::map<R, std::vector<R>> out;
  for (const auto& cand : enumerate_walls_torsion(v, cons)) {
    if (cand.subclass[0] != R(2)) continue;
    out[cand.subclass[1]].push_back(cand.subclass[2]);
  }
  for (auto& [x, ys] : out) {
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
  }
  return out;
}

R e_max_through_quotient(const HChern& v_at_zero, const HChern& sub, long k) {
  const HChern g = tensor_line_bundle(v_at_zero - sub, k);
  return rank_minus_two_bound(g).bound - g[3];
}

}  // namespace tiltwall::computed
