#pragma once

#include <map>
#include <vector>

#include "tiltwall/chern_lattice.hpp"
#include "tiltwall/tilt_geometry.hpp"

// Computed side of the ledger: compositions of library primitives only.
namespace tiltwall::computed {

using R = Rational;

/// ch on P^3 of i_* E for ch_S(E) = (2, -H, e) and (2, 0, e).
HChern push_minus_h(const R& d, const R& e);
HChern push_zero(const R& d, const R& e);
/// ch_S(E) = (2, x H, z H^2) on a degree-c surface.
HChern push_h_powers(const R& c, const R& x, const R& z);

R rho_q(const HChern& v);
R q_on_axis(const HChern& v, const R& beta);
/// Raw radius^2 and center of W(v, w), whether or not the wall exists.
R radius_sq(const HChern& v, const HChern& w);
R center(const HChern& v, const HChern& w);

/// Rank-two candidates for v above the given radius floor, with the rank-two
/// ceiling and the integral ch2 lattice: ch1 -> set of ch2.
std::map<R, std::vector<R>> rank_two_slice(const HChern& v, const R& floor);

/// Largest e for which the shifted rank -2 quotient G(k) = (v - F)(k) passes
/// its bound, where v is evaluated at e = 0 and ch3(v) depends on e with slope 1.
R e_max_through_quotient(const HChern& v_at_zero, const HChern& sub, long k);

/// Integer k as a Rational, checked.
long to_long(const R& value);

}  // namespace tiltwall::computed
