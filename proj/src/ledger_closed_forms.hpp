#pragma once

#include <vector>

#include "tiltwall/rational.hpp"

// Expected values of the ledger, typed in from their closed forms. Nothing in
// here may be used to produce a computed value.
namespace tiltwall::closed_form {

using R = Rational;

std::vector<R> push_minus_h(const R& d, const R& e);
std::vector<R> push_zero(const R& d, const R& e);
std::vector<R> push_h_powers(const R& c, const R& x, const R& z);

R rho_q_minus_h(const R& d, const R& e);
R rho_q_minus_h_at_boundary(const R& d);
R rank_three_radius_bound(const R& d);
R rho_q_zero(const R& d, const R& e);
R rho_q_zero_at_boundary(const R& d);
R rho_q_zero_window(const R& d);

R q_minus_h(const R& d, const R& e);
R q_minus_h_at_boundary(const R& d);
R q_zero(const R& d, const R& e);
R q_zero_at_boundary(const R& d);
R q_zero_half(const R& d, const R& e);
R q_zero_half_at_boundary(const R& d);

R rho_line_bundle(const R& c, const R& x, const R& d);
R rho_rank_one(const R& c, const R& x, const R& y, const R& d);
R y_lower_bound(const R& c, const R& x, const R& d);

R center_torsion_sub(const R& c, const R& y);
R center_twist_down(const R& c, const R& d);
R center_twist_up(const R& c, const R& d);

R q_degree_five(const R& e);
R rho_degree_five(const R& x, const R& y);

int bogomolov_sign(const R& x, const R& z);

R surface_delta_minus_h(const R& d);
R surface_rank_four_bound(const R& d);
R surface_rho_line(const R& d);

R rho_rank_two_minus_h(const R& d, const R& y);
std::vector<R> quotient_twist_minus_h(const R& d, const R& e, const R& y, const R& z);
R e_max_minus_h(const R& d, const R& y, const R& z);

R rho_rank_two_zero(const R& d, const R& y);
std::vector<R> quotient_twist_zero(const R& d, const R& e, const R& y, const R& z);
R e_max_zero(const R& d, const R& y, const R& z);

/// Bound on ch3 for the rank two shapes (c, d); the (0, 0) shape included.
R rank_two_table(const R& c, const R& d);

}  // namespace tiltwall::closed_form
