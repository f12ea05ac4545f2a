#include "ledger_closed_forms.hpp"

#include "tiltwall/errors.hpp"

namespace tiltwall::closed_form {

namespace {

R q(long num, long den = 1) { return R(num, den); }

}  // namespace

std::vector<R> push_minus_h(const R& d, const R& e) {
  return {q(0), q(2) * d, -d * d - d, d * d * d / q(3) + d * d / q(2) + e};
}

std::vector<R> push_zero(const R& d, const R& e) {
  return {q(0), q(2) * d, -d * d, d * d * d / q(3) + e};
}

std::vector<R> push_h_powers(const R& c, const R& x, const R& z) {
  return {q(0), q(2) * c, -c * c + c * x, c * c * c / q(3) - c * c * x / q(2) + c * z};
}

R rho_q_minus_h(const R& d, const R& e) { return (d * d * d - q(3) * d + q(12) * e) / (q(4) * d); }
R rho_q_minus_h_at_boundary(const R& d) { return (d * d * d - q(9) * d + q(12)) / (q(4) * d); }
R rank_three_radius_bound(const R& d) { return d * d / q(9); }
R rho_q_zero(const R& d, const R& e) { return (d * d * d + q(12) * e) / (q(4) * d); }
R rho_q_zero_at_boundary(const R& d) { return d * d / q(4) - q(3); }
R rho_q_zero_window(const R& d) { return (d * d * d - q(12) * d + q(12)) / (q(4) * d); }

R q_minus_h(const R& d, const R& e) { return q(-2) * d * d * d + q(4) * d * d - q(12) * d * e; }
R q_minus_h_at_boundary(const R& d) { return q(-2) * d * d * d + q(10) * d * d - q(12) * d; }
R q_zero(const R& d, const R& e) { return q(-4) * d * d * d + q(4) * d * d - q(12) * d * e; }
R q_zero_at_boundary(const R& d) { return q(-4) * d * d * d + q(16) * d * d; }
R q_zero_half(const R& d, const R& e) { return q(-2) * d * d * d + d * d - q(12) * d * e; }
R q_zero_half_at_boundary(const R& d) { return q(-2) * d * d * d + q(13) * d * d - q(12) * d; }

R rho_line_bundle(const R& c, const R& x, const R& d) {
  const R t = q(2) * c * c - q(2) * c * x + d;
  return t * t / (q(4) * c * c);
}

R rho_rank_one(const R& c, const R& x, const R& y, const R& d) {
  return (q(4) * c * c * x * x - q(4) * c * d * x - q(8) * c * c * y + d * d) / (q(4) * c * c);
}

R y_lower_bound(const R& c, const R& x, const R& d) { return -c * c / q(2) + c * x - d / q(2); }

R center_torsion_sub(const R& c, const R& y) { return y / c; }
R center_twist_down(const R& c, const R& d) { return -c / q(2) - d / c; }
R center_twist_up(const R& c, const R& d) { return c / q(2) + d / c; }

R q_degree_five(const R& e) { return q(-60) * e - q(400); }

R rho_degree_five(const R& x, const R& y) {
  if (x == q(-1)) return y + q(15, 4);
  if (x == q(1)) return y + q(35, 4);
  throw DomainError("closed form known for x = -1 and x = 1 only");
}

int bogomolov_sign(const R& x, const R& z) { return (x * x - q(4) * z).sign(); }

R surface_delta_minus_h(const R& d) { return q(3) * d * d - q(4) * d; }
R surface_rank_four_bound(const R& d) { return q(3, 32) - q(1) / (q(8) * d); }
R surface_rho_line(const R& d) { return q(1, 4) - q(1) / d + q(1) / (d * d); }

R rho_rank_two_minus_h(const R& d, const R& y) { return d * d / q(4) + y - q(1, 4); }

std::vector<R> quotient_twist_minus_h(const R& d, const R& e, const R& y, const R& z) {
  if (y == q(-1, 2)) return {q(-2), q(-1), q(1, 2), d / q(2) + e - z + q(2, 3)};
  if (y == q(-3, 2)) return {q(-2), q(-1), q(3, 2), q(3) * d / q(2) + e - z + q(5, 3)};
  throw DomainError("closed form known for y = -1/2 and y = -3/2 only");
}

R e_max_minus_h(const R& d, const R& y, const R& z) {
  if (y == q(-1, 2)) return q(1, 6) - d / q(2) + z;
  if (y == q(-3, 2)) return q(7, 6) - q(3) * d / q(2) + z;
  throw DomainError("closed form known for y = -1/2 and y = -3/2 only");
}

R rho_rank_two_zero(const R& d, const R& y) { return d * d / q(4) + y; }

std::vector<R> quotient_twist_zero(const R& d, const R& e, const R& y, const R& z) {
  if (y == q(-1)) return {q(-2), q(0), q(1), d + e - z};
  if (y == q(-2)) return {q(-2), q(0), q(2), q(2) * d + e - z};
  throw DomainError("closed form known for y = -1 and y = -2 only");
}

R e_max_zero(const R& d, const R& y, const R& z) {
  if (y == q(-1)) return z - d;
  if (y == q(-2)) return q(2) - q(2) * d + z;
  throw DomainError("closed form known for y = -1 and y = -2 only");
}

R rank_two_table(const R& c, const R& d) {
  if (c == q(0) && d == q(0)) return q(0);
  if (c == q(0) && d == q(-1)) return q(0);
  if (c == q(0) && d == q(-2)) return q(2);
  if (c == q(-1) && d == q(-1, 2)) return q(5, 6);
  if (c == q(-1) && d == q(-3, 2)) return q(17, 6);
  throw DomainError("no tabulated rank two bound");
}

}  // namespace tiltwall::closed_form
