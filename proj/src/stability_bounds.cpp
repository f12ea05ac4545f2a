#include "tiltwall/stability_bounds.hpp"

#include <array>

#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

struct RankTwoShape {
  Rational c;
  Rational d;
  Rational bound;
  BoundRule rule;
  const char* note;  // recorded when the bound is attained
};

const std::array<RankTwoShape, 5>& rank_two_table() {
  static const std::array<RankTwoShape, 5> table = {{
      {0, 0, 0, BoundRule::rank_two_c0_d0, "forces the trivial class: E is O^2"},
      {0, -1, 0, BoundRule::rank_two_c0_d1, nullptr},
      {0, -2, 2, BoundRule::rank_two_c0_d2, nullptr},
      {-1, Rational(-1, 2), Rational(5, 6), BoundRule::rank_two_c1_d_half,
       "destabilized by 0 -> O(-1)^3 -> E -> O(-2)[1] -> 0"},
      {-1, Rational(-3, 2), Rational(17, 6), BoundRule::rank_two_c1_d_three_halves, nullptr},
  }};
  return table;
}

void require_full_p3(const HChern& v, const char* op) {
  if (!v.space().is_p3() || !v.has_ch3()) {
    throw DomainError(std::string(op) + " needs a full P^3 class (e0,e1,e2,e3)");
  }
}

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

const char* to_string(BoundRule rule) {
  switch (rule) {
    case BoundRule::rank_one_plane_curve: return "rank_one_plane_curve";
    case BoundRule::rank_two_c0_d0: return "rank_two_c0_d0";
    case BoundRule::rank_two_c0_d1: return "rank_two_c0_d1";
    case BoundRule::rank_two_c0_d2: return "rank_two_c0_d2";
    case BoundRule::rank_two_c1_d_half: return "rank_two_c1_d_half";
    case BoundRule::rank_two_c1_d_three_halves: return "rank_two_c1_d_three_halves";
  }
  return "?";
}

BoundRule parse_bound_rule(std::string_view name) {
  for (auto rule : {BoundRule::rank_one_plane_curve, BoundRule::rank_two_c0_d0,
                    BoundRule::rank_two_c0_d1, BoundRule::rank_two_c0_d2,
                    BoundRule::rank_two_c1_d_half, BoundRule::rank_two_c1_d_three_halves}) {
    if (name == to_string(rule)) return rule;
  }
  throw ParseError("unknown bound rule '" + std::string(name) + "'");
}

BoundVerdict rank_one_bound(const HChern& v) {
  require_full_p3(v, "rank_one_bound");
  if (!v[1].is_zero() || (v[0] != Rational(1) && v[0] != Rational(-1))) {
    throw DomainError("rank_one_bound needs (1, 0, -d, e) or (-1, 0, d, e); twist first");
  }
  const Rational d = v[0] == Rational(1) ? -v[2] : v[2];
  const Rational bound = d * (d + Rational(1)) / Rational(2);
  BoundVerdict out;
  out.binding = BoundRule::rank_one_plane_curve;
  out.bound = bound;
  out.admissible = v[3] <= bound;
  out.extremal = v[3] == bound;
  return out;
}

BoundVerdict rank_two_bound(const HChern& v) {
  require_full_p3(v, "rank_two_bound");
  if (v[0] != Rational(2)) throw DomainError("rank_two_bound needs e0 = 2");
  for (const auto& shape : rank_two_table()) {
    if (v[1] != shape.c || v[2] != shape.d) continue;
    BoundVerdict out;
    out.binding = shape.rule;
    out.bound = shape.bound;
    out.admissible = v[3] <= shape.bound;
    out.extremal = v[3] == shape.bound;
    if (out.extremal && shape.note) out.extremal_note = shape.note;
    return out;
  }
  throw DomainError("no proven rank-two bound for (c, d) = (" + v[1].str() + ", " + v[2].str() +
                    "); supported: (0,0), (0,-1), (0,-2), (-1,-1/2), (-1,-3/2)");
}

BoundVerdict rank_minus_two_bound(const HChern& v) {
  require_full_p3(v, "rank_minus_two_bound");
  if (v[0] != Rational(-2)) throw DomainError("rank_minus_two_bound needs e0 = -2");
  BoundVerdict out = rank_two_bound(shifted_dual(v));
  // The extremal classifications are statements about the rank two object itself.
  out.extremal_note.reset();
  return out;
}

long suggest_normalizing_twist(const HChern& v) {
  if (!v[0].is_integer() || !v[1].is_integer()) throw DomainError("class is not integral in ch0, ch1");
  const mpz_class r = v[0].numerator();
  const mpz_class c = v[1].numerator();
  // tensor by O(k) sends c to c + k r; pick the k with c + k r in (-|r|, 0].
  if (r == 1 || r == -1) {
    const mpz_class k = -c * r;
    return k.get_si();
  }
  if (r == 2 || r == -2) {
    // c + k r in {0, -1}  <=>  k = floor(-c / r) for r = 2, k = ceil(c / 2) for r = -2.
    const mpz_class k = r > 0 ? floor_div(-c, r) : floor_div(c + 1, mpz_class(2));
    return k.get_si();
  }
  throw DomainError("normalizing twists are defined for rank +-1 and +-2 only");
}

SurfaceC1 parse_surface_c1(std::string_view text) {
  if (text == "minus_H" || text == "minus_h") return SurfaceC1::minus_h;
  if (text == "zero") return SurfaceC1::zero;
  throw ParseError("unknown c1 mode '" + std::string(text) + "' (minus_H or zero)");
}

const char* to_string(SurfaceC1 mode) { return mode == SurfaceC1::minus_h ? "minus_H" : "zero"; }

SurfaceBound surface_discriminant_bound(int degree, SurfaceC1 mode) {
  if (degree < 5) throw DomainError("surface bound needs degree d >= 5");
  const Rational d(degree);
  if (mode == SurfaceC1::minus_h) {
    return {Rational(3) * square(d) - Rational(4) * d, Rational(1) - d / Rational(2)};
  }
  return {Rational(4) * square(d), -d};
}

}  // namespace tiltwall
