#include <doctest.h>

#include "support.hpp"
#include "tiltwall/errors.hpp"
#include "tiltwall/stability_bounds.hpp"
#include "tiltwall/surface_push.hpp"

using namespace tiltwall;
using testing::P3;
using testing::R;

namespace {

// Largest e in (1/6)Z with chi(2, c, d, e) <= 0, by scanning.
Rational chi_bound_oracle(const Rational& c, const Rational& d) {
  std::optional<Rational> best;
  for (long k = -120; k <= 120; ++k) {
    const HChern v = HChern::p3(2, c, d, Rational(k, 6));
    if (lattice_check(v) && euler_char_p3(v).sign() <= 0) best = Rational(k, 6);
  }
  REQUIRE(best);
  return *best;
}

}  // namespace

TEST_CASE("rank one") {
  const auto a = rank_one_bound(P3("1,0,-3,6"));
  CHECK(a.admissible);
  CHECK(a.extremal);
  CHECK(a.bound == Rational(6));
  const auto b = rank_one_bound(P3("1,0,0,0"));
  CHECK(b.admissible);
  CHECK(b.extremal);
  const auto c = rank_one_bound(P3("-1,0,2,4"));
  CHECK_FALSE(c.admissible);
  CHECK(c.bound == Rational(3));
  CHECK_THROWS_AS(rank_one_bound(P3("1,1,0,0")), DomainError);
  CHECK_THROWS_AS(rank_one_bound(P3("1,0,0")), DomainError);
}

TEST_CASE("rank two table") {
  const std::vector<std::pair<const char*, const char*>> shapes{
      {"0,0", "0"}, {"0,-1", "0"}, {"0,-2", "2"}, {"-1,-1/2", "5/6"}, {"-1,-3/2", "17/6"}};
  for (const auto& [cd, bound] : shapes) {
    const HChern v = P3((std::string("2,") + cd + ",0").c_str());
    CAPTURE(cd);
    CHECK(rank_two_bound(v).bound == R(bound));
  }
  const auto ext = rank_two_bound(P3("2,0,-2,2"));
  CHECK(ext.admissible);
  CHECK(ext.extremal);
  CHECK(ext.binding == BoundRule::rank_two_c0_d2);
  const auto noted = rank_two_bound(P3("2,-1,-1/2,5/6"));
  CHECK(noted.extremal);
  CHECK(noted.extremal_note.has_value());
  CHECK_FALSE(rank_two_bound(P3("2,0,0,1")).admissible);
  CHECK_THROWS_AS(rank_two_bound(P3("2,-1,1/2,0")), DomainError);
  CHECK_THROWS_AS(rank_two_bound(P3("3,0,0,0")), DomainError);
}

TEST_CASE("rank minus two") {
  CHECK(rank_minus_two_bound(P3("-2,0,1,0")).extremal);
  const auto five = rank_minus_two_bound(P3("-2,-1,3/2,17/6"));
  CHECK(five.admissible);
  CHECK(five.extremal);
  const auto three = rank_minus_two_bound(P3("-2,0,2,3"));
  CHECK_FALSE(three.admissible);
  CHECK(three.bound == Rational(2));
  for (const char* v : {"-2,0,0,-1", "-2,0,1,0", "-2,0,2,2", "-2,-1,1/2,1/3", "-2,-1,3/2,2"}) {
    const auto a = rank_minus_two_bound(P3(v));
    const auto b = rank_two_bound(shifted_dual(P3(v)));
    CHECK(a.admissible == b.admissible);
    CHECK(a.bound == b.bound);
    CHECK(a.binding == b.binding);
  }
}

TEST_CASE("bounds match chi <= 0") {
  for (const char* cd : {"0,-1", "0,-2", "-1,-1/2", "-1,-3/2"}) {
    const HChern v = P3((std::string("2,") + cd + ",0").c_str());
    CAPTURE(cd);
    CHECK(rank_two_bound(v).bound == chi_bound_oracle(v[1], v[2]));
  }
  // the (0, 0) shape is the exception: chi(O^2) = 2 > 0
  CHECK(euler_char_p3(P3("2,0,0,0")) == Rational(2));
}

TEST_CASE("normalizing twist") {
  CHECK(suggest_normalizing_twist(P3("1,3,0")) == -3);
  CHECK(suggest_normalizing_twist(P3("-1,3,0")) == 3);
  for (long c = -7; c <= 7; ++c) {
    for (long r : {2L, -2L}) {
      const HChern v = HChern::p3(r, c, 0, 0);
      const HChern n = tensor_line_bundle(v, suggest_normalizing_twist(v));
      CAPTURE(c);
      CHECK((n[1] == Rational(0) || n[1] == Rational(-1)));
    }
  }
  CHECK_THROWS_AS(suggest_normalizing_twist(P3("3,1,0")), DomainError);
}

TEST_CASE("surface discriminant bound") {
  const auto a = surface_discriminant_bound(5, SurfaceC1::minus_h);
  CHECK(a.discriminant_min == Rational(55));
  CHECK(a.e_max == R("-3/2"));
  const auto b = surface_discriminant_bound(5, SurfaceC1::zero);
  CHECK(b.discriminant_min == Rational(100));
  CHECK(b.e_max == Rational(-5));
  const auto c = surface_discriminant_bound(6, SurfaceC1::minus_h);
  CHECK(c.discriminant_min == Rational(84));
  CHECK(c.e_max == Rational(-2));
  CHECK_THROWS_AS(surface_discriminant_bound(4, SurfaceC1::zero), DomainError);
  CHECK(parse_surface_c1("minus_H") == SurfaceC1::minus_h);
  CHECK_THROWS_AS(parse_surface_c1("one"), ParseError);
  for (int d = 5; d <= 50; ++d) {
    const SurfaceContext ctx(d);
    for (auto mode : {SurfaceC1::minus_h, SurfaceC1::zero}) {
      const auto bound = surface_discriminant_bound(d, mode);
      const Rational c1 = mode == SurfaceC1::minus_h ? Rational(-1) : Rational(0);
      CHECK(delta_surface(ctx, surface_class(d, SurfaceInput::plain, 2, c1, bound.e_max)) ==
            bound.discriminant_min);
    }
  }
}

TEST_CASE("bound rule names round-trip") {
  for (auto rule : {BoundRule::rank_one_plane_curve, BoundRule::rank_two_c0_d0, BoundRule::rank_two_c0_d1,
                    BoundRule::rank_two_c0_d2, BoundRule::rank_two_c1_d_half,
                    BoundRule::rank_two_c1_d_three_halves}) {
    CHECK(parse_bound_rule(to_string(rule)) == rule);
  }
  CHECK_THROWS_AS(parse_bound_rule("nope"), ParseError);
}
