#include <chrono>
#include <set>

#include <doctest.h>

#include "oracle_cases.hpp"
#include "support.hpp"
#include "tiltwall/errors.hpp"
#include "tiltwall/surface_push.hpp"
#include "tiltwall/wall_finder.hpp"

using namespace tiltwall;
using testing::P3;
using testing::R;

namespace {

HChern pushed_zero(int d, const Rational& e) {
  return push_to_p3(SurfaceContext(d), surface_class(d, SurfaceInput::plain, 2, 0, e));
}

std::set<Rational> rank_two_x(const std::vector<CandidateWall>& walls) {
  std::set<Rational> xs;
  for (const auto& w : walls) {
    if (w.subclass[0] == Rational(2)) xs.insert(w.subclass[1]);
  }
  return xs;
}

std::set<Rational> rank_two_y(const std::vector<CandidateWall>& walls, const Rational& x) {
  std::set<Rational> ys;
  for (const auto& w : walls) {
    if (w.subclass[0] == Rational(2) && w.subclass[1] == x) ys.insert(w.subclass[2]);
  }
  return ys;
}

bool passed_all(const CandidateWall& c) {
  for (const auto& [name, ok] : c.checks) {
    if (!ok) return false;
  }
  return !c.checks.empty();
}

}  // namespace

TEST_CASE("search box grammar") {
  const auto b = SearchBox::parse("r=-4..4,c=-20..20,x2=-60..60");
  CHECK(b.r_lo == -4);
  CHECK(b.c_hi == 20);
  CHECK(b.x2_lo == -60);
  CHECK_FALSE(b.empty());
  CHECK(SearchBox{}.empty());
  CHECK(b.contains(P3("1,2,-3/2")));
  CHECK_FALSE(b.contains(P3("5,0,0")));
  CHECK_THROWS_AS(SearchBox::parse("r=1..2"), ParseError);
  CHECK_THROWS_AS(SearchBox::parse("r=1..2,c=0..1,x2=a..b"), ParseError);
}

TEST_CASE("preconditions") {
  WallConstraints none;
  CHECK_THROWS_AS(enumerate_walls(P3("2,-1,-3/2"), none), DomainError);
  WallConstraints floor;
  floor.rho_sq_min = R("1/2");
  CHECK_THROWS_AS(enumerate_walls(P3("1,0,1"), floor), DomainError);  // Delta < 0
  CHECK_THROWS_AS(enumerate_walls(HChern(Space::surface(5), {10, 0, -5}), floor), DomainError);
  WallConstraints q;
  q.use_q_wall_floor = true;
  CHECK_THROWS_AS(enumerate_walls(P3("0,10,-25"), q), DomainError);
  WallConstraints ceiling;
  ceiling.rho_sq_min = 1;
  ceiling.torsion_rank_two_ceiling = true;
  CHECK_THROWS_AS(enumerate_walls(P3("2,0,-1"), ceiling), DomainError);
  CHECK_THROWS_AS(enumerate_walls_torsion(P3("0,-2,1"), floor), DomainError);
}

TEST_CASE("zero discriminant has no walls") {
  WallConstraints cons;
  cons.rho_sq_min = R("1/4");
  CHECK(enumerate_walls(P3("1,0,0"), cons).empty());
  CHECK(enumerate_walls(P3("2,-2,1"), cons).empty());
}

TEST_CASE("the wall W((2,-1,-3/2), O(-4)[1]) is realized by rank <= 2 subobjects") {
  WallConstraints cons;
  cons.rho_sq_min = R("1/2");
  cons.rank_max = 3;
  const auto walls = enumerate_walls(P3("2,-1,-3/2"), cons);
  std::set<std::string> on_wall;
  for (const auto& w : walls) {
    CHECK(passed_all(w));
    CHECK(w.wall.radius_sq() >= R("1/2"));
    if (w.wall.center() == R("-5/2") && w.wall.radius_sq() == R("9/4")) on_wall.insert(w.subclass.str());
  }
  CHECK(on_wall == std::set<std::string>{"0,1,-5/2", "1,-1,1/2", "1,0,-2", "2,-2,1"});
  // O(-4)[1] itself is not a candidate: its quotient (3,-5,13/2) has
  // ch1^beta = -5 - 3 beta < 0 for beta in (-5/3, -1)
  CHECK(on_wall.count("-1,4,-8") == 0);
  CHECK(wall_between(P3("2,-1,-3/2"), P3("-1,4,-8"))->same_locus(Wall::from_center_radius(R("-5/2"), R("9/4"))));
}

TEST_CASE("torsion classes: concentric walls under the ceiling") {
  const HChern v = P3("0,10,-25,110/3");
  WallConstraints cons;
  cons.use_q_wall_floor = true;
  cons.torsion_rank_two_ceiling = true;
  const auto walls = enumerate_walls_torsion(v, cons);
  CHECK_FALSE(walls.empty());
  for (const auto& w : walls) {
    CHECK(w.wall.center() == R("-5/2"));
    CHECK(w.wall.radius_sq() <= R("25/4"));
    CHECK(w.wall.radius_sq() >= R("13/4"));
  }
  WallConstraints one;
  one.rho_sq_min = 1;
  CHECK(enumerate_walls_torsion(P3("0,1,0,0"), one).empty());
}

TEST_CASE("degree five, e = -4: literal Q-floor leaves only x = 0") {
  const HChern v = pushed_zero(5, -4);
  CHECK(v == P3("0,10,-25,113/3"));
  CHECK(wall_q(v)->radius_sq() == R("77/20"));
  WallConstraints cons;
  cons.use_q_wall_floor = true;
  cons.torsion_rank_two_ceiling = true;
  const auto walls = enumerate_walls(v, cons);
  CHECK(rank_two_x(walls) == std::set<Rational>{0});
}

TEST_CASE("degree five: the radius slice 13/4 <= rho^2 <= 25/4 with integral ch2") {
  WallConstraints cons;
  cons.rho_sq_min = R("13/4");
  cons.torsion_rank_two_ceiling = true;
  cons.ch2_parity = true;
  for (const Rational& e : {Rational(-4), Rational(-5), Rational(0)}) {
    const auto walls = enumerate_walls(pushed_zero(5, e), cons);
    CAPTURE(e);
    CHECK(rank_two_x(walls) == std::set<Rational>{-1, 0, 1});
    CHECK(rank_two_y(walls, -1) == std::set<Rational>{R("-1/2")});
    CHECK(rank_two_y(walls, 1) == std::set<Rational>{R("-11/2")});
  }
  // without the parity constraint the half-integral ch2 values come back
  cons.ch2_parity = false;
  const auto loose = enumerate_walls(pushed_zero(5, -4), cons);
  CHECK(rank_two_y(loose, -1) == std::set<Rational>{R("-1/2"), 0});
  CHECK(rank_two_y(loose, 1) == std::set<Rational>{R("-11/2"), -5});
}

TEST_CASE("rho^2 on the x = +-1 branches") {
  const HChern v = P3("0,10,-25");
  CHECK(wall_between(v, P3("2,-1,-1/2"))->radius_sq() == R("-1/2") + R("15/4"));
  CHECK(wall_between(v, P3("2,1,-11/2"))->radius_sq() == R("-11/2") + R("35/4"));
}

TEST_CASE("output is canonically sorted and thread independent") {
  WallConstraints cons;
  cons.rho_sq_min = R("1/4");
  cons.rank_max = 4;
  const HChern v = P3("3,-2,-7/2");
  const auto one = enumerate_walls(v, cons);
  cons.threads = 4;
  CHECK(enumerate_walls(v, cons) == one);
  for (std::size_t i = 1; i < one.size(); ++i) {
    const auto& a = one[i - 1].wall;
    const auto& b = one[i].wall;
    CHECK(a.radius_sq() >= b.radius_sq());
  }
}

TEST_CASE("Q-floor only removes candidates") {
  const HChern v = P3("0,10,-25,113/3");
  WallConstraints base;
  base.rho_sq_min = R("1/4");
  const auto all = enumerate_walls(v, base);
  base.use_q_wall_floor = true;
  const auto kept = enumerate_walls(v, base);
  CHECK(kept.size() < all.size());
  for (const auto& w : kept) {
    CHECK(w.wall.radius_sq() >= R("77/20"));
    bool present = false;
    for (const auto& a : all) present = present || (a.subclass == w.subclass);
    CHECK(present);
  }
}

TEST_CASE("grouping by wall") {
  WallConstraints cons;
  cons.rho_sq_min = R("1/4");
  cons.torsion_rank_two_ceiling = true;
  const auto walls = enumerate_walls(P3("0,10,-25"), cons);
  const auto groups = group_by_wall(walls);
  std::size_t total = 0;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    total += groups[i].classes.size();
    if (i) CHECK_FALSE(groups[i].wall.same_locus(groups[i - 1].wall));
  }
  CHECK(total == walls.size());
}

TEST_CASE("oracle equivalence on the fixed instance") {
  const auto cases = testing::oracle_cases(1, 1);
  const auto& oc = cases.front();
  const auto fast = restrict_to_box(enumerate_walls(oc.v, oc.cons), oc.box);
  CHECK(fast == brute_force_walls(oc.v, oc.box, oc.cons));
  CHECK(brute_force_walls(oc.v, SearchBox{}, oc.cons).empty());
  CHECK(brute_force_walls(oc.v, SearchBox{40, 50, -5, 5, -5, 5}, oc.cons).empty());
}

TEST_CASE("oracle equivalence on randomized instances") {
  const auto start = std::chrono::steady_clock::now();
  for (const auto& oc : testing::oracle_cases(20, 99)) {
    CAPTURE(oc.v.str());
    CHECK(testing::box_points(oc.box) <= 100000);
    const auto fast = restrict_to_box(enumerate_walls(oc.v, oc.cons), oc.box);
    CHECK(fast == brute_force_walls(oc.v, oc.box, oc.cons));
  }
  CHECK(std::chrono::steady_clock::now() - start < std::chrono::seconds(30));
}

TEST_CASE("rank-one admissibility") {
  // v = (0, 2c, d) with c = 5, d = -25
  const HChern v = P3("0,10,-25");
  const Rational c = 5, d = -25;
  for (long x = -3; x <= 3; ++x) {
    const Rational bound = -square(c) / 2 + c * x - d / 2;
    for (const Rational& y : {bound - 1, bound, bound + R("1/2"), bound + 3}) {
      const HChern w = HChern::p3(1, x, Rational(x * x, 2) - y);
      const auto adm = rank_one_admissibility(v, w);
      CAPTURE(x);
      CAPTURE(y);
      CHECK(adm.y == y);
      CHECK(adm.y_lower_bound == bound);
      CHECK(adm.admissible == (y >= bound));
      CHECK(adm.rho_sq_line_bundle == square(2 * square(c) - 2 * c * x + d) / (4 * square(c)));
      CHECK(adm.rho_sq_sub == (4 * square(c) * x * x - 4 * c * d * x - 8 * square(c) * y + square(d)) /
                                  (4 * square(c)));
      if (adm.relation) {
        if (y == bound) CHECK(*adm.relation == WallRelation::equal);
        if (y > bound) CHECK(*adm.relation == WallRelation::first_inside);
      }
    }
  }
  CHECK_THROWS_AS(rank_one_admissibility(P3("1,0,0"), P3("1,0,0")), DomainError);
  CHECK_THROWS_AS(rank_one_admissibility(v, P3("2,0,0")), DomainError);
}
