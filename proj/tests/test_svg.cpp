#include <fstream>
#include <sstream>

#include <doctest.h>

#include "support.hpp"
#include "tiltwall/errors.hpp"
#include "tiltwall/svg.hpp"
#include "tiltwall/wall_finder.hpp"

using namespace tiltwall;
using testing::P3;
using testing::R;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

// Walls of the d = 5, e = -5 pushforward between the Q-wall and the c/2 ceiling.
PlotSpec degree_five_spec() {
  const HChern v = P3("0,10,-25,110/3");
  WallConstraints cons;
  cons.rho_sq_min = R("13/4");
  cons.torsion_rank_two_ceiling = true;
  cons.ch2_parity = true;
  PlotSpec spec;
  for (const auto& g : group_by_wall(enumerate_walls(v, cons))) spec.walls.push_back(g.wall);
  spec.q_wall = wall_q(v);
  spec.marks = {{-1, 0}, {-4, 0}};
  spec.beta_range = {-6, 1};
  spec.alpha_max = 3;
  return spec;
}

}  // namespace

TEST_CASE("fixed-point rendering rounds half to even") {
  CHECK(fixed6(R("1/3")) == "0.333333");
  CHECK(fixed6(R("2/3")) == "0.666667");
  CHECK(fixed6(R("-2/3")) == "-0.666667");
  CHECK(fixed6(R("1/2000000")) == "0.000000");
  CHECK(fixed6(R("3/2000000")) == "0.000002");
  CHECK(fixed6(R("-1/2000000")) == "0.000000");
  CHECK(fixed6(Rational(-5)) == "-5.000000");
  CHECK(fixed6(0, 1, 2) == "1.414214");
  CHECK(fixed6(1, -1, 2) == "-0.414214");
  CHECK(fixed6(0, 1, R("9/4")) == "1.500000");
  CHECK(fixed6(R("123456789/1000"), 0, 0) == "123456.789000");
  CHECK_THROWS_AS(fixed6(0, 1, -1), DomainError);
}

TEST_CASE("single wall spans its diameter") {
  PlotSpec spec;
  spec.beta_range = {-5, 0};
  spec.alpha_max = 3;
  spec.walls = {Wall::from_center_radius(R("-5/2"), R("25/4"))};
  const std::string svg = render_svg(spec);
  // beta = -5 is the left margin, beta = 0 the right one
  CHECK(svg.find("M 40.000000 360.000000 A 360.000000 266.666667 0 0 1 760.000000 360.000000") !=
        std::string::npos);
  CHECK(count(svg, "<path") == 1);
  CHECK(svg.find("width=\"800\" height=\"400\"") != std::string::npos);
}

TEST_CASE("outer arcs come first") {
  PlotSpec spec;
  spec.beta_range = {-6, 1};
  spec.alpha_max = 3;
  spec.walls = {Wall::from_center_radius(R("-5/2"), R("9/4")), Wall::from_center_radius(R("-5/2"), R("25/4"))};
  const std::string svg = render_svg(spec);
  CHECK(svg.find("data-radius-sq=\"25/4\"") < svg.find("data-radius-sq=\"9/4\""));
}

TEST_CASE("Q-wall dashed, marks labelled, verticals as lines") {
  PlotSpec spec;
  spec.walls = {*wall_between(P3("1,0,-1"), P3("2,0,-3"))};
  spec.q_wall = Wall::from_center_radius(0, R("1/4"));
  spec.marks = {{R("1/2"), R("1/3")}};
  const std::string svg = render_svg(spec);
  CHECK(count(svg, "stroke-dasharray") == 1);
  CHECK(svg.find("(1/2, 1/3)") != std::string::npos);
  CHECK(svg.find("<line x1=\"400.000000\"") != std::string::npos);
}

TEST_CASE("invalid windows") {
  PlotSpec spec;
  spec.beta_range = {1, 1};
  CHECK_THROWS_AS(render_svg(spec), DomainError);
  spec.beta_range = {0, 1};
  spec.alpha_max = 0;
  CHECK_THROWS_AS(render_svg(spec), DomainError);
}

TEST_CASE("golden file for the degree five configuration") {
  const std::string svg = render_svg(degree_five_spec());
  std::ifstream in(std::string(TILTWALL_TEST_DATA) + "/degree_five_walls.svg", std::ios::binary);
  REQUIRE(in);
  std::stringstream golden;
  golden << in.rdbuf();
  CHECK(svg == golden.str());
}
