#include "tiltwall/surface_push.hpp"

#include <charconv>

#include "tiltwall/errors.hpp"

namespace tiltwall {

SurfaceContext::SurfaceContext(int degree) : degree_(degree) {
  if (degree < 1) throw DomainError("surface degree must be >= 1");
  const Rational d(degree);
  todd_s_ = {Rational(1), Rational(2) - d / Rational(2),
             pow(d, 3) / Rational(6) - square(d) + Rational(11) * d / Rational(6)};
}

SurfaceContext SurfaceContext::parse(std::string_view flag) {
  constexpr std::string_view prefix = "d=";
  if (flag.substr(0, prefix.size()) != prefix) {
    throw ParseError("expected --surface d=<int>, got '" + std::string(flag) + "'");
  }
  const auto digits = flag.substr(prefix.size());
  int d = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() || d < 1) {
    throw ParseError("bad surface degree in '" + std::string(flag) + "'");
  }
  return SurfaceContext(d);
}

const std::array<Rational, 4>& SurfaceContext::todd_p3() {
  static const std::array<Rational, 4> td = {Rational(1), Rational(2), Rational(11, 6), Rational(1)};
  return td;
}

const std::array<Rational, 4>& SurfaceContext::todd_p3_inverse() {
  static const std::array<Rational, 4> inv = [] {
    const auto& td = todd_p3();
    std::array<Rational, 4> out{Rational(1), Rational(), Rational(), Rational()};
    for (std::size_t k = 1; k < 4; ++k) {
      Rational acc;
      for (std::size_t i = 1; i <= k; ++i) acc += td[i] * out[k - i];
      out[k] = -acc;
    }
    return out;
  }();
  return inv;
}

namespace {

void require_surface(const SurfaceContext& ctx, const HChern& v) {
  if (v.space() != ctx.space()) {
    throw DomainError("class does not live on the surface of degree " + std::to_string(ctx.degree()));
  }
}

// ch_S td_S in surface H-coordinates: (H^2 x0, H x1, x2) with H^2 = d.
std::array<Rational, 3> times_todd_s(const SurfaceContext& ctx, const HChern& v) {
  const auto& td = ctx.todd_s();
  const Rational d(ctx.degree());
  const Rational rank = v[0] / d;
  // (r + a H + e pt)(1 + t1 H + t2 pt) = r + (a + r t1) H + (e + a t1 d + r t2) pt.
  return {v[0], v[1] + v[0] * td[1], v[2] + td[1] * v[1] + rank * td[2]};
}

}  // namespace

HChern push_to_p3(const SurfaceContext& ctx, const HChern& surface_class) {
  require_surface(ctx, surface_class);
  if (!lattice_check(surface_class, LatticeOptions{true, false})) {
    throw DomainError("surface class " + surface_class.str() + " is not a lattice point");
  }
  const auto x = times_todd_s(ctx, surface_class);
  // i_*(1_S) = d H, i_*(H_S) = d H^2, i_*(pt) = H^3; in P^3 H-coordinates the
  // pushed class is (0, H^2 x0, H x1, x2) -- the degree d is already folded in.
  const std::array<Rational, 4> pushed = {Rational(), x[0], x[1], x[2]};
  const auto& inv = SurfaceContext::todd_p3_inverse();
  std::vector<Rational> ch(4);
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t i = 0; i <= k; ++i) ch[k] += pushed[i] * inv[k - i];
  }
  return HChern(Space::p3(), std::move(ch));
}

Rational delta_surface(const SurfaceContext& ctx, const HChern& surface_class) {
  require_surface(ctx, surface_class);
  return delta(surface_class);
}

Rational euler_char_surface(const SurfaceContext& ctx, const HChern& surface_class) {
  require_surface(ctx, surface_class);
  return times_todd_s(ctx, surface_class)[2];
}

BogomolovCheck bogomolov_hypersurface_check(const SurfaceContext& ctx, long x, const Rational& z) {
  const Rational c(ctx.degree());
  const HChern pushed = push_to_p3(ctx, surface_class(ctx.degree(), SurfaceInput::h_powers, 2, x, z));
  const TiltPoint witness{Rational(x) / Rational(2) - c / Rational(2), c / Rational(2)};
  Rational q = q_form(pushed, witness);
  const bool holds = q.sign() >= 0;
  return {holds, witness, std::move(q), pushed};
}

}  // namespace tiltwall
