#include "tiltwall/chern_lattice.hpp"

#include <charconv>
#include <sstream>

#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

const Rational& factorial_inverse(std::size_t k) {
  static const Rational table[] = {Rational(1), Rational(1), Rational(1, 2), Rational(1, 6)};
  return table[k];
}

// td(P^3) in H-coordinates.
const std::vector<Rational>& todd_p3_coeffs() {
  static const std::vector<Rational> td = {Rational(1), Rational(2), Rational(11, 6), Rational(1)};
  return td;
}

void require_p3(const HChern& v, const char* op) {
  if (!v.space().is_p3()) throw DomainError(std::string(op) + " requires the ambient space p3");
}

}  // namespace

Space Space::surface(int d) {
  if (d < 1) throw DomainError("surface degree must be positive");
  return {2, d};
}

Space Space::parse(std::string_view tag) {
  if (tag == "p3") return p3();
  constexpr std::string_view prefix = "surface:d=";
  if (tag.substr(0, prefix.size()) == prefix) {
    const auto digits = tag.substr(prefix.size());
    int d = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw ParseError("bad surface degree in '" + std::string(tag) + "'");
    }
    if (d < 1) throw ParseError("surface degree must be positive");
    return surface(d);
  }
  throw ParseError("unknown space tag '" + std::string(tag) + "' (expected p3 or surface:d=<int>)");
}

std::string Space::str() const {
  if (is_p3()) return "p3";
  return "surface:d=" + std::to_string(degree);
}

HChern::HChern(Space space, std::vector<Rational> comps) : space_(space), comps_(std::move(comps)) {
  if (space_.dim == 3) {
    if (space_.degree != 1) throw DomainError("only P^3 is supported in dimension 3");
    if (comps_.size() != 3 && comps_.size() != 4) {
      throw DomainError("a P^3 class needs 3 or 4 components");
    }
  } else if (space_.dim == 2) {
    if (space_.degree < 1) throw DomainError("surface degree must be positive");
    if (comps_.size() != 3) throw DomainError("a surface class needs exactly 3 components");
  } else {
    throw DomainError("ambient dimension must be 2 or 3");
  }
}

HChern HChern::p3(Rational e0, Rational e1, Rational e2) {
  return HChern(Space::p3(), {std::move(e0), std::move(e1), std::move(e2)});
}

HChern HChern::p3(Rational e0, Rational e1, Rational e2, Rational e3) {
  return HChern(Space::p3(), {std::move(e0), std::move(e1), std::move(e2), std::move(e3)});
}

HChern HChern::truncated() const {
  return HChern(space_, {comps_[0], comps_[1], comps_[2]});
}

namespace {

template <typename Op>
HChern combine(const HChern& a, const HChern& b, Op op) {
  if (a.space() != b.space()) throw DomainError("ambient-space mismatch");
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(op(a[i], b[i]));
  return HChern(a.space(), std::move(out));
}

}  // namespace

// Sums of a full and a truncated class are truncated.
HChern operator+(const HChern& a, const HChern& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

HChern operator-(const HChern& a, const HChern& b) {
  return combine(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

HChern operator-(const HChern& a) {
  std::vector<Rational> out;
  for (const auto& c : a.comps()) out.push_back(-c);
  return HChern(a.space(), std::move(out));
}

HChern HChern::parse(std::string_view text, Space space) {
  std::vector<Rational> comps;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    comps.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  try {
    return HChern(space, std::move(comps));
  } catch (const DomainError& e) {
    throw ParseError(std::string("bad class '") + std::string(text) + "': " + e.what());
  }
}

std::string HChern::str() const {
  std::string out;
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) out += ',';
    out += comps_[i].str();
  }
  return out;
}

SurfaceInput parse_surface_input(std::string_view mode) {
  if (mode == "h") return SurfaceInput::h_coords;
  if (mode == "plain") return SurfaceInput::plain;
  if (mode == "hpow") return SurfaceInput::h_powers;
  throw ParseError("unknown surface input mode '" + std::string(mode) + "' (h, plain, hpow)");
}

HChern surface_class(int degree, SurfaceInput mode, const Rational& rank, const Rational& c1,
                     const Rational& c2) {
  const Space s = Space::surface(degree);
  const Rational d(degree);
  switch (mode) {
    case SurfaceInput::h_coords:
      return HChern(s, {rank, c1, c2});
    case SurfaceInput::plain:
      return HChern(s, {rank * d, c1 * d, c2});
    case SurfaceInput::h_powers:
      return HChern(s, {rank * d, c1 * d, c2 * d});
  }
  throw DomainError("unreachable surface input mode");
}

bool lattice_check(const HChern& v, const LatticeOptions& opts) {
  const Space& sp = v.space();
  if (sp.dim == 3) {
    if (!v[0].is_integer() || !v[1].is_integer() || !v[2].is_multiple_of_inverse(2)) return false;
    if (v.has_ch3() && opts.strict_ch3 && !v[3].is_multiple_of_inverse(6)) return false;
    return true;
  }
  if (opts.picard_rank_one) {
    const Rational d(sp.degree);
    return (v[0] / d).is_integer() && (v[1] / d).is_integer() && v[2].is_multiple_of_inverse(2);
  }
  for (const auto& c : v.comps()) {
    if (!c.is_multiple_of_inverse(2)) return false;
  }
  return true;
}

HChern twist(const HChern& v, const Rational& beta) {
  // Component j of e^{-beta H} ch is sum_{i<=j} (-beta)^{j-i}/(j-i)! e_i.
  const Rational minus_beta = -beta;
  std::vector<Rational> out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    Rational acc;
    for (std::size_t i = 0; i <= j; ++i) {
      acc += pow(minus_beta, static_cast<unsigned>(j - i)) * factorial_inverse(j - i) * v[i];
    }
    out[j] = acc;
  }
  return HChern(v.space(), std::move(out));
}

HChern tensor_line_bundle(const HChern& v, long k) { return twist(v, Rational(-k)); }

HChern shifted_dual(const HChern& v) {
  if (v.space().dim != 3) throw DomainError("shifted_dual requires a threefold class");
  std::vector<Rational> out = v.comps();
  out[0] = -out[0];
  out[2] = -out[2];
  return HChern(v.space(), std::move(out));
}

Rational delta(const HChern& v) { return square(v[1]) - Rational(2) * v[0] * v[2]; }

const Rational& ExtendedRational::value() const {
  if (!value_) throw DomainError("slope is +infinity");
  return *value_;
}

ExtendedRational slope_mu(const HChern& v) {
  if (v[0].is_zero()) return ExtendedRational::infinity();
  return v[1] / v[0];
}

Rational euler_char_p3(const HChern& v) {
  require_p3(v, "euler_char_p3");
  if (!v.has_ch3()) throw DomainError("euler_char_p3 needs ch3");
  const auto& td = todd_p3_coeffs();
  Rational chi;
  for (std::size_t i = 0; i < 4; ++i) chi += v[i] * td[3 - i];
  return chi;
}

HilbertPolynomial::HilbertPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}

int HilbertPolynomial::degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (!coeffs_[i].is_zero()) return static_cast<int>(i);
  }
  return -1;
}

Rational HilbertPolynomial::operator()(const Rational& m) const {
  Rational acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * m + coeffs_[i];
  return acc;
}

HilbertPolynomial hilbert_poly(const HChern& v) {
  require_p3(v, "hilbert_poly");
  if (!v.has_ch3()) throw DomainError("hilbert_poly needs ch3");
  // ch_j(E(m)) = sum_{i<=j} e_i m^{j-i}/(j-i)!, then pair with td_{3-j}.
  const auto& td = todd_p3_coeffs();
  std::vector<Rational> coeffs(4);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      coeffs[j - i] += td[3 - j] * v[i] * factorial_inverse(j - i);
    }
  }
  return HilbertPolynomial(std::move(coeffs));
}

PolyOrder poly_compare(const HilbertPolynomial& p, const HilbertPolynomial& q) {
  const int dp = p.degree();
  const int dq = q.degree();
  if (dp < 0 || dq < 0) throw DomainError("poly_compare is undefined on the zero polynomial");
  if (dp != dq) return dp < dq ? PolyOrder::greater : PolyOrder::less;
  const Rational& lp = p.coeffs()[dp];
  const Rational& lq = q.coeffs()[dq];
  for (int i = dp; i >= 0; --i) {
    const Rational diff = p.coeffs()[i] / lp - q.coeffs()[i] / lq;
    if (diff.sign() > 0) return PolyOrder::greater;
    if (diff.sign() < 0) return PolyOrder::less;
  }
  return PolyOrder::equal;
}

}  // namespace tiltwall
