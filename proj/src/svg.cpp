#include "tiltwall/svg.hpp"

#include <algorithm>
#include <sstream>

#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

constexpr long kWidth = 800;
constexpr long kHeight = 400;
constexpr long kMargin = 40;

// sign(a + b sqrt(q) - r), exactly.
int compare_surd(const Rational& a, const Rational& b, const Rational& q, const Rational& r) {
  const Rational t = r - a;
  if (b.is_zero() || q.is_zero()) return -t.sign();
  const int su = b.sign();
  const Rational u_sq = square(b) * q;
  const Rational t_sq = square(t);
  if (su > 0) {
    if (t.sign() < 0) return 1;
    return (u_sq <=> t_sq) < 0 ? -1 : ((u_sq <=> t_sq) > 0 ? 1 : 0);
  }
  if (t.sign() > 0) return -1;
  return (t_sq <=> u_sq) < 0 ? -1 : ((t_sq <=> u_sq) > 0 ? 1 : 0);
}

std::string format_micro(const mpz_class& micro) {
  const bool negative = micro < 0;
  const mpz_class mag = negative ? mpz_class(-micro) : micro;
  std::string digits = mag.get_str();
  if (digits.size() < 7) digits.insert(0, 7 - digits.size(), '0');
  const std::string whole = digits.substr(0, digits.size() - 6);
  const std::string frac = digits.substr(digits.size() - 6);
  return (negative ? "-" : "") + whole + "." + frac;
}

class Frame {
 public:
  explicit Frame(const PlotSpec& spec)
      : lo_(spec.beta_range.first),
        sx_(Rational(kWidth - 2 * kMargin) / (spec.beta_range.second - spec.beta_range.first)),
        sy_(Rational(kHeight - 2 * kMargin) / spec.alpha_max) {}

  Rational x(const Rational& beta) const { return Rational(kMargin) + (beta - lo_) * sx_; }
  Rational y(const Rational& alpha) const { return Rational(kHeight - kMargin) - alpha * sy_; }
  const Rational& sx() const { return sx_; }
  const Rational& sy() const { return sy_; }

 private:
  Rational lo_;
  Rational sx_;
  Rational sy_;
};

std::string arc_path(const Frame& f, const Wall& wall) {
  const Rational cx = f.x(wall.center());
  const Rational base = f.y(0);
  const Rational rx_sq = wall.radius_sq() * square(f.sx());
  const Rational ry_sq = wall.radius_sq() * square(f.sy());
  std::ostringstream os;
  os << "M " << fixed6(cx, -1, rx_sq) << ' ' << fixed6(base) << " A " << fixed6(0, 1, rx_sq) << ' '
     << fixed6(0, 1, ry_sq) << " 0 0 1 " << fixed6(cx, 1, rx_sq) << ' ' << fixed6(base);
  return os.str();
}

std::string escape(const std::string& text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += ch;
    }
  }
  return out;
}

void draw_wall(std::ostream& os, const Frame& f, const PlotSpec& spec, const Wall& wall,
               const char* extra) {
  if (wall.is_semicircle()) {
    os << "    <path d=\"" << arc_path(f, wall) << "\" data-center=\"" << wall.center().str()
       << "\" data-radius-sq=\"" << wall.radius_sq().str() << '"' << extra << "/>\n";
  } else {
    const Rational x = f.x(wall.center());
    os << "    <line x1=\"" << fixed6(x) << "\" y1=\"" << fixed6(f.y(0)) << "\" x2=\"" << fixed6(x)
       << "\" y2=\"" << fixed6(f.y(spec.alpha_max)) << "\" data-beta=\"" << wall.center().str() << '"'
       << extra << "/>\n";
  }
}

}  // namespace

std::string fixed6(const Rational& a, const Rational& b, const Rational& q) {
  if (q.sign() < 0) throw DomainError("fixed6 needs q >= 0");
  const Rational scale(1000000);
  const Rational sa = a * scale;
  const Rational sb = b * scale;
  // Estimate floor(sa + sb sqrt(q)) with an integer square root, then correct.
  mpz_class root;
  const mpz_class shift40 = mpz_class(1) << 40;
  const mpz_class shift20 = mpz_class(1) << 20;
  const mpz_class q_scaled = (q * Rational(shift40)).floor();
  mpz_sqrt(root.get_mpz_t(), q_scaled.get_mpz_t());
  mpz_class n = (sa + sb * Rational(root, shift20)).floor();
  while (compare_surd(sa, sb, q, Rational(n)) < 0) --n;
  while (compare_surd(sa, sb, q, Rational(mpz_class(n + 1))) >= 0) ++n;
  const int half = compare_surd(sa, sb, q, Rational(n) + Rational(1, 2));
  if (half > 0 || (half == 0 && mpz_odd_p(n.get_mpz_t()))) ++n;
  return format_micro(n);
}

void validate(const PlotSpec& spec) {
  if (!(spec.beta_range.first < spec.beta_range.second)) throw DomainError("empty beta range");
  if (spec.alpha_max.sign() <= 0) throw DomainError("alpha_max must be positive");
}

std::string render_svg(const PlotSpec& spec) {
  validate(spec);
  const Frame f(spec);
  std::vector<Wall> walls = spec.walls;
  // Vertical walls first, then semicircles from the outside in.
  std::stable_sort(walls.begin(), walls.end(), [](const Wall& a, const Wall& b) {
    if (a.is_semicircle() != b.is_semicircle()) return !a.is_semicircle();
    if (!a.is_semicircle()) return a.center() < b.center();
    if (a.radius_sq() != b.radius_sq()) return a.radius_sq() > b.radius_sq();
    return a.center() < b.center();
  });

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
     << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n"
     << "  <clipPath id=\"plot\"><rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\""
     << kWidth - 2 * kMargin << "\" height=\"" << kHeight - 2 * kMargin << "\"/></clipPath>\n";

  const std::string base = fixed6(f.y(0));
  os << "  <g id=\"axes\" stroke=\"#444444\" stroke-width=\"1\">\n"
     << "    <line x1=\"" << kMargin << "\" y1=\"" << base << "\" x2=\"" << kWidth - kMargin << "\" y2=\""
     << base << "\"/>\n"
     << "  </g>\n"
     << "  <g id=\"labels\" font-family=\"monospace\" font-size=\"11\" fill=\"#444444\">\n"
     << "    <text x=\"" << kMargin << "\" y=\"" << kHeight - kMargin / 2 << "\">beta = "
     << spec.beta_range.first.str() << "</text>\n"
     << "    <text x=\"" << kWidth - kMargin << "\" y=\"" << kHeight - kMargin / 2
     << "\" text-anchor=\"end\">beta = " << spec.beta_range.second.str() << "</text>\n"
     << "    <text x=\"" << kMargin / 2 << "\" y=\"" << kMargin << "\">alpha = " << spec.alpha_max.str()
     << "</text>\n"
     << "  </g>\n";

  os << "  <g id=\"walls\" clip-path=\"url(#plot)\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"1.5\">\n";
  for (const auto& wall : walls) draw_wall(os, f, spec, wall, "");
  os << "  </g>\n";
  if (spec.q_wall) {
    os << "  <g id=\"q-wall\" clip-path=\"url(#plot)\" fill=\"none\" stroke=\"#b03a2e\" stroke-width=\"1.5\" "
          "stroke-dasharray=\"6 4\">\n";
    draw_wall(os, f, spec, *spec.q_wall, "");
    os << "  </g>\n";
  }
  os << "  <g id=\"marks\" font-family=\"monospace\" font-size=\"11\">\n";
  for (const auto& mark : spec.marks) {
    const std::string cx = fixed6(f.x(mark.beta));
    const std::string cy = fixed6(f.y(mark.alpha));
    os << "    <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"3\" fill=\"black\"/>\n"
       << "    <text x=\"" << cx << "\" y=\"" << cy << "\" dx=\"5\" dy=\"-5\">"
       << escape("(" + mark.beta.str() + ", " + mark.alpha.str() + ")") << "</text>\n";
  }
  os << "  </g>\n</svg>\n";
  return os.str();
}

}  // namespace tiltwall
