#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tiltwall/rational.hpp"

namespace tiltwall {

/// Ambient variety: projective 3-space (dim 3, degree 1) or a degree-d
/// hypersurface S in P^3 (dim 2, degree d = H^2).
struct Space {
  int dim = 3;
  int degree = 1;

  static Space p3() { return {3, 1}; }
  static Space surface(int d);

  bool is_p3() const { return dim == 3 && degree == 1; }
  bool is_surface() const { return dim == 2; }

  /// "p3" or "surface:d=<int>".
  static Space parse(std::string_view tag);
  std::string str() const;

  friend bool operator==(const Space&, const Space&) = default;
};

/// H-multiplied Chern character (H^n ch_0, H^{n-1} ch_1, ..., ch_n).
///
/// On P^3 the class may be truncated to (e0, e1, e2): walls only see ch_{<=2}.
/// Surface classes always carry exactly three components.
class HChern {
 public:
  HChern() = default;
  HChern(Space space, std::vector<Rational> comps);

  static HChern p3(Rational e0, Rational e1, Rational e2);
  static HChern p3(Rational e0, Rational e1, Rational e2, Rational e3);

  const Space& space() const { return space_; }
  std::size_t size() const { return comps_.size(); }
  const Rational& operator[](std::size_t i) const { return comps_.at(i); }
  const std::vector<Rational>& comps() const { return comps_; }

  bool has_ch3() const { return comps_.size() == 4; }
  /// Drop ch_3, keeping (e0, e1, e2).
  HChern truncated() const;

  friend HChern operator+(const HChern& a, const HChern& b);
  friend HChern operator-(const HChern& a, const HChern& b);
  friend HChern operator-(const HChern& a);
  friend bool operator==(const HChern&, const HChern&) = default;

  /// "e0,e1,e2[,e3]".
  static HChern parse(std::string_view text, Space space);
  std::string str() const;

 private:
  Space space_;
  std::vector<Rational> comps_;
};

/// How a surface class is written on input. All modes land in H-coordinates.
enum class SurfaceInput {
  h_coords,   ///< (H^2 ch0, H ch1, ch2) verbatim
  plain,      ///< ch_S = (r, a H, e): e is ch2 as a plain number
  h_powers,   ///< ch_S = (r, x H, z H^2): ch2 = z d
};

SurfaceInput parse_surface_input(std::string_view mode);
HChern surface_class(int degree, SurfaceInput mode, const Rational& rank, const Rational& c1,
                     const Rational& c2);

struct LatticeOptions {
  /// Enforce 6 ch3 in Z on P^3.
  bool strict_ch3 = true;
  /// Surface check: e0/d, e1/d integral (Pic = Z H). Otherwise only 2 e_i in Z.
  bool picard_rank_one = true;
};

bool lattice_check(const HChern& v, const LatticeOptions& opts = {});

/// e^{-beta H} ch. The output need not be a lattice point.
HChern twist(const HChern& v, const Rational& beta);
/// ch(E(k)) = twist(v, -k).
HChern tensor_line_bundle(const HChern& v, long k);
/// Numerical action of RHom(-, O)[1] on P^3: (e0, e1, e2, e3) -> (-e0, e1, -e2, e3).
HChern shifted_dual(const HChern& v);

/// e1^2 - 2 e0 e2.
Rational delta(const HChern& v);

/// Slope value that may be +infinity. Never carries a sentinel rational.
class ExtendedRational {
 public:
  static ExtendedRational infinity() { return ExtendedRational(); }
  ExtendedRational(Rational value) : value_(std::move(value)) {}  // NOLINT

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const;
  std::string str() const { return is_infinite() ? "+inf" : value_->str(); }

  friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;

 private:
  ExtendedRational() = default;
  std::optional<Rational> value_;
};

ExtendedRational slope_mu(const HChern& v);

/// chi(E) on P^3 by Hirzebruch-Riemann-Roch with td = (1, 2, 11/6, 1).
Rational euler_char_p3(const HChern& v);

/// Coefficients (a_0, ..., a_n) of sum a_i m^i.
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;
  explicit HilbertPolynomial(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Degree of the polynomial; -1 for zero.
  int degree() const;
  bool is_zero() const { return degree() < 0; }
  Rational operator()(const Rational& m) const;

  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// m -> chi(E(m)) on P^3.
HilbertPolynomial hilbert_poly(const HChern& v);

enum class PolyOrder { less, equal, greater };

/// Total preorder on nonzero polynomials: lower degree is larger; equal degrees
/// compare p/lc(p) against q/lc(q) for m >> 0.
PolyOrder poly_compare(const HilbertPolynomial& p, const HilbertPolynomial& q);

}  // namespace tiltwall
