#include "tiltwall/ledger.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

#include "ledger_closed_forms.hpp"
#include "ledger_compute.hpp"
#include "tiltwall/errors.hpp"
#include "tiltwall/stability_bounds.hpp"
#include "tiltwall/surface_push.hpp"
#include "tiltwall/wall_finder.hpp"

namespace tiltwall {

LedgerValue LedgerValue::scalar(Rational value) { return {Kind::scalar, {std::move(value)}, false}; }
LedgerValue LedgerValue::tuple(std::vector<Rational> values) { return {Kind::tuple, std::move(values), false}; }
LedgerValue LedgerValue::set(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return {Kind::set, std::move(values), false};
}
LedgerValue LedgerValue::boolean(bool value) { return {Kind::boolean, {}, value}; }

const Rational& LedgerValue::value() const {
  if (kind_ != Kind::scalar) throw DomainError("ledger value is not a scalar");
  return items_.front();
}

bool LedgerValue::flag() const {
  if (kind_ != Kind::boolean) throw DomainError("ledger value is not a boolean");
  return flag_;
}

std::string LedgerValue::str() const {
  auto join = [&](char open, char close) {
    std::string out(1, open);
    for (std::size_t i = 0; i < items_.size(); ++i) {
      if (i) out += ',';
      out += items_[i].str();
    }
    return out + close;
  };
  switch (kind_) {
    case Kind::scalar: return items_.front().str();
    case Kind::tuple: return join('(', ')');
    case Kind::set: return join('{', '}');
    case Kind::boolean: return flag_ ? "true" : "false";
  }
  return "";
}

const char* to_string(LedgerValue::Kind kind) {
  switch (kind) {
    case LedgerValue::Kind::scalar: return "scalar";
    case LedgerValue::Kind::tuple: return "tuple";
    case LedgerValue::Kind::set: return "set";
    case LedgerValue::Kind::boolean: return "boolean";
  }
  return "?";
}

LedgerValue::Kind parse_ledger_kind(std::string_view text) {
  for (auto k : {LedgerValue::Kind::scalar, LedgerValue::Kind::tuple, LedgerValue::Kind::set,
                 LedgerValue::Kind::boolean}) {
    if (text == to_string(k)) return k;
  }
  throw ParseError("unknown ledger value kind '" + std::string(text) + "'");
}

namespace {

const std::set<std::string>& known_params() {
  static const std::set<std::string> names = {"d", "e", "c", "x", "y", "z"};
  return names;
}

}  // namespace

void add_ledger_override(LedgerOverrides& overrides, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ParseError("expected name=v1,v2,... got '" + std::string(assignment) + "'");
  }
  const std::string name(assignment.substr(0, eq));
  if (!known_params().count(name)) throw ParseError("unknown ledger parameter '" + name + "'");
  auto rest = assignment.substr(eq + 1);
  if (rest.empty()) throw ParseError("no values for ledger parameter '" + name + "'");
  auto& values = overrides[name];
  while (true) {
    const auto comma = rest.find(',');
    values.push_back(Rational::parse(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
}

bool ledger_filter_matches(std::string_view pattern, std::string_view id) {
  if (pattern.empty()) return id.empty();
  if (pattern.front() == '*') {
    for (std::size_t skip = 0; skip <= id.size(); ++skip) {
      if (ledger_filter_matches(pattern.substr(1), id.substr(skip))) return true;
    }
    return false;
  }
  if (id.empty()) return false;
  if (pattern.front() != '?' && pattern.front() != id.front()) return false;
  return ledger_filter_matches(pattern.substr(1), id.substr(1));
}

namespace {

using R = Rational;
namespace cf = closed_form;
namespace cp = computed;

std::vector<R> range(long lo, long hi, long den = 1) {
  std::vector<R> out;
  for (long k = lo; k <= hi; ++k) out.emplace_back(k, den);
  return out;
}

HChern with_ch3(const HChern& v, const R& ch3) { return HChern::p3(v[0], v[1], v[2], ch3); }

// Collects entries of one registry id and resolves sample values.
class Session {
 public:
  Session(std::string id, const LedgerOverrides& overrides) : id_(std::move(id)), overrides_(overrides) {}

  std::vector<R> values(const std::string& name, std::vector<R> defaults) const {
    const auto it = overrides_.find(name);
    return it == overrides_.end() ? std::move(defaults) : it->second;
  }

  bool overridden(const std::string& name) const { return overrides_.count(name) > 0; }

  // Degrees 5..12 restricted to the hypothesis d >= lowest; overrides must satisfy it.
  std::vector<R> degrees(long lowest) const {
    auto ds = values("d", range(std::max(5L, lowest), 12));
    for (const auto& d : ds) {
      if (!d.is_integer() || d < R(lowest)) {
        throw DomainError(id_ + " needs an integer degree d >= " + std::to_string(lowest) + ", got " +
                          d.str());
      }
    }
    return ds;
  }

  // e samples: each boundary and one lattice step to either side.
  std::vector<R> e_values(const std::vector<R>& boundaries) const {
    std::vector<R> defaults;
    for (const auto& b : boundaries) {
      for (long k = -1; k <= 1; ++k) defaults.push_back(b + R(k));
    }
    std::sort(defaults.begin(), defaults.end());
    defaults.erase(std::unique(defaults.begin(), defaults.end()), defaults.end());
    return values("e", std::move(defaults));
  }

  // Whether a sample satisfies a sub-entry hypothesis. Default samples outside
  // the hypothesis are not instantiated; overridden ones are an error.
  bool admit(const std::string& name, bool holds, const std::string& hypothesis) const {
    if (holds) return true;
    if (overridden(name)) {
      throw DomainError(id_ + ": parameter " + name + " outside the hypothesis " + hypothesis);
    }
    return false;
  }

  void add(const std::string& quantity, std::vector<std::pair<std::string, R>> params,
           LedgerValue computed, LedgerValue expected, const std::string& anchor) {
    LedgerEntry entry;
    entry.id = id_;
    entry.name = id_ + "." + quantity;
    entry.params = std::move(params);
    entry.pass = computed == expected;
    entry.computed = std::move(computed);
    entry.expected = std::move(expected);
    entry.anchor = anchor;
    entries_.push_back(std::move(entry));
  }

  const std::string& id() const { return id_; }
  std::vector<LedgerEntry> take() { return std::move(entries_); }

 private:
  std::string id_;
  const LedgerOverrides& overrides_;
  std::vector<LedgerEntry> entries_;
};

using Scalar = LedgerValue;

void v1(Session& s) {
  for (const auto& d : s.degrees(1)) {
    for (const auto& e : s.e_values({R(1) - d / R(2), -d})) {
      s.add("push", {{"d", d}, {"e", e}}, Scalar::tuple(cp::push_minus_h(d, e).comps()),
            Scalar::tuple(cf::push_minus_h(d, e)), "pushforward of (2, -H, e)");
    }
  }
}

void v2(Session& s) {
  for (const auto& d : s.degrees(1)) {
    for (const auto& e : s.e_values({R(1) - d / R(2), -d})) {
      s.add("push", {{"d", d}, {"e", e}}, Scalar::tuple(cp::push_zero(d, e).comps()),
            Scalar::tuple(cf::push_zero(d, e)), "pushforward of (2, 0, e)");
    }
  }
}

void v3(Session& s) {
  for (const auto& c : s.values("c", range(1, 8))) {
    for (const auto& x : s.values("x", range(-3, 3))) {
      for (const auto& z : s.values("z", range(-4, 4, 2))) {
        s.add("push", {{"c", c}, {"x", x}, {"z", z}},
              Scalar::tuple(cp::push_h_powers(c, x, z).comps()),
              Scalar::tuple(cf::push_h_powers(c, x, z)), "pushforward of (2, xH, zH^2)");
      }
    }
  }
}

void v4(Session& s) {
  for (const auto& d : s.degrees(5)) {
    const R boundary = R(1) - d / R(2);
    const HChern at_boundary = cp::push_minus_h(d, boundary);
    const R floor = cp::rho_q(at_boundary);
    const R rank_three = higher_rank_radius_bound(at_boundary, 3);
    s.add("rho_q_boundary", {{"d", d}}, Scalar::scalar(floor),
          Scalar::scalar(cf::rho_q_minus_h_at_boundary(d)), "rho_Q^2 at e = 1 - d/2");
    s.add("rank_three_bound", {{"d", d}}, Scalar::scalar(rank_three),
          Scalar::scalar(cf::rank_three_radius_bound(d)), "Delta / (4 * 3^2)");
    s.add("boundary_above_rank_three", {{"d", d}}, Scalar::boolean(floor > rank_three),
          Scalar::boolean(true), "(d^3 - 9d + 12)/(4d) > d^2/9");
    for (const auto& e : s.e_values({boundary, -d})) {
      const HChern v = cp::push_minus_h(d, e);
      const R rho = cp::rho_q(v);
      s.add("rho_q", {{"d", d}, {"e", e}}, Scalar::scalar(rho), Scalar::scalar(cf::rho_q_minus_h(d, e)),
            "rho_Q^2 of the pushforward of (2, -H, e)");
      if (s.admit("e", e >= boundary, "e >= 1 - d/2")) {
        s.add("rho_q_chain", {{"d", d}, {"e", e}}, Scalar::boolean(rho >= floor && floor > rank_three),
              Scalar::boolean(true), "rho_Q^2 >= boundary value > rank-three bound");
      }
    }
  }
}

void v5(Session& s) {
  for (const auto& d : s.degrees(5)) {
    const R boundary = -d;
    const HChern at_boundary = cp::push_zero(d, boundary);
    const R floor = cp::rho_q(at_boundary);
    const R rank_three = higher_rank_radius_bound(at_boundary, 3);
    s.add("rho_q_boundary", {{"d", d}}, Scalar::scalar(floor),
          Scalar::scalar(cf::rho_q_zero_at_boundary(d)), "rho_Q^2 at e = -d is d^2/4 - 3");
    s.add("rank_three_bound", {{"d", d}}, Scalar::scalar(rank_three),
          Scalar::scalar(cf::rank_three_radius_bound(d)), "Delta / (4 * 3^2)");
    s.add("boundary_above_rank_three", {{"d", d}}, Scalar::boolean(floor > rank_three),
          Scalar::boolean(true), "d^2/4 - 3 > d^2/9");
    for (const auto& e : s.e_values({R(1) - d / R(2), boundary})) {
      const R rho = cp::rho_q(cp::push_zero(d, e));
      s.add("rho_q", {{"d", d}, {"e", e}}, Scalar::scalar(rho), Scalar::scalar(cf::rho_q_zero(d, e)),
            "rho_Q^2 of the pushforward of (2, 0, e)");
      if (s.admit("e", e >= boundary, "e >= -d")) {
        s.add("rho_q_chain", {{"d", d}, {"e", e}}, Scalar::boolean(rho >= floor && floor > rank_three),
              Scalar::boolean(true), "rho_Q^2 >= d^2/4 - 3 > rank-three bound");
      }
    }
  }
}

void v6(Session& s) {
  for (const auto& d : s.degrees(5)) {
    const R boundary = R(1) - d / R(2);
    s.add("q_boundary", {{"d", d}}, Scalar::scalar(cp::q_on_axis(cp::push_minus_h(d, boundary), -1)),
          Scalar::scalar(cf::q_minus_h_at_boundary(d)), "Q_{0,-1} at e = 1 - d/2");
    for (const auto& e : s.e_values({boundary, -d})) {
      const HChern v = cp::push_minus_h(d, e);
      const R q1 = cp::q_on_axis(v, -1);
      s.add("q_minus_1", {{"d", d}, {"e", e}}, Scalar::scalar(q1), Scalar::scalar(cf::q_minus_h(d, e)),
            "Q_{0,-1} of the pushforward of (2, -H, e)");
      s.add("q_minus_d", {{"d", d}, {"e", e}}, Scalar::scalar(cp::q_on_axis(v, -d)),
            Scalar::scalar(cf::q_minus_h(d, e)), "Q_{0,-d} equals Q_{0,-1}");
      if (s.admit("e", e >= boundary, "e >= 1 - d/2")) {
        s.add("q_negative", {{"d", d}, {"e", e}}, Scalar::boolean(q1.sign() < 0), Scalar::boolean(true),
              "Q_{0,-1} < 0 for e >= 1 - d/2");
      }
    }
  }
}

void v7(Session& s) {
  for (const auto& d : s.degrees(5)) {
    const R boundary = -d;
    s.add("q_boundary", {{"d", d}}, Scalar::scalar(cp::q_on_axis(cp::push_zero(d, boundary), -1)),
          Scalar::scalar(cf::q_zero_at_boundary(d)), "Q_{0,-1} at e = -d");
    for (const auto& e : s.e_values({R(1) - d / R(2), boundary})) {
      const HChern v = cp::push_zero(d, e);
      const R q1 = cp::q_on_axis(v, -1);
      s.add("q_minus_1", {{"d", d}, {"e", e}}, Scalar::scalar(q1), Scalar::scalar(cf::q_zero(d, e)),
            "Q_{0,-1} of the pushforward of (2, 0, e)");
      s.add("q_one_minus_d", {{"d", d}, {"e", e}}, Scalar::scalar(cp::q_on_axis(v, R(1) - d)),
            Scalar::scalar(cf::q_zero(d, e)), "Q_{0,-d+1} equals Q_{0,-1}");
      if (s.admit("e", e >= boundary, "e >= -d")) {
        s.add("q_negative", {{"d", d}, {"e", e}}, Scalar::boolean(q1.sign() < 0), Scalar::boolean(true),
              "Q_{0,-1} < 0 for e >= -d");
      }
    }
  }
}

void v8(Session& s) {
  const auto ds = s.values("d", range(5, 12));
  for (const auto& c : s.values("c", range(1, 8))) {
    for (const auto& x : s.values("x", range(-3, 3))) {
      for (const auto& d : ds) {
        const HChern v = HChern::p3(0, R(2) * c, d);
        const R bound = cf::y_lower_bound(c, x, d);
        std::vector<R> ys;
        for (long k : {-2, 0, 1, 2}) ys.push_back(bound + R(k, 2));
        for (const auto& y : s.values("y", ys)) {
          const HChern w = HChern::p3(1, x, x * x / R(2) - y);
          const auto adm = rank_one_admissibility(v, w);
          const std::vector<std::pair<std::string, R>> params = {{"c", c}, {"x", x}, {"d", d}, {"y", y}};
          s.add("rho_line_bundle", params, Scalar::scalar(adm.rho_sq_line_bundle),
                Scalar::scalar(cf::rho_line_bundle(c, x, d)), "rho(i_*E, O(x - c))^2");
          s.add("rho_rank_one", params, Scalar::scalar(adm.rho_sq_sub),
                Scalar::scalar(cf::rho_rank_one(c, x, y, d)), "rho(i_*E, F)^2");
          s.add("admissible", params, Scalar::boolean(adm.admissible), Scalar::boolean(y >= bound),
                "W(i_*E, F) inside W(i_*E, O(x - c)) iff y >= -c^2/2 + cx - d/2");
        }
      }
    }
  }
}

void v9(Session& s) {
  const auto ds = s.values("d", range(5, 12));
  for (const auto& c : s.values("c", range(1, 8))) {
    for (const auto& d : ds) {
      // Subobject side: F = (1, 0, -d), T = (0, c, y).
      const HChern f = HChern::p3(1, 0, -d);
      const R threshold_sub = -c * c / R(2) - d;
      std::vector<R> ys;
      for (long k = -2; k <= 2; ++k) ys.push_back(threshold_sub + R(k, 2));
      for (const auto& y : s.values("y", ys)) {
        const HChern t = HChern::p3(0, c, y);
        const R s_sub = cp::center(f, t);
        const R s_line = cp::center(f, tensor_line_bundle(HChern::p3(1, 0, 0), -cp::to_long(c)));
        const std::vector<std::pair<std::string, R>> params = {{"c", c}, {"d", d}, {"y", y}};
        s.add("center_sub", params, Scalar::scalar(s_sub), Scalar::scalar(cf::center_torsion_sub(c, y)),
              "s(F, T) = y/c");
        s.add("center_line_down", params, Scalar::scalar(s_line), Scalar::scalar(cf::center_twist_down(c, d)),
              "s(F, O(-c)) = -c/2 - d/c");
        s.add("sub_order", params, Scalar::boolean(s_sub >= s_line),
              Scalar::boolean(y >= threshold_sub), "s(F, T) >= s(F, O(-c)) iff y >= -c^2/2 - d");
        s.add("sub_quotient_bogomolov", params, Scalar::boolean(delta(f - t).sign() >= 0),
              Scalar::boolean(y >= threshold_sub), "Delta(F/T) >= 0 iff y >= -c^2/2 - d");
      }
      // Quotient side: G = (-1, 0, d), H^0(G) = (0, c, y).
      const HChern g = HChern::p3(-1, 0, d);
      const R threshold_quot = c * c / R(2) + d;
      ys.clear();
      for (long k = -2; k <= 2; ++k) ys.push_back(threshold_quot + R(k, 2));
      for (const auto& y : s.values("y", ys)) {
        const HChern h0 = HChern::p3(0, c, y);
        const R s_quot = cp::center(g, h0);
        const R s_line = cp::center(g, tensor_line_bundle(HChern::p3(1, 0, 0), cp::to_long(c)));
        const std::vector<std::pair<std::string, R>> params = {{"c", c}, {"d", d}, {"y", y}};
        s.add("center_quotient", params, Scalar::scalar(s_quot),
              Scalar::scalar(cf::center_torsion_sub(c, y)), "s(G, H^0(G)) = y/c");
        s.add("center_line_up", params, Scalar::scalar(s_line), Scalar::scalar(cf::center_twist_up(c, d)),
              "s(G, O(c)) = c/2 + d/c");
        s.add("quotient_order", params, Scalar::boolean(s_quot <= s_line),
              Scalar::boolean(y <= threshold_quot), "s(G, H^0(G)) <= s(G, O(c)) iff y <= c^2/2 + d");
        s.add("kernel_bogomolov", params, Scalar::boolean(delta(h0 - g).sign() >= 0),
              Scalar::boolean(y <= threshold_quot), "Delta(H^-1(G)) >= 0 iff y <= c^2/2 + d");
      }
    }
  }
}

void v10(Session& s) {
  for (const auto& d : s.degrees(6)) {
    const R boundary = R(1) - d;
    const R half(1, 2);
    s.add("q_boundary", {{"d", d}}, Scalar::scalar(cp::q_on_axis(cp::push_zero(d, boundary), -half)),
          Scalar::scalar(cf::q_zero_half_at_boundary(d)), "Q_{0,-1/2} at e = 1 - d");
    for (const auto& e : s.e_values({-d, boundary})) {
      const HChern v = cp::push_zero(d, e);
      const R q_half = cp::q_on_axis(v, -half);
      s.add("q_minus_half", {{"d", d}, {"e", e}}, Scalar::scalar(q_half), Scalar::scalar(cf::q_zero_half(d, e)),
            "Q_{0,-1/2} of the pushforward of (2, 0, e)");
      s.add("q_half_minus_d", {{"d", d}, {"e", e}}, Scalar::scalar(cp::q_on_axis(v, half - d)),
            Scalar::scalar(cf::q_zero_half(d, e)), "Q_{0,-d+1/2} equals Q_{0,-1/2}");
      if (s.admit("e", e >= boundary, "e >= 1 - d")) {
        s.add("q_negative", {{"d", d}, {"e", e}}, Scalar::boolean(q_half.sign() < 0), Scalar::boolean(true),
              "Q_{0,-1/2} < 0 for e >= 1 - d");
      }
    }
  }
}

void v11(Session& s) {
  const R d(5);
  for (const auto& dd : s.values("d", {d})) {
    if (dd != d) throw DomainError(s.id() + " is stated for d = 5 only, got d = " + dd.str());
  }
  const R boundary(-5);
  const HChern at_boundary = cp::push_zero(d, boundary);
  const R floor = cp::rho_q(at_boundary);
  s.add("rho_q_floor", {{"d", d}}, Scalar::scalar(floor), Scalar::scalar(R(13, 4)),
        "13/4 <= rho_Q^2 for e >= -5");

  // The hypothesis floor holds for every e >= -5, so the rank-two slice is
  // computed once against it.
  const auto slice = cp::rank_two_slice(at_boundary, floor);
  std::vector<R> xs;
  for (const auto& [x, ys] : slice) xs.push_back(x);
  s.add("x_set", {{"d", d}}, Scalar::set(xs), Scalar::set({-1, 0, 1}), "x in {-1, 0, 1}");
  auto ys_of = [&](const R& x) {
    const auto it = slice.find(x);
    return it == slice.end() ? std::vector<R>{} : it->second;
  };
  s.add("y_set_x_minus_1", {{"d", d}, {"x", -1}}, Scalar::set(ys_of(-1)), Scalar::set({R(-1, 2)}),
        "x = -1 forces y = -1/2");
  s.add("y_set_x_plus_1", {{"d", d}, {"x", 1}}, Scalar::set(ys_of(1)), Scalar::set({R(-11, 2)}),
        "x = 1 forces y = -11/2");

  for (const auto& x : {R(-1), R(1)}) {
    for (const auto& y : s.values("y", {R(-11, 2), R(-5), R(-3, 2), R(-1, 2), R(0)})) {
      s.add(x.sign() < 0 ? "rho_x_minus_1" : "rho_x_plus_1", {{"d", d}, {"x", x}, {"y", y}},
            Scalar::scalar(cp::radius_sq(at_boundary, HChern::p3(2, x, y))),
            Scalar::scalar(cf::rho_degree_five(x, y)), "rho^2(E, F) for ch(F) = (2, x, y)");
    }
  }

  const auto wall_minus = wall_between(at_boundary, HChern::p3(2, -1, R(-1, 2)));
  const auto wall_plus = wall_between(at_boundary, HChern::p3(2, 1, R(-11, 2)));
  for (const auto& e : s.e_values({boundary})) {
    const HChern v = cp::push_zero(d, e);
    const R q1 = cp::q_on_axis(v, -1);
    s.add("q_minus_1", {{"d", d}, {"e", e}}, Scalar::scalar(q1), Scalar::scalar(cf::q_degree_five(e)),
          "Q_{0,-1} = -60e - 400");
    s.add("q_minus_4", {{"d", d}, {"e", e}}, Scalar::scalar(cp::q_on_axis(v, -4)),
          Scalar::scalar(cf::q_degree_five(e)), "Q_{0,-4} equals Q_{0,-1}");
    if (s.admit("e", e > boundary, "e > -5")) {
      s.add("q_negative", {{"d", d}, {"e", e}}, Scalar::boolean(q1.sign() < 0), Scalar::boolean(true),
            "-60e - 400 < 0 for e > -5");
    }
    for (const auto* wall : {&*wall_minus, &*wall_plus}) {
      const R q_top = q_form_sq(v, wall->center(), wall->radius_sq());
      s.add(wall == &*wall_minus ? "q_on_wall_x_minus_1" : "q_on_wall_x_plus_1", {{"d", d}, {"e", e}},
            Scalar::boolean(q_top.sign() >= 0), Scalar::boolean(e <= boundary),
            "Q >= 0 along the wall iff e <= -5");
    }
  }
}

void v12(Session& s) {
  for (const auto& c : s.values("c", range(1, 8))) {
    const SurfaceContext ctx(static_cast<int>(cp::to_long(c)));
    for (const auto& x : s.values("x", range(-3, 3))) {
      for (const auto& z : s.values("z", range(-10, 10, 2))) {
        const auto check = bogomolov_hypersurface_check(ctx, cp::to_long(x), z);
        const std::vector<std::pair<std::string, R>> params = {{"c", c}, {"x", x}, {"z", z}};
        s.add("q_sign", params, Scalar::scalar(check.q_value.sign()),
              Scalar::scalar(cf::bogomolov_sign(x, z)), "sign Q(alpha0, beta0) = sign(x^2 - 4z)");
        const auto wall = Wall::from_center_radius(check.pushed[2] / check.pushed[1],
                                                   square(check.pushed[1]) / R(16));
        s.add("witness_on_wall", params,
              Scalar::boolean(point_vs_wall(wall, check.witness) == PointPosition::on), Scalar::boolean(true),
              "(c/2, x/2 - c/2) lies on the wall of radius c/2");
      }
    }
  }
}

void v13(Session& s) {
  for (const auto& d : s.degrees(5)) {
    const int deg = static_cast<int>(cp::to_long(d));
    const SurfaceContext ctx(deg);
    const HChern e_class = surface_class(deg, SurfaceInput::plain, 2, -1, R(1) - d / R(2));
    const HChern line = surface_class(deg, SurfaceInput::plain, 1, -1, d / R(2));
    const R delta_s = delta_surface(ctx, e_class);
    const R bound = higher_rank_radius_bound(e_class, R(4) * d);
    const auto wall = wall_between(e_class, line);
    const R rho = wall ? wall->radius_sq() : R(0);
    s.add("delta", {{"d", d}}, Scalar::scalar(delta_s), Scalar::scalar(cf::surface_delta_minus_h(d)),
          "Delta_S(E) = 3d^2 - 4d");
    s.add("rank_four_bound", {{"d", d}}, Scalar::scalar(bound), Scalar::scalar(cf::surface_rank_four_bound(d)),
          "Delta_S(E)/(32 d^2) = 3/32 - 1/(8d)");
    s.add("rho_line", {{"d", d}}, Scalar::scalar(rho), Scalar::scalar(cf::surface_rho_line(d)),
          "rho(E, O_S(-H))^2 = 1/4 - 1/d + 1/d^2");
    s.add("bound_below_wall", {{"d", d}}, Scalar::boolean(bound < rho), Scalar::boolean(true),
          "3/32 - 1/(8d) < 1/4 - 1/d + 1/d^2");
  }
}

void v14(Session& s) {
  const auto ys = s.values("y", {R(-3, 2), R(-1, 2), R(1, 2)});
  for (const auto& d : s.degrees(5)) {
    const long k = cp::to_long(d) + 1;
    const R boundary = R(1) - d / R(2);
    const HChern at_boundary = cp::push_minus_h(d, boundary);
    const R floor = cp::rho_q(at_boundary);
    s.add("rho_q_floor", {{"d", d}}, Scalar::scalar(floor), Scalar::scalar(cf::rho_q_minus_h_at_boundary(d)),
          "(d^3 - 9d + 12)/(4d) <= rho_Q^2");
    for (const auto& y : ys) {
      s.add("rho_rank_two", {{"d", d}, {"y", y}},
            Scalar::scalar(cp::radius_sq(at_boundary, HChern::p3(2, -1, y))),
            Scalar::scalar(cf::rho_rank_two_minus_h(d, y)), "rho^2(E, F) = d^2/4 + y - 1/4");
    }
    const auto slice = cp::rank_two_slice(at_boundary, floor);
    std::vector<R> xs;
    for (const auto& [x, ys_x] : slice) xs.push_back(x);
    s.add("x_set", {{"d", d}}, Scalar::set(xs), Scalar::set({-1}), "x = -1");
    const auto it = slice.find(R(-1));
    const std::vector<R> ys_found = it == slice.end() ? std::vector<R>{} : it->second;
    const std::vector<R> window = {R(-3, 2), R(-1, 2)};
    const bool within = std::all_of(ys_found.begin(), ys_found.end(), [&](const R& y) {
      return std::find(window.begin(), window.end(), y) != window.end();
    });
    s.add("y_set_within", {{"d", d}, {"x", -1}}, Scalar::boolean(within), Scalar::boolean(true),
          "y in {-3/2, -1/2}");
    s.add("y_top_present", {{"d", d}, {"x", -1}},
          Scalar::boolean(std::find(ys_found.begin(), ys_found.end(), R(-1, 2)) != ys_found.end()),
          Scalar::boolean(true), "y = -1/2 survives");

    const HChern v_zero = cp::push_minus_h(d, 0);
    struct Branch {
      R y;
      std::vector<R> zs;
    };
    for (const auto& branch : {Branch{R(-1, 2), {R(5, 6), R(-1, 6)}}, Branch{R(-3, 2), {R(17, 6), R(11, 6)}}}) {
      const R z_max = rank_two_bound(HChern::p3(2, -1, branch.y, 0)).bound;
      for (const auto& z : s.values("z", branch.zs)) {
        const HChern sub = HChern::p3(2, -1, branch.y, z);
        for (const auto& e : s.e_values({boundary})) {
          const HChern g = tensor_line_bundle(with_ch3(v_zero, v_zero[3] + e) - sub, k);
          s.add("quotient_twist", {{"d", d}, {"e", e}, {"y", branch.y}, {"z", z}}, Scalar::tuple(g.comps()),
                Scalar::tuple(cf::quotient_twist_minus_h(d, e, branch.y, z)), "ch(G(d+1))");
        }
        s.add("e_max", {{"d", d}, {"y", branch.y}, {"z", z}},
              Scalar::scalar(cp::e_max_through_quotient(v_zero, sub, k)),
              Scalar::scalar(cf::e_max_minus_h(d, branch.y, z)), "bound on e from the rank -2 quotient");
      }
      const R e_top = cp::e_max_through_quotient(v_zero, HChern::p3(2, -1, branch.y, z_max), k);
      const R target = surface_discriminant_bound(static_cast<int>(k - 1), SurfaceC1::minus_h).e_max;
      if (branch.y == R(-1, 2)) {
        s.add("e_max_attained", {{"d", d}, {"y", branch.y}}, Scalar::scalar(e_top),
              Scalar::scalar(R(1) - d / R(2)), "e <= 1 - d/2 with equality at z = 5/6");
      } else {
        s.add("e_max_strict", {{"d", d}, {"y", branch.y}}, Scalar::boolean(e_top < target), Scalar::boolean(true),
              "4 - 3d/2 < 1 - d/2");
      }
    }
  }
}

void v15(Session& s) {
  const auto ys = s.values("y", {R(-2), R(-1), R(0)});
  for (const auto& d : s.degrees(5)) {
    const long deg = cp::to_long(d);
    const R boundary = R(1) - d;
    const HChern at_boundary = cp::push_zero(d, boundary);
    const R floor = cp::rho_q(at_boundary);
    s.add("rho_q_window", {{"d", d}}, Scalar::scalar(floor), Scalar::scalar(cf::rho_q_zero_window(d)),
          "(d^3 - 12d + 12)/(4d) <= rho_Q^2");
    for (const auto& y : ys) {
      s.add("rho_rank_two", {{"d", d}, {"y", y}}, Scalar::scalar(cp::radius_sq(at_boundary, HChern::p3(2, 0, y))),
            Scalar::scalar(cf::rho_rank_two_zero(d, y)), "rho^2(E, F) = d^2/4 + y");
    }
    const auto slice = cp::rank_two_slice(at_boundary, floor);
    std::vector<R> xs;
    for (const auto& [x, ys_x] : slice) xs.push_back(x);
    s.add("x_set", {{"d", d}}, Scalar::set(xs), Scalar::set({0}), "x = 0");
    const auto it = slice.find(R(0));
    s.add("y_set", {{"d", d}, {"x", 0}}, Scalar::set(it == slice.end() ? std::vector<R>{} : it->second),
          Scalar::set({-2, -1, 0}), "y in {0, -1, -2}");

    if (deg == 5) {
      // The degree-five route: walls above the weaker floor 13/4, keeping the
      // x whose walls leave Q >= 0 somewhere at e = 1 - d.
      const HChern at_five = cp::push_zero(d, -d);
      const auto wide = cp::rank_two_slice(at_five, cp::rho_q(at_five));
      std::vector<R> kept;
      for (const auto& [x, ys_x] : wide) {
        for (const auto& y : ys_x) {
          const auto wall = wall_between(at_boundary, HChern::p3(2, x, y));
          if (q_form_sq(at_boundary, wall->center(), wall->radius_sq()).sign() >= 0) {
            kept.push_back(x);
            break;
          }
        }
      }
      s.add("x_set_degree_five_route", {{"d", d}}, Scalar::set(kept), Scalar::set({0}),
            "x = +-1 forces e <= -5");
    } else {
      s.add("q_half_negative", {{"d", d}}, Scalar::boolean(cp::q_on_axis(at_boundary, R(-1, 2)).sign() < 0),
            Scalar::boolean(true), "Q_{0,-1/2} < 0 at e = 1 - d for d >= 6");
    }

    const HChern v_zero = cp::push_zero(d, 0);
    struct Branch {
      R y;
      std::vector<R> zs;
    };
    for (const auto& branch : {Branch{R(-1), {R(0), R(-1)}}, Branch{R(-2), {R(2), R(1)}}}) {
      const R z_max = rank_two_bound(HChern::p3(2, 0, branch.y, 0)).bound;
      for (const auto& z : s.values("z", branch.zs)) {
        const HChern sub = HChern::p3(2, 0, branch.y, z);
        for (const auto& e : s.e_values({-d, boundary})) {
          const HChern g = tensor_line_bundle(with_ch3(v_zero, v_zero[3] + e) - sub, deg);
          s.add("quotient_twist", {{"d", d}, {"e", e}, {"y", branch.y}, {"z", z}}, Scalar::tuple(g.comps()),
                Scalar::tuple(cf::quotient_twist_zero(d, e, branch.y, z)), "ch(G(d))");
        }
        s.add("e_max", {{"d", d}, {"y", branch.y}, {"z", z}},
              Scalar::scalar(cp::e_max_through_quotient(v_zero, sub, deg)),
              Scalar::scalar(cf::e_max_zero(d, branch.y, z)), "bound on e from the rank -2 quotient");
      }
      const R e_top = cp::e_max_through_quotient(v_zero, HChern::p3(2, 0, branch.y, z_max), deg);
      const R target = surface_discriminant_bound(static_cast<int>(deg), SurfaceC1::zero).e_max;
      s.add("e_max_below_surface_bound", {{"d", d}, {"y", branch.y}},
            Scalar::boolean(branch.y == R(-1) ? e_top <= target : e_top < target), Scalar::boolean(true),
            branch.y == R(-1) ? "e <= -d" : "e < -d");
    }
  }
}

void v16(Session& s) {
  const HChern shifted_line = -HChern::p3(1, -4, 8);
  const HChern e = HChern::p3(2, -1, R(-3, 2));
  const auto wall = wall_between(e, shifted_line);
  const R rho = wall->radius_sq();
  s.add("center", {}, Scalar::scalar(wall->center()), Scalar::scalar(R(-5, 2)), "center of W(E, O(-4)[1])");
  s.add("radius_sq", {}, Scalar::scalar(rho), Scalar::scalar(R(9, 4)), "rho^2(E, O(-4)[1]) = 9/4");
  const auto root = exact_sqrt(rho);
  std::vector<R> ends;
  if (root) ends = {wall->center() - *root, wall->center() + *root};
  s.add("beta_endpoints", {}, Scalar::set(ends), Scalar::set({-4, -1}), "meets the beta-axis at -4 and -1");
  const R bound = higher_rank_radius_bound(e, 3);
  s.add("rank_three_bound", {}, Scalar::scalar(bound), Scalar::scalar(R(7, 12)), "Delta(E)/(4 * 3) = 7/12");
  s.add("bound_below_wall", {}, Scalar::boolean(bound < rho), Scalar::boolean(true), "7/12 < 9/4");

  const auto wall_half = wall_between(HChern::p3(2, -1, R(-1, 2)), shifted_line);
  s.add("inside_c1_d_half", {},
        Scalar::boolean(point_vs_wall_sq(*wall_half, -1, 0) != PointPosition::outside), Scalar::boolean(true),
        "(0, -1) inside or on W(E, O(-4)[1]) for d = -1/2");
  const auto wall_two = wall_between(HChern::p3(2, 0, -2), shifted_line);
  s.add("inside_c0_d2", {}, Scalar::boolean(point_vs_wall_sq(*wall_two, -1, 0) == PointPosition::inside),
        Scalar::boolean(true), "(0, -1) inside W(E, O(-4)[1]) for c = 0, d = -2");

  const HChern flat = HChern::p3(2, 0, -1);
  for (const auto& beta : {R(-1), R(1)}) {
    s.add(beta.sign() < 0 ? "nu_at_minus_1" : "nu_at_plus_1", {},
          Scalar::scalar(tilt_slope(flat, TiltPoint{beta, 0}, true).value()), Scalar::scalar(0),
          "nu_{0,+-1}(E) = 0 for (2, 0, -1)");
  }
  for (const auto& ch3 : s.values("e", {R(-1), R(0), R(1)})) {
    s.add("twist_c0_d1", {{"e", ch3}}, Scalar::tuple(twist(HChern::p3(2, 0, -1, ch3), -1).comps()),
          Scalar::tuple({2, 2, 0, ch3 - R(2, 3)}), "ch^{-1}(E) = (2, 2, 0, e - 2/3)");
    s.add("twist_c0_d2", {{"e", ch3}}, Scalar::tuple(twist(HChern::p3(2, 0, -2, ch3), -1).comps()),
          Scalar::tuple({2, 2, -1, ch3 - R(5, 3)}), "ch^{-1}(E) = (2, 2, -1, e - 5/3)");
  }
}

void v17(Session& s) {
  struct Shape {
    R c, d;
  };
  const std::vector<Shape> shapes = {{0, 0}, {0, -1}, {0, -2}, {-1, R(-1, 2)}, {-1, R(-3, 2)}};
  for (const auto& shape : shapes) {
    const R bound = cf::rank_two_table(shape.c, shape.d);
    const HChern probe = HChern::p3(2, shape.c, shape.d, bound);
    s.add("bound", {{"c", shape.c}, {"d", shape.d}}, Scalar::scalar(rank_two_bound(probe).bound),
          Scalar::scalar(bound), "rank two bound table");
    s.add("bound_rank_minus_two", {{"c", shape.c}, {"d", -shape.d}},
          Scalar::scalar(rank_minus_two_bound(HChern::p3(-2, shape.c, -shape.d, bound)).bound),
          Scalar::scalar(bound), "rank -2 bound table");
    std::vector<R> es;
    for (long k = -6; k <= 6; ++k) es.push_back(bound + R(k, 6));
    for (const auto& e : s.values("e", es)) {
      const HChern v = HChern::p3(2, shape.c, shape.d, e);
      const std::vector<std::pair<std::string, R>> params = {{"c", shape.c}, {"d", shape.d}, {"e", e}};
      if (shape.c.is_zero() && shape.d.is_zero()) {
        s.add("q_equivalence", params, Scalar::boolean(q_form(v, TiltPoint{R(-1, 2), 1}).sign() >= 0),
              Scalar::boolean(e <= bound), "Q >= 0 iff e <= 0");
      } else {
        s.add("chi_equivalence", params, Scalar::boolean(euler_char_p3(v).sign() <= 0),
              Scalar::boolean(e <= bound), "bound equivalent to chi(E) <= 0");
      }
    }
  }
}

struct RegistryItem {
  LedgerRecord record;
  void (*run)(Session&);
};

const std::vector<RegistryItem>& registry() {
  static const std::vector<RegistryItem> items = {
      {{"V1", "pushforward of (2, -H, e)"}, v1},
      {{"V2", "pushforward of (2, 0, e)"}, v2},
      {{"V3", "pushforward of (2, xH, zH^2) on a degree-c surface"}, v3},
      {{"V4", "rho_Q^2 chain for (2, -H, e)"}, v4},
      {{"V5", "rho_Q^2 chain for (2, 0, e)"}, v5},
      {{"V6", "Q_{0,-1} = Q_{0,-d} for (2, -H, e)"}, v6},
      {{"V7", "Q_{0,-1} = Q_{0,-d+1} for (2, 0, e)"}, v7},
      {{"V8", "rank one radii and admissibility"}, v8},
      {{"V9", "centers against twisted structure sheaves"}, v9},
      {{"V10", "Q_{0,-1/2} for (2, 0, e), d >= 6"}, v10},
      {{"V11", "degree five elimination"}, v11},
      {{"V12", "Bogomolov witness on a hypersurface"}, v12},
      {{"V13", "rank four exclusion on the surface"}, v13},
      {{"V14", "rank two subobjects for (2, -H, e)"}, v14},
      {{"V15", "rank two subobjects for (2, 0, e)"}, v15},
      {{"V16", "rank two bounds on P^3: wall data"}, v16},
      {{"V17", "rank two bounds on P^3: chi equivalence"}, v17},
  };
  return items;
}

}  // namespace

const std::vector<LedgerRecord>& ledger_registry() {
  static const std::vector<LedgerRecord> records = [] {
    std::vector<LedgerRecord> out;
    for (const auto& item : registry()) out.push_back(item.record);
    return out;
  }();
  return records;
}

std::vector<LedgerEntry> run_ledger(const std::optional<std::string>& filter,
                                    const LedgerOverrides& overrides) {
  for (const auto& [name, values] : overrides) {
    if (!known_params().count(name)) throw ParseError("unknown ledger parameter '" + name + "'");
    if (values.empty()) throw ParseError("no values for ledger parameter '" + name + "'");
  }
  std::vector<const RegistryItem*> selected;
  for (const auto& item : registry()) {
    if (!filter || ledger_filter_matches(*filter, item.record.id)) selected.push_back(&item);
  }
  if (selected.empty()) throw ParseError("no ledger entry matches '" + filter.value_or("") + "'");

  std::vector<std::future<std::vector<LedgerEntry>>> jobs;
  jobs.reserve(selected.size());
  for (const auto* item : selected) {
    jobs.push_back(std::async(std::launch::async, [item, &overrides] {
      Session session(item->record.id, overrides);
      item->run(session);
      return session.take();
    }));
  }
  std::vector<LedgerEntry> out;
  std::exception_ptr failure;
  for (auto& job : jobs) {
    try {
      auto part = job.get();
      std::move(part.begin(), part.end(), std::back_inserter(out));
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace tiltwall
