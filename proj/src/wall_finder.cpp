#include "tiltwall/wall_finder.hpp"

#include <algorithm>
#include <charconv>
#include <future>
#include <thread>

#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

// Everything about v the per-candidate predicate needs, computed once.
struct Target {
  HChern v;  // truncated
  Rational v0, v1, v2;
  Rational delta_v;
  Rational floor;  // max(rho_sq_min, rho_Q^2)
  std::optional<Rational> ceiling;
  WallConstraints cons;
};

Target make_target(const HChern& v_in, const WallConstraints& cons) {
  if (!v_in.space().is_p3()) throw DomainError("wall enumeration works on P^3 classes");
  if (cons.rho_sq_min.sign() < 0) throw DomainError("rho_sq_min must be >= 0");
  if (cons.rank_max && *cons.rank_max < 0) throw DomainError("rank_max must be >= 0");
  Target t{v_in.truncated(), v_in[0], v_in[1], v_in[2], delta(v_in), cons.rho_sq_min, std::nullopt, cons};
  if (t.delta_v.sign() < 0) throw DomainError("Delta(v) < 0: no semistable objects to destabilize");
  if (cons.use_q_wall_floor) {
    if (!v_in.has_ch3()) throw DomainError("the Q-wall floor needs ch3 of v");
    const auto wq = wall_q(v_in);
    if (!wq || !wq->is_semicircle()) throw DomainError("v has no semicircular Q-wall");
    t.floor = std::max(t.floor, wq->radius_sq());
  }
  if (cons.torsion_rank_two_ceiling) {
    if (!t.v0.is_zero() || t.v1.sign() <= 0) {
      throw DomainError("the rank-two ceiling applies to classes (0, 2c, ...) with c > 0");
    }
    t.ceiling = square(t.v1) / Rational(16);
  }
  if (cons.rank0_line_bundle_filter && (!t.v0.is_zero() || t.v1.sign() <= 0)) {
    throw DomainError("the line bundle filter applies to classes (0, 2c, ...) with c > 0");
  }
  return t;
}

bool positive_on_interval(const Rational& a, const Rational& b, const Wall& wall, bool strict) {
  // a - b beta over [s - rho, s + rho]: positive at s and |a - b s| against |b| rho.
  const Rational t = a - b * wall.center();
  if (t.sign() <= 0) return false;
  const Rational lhs = square(t);
  const Rational rhs = square(b) * wall.radius_sq();
  return strict ? lhs > rhs : lhs >= rhs;
}

std::optional<CandidateWall> evaluate(const Target& t, const HChern& w) {
  const Rational& r = w[0];
  const Rational& c = w[1];
  const Rational& x = w[2];
  std::vector<std::pair<std::string, bool>> checks;
  checks.reserve(12);

  if (t.cons.ch2_parity) {
    if (!(x - square(c) / Rational(2)).is_integer()) return std::nullopt;
    checks.emplace_back("ch2_parity", true);
  }
  const Rational qr = t.v0 - r;
  if (t.cons.rank_max) {
    const Rational bound(*t.cons.rank_max);
    if (r.abs() > bound || qr.abs() > bound) return std::nullopt;
    checks.emplace_back("rank_max", true);
  }

  const Rational delta_w = square(c) - Rational(2) * r * x;
  if (delta_w.sign() < 0) return std::nullopt;
  const Rational qc = t.v1 - c;
  const Rational delta_q = square(qc) - Rational(2) * qr * (t.v2 - x);
  if (delta_q.sign() < 0) return std::nullopt;
  if (delta_w + delta_q > t.delta_v) return std::nullopt;

  auto wall = wall_between(t.v, w);
  if (!wall || !wall->is_semicircle()) return std::nullopt;
  checks.emplace_back("semicircle", true);
  const Rational& rsq = wall->radius_sq();
  if (rsq < t.floor) return std::nullopt;
  checks.emplace_back("radius_floor", true);
  if (t.ceiling) {
    if (rsq > *t.ceiling) return std::nullopt;
    checks.emplace_back("radius_ceiling", true);
  }
  checks.emplace_back("bogomolov_sub", true);
  checks.emplace_back("bogomolov_quotient", true);
  checks.emplace_back("discriminant_sum", true);

  // Rank bound from the radius floor; a negative-rank subobject is bounded through its quotient.
  if (t.v0.sign() >= 0) {
    std::optional<Rational> big;
    if (r > t.v0) big = r;
    else if (r.sign() < 0) big = qr;
    if (big && rsq > higher_rank_radius_bound(t.v, *big)) return std::nullopt;
    checks.emplace_back("rank_bound", true);
  }

  const bool strict = t.cons.strict_interval_positivity;
  if (!positive_on_interval(c, r, *wall, strict)) return std::nullopt;
  checks.emplace_back("positivity_sub", true);
  if (!positive_on_interval(qc, qr, *wall, strict)) return std::nullopt;
  checks.emplace_back("positivity_quotient", true);

  if (t.cons.rank0_line_bundle_filter) {
    if (r == Rational(1) && !rank_one_admissibility(t.v, w).admissible) return std::nullopt;
    if (qr == Rational(1) && !rank_one_admissibility(t.v, t.v - w).admissible) return std::nullopt;
    checks.emplace_back("line_bundle_filter", true);
  }
  return CandidateWall{std::move(*wall), w, std::move(checks)};
}

bool canonical_less(const CandidateWall& a, const CandidateWall& b) {
  const auto& ra = a.wall.radius_sq();
  const auto& rb = b.wall.radius_sq();
  if (ra != rb) return ra > rb;
  if (a.wall.center() != b.wall.center()) return a.wall.center() < b.wall.center();
  for (std::size_t i = 0; i < 3; ++i) {
    if (a.subclass[i] != b.subclass[i]) return a.subclass[i] < b.subclass[i];
  }
  return false;
}

void canonical_sort(std::vector<CandidateWall>& walls) {
  std::sort(walls.begin(), walls.end(), canonical_less);
}

// Rational bracket lo <= sqrt(q) <= hi of width 2^-20.
std::pair<Rational, Rational> sqrt_bracket(const Rational& q) {
  const mpz_class scale = mpz_class(1) << 20;
  const mpz_class scale_sq = scale * scale;
  const mpz_class scaled = (q * Rational(scale_sq)).floor();
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  return {Rational(root, scale), Rational(root + 1, scale)};
}

// A beta-interval [lo, hi] containing a point that lies in the closed
// interval of every wall in one family with radius^2 >= floor.
struct Anchor {
  Rational lo, hi;
};

std::vector<Anchor> family_anchors(const Target& t) {
  if (t.v0.is_zero()) {
    const Rational s = t.v2 / t.v1;
    return {{s, s}};
  }
  // Walls of v are nested on each side of the hyperbola: rho^2 = (s - mu)^2 - Delta/v0^2.
  const Rational mu = t.v1 / t.v0;
  const auto [lo, hi] = sqrt_bracket(t.floor + t.delta_v / square(t.v0));
  return {{mu - hi, mu - lo}, {mu + lo, mu + hi}};
}

std::vector<long> rank_range(const Target& t) {
  const auto& cons = t.cons;
  const bool bounded_by_floor = t.floor.sign() > 0 && t.v0.sign() >= 0;
  if (!bounded_by_floor && !cons.rank_max) {
    throw DomainError(t.v0.sign() < 0
                          ? "negative-rank classes need an explicit rank_max"
                          : "infinite search: set rho_sq_min > 0 or rank_max");
  }
  if (!t.v0.is_integer()) throw DomainError("ch0 of v must be an integer");
  const long v0 = t.v0.numerator().get_si();
  auto admissible = [&](long r) {
    if (cons.rank_max && (std::labs(r) > *cons.rank_max || std::labs(v0 - r) > *cons.rank_max)) {
      return false;
    }
    if (!bounded_by_floor) return true;
    // 4 rA (rA - v0) floor <= Delta for the bigger of sub and quotient.
    const long big = r > v0 ? r : (r < 0 ? v0 - r : 0);
    if (big == 0) return true;
    return Rational(4) * Rational(big) * Rational(big - v0) * t.floor <= t.delta_v;
  };
  std::vector<long> out;
  const long lo_start = std::min(0L, v0);
  const long hi_start = std::max(0L, v0);
  for (long r = lo_start; r <= hi_start; ++r) {
    if (admissible(r)) out.push_back(r);
  }
  for (long r = hi_start + 1; admissible(r); ++r) out.push_back(r);
  for (long r = lo_start - 1; admissible(r); --r) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

// Interval of x allowed by the three linear discriminant constraints.
std::optional<std::pair<mpz_class, mpz_class>> x2_range(const Target& t, const Rational& r,
                                                        const Rational& c) {
  const Rational qr = t.v0 - r;
  const Rational qc = t.v1 - c;
  const std::array<std::pair<Rational, Rational>, 3> lines = {{
      {Rational(-2) * r, square(c)},
      {Rational(2) * qr, square(qc) - Rational(2) * qr * t.v2},
      {Rational(4) * r - Rational(2) * t.v0,
       t.delta_v - square(c) - square(qc) + Rational(2) * qr * t.v2},
  }};
  std::optional<Rational> lo, hi;
  for (const auto& [a, b] : lines) {
    if (a.is_zero()) {
      if (b.sign() < 0) return std::nullopt;
      continue;
    }
    const Rational root = -b / a;
    if (a.sign() > 0) lo = lo ? std::max(*lo, root) : root;
    else hi = hi ? std::min(*hi, root) : root;
  }
  if (!lo || !hi) throw DomainError("unbounded ch2 range");
  mpz_class a = Rational(Rational(2) * *lo).ceil();
  mpz_class b = Rational(Rational(2) * *hi).floor();
  if (a > b) return std::nullopt;
  return std::make_pair(std::move(a), std::move(b));
}

std::vector<CandidateWall> scan_rank(const Target& t, long rank,
                                     const std::vector<Anchor>& anchors) {
  std::vector<CandidateWall> out;
  const Rational r(rank);
  const Rational qr = t.v0 - r;
  if (r.is_zero() && t.v0.is_zero()) return out;  // kappa = 0 for every such class
  // c - r p >= 0 and (v1 - c) - (v0 - r) p >= 0 at an anchor p.
  std::optional<mpz_class> c_lo, c_hi;
  for (const auto& anchor : anchors) {
    const mpz_class lo = std::min(r * anchor.lo, r * anchor.hi).ceil();
    const mpz_class hi = (t.v1 - std::min(qr * anchor.lo, qr * anchor.hi)).floor();
    c_lo = c_lo ? std::min(*c_lo, lo) : lo;
    c_hi = c_hi ? std::max(*c_hi, hi) : hi;
  }
  for (mpz_class c = *c_lo; c <= *c_hi; ++c) {
    const Rational cr(c);
    const auto range = x2_range(t, r, cr);
    if (!range) continue;
    for (mpz_class x2 = range->first; x2 <= range->second; ++x2) {
      if (auto cand = evaluate(t, HChern::p3(r, cr, Rational(x2, mpz_class(2))))) {
        out.push_back(std::move(*cand));
      }
    }
  }
  return out;
}

}  // namespace

bool SearchBox::contains(const HChern& w) const {
  if (!w[0].is_integer() || !w[1].is_integer()) return false;
  const Rational x2 = Rational(2) * w[2];
  if (!x2.is_integer()) return false;
  return Rational(r_lo) <= w[0] && w[0] <= Rational(r_hi) && Rational(c_lo) <= w[1] &&
         w[1] <= Rational(c_hi) && Rational(x2_lo) <= x2 && x2 <= Rational(x2_hi);
}

SearchBox SearchBox::parse(std::string_view text) {
  SearchBox box;
  bool seen[3] = {false, false, false};
  auto parse_long = [&](std::string_view s) {
    long value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
      throw ParseError("bad integer '" + std::string(s) + "' in box");
    }
    return value;
  };
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
    const auto eq = item.find('=');
    const auto dots = item.find("..");
    if (eq == std::string_view::npos || dots == std::string_view::npos || dots < eq) {
      throw ParseError("box items look like r=a..b, got '" + std::string(item) + "'");
    }
    const auto key = item.substr(0, eq);
    const long lo = parse_long(item.substr(eq + 1, dots - eq - 1));
    const long hi = parse_long(item.substr(dots + 2));
    int slot = -1;
    if (key == "r") { box.r_lo = lo; box.r_hi = hi; slot = 0; }
    else if (key == "c") { box.c_lo = lo; box.c_hi = hi; slot = 1; }
    else if (key == "x2") { box.x2_lo = lo; box.x2_hi = hi; slot = 2; }
    else throw ParseError("unknown box key '" + std::string(key) + "'");
    if (seen[slot]) throw ParseError("duplicate box key '" + std::string(key) + "'");
    seen[slot] = true;
  }
  if (!(seen[0] && seen[1] && seen[2])) throw ParseError("box needs r, c and x2 ranges");
  return box;
}

std::vector<CandidateWall> enumerate_walls(const HChern& v, const WallConstraints& cons) {
  const Target t = make_target(v, cons);
  if (t.delta_v.is_zero()) return {};
  const auto ranks = rank_range(t);
  const auto anchors = family_anchors(t);

  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(cons.threads, ranks.size()));
  std::vector<CandidateWall> out;
  if (workers == 1) {
    for (long r : ranks) {
      auto part = scan_rank(t, r, anchors);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
  } else {
    std::vector<std::future<std::vector<CandidateWall>>> jobs;
    for (std::size_t k = 0; k < workers; ++k) {
      jobs.push_back(std::async(std::launch::async, [&, k] {
        std::vector<CandidateWall> mine;
        for (std::size_t i = k; i < ranks.size(); i += workers) {
          auto part = scan_rank(t, ranks[i], anchors);
          std::move(part.begin(), part.end(), std::back_inserter(mine));
        }
        return mine;
      }));
    }
    for (auto& job : jobs) {
      auto part = job.get();
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
  }
  canonical_sort(out);
  return out;
}

std::vector<CandidateWall> enumerate_walls_torsion(const HChern& v, const WallConstraints& cons) {
  if (!v[0].is_zero()) throw DomainError("torsion enumeration needs e0 = 0");
  if (v[1].sign() <= 0) throw DomainError("torsion enumeration needs e1 > 0");
  return enumerate_walls(v, cons);
}

std::vector<CandidateWall> brute_force_walls(const HChern& v, const SearchBox& box,
                                             const WallConstraints& cons) {
  const Target t = make_target(v, cons);
  std::vector<CandidateWall> out;
  if (t.delta_v.is_zero() || box.empty()) return out;
  for (long r = box.r_lo; r <= box.r_hi; ++r) {
    for (long c = box.c_lo; c <= box.c_hi; ++c) {
      for (long x2 = box.x2_lo; x2 <= box.x2_hi; ++x2) {
        if (auto cand = evaluate(t, HChern::p3(r, c, Rational(x2, 2)))) {
          out.push_back(std::move(*cand));
        }
      }
    }
  }
  canonical_sort(out);
  return out;
}

std::vector<CandidateWall> restrict_to_box(const std::vector<CandidateWall>& walls,
                                           const SearchBox& box) {
  std::vector<CandidateWall> out;
  std::copy_if(walls.begin(), walls.end(), std::back_inserter(out),
               [&](const CandidateWall& w) { return box.contains(w.subclass); });
  return out;
}

std::vector<WallGroup> group_by_wall(const std::vector<CandidateWall>& walls) {
  std::vector<WallGroup> out;
  for (const auto& cand : walls) {
    if (out.empty() || !out.back().wall.same_locus(cand.wall)) {
      out.push_back({cand.wall, {}});
    }
    out.back().classes.push_back(cand.subclass);
  }
  return out;
}

RankOneAdmissibility rank_one_admissibility(const HChern& v, const HChern& w) {
  if (!v.space().is_p3() || !w.space().is_p3()) throw DomainError("rank-one comparison lives on P^3");
  if (!v[0].is_zero() || v[1].sign() <= 0) throw DomainError("v must look like (0, 2c, d) with c > 0");
  if (w[0] != Rational(1)) throw DomainError("w must have rank one");
  const Rational c = v[1] / Rational(2);
  const Rational& d = v[2];
  RankOneAdmissibility out;
  out.x = w[1];
  out.y = square(out.x) / Rational(2) - w[2];
  out.y_lower_bound = -square(c) / Rational(2) + c * out.x - d / Rational(2);
  const Rational shift = out.x - c;
  const HChern line = HChern::p3(1, shift, square(shift) / Rational(2));
  out.rho_sq_sub = wall_data(v, w.truncated()).radius_sq();
  out.rho_sq_line_bundle = wall_data(v, line).radius_sq();
  out.sub_wall = wall_between(v, w);
  out.line_bundle_wall = wall_between(v, line);
  out.admissible = out.rho_sq_sub <= out.rho_sq_line_bundle;
  if (out.sub_wall && out.line_bundle_wall) {
    out.relation = wall_compare(*out.sub_wall, *out.line_bundle_wall);
  }
  return out;
}

}  // namespace tiltwall
