#include "tiltwall/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "tiltwall/chern_lattice.hpp"
#include "tiltwall/errors.hpp"
#include "tiltwall/ledger.hpp"
#include "tiltwall/serialize.hpp"
#include "tiltwall/stability_bounds.hpp"
#include "tiltwall/surface_push.hpp"
#include "tiltwall/svg.hpp"
#include "tiltwall/tilt_geometry.hpp"
#include "tiltwall/wall_finder.hpp"

namespace tiltwall {

namespace {

// Raw flag values; everything is parsed into exact types after CLI11 is done.
struct Flags {
  std::string space = "p3";
  std::string v;
  std::string w;
  std::string beta;
  long k = 0;
  std::string at;
  std::string surface;
  std::string chs;
  std::string input = "plain";
  std::string c1;
  bool json = false;

  // walls enum
  std::string rho_min = "0";
  bool q_floor = false;
  bool torsion_rank2 = false;
  bool strict_endpoints = false;
  bool parity = false;
  bool line_bundle_filter = false;
  std::optional<long> rank_max;
  std::string box;
  unsigned threads = 1;

  // ledger run
  std::optional<std::string> filter;
  std::vector<std::string> params;
  bool verbose = false;

  // plot
  std::string spec_file;
  std::string out_file;
  std::vector<std::string> wall_specs;
  std::vector<std::string> marks;
  std::string beta_range;
  std::string alpha_max;
  bool q_wall = false;
};

HChern parse_class(const std::string& text, const std::string& space, const char* flag) {
  if (text.empty()) throw ParseError(std::string("missing --") + flag);
  return HChern::parse(text, Space::parse(space));
}

std::pair<Rational, Rational> parse_pair(const std::string& text, const char* sep) {
  const auto pos = text.find(sep);
  if (pos == std::string::npos) throw ParseError("expected 'a" + std::string(sep) + "b', got '" + text + "'");
  return {Rational::parse(text.substr(0, pos)), Rational::parse(text.substr(pos + std::string(sep).size()))};
}

void print_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

std::string wall_line(const Wall& wall) {
  if (!wall.is_semicircle()) return "vertical beta = " + wall.center().str();
  return "semicircle s = " + wall.center().str() + ", rho^2 = " + wall.radius_sq().str();
}

void emit_wall(std::ostream& out, const std::optional<Wall>& wall, bool json) {
  if (json) {
    print_json(out, envelope("wall", wall ? Json(*wall) : Json(nullptr)));
    return;
  }
  out << (wall ? wall_line(*wall) : std::string("no wall")) << '\n';
  if (wall && wall->is_semicircle()) {
    // Endpoints are only printed when they are rational.
    if (const auto r = exact_sqrt(wall->radius_sq())) {
      out << "endpoints " << (wall->center() - *r).str() << ", " << (wall->center() + *r).str() << '\n';
    }
  }
}

void emit_class(std::ostream& out, const HChern& v, bool json) {
  if (json) print_json(out, envelope("class", v));
  else out << v.str() << '\n';
}

void emit_rational(std::ostream& out, const char* key, const Rational& r, bool json) {
  if (json) print_json(out, envelope(key, r));
  else out << r.str() << '\n';
}

void emit_verdict(std::ostream& out, const BoundVerdict& b, bool json) {
  if (json) {
    print_json(out, envelope("verdict", b));
    return;
  }
  out << "admissible " << (b.admissible ? "yes" : "no") << '\n'
      << "binding " << to_string(b.binding) << '\n'
      << "bound " << b.bound.str() << '\n'
      << "extremal " << (b.extremal ? "yes" : "no") << '\n';
  if (b.extremal_note) out << "note " << *b.extremal_note << '\n';
}

WallConstraints constraints(const Flags& f) {
  WallConstraints cons;
  cons.rho_sq_min = Rational::parse(f.rho_min);
  cons.rank_max = f.rank_max;
  cons.use_q_wall_floor = f.q_floor;
  cons.strict_interval_positivity = f.strict_endpoints;
  cons.rank0_line_bundle_filter = f.line_bundle_filter;
  cons.torsion_rank_two_ceiling = f.torsion_rank2;
  cons.ch2_parity = f.parity;
  cons.threads = std::max(1u, f.threads);
  return cons;
}

int run_walls(const Flags& f, std::ostream& out) {
  const HChern v = parse_class(f.v, f.space, "class");
  const WallConstraints cons = constraints(f);
  const auto cands = f.box.empty() ? enumerate_walls(v, cons) : brute_force_walls(v, SearchBox::parse(f.box), cons);
  const auto groups = group_by_wall(cands);
  if (f.json) {
    Json doc = envelope("class", v);
    doc["candidates"] = cands;
    doc["groups"] = groups;
    print_json(out, doc);
    return kExitOk;
  }
  out << groups.size() << " walls, " << cands.size() << " classes\n";
  for (const auto& g : groups) {
    out << wall_line(g.wall) << '\n';
    for (const auto& c : g.classes) out << "  " << c.str() << '\n';
  }
  return kExitOk;
}

int run_ledger_cmd(const Flags& f, std::ostream& out) {
  LedgerOverrides overrides;
  for (const auto& p : f.params) add_ledger_override(overrides, p);
  const auto entries = run_ledger(f.filter, overrides);
  const auto failed = std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; });
  if (f.json) {
    Json doc = envelope("entries", entries);
    doc["total"] = entries.size();
    doc["failed"] = failed;
    print_json(out, doc);
  } else {
    std::map<std::string, std::pair<long, long>> tally;
    std::vector<std::string> order;
    for (const auto& e : entries) {
      auto [it, fresh] = tally.try_emplace(e.id, 0, 0);
      if (fresh) order.push_back(e.id);
      ++it->second.first;
      if (e.pass) ++it->second.second;
      if (!e.pass || f.verbose) {
        out << (e.pass ? "pass " : "FAIL ") << e.name;
        for (const auto& [name, value] : e.params) out << ' ' << name << '=' << value.str();
        out << "  computed " << e.computed.str() << " expected " << e.expected.str() << '\n';
      }
    }
    for (const auto& id : order) {
      const auto [total, passed] = tally[id];
      out << id << ' ' << passed << '/' << total << '\n';
    }
    out << "total " << entries.size() << ", failed " << failed << '\n';
  }
  return failed == 0 ? kExitOk : kExitLedger;
}

// Integer box around every wall so the default window shows all arcs.
PlotSpec default_window(PlotSpec spec) {
  std::optional<Rational> lo;
  std::optional<Rational> hi;
  Rational top(1);
  auto widen = [&](const Rational& a, const Rational& b) {
    if (!lo || a < *lo) lo = a;
    if (!hi || b > *hi) hi = b;
  };
  std::vector<Wall> all = spec.walls;
  if (spec.q_wall) all.push_back(*spec.q_wall);
  for (const auto& wall : all) {
    if (!wall.is_semicircle()) {
      widen(wall.center() - 1, wall.center() + 1);
      continue;
    }
    mpz_class r;
    const mpz_class ceil_sq = wall.radius_sq().ceil();
    mpz_sqrt(r.get_mpz_t(), ceil_sq.get_mpz_t());
    r += 1;
    widen(Rational(mpz_class(wall.center().floor() - r)), Rational(mpz_class(wall.center().ceil() + r)));
    if (Rational(r) > top) top = Rational(r);
  }
  for (const auto& m : spec.marks) {
    widen(Rational(mpz_class(m.beta.floor() - 1)), Rational(mpz_class(m.beta.ceil() + 1)));
    if (m.alpha >= top) top = Rational(mpz_class(m.alpha.floor() + 1));
  }
  if (!lo) {
    lo = Rational(-1);
    hi = Rational(1);
  }
  spec.beta_range = {*lo, *hi};
  spec.alpha_max = top;
  return spec;
}

int run_plot(const Flags& f, std::ostream& out) {
  PlotSpec spec;
  if (!f.spec_file.empty()) {
    std::ifstream in(f.spec_file);
    if (!in) throw ParseError("cannot read " + f.spec_file);
    std::stringstream buf;
    buf << in.rdbuf();
    spec = plot_spec_from_json(open_envelope(parse_json(buf.str()), "plot"));
  } else {
    if (!f.v.empty()) {
      const HChern v = parse_class(f.v, f.space, "class");
      for (const auto& g : group_by_wall(enumerate_walls(v, constraints(f)))) spec.walls.push_back(g.wall);
      if (f.q_wall) spec.q_wall = wall_q(v);
    }
    for (const auto& text : f.wall_specs) {
      const auto [s, rsq] = parse_pair(text, ":");
      spec.walls.push_back(Wall::from_center_radius(s, rsq));
    }
    for (const auto& text : f.marks) {
      const auto [beta, alpha] = parse_pair(text, ",");
      spec.marks.push_back(TiltPoint{beta, alpha});
    }
    spec = default_window(std::move(spec));
  }
  if (!f.beta_range.empty()) spec.beta_range = parse_pair(f.beta_range, "..");
  if (!f.alpha_max.empty()) spec.alpha_max = Rational::parse(f.alpha_max);
  validate(spec);
  if (f.json) {
    print_json(out, envelope("plot", spec));
    return kExitOk;
  }
  const std::string svg = render_svg(spec);
  if (f.out_file.empty()) {
    out << svg;
  } else {
    std::ofstream file(f.out_file, std::ios::binary);
    if (!file) throw DomainError("cannot write " + f.out_file);
    file << svg;
  }
  return kExitOk;
}

CLI::Option* add_space(CLI::App* cmd, Flags& f) {
  return cmd->add_option("--space", f.space, "Ambient space: p3 or surface:d=<int>")->capture_default_str();
}

void add_json(CLI::App* cmd, Flags& f) { cmd->add_flag("--json", f.json, "Emit versioned JSON"); }

void add_constraint_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--rho-min", f.rho_min, "Radius^2 floor a/b")->capture_default_str();
  cmd->add_flag("--q-floor", f.q_floor, "Raise the floor to the radius^2 of W_Q (class needs ch3)");
  cmd->add_flag("--torsion-rank2", f.torsion_rank2, "Radius^2 <= c^2/4 ceiling for v = (0, 2c, d)");
  cmd->add_flag("--strict-endpoints", f.strict_endpoints, "Strict ch1 positivity at the wall's endpoints");
  cmd->add_flag("--parity", f.parity, "Integral ch2 lattice (2 ch2 = ch1^2 mod 2)");
  cmd->add_flag("--line-bundle-filter", f.line_bundle_filter, "Rank-one pieces inside W(v, O(ch1 - c))");
  cmd->add_option("--rank-max", f.rank_max, "Bound |ch0| of the sub and the quotient");
  cmd->add_option("--threads", f.threads, "Worker threads")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Exact wall-crossing computations in tilt stability on P^3 and its surfaces", "tiltwall"};
  app.require_subcommand(1);

  auto* twist_cmd = app.add_subcommand("twist", "ch^beta = e^{-beta H} ch");
  add_space(twist_cmd, f);
  twist_cmd->add_option("--v", f.v, "Class e0,e1,...")->required();
  twist_cmd->add_option("--beta", f.beta, "Twist parameter a/b")->required();
  add_json(twist_cmd, f);

  auto* tensor_cmd = app.add_subcommand("tensor", "ch(E(k))");
  add_space(tensor_cmd, f);
  tensor_cmd->add_option("--v", f.v, "Class e0,e1,...")->required();
  tensor_cmd->add_option("--k", f.k, "Integer twist")->required();
  add_json(tensor_cmd, f);

  auto* dual_cmd = app.add_subcommand("dual", "Numerical derived dual shifted by one, on P^3");
  dual_cmd->add_option("--v", f.v, "Class e0,e1,e2,e3")->required();
  add_json(dual_cmd, f);

  auto* delta_cmd = app.add_subcommand("delta", "Discriminant e1^2 - 2 e0 e2");
  add_space(delta_cmd, f);
  delta_cmd->add_option("--v", f.v, "Class e0,e1,...")->required();
  add_json(delta_cmd, f);

  auto* chi_cmd = app.add_subcommand("chi", "Euler characteristic by Riemann-Roch");
  add_space(chi_cmd, f);
  chi_cmd->add_option("--v", f.v, "Class (H-coordinates)")->required();
  add_json(chi_cmd, f);

  auto* hilb_cmd = app.add_subcommand("hilb", "Hilbert polynomial m -> chi(E(m)) on P^3");
  hilb_cmd->add_option("--v", f.v, "Class e0,e1,e2,e3")->required();
  add_json(hilb_cmd, f);

  auto* wall_cmd = app.add_subcommand("wall", "Numerical wall W(v, w)");
  add_space(wall_cmd, f);
  wall_cmd->add_option("--v", f.v, "Class e0,e1,e2[,e3]")->required();
  wall_cmd->add_option("--w", f.w, "Class e0,e1,e2[,e3]")->required();
  add_json(wall_cmd, f);

  auto* wallq_cmd = app.add_subcommand("wallq", "W_Q = W(v, (e1, 2 e2, 3 e3))");
  add_space(wallq_cmd, f);
  wallq_cmd->add_option("--v", f.v, "Class e0,e1,e2,e3")->required();
  add_json(wallq_cmd, f);

  auto* qform_cmd = app.add_subcommand("qform", "Q form at (beta, alpha), alpha >= 0");
  add_space(qform_cmd, f);
  qform_cmd->add_option("--v", f.v, "Class e0,e1,e2,e3")->required();
  qform_cmd->add_option("--at", f.at, "Point beta,alpha")->required();
  add_json(qform_cmd, f);

  auto* push_cmd = app.add_subcommand("push", "Chern character of i_* E on P^3 for E on a surface");
  push_cmd->add_option("--surface", f.surface, "Surface degree, d=<int>")->required();
  push_cmd->add_option("--chS", f.chs, "ch_S(E) as r,c1,ch2")->required();
  push_cmd->add_option("--input", f.input, "plain: (r, aH, e); h: H-coordinates; hpow: (r, xH, zH^2)")
      ->capture_default_str();
  add_json(push_cmd, f);

  auto* bounds_cmd = app.add_subcommand("bounds", "ch3 bounds for rank 1 and 2, or the surface discriminant bound");
  bounds_cmd->add_option("--v", f.v, "Class e0,e1,e2,e3 on P^3");
  bounds_cmd->add_option("--surface", f.surface, "Surface degree d=<int>, with --c1");
  bounds_cmd->add_option("--c1", f.c1, "minus_h or zero");
  add_json(bounds_cmd, f);

  auto* walls_cmd = app.add_subcommand("walls", "Wall enumeration");
  walls_cmd->require_subcommand(1);
  auto* enum_cmd = walls_cmd->add_subcommand("enum", "All numerical walls surviving the constraints");
  enum_cmd->add_option("--class", f.v, "Class e0,e1,e2[,e3] on P^3")->required();
  add_space(enum_cmd, f);
  add_constraint_flags(enum_cmd, f);
  enum_cmd->add_option("--box", f.box, "Brute-force search box r=a..b,c=a..b,x2=a..b");
  add_json(enum_cmd, f);

  auto* ledger_cmd = app.add_subcommand("ledger", "Numerical identity ledger");
  ledger_cmd->require_subcommand(1);
  auto* run_cmd = ledger_cmd->add_subcommand("run", "Run the ledger; exit 3 when an entry fails");
  run_cmd->add_option("--filter", f.filter, "Glob over entry ids, e.g. V1*");
  run_cmd->add_option("--param", f.params, "Override samples, name=v1,v2 (repeatable)");
  run_cmd->add_flag("--verbose", f.verbose, "Print every entry");
  add_json(run_cmd, f);

  auto* plot_cmd = app.add_subcommand("plot", "SVG diagram of walls in the (beta, alpha) half-plane");
  plot_cmd->add_option("--spec", f.spec_file, "Plot spec JSON file");
  plot_cmd->add_option("--class", f.v, "Draw the walls enumerated for this class");
  add_space(plot_cmd, f);
  add_constraint_flags(plot_cmd, f);
  plot_cmd->add_flag("--q-wall", f.q_wall, "Also draw W_Q of --class, dashed");
  plot_cmd->add_option("--wall", f.wall_specs, "Semicircle s:rho^2 (repeatable)");
  plot_cmd->add_option("--mark", f.marks, "Point beta,alpha (repeatable)");
  plot_cmd->add_option("--beta-range", f.beta_range, "Window a..b");
  plot_cmd->add_option("--alpha-max", f.alpha_max, "Window height");
  plot_cmd->add_option("-o,--out", f.out_file, "Write the SVG here instead of stdout");
  add_json(plot_cmd, f);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (twist_cmd->parsed()) {
      emit_class(out, twist(parse_class(f.v, f.space, "v"), Rational::parse(f.beta)), f.json);
    } else if (tensor_cmd->parsed()) {
      emit_class(out, tensor_line_bundle(parse_class(f.v, f.space, "v"), f.k), f.json);
    } else if (dual_cmd->parsed()) {
      emit_class(out, shifted_dual(parse_class(f.v, "p3", "v")), f.json);
    } else if (delta_cmd->parsed()) {
      emit_rational(out, "delta", delta(parse_class(f.v, f.space, "v")), f.json);
    } else if (chi_cmd->parsed()) {
      const HChern v = parse_class(f.v, f.space, "v");
      const Rational chi = v.space().is_surface() ? euler_char_surface(SurfaceContext(v.space().degree), v)
                                                  : euler_char_p3(v);
      emit_rational(out, "chi", chi, f.json);
    } else if (hilb_cmd->parsed()) {
      const auto poly = hilbert_poly(parse_class(f.v, "p3", "v"));
      if (f.json) {
        print_json(out, envelope("hilbert", poly));
      } else {
        const auto& c = poly.coeffs();
        for (std::size_t i = 0; i < c.size(); ++i) out << (i ? " " : "") << c[i].str();
        out << '\n';
      }
    } else if (wall_cmd->parsed()) {
      emit_wall(out, wall_between(parse_class(f.v, f.space, "v"), parse_class(f.w, f.space, "w")), f.json);
    } else if (wallq_cmd->parsed()) {
      emit_wall(out, wall_q(parse_class(f.v, f.space, "v")), f.json);
    } else if (qform_cmd->parsed()) {
      const auto [beta, alpha] = parse_pair(f.at, ",");
      emit_rational(out, "q", q_form(parse_class(f.v, f.space, "v"), TiltPoint{beta, alpha}), f.json);
    } else if (push_cmd->parsed()) {
      const SurfaceContext ctx = SurfaceContext::parse(f.surface);
      const HChern raw = HChern::parse(f.chs, ctx.space());
      const HChern s = surface_class(ctx.degree(), parse_surface_input(f.input), raw[0], raw[1], raw[2]);
      emit_class(out, push_to_p3(ctx, s), f.json);
    } else if (bounds_cmd->parsed()) {
      if (!f.surface.empty() || !f.c1.empty()) {
        if (f.surface.empty() || f.c1.empty() || !f.v.empty()) {
          throw ParseError("surface bounds take --surface and --c1 (and no --v)");
        }
        const SurfaceContext ctx = SurfaceContext::parse(f.surface);
        const auto b = surface_discriminant_bound(ctx.degree(), parse_surface_c1(f.c1));
        if (f.json) {
          Json body = Json::object();
          body["discriminant_min"] = b.discriminant_min;
          body["e_max"] = b.e_max;
          print_json(out, envelope("surface_bound", body));
        } else {
          out << "discriminant_min " << b.discriminant_min.str() << '\n' << "e_max " << b.e_max.str() << '\n';
        }
      } else {
        const HChern v = parse_class(f.v, "p3", "v");
        const Rational& r = v[0];
        if (r.abs() == Rational(1)) emit_verdict(out, rank_one_bound(v), f.json);
        else if (r == Rational(2)) emit_verdict(out, rank_two_bound(v), f.json);
        else if (r == Rational(-2)) emit_verdict(out, rank_minus_two_bound(v), f.json);
        else throw DomainError("bounds cover ranks 1, -1, 2 and -2 only");
      }
    } else if (enum_cmd->parsed()) {
      return run_walls(f, out);
    } else if (run_cmd->parsed()) {
      return run_ledger_cmd(f, out);
    } else if (plot_cmd->parsed()) {
      return run_plot(f, out);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace tiltwall
