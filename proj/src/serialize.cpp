#include "tiltwall/serialize.hpp"

#include "tiltwall/errors.hpp"

namespace tiltwall {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object with '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

std::string text(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a string, got " + j.dump());
  return j.get<std::string>();
}

bool flag(const Json& j) {
  if (!j.is_boolean()) throw ParseError("expected a boolean, got " + j.dump());
  return j.get<bool>();
}

const Json& array(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array, got " + j.dump());
  return j;
}

Rational rational(const Json& j) {
  Rational r;
  from_json(j, r);
  return r;
}

std::vector<Rational> rationals(const Json& j) {
  std::vector<Rational> out;
  for (const auto& item : array(j)) out.push_back(rational(item));
  return out;
}

Wall::Kind parse_kind(const std::string& name) {
  if (name == "semicircle") return Wall::Kind::semicircle;
  if (name == "vertical") return Wall::Kind::vertical;
  throw ParseError("unknown wall kind '" + name + "'");
}

}  // namespace

Json envelope(const std::string& key, Json payload) {
  Json doc = Json::object();
  doc["schema"] = kSchema;
  doc[key] = std::move(payload);
  return doc;
}

const Json& open_envelope(const Json& doc, const std::string& key) {
  const std::string schema = text(field(doc, "schema"));
  if (schema != kSchema) throw ParseError("unsupported schema '" + schema + "'");
  return field(doc, key.c_str());
}

void to_json(Json& j, const Rational& r) { j = r.str(); }
void from_json(const Json& j, Rational& r) { r = Rational::parse(text(j)); }

void to_json(Json& j, const Space& s) { j = s.str(); }
void from_json(const Json& j, Space& s) { s = Space::parse(text(j)); }

void to_json(Json& j, const HChern& v) {
  j = Json::object();
  j["space"] = v.space();
  j["ch"] = v.comps();
}

void from_json(const Json& j, HChern& v) {
  Space s;
  from_json(field(j, "space"), s);
  v = HChern(s, rationals(field(j, "ch")));
}

void to_json(Json& j, const TiltPoint& p) {
  j = Json::object();
  j["beta"] = p.beta;
  j["alpha"] = p.alpha;
}

void from_json(const Json& j, TiltPoint& p) {
  p.beta = rational(field(j, "beta"));
  p.alpha = rational(field(j, "alpha"));
}

void to_json(Json& j, const Wall& w) {
  j = Json::object();
  j["kind"] = to_string(w.kind());
  j["s"] = w.center();
  j["rho_sq"] = w.is_semicircle() ? Json(w.radius_sq()) : Json(nullptr);
  j["v"] = w.left_class();
  j["w"] = w.right_class();
}

Wall wall_from_json(const Json& j) {
  HChern v;
  HChern w;
  from_json(field(j, "v"), v);
  from_json(field(j, "w"), w);
  const auto wall = wall_between(v, w);
  if (!wall) throw ParseError("classes in wall record do not define a wall");
  const Json& rsq = field(j, "rho_sq");
  const bool consistent =
      wall->kind() == parse_kind(text(field(j, "kind"))) && wall->center() == rational(field(j, "s")) &&
      (wall->is_semicircle() ? !rsq.is_null() && wall->radius_sq() == rational(rsq) : rsq.is_null());
  if (!consistent) throw ParseError("wall record disagrees with its classes");
  return *wall;
}

void to_json(Json& j, const BoundVerdict& b) {
  j = Json::object();
  j["admissible"] = b.admissible;
  j["binding"] = to_string(b.binding);
  j["bound"] = b.bound;
  j["extremal"] = b.extremal;
  j["note"] = b.extremal_note ? Json(*b.extremal_note) : Json(nullptr);
}

void from_json(const Json& j, BoundVerdict& b) {
  b.admissible = flag(field(j, "admissible"));
  b.binding = parse_bound_rule(text(field(j, "binding")));
  b.bound = rational(field(j, "bound"));
  b.extremal = flag(field(j, "extremal"));
  const Json& note = field(j, "note");
  b.extremal_note = note.is_null() ? std::nullopt : std::optional<std::string>(text(note));
}

void to_json(Json& j, const CandidateWall& c) {
  j = Json::object();
  j["wall"] = c.wall;
  j["subclass"] = c.subclass;
  Json checks = Json::object();
  for (const auto& [name, ok] : c.checks) checks[name] = ok;
  j["checks"] = std::move(checks);
}

CandidateWall candidate_from_json(const Json& j) {
  HChern sub;
  from_json(field(j, "subclass"), sub);
  CandidateWall c{wall_from_json(field(j, "wall")), std::move(sub), {}};
  const Json& checks = field(j, "checks");
  if (!checks.is_object()) throw ParseError("checks must be an object");
  for (const auto& [name, ok] : checks.items()) c.checks.emplace_back(name, flag(ok));
  return c;
}

void to_json(Json& j, const WallGroup& g) {
  j = Json::object();
  j["wall"] = g.wall;
  j["classes"] = g.classes;
}

WallGroup group_from_json(const Json& j) {
  WallGroup g{wall_from_json(field(j, "wall")), {}};
  for (const auto& item : array(field(j, "classes"))) {
    HChern v;
    from_json(item, v);
    g.classes.push_back(std::move(v));
  }
  return g;
}

void to_json(Json& j, const LedgerValue& v) {
  j = Json::object();
  j["kind"] = to_string(v.kind());
  switch (v.kind()) {
    case LedgerValue::Kind::scalar: j["value"] = v.value(); break;
    case LedgerValue::Kind::tuple:
    case LedgerValue::Kind::set: j["value"] = v.items(); break;
    case LedgerValue::Kind::boolean: j["value"] = v.flag(); break;
  }
}

LedgerValue ledger_value_from_json(const Json& j) {
  const Json& value = field(j, "value");
  switch (parse_ledger_kind(text(field(j, "kind")))) {
    case LedgerValue::Kind::scalar: return LedgerValue::scalar(rational(value));
    case LedgerValue::Kind::tuple: return LedgerValue::tuple(rationals(value));
    case LedgerValue::Kind::set: {
      auto items = rationals(value);
      auto out = LedgerValue::set(items);
      if (out.items() != items) throw ParseError("set values must be sorted and distinct");
      return out;
    }
    case LedgerValue::Kind::boolean: return LedgerValue::boolean(flag(value));
  }
  throw ParseError("unknown ledger value kind");
}

void to_json(Json& j, const LedgerEntry& e) {
  j = Json::object();
  j["id"] = e.id;
  j["name"] = e.name;
  Json params = Json::array();
  for (const auto& [name, value] : e.params) params.push_back(Json::array({name, value}));
  j["params"] = std::move(params);
  j["computed"] = e.computed;
  j["expected"] = e.expected;
  j["pass"] = e.pass;
  j["anchor"] = e.anchor;
}

LedgerEntry ledger_entry_from_json(const Json& j) {
  LedgerEntry e;
  e.id = text(field(j, "id"));
  e.name = text(field(j, "name"));
  for (const auto& p : array(field(j, "params"))) {
    if (!p.is_array() || p.size() != 2) throw ParseError("param must be a [name, value] pair");
    e.params.emplace_back(text(p[0]), rational(p[1]));
  }
  e.computed = ledger_value_from_json(field(j, "computed"));
  e.expected = ledger_value_from_json(field(j, "expected"));
  e.pass = flag(field(j, "pass"));
  e.anchor = text(field(j, "anchor"));
  return e;
}

void to_json(Json& j, const HilbertPolynomial& p) {
  j = Json::object();
  j["coeffs"] = p.coeffs();
}

void from_json(const Json& j, HilbertPolynomial& p) { p = HilbertPolynomial(rationals(field(j, "coeffs"))); }

void to_json(Json& j, const PlotSpec& spec) {
  j = Json::object();
  j["beta_range"] = Json::array({spec.beta_range.first, spec.beta_range.second});
  j["alpha_max"] = spec.alpha_max;
  j["walls"] = spec.walls;
  j["marks"] = spec.marks;
  j["q_wall"] = spec.q_wall ? Json(*spec.q_wall) : Json(nullptr);
}

PlotSpec plot_spec_from_json(const Json& j) {
  PlotSpec spec;
  const auto range = rationals(field(j, "beta_range"));
  if (range.size() != 2) throw ParseError("beta_range needs two entries");
  spec.beta_range = {range[0], range[1]};
  spec.alpha_max = rational(field(j, "alpha_max"));
  for (const auto& w : array(field(j, "walls"))) spec.walls.push_back(wall_from_json(w));
  for (const auto& m : array(field(j, "marks"))) {
    TiltPoint p;
    from_json(m, p);
    spec.marks.push_back(p);
  }
  const Json& q = field(j, "q_wall");
  if (!q.is_null()) spec.q_wall = wall_from_json(q);
  return spec;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace tiltwall
