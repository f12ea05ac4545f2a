#pragma once

#include <string>

#include <json.hpp>

#include "tiltwall/chern_lattice.hpp"
#include "tiltwall/ledger.hpp"
#include "tiltwall/stability_bounds.hpp"
#include "tiltwall/svg.hpp"
#include "tiltwall/tilt_geometry.hpp"
#include "tiltwall/wall_finder.hpp"

namespace tiltwall {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tiltwall/1";

/// {"schema": "tiltwall/1", <key>: payload}.
Json envelope(const std::string& key, Json payload);
/// Checks the schema tag and returns the payload under key. Throws ParseError.
const Json& open_envelope(const Json& doc, const std::string& key);

// Rationals are always strings "a" or "a/b". Decoders throw ParseError.
void to_json(Json& j, const Rational& r);
void from_json(const Json& j, Rational& r);

void to_json(Json& j, const Space& s);
void from_json(const Json& j, Space& s);

void to_json(Json& j, const HChern& v);
void from_json(const Json& j, HChern& v);

void to_json(Json& j, const TiltPoint& p);
void from_json(const Json& j, TiltPoint& p);

/// {kind, s, rho_sq, v, w}; rho_sq is null for vertical walls. Decoding
/// recomputes the wall from (v, w) and rejects inconsistent records.
void to_json(Json& j, const Wall& w);
Wall wall_from_json(const Json& j);

void to_json(Json& j, const BoundVerdict& b);
void from_json(const Json& j, BoundVerdict& b);

void to_json(Json& j, const CandidateWall& c);
CandidateWall candidate_from_json(const Json& j);

void to_json(Json& j, const WallGroup& g);
WallGroup group_from_json(const Json& j);

void to_json(Json& j, const LedgerValue& v);
LedgerValue ledger_value_from_json(const Json& j);

void to_json(Json& j, const LedgerEntry& e);
LedgerEntry ledger_entry_from_json(const Json& j);

void to_json(Json& j, const HilbertPolynomial& p);
void from_json(const Json& j, HilbertPolynomial& p);

void to_json(Json& j, const PlotSpec& spec);
PlotSpec plot_spec_from_json(const Json& j);

/// Parses JSON text, mapping syntax errors to ParseError.
Json parse_json(const std::string& text);

}  // namespace tiltwall
