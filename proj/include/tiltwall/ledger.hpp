#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tiltwall/rational.hpp"

namespace tiltwall {

/// A computed or expected ledger quantity.
class LedgerValue {
 public:
  enum class Kind { scalar, tuple, set, boolean };

  static LedgerValue scalar(Rational value);
  static LedgerValue tuple(std::vector<Rational> values);
  /// Sorted and deduplicated on construction.
  static LedgerValue set(std::vector<Rational> values);
  static LedgerValue boolean(bool value);

  Kind kind() const { return kind_; }
  const std::vector<Rational>& items() const { return items_; }
  const Rational& value() const;
  bool flag() const;

  /// "3/2", "(0,10,-30)", "{-1,0,1}" or "true".
  std::string str() const;

  friend bool operator==(const LedgerValue&, const LedgerValue&) = default;

 private:
  LedgerValue(Kind kind, std::vector<Rational> items, bool flag)
      : kind_(kind), items_(std::move(items)), flag_(flag) {}

  Kind kind_ = Kind::boolean;
  std::vector<Rational> items_;
  bool flag_ = false;
};

const char* to_string(LedgerValue::Kind kind);
LedgerValue::Kind parse_ledger_kind(std::string_view text);

struct LedgerEntry {
  /// Registry id, "V1" ... "V17".
  std::string id;
  /// id plus the checked quantity, e.g. "V4.rho_q".
  std::string name;
  std::vector<std::pair<std::string, Rational>> params;
  LedgerValue computed = LedgerValue::boolean(false);
  LedgerValue expected = LedgerValue::boolean(true);
  /// Holds exactly when computed == expected.
  bool pass = false;
  /// Short description of the identity being checked.
  std::string anchor;

  friend bool operator==(const LedgerEntry&, const LedgerEntry&) = default;
};

/// Replacement sample values per parameter name (d, e, c, x, y, z).
using LedgerOverrides = std::map<std::string, std::vector<Rational>>;

/// Parses "name=v1,v2,..." and merges into overrides.
void add_ledger_override(LedgerOverrides& overrides, std::string_view assignment);

struct LedgerRecord {
  std::string id;
  std::string description;
};

/// Registry in canonical order.
const std::vector<LedgerRecord>& ledger_registry();

/// Shell-style match with '*' and '?'.
bool ledger_filter_matches(std::string_view pattern, std::string_view id);

/// Runs every registry entry whose id matches the filter (all when absent).
/// Throws ParseError when the filter matches nothing or an override names an
/// unknown parameter, DomainError when an override leaves an entry's hypothesis.
std::vector<LedgerEntry> run_ledger(const std::optional<std::string>& filter = std::nullopt,
                                    const LedgerOverrides& overrides = {});

}  // namespace tiltwall
