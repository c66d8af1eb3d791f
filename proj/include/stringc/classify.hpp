#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stringc/analysis.hpp"
#include "stringc/families.hpp"

namespace stringc {

using Json = nlohmann::ordered_json;

// Exact value when it fits 64 bits, decimal string otherwise.
Json order_json(Order o);

enum class CheckStatus { pass, fail, skip };
const char* to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  Json evidence = Json::object();
};

struct VerificationReport {
  FamilyId id;
  Params params;
  std::vector<CheckResult> checks;
  std::string schlafli;
  std::optional<Order> order;
  double timing_ms = 0;

  bool passed() const; // no check failed
  bool skipped() const; // instance excluded by its domain
  const CheckResult* find(const std::string& name) const;
  std::vector<std::string> failures() const;
  Json to_json(bool with_timing) const;
  std::string summary_line() const;
};

VerificationReport verify_instance(const FamilyId& id, const Params& params);

struct CatalogRun {
  long n = 0;
  std::vector<VerificationReport> reports; // catalog order, params ascending
  std::size_t passed = 0, failed = 0, skipped = 0;
};

// Every catalog family at degree n (REP2N on n points, i.e. Sym_{n/2}).
// Adds a duality check per instance. Throws unless n is even with n/2 >= 7.
CatalogRun verify_catalog(long n, unsigned jobs = 1);

// ---------------------------------------------------------------- search

struct Signature {
  std::size_t degree = 0;
  std::size_t rank = 0;
  Order order = 0;
  SchlafliSymbol schlafli;
  std::vector<std::vector<std::size_t>> cycle_types; // sorted multiset
  std::vector<std::size_t> block_sizes;               // minimal block systems
  std::string kernel_class;                           // on the first minimal block system
  friend bool operator==(const Signature&, const Signature&) = default;
  friend auto operator<=>(const Signature&, const Signature&) = default;
  std::string str() const;
};

Signature signature(const Sggi& s);
// Identifies a signature with that of the dual.
Signature dedup_key(Signature sig);

struct SearchOptions {
  std::size_t min_rank = 2;
  std::size_t max_rank = 0;            // 0: degree - 1
  std::optional<Order> target_order;   // unset: the tuple must generate the ambient
  bool require_transitive = true;
  bool reduce_by_conjugacy = true;     // first generator up to ambient conjugacy
  std::optional<double> budget_sec;
  unsigned jobs = 1;
};

struct SearchHit {
  Sggi sggi;             // least generating tuple among those merged
  Signature signature;
  Signature key;
  std::size_t merged = 1; // tuples sharing the key; multiplicity up to isomorphism unknown
};

struct SearchResult {
  std::vector<SearchHit> hits; // sorted by key
  bool completed = true;
  std::size_t nodes = 0;
};

inline constexpr Order kMaxSearchAmbient = 1000000;

SearchResult exhaustive_search(const PermGroup& ambient, const SearchOptions& opts);

struct NamedAmbient {
  std::string name;
  std::size_t degree;
  std::vector<std::string> generators; // cycle notation
  std::string description;
  bool stretch; // only searched on request
};

const std::vector<NamedAmbient>& builtin_ambients();
PermGroup ambient_group(const std::string& name);

} // namespace stringc
