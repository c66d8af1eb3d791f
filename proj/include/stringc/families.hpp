#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stringc/prgraph.hpp"

namespace stringc {

enum class Table { T4, T5, T6, T7, T8, HIGHC, REP2N, P61 };

struct FamilyId {
  Table table = Table::T4;
  int number = 1;

  std::string str() const; // "T4#1", "HIGHC#2", "P61#1"
  static FamilyId parse(const std::string& text);
  friend bool operator==(const FamilyId&, const FamilyId&) = default;
  friend auto operator<=>(const FamilyId&, const FamilyId&) = default;
};

using Params = std::map<std::string, long>;
std::string params_str(const Params& p); // "n=14,x=2"

struct DualityPartner {
  enum class Kind { self, entry, unlisted };
  Kind kind = Kind::unlisted;
  FamilyId other; // meaningful for Kind::entry
  std::string str() const;
};

struct FamilyDescriptor {
  FamilyId id;
  std::string case_tags;
  std::vector<std::string> params;  // always starts with "n"
  std::string domain;               // human-readable constraints
  DualityPartner partner;           // frozen from computation, see tests
};

// 35 table entries, then HIGHC#1-2, REP2N#1-2, P61#1-2.
const std::vector<FamilyDescriptor>& family_catalog();
const FamilyDescriptor& descriptor(const FamilyId& id);

// Constraints on n alone.
std::optional<std::string> degree_violation(const FamilyId& id, long n);
// Empty when admissible, otherwise the violated constraint.
std::optional<std::string> params_violation(const FamilyId& id, const Params& p);
// Every admissible parameter choice at degree parameter n (empty if n itself is excluded).
std::vector<Params> admissible_params(const FamilyId& id, long n);
// Number of points of the instance (2n for REP2N, n otherwise).
std::size_t instance_degree(const FamilyId& id, const Params& p);
std::size_t expected_rank(const FamilyId& id, const Params& p);

PRGraph instantiate_family(const FamilyId& id, const Params& p);

// Computed partner: dual graph compared against every catalog family at the same degree.
DualityPartner compute_duality_partner(const FamilyId& id, long n);

} // namespace stringc
