#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "stringc/perm_group.hpp"

namespace stringc {

// Subset of {0..rank-1}. Named constructors follow the usual notation:
// I_{a,b} = all but a,b; I^{<=i}, I^{>=i}, I^{<i}, I^{>i}; punctured forms via without().
class IndexSet {
public:
  IndexSet() = default;
  IndexSet(std::size_t rank, std::uint64_t mask);
  IndexSet(std::size_t rank, std::initializer_list<std::size_t> members);

  static IndexSet none(std::size_t rank) { return IndexSet(rank, 0); }
  static IndexSet all(std::size_t rank);
  static IndexSet all_but(std::size_t rank, std::initializer_list<std::size_t> removed);
  static IndexSet at_most(std::size_t rank, std::size_t i);  // I^{<=i}
  static IndexSet at_least(std::size_t rank, std::size_t i); // I^{>=i}
  static IndexSet below(std::size_t rank, std::size_t i);    // I^{<i}
  static IndexSet above(std::size_t rank, std::size_t i);    // I^{>i}

  IndexSet without(std::initializer_list<std::size_t> removed) const;
  IndexSet with(std::initializer_list<std::size_t> added) const;
  IndexSet operator|(const IndexSet& o) const { return IndexSet(rank_, mask_ | o.mask_); }
  IndexSet operator&(const IndexSet& o) const { return IndexSet(rank_, mask_ & o.mask_); }

  std::size_t rank() const { return rank_; }
  std::uint64_t mask() const { return mask_; }
  bool contains(std::size_t i) const { return i < rank_ && ((mask_ >> i) & 1U); }
  bool empty() const { return mask_ == 0; }
  std::size_t size() const;
  std::vector<std::size_t> members() const;
  std::string str() const; // "{0,2,5}"
  friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
  std::size_t rank_ = 0;
  std::uint64_t mask_ = 0;
};

struct SchlafliSymbol {
  std::vector<std::size_t> entries;
  std::string str() const; // "{p1,p2,...}"
  friend bool operator==(const SchlafliSymbol&, const SchlafliSymbol&) = default;
  friend auto operator<=>(const SchlafliSymbol&, const SchlafliSymbol&) = default;
};

// String group generated by involutions.
class Sggi {
public:
  std::size_t degree() const { return degree_; }
  std::size_t rank() const { return gens_.size(); }
  const std::vector<Permutation>& gens() const { return gens_; }
  const Permutation& operator[](std::size_t i) const { return gens_[i]; }
  const PermGroup& group() const { return group_; }
  PermGroup subgroup(const IndexSet& keep) const;

  friend Sggi make_sggi(std::vector<Permutation> gens);

private:
  std::size_t degree_ = 0;
  std::vector<Permutation> gens_;
  PermGroup group_;
};

// Validates involutions, distinctness and the commuting property.
Sggi make_sggi(std::vector<Permutation> gens);

// First violated sggi condition, or nullopt when the list is a valid sggi.
std::optional<std::string> sggi_violation(std::span<const Permutation> gens);

SchlafliSymbol schlafli(const Sggi& s);
bool is_independent(const Sggi& s);
bool is_independent(std::span<const Permutation> gens);

enum class IpMode { naive, recursive };

struct IpResult {
  bool holds = true;
  std::optional<std::pair<IndexSet, IndexSet>> witness; // failing (J, K)
  explicit operator bool() const { return holds; }
};

IpResult check_intersection_property(const Sggi& s, IpMode mode);
// Works on raw generator lists (duplicates allowed) so failing inputs can be probed.
IpResult check_intersection_property(std::span<const Permutation> gens, IpMode mode);

Sggi dual(const Sggi& s);
Sggi parabolic(const Sggi& s, const IndexSet& keep);

} // namespace stringc
