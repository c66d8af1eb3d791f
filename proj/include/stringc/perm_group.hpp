#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "stringc/permutation.hpp"

namespace stringc {

// Base and strong generating set built by deterministic Schreier-Sims.
// Base points are taken smallest-moved-first after an optional prescribed prefix.
class StabilizerChain {
public:
  struct Level {
    point_t base;
    std::vector<Permutation> gens;              // strong generators fixing earlier base points
    std::vector<point_t> orbit;                 // basic orbit, BFS order
    std::vector<int> slot;                      // point -> index into transversal, -1 outside orbit
    std::vector<Permutation> transversal;       // transversal[slot[p]] maps base to p
  };

  StabilizerChain(std::size_t degree, const std::vector<Permutation>& gens,
                  const std::vector<point_t>& base_prefix = {});

  std::size_t degree() const { return degree_; }
  std::size_t length() const { return levels_.size(); }
  const Level& level(std::size_t i) const { return levels_[i]; }
  std::vector<point_t> base() const;

  Order order() const;
  bool contains(const Permutation& g) const;
  // Residue after stripping through levels [from, length); second is the level
  // where sifting stopped (length() when it passed every level).
  std::pair<Permutation, std::size_t> sift(const Permutation& g, std::size_t from = 0) const;
  // Calls visit(g) for every element; stops early when visit returns false.
  void for_each_element(const std::function<bool(const Permutation&)>& visit) const;

private:
  void rebuild_level(Level& lv) const;
  void add_level(point_t base, std::vector<Permutation> gens);

  std::size_t degree_;
  std::vector<Level> levels_;
};

struct BlockSystem {
  std::size_t degree = 0;
  std::vector<std::vector<point_t>> blocks; // each sorted, sorted by least point

  std::size_t block_count() const { return blocks.size(); }
  std::size_t block_size() const { return blocks.empty() ? 0 : blocks.front().size(); }
  std::vector<std::size_t> block_of() const; // point -> block index
  bool is_invariant_under(const std::vector<Permutation>& gens) const;
  std::string str() const;
  friend bool operator==(const BlockSystem&, const BlockSystem&) = default;
  friend auto operator<=>(const BlockSystem&, const BlockSystem&) = default;
};

// Partition from a list of blocks; checks equal sizes and coverage.
BlockSystem make_block_system(std::size_t degree, std::vector<std::vector<point_t>> blocks);

// Generated group with a lazily built chain. Copies share the chain; the first
// build is synchronized so a group may be shared across threads.
class PermGroup {
public:
  PermGroup() : PermGroup(1, {}) {}
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }
  const StabilizerChain& chain() const;
  void finalize() const { (void)chain(); }

  Order order() const { return chain().order(); }
  bool contains(const Permutation& g) const;
  bool is_trivial() const { return order() == 1; }

  std::vector<point_t> orbit(point_t x) const;
  std::vector<std::vector<point_t>> orbits() const;
  bool is_transitive() const;

  // Minimal nontrivial block systems; empty iff primitive. Throws unless transitive.
  std::vector<BlockSystem> minimal_block_systems() const;
  // Every nontrivial block system (joins of the minimal-pair closures), sorted.
  std::vector<BlockSystem> all_block_systems() const;
  // Finest block system with a and b in one block (may be the trivial one-block system).
  BlockSystem block_closure(point_t a, point_t b) const;

  std::vector<Permutation> elements() const;

private:
  struct Lazy {
    std::once_flag once;
    std::unique_ptr<StabilizerChain> chain;
  };

  std::size_t degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<Lazy> lazy_;
};

// Groups up to this order are intersected by enumerating the smaller one.
inline constexpr Order kEnumerateIntersectionLimit = 2000;

// A ∩ B. `known` optionally lists elements already known to lie in both; they
// prune the backtrack search.
PermGroup intersect(const PermGroup& a, const PermGroup& b,
                    const std::vector<Permutation>& known = {});
Order intersection_order(const PermGroup& a, const PermGroup& b,
                         const std::vector<Permutation>& known = {});

// Route selection exposed for cross-checks.
PermGroup intersect_by_enumeration(const PermGroup& a, const PermGroup& b);
PermGroup intersect_by_backtrack(const PermGroup& a, const PermGroup& b,
                                 const std::vector<Permutation>& known = {});

} // namespace stringc
