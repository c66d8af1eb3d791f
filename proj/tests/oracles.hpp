#pragma once

// Brute-force references used by the unit tests and the acceptance binary.
// Everything here works on explicit element sets, so keep degrees small.

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "stringc/classify.hpp"

namespace oracle {

using stringc::Permutation;
using stringc::point_t;

inline Permutation identity(std::size_t n)
{
  return Permutation(n);
}

inline std::set<Permutation> closure(std::size_t n, const std::vector<Permutation>& gens)
{
  std::set<Permutation> seen{identity(n)};
  std::deque<Permutation> todo{identity(n)};
  while (!todo.empty()) {
    auto g = todo.front();
    todo.pop_front();
    for (const auto& s : gens) {
      auto h = g * s;
      if (seen.insert(h).second)
        todo.push_back(h);
    }
  }
  return seen;
}

inline std::vector<Permutation> pick(const std::vector<Permutation>& gens, std::uint64_t mask)
{
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if ((mask >> i) & 1U)
      out.push_back(gens[i]);
  return out;
}

// Intersection property straight from the definition, on element sets.
inline bool intersection_property(std::size_t n, const std::vector<Permutation>& gens)
{
  const std::uint64_t full = (std::uint64_t{1} << gens.size()) - 1;
  std::vector<std::set<Permutation>> sub(full + 1);
  for (std::uint64_t m = 0; m <= full; ++m)
    sub[m] = closure(n, pick(gens, m));
  for (std::uint64_t j = 0; j <= full; ++j)
    for (std::uint64_t k = 0; k <= full; ++k) {
      std::size_t common = 0;
      for (const auto& g : sub[j])
        common += sub[k].count(g);
      if (common != sub[j & k].size())
        return false;
    }
  return true;
}

// All blocks through point 0 of a transitive group, by testing every subset.
inline std::set<std::vector<point_t>> blocks_through_zero(std::size_t n, const std::set<Permutation>& elems)
{
  std::set<std::vector<point_t>> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); mask += 2) {
    const auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size == 1 || size == n || n % size != 0)
      continue;
    bool ok = true;
    for (auto it = elems.begin(); ok && it != elems.end(); ++it) {
      std::uint64_t img = 0;
      for (std::size_t x = 0; x < n; ++x)
        if ((mask >> x) & 1U)
          img |= std::uint64_t{1} << (*it)[x];
      ok = img == mask || (img & mask) == 0;
    }
    if (!ok)
      continue;
    std::vector<point_t> b;
    for (std::size_t x = 0; x < n; ++x)
      if ((mask >> x) & 1U)
        b.push_back(static_cast<point_t>(x));
    out.insert(b);
  }
  return out;
}

inline Permutation random_perm(std::size_t n, std::mt19937& rng)
{
  std::vector<point_t> img(n);
  std::iota(img.begin(), img.end(), point_t{0});
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation::from_images(img);
}

// Product of 1..max_pairs disjoint transpositions on random points.
inline Permutation random_involution(std::size_t n, std::size_t max_pairs, std::mt19937& rng)
{
  std::vector<point_t> pts(n);
  std::iota(pts.begin(), pts.end(), point_t{0});
  std::shuffle(pts.begin(), pts.end(), rng);
  const std::size_t pairs = 1 + rng() % std::min(max_pairs, n / 2);
  std::vector<point_t> img(n);
  std::iota(img.begin(), img.end(), point_t{0});
  for (std::size_t k = 0; k < pairs; ++k)
    std::swap(img[pts[2 * k]], img[pts[2 * k + 1]]);
  return Permutation::from_images(img);
}

// Random string group generated by involutions, by rejection. Empty on give-up.
inline std::vector<Permutation> random_sggi(std::size_t n, std::size_t rank, std::mt19937& rng)
{
  for (int attempt = 0; attempt < 200; ++attempt) {
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < rank; ++i) {
      bool placed = false;
      for (int t = 0; t < 500 && !placed; ++t) {
        auto c = random_involution(n, 3, rng);
        bool ok = std::find(gens.begin(), gens.end(), c) == gens.end();
        for (std::size_t j = 0; ok && j + 1 < i; ++j)
          ok = c.commutes_with(gens[j]);
        if (ok) {
          gens.push_back(c);
          placed = true;
        }
      }
      if (!placed)
        break;
    }
    if (gens.size() == rank)
      return gens;
  }
  return {};
}

// Every rank-r sggi tuple of involutions generating a transitive group of the
// given order, without pruning. Meant for Sym_4-sized ambients.
inline std::vector<std::vector<Permutation>> brute_search(const stringc::PermGroup& ambient, std::size_t min_rank,
                                                          std::size_t max_rank)
{
  std::vector<Permutation> inv;
  for (const auto& g : ambient.elements())
    if (g.is_involution())
      inv.push_back(g);
  const std::size_t n = ambient.degree();
  std::vector<std::vector<Permutation>> out;
  std::vector<Permutation> cur;
  std::function<void()> rec = [&] {
    if (cur.size() >= min_rank) {
      auto bad = stringc::sggi_violation(cur);
      if (!bad && stringc::is_independent(cur)) {
        stringc::PermGroup g(n, cur);
        if (g.order() == ambient.order() && g.is_transitive() && intersection_property(n, cur))
          out.push_back(cur);
      }
    }
    if (cur.size() == max_rank)
      return;
    for (const auto& c : inv) {
      cur.push_back(c);
      rec();
      cur.pop_back();
    }
  };
  rec();
  return out;
}

} // namespace oracle
