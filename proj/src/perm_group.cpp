#include "stringc/perm_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace stringc {

namespace {

bool fixes_all(const Permutation& g, const std::vector<point_t>& pts, std::size_t count)
{
  for (std::size_t i = 0; i < count; ++i)
    if (g[pts[i]] != pts[i])
      return false;
  return true;
}

std::vector<point_t> orbit_under(const std::vector<Permutation>& gens, point_t x, std::size_t degree)
{
  std::vector<bool> seen(degree, false);
  std::vector<point_t> orb{x};
  seen[x] = true;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : gens) {
      point_t y = g[orb[k]];
      if (!seen[y]) {
        seen[y] = true;
        orb.push_back(y);
      }
    }
  return orb;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t{0}); }
  std::size_t find(std::size_t x)
  {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent[b] = a;
    return true;
  }
  std::vector<std::size_t> parent;
};

BlockSystem partition_of(UnionFind& uf, std::size_t degree)
{
  std::vector<std::vector<point_t>> by_root(degree);
  for (std::size_t x = 0; x < degree; ++x)
    by_root[uf.find(x)].push_back(static_cast<point_t>(x));
  BlockSystem bs;
  bs.degree = degree;
  for (auto& b : by_root)
    if (!b.empty())
      bs.blocks.push_back(std::move(b));
  std::sort(bs.blocks.begin(), bs.blocks.end());
  return bs;
}

// Closes the partition held in uf under the generators, starting from merged pairs.
void close_blocks(UnionFind& uf, std::vector<std::pair<point_t, point_t>> pending,
                  const std::vector<Permutation>& gens)
{
  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    for (const auto& g : gens) {
      point_t c = g[a], d = g[b];
      if (uf.unite(c, d))
        pending.emplace_back(c, d);
    }
  }
}

} // namespace

// ---------------------------------------------------------------- chain

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Permutation>& gens,
                                 const std::vector<point_t>& base_prefix)
  : degree_(degree)
{
  std::vector<Permutation> strong;
  for (const auto& g : gens) {
    if (g.degree() != degree)
      throw Error("generator degree mismatch");
    if (!g.is_identity() && std::find(strong.begin(), strong.end(), g) == strong.end())
      strong.push_back(g);
  }

  std::vector<point_t> base;
  auto gens_fixing_base = [&] {
    std::vector<Permutation> out;
    for (const auto& g : strong)
      if (fixes_all(g, base, base.size()))
        out.push_back(g);
    return out;
  };
  for (point_t p : base_prefix) {
    if (p >= degree)
      throw Error("base point out of range");
    if (std::find(base.begin(), base.end(), p) != base.end())
      continue;
    add_level(p, gens_fixing_base());
    base.push_back(p);
  }
  for (const auto& g : strong) {
    if (fixes_all(g, base, base.size())) {
      point_t p = static_cast<point_t>(g.smallest_moved_point());
      add_level(p, gens_fixing_base());
      base.push_back(p);
    }
  }

  long i = static_cast<long>(levels_.size()) - 1;
  while (i >= 0) {
    bool restarted = false;
    for (std::size_t idx = 0; idx < levels_[i].orbit.size() && !restarted; ++idx) {
      for (std::size_t s = 0; s < levels_[i].gens.size(); ++s) {
        const Level& lv = levels_[i];
        point_t beta = lv.orbit[idx];
        const Permutation& gen = lv.gens[s];
        point_t img = gen[beta];
        Permutation h = lv.transversal[lv.slot[beta]] * gen * lv.transversal[lv.slot[img]].inverse();
        if (h.is_identity())
          continue;
        auto [y, j] = sift(h, static_cast<std::size_t>(i) + 1);
        if (y.is_identity())
          continue;
        if (j == levels_.size())
          add_level(static_cast<point_t>(y.smallest_moved_point()), {});
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(y);
          rebuild_level(levels_[l]);
        }
        i = static_cast<long>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted)
      --i;
  }
}

void StabilizerChain::add_level(point_t base, std::vector<Permutation> gens)
{
  Level lv;
  lv.base = base;
  lv.gens = std::move(gens);
  rebuild_level(lv);
  levels_.push_back(std::move(lv));
}

void StabilizerChain::rebuild_level(Level& lv) const
{
  lv.orbit.assign(1, lv.base);
  lv.slot.assign(degree_, -1);
  lv.transversal.assign(1, Permutation(degree_));
  lv.slot[lv.base] = 0;
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    point_t x = lv.orbit[k];
    for (const auto& g : lv.gens) {
      point_t y = g[x];
      if (lv.slot[y] < 0) {
        lv.slot[y] = static_cast<int>(lv.transversal.size());
        lv.transversal.push_back(lv.transversal[lv.slot[x]] * g);
        lv.orbit.push_back(y);
      }
    }
  }
}

std::vector<point_t> StabilizerChain::base() const
{
  std::vector<point_t> b;
  for (const auto& lv : levels_)
    b.push_back(lv.base);
  return b;
}

Order StabilizerChain::order() const
{
  Order o = 1;
  for (const auto& lv : levels_)
    o *= lv.orbit.size();
  return o;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(const Permutation& g, std::size_t from) const
{
  Permutation h = g;
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    point_t x = h[lv.base];
    if (lv.slot[x] < 0)
      return {h, i};
    if (x != lv.base)
      h = h * lv.transversal[lv.slot[x]].inverse();
  }
  return {h, levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const
{
  if (g.degree() != degree_)
    throw Error("degree mismatch in membership test");
  auto [h, j] = sift(g);
  return j == levels_.size() && h.is_identity();
}

void StabilizerChain::for_each_element(const std::function<bool(const Permutation&)>& visit) const
{
  bool go = true;
  std::function<void(std::size_t, const Permutation&)> rec = [&](std::size_t l, const Permutation& acc) {
    if (!go)
      return;
    if (l == levels_.size()) {
      go = visit(acc);
      return;
    }
    for (const auto& t : levels_[l].transversal) {
      rec(l + 1, t * acc);
      if (!go)
        return;
    }
  };
  rec(0, Permutation(degree_));
}

// ---------------------------------------------------------------- blocks

std::vector<std::size_t> BlockSystem::block_of() const
{
  std::vector<std::size_t> idx(degree, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (point_t p : blocks[b])
      idx[p] = b;
  return idx;
}

bool BlockSystem::is_invariant_under(const std::vector<Permutation>& gens) const
{
  auto idx = block_of();
  for (const auto& g : gens) {
    if (g.degree() != degree)
      return false;
    for (const auto& b : blocks)
      for (point_t p : b)
        if (idx[g[p]] != idx[g[b.front()]])
          return false;
  }
  return true;
}

std::string BlockSystem::str() const
{
  std::ostringstream os;
  os << '{';
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    os << (b ? "," : "") << '{';
    for (std::size_t k = 0; k < blocks[b].size(); ++k)
      os << (k ? "," : "") << blocks[b][k] + 1;
    os << '}';
  }
  os << '}';
  return os.str();
}

BlockSystem make_block_system(std::size_t degree, std::vector<std::vector<point_t>> blocks)
{
  std::vector<bool> seen(degree, false);
  std::size_t total = 0;
  for (auto& b : blocks) {
    if (b.empty() || b.size() != blocks.front().size())
      throw Error("blocks must be nonempty and of equal size");
    std::sort(b.begin(), b.end());
    for (point_t p : b) {
      if (p >= degree || seen[p])
        throw Error("blocks must partition the points");
      seen[p] = true;
      ++total;
    }
  }
  if (total != degree)
    throw Error("blocks must cover every point");
  std::sort(blocks.begin(), blocks.end());
  return BlockSystem{degree, std::move(blocks)};
}

// ---------------------------------------------------------------- group

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
  : degree_(degree), gens_(std::move(generators)), lazy_(std::make_shared<Lazy>())
{
  if (degree == 0)
    throw Error("degree must be positive");
  for (const auto& g : gens_)
    if (g.degree() != degree)
      throw Error("generator degree mismatch");
}

const StabilizerChain& PermGroup::chain() const
{
  std::call_once(lazy_->once, [this] { lazy_->chain = std::make_unique<StabilizerChain>(degree_, gens_); });
  return *lazy_->chain;
}

bool PermGroup::contains(const Permutation& g) const
{
  return chain().contains(g);
}

std::vector<point_t> PermGroup::orbit(point_t x) const
{
  if (x >= degree_)
    throw Error("point out of range");
  auto orb = orbit_under(gens_, x, degree_);
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<point_t>> PermGroup::orbits() const
{
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<point_t>> out;
  for (std::size_t x = 0; x < degree_; ++x) {
    if (seen[x])
      continue;
    auto orb = orbit(static_cast<point_t>(x));
    for (point_t y : orb)
      seen[y] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool PermGroup::is_transitive() const
{
  return orbit_under(gens_, 0, degree_).size() == degree_;
}

BlockSystem PermGroup::block_closure(point_t a, point_t b) const
{
  UnionFind uf(degree_);
  uf.unite(a, b);
  close_blocks(uf, {{a, b}}, gens_);
  return partition_of(uf, degree_);
}

std::vector<BlockSystem> PermGroup::minimal_block_systems() const
{
  if (!is_transitive())
    throw Error("block systems require a transitive group");
  std::set<BlockSystem> atoms;
  for (std::size_t x = 1; x < degree_; ++x) {
    auto bs = block_closure(0, static_cast<point_t>(x));
    if (bs.block_count() > 1)
      atoms.insert(std::move(bs));
  }
  std::vector<BlockSystem> out;
  for (const auto& a : atoms) {
    const auto& mine = a.blocks.front(); // block holding point 0
    bool refinable = false;
    for (const auto& b : atoms) {
      const auto& other = b.blocks.front();
      if (other.size() < mine.size() && std::includes(mine.begin(), mine.end(), other.begin(), other.end()))
        refinable = true;
    }
    if (!refinable)
      out.push_back(a);
  }
  return out;
}

std::vector<BlockSystem> PermGroup::all_block_systems() const
{
  if (!is_transitive())
    throw Error("block systems require a transitive group");
  std::set<BlockSystem> found;
  for (std::size_t x = 1; x < degree_; ++x) {
    auto bs = block_closure(0, static_cast<point_t>(x));
    if (bs.block_count() > 1)
      found.insert(std::move(bs));
  }
  std::vector<BlockSystem> work(found.begin(), found.end());
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      UnionFind uf(degree_);
      std::vector<std::pair<point_t, point_t>> merged;
      for (const auto* bs : {&work[i], &work[j]})
        for (const auto& b : bs->blocks)
          for (point_t p : b)
            if (uf.unite(b.front(), p))
              merged.emplace_back(b.front(), p);
      close_blocks(uf, merged, gens_);
      auto join = partition_of(uf, degree_);
      if (join.block_count() > 1 && found.insert(join).second)
        work.push_back(std::move(join));
    }
  }
  return {found.begin(), found.end()};
}

std::vector<Permutation> PermGroup::elements() const
{
  std::vector<Permutation> out;
  chain().for_each_element([&](const Permutation& g) {
    out.push_back(g);
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- intersection

PermGroup intersect_by_enumeration(const PermGroup& a, const PermGroup& b)
{
  if (a.degree() != b.degree())
    throw Error("degree mismatch in intersection");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Permutation> gens;
  auto current = std::make_unique<StabilizerChain>(a.degree(), gens);
  small.chain().for_each_element([&](const Permutation& g) {
    if (!g.is_identity() && large.contains(g) && !current->contains(g)) {
      gens.push_back(g);
      current = std::make_unique<StabilizerChain>(a.degree(), gens);
    }
    return true;
  });
  return PermGroup(a.degree(), std::move(gens));
}

namespace {

// Depth-first search for an element of A with prescribed image of base[l]
// that also lies in B. B's chain shares A's base as a prefix.
class CosetSearch {
public:
  CosetSearch(const StabilizerChain& ca, const StabilizerChain& cb) : ca_(ca), cb_(cb) {}

  std::optional<Permutation> find(std::size_t l, point_t gamma)
  {
    const auto& la = ca_.level(l);
    const auto& lb = cb_.level(l);
    if (la.slot[gamma] < 0 || lb.slot[gamma] < 0)
      return std::nullopt;
    result_.reset();
    descend(l + 1, la.transversal[la.slot[gamma]], lb.transversal[lb.slot[gamma]]);
    return result_;
  }

private:
  bool descend(std::size_t j, const Permutation& p, const Permutation& h)
  {
    if (j == ca_.length()) {
      if (cb_.contains(p)) {
        result_ = p;
        return true;
      }
      return false;
    }
    const auto& la = ca_.level(j);
    const auto& lb = cb_.level(j);
    for (point_t delta : la.orbit) {
      point_t img = p[delta];
      point_t q = h.preimage(img);
      if (lb.slot[q] < 0)
        continue;
      Permutation p2 = la.transversal[la.slot[delta]] * p;
      Permutation h2 = lb.transversal[lb.slot[q]] * h;
      if (descend(j + 1, p2, h2))
        return true;
    }
    return false;
  }

  const StabilizerChain& ca_;
  const StabilizerChain& cb_;
  std::optional<Permutation> result_;
};

} // namespace

PermGroup intersect_by_backtrack(const PermGroup& a, const PermGroup& b, const std::vector<Permutation>& known)
{
  if (a.degree() != b.degree())
    throw Error("degree mismatch in intersection");
  const std::size_t n = a.degree();
  const PermGroup& ga = a.order() <= b.order() ? a : b;
  const PermGroup& gb = a.order() <= b.order() ? b : a;
  const StabilizerChain& ca = ga.chain();
  const auto base = ca.base();
  const std::size_t k = base.size();
  StabilizerChain cb(n, gb.generators(), base);

  std::vector<Permutation> hint;
  for (const auto& g : known)
    if (!g.is_identity() && ca.contains(g) && cb.contains(g))
      hint.push_back(g);
  StabilizerChain ck(n, hint, base);

  CosetSearch search(ca, cb);
  std::vector<Permutation> running;
  for (long li = static_cast<long>(k) - 1; li >= 0; --li) {
    const auto l = static_cast<std::size_t>(li);
    if (l < ck.length())
      for (const auto& g : ck.level(l).gens)
        running.push_back(g);
    std::vector<bool> in_orbit(n, false), excluded(n, false);
    auto mark = [&](std::vector<bool>& flags, point_t from) {
      for (point_t y : orbit_under(running, from, n))
        flags[y] = true;
    };
    mark(in_orbit, base[l]);
    std::vector<point_t> candidates = ca.level(l).orbit;
    std::sort(candidates.begin(), candidates.end());
    for (point_t gamma : candidates) {
      if (in_orbit[gamma] || excluded[gamma] || cb.level(l).slot[gamma] < 0)
        continue;
      if (auto g = search.find(l, gamma)) {
        running.push_back(*g);
        std::fill(in_orbit.begin(), in_orbit.end(), false);
        mark(in_orbit, base[l]);
      } else {
        mark(excluded, gamma);
      }
    }
  }
  return PermGroup(n, std::move(running));
}

PermGroup intersect(const PermGroup& a, const PermGroup& b, const std::vector<Permutation>& known)
{
  if (a.degree() != b.degree())
    throw Error("degree mismatch in intersection");
  if (std::min(a.order(), b.order()) <= kEnumerateIntersectionLimit)
    return intersect_by_enumeration(a, b);
  return intersect_by_backtrack(a, b, known);
}

Order intersection_order(const PermGroup& a, const PermGroup& b, const std::vector<Permutation>& known)
{
  return intersect(a, b, known).order();
}

} // namespace stringc
