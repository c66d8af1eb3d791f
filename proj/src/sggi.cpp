#include "stringc/sggi.hpp"

#include <bit>
#include <map>
#include <sstream>

namespace stringc {

// ---------------------------------------------------------------- IndexSet

IndexSet::IndexSet(std::size_t rank, std::uint64_t mask) : rank_(rank), mask_(mask)
{
  if (rank > 64)
    throw Error("rank above 64 not supported");
  if (rank < 64)
    mask_ &= (std::uint64_t{1} << rank) - 1;
}

IndexSet::IndexSet(std::size_t rank, std::initializer_list<std::size_t> members) : IndexSet(rank, 0)
{
  for (auto i : members)
    if (i < rank)
      mask_ |= std::uint64_t{1} << i;
}

IndexSet IndexSet::all(std::size_t rank)
{
  return IndexSet(rank, ~std::uint64_t{0});
}

IndexSet IndexSet::all_but(std::size_t rank, std::initializer_list<std::size_t> removed)
{
  return all(rank).without(removed);
}

IndexSet IndexSet::at_most(std::size_t rank, std::size_t i)
{
  IndexSet s(rank, 0);
  for (std::size_t j = 0; j <= i && j < rank; ++j)
    s.mask_ |= std::uint64_t{1} << j;
  return s;
}

IndexSet IndexSet::at_least(std::size_t rank, std::size_t i)
{
  IndexSet s(rank, 0);
  for (std::size_t j = i; j < rank; ++j)
    s.mask_ |= std::uint64_t{1} << j;
  return s;
}

IndexSet IndexSet::below(std::size_t rank, std::size_t i)
{
  return i == 0 ? none(rank) : at_most(rank, i - 1);
}

IndexSet IndexSet::above(std::size_t rank, std::size_t i)
{
  return at_least(rank, i + 1);
}

IndexSet IndexSet::without(std::initializer_list<std::size_t> removed) const
{
  IndexSet s = *this;
  for (auto i : removed)
    if (i < rank_)
      s.mask_ &= ~(std::uint64_t{1} << i);
  return s;
}

IndexSet IndexSet::with(std::initializer_list<std::size_t> added) const
{
  IndexSet s = *this;
  for (auto i : added)
    if (i < rank_)
      s.mask_ |= std::uint64_t{1} << i;
  return s;
}

std::size_t IndexSet::size() const
{
  return static_cast<std::size_t>(std::popcount(mask_));
}

std::vector<std::size_t> IndexSet::members() const
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rank_; ++i)
    if (contains(i))
      out.push_back(i);
  return out;
}

std::string IndexSet::str() const
{
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i : members()) {
    os << (first ? "" : ",") << i;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string SchlafliSymbol::str() const
{
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < entries.size(); ++k)
    os << (k ? "," : "") << entries[k];
  os << '}';
  return os.str();
}

// ---------------------------------------------------------------- Sggi

std::optional<std::string> sggi_violation(std::span<const Permutation> gens)
{
  if (gens.empty())
    return "an sggi needs at least one generator";
  const auto n = gens.front().degree();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() != n)
      return "generator " + std::to_string(i) + " has a different degree";
    if (gens[i].is_identity())
      return "generator " + std::to_string(i) + " is the identity";
    if (!gens[i].is_involution())
      return "generator " + std::to_string(i) + " is not an involution";
  }
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (gens[i] == gens[j])
        return "generators " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
      if (j > i + 1 && !gens[i].commutes_with(gens[j]))
        return "commuting property fails for pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  return std::nullopt;
}

Sggi make_sggi(std::vector<Permutation> gens)
{
  if (auto why = sggi_violation(gens))
    throw Error("not an sggi: " + *why);
  Sggi s;
  s.degree_ = gens.front().degree();
  s.group_ = PermGroup(s.degree_, gens);
  s.gens_ = std::move(gens);
  return s;
}

PermGroup Sggi::subgroup(const IndexSet& keep) const
{
  std::vector<Permutation> kept;
  for (auto i : keep.members())
    kept.push_back(gens_.at(i));
  return PermGroup(degree_, std::move(kept));
}

SchlafliSymbol schlafli(const Sggi& s)
{
  SchlafliSymbol sym;
  for (std::size_t i = 1; i < s.rank(); ++i)
    sym.entries.push_back((s[i - 1] * s[i]).order());
  return sym;
}

bool is_independent(std::span<const Permutation> gens)
{
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::vector<Permutation> others;
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (j != i)
        others.push_back(gens[j]);
    if (gens[i].is_identity() || PermGroup(gens[i].degree(), others).contains(gens[i]))
      return false;
  }
  return true;
}

bool is_independent(const Sggi& s)
{
  return is_independent(std::span<const Permutation>(s.gens()));
}

namespace {

class IpChecker {
public:
  explicit IpChecker(std::span<const Permutation> gens) : gens_(gens.begin(), gens.end()), r_(gens.size()) {}

  const PermGroup& group(std::uint64_t mask)
  {
    auto it = groups_.find(mask);
    if (it == groups_.end()) {
      std::vector<Permutation> kept;
      for (std::size_t i = 0; i < r_; ++i)
        if ((mask >> i) & 1U)
          kept.push_back(gens_[i]);
      it = groups_.emplace(mask, PermGroup(gens_.front().degree(), std::move(kept))).first;
    }
    return it->second;
  }

  bool pair_holds(std::uint64_t j, std::uint64_t k)
  {
    if ((j & k) == j || (j & k) == k)
      return true;
    const auto& common = group(j & k);
    return intersection_order(group(j), group(k), common.generators()) == common.order();
  }

  IpResult naive()
  {
    if (r_ > 20)
      throw Error("naive intersection check limited to rank 20");
    const std::uint64_t top = std::uint64_t{1} << r_;
    for (std::uint64_t j = 1; j < top; ++j)
      for (std::uint64_t k = j + 1; k < top; ++k)
        if (!pair_holds(j, k))
          return {false, std::make_pair(IndexSet(r_, j), IndexSet(r_, k))};
    return {};
  }

  IpResult recursive()
  {
    IpResult res;
    interval(0, r_ - 1, res);
    return res;
  }

private:
  static std::uint64_t span_mask(std::size_t a, std::size_t b)
  {
    std::uint64_t m = 0;
    for (std::size_t i = a; i <= b; ++i)
      m |= std::uint64_t{1} << i;
    return m;
  }

  bool interval(std::size_t a, std::size_t b, IpResult& res)
  {
    if (b <= a)
      return true;
    auto key = std::make_pair(a, b);
    if (auto it = memo_.find(key); it != memo_.end())
      return it->second;
    bool ok;
    if (b == a + 1) {
      ok = gens_[a] != gens_[b];
      if (!ok)
        res = {false, std::make_pair(IndexSet(r_, {a}), IndexSet(r_, {b}))};
    } else {
      ok = interval(a, b - 1, res) && interval(a + 1, b, res);
      if (ok) {
        const auto left = span_mask(a, b - 1), right = span_mask(a + 1, b);
        ok = pair_holds(left, right);
        if (!ok)
          res = {false, std::make_pair(IndexSet(r_, left), IndexSet(r_, right))};
      }
    }
    memo_[key] = ok;
    return ok;
  }

  std::vector<Permutation> gens_;
  std::size_t r_;
  std::map<std::uint64_t, PermGroup> groups_;
  std::map<std::pair<std::size_t, std::size_t>, bool> memo_;
};

} // namespace

IpResult check_intersection_property(std::span<const Permutation> gens, IpMode mode)
{
  if (gens.empty())
    return {};
  IpChecker checker(gens);
  return mode == IpMode::naive ? checker.naive() : checker.recursive();
}

IpResult check_intersection_property(const Sggi& s, IpMode mode)
{
  return check_intersection_property(std::span<const Permutation>(s.gens()), mode);
}

Sggi dual(const Sggi& s)
{
  return make_sggi(std::vector<Permutation>(s.gens().rbegin(), s.gens().rend()));
}

Sggi parabolic(const Sggi& s, const IndexSet& keep)
{
  if (keep.empty())
    throw Error("parabolic subgroup needs a nonempty index set");
  std::vector<Permutation> kept;
  for (auto i : keep.members())
    kept.push_back(s.gens().at(i));
  return make_sggi(std::move(kept));
}

} // namespace stringc
