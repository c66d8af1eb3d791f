#include "stringc/analysis.hpp"

#include <algorithm>
#include <numeric>

#include "stringc/error.hpp"

namespace stringc {

namespace {

void require_invariant(const PermGroup& g, const BlockSystem& b)
{
  if (b.degree != g.degree())
    throw Error("block system degree does not match the group");
  if (!b.is_invariant_under(g.generators()))
    throw Error("block system is not invariant under the group");
}

Permutation block_image(const Permutation& p, const BlockSystem& b, const std::vector<std::size_t>& of)
{
  std::vector<point_t> img(b.block_count());
  for (std::size_t j = 0; j < b.block_count(); ++j)
    img[j] = static_cast<point_t>(of[p[b.blocks[j].front()]]);
  return Permutation::from_images(std::move(img));
}

std::vector<Permutation> images_of(const std::vector<Permutation>& gens, const BlockSystem& b)
{
  auto of = b.block_of();
  std::vector<Permutation> out;
  for (const auto& g : gens)
    out.push_back(block_image(g, b, of));
  return out;
}

std::vector<Permutation> pick(const std::vector<Permutation>& all, const std::vector<std::size_t>& idx)
{
  std::vector<Permutation> out;
  for (auto i : idx)
    out.push_back(all[i]);
  return out;
}

} // namespace

BlockActionResult block_action(const PermGroup& g, const BlockSystem& b)
{
  require_invariant(g, b);
  const std::size_t n = g.degree(), m = b.block_count();
  auto of = b.block_of();
  BlockActionResult res;
  res.image_generators = images_of(g.generators(), b);

  // Diagonal action on points and block indices; the chain with the block
  // points first leaves the kernel below them.
  std::vector<Permutation> diag;
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    std::vector<point_t> img(n + m);
    for (std::size_t x = 0; x < n; ++x)
      img[x] = g.generators()[k][x];
    for (std::size_t j = 0; j < m; ++j)
      img[n + j] = static_cast<point_t>(n + res.image_generators[k][j]);
    diag.push_back(Permutation::from_images(std::move(img)));
  }
  std::vector<point_t> prefix(m);
  std::iota(prefix.begin(), prefix.end(), static_cast<point_t>(n));
  StabilizerChain chain(n + m, diag, prefix);
  for (std::size_t l = 0; l < chain.length(); ++l) {
    const auto& lv = chain.level(l);
    if (l < m) {
      res.image_order *= lv.orbit.size();
      continue;
    }
    res.kernel_order *= lv.orbit.size();
    if (l == m) {
      for (const auto& k : lv.gens) {
        std::vector<point_t> img(n);
        for (std::size_t x = 0; x < n; ++x)
          img[x] = k[x];
        res.kernel_generators.push_back(Permutation::from_images(std::move(img)));
      }
    }
  }
  return res;
}

LcrDecomposition lcr_decompose(const Sggi& s, const BlockSystem& b)
{
  require_invariant(s.group(), b);
  const std::size_t r = s.rank(), m = b.block_count();
  auto imgs = images_of(s.gens(), b);

  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < r; ++i) {
    if (imgs[i].is_identity())
      continue;
    if (!kept.empty() && PermGroup(m, pick(imgs, kept)).contains(imgs[i]))
      continue;
    kept.push_back(i);
  }
  for (std::size_t k = kept.size(); k-- > 0;) {
    std::vector<std::size_t> others = kept;
    others.erase(others.begin() + static_cast<long>(k));
    if (!others.empty() && PermGroup(m, pick(imgs, others)).contains(imgs[kept[k]]))
      kept = others;
  }

  std::uint64_t lmask = 0, cmask = 0;
  for (auto i : kept)
    lmask |= std::uint64_t{1} << i;
  for (std::size_t i = 0; i < r; ++i) {
    if ((lmask >> i) & 1U)
      continue;
    bool commutes = std::all_of(kept.begin(), kept.end(), [&](std::size_t l) { return s[i].commutes_with(s[l]); });
    if (commutes)
      cmask |= std::uint64_t{1} << i;
  }
  const std::uint64_t all = r == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << r) - 1;
  return {IndexSet(r, lmask), IndexSet(r, cmask), IndexSet(r, all & ~lmask & ~cmask)};
}

std::string to_string(KernelClass k)
{
  switch (k) {
  case KernelClass::trivial: return "TRIVIAL";
  case KernelClass::c2: return "C2";
  case KernelClass::c2_m_minus_1: return "C2^{m-1}";
  case KernelClass::c2_m: return "C2^m";
  case KernelClass::other: return "OTHER";
  }
  return "?";
}

KernelClass classify_kernel(const BlockActionResult& result, std::size_t m)
{
  const Order k = result.kernel_order;
  if (k == 1)
    return KernelClass::trivial;
  const auto& gens = result.kernel_generators;
  bool elementary = std::all_of(gens.begin(), gens.end(), [](const Permutation& p) { return p.order() <= 2; });
  for (std::size_t a = 0; elementary && a < gens.size(); ++a)
    for (std::size_t c = a + 1; elementary && c < gens.size(); ++c)
      elementary = gens[a].commutes_with(gens[c]);
  if (!elementary || m == 0 || m >= 127)
    return KernelClass::other;
  if (k == 2)
    return KernelClass::c2;
  if (k == (Order{1} << (m - 1)))
    return KernelClass::c2_m_minus_1;
  if (k == (Order{1} << m))
    return KernelClass::c2_m;
  return KernelClass::other;
}

Order wreath_index(const PermGroup& g, const BlockActionResult& result, std::size_t m)
{
  const Order wreath = (Order{1} << m) * result.image_order;
  return wreath / g.order();
}

Permutation all_swap(const BlockSystem& b)
{
  if (b.block_size() != 2)
    throw Error("all-swap needs blocks of size 2");
  std::vector<point_t> img(b.degree);
  for (const auto& blk : b.blocks) {
    img[blk[0]] = blk[1];
    img[blk[1]] = blk[0];
  }
  return Permutation::from_images(std::move(img));
}

// ---------------------------------------------------------------- vectors

std::vector<std::uint8_t> NamedVector::bits(std::size_t m) const
{
  auto run = [](std::vector<std::uint8_t>& v, std::size_t len, std::uint8_t bit) { v.insert(v.end(), len, bit); };
  std::vector<std::uint8_t> v;
  switch (form) {
  case Form::O: run(v, m, 0); break;
  case Form::U: run(v, m, 1); break;
  case Form::L:
    if (index > m) return {};
    run(v, index, 1), run(v, m - index, 0);
    break;
  case Form::R:
    if (index > m) return {};
    run(v, index, 0), run(v, m - index, 1);
    break;
  case Form::V:
    if (index + 2 > m) return {};
    run(v, index, 1), run(v, 2, 0), run(v, m - index - 2, 1);
    break;
  case Form::T:
    if (index + 3 > m) return {};
    run(v, index, 1), run(v, 3, 0), run(v, m - index - 3, 1);
    break;
  case Form::other: return {};
  }
  return v;
}

std::string NamedVector::str() const
{
  switch (form) {
  case Form::O: return "O";
  case Form::U: return "U";
  case Form::L: return "L_" + std::to_string(index);
  case Form::R: return "R_" + std::to_string(index);
  case Form::V: return "V_" + std::to_string(index);
  case Form::T: return "T_" + std::to_string(index);
  case Form::other: return "OTHER";
  }
  return "?";
}

std::string KernelVector::str() const
{
  std::string out = named.str() + " (";
  for (auto b : bits)
    out += static_cast<char>('0' + b);
  return out + ")";
}

KernelVector name_vector(std::vector<std::uint8_t> bits)
{
  const std::size_t m = bits.size();
  KernelVector kv{std::move(bits), {Form::other, 0}};
  auto try_form = [&](Form f, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i <= hi && i <= m; ++i) {
      NamedVector nv{f, i};
      if (nv.bits(m) == kv.bits) {
        kv.named = nv;
        return true;
      }
    }
    return false;
  };
  if (try_form(Form::O, 0, 0) || try_form(Form::U, 0, 0))
    return kv;
  if (m >= 2 && (try_form(Form::L, 1, m - 1) || try_form(Form::R, 1, m - 1)))
    return kv;
  if (m >= 2 && try_form(Form::V, 0, m - 2))
    return kv;
  if (m >= 3)
    try_form(Form::T, 0, m - 3);
  return kv;
}

std::optional<OrderedBlocks> order_blocks(const Sggi& s, const BlockSystem& b)
{
  require_invariant(s.group(), b);
  if (b.block_size() != 2)
    return std::nullopt;
  const std::size_t m = b.block_count();
  auto imgs = images_of(s.gens(), b);
  // adjacency with the least label on each block pair
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj(m); // (neighbour, label)
  std::size_t edges = 0;
  for (std::size_t l = 0; l < imgs.size(); ++l) {
    auto moved = imgs[l].moved_points();
    if (moved.size() != 2)
      continue;
    auto [a, c] = std::pair{moved[0], moved[1]};
    bool seen = std::any_of(adj[a].begin(), adj[a].end(), [&](auto& e) { return e.first == c; });
    if (seen)
      continue;
    adj[a].push_back({c, l});
    adj[c].push_back({a, l});
    ++edges;
  }
  if (m == 1)
    return OrderedBlocks{{{b.blocks[0][0], b.blocks[0][1]}}};
  if (edges != m - 1)
    return std::nullopt;
  std::optional<std::size_t> start;
  std::size_t best_label = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (adj[j].size() > 2 || adj[j].empty())
      return std::nullopt;
    if (adj[j].size() == 1 && (!start || adj[j][0].second < best_label)) {
      start = j;
      best_label = adj[j][0].second;
    }
  }
  if (!start)
    return std::nullopt;
  OrderedBlocks ob;
  std::size_t prev = m, cur = *start;
  for (std::size_t step = 0; step < m; ++step) {
    ob.blocks.push_back({b.blocks[cur][0], b.blocks[cur][1]});
    std::size_t next = m;
    for (auto [nb, l] : adj[cur])
      if (nb != prev)
        next = nb;
    prev = cur;
    cur = next;
    if (cur == m)
      break;
  }
  if (ob.size() != m)
    return std::nullopt;
  return ob;
}

std::optional<KernelVector> kernel_vector(const Permutation& g, const OrderedBlocks& ob)
{
  std::vector<std::uint8_t> bits;
  for (auto [a, c] : ob.blocks) {
    if (g[a] == a && g[c] == c)
      bits.push_back(0);
    else if (g[a] == c && g[c] == a)
      bits.push_back(1);
    else
      return std::nullopt;
  }
  return name_vector(std::move(bits));
}

std::optional<KernelVector> delta_vector(const Sggi& s, std::size_t i, const OrderedBlocks& ob)
{
  if (i < 1 || i + 2 > s.rank())
    throw Error("delta index " + std::to_string(i) + " outside 1..r-2");
  return kernel_vector((s[i] * s[i + 1]).pow(3), ob);
}

std::optional<KernelVector> alpha_vector(const Sggi& s, std::size_t i, const OrderedBlocks& ob)
{
  if (i < 1 || i >= s.rank() || i >= ob.size())
    throw Error("alpha index " + std::to_string(i) + " out of range");
  auto [a0, a1] = ob.blocks[i - 1];
  auto [b0, b1] = ob.blocks[i];
  std::vector<point_t> img(s.degree());
  std::iota(img.begin(), img.end(), point_t{0});
  img[a0] = b0, img[b0] = a0, img[a1] = b1, img[b1] = a1;
  const Permutation beta = Permutation::from_images(std::move(img));
  const Permutation& rho = s[i];
  const bool swaps = (rho[a0] == b0 || rho[a0] == b1) && (rho[b0] == a0 || rho[b0] == a1);
  if (!swaps)
    return std::nullopt;
  return kernel_vector(rho * beta, ob);
}

// ---------------------------------------------------------------- delta table

namespace {

NamedVector nv(Form f, std::size_t i = 0) { return {f, i}; }

} // namespace

std::vector<NamedVector> delta_table_rows(std::size_t i, std::size_t r)
{
  if (i < 1 || i + 2 > r)
    throw Error("delta table index out of range");
  if (i == 1)
    return {nv(Form::O), nv(Form::R, 2)};
  return {nv(Form::O), nv(Form::L, i - 1), nv(Form::R, i + 1), nv(Form::V, i - 1)};
}

std::vector<NamedVector> delta_table_cols(std::size_t i, std::size_t r)
{
  if (i < 1 || i + 2 > r)
    throw Error("delta table index out of range");
  if (i == r - 2 && i != 1)
    return {nv(Form::O), nv(Form::L, r - 2)};
  return {nv(Form::O), nv(Form::L, i), nv(Form::R, i + 2), nv(Form::V, i)};
}

std::optional<NamedVector> delta_table_entry(std::size_t i, std::size_t r, std::size_t row, std::size_t col)
{
  using Cell = std::optional<NamedVector>;
  const Cell odd = std::nullopt;
  if (row >= delta_table_rows(i, r).size() || col >= delta_table_cols(i, r).size())
    throw Error("delta table cell out of range");
  if (i == 1) {
    const Cell t[2][4] = {{nv(Form::O), odd, nv(Form::R, 3), nv(Form::U)},
                          {nv(Form::U), nv(Form::R, 3), odd, nv(Form::O)}};
    return t[row][col];
  }
  if (i == r - 2) {
    const Cell t[4][2] = {{nv(Form::O), nv(Form::U)},
                          {nv(Form::L, r - 3), odd},
                          {odd, nv(Form::L, r - 3)},
                          {nv(Form::U), nv(Form::O)}};
    return t[row][col];
  }
  const Cell t[4][4] = {
    {nv(Form::O), nv(Form::L, i + 2), nv(Form::R, i + 2), nv(Form::U)},
    {nv(Form::L, i - 1), odd, nv(Form::T, i - 1), nv(Form::R, i - 1)},
    {nv(Form::R, i - 1), nv(Form::T, i - 1), odd, nv(Form::L, i - 1)},
    {nv(Form::U), nv(Form::R, i + 2), nv(Form::L, i + 2), nv(Form::O)},
  };
  return t[row][col];
}

DeltaCheck check_delta_table(const Sggi& s, std::size_t i, const OrderedBlocks& ob)
{
  const std::size_t r = s.rank(), m = ob.size();
  auto ai = alpha_vector(s, i, ob);
  auto aj = alpha_vector(s, i + 1, ob);
  auto d = delta_vector(s, i, ob);
  const std::string where = "i=" + std::to_string(i) + ": ";
  if (!ai || !aj)
    return {false, where + "rho_i does not swap consecutive blocks"};
  if (!d)
    return {false, where + "delta_i moves a block"};
  auto locate = [m](const std::vector<NamedVector>& opts, const KernelVector& v) -> std::optional<std::size_t> {
    for (std::size_t k = 0; k < opts.size(); ++k)
      if (opts[k].bits(m) == v.bits)
        return k;
    return std::nullopt;
  };
  auto row = locate(delta_table_rows(i, r), *ai);
  auto col = locate(delta_table_cols(i, r), *aj);
  if (!row)
    return {false, where + "alpha_i " + ai->str() + " is not a table row"};
  if (!col)
    return {false, where + "alpha_{i+1} " + aj->str() + " is not a table column"};
  auto cell = delta_table_entry(i, r, *row, *col);
  const std::string pair = "(" + ai->named.str() + ", " + aj->named.str() + ")";
  if (!cell)
    return {false, where + pair + " falls in an odd cell"};
  if (cell->bits(m) != d->bits)
    return {false, where + pair + " gives " + d->str() + ", table says " + cell->str()};
  return {true, where + pair + " -> " + d->named.str()};
}

} // namespace stringc
