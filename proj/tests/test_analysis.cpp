#include <doctest.h>

#include "oracles.hpp"
#include "stringc/error.hpp"

using namespace stringc;

namespace {

BlockSystem columns(std::size_t n)
{
  std::vector<std::vector<point_t>> b;
  for (std::size_t j = 0; j < n / 2; ++j)
    b.push_back({static_cast<point_t>(j), static_cast<point_t>(j + n / 2)});
  return make_block_system(n, b);
}

Sggi instance(const char* id, Params p)
{
  return graph_to_sggi(instantiate_family(FamilyId::parse(id), p));
}

// Element with vector `bits` on blocks (j, j+m) followed by the swap of blocks a, a+1.
Permutation alpha_beta(std::size_t m, const std::vector<std::uint8_t>& bits, std::size_t a)
{
  const std::size_t n = 2 * m;
  Permutation alpha(n), beta(n);
  std::vector<point_t> ai(alpha.images()), bi(beta.images());
  for (std::size_t j = 0; j < m; ++j)
    if (bits[j])
      std::swap(ai[j], ai[j + m]);
  std::swap(bi[a], bi[a + 1]);
  std::swap(bi[a + m], bi[a + 1 + m]);
  return Permutation::from_images(ai) * Permutation::from_images(bi);
}

} // namespace

TEST_CASE("vector names")
{
  CHECK(name_vector({0, 0, 0, 0}).named.form == Form::O);
  CHECK(name_vector({1, 1, 1, 1}).named.form == Form::U);
  CHECK(name_vector({1, 0, 0, 0}).named.str() == "L_1");
  CHECK(name_vector({0, 0, 1, 1}).named.str() == "R_2");
  CHECK(name_vector({1, 0, 0, 1}).named.str() == "V_1");
  CHECK(name_vector({1, 0, 0, 0, 1}).named.str() == "T_1");
  CHECK(name_vector({1, 0, 1, 0, 1}).named.form == Form::other);
  CHECK(NamedVector{Form::R, 3}.bits(5) == std::vector<std::uint8_t>{0, 0, 0, 1, 1});
}

TEST_CASE("kernel of the full wreath product")
{
  const std::size_t n = 14, m = 7;
  std::vector<Permutation> gens{parse_perm("(1,8)", n), parse_perm("(1,2)(8,9)", n),
                                parse_perm("(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", n)};
  PermGroup g(n, gens);
  auto b = columns(n);
  auto res = block_action(g, b);
  CHECK(res.image_order == 5040);
  CHECK(res.kernel_order == 128);
  CHECK(classify_kernel(res, m) == KernelClass::c2_m);
  CHECK(wreath_index(g, res, m) == 1);
  CHECK(g.contains(all_swap(b)));
  CHECK(to_string(KernelClass::c2_m_minus_1) == "C2^{m-1}");
}

TEST_CASE("kernel of a diagonal group")
{
  const std::size_t n = 14;
  PermGroup g(n, {parse_perm("(1,2)(8,9)", n), parse_perm("(1,2,3,4,5,6,7)(8,9,10,11,12,13,14)", n)});
  auto res = block_action(g, columns(n));
  CHECK(classify_kernel(res, 7) == KernelClass::trivial);
  CHECK(wreath_index(g, res, 7) == 128);
}

TEST_CASE("kernel classes on catalog instances")
{
  auto b = columns(14);
  auto t6 = instance("T6#21", {{"n", 14}});
  auto lcr6 = lcr_decompose(t6, b);
  CHECK(classify_kernel(block_action(t6.subgroup(lcr6.L), b), 7) == KernelClass::c2);
  CHECK(classify_kernel(block_action(t6.group(), b), 7) == KernelClass::c2_m);

  auto t7 = instance("T7#27", {{"n", 14}, {"x", 1}});
  auto lcr7 = lcr_decompose(t7, b);
  auto res7 = block_action(t7.subgroup(lcr7.L), b);
  CHECK(classify_kernel(res7, 7) == KernelClass::c2_m_minus_1);
  CHECK(res7.kernel_order == 64);

  auto t5 = instance("T5#14", {{"n", 14}});
  auto res5 = block_action(t5.group(), b);
  CHECK(wreath_index(t5.group(), res5, 7) == 2);
}

TEST_CASE("L/C/R sizes")
{
  auto b = columns(14);
  auto t5 = lcr_decompose(instance("T5#13", {{"n", 14}}), b);
  CHECK(t5.L.size() == 6);
  CHECK(t5.R.size() + t5.C.size() == 1);
  auto t4 = lcr_decompose(instance("T4#1", {{"n", 14}}), b);
  CHECK(t4.R.size() + t4.C.size() == 2);
  auto t8 = instance("T8#1", {{"n", 14}});
  auto two = make_block_system(14, {{0, 1, 2, 3, 4, 5, 6}, {7, 8, 9, 10, 11, 12, 13}});
  auto lcr8 = lcr_decompose(t8, two);
  CHECK(lcr8.L.size() == 1);
  CHECK(lcr8.R.size() == 0);
}

TEST_CASE("block ordering follows the block path")
{
  auto s = instance("T6#21", {{"n", 14}});
  auto ob = order_blocks(s, columns(14));
  REQUIRE(ob.has_value());
  CHECK(ob->size() == 7);
  std::set<std::pair<point_t, point_t>> seen(ob->blocks.begin(), ob->blocks.end());
  CHECK(seen.size() == 7);
}

TEST_CASE("delta vectors")
{
  auto b = columns(14);
  auto t6 = instance("T6#21", {{"n", 14}});
  auto ob6 = order_blocks(t6, b);
  REQUIRE(ob6);
  auto d1 = delta_vector(t6, 1, *ob6);
  REQUIRE(d1);
  CHECK(d1->named.form == Form::U);

  for (long x : {2L, 4L}) {
    auto t7 = instance("T7#25", {{"n", 14}, {"x", x}});
    auto ob = order_blocks(t7, b);
    REQUIRE(ob);
    for (std::size_t i = 1; i + 2 <= t7.rank(); ++i) {
      auto d = delta_vector(t7, i, *ob);
      REQUIRE(d);
      CHECK((d->named.form != Form::O) == (i == static_cast<std::size_t>(x) || i == static_cast<std::size_t>(x) + 1));
    }
  }
  CHECK_THROWS_AS(delta_vector(t6, 0, *ob6), Error);
  CHECK_THROWS_AS(delta_vector(t6, 6, *ob6), Error);
}

TEST_CASE("delta table against direct products")
{
  for (std::size_t m = 5; m <= 10; ++m) {
    const std::size_t r = m;
    for (std::size_t i = 1; i + 2 <= r; ++i) {
      auto rows = delta_table_rows(i, r);
      auto cols = delta_table_cols(i, r);
      for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t c = 0; c < cols.size(); ++c) {
          CAPTURE(m);
          CAPTURE(i);
          CAPTURE(rows[a].str());
          CAPTURE(cols[c].str());
          auto ra = rows[a].bits(m), rc = cols[c].bits(m);
          REQUIRE(ra.size() == m);
          REQUIRE(rc.size() == m);
          // rho_i swaps blocks i, i+1 and rho_{i+1} swaps blocks i+1, i+2 (1-based)
          auto rho_i = alpha_beta(m, ra, i - 1);
          auto rho_j = alpha_beta(m, rc, i);
          auto delta = (rho_i * rho_j).pow(3);
          std::vector<std::uint8_t> bits(m);
          bool in_kernel = true;
          for (std::size_t j = 0; j < m; ++j) {
            if (delta[j] == j)
              bits[j] = 0;
            else if (delta[j] == j + m)
              bits[j] = 1;
            else
              in_kernel = false;
          }
          REQUIRE(in_kernel);
          auto cell = delta_table_entry(i, r, a, c);
          if (cell)
            CHECK(cell->bits(m) == bits);
          else
            CHECK(std::count(bits.begin(), bits.end(), 1) % 2 == 1);
        }
    }
  }
}

TEST_CASE("delta table holds on catalog instances")
{
  auto b = columns(14);
  for (const char* id : {"T6#17", "T6#21", "T6#23", "T7#25", "T7#27"}) {
    for (const auto& p : admissible_params(FamilyId::parse(id), 14)) {
      auto s = instance(id, p);
      auto ob = order_blocks(s, b);
      REQUIRE(ob);
      for (std::size_t i = 1; i + 2 <= s.rank(); ++i) {
        auto c = check_delta_table(s, i, *ob);
        CHECK_MESSAGE(c.ok, id << " " << params_str(p) << " " << c.detail);
      }
    }
  }
}
