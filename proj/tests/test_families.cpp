#include <doctest.h>

#include <map>

#include "stringc/error.hpp"
#include "stringc/families.hpp"

using namespace stringc;

TEST_CASE("catalog shape")
{
  std::map<Table, int> count;
  for (const auto& d : family_catalog()) {
    ++count[d.id.table];
    CHECK(d.params.front() == "n");
    CHECK(FamilyId::parse(d.id.str()) == d.id);
  }
  CHECK(count[Table::T4] == 12);
  CHECK(count[Table::T5] == 4);
  CHECK(count[Table::T6] == 8);
  CHECK(count[Table::T7] == 4);
  CHECK(count[Table::T8] == 7);
  CHECK(count[Table::HIGHC] == 2);
  CHECK(count[Table::REP2N] == 2);
  CHECK(count[Table::P61] == 2);
  CHECK(family_catalog().size() == 41);
  CHECK(descriptor(FamilyId::parse("T6#17")).params == std::vector<std::string>{"n", "i"});
  CHECK(descriptor(FamilyId::parse("T8#1")).params == std::vector<std::string>{"n"});
  CHECK_THROWS_AS(FamilyId::parse("T9#1"), Error);
  CHECK_THROWS_AS(FamilyId::parse("T4"), Error);
  CHECK_THROWS_AS(descriptor(FamilyId{Table::T4, 13}), Error);
}

TEST_CASE("parameter domains")
{
  auto t7 = FamilyId::parse("T7#25");
  CHECK_NOTHROW(instantiate_family(t7, {{"n", 14}, {"x", 2}}));
  CHECK(params_violation(t7, {{"n", 14}, {"x", 1}}) == "x even required");
  CHECK(params_violation(FamilyId::parse("T7#27"), {{"n", 14}, {"x", 2}}) == "x odd required");
  CHECK(params_violation(FamilyId::parse("T4#1"), {{"n", 16}}) == "requires n/2 odd");
  CHECK(params_violation(FamilyId::parse("T5#13"), {{"n", 12}}) == "requires n/2 >= 7");
  CHECK(params_violation(FamilyId::parse("T5#13"), {{"n", 15}}) == "requires n even");
  CHECK(params_violation(FamilyId::parse("T6#17"), {{"n", 14}}) == "parameter i required");
  CHECK(params_violation(FamilyId::parse("T6#21"), {{"n", 14}, {"i", 1}}) == "parameter i not used by T6#21");
  CHECK(params_violation(FamilyId::parse("T6#17"), {{"n", 14}, {"i", 6}}) == "requires 1 <= i <= n/2-2");
  CHECK_THROWS_AS(instantiate_family(FamilyId::parse("T4#1"), {{"n", 16}}), Error);
  CHECK(admissible_params(t7, 14).size() == 2);
  CHECK(admissible_params(FamilyId::parse("T6#17"), 14).size() == 5);
  CHECK(admissible_params(FamilyId::parse("T4#1"), 16).empty());
}

TEST_CASE("T8#3 at n=14")
{
  auto g = instantiate_family(FamilyId::parse("T8#3"), {{"n", 14}});
  CHECK(g.vertices() == 14);
  CHECK(g.rank() == 7);
  auto s = graph_to_sggi(g);
  CHECK(s.group().is_transitive());
}

TEST_CASE("T8#1 at n=14 edge pattern")
{
  auto g = instantiate_family(FamilyId::parse("T8#1"), {{"n", 14}});
  std::size_t vertical = 0, horizontal = 0;
  for (const auto& e : g.edges())
    (e.label == 0 ? vertical : horizontal)++;
  CHECK(vertical == 7);
  CHECK(horizontal == 12);
}

TEST_CASE("every admissible instantiation is a valid graph of the stated rank")
{
  for (long n : {14, 16, 18, 20, 22}) {
    for (const auto& d : family_catalog()) {
      const long fn = d.id.table == Table::REP2N ? n / 2 : n;
      for (const auto& p : admissible_params(d.id, fn)) {
        CAPTURE(d.id.str());
        CAPTURE(params_str(p));
        PRGraph g;
        REQUIRE_NOTHROW(g = instantiate_family(d.id, p));
        CHECK(!prgraph_violation(g.vertices(), g.rank(), g.edges()));
        CHECK(g.vertices() == instance_degree(d.id, p));
        CHECK(g.rank() == expected_rank(d.id, p));
        CHECK(g.is_connected());
        if (d.id.table != Table::HIGHC && d.id.table != Table::REP2N) {
          const bool extra = d.id.table == Table::T4 && (d.id.number - 1) % 6 < 2;
          CHECK(g.rank() == static_cast<std::size_t>(n / 2 + (extra ? 1 : 0)));
        }
      }
    }
  }
}

TEST_CASE("small-degree families")
{
  for (long n = 5; n <= 10; ++n) {
    auto g = instantiate_family(FamilyId::parse("HIGHC#1"), {{"n", n}});
    CHECK(g.rank() == static_cast<std::size_t>(n - 1));
  }
  for (long n = 7; n <= 10; ++n) {
    auto g1 = instantiate_family(FamilyId::parse("REP2N#1"), {{"n", n}});
    auto g2 = instantiate_family(FamilyId::parse("REP2N#2"), {{"n", n}});
    CHECK(g1.vertices() == static_cast<std::size_t>(2 * n));
    CHECK(g1.rank() == static_cast<std::size_t>(n - 1));
    CHECK(g2.rank() == static_cast<std::size_t>(n - 2));
  }
}

TEST_CASE("frozen duality partners match computation")
{
  for (const auto& d : family_catalog()) {
    CAPTURE(d.id.str());
    CHECK(compute_duality_partner(d.id, 14).str() == d.partner.str());
  }
}
