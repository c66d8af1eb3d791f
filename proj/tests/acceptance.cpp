// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Tolerances and time limits are fixed here.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oracles.hpp"

using namespace stringc;

namespace {

constexpr double kCatalogSeconds = 120;
constexpr double kPrimitiveSearchSeconds = 120;
constexpr double kImprimitiveSearchSeconds = 300;
constexpr double kStretchBudget = 900;
constexpr int kRandomSggis = 200;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0)
{
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void note(const std::string& s) { notes.push_back(s); }
  void require(bool ok, const std::string& s)
  {
    pass = pass && ok;
    notes.push_back((ok ? "ok   " : "BAD  ") + s);
  }
};

int failures = 0;

void report(int number, const std::string& title, const Outcome& o)
{
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << title << "\n";
  for (const auto& n : o.notes)
    std::cout << "      " << n << "\n";
  std::cout.flush();
  failures += !o.pass;
}

BlockSystem columns(std::size_t n)
{
  std::vector<std::vector<point_t>> b;
  for (std::size_t j = 0; j < n / 2; ++j)
    b.push_back({static_cast<point_t>(j), static_cast<point_t>(j + n / 2)});
  return make_block_system(n, b);
}

bool k2_table(Table t)
{
  return t == Table::T4 || t == Table::T5 || t == Table::T6 || t == Table::T7;
}

std::set<std::string> keys_of(const SearchResult& r)
{
  std::set<std::string> out;
  for (const auto& h : r.hits)
    out.insert(h.key.schlafli.str());
  return out;
}

std::string join(const std::set<std::string>& s)
{
  std::string out;
  for (const auto& x : s)
    out += (out.empty() ? "" : " ") + x;
  return out.empty() ? "(none)" : out;
}

std::string fmt(double sec)
{
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << sec << " s";
  return os.str();
}

SearchResult search(const std::string& ambient, std::size_t min_rank, std::size_t max_rank,
                    std::optional<Order> target = std::nullopt, std::optional<double> budget = std::nullopt)
{
  SearchOptions o;
  o.min_rank = min_rank;
  o.max_rank = max_rank;
  o.target_order = target;
  o.budget_sec = budget;
  return exhaustive_search(ambient_group(ambient), o);
}

void criterion1()
{
  Outcome o;
  const auto t0 = Clock::now();
  auto run = verify_catalog(14);
  const double sec = seconds_since(t0);
  std::size_t table_instances = 0, bad_rank = 0;
  for (const auto& r : run.reports) {
    const bool table = k2_table(r.id.table) || r.id.table == Table::T8;
    if (!table || r.skipped())
      continue;
    ++table_instances;
    const auto* rank = r.find("rank");
    if (rank && rank->evidence["rank"] != 7) {
      ++bad_rank;
      o.require(false, r.id.str() + " has rank " + rank->evidence["rank"].dump() + ", not 7");
    }
    if (!r.passed())
      o.require(false, r.summary_line());
  }
  for (const auto& r : run.reports)
    if (!(k2_table(r.id.table) || r.id.table == Table::T8) && !r.skipped() && !r.passed())
      o.require(false, r.summary_line());
  o.note(std::to_string(table_instances) + " table instances, " + std::to_string(bad_rank) + " with rank other than 7");
  o.note("catalog totals: passed " + std::to_string(run.passed) + ", failed " + std::to_string(run.failed) +
         ", skipped " + std::to_string(run.skipped));
  o.require(sec < kCatalogSeconds, "runtime " + fmt(sec));
  report(1, "catalog at n=14 verifies as string C-groups of rank 7", o);
}

void criterion2()
{
  Outcome o;
  for (const char* id : {"P61#1", "P61#2"}) {
    auto r = verify_instance(FamilyId::parse(id), {{"n", 14}});
    o.require(r.order == Order{10080} && r.schlafli == "{2,3,3,3,3,3}",
              std::string(id) + " order " + (r.order ? to_string(*r.order) : "?") + " schlafli " + r.schlafli);
    o.require(r.passed(), std::string(id) + " report " + (r.passed() ? "PASS" : "FAIL"));
  }
  report(2, "two-block representations: order 10080, {2,3,3,3,3,3}", o);
}

void criterion3()
{
  Outcome o;
  const std::size_t want_rank[] = {6, 5};
  for (int k = 1; k <= 2; ++k) {
    const auto id = FamilyId{Table::REP2N, k};
    auto s = graph_to_sggi(instantiate_family(id, {{"n", 7}}));
    const auto sym = schlafli(s).str();
    bool ok = s.degree() == 14 && s.group().order() == 5040 && s.group().is_transitive() && s.rank() == want_rank[k - 1];
    if (k == 2)
      ok = ok && sym.rfind("{4,6,", 0) == 0;
    o.require(ok, id.str() + " degree " + std::to_string(s.degree()) + " order " + to_string(s.group().order()) +
                      " rank " + std::to_string(s.rank()) + " schlafli " + sym +
                      (s.group().is_transitive() ? " transitive" : " intransitive"));
  }
  report(3, "Sym_7 on 14 points: ranks 6 and 5, order 5040", o);
}

void criterion4()
{
  Outcome o;
  const auto t0 = Clock::now();
  auto alt5 = search("alt5-deg6", 3, 0);
  auto sym5 = search("sym5-deg6", 3, 0);
  const double sec = seconds_since(t0);
  const std::set<std::string> want_alt{"{3,5}", "{5,5}"};
  const std::set<std::string> want_sym{"{3,3,3}", "{4,5}", "{4,6}", "{5,6}", "{6,6}"};
  o.require(alt5.completed && keys_of(alt5) == want_alt, "Alt_5 on 6 points: " + join(keys_of(alt5)));
  o.require(sym5.completed && keys_of(sym5) == want_sym, "Sym_5 on 6 points: " + join(keys_of(sym5)));
  o.require(sec < kPrimitiveSearchSeconds, "runtime " + fmt(sec));

  const auto t1 = Clock::now();
  auto sym6 = search("sym6-deg10", 5, 5, std::nullopt, kStretchBudget);
  const double sec6 = seconds_since(t1);
  if (sym6.completed)
    o.require(keys_of(sym6).count("{3,3,3,3}") == 1,
              "stretch: Sym_6 on 10 points rank 5: " + join(keys_of(sym6)) + " in " + fmt(sec6));
  else
    o.note("stretch: Sym_6 on 10 points rank 5 did not finish within " + fmt(kStretchBudget));
  report(4, "primitive small-degree table", o);
}

void criterion5()
{
  Outcome o;
  const auto t0 = Clock::now();
  // 2^4:S3:S3 has order 576, more than |C2 wr Sym_4| = 384, so it is searched
  // inside Sym_4 wr C2 (order 1152) where it has index 2.
  auto wreath = search("c2wrS4-deg8", 5, 5, Order{576});
  o.note("C2 wr Sym_4 (order 384), subgroup order 576: " + join(keys_of(wreath)) + " (576 does not divide 384)");
  auto deg8 = search("s4wrS2-deg8", 5, 5, Order{576});
  const double sec = seconds_since(t0);
  o.require(deg8.completed && keys_of(deg8).count("{3,4,4,3}") == 1,
            "degree 8 in Sym_4 wr C2, order 576, rank 5: " + join(keys_of(deg8)));
  o.require(sec < kImprimitiveSearchSeconds, "degree-8 runtime " + fmt(sec));

  auto s3s3 = search("s3wrS2-deg6", 4, 4, Order{36});
  o.require(keys_of(s3s3).count("{2,3,3}") == 1,
            "degree 6, Sym_3 x Sym_3 (order 36), rank 4, expecting {2,3,3}: found " + join(keys_of(s3s3)));
  auto c2s3 = search("c2wrS3-deg6", 4, 4, Order{48});
  const auto k48 = keys_of(c2s3);
  o.require(k48.count("{2,3,3}") == 1 && k48.count("{2,3,4}") == 1,
            "degree 6, 2^3:Sym_3 (order 48), rank 4, expecting {2,3,3} and {2,3,4}: found " + join(k48));
  report(5, "imprimitive small-degree table", o);
}

void criterion6()
{
  Outcome o;
  for (long n : {14L, 18L}) {
    const std::size_t m = static_cast<std::size_t>(n / 2);
    const auto b = columns(static_cast<std::size_t>(n));
    std::size_t groups = 0, violations = 0;
    for (const auto& d : family_catalog()) {
      if (!k2_table(d.id.table))
        continue;
      for (const auto& p : admissible_params(d.id, n)) {
        auto s = graph_to_sggi(instantiate_family(d.id, p));
        auto lcr = lcr_decompose(s, b);
        for (const auto& g : {s.group(), s.subgroup(lcr.L)}) {
          ++groups;
          auto res = block_action(g, b);
          const auto kc = classify_kernel(res, m);
          const Order idx = wreath_index(g, res, m);
          const bool idx_ok = idx == 1 || idx == 2 || idx == (Order{1} << (m - 1)) || idx == (Order{1} << m);
          const bool swap_ok = idx != (Order{1} << (m - 1)) || g.contains(all_swap(b));
          if (kc == KernelClass::other || !idx_ok || !swap_ok) {
            ++violations;
            o.require(false, d.id.str() + " " + params_str(p) + " kernel " + to_string(kc) + " index " +
                                 to_string(idx));
          }
        }
      }
    }
    o.require(violations == 0, "n=" + std::to_string(n) + ": " + std::to_string(groups) +
                                   " groups (G and <L>), " + std::to_string(violations) + " violations");
  }
  report(6, "kernel classes and wreath indices", o);
}

void criterion7()
{
  Outcome o;
  const auto b = columns(14);
  std::size_t t6 = 0, t7 = 0, bad = 0;
  for (const auto& d : family_catalog()) {
    if (d.id.table != Table::T6 && d.id.table != Table::T7)
      continue;
    for (const auto& p : admissible_params(d.id, 14)) {
      const std::string tag = d.id.str() + " " + params_str(p);
      auto s = graph_to_sggi(instantiate_family(d.id, p));
      auto ob = order_blocks(s, b);
      if (!ob) {
        ++bad;
        o.require(false, tag + ": no block path");
        continue;
      }
      std::set<std::size_t> nontrivial;
      std::size_t units = 0;
      for (std::size_t i = 1; i + 2 <= s.rank(); ++i) {
        auto c = check_delta_table(s, i, *ob);
        if (!c.ok) {
          ++bad;
          o.require(false, tag + " " + c.detail);
        }
        auto dv = delta_vector(s, i, *ob);
        if (dv && dv->named.form != Form::O)
          nontrivial.insert(i);
        if (dv && dv->named.form == Form::U)
          ++units;
      }
      if (d.id.table == Table::T7) {
        ++t7;
        const auto x = static_cast<std::size_t>(p.at("x"));
        if (nontrivial != std::set<std::size_t>{x, x + 1}) {
          ++bad;
          o.require(false, tag + ": nontrivial deltas are not {x, x+1}");
        }
      } else {
        ++t6;
        auto r0 = kernel_vector(s[0], *ob);
        const std::string r0s = r0 ? r0->named.str() : "none";
        if (units != 1 || (r0s != "L_1" && r0s != "R_1")) {
          ++bad;
          o.require(false, tag + ": " + std::to_string(units) + " deltas equal U, rho_0 vector " + r0s);
        }
      }
    }
  }
  o.require(bad == 0, std::to_string(t7) + " T7 and " + std::to_string(t6) + " T6 instances at n=14, " +
                          std::to_string(bad) + " violations");
  report(7, "delta vectors against the lookup table", o);
}

void criterion8()
{
  Outcome o;
  std::mt19937 rng(20240601);
  int made = 0, disagree = 0, holds = 0;
  while (made < kRandomSggis) {
    const std::size_t n = 4 + rng() % 9;  // 4..12
    const std::size_t r = 2 + rng() % 4;  // 2..5
    auto gens = oracle::random_sggi(n, r, rng);
    if (gens.empty())
      continue;
    ++made;
    const bool a = check_intersection_property(gens, IpMode::naive).holds;
    const bool c = check_intersection_property(gens, IpMode::recursive).holds;
    holds += a;
    disagree += a != c;
  }
  o.require(disagree == 0, std::to_string(made) + " random sggis (degree <= 12, rank <= 5), " +
                               std::to_string(holds) + " with the property, " + std::to_string(disagree) +
                               " disagreements");
  std::size_t checked = 0, bad = 0;
  for (const auto& d : family_catalog()) {
    const long n = d.id.table == Table::REP2N ? 7 : 14;
    for (const auto& p : admissible_params(d.id, n)) {
      auto s = graph_to_sggi(instantiate_family(d.id, p));
      if (s.rank() > 7)
        continue;
      ++checked;
      if (check_intersection_property(s, IpMode::naive).holds != check_intersection_property(s, IpMode::recursive).holds) {
        ++bad;
        o.require(false, d.id.str() + " " + params_str(p) + " disagrees");
      }
    }
  }
  o.require(bad == 0, std::to_string(checked) + " catalog instances with rank <= 7, " + std::to_string(bad) +
                          " disagreements");
  report(8, "naive and recursive intersection checks agree", o);
}

std::string slurp(const std::filesystem::path& p)
{
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion9(const std::filesystem::path& dir)
{
  Outcome o;
  std::size_t files = 0, bad = 0;
  std::vector<std::filesystem::path> prgs;
  if (std::filesystem::is_directory(dir))
    for (const auto& e : std::filesystem::directory_iterator(dir))
      if (e.path().extension() == ".prg")
        prgs.push_back(e.path());
  std::sort(prgs.begin(), prgs.end());
  for (const auto& path : prgs) {
    ++files;
    const std::string text = slurp(path);
    const std::string name = path.stem().string();
    std::vector<std::string> problems;
    try {
      auto g = parse_graph(text);
      if (emit_graph(g) != text)
        problems.push_back("text does not round-trip");
      if (sggi_to_graph(graph_to_sggi(g)) != g)
        problems.push_back("graph -> sggi -> graph differs");
      auto dot = path;
      dot.replace_extension(".dot");
      if (!std::filesystem::exists(dot) || slurp(dot) != emit_dot(g))
        problems.push_back("dot golden differs");
      // name: <table>-<number>_<key><value>...
      std::stringstream parts(name);
      std::string head, kv;
      std::getline(parts, head, '_');
      Params p;
      while (std::getline(parts, kv, '_')) {
        auto digit = kv.find_first_of("0123456789");
        p[kv.substr(0, digit)] = std::stol(kv.substr(digit));
      }
      head[head.find('-')] = '#';
      if (instantiate_family(FamilyId::parse(head), p) != g)
        problems.push_back("differs from the catalog instance");
    } catch (const std::exception& e) {
      problems.push_back(e.what());
    }
    for (const auto& pr : problems)
      o.require(false, name + ": " + pr);
    bad += !problems.empty();
  }
  o.require(files > 0 && bad == 0,
            std::to_string(files) + " golden graphs under " + dir.string() + ", " + std::to_string(bad) + " bad");
  report(9, "round trips and bit-exact DOT goldens", o);
}

void criterion10()
{
  Outcome o;
  auto g = ambient_group("sym4-deg4");
  auto brute = oracle::brute_search(g, 2, 3);
  std::set<Signature> brute_keys;
  for (const auto& t : brute)
    brute_keys.insert(dedup_key(signature(make_sggi(t))));
  SearchOptions so;
  so.reduce_by_conjugacy = false;
  auto res = exhaustive_search(g, so);
  std::size_t tuples = 0;
  std::set<Signature> keys;
  for (const auto& h : res.hits) {
    tuples += h.merged;
    keys.insert(h.key);
  }
  o.require(tuples == brute.size(), "pruned search " + std::to_string(tuples) + " tuples, brute force " +
                                         std::to_string(brute.size()));
  o.require(keys == brute_keys, std::to_string(keys.size()) + " signature classes, brute force " +
                                    std::to_string(brute_keys.size()));
  so.reduce_by_conjugacy = true;
  std::set<Signature> reduced;
  for (const auto& h : exhaustive_search(g, so).hits)
    reduced.insert(h.key);
  o.require(reduced == brute_keys, "with conjugacy reduction: " + std::to_string(reduced.size()) + " classes");
  report(10, "Sym_4 search equals unpruned brute force", o);
}

} // namespace

int main(int argc, char** argv)
{
  const std::filesystem::path golden = argc > 1 ? argv[1] : "data/golden";
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(golden);
  criterion10();
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << "\n";
  return failures ? 1 : 0;
}
