#include "stringc/families.hpp"

#include <algorithm>
#include <functional>

namespace stringc {

namespace {

const char* table_name(Table t)
{
  switch (t) {
  case Table::T4: return "T4";
  case Table::T5: return "T5";
  case Table::T6: return "T6";
  case Table::T7: return "T7";
  case Table::T8: return "T8";
  case Table::HIGHC: return "HIGHC";
  case Table::REP2N: return "REP2N";
  case Table::P61: return "P61";
  }
  return "?";
}

// Two rows of m columns: top vertices 1..m, bottom m+1..2m (1-based).
// Columns and horizontal positions are 1-based in the lambdas.
struct TwoRow {
  std::size_t m = 0;
  std::size_t r = 0;
  std::function<IndexSet(std::size_t)> top;    // edge between column j and j+1, top row
  std::function<IndexSet(std::size_t)> bottom; // same, bottom row
  std::function<IndexSet(std::size_t)> vertical;

  PRGraph build() const
  {
    std::vector<Edge> edges;
    auto add = [&](std::size_t a, std::size_t b, const IndexSet& labs) {
      for (auto l : labs.members())
        edges.push_back({static_cast<point_t>(a), static_cast<point_t>(b), l});
    };
    for (std::size_t j = 1; j < m; ++j) {
      add(j - 1, j, top(j));
      add(m + j - 1, m + j, bottom(j));
    }
    for (std::size_t j = 1; j <= m; ++j)
      add(j - 1, m + j - 1, vertical(j));
    return make_prgraph(2 * m, r, std::move(edges));
  }
};

// Same horizontal labels on both rows; h(j) is the label between columns j and j+1.
TwoRow same_rows(std::size_t m, std::size_t r, std::function<std::size_t(std::size_t)> h)
{
  TwoRow t;
  t.m = m;
  t.r = r;
  t.top = [r, h](std::size_t j) { return IndexSet(r, {h(j)}); };
  t.bottom = t.top;
  return t;
}

// Labels of the horizontal edges touching column j.
IndexSet incident(const TwoRow& t, std::size_t j)
{
  IndexSet s = IndexSet::none(t.r);
  if (j > 1)
    s = s | t.top(j - 1);
  if (j < t.m)
    s = s | t.top(j);
  return s;
}

IndexSet complement(const IndexSet& s)
{
  return IndexSet(s.rank(), ~s.mask());
}

PRGraph path_graph(std::size_t n, std::size_t r, const std::function<std::size_t(std::size_t)>& h)
{
  std::vector<Edge> edges;
  for (std::size_t j = 1; j < n; ++j)
    edges.push_back({static_cast<point_t>(j - 1), static_cast<point_t>(j), h(j)});
  return make_prgraph(n, r, std::move(edges));
}

// Horizontal label sequences shared by the T4 families.
std::size_t h_shift2(std::size_t j) { return j + 1; }               // 2,3,...
std::size_t h_plain(std::size_t j) { return j; }                     // 1,2,...
std::size_t h_bent3(std::size_t j) { return j == 1 ? 3 : j; }        // 3,2,3,4,...
std::size_t h_bent2(std::size_t j) { return j == 1 ? 2 : j == 2 ? 1 : j - 1; } // 2,1,2,3,...

PRGraph build_t4(int k, std::size_t m)
{
  const std::size_t big = m + 1, r = m;
  TwoRow t;
  switch (k) {
  case 1:
  case 7:
    t = same_rows(m, big, h_shift2);
    break;
  case 2:
  case 8:
    t = same_rows(m, big, h_plain);
    break;
  case 3:
  case 9:
    t = same_rows(m, r, h_bent3);
    break;
  case 4:
  case 10:
    t = same_rows(m, r, h_bent2);
    break;
  case 5:
  case 11:
    t = same_rows(m, r, [m](std::size_t j) { return j + 2 <= m ? j + 1 : m - 2; });
    break;
  default:
    t = same_rows(m, r, [m](std::size_t j) { return j + 2 <= m ? j : m - 3; });
    break;
  }
  const std::size_t R = t.r;
  switch (k) {
  case 1:
    t.vertical = [R](std::size_t j) { return j == 1 ? IndexSet(R, {0}) : IndexSet(R, {0, 1}); };
    break;
  case 2:
    t.vertical = [R, m](std::size_t j) { return j < m ? IndexSet(R, {0, R - 1}) : IndexSet(R, {0}); };
    break;
  case 3:
    t.vertical = [R](std::size_t j) { return j <= 2 ? IndexSet(R, {0, 1}) : IndexSet(R, {0}); };
    break;
  case 4:
    t.vertical = [R, m](std::size_t j) { return j < m ? IndexSet(R, {0, R - 1}) : IndexSet(R, {0}); };
    break;
  case 5:
    t.vertical = [R](std::size_t j) { return j == 1 ? IndexSet(R, {0}) : IndexSet(R, {0, 1}); };
    break;
  case 6:
    t.vertical = [R, m](std::size_t j) { return j + 2 <= m ? IndexSet(R, {0}) : IndexSet(R, {0, R - 1}); };
    break;
  case 7:
    t.vertical = [t](std::size_t j) {
      auto out = complement(incident(t, j));
      return j == 1 ? out.without({1}) : out;
    };
    break;
  case 8:
    t.vertical = [t, R, m](std::size_t j) {
      auto out = complement(incident(t, j));
      return j == m ? out.without({R - 1}) : out;
    };
    break;
  case 9:
    t.vertical = [t](std::size_t j) {
      auto out = complement(incident(t, j)).without({3});
      return j >= 3 ? out.without({1}) : out;
    };
    break;
  case 10:
    t.vertical = [t, R, m](std::size_t j) {
      auto out = complement(incident(t, j)).without({2});
      return j == m ? out.without({R - 1}) : out;
    };
    break;
  case 11:
    t.vertical = [t, R](std::size_t j) {
      auto out = complement(incident(t, j)).without({R - 2});
      return j == 1 ? out.without({1}) : out;
    };
    break;
  default:
    t.vertical = [t, R, m](std::size_t j) {
      auto out = complement(incident(t, j)).without({R - 3});
      return j + 2 <= m ? out.without({R - 1}) : out;
    };
    break;
  }
  return t.build();
}

PRGraph build_t5(int k, std::size_t m)
{
  TwoRow t = same_rows(m, m, h_plain);
  const std::size_t R = m;
  switch (k) {
  case 13:
    t.vertical = [R](std::size_t j) { return j == 1 ? IndexSet(R, {0}) : IndexSet::none(R); };
    break;
  case 14:
    t.vertical = [R](std::size_t j) { return j == 1 ? IndexSet::none(R) : IndexSet(R, {0}); };
    break;
  case 15:
    t.vertical = [t](std::size_t j) {
      auto out = complement(incident(t, j));
      return j >= 2 ? out.without({0}) : out;
    };
    break;
  default:
    t.vertical = [t](std::size_t j) {
      auto out = complement(incident(t, j));
      return j == 1 ? out.without({0}) : out;
    };
    break;
  }
  return t.build();
}

PRGraph build_t6(int k, std::size_t m, std::size_t i)
{
  TwoRow t = same_rows(m, m, h_plain);
  const std::size_t R = m;
  switch (k) {
  case 17:
    t.vertical = [R, i](std::size_t j) { return IndexSet::at_most(R, i).without({j - 1, j}); };
    break;
  case 18:
    t.vertical = [R, i](std::size_t j) {
      return j == 1 ? IndexSet::at_most(R, i).without({1}) : IndexSet::at_most(R, i).without({0, j - 1, j});
    };
    break;
  case 19:
    t.vertical = [R, i](std::size_t j) {
      auto out = IndexSet::at_least(R, i + 1).without({j - 1, j});
      return j >= 2 ? out.with({0}) : out;
    };
    break;
  case 20:
    t.vertical = [R, i](std::size_t j) {
      auto out = IndexSet::at_least(R, i + 1).without({j - 1, j});
      return j == 1 ? out.with({0}) : out;
    };
    break;
  case 21:
    t.vertical = [R](std::size_t j) {
      return j == 1 ? IndexSet(R, {0}) : j == 2 ? IndexSet::none(R) : IndexSet(R, {1});
    };
    break;
  case 22:
    t.vertical = [R](std::size_t j) {
      return j == 1 ? IndexSet::none(R) : j == 2 ? IndexSet(R, {0}) : IndexSet(R, {0, 1});
    };
    break;
  case 23:
    t.vertical = [R, m](std::size_t j) {
      return j == 1 ? IndexSet(R, {0, R - 1}) : j + 2 <= m ? IndexSet(R, {R - 1}) : IndexSet::none(R);
    };
    break;
  default:
    t.vertical = [R, m](std::size_t j) {
      return j == 1 ? IndexSet(R, {R - 1}) : j + 2 <= m ? IndexSet(R, {0, R - 1}) : IndexSet(R, {0});
    };
    break;
  }
  return t.build();
}

PRGraph build_t7(int k, std::size_t m, std::size_t x)
{
  TwoRow t = same_rows(m, m, h_plain);
  const std::size_t R = m;
  switch (k) {
  case 25:
    t.vertical = [R, x](std::size_t j) { return j <= x ? IndexSet(R, {0, x + 1}) : IndexSet(R, {0}); };
    break;
  case 26:
    t.vertical = [t, x](std::size_t j) {
      auto out = complement(incident(t, j));
      return j <= x ? out.without({x + 1}) : out;
    };
    break;
  case 27:
    t.vertical = [R, x](std::size_t j) { return j <= x + 2 ? IndexSet(R, {0}) : IndexSet(R, {0, x + 1}); };
    break;
  default:
    t.vertical = [t, x](std::size_t j) {
      auto out = complement(incident(t, j));
      return j >= x + 1 ? out.without({x + 1}) : out;
    };
    break;
  }
  return t.build();
}

PRGraph build_t8(int k, std::size_t m, std::size_t i)
{
  const std::size_t R = m;
  TwoRow t = same_rows(m, m, h_plain);
  switch (k) {
  case 1:
    t.vertical = [R](std::size_t) { return IndexSet(R, {0}); };
    break;
  case 2:
    t.vertical = [t](std::size_t j) { return complement(incident(t, j)); };
    break;
  case 3:
    t.top = [R](std::size_t j) { return j == 1 ? IndexSet::none(R) : IndexSet(R, {j}); };
    t.vertical = [R](std::size_t) { return IndexSet(R, {0}); };
    break;
  case 4:
    t.top = [R, i](std::size_t j) {
      return j <= i ? IndexSet(R, {j - 1}) : j == i + 1 ? IndexSet::none(R) : IndexSet(R, {j});
    };
    t.bottom = [R, i](std::size_t j) {
      return j + 1 <= i ? IndexSet(R, {j - 1}) : j == i ? IndexSet::none(R) : IndexSet(R, {j});
    };
    t.vertical = [R, i](std::size_t) { return IndexSet(R, {i}); };
    break;
  default: {
    // (5)-(7): vertical 1-edges, a bundle between the first two top vertices
    const IndexSet bundle = k == 5 ? IndexSet(R, {0, 2}) : k == 6 ? IndexSet(R, {0, 3}) : IndexSet(R, {0, 2, 3});
    t.top = [R, bundle](std::size_t j) {
      return j == 1 ? bundle : j == 2 ? IndexSet::none(R) : IndexSet(R, {j});
    };
    if (k == 5)
      t.bottom = [R](std::size_t j) { return j == 1 ? IndexSet::none(R) : IndexSet(R, {j}); };
    else
      t.bottom = [R](std::size_t j) { return j == 1 ? IndexSet(R, {3}) : IndexSet(R, {j}); };
    t.vertical = [R](std::size_t) { return IndexSet(R, {1}); };
    break;
  }
  }
  return t.build();
}

PRGraph build_rep2n(int k, std::size_t n)
{
  // n columns carrying Sym_n on 2n points
  if (k == 1) {
    const std::size_t r = n - 1;
    TwoRow t = same_rows(n, r, [](std::size_t j) { return j - 1; });
    t.vertical = [t](std::size_t j) { return complement(incident(t, j)); };
    return t.build();
  }
  const std::size_t r = n - 2;
  TwoRow t = same_rows(n, r, [](std::size_t j) { return j == 1 ? 1 : j == 2 ? 0 : j - 2; });
  t.vertical = [t](std::size_t j) { return complement(incident(t, j)).without({1}); };
  return t.build();
}

std::vector<FamilyDescriptor> build_catalog()
{
  // Partners frozen from compute_duality_partner at n=14 (REP2N at n=7).
  const DualityPartner self{DualityPartner::Kind::self, {}};
  const DualityPartner unlisted{DualityPartner::Kind::unlisted, {}};
  std::vector<FamilyDescriptor> c;
  auto add = [&](Table t, int k, std::string tags, std::vector<std::string> params, std::string domain,
                 DualityPartner partner = {}) {
    c.push_back({FamilyId{t, k}, std::move(tags), std::move(params), std::move(domain), partner});
  };
  const std::string s_intr = "<L>=Sym_{n/2}, <L> intransitive";
  const std::string s_tran = "<L>=Sym_{n/2}, <L> transitive";
  for (int k = 1; k <= 12; ++k)
    add(Table::T4, k, "k=2, |R u C|=2, " + (k <= 6 ? s_intr : s_tran), {"n"}, "n even, n/2 >= 7, n/2 odd");
  for (int k = 13; k <= 16; ++k)
    add(Table::T5, k, "k=2, |R u C|=1, " + (k <= 14 ? s_intr : s_tran), {"n"}, "n even, n/2 >= 7");
  for (int k = 17; k <= 24; ++k) {
    const bool has_i = k <= 20;
    add(Table::T6, k, "k=2, |R u C|=1, <L>!=Sym_{n/2}, Ker(f)=C2",
        has_i ? std::vector<std::string>{"n", "i"} : std::vector<std::string>{"n"},
        has_i ? "n even, n/2 >= 7, 1 <= i <= n/2-2" : "n even, n/2 >= 7");
  }
  const std::string t7 = "k=2, |R u C|=1, <L>!=Sym_{n/2}, Ker(f)!=C2";
  for (int k = 25; k <= 28; ++k)
    add(Table::T7, k, t7, {"n", "x"},
        std::string("n even, n/2 >= 7, n/2 odd, ") + (k <= 26 ? "x even" : "x odd") + ", 1 <= x <= n/2-3");
  for (int k = 1; k <= 7; ++k)
    add(Table::T8, k, k <= 2 ? "m=2, |R|=0, G=C2 x Sym_{n/2}" : "m=2",
        k == 4 ? std::vector<std::string>{"n", "i"} : std::vector<std::string>{"n"},
        k == 4 ? "n even, n/2 >= 7, 1 <= i <= n/2-2" : "n even, n/2 >= 7", k == 4 ? self : unlisted);
  add(Table::HIGHC, 1, "primitive Sym_n, rank n-1 (simplex)", {"n"}, "n >= 5", self);
  add(Table::HIGHC, 2, "primitive Sym_n, rank n-2", {"n"}, "n >= 7");
  add(Table::REP2N, 1, "Sym_n on 2n points, rank n-1", {"n"}, "n >= 7", self);
  add(Table::REP2N, 2, "Sym_n on 2n points, rank n-2", {"n"}, "n >= 7");
  add(Table::P61, 1, "m=2, |R|=0, G=C2 x Sym_{n/2}", {"n"}, "n even, n/2 >= 7");
  add(Table::P61, 2, "m=2, |R|=0, G=C2 x Sym_{n/2}", {"n"}, "n even, n/2 >= 7");
  return c;
}

} // namespace

std::string FamilyId::str() const
{
  return std::string(table_name(table)) + "#" + std::to_string(number);
}

FamilyId FamilyId::parse(const std::string& text)
{
  auto hash = text.find('#');
  if (hash == std::string::npos)
    throw Error("family id must look like T4#1, got '" + text + "'");
  const std::string head = text.substr(0, hash);
  int num = 0;
  try {
    std::size_t used = 0;
    num = std::stoi(text.substr(hash + 1), &used);
    if (used != text.size() - hash - 1)
      throw Error("");
  } catch (...) {
    throw Error("bad family number in '" + text + "'");
  }
  for (auto t : {Table::T4, Table::T5, Table::T6, Table::T7, Table::T8, Table::HIGHC, Table::REP2N, Table::P61}) {
    if (head == table_name(t)) {
      FamilyId id{t, num};
      for (const auto& d : family_catalog())
        if (d.id == id)
          return id;
      throw Error("no family " + text);
    }
  }
  throw Error("unknown table in '" + text + "'");
}

std::string params_str(const Params& p)
{
  std::string out;
  for (const auto& [k, v] : p)
    out += (out.empty() ? "" : ",") + k + "=" + std::to_string(v);
  return out;
}

std::string DualityPartner::str() const
{
  switch (kind) {
  case Kind::self: return "SELF";
  case Kind::entry: return other.str();
  case Kind::unlisted: return "UNLISTED";
  }
  return "?";
}

const std::vector<FamilyDescriptor>& family_catalog()
{
  static const std::vector<FamilyDescriptor> catalog = build_catalog();
  return catalog;
}

const FamilyDescriptor& descriptor(const FamilyId& id)
{
  for (const auto& d : family_catalog())
    if (d.id == id)
      return d;
  throw Error("no family " + id.str());
}

std::optional<std::string> degree_violation(const FamilyId& id, long n)
{
  if (id.table == Table::HIGHC) {
    if (n < (id.number == 1 ? 5 : 7))
      return id.number == 1 ? "requires n >= 5" : "requires n >= 7";
    return std::nullopt;
  }
  if (id.table == Table::REP2N)
    return n < 7 ? std::optional<std::string>("requires n >= 7") : std::nullopt;
  if (n % 2 != 0)
    return "requires n even";
  if (n / 2 < 7)
    return "requires n/2 >= 7";
  if ((id.table == Table::T4 || id.table == Table::T7) && (n / 2) % 2 == 0)
    return "requires n/2 odd";
  return std::nullopt;
}

std::optional<std::string> params_violation(const FamilyId& id, const Params& p)
{
  const auto& d = descriptor(id);
  for (const auto& name : d.params)
    if (!p.count(name))
      return "parameter " + name + " required";
  for (const auto& [name, v] : p)
    if (std::find(d.params.begin(), d.params.end(), name) == d.params.end())
      return "parameter " + name + " not used by " + id.str();
  const long n = p.at("n");
  if (auto why = degree_violation(id, n))
    return why;
  const long m = n / 2;
  if (p.count("i")) {
    const long i = p.at("i");
    if (i < 1 || i > m - 2)
      return "requires 1 <= i <= n/2-2";
  }
  if (p.count("x")) {
    const long x = p.at("x");
    if (id.number <= 26 && x % 2 != 0)
      return "x even required";
    if (id.number >= 27 && x % 2 == 0)
      return "x odd required";
    if (x < 1 || x > m - 3)
      return "requires 1 <= x <= n/2-3";
  }
  return std::nullopt;
}

std::vector<Params> admissible_params(const FamilyId& id, long n)
{
  const auto& d = descriptor(id);
  std::vector<Params> out;
  if (d.params.size() == 1) {
    if (!params_violation(id, {{"n", n}}))
      out.push_back({{"n", n}});
    return out;
  }
  for (long v = 0; v <= n; ++v) {
    Params p{{"n", n}, {d.params[1], v}};
    if (!params_violation(id, p))
      out.push_back(p);
  }
  return out;
}

std::size_t instance_degree(const FamilyId& id, const Params& p)
{
  const auto n = static_cast<std::size_t>(p.at("n"));
  return id.table == Table::REP2N ? 2 * n : n;
}

std::size_t expected_rank(const FamilyId& id, const Params& p)
{
  const auto n = static_cast<std::size_t>(p.at("n"));
  switch (id.table) {
  case Table::HIGHC: return id.number == 1 ? n - 1 : n - 2;
  case Table::REP2N: return id.number == 1 ? n - 1 : n - 2;
  case Table::T4: return (id.number - 1) % 6 < 2 ? n / 2 + 1 : n / 2;
  default: return n / 2;
  }
}

PRGraph instantiate_family(const FamilyId& id, const Params& p)
{
  if (auto why = params_violation(id, p))
    throw Error(id.str() + " " + params_str(p) + ": " + *why);
  const auto n = static_cast<std::size_t>(p.at("n"));
  const auto m = n / 2;
  auto get = [&](const char* k) { return static_cast<std::size_t>(p.at(k)); };
  switch (id.table) {
  case Table::T4: return build_t4(id.number, m);
  case Table::T5: return build_t5(id.number, m);
  case Table::T6: return build_t6(id.number, m, id.number <= 20 ? get("i") : 0);
  case Table::T7: return build_t7(id.number, m, get("x"));
  case Table::T8: return build_t8(id.number, m, id.number == 4 ? get("i") : 0);
  case Table::P61: return build_t8(id.number, m, 0);
  case Table::HIGHC:
    if (id.number == 1)
      return path_graph(n, n - 1, [](std::size_t j) { return j - 1; });
    return path_graph(n, n - 2, [](std::size_t j) { return j == 1 ? 1 : j == 2 ? 0 : j - 2; });
  case Table::REP2N: return build_rep2n(id.number, n);
  }
  throw Error("unhandled family");
}

DualityPartner compute_duality_partner(const FamilyId& id, long n)
{
  const long own_n = id.table == Table::REP2N ? n / 2 : n;
  std::optional<CanonicalForm> dual_form;
  bool self_match = true;
  std::optional<FamilyId> other;
  bool any = false;
  for (const auto& p : admissible_params(id, own_n)) {
    any = true;
    auto dual_graph = sggi_to_graph(dual(graph_to_sggi(instantiate_family(id, p))));
    auto form = canonical_form(dual_graph);
    bool self_here = false;
    std::optional<FamilyId> found;
    for (const auto& d : family_catalog()) {
      const long dn = d.id.table == Table::REP2N ? n / 2 : n;
      for (const auto& q : admissible_params(d.id, dn)) {
        if (instance_degree(d.id, q) != dual_graph.vertices())
          continue;
        auto g = instantiate_family(d.id, q);
        if (g.rank() != dual_graph.rank() || g.edges().size() != dual_graph.edges().size())
          continue;
        if (canonical_form(g) == form) {
          if (d.id == id)
            self_here = true;
          else if (!found)
            found = d.id;
        }
      }
    }
    self_match = self_match && self_here;
    if (!self_here && found)
      other = found;
    if (!self_here && !found)
      return {DualityPartner::Kind::unlisted, {}};
  }
  if (!any)
    throw Error(id.str() + " has no admissible parameters at n=" + std::to_string(n));
  if (self_match)
    return {DualityPartner::Kind::self, {}};
  return {DualityPartner::Kind::entry, *other};
}

} // namespace stringc
