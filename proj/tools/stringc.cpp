// stringc: catalog instances, verification reports and small-degree searches.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stringc/classify.hpp"
#include "stringc/error.hpp"

using namespace stringc;

namespace {

struct Options {
  std::string id;
  long n = 0;
  std::optional<long> i, x;
  std::string format = "text";
  std::string input;
  bool all = false;
  unsigned jobs = 1;
  bool no_timing = false;
  std::optional<double> budget_sec;
  bool stretch = false;
  std::string ambient;
  std::size_t min_rank = 2, max_rank = 0;
  std::optional<std::uint64_t> subgroup_order;
  bool list = false;
};

Params params_of(const Options& o)
{
  Params p{{"n", o.n}};
  if (o.i)
    p["i"] = *o.i;
  if (o.x)
    p["x"] = *o.x;
  return p;
}

FamilyId family_of(const Options& o)
{
  auto id = FamilyId::parse(o.id);
  (void)descriptor(id);
  return id;
}

// Graph from --input (DSL) or from a catalog instance.
PRGraph graph_of(const Options& o)
{
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in)
      throw Error("cannot read " + o.input);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
  }
  if (o.id.empty())
    throw Error("give a family id or --input");
  auto id = family_of(o);
  if (auto why = params_violation(id, params_of(o)))
    throw Error(*why);
  return instantiate_family(id, params_of(o));
}

void print_graph(const PRGraph& g, const std::string& format)
{
  if (format == "dot")
    std::cout << emit_dot(g);
  else if (format == "json")
    std::cout << Json{{"vertices", g.vertices()}, {"rank", g.rank()}, {"graph", emit_graph(g)}}.dump(2) << "\n";
  else
    std::cout << emit_graph(g);
}

int cmd_instantiate(const Options& o)
{
  print_graph(graph_of(o), o.format);
  return 0;
}

int cmd_schlafli(const Options& o)
{
  auto s = graph_to_sggi(graph_of(o));
  if (o.format == "json")
    std::cout << Json{{"schlafli", schlafli(s).str()}, {"rank", s.rank()}}.dump() << "\n";
  else
    std::cout << schlafli(s).str() << "\n";
  return 0;
}

int cmd_dual(const Options& o)
{
  print_graph(sggi_to_graph(dual(graph_to_sggi(graph_of(o)))), o.format);
  return 0;
}

void print_reports(const std::vector<VerificationReport>& reports, const Options& o)
{
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& r : reports)
      arr.push_back(r.to_json(!o.no_timing));
    std::cout << arr.dump(2) << "\n";
    return;
  }
  for (const auto& r : reports) {
    std::cout << r.summary_line();
    if (!o.no_timing)
      std::cout << " (" << static_cast<long>(r.timing_ms) << " ms)";
    std::cout << "\n";
    for (const auto& c : r.checks)
      if (c.status == CheckStatus::fail)
        std::cout << "  " << c.name << ": " << c.evidence.dump() << "\n";
  }
}

int cmd_verify(const Options& o)
{
  if (o.format == "dot")
    throw Error("verify supports text and json output");
  std::vector<VerificationReport> reports;
  if (o.all) {
    auto run = verify_catalog(o.n, o.jobs);
    reports = std::move(run.reports);
  } else {
    if (o.id.empty())
      throw Error("give a family id or --all");
    auto id = family_of(o);
    const auto& d = descriptor(id);
    const bool needs_i = std::find(d.params.begin(), d.params.end(), "i") != d.params.end();
    const bool needs_x = std::find(d.params.begin(), d.params.end(), "x") != d.params.end();
    if ((needs_i && !o.i) || (needs_x && !o.x)) {
      for (const auto& p : admissible_params(id, o.n))
        reports.push_back(verify_instance(id, p));
      if (reports.empty())
        throw Error(degree_violation(id, o.n).value_or("no admissible parameters"));
    } else {
      if (auto why = params_violation(id, params_of(o)))
        throw Error(*why);
      reports.push_back(verify_instance(id, params_of(o)));
    }
  }
  print_reports(reports, o);
  std::size_t passed = 0, failed = 0, skipped = 0;
  for (const auto& r : reports)
    (r.skipped() ? skipped : r.passed() ? passed : failed)++;
  if (o.format == "text")
    std::cout << "passed " << passed << " failed " << failed << " skipped " << skipped << "\n";
  return failed ? 1 : 0;
}

int cmd_search(const Options& o)
{
  if (o.list) {
    for (const auto& a : builtin_ambients())
      std::cout << a.name << "  " << a.description << (a.stretch ? "  [stretch]" : "") << "\n";
    return 0;
  }
  if (o.ambient.empty())
    throw Error("--ambient is required (see --list)");
  const NamedAmbient* named = nullptr;
  for (const auto& a : builtin_ambients())
    if (a.name == o.ambient)
      named = &a;
  if (named && named->stretch && !o.stretch)
    throw Error(o.ambient + " is a stretch ambient; pass --stretch");
  auto g = ambient_group(o.ambient);

  SearchOptions so;
  so.min_rank = o.min_rank;
  so.max_rank = o.max_rank;
  if (o.subgroup_order)
    so.target_order = *o.subgroup_order;
  so.budget_sec = o.budget_sec;
  if (o.stretch && !so.budget_sec)
    so.budget_sec = 900;
  so.jobs = o.jobs;
  auto res = exhaustive_search(g, so);

  if (o.format == "json") {
    Json hits = Json::array();
    for (const auto& h : res.hits) {
      Json gens = Json::array();
      for (const auto& p : h.sggi.gens())
        gens.push_back(p.str());
      hits.push_back({{"schlafli", h.key.schlafli.str()},
                      {"signature", h.signature.str()},
                      {"generators", gens},
                      {"merged", h.merged},
                      {"multiplicity", h.merged > 1 ? "MULTIPLICITY-UNKNOWN" : "1"}});
    }
    std::cout << Json{{"ambient", o.ambient}, {"completed", res.completed}, {"hits", hits}}.dump(2) << "\n";
  } else {
    for (const auto& h : res.hits) {
      std::cout << h.key.schlafli.str() << " rank " << h.key.rank << " order " << to_string(h.key.order) << " ["
                << h.key.str() << "]";
      if (h.merged > 1)
        std::cout << " MULTIPLICITY-UNKNOWN(" << h.merged << " tuples)";
      std::cout << "\n";
    }
  }
  std::cerr << "nodes " << res.nodes << (res.completed ? ", search complete" : ", budget exhausted") << "\n";
  return 0;
}

int cmd_catalog(const Options& o)
{
  if (o.n) {
    Json arr = Json::array();
    for (const auto& d : family_catalog()) {
      const long fn = d.id.table == Table::REP2N ? o.n / 2 : o.n;
      for (const auto& p : admissible_params(d.id, fn)) {
        if (o.format == "json")
          arr.push_back({{"id", d.id.str()}, {"params", p}});
        else
          std::cout << d.id.str() << " " << params_str(p) << "\n";
      }
    }
    if (o.format == "json")
      std::cout << arr.dump(2) << "\n";
    return 0;
  }
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& d : family_catalog())
      arr.push_back({{"id", d.id.str()},
                     {"case_tags", d.case_tags},
                     {"params", d.params},
                     {"domain", d.domain},
                     {"duality_partner", d.partner.str()}});
    std::cout << arr.dump(2) << "\n";
    return 0;
  }
  for (const auto& d : family_catalog()) {
    std::cout << d.id.str() << "  params ";
    for (std::size_t k = 0; k < d.params.size(); ++k)
      std::cout << (k ? "," : "") << d.params[k];
    std::cout << "  dual " << d.partner.str() << "\n    " << d.case_tags << "\n    " << d.domain << "\n";
  }
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"String C-group catalog, verification and search"};
  app.require_subcommand(1);
  Options o;

  auto add_instance = [&](CLI::App* sub, bool id_required) {
    auto* id = sub->add_option("id", o.id, "Family id, e.g. T8#1");
    if (id_required)
      id->required();
    sub->add_option("--n", o.n, "Degree (REP2N: the n of Sym_n)");
    sub->add_option("--i", o.i, "Position parameter i");
    sub->add_option("--x", o.x, "Position parameter x");
    return id;
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };

  auto* inst = app.add_subcommand("instantiate", "Emit the graph of a catalog instance");
  add_instance(inst, true);
  add_format(inst, {"text", "json", "dot"});

  auto* verify = app.add_subcommand("verify", "Verify catalog instances");
  auto* vid = add_instance(verify, false);
  auto* all = verify->add_flag("--all", o.all, "Every catalog family at degree n");
  all->excludes(vid);
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", o.no_timing, "Omit timing fields");
  add_format(verify, {"text", "json"});

  auto* search = app.add_subcommand("search", "Exhaustive search for string C-groups in a named ambient");
  search->add_option("--ambient", o.ambient, "Named ambient group");
  search->add_flag("--list", o.list, "List the named ambients");
  search->add_option("--min-rank", o.min_rank, "Least rank")->check(CLI::Range(2, 64));
  search->add_option("--max-rank", o.max_rank, "Greatest rank (default degree-1)");
  search->add_option("--subgroup-order", o.subgroup_order, "Order of the generated subgroup (default: the ambient)");
  search->add_option("--budget-sec", o.budget_sec, "Time budget in seconds");
  search->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  search->add_flag("--stretch", o.stretch, "Allow stretch ambients (budget 900 s unless given)");
  add_format(search, {"text", "json"});

  auto* schl = app.add_subcommand("schlafli", "Schlafli symbol of a graph");
  auto* sid = add_instance(schl, false);
  schl->add_option("--input", o.input, "Graph file in the text format")->excludes(sid);
  add_format(schl, {"text", "json"});

  auto* du = app.add_subcommand("dual", "Graph of the dual (reversed generators)");
  auto* did = add_instance(du, false);
  du->add_option("--input", o.input, "Graph file in the text format")->excludes(did);
  add_format(du, {"text", "json", "dot"});

  auto* cat = app.add_subcommand("catalog", "List the catalog families, or with --n the admissible instances");
  cat->add_option("--n", o.n, "Degree (REP2N instances use n/2)");
  add_format(cat, {"text", "json"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*inst)
      return cmd_instantiate(o);
    if (*verify)
      return cmd_verify(o);
    if (*search)
      return cmd_search(o);
    if (*schl)
      return cmd_schlafli(o);
    if (*du)
      return cmd_dual(o);
    return cmd_catalog(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
