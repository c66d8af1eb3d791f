#include "stringc/classify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "stringc/error.hpp"

namespace stringc {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0)
{
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

// n! saturating at the largest Order.
Order factorial(std::size_t n)
{
  Order f = 1;
  const Order max = ~Order{0};
  for (std::size_t k = 2; k <= n; ++k) {
    if (f > max / k)
      return max;
    f *= k;
  }
  return f;
}

Json witness_json(const IpResult& ip)
{
  if (!ip.witness)
    return nullptr;
  return Json{{"J", ip.witness->first.str()}, {"K", ip.witness->second.str()}};
}

std::vector<std::vector<point_t>> column_blocks(std::size_t n)
{
  std::vector<std::vector<point_t>> blocks;
  for (std::size_t j = 0; j < n / 2; ++j)
    blocks.push_back({static_cast<point_t>(j), static_cast<point_t>(j + n / 2)});
  return blocks;
}

bool is_k2_table(Table t)
{
  return t == Table::T4 || t == Table::T5 || t == Table::T6 || t == Table::T7;
}

bool is_m2_table(Table t)
{
  return t == Table::T8 || t == Table::P61;
}

Json kernel_evidence(const PermGroup& g, const BlockSystem& b, bool& ok)
{
  const std::size_t m = b.block_count();
  auto ba = block_action(g, b);
  auto kc = classify_kernel(ba, m);
  const Order idx = wreath_index(g, ba, m);
  const Order half = Order{1} << (m - 1), full = Order{1} << m;
  const bool idx_ok = idx == 1 || idx == 2 || idx == half || idx == full;
  std::optional<bool> swap_member;
  if (idx == half)
    swap_member = g.contains(all_swap(b));
  ok = ok && kc != KernelClass::other && idx_ok && swap_member.value_or(true);
  Json e{{"image_order", order_json(ba.image_order)},
         {"kernel_order", order_json(ba.kernel_order)},
         {"kernel_class", to_string(kc)},
         {"wreath_index", order_json(idx)}};
  if (swap_member)
    e["all_swap_member"] = *swap_member;
  return e;
}

class Verifier {
public:
  Verifier(const FamilyId& id, const Params& p)
  {
    rep_.id = id;
    rep_.params = p;
  }

  VerificationReport run()
  {
    const auto t0 = Clock::now();
    body();
    rep_.timing_ms = ms_since(t0);
    return std::move(rep_);
  }

private:
  void add(std::string name, CheckStatus st, Json ev = Json::object())
  {
    rep_.checks.push_back({std::move(name), st, std::move(ev)});
  }
  void add(std::string name, bool ok, Json ev = Json::object())
  {
    add(std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(ev));
  }

  void body()
  {
    const FamilyId& id = rep_.id;
    if (auto why = params_violation(id, rep_.params)) {
      add("domain", CheckStatus::skip, {{"reason", *why}});
      return;
    }
    PRGraph g;
    try {
      g = instantiate_family(id, rep_.params);
    } catch (const Error& e) {
      add("graph", false, {{"error", e.what()}});
      return;
    }
    add("graph", true, {{"vertices", g.vertices()}, {"edges", g.edges().size()}, {"connected", g.is_connected()}});

    std::optional<Sggi> built;
    try {
      built = graph_to_sggi(g);
    } catch (const Error& e) {
      add("sggi", false, {{"error", e.what()}});
      return;
    }
    const Sggi& s = *built;
    add("sggi", true, {{"rank", s.rank()}});
    rep_.order = s.group().order();
    rep_.schlafli = schlafli(s).str();

    add("independence", is_independent(s));
    const auto ip = check_intersection_property(s, IpMode::recursive);
    add("intersection_property", ip.holds, {{"mode", "recursive"}, {"witness", witness_json(ip)}});
    if (s.rank() <= 7) {
      const auto naive = check_intersection_property(s, IpMode::naive);
      add("intersection_property_naive", naive.holds == ip.holds,
          {{"holds", naive.holds}, {"witness", witness_json(naive)}});
    } else {
      add("intersection_property_naive", CheckStatus::skip, {{"reason", "rank above 7"}});
    }

    const std::size_t n = s.degree();
    const std::size_t want = expected_rank(id, rep_.params);
    Json rank_ev{{"rank", s.rank()}, {"expected", want}};
    bool rank_ok = s.rank() == want;
    if (is_k2_table(id.table) || is_m2_table(id.table)) {
      rank_ev["half_degree"] = n / 2;
      rank_ok = rank_ok && s.rank() >= n / 2;
    }
    add("rank", rank_ok, rank_ev);

    const bool transitive = s.group().is_transitive();
    add("transitive", transitive);
    Json sub_ev{{"order", order_json(s.group().order())}, {"degree_factorial", order_json(factorial(n))}};
    if (is_k2_table(id.table) || is_m2_table(id.table))
      add("proper_subgroup", s.group().order() < factorial(n), sub_ev);
    else
      add("proper_subgroup", CheckStatus::skip, sub_ev);

    std::vector<BlockSystem> systems;
    if (transitive)
      systems = s.group().all_block_systems();
    Json sys_ev = Json::array();
    for (const auto& b : systems)
      sys_ev.push_back(std::to_string(b.block_count()) + "x" + std::to_string(b.block_size()));
    if (id.table == Table::HIGHC)
      add("primitivity", transitive && systems.empty(), {{"expected", "primitive"}, {"block_systems", sys_ev}});
    else if (id.table == Table::REP2N)
      add("primitivity", CheckStatus::skip, {{"block_systems", sys_ev}});
    else
      add("primitivity", !systems.empty(), {{"expected", "imprimitive"}, {"block_systems", sys_ev}});

    if (is_k2_table(id.table))
      k2_checks(s);
    else if (is_m2_table(id.table))
      m2_checks(s, systems);
    add("schlafli", true, {{"symbol", rep_.schlafli}});
  }

  void k2_checks(const Sggi& s)
  {
    const FamilyId& id = rep_.id;
    const std::size_t n = s.degree(), m = n / 2;
    auto blocks = make_block_system(n, column_blocks(n));
    const bool inv = blocks.is_invariant_under(s.gens());
    add("blocks", inv, {{"system", "vertical pairs"}, {"blocks", m}});
    if (!inv)
      return;

    auto lcr = lcr_decompose(s, blocks);
    const PermGroup lgroup = s.subgroup(lcr.L);
    bool kernel_ok = true;
    Json kev{{"group", kernel_evidence(s.group(), blocks, kernel_ok)},
             {"L", kernel_evidence(lgroup, blocks, kernel_ok)}};
    add("kernel", kernel_ok, kev);

    Json lev{{"L", lcr.L.str()}, {"C", lcr.C.str()}, {"R", lcr.R.str()}};
    add("lcr", lcr.C.size() <= 1 && lcr.L.size() <= m - 1, lev);

    const std::size_t rc = lcr.R.size() + lcr.C.size();
    const bool l_sym = lgroup.order() == factorial(m);
    const bool l_trans = lgroup.is_transitive();
    Json hev{{"R_union_C", rc}, {"L_is_symmetric", l_sym}, {"L_transitive", l_trans}};
    bool header_ok = true;
    switch (id.table) {
    case Table::T4:
      header_ok = rc == 2 && l_sym && l_trans == (id.number > 6);
      break;
    case Table::T5:
      header_ok = rc == 1 && l_sym && l_trans == (id.number > 14);
      break;
    case Table::T6:
    case Table::T7: {
      auto lk = classify_kernel(block_action(lgroup, blocks), m);
      hev["L_kernel"] = to_string(lk);
      header_ok = rc == 1 && !l_sym && ((lk == KernelClass::c2) == (id.table == Table::T6));
      break;
    }
    default:
      break;
    }
    add("case_header", header_ok, hev);

    if (id.table == Table::T6 || id.table == Table::T7)
      delta_checks(s, blocks);
  }

  void delta_checks(const Sggi& s, const BlockSystem& blocks)
  {
    auto ob = order_blocks(s, blocks);
    if (!ob) {
      add("delta", false, {{"error", "block action is not a path"}});
      return;
    }
    bool ok = true;
    Json cells = Json::array();
    Json deltas = Json::array();
    std::vector<std::size_t> nontrivial;
    std::size_t u_count = 0, o_count = 0;
    for (std::size_t i = 1; i + 2 <= s.rank(); ++i) {
      auto c = check_delta_table(s, i, *ob);
      ok = ok && c.ok;
      cells.push_back(c.detail);
      auto d = delta_vector(s, i, *ob);
      deltas.push_back(d ? d->named.str() : "NOT_IN_KERNEL");
      if (!d)
        continue;
      if (d->named.form != Form::O)
        nontrivial.push_back(i);
      u_count += d->named.form == Form::U;
      o_count += d->named.form == Form::O;
    }
    Json ev{{"deltas", deltas}, {"table", cells}};
    if (rep_.id.table == Table::T7) {
      const auto x = static_cast<std::size_t>(rep_.params.at("x"));
      ev["nontrivial"] = nontrivial;
      ok = ok && nontrivial == std::vector<std::size_t>{x, x + 1};
    } else {
      auto r0 = kernel_vector(s[0], *ob);
      const std::string r0s = r0 ? r0->named.str() : "NOT_IN_KERNEL";
      ev["rho0"] = r0s;
      ok = ok && u_count == 1 && o_count + 1 == s.rank() - 2 && (r0s == "L_1" || r0s == "R_1");
    }
    add("delta", ok, ev);
  }

  void m2_checks(const Sggi& s, const std::vector<BlockSystem>& systems)
  {
    auto it = std::find_if(systems.begin(), systems.end(), [](const BlockSystem& b) { return b.block_count() == 2; });
    add("blocks", it != systems.end(), {{"system", "two blocks"}});
    if (it == systems.end())
      return;
    auto ba = block_action(s.group(), *it);
    auto lcr = lcr_decompose(s, *it);
    const std::size_t k = s.degree() / 2;
    add("kernel", ba.image_order == 2,
        {{"image_order", order_json(ba.image_order)}, {"kernel_order", order_json(ba.kernel_order)}});
    add("lcr", lcr.C.size() <= k - 1 && lcr.L.size() <= 1,
        {{"L", lcr.L.str()}, {"C", lcr.C.str()}, {"R", lcr.R.str()}});
    const bool sym_times_c2 = rep_.id.table == Table::P61 || rep_.id.number <= 2;
    if (sym_times_c2) {
      const Order want = 2 * factorial(k);
      add("case_header", lcr.R.empty() && s.group().order() == want,
          {{"R", lcr.R.str()}, {"order", order_json(s.group().order())}, {"expected_order", order_json(want)}});
    }
  }

  VerificationReport rep_;
};

} // namespace

Json order_json(Order o)
{
  if (o <= std::numeric_limits<std::uint64_t>::max())
    return static_cast<std::uint64_t>(o);
  return to_string(o);
}

const char* to_string(CheckStatus s)
{
  switch (s) {
  case CheckStatus::pass: return "pass";
  case CheckStatus::fail: return "fail";
  case CheckStatus::skip: return "skip";
  }
  return "?";
}

bool VerificationReport::passed() const
{
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

bool VerificationReport::skipped() const
{
  return checks.size() == 1 && checks.front().name == "domain";
}

const CheckResult* VerificationReport::find(const std::string& name) const
{
  for (const auto& c : checks)
    if (c.name == name)
      return &c;
  return nullptr;
}

std::vector<std::string> VerificationReport::failures() const
{
  std::vector<std::string> out;
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail)
      out.push_back(c.name);
  return out;
}

Json VerificationReport::to_json(bool with_timing) const
{
  Json params_j = Json::object();
  for (const auto& [k, v] : params)
    params_j[k] = v;
  Json checks_j = Json::object();
  for (const auto& c : checks)
    checks_j[c.name] = {{"status", stringc::to_string(c.status)}, {"evidence", c.evidence}};
  Json j{{"instance", id.str()},
         {"params", params_j},
         {"status", skipped() ? "SKIP" : passed() ? "PASS" : "FAIL"},
         {"checks", checks_j},
         {"schlafli", schlafli.empty() ? Json(nullptr) : Json(schlafli)},
         {"order", order ? order_json(*order) : Json(nullptr)}};
  if (with_timing)
    j["timing_ms"] = timing_ms;
  return j;
}

std::string VerificationReport::summary_line() const
{
  std::ostringstream os;
  os << id.str() << " " << params_str(params) << " ";
  if (skipped()) {
    os << "SKIP " << checks.front().evidence.value("reason", "");
    return os.str();
  }
  os << (passed() ? "PASS" : "FAIL");
  if (order)
    os << " order " << to_string(*order);
  if (!schlafli.empty())
    os << " schlafli " << schlafli;
  auto bad = failures();
  if (!bad.empty()) {
    os << " failed:";
    for (const auto& b : bad)
      os << " " << b;
  }
  return os.str();
}

VerificationReport verify_instance(const FamilyId& id, const Params& params)
{
  return Verifier(id, params).run();
}

// ---------------------------------------------------------------- catalog

namespace {

long family_n(const FamilyId& id, long n)
{
  return id.table == Table::REP2N ? n / 2 : n;
}

void add_duality_checks(CatalogRun& run)
{
  struct Entry {
    std::size_t report;
    CanonicalForm form;
    CanonicalForm dual_form;
  };
  std::vector<Entry> entries;
  for (std::size_t k = 0; k < run.reports.size(); ++k) {
    const auto& rep = run.reports[k];
    if (rep.skipped() || !rep.find("sggi") || rep.find("sggi")->status != CheckStatus::pass)
      continue;
    auto g = instantiate_family(rep.id, rep.params);
    entries.push_back({k, canonical_form(g), canonical_form(sggi_to_graph(dual(graph_to_sggi(g))))});
  }
  for (const auto& e : entries) {
    auto& rep = run.reports[e.report];
    std::vector<std::string> matches;
    for (const auto& o : entries)
      if (o.form == e.dual_form)
        matches.push_back(run.reports[o.report].id.str() + " " + params_str(run.reports[o.report].params));
    const auto& partner = descriptor(rep.id).partner;
    bool ok = false;
    switch (partner.kind) {
    case DualityPartner::Kind::unlisted:
      ok = matches.empty();
      break;
    case DualityPartner::Kind::self:
    case DualityPartner::Kind::entry: {
      const FamilyId want = partner.kind == DualityPartner::Kind::self ? rep.id : partner.other;
      for (const auto& o : entries)
        ok = ok || (o.form == e.dual_form && run.reports[o.report].id == want);
      break;
    }
    }
    rep.checks.push_back({"duality", ok ? CheckStatus::pass : CheckStatus::fail,
                          {{"partner", partner.str()}, {"dual_matches", matches}}});
  }
}

} // namespace

CatalogRun verify_catalog(long n, unsigned jobs)
{
  if (n % 2 != 0 || n / 2 < 7)
    throw Error("catalog verification needs n even with n/2 >= 7, got n=" + std::to_string(n));
  CatalogRun run;
  run.n = n;
  std::vector<std::pair<FamilyId, Params>> work;
  for (const auto& d : family_catalog()) {
    const long fn = family_n(d.id, n);
    auto ps = admissible_params(d.id, fn);
    if (ps.empty()) {
      VerificationReport rep;
      rep.id = d.id;
      rep.params = {{"n", fn}};
      auto why = degree_violation(d.id, fn);
      rep.checks.push_back({"domain", CheckStatus::skip, {{"reason", why.value_or("no admissible parameters")}}});
      run.reports.push_back(std::move(rep));
      continue;
    }
    for (auto& p : ps)
      work.emplace_back(d.id, std::move(p));
  }

  std::vector<VerificationReport> done(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < work.size(); k = next++)
      done[k] = verify_instance(work[k].first, work[k].second);
  };
  const unsigned threads = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(work.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool)
    t.join();

  for (auto& rep : done)
    run.reports.push_back(std::move(rep));
  std::stable_sort(run.reports.begin(), run.reports.end(), [](const auto& a, const auto& b) {
    return a.id < b.id;
  });
  add_duality_checks(run);
  for (const auto& rep : run.reports) {
    if (rep.skipped())
      ++run.skipped;
    else if (rep.passed())
      ++run.passed;
    else
      ++run.failed;
  }
  return run;
}

// ---------------------------------------------------------------- signature

std::string Signature::str() const
{
  std::ostringstream os;
  os << "degree " << degree << " rank " << rank << " order " << to_string(order) << " schlafli " << schlafli.str()
     << " cycles [";
  for (std::size_t k = 0; k < cycle_types.size(); ++k) {
    os << (k ? " " : "");
    for (std::size_t c = 0; c < cycle_types[k].size(); ++c)
      os << (c ? "." : "") << cycle_types[k][c];
  }
  os << "] blocks [";
  for (std::size_t k = 0; k < block_sizes.size(); ++k)
    os << (k ? " " : "") << block_sizes[k];
  os << "] kernel " << kernel_class;
  return os.str();
}

Signature signature(const Sggi& s)
{
  Signature sig;
  sig.degree = s.degree();
  sig.rank = s.rank();
  sig.order = s.group().order();
  sig.schlafli = schlafli(s);
  for (const auto& g : s.gens())
    sig.cycle_types.push_back(g.cycle_type());
  std::sort(sig.cycle_types.begin(), sig.cycle_types.end());
  if (!s.group().is_transitive()) {
    sig.kernel_class = "intransitive";
    return sig;
  }
  auto minimal = s.group().minimal_block_systems();
  for (const auto& b : minimal)
    sig.block_sizes.push_back(b.block_size());
  std::sort(sig.block_sizes.begin(), sig.block_sizes.end());
  if (minimal.empty())
    sig.kernel_class = "primitive";
  else
    sig.kernel_class = to_string(classify_kernel(block_action(s.group(), minimal.front()), minimal.front().block_count()));
  return sig;
}

Signature dedup_key(Signature sig)
{
  auto rev = sig.schlafli.entries;
  std::reverse(rev.begin(), rev.end());
  sig.schlafli.entries = std::min(sig.schlafli.entries, rev);
  return sig;
}

// ---------------------------------------------------------------- search

namespace {

std::vector<Permutation> class_representatives(const PermGroup& g, const std::vector<Permutation>& invols)
{
  std::set<Permutation> seen;
  std::vector<Permutation> reps;
  for (const auto& x : invols) {
    if (seen.count(x))
      continue;
    reps.push_back(x);
    std::vector<Permutation> stack{x};
    seen.insert(x);
    while (!stack.empty()) {
      auto y = stack.back();
      stack.pop_back();
      for (const auto& h : g.generators()) {
        auto z = h.inverse() * y * h;
        if (seen.insert(z).second)
          stack.push_back(z);
      }
    }
  }
  return reps;
}

class Searcher {
public:
  Searcher(const PermGroup& ambient, const SearchOptions& opts) : amb_(ambient), opts_(opts)
  {
    if (ambient.order() > kMaxSearchAmbient)
      throw Error("ambient of order " + to_string(ambient.order()) + " is too large to search");
    if (opts.min_rank < 2)
      throw Error("search ranks start at 2");
    max_rank_ = opts.max_rank ? opts.max_rank : std::max<std::size_t>(2, ambient.degree() - 1);
    target_ = opts.target_order.value_or(ambient.order());
    if (target_ == 0)
      throw Error("target order must be positive");
    for (const auto& g : ambient.elements())
      if (g.is_involution())
        invols_.push_back(g);
    firsts_ = opts.reduce_by_conjugacy ? class_representatives(ambient, invols_) : invols_;
    if (opts.budget_sec)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*opts.budget_sec));
  }

  SearchResult run()
  {
    if (amb_.order() % target_ != 0)
      return {}; // Lagrange
    std::vector<std::vector<Permutation>> found;
    std::mutex mu;
    std::atomic<std::size_t> next{0}, nodes{0};
    auto worker = [&] {
      std::vector<std::vector<Permutation>> local;
      std::size_t local_nodes = 0;
      for (std::size_t k = next++; k < firsts_.size() && !stop_; k = next++) {
        std::vector<Permutation> prefix{firsts_[k]};
        extend(prefix, PermGroup(amb_.degree(), prefix), local, local_nodes);
      }
      nodes += local_nodes;
      std::lock_guard lock(mu);
      for (auto& t : local)
        found.push_back(std::move(t));
    };
    const unsigned threads = std::max(1U, opts_.jobs);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
      pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
      t.join();

    std::sort(found.begin(), found.end());
    SearchResult res;
    res.completed = !stop_;
    res.nodes = nodes;
    std::map<Signature, std::size_t> slot;
    for (auto& gens : found) {
      Sggi s = make_sggi(gens);
      Signature sig = signature(s);
      Signature key = dedup_key(sig);
      auto it = slot.find(key);
      if (it != slot.end()) {
        ++res.hits[it->second].merged;
        continue;
      }
      slot.emplace(key, res.hits.size());
      res.hits.push_back({std::move(s), std::move(sig), std::move(key), 1});
    }
    std::sort(res.hits.begin(), res.hits.end(), [](const SearchHit& a, const SearchHit& b) { return a.key < b.key; });
    return res;
  }

private:
  bool out_of_time()
  {
    if (deadline_ && Clock::now() > *deadline_)
      stop_ = true;
    return stop_;
  }

  void extend(std::vector<Permutation>& prefix, const PermGroup& g, std::vector<std::vector<Permutation>>& out,
              std::size_t& nodes)
  {
    ++nodes;
    if (out_of_time())
      return;
    const std::size_t k = prefix.size();
    const Order order = g.order();
    if (k >= opts_.min_rank && order == target_ && (!opts_.require_transitive || g.is_transitive()))
      out.push_back(prefix);
    if (k >= max_rank_ || order >= target_)
      return;
    for (const auto& c : invols_) {
      bool ok = true;
      for (std::size_t j = 0; ok && j + 1 < k; ++j)
        ok = c.commutes_with(prefix[j]);
      if (!ok || g.contains(c))
        continue;
      prefix.push_back(c);
      PermGroup h(amb_.degree(), prefix);
      if (target_ % h.order() == 0 && independent_after_push(prefix) &&
          check_intersection_property(std::span<const Permutation>(prefix), IpMode::recursive).holds)
        extend(prefix, h, out, nodes);
      prefix.pop_back();
      if (stop_)
        return;
    }
  }

  // The new last generator is already outside the span of the others.
  bool independent_after_push(const std::vector<Permutation>& gens) const
  {
    for (std::size_t j = 0; j + 1 < gens.size(); ++j) {
      std::vector<Permutation> others;
      for (std::size_t l = 0; l < gens.size(); ++l)
        if (l != j)
          others.push_back(gens[l]);
      if (PermGroup(amb_.degree(), others).contains(gens[j]))
        return false;
    }
    return true;
  }

  const PermGroup& amb_;
  SearchOptions opts_;
  std::size_t max_rank_ = 0;
  Order target_ = 0;
  std::vector<Permutation> invols_;
  std::vector<Permutation> firsts_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<bool> stop_{false};
};

} // namespace

SearchResult exhaustive_search(const PermGroup& ambient, const SearchOptions& opts)
{
  return Searcher(ambient, opts).run();
}

const std::vector<NamedAmbient>& builtin_ambients()
{
  static const std::vector<NamedAmbient> list = {
    {"alt5-deg6", 6, {"(1,2,3,4,5)", "(1,6)(2,5)"}, "Alt_5 on 6 points", false},
    {"sym5-deg6", 6, {"(1,2,3,4,5)", "(1,6)(2,5)", "(2,3,5,4)"}, "Sym_5 on 6 points", false},
    {"sym6-deg10", 10, {"(5,10)(6,9)(7,8)", "(1,10,4)(2,9,3,8,5,7)"},
     "Sym_6 on the 10 splittings of {1..6} into two triples", true},
    {"c2wrS4-deg8", 8, {"(1,2)", "(1,3)(2,4)", "(1,3,5,7)(2,4,6,8)"}, "C2 wr Sym_4, order 384", false},
    {"s4wrS2-deg8", 8, {"(1,2)", "(1,2,3,4)", "(1,5)(2,6)(3,7)(4,8)"}, "Sym_4 wr C2, order 1152", false},
    {"s3wrS2-deg6", 6, {"(1,2)", "(1,2,3)", "(1,4)(2,5)(3,6)"}, "Sym_3 wr C2, order 72", false},
    {"c2wrS3-deg6", 6, {"(1,2)", "(1,3)(2,4)", "(1,3,5)(2,4,6)"}, "C2 wr Sym_3, order 48", false},
    {"sym4-deg4", 4, {"(1,2)", "(1,2,3,4)"}, "Sym_4 natural", false},
  };
  return list;
}

PermGroup ambient_group(const std::string& name)
{
  for (const auto& a : builtin_ambients()) {
    if (a.name != name)
      continue;
    std::vector<Permutation> gens;
    for (const auto& g : a.generators)
      gens.push_back(parse_perm(g, a.degree));
    return PermGroup(a.degree, gens);
  }
  std::string known;
  for (const auto& a : builtin_ambients())
    known += (known.empty() ? "" : ", ") + a.name;
  throw Error("unknown ambient '" + name + "' (known: " + known + ")");
}

} // namespace stringc
