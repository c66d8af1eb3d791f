#include "stringc/prgraph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace stringc {

std::optional<std::string> prgraph_violation(std::size_t n, std::size_t r, const std::vector<Edge>& edges)
{
  if (n == 0 || r == 0)
    return "graph needs at least one vertex and one label";
  std::vector<std::vector<int>> mate(r, std::vector<int>(n, -1));
  for (const auto& e : edges) {
    if (e.label >= r)
      return "label " + std::to_string(e.label) + " not below rank " + std::to_string(r);
    if (e.u >= n || e.v >= n)
      return "vertex out of range 1.." + std::to_string(n);
    if (e.u == e.v)
      return "loop at vertex " + std::to_string(e.u + 1);
    for (point_t x : {e.u, e.v})
      if (mate[e.label][x] >= 0)
        return "label " + std::to_string(e.label) + " is not a matching at vertex " + std::to_string(x + 1);
    mate[e.label][e.u] = e.v;
    mate[e.label][e.v] = e.u;
  }
  for (std::size_t i = 0; i < r; ++i)
    if (std::all_of(mate[i].begin(), mate[i].end(), [](int m) { return m < 0; }))
      return "label " + std::to_string(i) + " has no edge";

  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 2; j < r; ++j) {
      std::vector<bool> seen(n, false);
      for (std::size_t s = 0; s < n; ++s) {
        if (seen[s])
          continue;
        std::vector<std::size_t> comp{s};
        seen[s] = true;
        for (std::size_t k = 0; k < comp.size(); ++k)
          for (auto lab : {i, j}) {
            int m = mate[lab][comp[k]];
            if (m >= 0 && !seen[m]) {
              seen[m] = true;
              comp.push_back(static_cast<std::size_t>(m));
            }
          }
        if (comp.size() <= 2)
          continue;
        bool square = comp.size() == 4;
        for (auto x : comp)
          square = square && mate[i][x] >= 0 && mate[j][x] >= 0;
        if (!square) {
          std::sort(comp.begin(), comp.end());
          std::string pts;
          for (auto x : comp)
            pts += (pts.empty() ? "" : ",") + std::to_string(x + 1);
          return "{" + std::to_string(i) + "," + std::to_string(j) + "}-component {" + pts +
                 "} is not an alternating square";
        }
      }
    }
  return std::nullopt;
}

PRGraph make_prgraph(std::size_t n, std::size_t r, std::vector<Edge> edges)
{
  for (auto& e : edges)
    if (e.v < e.u)
      std::swap(e.u, e.v);
  if (auto why = prgraph_violation(n, r, edges))
    throw Error("invalid permutation representation graph: " + *why);
  std::sort(edges.begin(), edges.end());
  PRGraph g;
  g.n_ = n;
  g.r_ = r;
  g.edges_ = std::move(edges);
  return g;
}

std::vector<std::size_t> PRGraph::labels_between(point_t u, point_t v) const
{
  if (v < u)
    std::swap(u, v);
  std::vector<std::size_t> out;
  for (const auto& e : edges_)
    if (e.u == u && e.v == v)
      out.push_back(e.label);
  return out;
}

bool PRGraph::is_connected() const
{
  std::vector<std::vector<point_t>> adj(n_);
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> seen(n_, false);
  std::vector<point_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto x = stack.back();
    stack.pop_back();
    for (auto y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == n_;
}

// ---------------------------------------------------------------- DSL

namespace {

class GraphParser {
public:
  explicit GraphParser(std::string_view text) : s_(text) {}

  PRGraph run()
  {
    auto records = split();
    if (records.empty())
      fail("missing header", 0);
    std::istringstream head(records.front().second);
    std::string tag;
    long n = -1, r = -1;
    head >> tag >> n >> r;
    std::string extra;
    if (tag != "prg" || n <= 0 || r <= 0 || (head >> extra))
      fail("header must be 'prg <n> <r>'", records.front().first);
    std::vector<Edge> edges;
    for (std::size_t k = 1; k < records.size(); ++k)
      parse_record(records[k].second, records[k].first, static_cast<std::size_t>(n), static_cast<std::size_t>(r),
                   edges);
    return make_prgraph(static_cast<std::size_t>(n), static_cast<std::size_t>(r), std::move(edges));
  }

private:
  // (line number, record text) with comments stripped and blank records dropped
  std::vector<std::pair<std::size_t, std::string>> split() const
  {
    std::vector<std::pair<std::size_t, std::string>> out;
    std::size_t line = 1;
    std::string cur;
    bool comment = false;
    auto flush = [&] {
      auto first = cur.find_first_not_of(" \t\r");
      if (first != std::string::npos)
        out.emplace_back(line, cur.substr(first));
      cur.clear();
    };
    for (char c : s_) {
      if (c == '\n') {
        flush();
        comment = false;
        ++line;
      } else if (comment) {
        continue;
      } else if (c == '#') {
        comment = true;
      } else if (c == '/') {
        flush();
      } else {
        cur.push_back(c);
      }
    }
    flush();
    return out;
  }

  void parse_record(const std::string& rec, std::size_t line, std::size_t n, std::size_t r, std::vector<Edge>& edges)
  {
    std::size_t pos = 0;
    auto skip = [&] {
      while (pos < rec.size() && std::isspace(static_cast<unsigned char>(rec[pos])))
        ++pos;
    };
    auto number = [&]() -> long {
      skip();
      if (pos >= rec.size() || !std::isdigit(static_cast<unsigned char>(rec[pos])))
        fail("expected an integer in '" + rec + "'", line);
      long v = 0;
      while (pos < rec.size() && std::isdigit(static_cast<unsigned char>(rec[pos]))) {
        v = v * 10 + (rec[pos++] - '0');
        if (v > 1000000)
          fail("integer too large", line);
      }
      return v;
    };
    std::vector<long> labels;
    skip();
    if (pos < rec.size() && rec[pos] == '{') {
      ++pos;
      labels.push_back(number());
      skip();
      while (pos < rec.size() && rec[pos] == ',') {
        ++pos;
        labels.push_back(number());
        skip();
      }
      if (pos >= rec.size() || rec[pos] != '}')
        fail("unterminated label set in '" + rec + "'", line);
      ++pos;
    } else {
      labels.push_back(number());
    }
    long u = number(), v = number();
    skip();
    if (pos != rec.size())
      fail("trailing text in '" + rec + "'", line);
    for (long lab : labels)
      if (lab < 0 || static_cast<std::size_t>(lab) >= r)
        fail("label " + std::to_string(lab) + " not below rank " + std::to_string(r), line);
    if (u < 1 || v < 1 || static_cast<std::size_t>(u) > n || static_cast<std::size_t>(v) > n)
      fail("vertex out of range 1.." + std::to_string(n), line);
    for (long lab : labels)
      edges.push_back({static_cast<point_t>(u - 1), static_cast<point_t>(v - 1), static_cast<std::size_t>(lab)});
  }

  [[noreturn]] static void fail(const std::string& msg, std::size_t line)
  {
    throw Error("graph text line " + std::to_string(line) + ": " + msg);
  }

  std::string_view s_;
};

} // namespace

PRGraph parse_graph(std::string_view text)
{
  return GraphParser(text).run();
}

std::string emit_graph(const PRGraph& g)
{
  std::map<std::pair<point_t, point_t>, std::vector<std::size_t>> bundles;
  for (const auto& e : g.edges())
    bundles[{e.u, e.v}].push_back(e.label);
  std::ostringstream os;
  os << "prg " << g.vertices() << ' ' << g.rank() << '\n';
  for (const auto& [uv, labs] : bundles) {
    if (labs.size() == 1) {
      os << labs.front();
    } else {
      os << '{';
      for (std::size_t k = 0; k < labs.size(); ++k)
        os << (k ? "," : "") << labs[k];
      os << '}';
    }
    os << ' ' << uv.first + 1 << ' ' << uv.second + 1 << '\n';
  }
  return os.str();
}

std::string emit_dot(const PRGraph& g)
{
  std::ostringstream os;
  os << "graph prg {\n";
  for (std::size_t x = 0; x < g.vertices(); ++x)
    os << "  " << x + 1 << ";\n";
  for (const auto& e : g.edges())
    os << "  " << e.u + 1 << " -- " << e.v + 1 << " [label=\"" << e.label << "\"];\n";
  os << "}\n";
  return os.str();
}

Sggi graph_to_sggi(const PRGraph& g)
{
  std::vector<std::vector<point_t>> images(g.rank(), std::vector<point_t>(g.vertices()));
  for (auto& im : images)
    for (std::size_t x = 0; x < im.size(); ++x)
      im[x] = static_cast<point_t>(x);
  for (const auto& e : g.edges())
    std::swap(images[e.label][e.u], images[e.label][e.v]);
  std::vector<Permutation> gens;
  for (auto& im : images)
    gens.push_back(Permutation::from_images(std::move(im)));
  return make_sggi(std::move(gens));
}

PRGraph sggi_to_graph(const Sggi& s)
{
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t x = 0; x < s.degree(); ++x)
      if (s[i][x] > x)
        edges.push_back({static_cast<point_t>(x), s[i][x], i});
  return make_prgraph(s.degree(), s.rank(), std::move(edges));
}

// ---------------------------------------------------------------- canonical form

namespace {

class Canonizer {
public:
  explicit Canonizer(const PRGraph& g) : n_(g.vertices()), adj_(g.vertices())
  {
    std::map<std::pair<point_t, point_t>, std::uint64_t> masks;
    for (const auto& e : g.edges())
      masks[{e.u, e.v}] |= std::uint64_t{1} << e.label;
    for (const auto& [uv, m] : masks) {
      adj_[uv.first].emplace_back(uv.second, m);
      adj_[uv.second].emplace_back(uv.first, m);
    }
    best_.n = n_;
    best_.r = g.rank();
  }

  CanonicalForm run()
  {
    std::vector<std::vector<point_t>> cells(1);
    for (std::size_t x = 0; x < n_; ++x)
      cells[0].push_back(static_cast<point_t>(x));
    search(refine(std::move(cells)));
    return best_;
  }

private:
  using Cells = std::vector<std::vector<point_t>>;

  Cells refine(Cells cells) const
  {
    while (true) {
      std::vector<std::size_t> cell_of(n_);
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (auto x : cells[c])
          cell_of[x] = c;
      Cells next;
      for (const auto& cell : cells) {
        std::vector<std::pair<std::vector<std::pair<std::uint64_t, std::size_t>>, point_t>> keyed;
        for (auto x : cell) {
          std::vector<std::pair<std::uint64_t, std::size_t>> sig;
          for (const auto& [y, m] : adj_[x])
            sig.emplace_back(m, cell_of[y]);
          std::sort(sig.begin(), sig.end());
          keyed.emplace_back(std::move(sig), x);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t k = 0; k < keyed.size(); ++k) {
          if (k == 0 || keyed[k].first != keyed[k - 1].first)
            next.emplace_back();
          next.back().push_back(keyed[k].second);
        }
      }
      if (next.size() == cells.size())
        return next;
      cells = std::move(next);
    }
  }

  void search(const Cells& cells)
  {
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const auto t = static_cast<std::size_t>(target - cells.begin());
    for (auto x : cells[t]) {
      Cells split(cells.begin(), cells.begin() + static_cast<long>(t));
      split.push_back({x});
      std::vector<point_t> rest;
      for (auto y : cells[t])
        if (y != x)
          rest.push_back(y);
      split.push_back(std::move(rest));
      split.insert(split.end(), cells.begin() + static_cast<long>(t) + 1, cells.end());
      search(refine(std::move(split)));
    }
  }

  void leaf(const Cells& cells)
  {
    std::vector<point_t> pos(n_);
    for (std::size_t c = 0; c < cells.size(); ++c)
      pos[cells[c].front()] = static_cast<point_t>(c);
    std::vector<Edge> edges;
    for (std::size_t x = 0; x < n_; ++x)
      for (const auto& [y, m] : adj_[x]) {
        if (y < x)
          continue;
        point_t a = pos[x], b = pos[y];
        if (b < a)
          std::swap(a, b);
        for (std::size_t lab = 0; lab < 64; ++lab)
          if ((m >> lab) & 1U)
            edges.push_back({a, b, lab});
      }
    std::sort(edges.begin(), edges.end());
    if (!have_ || edges < best_.edges) {
      best_.edges = std::move(edges);
      have_ = true;
    }
  }

  std::size_t n_;
  std::vector<std::vector<std::pair<point_t, std::uint64_t>>> adj_;
  CanonicalForm best_;
  bool have_ = false;
};

} // namespace

CanonicalForm canonical_form(const PRGraph& g)
{
  return Canonizer(g).run();
}

bool isomorphic(const PRGraph& a, const PRGraph& b)
{
  return a.vertices() == b.vertices() && a.rank() == b.rank() && a.edges().size() == b.edges().size() &&
         canonical_form(a) == canonical_form(b);
}

} // namespace stringc
