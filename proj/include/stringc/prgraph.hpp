#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stringc/sggi.hpp"

namespace stringc {

struct Edge {
  point_t u; // 0-based, u < v
  point_t v;
  std::size_t label;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& a, const Edge& b)
  {
    if (a.label != b.label)
      return a.label <=> b.label;
    if (a.u != b.u)
      return a.u <=> b.u;
    return a.v <=> b.v;
  }
};

// Edge-labelled multigraph: an i-edge {a,b} whenever rho_i swaps a and b.
class PRGraph {
public:
  std::size_t vertices() const { return n_; }
  std::size_t rank() const { return r_; }
  const std::vector<Edge>& edges() const { return edges_; } // sorted by (label,u,v)
  // Labels on the parallel bundle between u and v (0-based), ascending.
  std::vector<std::size_t> labels_between(point_t u, point_t v) const;
  bool is_connected() const;
  friend bool operator==(const PRGraph&, const PRGraph&) = default;

  friend PRGraph make_prgraph(std::size_t n, std::size_t r, std::vector<Edge> edges);

private:
  std::size_t n_ = 0;
  std::size_t r_ = 0;
  std::vector<Edge> edges_;
};

// Validates matching per label, label coverage, and {i,j}-squares.
PRGraph make_prgraph(std::size_t n, std::size_t r, std::vector<Edge> edges);
std::optional<std::string> prgraph_violation(std::size_t n, std::size_t r, const std::vector<Edge>& edges);

PRGraph parse_graph(std::string_view text);
std::string emit_graph(const PRGraph& g); // DSL text, round-trips through parse_graph
std::string emit_dot(const PRGraph& g);

Sggi graph_to_sggi(const PRGraph& g);
PRGraph sggi_to_graph(const Sggi& s);

// Canonical relabelling by refinement and individualization; two graphs are
// equal up to vertex renaming iff their canonical forms are equal.
struct CanonicalForm {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<Edge> edges;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};
CanonicalForm canonical_form(const PRGraph& g);
bool isomorphic(const PRGraph& a, const PRGraph& b);

} // namespace stringc
