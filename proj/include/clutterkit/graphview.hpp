// Copyright 2026 The clutterkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/** @file graphview.hpp
 *  @brief The black/white incidence graph of a clutter.
 *
 *  Black vertices are ground elements, white vertices are rows, and a black
 *  vertex is adjacent to a white one when the element belongs to the row.
 *  A white vertex is identified by its neighbourhood, so the graph is stored
 *  as the sorted black labels plus one neighbourhood mask per white vertex.
 *  Unlike a Clutter, the white neighbourhoods need not form an antichain:
 *  removing a black vertex can produce a graph that is no clutter's.
 */

#ifndef CLUTTERKIT_GRAPHVIEW_HPP
#define CLUTTERKIT_GRAPHVIEW_HPP

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clutterkit/clutter.hpp"
#include "clutterkit/error.hpp"

namespace clutterkit {

enum class Colour { kBlack, kWhite };

struct Vertex {
  Colour colour;
  std::string name;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  // by name, black before white at equal name
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return a.colour <=> b.colour;
  }
};

/// One connected component, vertices sorted.
using VertexSet = std::vector<Vertex>;

struct ComponentDecomposition {
  std::vector<VertexSet> parts;
};

class IncidenceGraph {
 public:
  IncidenceGraph() = default;
  IncidenceGraph(std::vector<Element> black, std::vector<Mask> white)
      : black_(std::move(black)), white_(std::move(white)) {
    std::sort(white_.begin(), white_.end(), detail::canonical_less);
  }

  const std::vector<Element>& black() const noexcept { return black_; }
  std::span<const Mask> white() const noexcept { return white_; }
  std::size_t vertex_count() const { return black_.size() + white_.size(); }

  std::optional<std::size_t> black_index(std::string_view label) const {
    auto it = std::lower_bound(black_.begin(), black_.end(), label);
    if (it == black_.end() || *it != label) return std::nullopt;
    return static_cast<std::size_t>(it - black_.begin());
  }

  /// `r:` followed by the comma-joined member labels, `r:-` when empty.
  std::string white_name(std::size_t w) const {
    const Mask m = white_[w];
    if (m == 0) return "r:-";
    std::string name = "r:";
    bool first = true;
    for (std::size_t i : detail::positions(m)) {
      if (!first) name += ',';
      name += black_[i];
      first = false;
    }
    return name;
  }

  /// White neighbours of black vertex @p b, as indices into white().
  std::vector<std::size_t> black_neighbours(std::size_t b) const {
    std::vector<std::size_t> out;
    for (std::size_t w = 0; w < white_.size(); ++w) {
      if (white_[w] & detail::bit(b)) out.push_back(w);
    }
    return out;
  }

  std::size_t edge_count() const {
    std::size_t n = 0;
    for (Mask w : white_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  friend bool operator==(const IncidenceGraph&, const IncidenceGraph&) = default;

 private:
  std::vector<Element> black_;
  std::vector<Mask> white_;
};

inline IncidenceGraph incidence_graph(const Clutter& m) {
  return IncidenceGraph(m.ground(),
                        {m.row_masks().begin(), m.row_masks().end()});
}

namespace detail {

inline std::size_t require_black(const IncidenceGraph& g, std::string_view v) {
  auto idx = g.black_index(v);
  if (!idx) {
    throw ClutterError(ErrorKind::kVertexNotFound,
                       "no black vertex '" + std::string(v) + "'");
  }
  return *idx;
}

/// Component label per vertex: black b is vertex b, white w is |black| + w.
inline std::vector<std::size_t> component_roots(const IncidenceGraph& g) {
  const std::size_t nb = g.black().size();
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t w = 0; w < g.white().size(); ++w) {
    for (std::size_t b : positions(g.white()[w])) {
      parent[find(b)] = find(nb + w);
    }
  }
  for (std::size_t v = 0; v < parent.size(); ++v) parent[v] = find(v);
  return parent;
}

inline Vertex vertex_at(const IncidenceGraph& g, std::size_t v) {
  const std::size_t nb = g.black().size();
  if (v < nb) return {Colour::kBlack, g.black()[v]};
  return {Colour::kWhite, g.white_name(v - nb)};
}

}  // namespace detail

inline ComponentDecomposition components(const IncidenceGraph& g) {
  const auto roots = detail::component_roots(g);
  std::vector<std::size_t> slot(roots.size(), roots.size());
  std::vector<VertexSet> parts;
  for (std::size_t v = 0; v < roots.size(); ++v) {
    std::size_t& s = slot[roots[v]];
    if (s == roots.size()) {
      s = parts.size();
      parts.emplace_back();
    }
    parts[s].push_back(detail::vertex_at(g, v));
  }
  for (auto& p : parts) std::sort(p.begin(), p.end());
  std::sort(parts.begin(), parts.end(),
            [](const VertexSet& a, const VertexSet& b) {
              return a.front() < b.front();
            });
  return {std::move(parts)};
}

/// The empty graph counts as connected.
inline bool is_graph_connected(const IncidenceGraph& g) {
  const auto roots = detail::component_roots(g);
  return std::all_of(roots.begin(), roots.end(),
                     [&](std::size_t r) { return r == roots.front(); });
}

/// True when clutter connectivity and incidence-graph connectivity agree,
/// allowing the single exception of one element with one empty row.
inline bool graph_connected_iff_clutter_connected(const Clutter& m) {
  const bool exceptional = m.size() == 1 && m.has_empty_row();
  const bool graph = is_graph_connected(incidence_graph(m));
  return is_connected(m) == (graph || exceptional);
}

/// G minus the closed neighbourhood of black vertex @p v.
inline IncidenceGraph delete_closed_neighbourhood(const IncidenceGraph& g,
                                                  std::string_view v) {
  const std::size_t b = detail::require_black(g, v);
  std::vector<Element> black = g.black();
  black.erase(black.begin() + static_cast<std::ptrdiff_t>(b));
  std::vector<Mask> white;
  for (Mask w : g.white()) {
    if ((w & detail::bit(b)) == 0) white.push_back(detail::remove_bit(w, b));
  }
  return IncidenceGraph(std::move(black), std::move(white));
}

/// G minus the single black vertex @p v (its white neighbours stay).
inline IncidenceGraph delete_black_vertex(const IncidenceGraph& g,
                                          std::string_view v) {
  const std::size_t b = detail::require_black(g, v);
  std::vector<Element> black = g.black();
  black.erase(black.begin() + static_cast<std::ptrdiff_t>(b));
  std::vector<Mask> white;
  white.reserve(g.white().size());
  for (Mask w : g.white()) white.push_back(detail::remove_bit(w, b));
  return IncidenceGraph(std::move(black), std::move(white));
}

namespace detail {

/// Open neighbourhood of every black vertex as a bitset over white indices.
inline std::vector<std::vector<bool>> black_neighbourhoods(
    const IncidenceGraph& g) {
  std::vector<std::vector<bool>> nbhd(g.black().size(),
                                      std::vector<bool>(g.white().size()));
  for (std::size_t w = 0; w < g.white().size(); ++w) {
    for (std::size_t b : positions(g.white()[w])) nbhd[b][w] = true;
  }
  return nbhd;
}

inline bool proper_subset(const std::vector<bool>& a,
                          const std::vector<bool>& b) {
  bool strict = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
    if (b[i] && !a[i]) strict = true;
  }
  return strict;
}

}  // namespace detail

/// Black vertices u != v with N(u) = N(v).
inline std::vector<Element> twins(const IncidenceGraph& g, std::string_view v) {
  const std::size_t b = detail::require_black(g, v);
  const auto nbhd = detail::black_neighbourhoods(g);
  std::vector<Element> out;
  for (std::size_t u = 0; u < nbhd.size(); ++u) {
    if (u != b && nbhd[u] == nbhd[b]) out.push_back(g.black()[u]);
  }
  return out;
}

/// Contracts an element that has a twin. For such an element the incidence
/// graph of the contraction is the graph with that black vertex removed, and
/// contraction keeps a connected clutter connected; both facts are checked.
inline Clutter contract_twin(const Clutter& m, std::string_view v) {
  const IncidenceGraph g = incidence_graph(m);
  if (twins(g, v).empty()) {
    throw ClutterError(ErrorKind::kNoTwin,
                       "element '" + std::string(v) + "' has no twin");
  }
  Clutter result = contract(m, v);
  if (incidence_graph(result) != delete_black_vertex(g, v)) {
    throw std::logic_error("twin contraction changed the incidence graph");
  }
  if (is_connected(m) && !is_connected(result)) {
    throw std::logic_error("twin contraction disconnected the clutter");
  }
  return result;
}

/// Black vertices whose neighbourhood properly contains no other black
/// vertex's neighbourhood, ascending.
inline std::vector<Element> minimal_black_vertices(const IncidenceGraph& g) {
  const auto nbhd = detail::black_neighbourhoods(g);
  std::vector<Element> out;
  for (std::size_t v = 0; v < nbhd.size(); ++v) {
    const bool minimal = std::none_of(
        nbhd.begin(), nbhd.end(),
        [&](const std::vector<bool>& u) { return detail::proper_subset(u, nbhd[v]); });
    if (minimal) out.push_back(g.black()[v]);
  }
  return out;
}

/// Components of G \ N[u] for a minimal black vertex u.
inline std::vector<VertexSet> good_components(const IncidenceGraph& g,
                                              std::string_view u) {
  detail::require_black(g, u);
  const auto minimal = minimal_black_vertices(g);
  if (!std::binary_search(minimal.begin(), minimal.end(), u)) {
    throw ClutterError(ErrorKind::kNotMinimal,
                       "black vertex '" + std::string(u) + "' is not minimal");
  }
  return components(delete_closed_neighbourhood(g, u)).parts;
}

struct GoodComponent {
  Element vertex;     ///< the minimal black vertex u
  VertexSet component;  ///< a component of G \ N[u]
  bool minimal = false;  ///< properly contains no good component
};

/// Every good component (by ascending u, then component order) with its
/// minimality flag.
inline std::vector<GoodComponent> minimal_good_components(
    const IncidenceGraph& g) {
  std::vector<GoodComponent> all;
  for (const auto& u : minimal_black_vertices(g)) {
    for (auto& c : good_components(g, u)) {
      all.push_back({u, std::move(c), false});
    }
  }
  for (auto& candidate : all) {
    const VertexSet& c = candidate.component;
    candidate.minimal = std::none_of(all.begin(), all.end(), [&](const GoodComponent& o) {
      const VertexSet& d = o.component;
      return d.size() < c.size() &&
             std::includes(c.begin(), c.end(), d.begin(), d.end());
    });
  }
  return all;
}

/// DOT rendering: black vertices filled, white vertices unfilled, nodes in
/// black-then-white order, edges grouped by white vertex.
inline std::string to_dot(const IncidenceGraph& g) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') q += '\\';
      q += c;
    }
    return q + "\"";
  };
  std::string out = "graph G {\n";
  for (const auto& b : g.black()) {
    out += "  " + quote(b) + " [shape=circle, style=filled, fillcolor=black, fontcolor=white];\n";
  }
  for (std::size_t w = 0; w < g.white().size(); ++w) {
    out += "  " + quote(g.white_name(w)) + " [shape=box, style=solid];\n";
  }
  for (std::size_t w = 0; w < g.white().size(); ++w) {
    for (std::size_t b : detail::positions(g.white()[w])) {
      out += "  " + quote(g.black()[b]) + " -- " + quote(g.white_name(w)) + ";\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace clutterkit

#endif  // CLUTTERKIT_GRAPHVIEW_HPP
