#pragma once

// Finite simplicial graphs: the dependence data behind trace monoids and
// right-angled Artin groups.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "words.hpp"

namespace onerel {

  //! Simple undirected graph with named vertices; no loops, no multi-edges.
  class SimpGraph {
   public:
    using edge_type = std::pair<std::size_t, std::size_t>;

    SimpGraph() = default;

    explicit SimpGraph(std::vector<std::string> names)
        : _alphabet(std::move(names)),
          _adj(_alphabet.size(), std::vector<char>(_alphabet.size(), 0)) {}

    //! Adds the edge {u, v}; loops and duplicates are errors.
    void add_edge(std::size_t u, std::size_t v) {
      if (u >= size() || v >= size()) {
        fail(ErrorCode::UnknownEndpoint, "edge endpoint out of range");
      }
      if (u == v) {
        fail(ErrorCode::LoopEdge, "loop at " + name(u));
      }
      if (_adj[u][v]) {
        fail(ErrorCode::DuplicateEdge, name(u) + " " + name(v));
      }
      _adj[u][v] = _adj[v][u] = 1;
      _edges.insert(std::minmax(u, v));
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _alphabet.size();
    }

    [[nodiscard]] bool empty() const noexcept {
      return size() == 0;
    }

    [[nodiscard]] bool adjacent(std::size_t u, std::size_t v) const noexcept {
      return _adj[u][v] != 0;
    }

    [[nodiscard]] std::string const& name(std::size_t v) const {
      return _alphabet.name(static_cast<gen_type>(v));
    }

    [[nodiscard]] Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    [[nodiscard]] std::set<edge_type> const& edges() const noexcept {
      return _edges;
    }

    [[nodiscard]] std::vector<std::size_t> neighbours(std::size_t v) const {
      std::vector<std::size_t> out;
      for (std::size_t u = 0; u < size(); ++u) {
        if (_adj[v][u]) {
          out.push_back(u);
        }
      }
      return out;
    }

    //! Subgraph induced on `vertices` (kept in the given order).
    [[nodiscard]] SimpGraph induced(std::vector<std::size_t> const& vertices) const {
      std::vector<std::string> names;
      for (auto v : vertices) {
        names.push_back(name(v));
      }
      SimpGraph out(std::move(names));
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
          if (adjacent(vertices[i], vertices[j])) {
            out.add_edge(i, j);
          }
        }
      }
      return out;
    }

    friend bool operator==(SimpGraph const& a, SimpGraph const& b) {
      return a._alphabet == b._alphabet && a._edges == b._edges;
    }

   private:
    Alphabet                       _alphabet;
    std::vector<std::vector<char>> _adj;
    std::set<edge_type>            _edges;
  };

  //! Reads `vertices: n1 n2 ...` followed by lines `edge: u v`.
  inline SimpGraph parse_graph(std::string_view text) {
    std::istringstream       in{std::string(text)};
    std::string              line;
    std::optional<SimpGraph> g;
    while (std::getline(in, line)) {
      auto tokens = detail::split_ws(line);
      if (tokens.empty()) {
        continue;
      }
      if (tokens[0] == "vertices:") {
        if (g) {
          fail(ErrorCode::Malformed, "repeated vertices line");
        }
        std::vector<std::string> names;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          std::string n(tokens[i]);
          if (std::find(names.begin(), names.end(), n) != names.end()) {
            fail(ErrorCode::DuplicateVertex, n);
          }
          names.push_back(std::move(n));
        }
        g.emplace(std::move(names));
      } else if (tokens[0] == "edge:") {
        if (!g) {
          fail(ErrorCode::Malformed, "edge before vertices line");
        }
        if (tokens.size() != 3) {
          fail(ErrorCode::Malformed, "edge line needs two endpoints: " + line);
        }
        auto u = g->alphabet().index(tokens[1]);
        auto v = g->alphabet().index(tokens[2]);
        if (!u || !v) {
          fail(ErrorCode::UnknownEndpoint, line);
        }
        g->add_edge(*u, *v);
      } else {
        fail(ErrorCode::Malformed, "unrecognised line: " + line);
      }
    }
    if (!g) {
      fail(ErrorCode::Malformed, "missing vertices line");
    }
    return *std::move(g);
  }

  inline std::string format_graph(SimpGraph const& g) {
    std::string out = "vertices:";
    for (std::size_t v = 0; v < g.size(); ++v) {
      out += ' ' + g.name(v);
    }
    out += '\n';
    for (auto [u, v] : g.edges()) {
      out += "edge: " + g.name(u) + ' ' + g.name(v) + '\n';
    }
    return out;
  }

  //! The path P_n with vertices v1 ... vn.
  inline SimpGraph path_graph(std::size_t n) {
    if (n == 0) {
      fail(ErrorCode::ZeroVertices, "path_graph(0)");
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
      names.push_back("v" + std::to_string(i));
    }
    SimpGraph g(std::move(names));
    for (std::size_t i = 0; i + 1 < n; ++i) {
      g.add_edge(i, i + 1);
    }
    return g;
  }

  inline SimpGraph edgeless_graph(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) {
      names.push_back("v" + std::to_string(i));
    }
    return SimpGraph(std::move(names));
  }

  //! Complete multipartite graph with the given part sizes; K_{2,2,2} is the
  //! octahedron.
  inline SimpGraph complete_multipartite(std::vector<std::size_t> const& parts) {
    std::vector<std::string> names;
    std::vector<std::size_t> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      for (std::size_t i = 0; i < parts[p]; ++i) {
        names.push_back("p" + std::to_string(p + 1) + "_" + std::to_string(i + 1));
        part_of.push_back(p);
      }
    }
    SimpGraph g(std::move(names));
    for (std::size_t u = 0; u < g.size(); ++u) {
      for (std::size_t v = u + 1; v < g.size(); ++v) {
        if (part_of[u] != part_of[v]) {
          g.add_edge(u, v);
        }
      }
    }
    return g;
  }

  namespace detail {
    //! Connected component label of each vertex; labels are assigned in
    //! order of least vertex.
    inline std::vector<std::size_t> component_labels(SimpGraph const& g,
                                                     std::size_t*     count = nullptr) {
      constexpr auto           unset = static_cast<std::size_t>(-1);
      std::vector<std::size_t> label(g.size(), unset);
      std::size_t              next = 0;
      for (std::size_t s = 0; s < g.size(); ++s) {
        if (label[s] != unset) {
          continue;
        }
        std::vector<std::size_t> stack{s};
        label[s] = next;
        while (!stack.empty()) {
          auto v = stack.back();
          stack.pop_back();
          for (auto u : g.neighbours(v)) {
            if (label[u] == unset) {
              label[u] = next;
              stack.push_back(u);
            }
          }
        }
        ++next;
      }
      if (count != nullptr) {
        *count = next;
      }
      return label;
    }

    inline std::vector<std::size_t> bfs_distances(SimpGraph const& g, std::size_t s) {
      constexpr auto           unset = static_cast<std::size_t>(-1);
      std::vector<std::size_t> dist(g.size(), unset);
      std::queue<std::size_t>  q;
      dist[s] = 0;
      q.push(s);
      while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto u : g.neighbours(v)) {
          if (dist[u] == unset) {
            dist[u] = dist[v] + 1;
            q.push(u);
          }
        }
      }
      return dist;
    }
  }  // namespace detail

  //! Vertex sets of the connected components, in order of least vertex.
  inline std::vector<std::vector<std::size_t>> component_vertices(SimpGraph const& g) {
    std::size_t count  = 0;
    auto        labels = detail::component_labels(g, &count);
    std::vector<std::vector<std::size_t>> out(count);
    for (std::size_t v = 0; v < g.size(); ++v) {
      out[labels[v]].push_back(v);
    }
    return out;
  }

  inline std::vector<SimpGraph> components(SimpGraph const& g) {
    std::vector<SimpGraph> out;
    for (auto const& vs : component_vertices(g)) {
      out.push_back(g.induced(vs));
    }
    return out;
  }

  inline bool is_forest(SimpGraph const& g) {
    std::size_t count = 0;
    detail::component_labels(g, &count);
    return g.edges().size() + count == g.size();
  }

  //! d(Γ): the largest diameter of a connected component.
  inline std::size_t max_component_diameter(SimpGraph const& g) {
    if (g.empty()) {
      fail(ErrorCode::EmptyGraph, "max_component_diameter of the empty graph");
    }
    std::size_t best = 0;
    for (std::size_t s = 0; s < g.size(); ++s) {
      for (auto d : detail::bfs_distances(g, s)) {
        if (d != static_cast<std::size_t>(-1)) {
          best = std::max(best, d);
        }
      }
    }
    return best;
  }

  //! Lexicographically least vertex sequence spanning an induced copy of P_n.
  inline std::optional<std::vector<std::size_t>> find_induced_path(SimpGraph const& g,
                                                                   std::size_t      n) {
    if (n == 0) {
      fail(ErrorCode::InvalidArgument, "find_induced_path with n = 0");
    }
    std::vector<std::size_t> path;
    std::vector<char>        used(g.size(), 0);

    auto extend = [&](auto&& self) -> bool {
      if (path.size() == n) {
        return true;
      }
      for (std::size_t v = 0; v < g.size(); ++v) {
        if (used[v]) {
          continue;
        }
        if (!path.empty() && !g.adjacent(path.back(), v)) {
          continue;
        }
        bool chordless = true;
        for (std::size_t i = 0; i + 1 < path.size() && chordless; ++i) {
          chordless = !g.adjacent(path[i], v);
        }
        if (!chordless) {
          continue;
        }
        path.push_back(v);
        used[v] = 1;
        if (self(self)) {
          return true;
        }
        used[v] = 0;
        path.pop_back();
      }
      return false;
    };

    if (extend(extend)) {
      return path;
    }
    return std::nullopt;
  }

}  // namespace onerel
