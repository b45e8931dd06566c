#pragma once

// Stallings graphs of finitely generated subgroups of free groups.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "words.hpp"

namespace onerel {

  //! Folded core graph with basepoint 0. Vertices are numbered by BFS from the
  //! basepoint, visiting labels in the order g1, g1^-1, g2, g2^-1, ...
  class StallingsGraph {
   public:
    struct Edge {
      std::size_t from;
      std::size_t to;
      gen_type    label;
      friend auto operator<=>(Edge const&, Edge const&) = default;
    };

    StallingsGraph() = default;

    [[nodiscard]] std::size_t ambient_rank() const noexcept {
      return _rank;
    }

    [[nodiscard]] std::size_t num_vertices() const noexcept {
      return _out.size();
    }

    [[nodiscard]] std::size_t basepoint() const noexcept {
      return 0;
    }

    [[nodiscard]] std::vector<Edge> edges() const {
      std::vector<Edge> out;
      for (std::size_t v = 0; v < _out.size(); ++v) {
        for (auto [key, to] : _out[v]) {
          if (key > 0) {
            out.push_back({v, to, static_cast<gen_type>(key - 1)});
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    [[nodiscard]] std::size_t num_edges() const {
      std::size_t n = 0;
      for (auto const& m : _out) {
        for (auto const& kv : m) {
          n += kv.first > 0 ? 1 : 0;
        }
      }
      return n;
    }

    //! Target of the edge leaving `v` reading `l`, if any.
    [[nodiscard]] std::optional<std::size_t> follow(std::size_t v, Letter l) const {
      auto it = _out[v].find(key(l));
      if (it == _out[v].end()) {
        return std::nullopt;
      }
      return it->second;
    }

    friend bool operator==(StallingsGraph const&, StallingsGraph const&) = default;

    static int key(Letter l) noexcept {
      return l.sign * (static_cast<int>(l.gen) + 1);
    }

    // Built only through the functions below.
    StallingsGraph(std::size_t rank, std::vector<std::map<int, std::size_t>> out)
        : _rank(rank), _out(std::move(out)) {}

   private:
    std::size_t                             _rank = 0;
    std::vector<std::map<int, std::size_t>> _out;
  };

  namespace detail {

    //! Mutable graph under construction: folds eagerly as edges are added.
    class Folder {
     public:
      explicit Folder(std::size_t rank) : _rank(rank) {
        new_vertex();
      }

      std::size_t new_vertex() {
        _parent.push_back(_parent.size());
        _out.emplace_back();
        return _parent.size() - 1;
      }

      std::size_t find(std::size_t v) {
        while (_parent[v] != v) {
          _parent[v] = _parent[_parent[v]];
          v          = _parent[v];
        }
        return v;
      }

      void add_edge(std::size_t u, int key, std::size_t v) {
        _pending.emplace_back(u, key, v);
        drain();
      }

      //! Adds a closed path at the basepoint reading `w` (assumed reduced).
      void add_petal(FreeWord const& w) {
        if (w.empty()) {
          return;
        }
        std::size_t cur = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
          std::size_t next = (i + 1 == w.size()) ? 0 : new_vertex();
          add_edge(cur, StallingsGraph::key(w[i]), next);
          cur = next;
        }
      }

      //! Prunes hanging trees, then renumbers canonically.
      StallingsGraph freeze() {
        std::size_t const                       n = _out.size();
        std::vector<std::map<int, std::size_t>> adj(n);
        std::vector<char>                       alive(n, 0);
        for (std::size_t v = 0; v < n; ++v) {
          if (find(v) != v) {
            continue;
          }
          alive[v] = 1;
          for (auto [k, t] : _out[v]) {
            adj[v][k] = find(t);
          }
        }
        std::size_t const base = find(0);
        bool              pruned = true;
        while (pruned) {
          pruned = false;
          for (std::size_t v = 0; v < n; ++v) {
            if (!alive[v] || v == base || adj[v].size() > 1) {
              continue;
            }
            for (auto [k, t] : adj[v]) {
              adj[t].erase(-k);
            }
            adj[v].clear();
            alive[v] = 0;
            pruned   = true;
          }
        }
        std::vector<std::size_t> number(n, static_cast<std::size_t>(-1));
        std::vector<std::size_t> order{base};
        number[base] = 0;
        for (std::size_t i = 0; i < order.size(); ++i) {
          auto v = order[i];
          for (std::size_t g = 0; g < _rank; ++g) {
            for (int sign : {1, -1}) {
              auto it = adj[v].find(sign * static_cast<int>(g + 1));
              if (it != adj[v].end() && number[it->second] == static_cast<std::size_t>(-1)) {
                number[it->second] = order.size();
                order.push_back(it->second);
              }
            }
          }
        }
        std::vector<std::map<int, std::size_t>> out(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
          for (auto [k, t] : adj[order[i]]) {
            out[i][k] = number[t];
          }
        }
        return StallingsGraph(_rank, std::move(out));
      }

     private:
      void drain() {
        while (!_pending.empty()) {
          auto [u, k, v] = _pending.back();
          _pending.pop_back();
          u = find(u);
          v = find(v);
          link(u, k, v);
          link(v, -k, u);
        }
      }

      void link(std::size_t u, int k, std::size_t v) {
        auto it = _out[u].find(k);
        if (it == _out[u].end()) {
          _out[u][k] = v;
          return;
        }
        merge(find(it->second), v);
      }

      void merge(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) {
          return;
        }
        if (b < a) {
          std::swap(a, b);
        }
        _parent[b] = a;
        auto moved = std::move(_out[b]);
        _out[b].clear();
        for (auto [k, t] : moved) {
          _pending.emplace_back(a, k, t);
        }
      }

      std::size_t                                          _rank;
      std::vector<std::size_t>                             _parent;
      std::vector<std::map<int, std::size_t>>              _out;
      std::vector<std::tuple<std::size_t, int, std::size_t>> _pending;
    };

  }  // namespace detail

  //! Folded core graph of the subgroup generated by `gens`.
  inline StallingsGraph from_generators(std::size_t rank, std::vector<FreeWord> const& gens) {
    detail::Folder f(rank);
    for (auto const& w : gens) {
      check_letters(w, rank);
      f.add_petal(reduce(w));
    }
    return f.freeze();
  }

  inline bool contains(StallingsGraph const& sg, FreeWord const& w) {
    check_letters(w, sg.ambient_rank());
    std::size_t v = sg.basepoint();
    for (Letter l : reduce(w)) {
      auto next = sg.follow(v, l);
      if (!next) {
        return false;
      }
      v = *next;
    }
    return v == sg.basepoint();
  }

  //! Rank of the subgroup: |E| - |V| + 1 of the core graph.
  inline std::size_t subgroup_rank(StallingsGraph const& sg) {
    return sg.num_edges() + 1 - sg.num_vertices();
  }

  //! Fiber product at the pair of basepoints, reduced to its core.
  inline StallingsGraph intersect(StallingsGraph const& a, StallingsGraph const& b) {
    if (a.ambient_rank() != b.ambient_rank()) {
      fail(ErrorCode::RankMismatch, "intersect over free groups of different rank");
    }
    std::size_t const                              rank = a.ambient_rank();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
    std::vector<std::pair<std::size_t, std::size_t>>           states;
    detail::Folder                                             f(rank);
    id[{0, 0}] = 0;
    states.emplace_back(0, 0);
    for (std::size_t i = 0; i < states.size(); ++i) {
      auto [va, vb] = states[i];
      for (gen_type g = 0; g < rank; ++g) {
        for (int sign : {1, -1}) {
          Letter l{g, sign};
          auto   ta = a.follow(va, l);
          auto   tb = b.follow(vb, l);
          if (!ta || !tb) {
            continue;
          }
          auto [it, inserted] = id.try_emplace({*ta, *tb}, 0);
          if (inserted) {
            it->second = f.new_vertex();
            states.emplace_back(*ta, *tb);
          }
          if (sign > 0) {
            f.add_edge(i, StallingsGraph::key(l), it->second);
          }
        }
      }
    }
    return f.freeze();
  }

  //! True iff the labelled graph is a complete automaton, so the subgroup has
  //! finite index equal to the number of vertices.
  inline bool is_finite_index(StallingsGraph const& sg) {
    for (std::size_t v = 0; v < sg.num_vertices(); ++v) {
      for (gen_type g = 0; g < sg.ambient_rank(); ++g) {
        if (!sg.follow(v, {g, 1}) || !sg.follow(v, {g, -1})) {
          return false;
        }
      }
    }
    return true;
  }

  //! Least r <= r_max such that the r-th powers of `elts` freely generate a
  //! free group of rank |elts|, or nullopt if none is found.
  inline std::optional<std::size_t> find_free_power(std::size_t                  rank,
                                                    std::vector<FreeWord> const& elts,
                                                    std::size_t                  r_max) {
    std::vector<FreeWord> reduced;
    for (auto const& w : elts) {
      check_letters(w, rank);
      reduced.push_back(reduce(w));
      if (reduced.back().empty()) {
        fail(ErrorCode::TrivialElement, "find_free_power with a trivial element");
      }
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      auto gi = from_generators(rank, {reduced[i]});
      for (std::size_t j = i + 1; j < reduced.size(); ++j) {
        auto gj = from_generators(rank, {reduced[j]});
        if (subgroup_rank(intersect(gi, gj)) != 0) {
          fail(ErrorCode::PowersShareRoot,
               "elements " + std::to_string(i) + " and " + std::to_string(j)
                   + " generate cyclic subgroups with non-trivial intersection");
        }
      }
    }
    for (std::size_t r = 1; r <= r_max; ++r) {
      std::vector<FreeWord> powers;
      for (auto const& w : reduced) {
        powers.push_back(power(w, static_cast<long long>(r)));
      }
      if (subgroup_rank(from_generators(rank, powers)) == reduced.size()) {
        return r;
      }
    }
    return std::nullopt;
  }

}  // namespace onerel
