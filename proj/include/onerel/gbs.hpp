#pragma once

// Generalised Baumslag-Solitar groups as labelled graphs of infinite cyclic
// groups, and their C*-simplicity classification.

#include <cstddef>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "concrete_groups.hpp"
#include "error.hpp"
#include "words.hpp"

namespace onerel {

  //! Edge group Z included into the vertex group at `u` with index `alpha`
  //! and into the vertex group at `v` with index `omega` (signed).
  struct GBSEdge {
    std::size_t u     = 0;
    std::size_t v     = 0;
    long long   alpha = 1;
    long long   omega = 1;

    [[nodiscard]] bool is_loop() const noexcept {
      return u == v;
    }

    friend bool operator==(GBSEdge const&, GBSEdge const&) = default;
  };

  struct GBSGraph {
    std::size_t          vertices = 0;
    std::vector<GBSEdge> edges;

    friend bool operator==(GBSGraph const&, GBSGraph const&) = default;
  };

  //! Subgroup of Q* generated by `generators` (reduced fractions).
  struct ModularImage {
    std::vector<Rational> generators;
  };

  enum class Verdict {
    CstarSimple,
    NotCstarSimple_SolvableBS,
    NotCstarSimple_Unimodular,
    Cyclic,
    Unknown,
  };

  struct Classification {
    Verdict     verdict = Verdict::Unknown;
    long long   bs_n    = 0;  // meaningful for NotCstarSimple_SolvableBS only
    std::string reason;

    [[nodiscard]] std::string verdict_name() const {
      switch (verdict) {
        case Verdict::CstarSimple: return "CstarSimple";
        case Verdict::NotCstarSimple_SolvableBS:
          return "NotCstarSimple_SolvableBS(" + std::to_string(bs_n) + ")";
        case Verdict::NotCstarSimple_Unimodular: return "NotCstarSimple_Unimodular";
        case Verdict::Cyclic: return "Cyclic";
        case Verdict::Unknown: return "Unknown";
      }
      return "Unknown";
    }

    //! `verdict=<V> reason=<text>`
    [[nodiscard]] std::string to_line() const {
      return "verdict=" + verdict_name() + " reason=" + reason;
    }

    [[nodiscard]] bool is_not_cstar_simple() const noexcept {
      return verdict == Verdict::NotCstarSimple_SolvableBS
             || verdict == Verdict::NotCstarSimple_Unimodular;
    }
  };

  //! Reads `gbs-vertices: <n>` then lines `gbs-edge: <u> <v> <alpha> <omega>`.
  inline GBSGraph parse_gbs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        line;
    GBSGraph           g;
    bool               have_vertices = false;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      std::string        head;
      if (!(ls >> head)) {
        continue;
      }
      if (head == "gbs-vertices:") {
        long long n = -1;
        if (have_vertices || !(ls >> n) || n < 0) {
          fail(ErrorCode::Malformed, line);
        }
        g.vertices    = static_cast<std::size_t>(n);
        have_vertices = true;
      } else if (head == "gbs-edge:") {
        long long u = -1, v = -1, alpha = 0, omega = 0;
        if (!have_vertices || !(ls >> u >> v >> alpha >> omega)) {
          fail(ErrorCode::Malformed, line);
        }
        if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= g.vertices
            || static_cast<std::size_t>(v) >= g.vertices) {
          fail(ErrorCode::UnknownEndpoint, line);
        }
        if (alpha == 0 || omega == 0) {
          fail(ErrorCode::Malformed, "zero edge label: " + line);
        }
        g.edges.push_back({static_cast<std::size_t>(u), static_cast<std::size_t>(v), alpha, omega});
      } else {
        fail(ErrorCode::Malformed, "unrecognised line: " + line);
      }
      std::string extra;
      if (ls >> extra) {
        fail(ErrorCode::Malformed, "trailing tokens: " + line);
      }
    }
    if (!have_vertices) {
      fail(ErrorCode::Malformed, "missing gbs-vertices line");
    }
    return g;
  }

  inline std::string format_gbs(GBSGraph const& g) {
    std::string out = "gbs-vertices: " + std::to_string(g.vertices) + "\n";
    for (auto const& e : g.edges) {
      out += "gbs-edge: " + std::to_string(e.u) + " " + std::to_string(e.v) + " "
             + std::to_string(e.alpha) + " " + std::to_string(e.omega) + "\n";
    }
    return out;
  }

  //! Single vertex with one loop: BS(m, n) = <a, t | t a^m t^-1 = a^n>.
  inline GBSGraph bs_loop(long long m, long long n) {
    return {1, {{0, 0, m, n}}};
  }

  namespace detail {
    inline void check_connected(GBSGraph const& g) {
      if (g.vertices == 0) {
        return;
      }
      std::vector<std::vector<std::size_t>> adj(g.vertices);
      for (auto const& e : g.edges) {
        if (e.alpha == 0 || e.omega == 0) {
          fail(ErrorCode::InvalidArgument, "zero edge label");
        }
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
      }
      std::vector<char>        seen(g.vertices, 0);
      std::vector<std::size_t> stack{0};
      seen[0]           = 1;
      std::size_t count = 1;
      while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto u : adj[v]) {
          if (!seen[u]) {
            seen[u] = 1;
            ++count;
            stack.push_back(u);
          }
        }
      }
      if (count != g.vertices) {
        fail(ErrorCode::Disconnected, "graph of groups is not connected");
      }
    }

    inline long long abs_ll(long long v) noexcept {
      return v < 0 ? -v : v;
    }
  }  // namespace detail

  //! Collapses non-loop edges with an index of ±1 until none remain. Edges
  //! are scanned in input order and the scan restarts after every collapse.
  inline GBSGraph reduce_gbs(GBSGraph g) {
    detail::check_connected(g);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        GBSEdge const e = g.edges[i];
        if (e.is_loop()) {
          continue;
        }
        std::size_t gone, kept;
        long long   factor;
        if (detail::abs_ll(e.alpha) == 1) {
          // a_u = a_v^(alpha * omega): u merges into v
          gone   = e.u;
          kept   = e.v;
          factor = e.alpha * e.omega;
        } else if (detail::abs_ll(e.omega) == 1) {
          gone   = e.v;
          kept   = e.u;
          factor = e.alpha * e.omega;
        } else {
          continue;
        }
        g.edges.erase(g.edges.begin() + static_cast<std::ptrdiff_t>(i));
        for (auto& f : g.edges) {
          if (f.u == gone) {
            f.u = kept;
            f.alpha *= factor;
          }
          if (f.v == gone) {
            f.v = kept;
            f.omega *= factor;
          }
        }
        for (auto& f : g.edges) {
          if (f.u > gone) {
            --f.u;
          }
          if (f.v > gone) {
            --f.v;
          }
        }
        --g.vertices;
        changed = true;
        break;
      }
    }
    return g;
  }

  //! Generators of the image of the modular homomorphism: the product of
  //! omega/alpha around each fundamental cycle of a BFS spanning tree
  //! (edges crossed backwards contribute alpha/omega).
  inline ModularImage modular_image(GBSGraph const& g) {
    detail::check_connected(g);
    ModularImage out;
    if (g.vertices == 0) {
      return out;
    }
    // potential[v] = product of ratios along the tree path from vertex 0.
    std::vector<std::optional<Rational>> potential(g.vertices);
    std::vector<char>                    tree_edge(g.edges.size(), 0);
    std::queue<std::size_t>              q;
    potential[0] = Rational(1);
    q.push(0);
    while (!q.empty()) {
      auto v = q.front();
      q.pop();
      for (std::size_t i = 0; i < g.edges.size(); ++i) {
        auto const& e = g.edges[i];
        if (e.is_loop()) {
          continue;
        }
        if (e.u == v && !potential[e.v]) {
          potential[e.v] = *potential[v] * ratio(e.omega, e.alpha);
          tree_edge[i]   = 1;
          q.push(e.v);
        } else if (e.v == v && !potential[e.u]) {
          potential[e.u] = *potential[v] * ratio(e.alpha, e.omega);
          tree_edge[i]   = 1;
          q.push(e.u);
        }
      }
    }
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (tree_edge[i]) {
        continue;
      }
      auto const& e = g.edges[i];
      // u -> v across e, then back to u along the tree
      out.generators.push_back(*potential[e.u] * ratio(e.omega, e.alpha) / *potential[e.v]);
    }
    return out;
  }

  inline bool is_unimodular(GBSGraph const& g) {
    for (auto const& r : modular_image(g).generators) {
      if (abs(r) != 1) {
        return false;
      }
    }
    return true;
  }

  //! Some(n) with |n| >= 2 iff the reduced graph is one vertex carrying one
  //! loop with an index of ±1, i.e. the group is BS(1, n).
  inline std::optional<long long> detect_solvable_bs(GBSGraph const& g) {
    auto const r = reduce_gbs(g);
    if (r.vertices != 1 || r.edges.size() != 1) {
      return std::nullopt;
    }
    auto const& e = r.edges[0];
    if (detail::abs_ll(e.alpha) != 1 && detail::abs_ll(e.omega) != 1) {
      return std::nullopt;
    }
    long long const n = e.alpha * e.omega;
    if (detail::abs_ll(n) < 2) {
      return std::nullopt;
    }
    return n;
  }

  inline Classification classify_cstar(GBSGraph const& g) {
    if (g.vertices == 0) {
      fail(ErrorCode::EmptyGraph, "graph of groups with no vertices");
    }
    auto const r = reduce_gbs(g);
    if (r.edges.empty()) {
      return {Verdict::Cyclic, 0, "reduced graph is a single vertex: the group is infinite cyclic"};
    }
    if (auto n = detect_solvable_bs(r)) {
      return {Verdict::NotCstarSimple_SolvableBS, *n,
              "reduced graph is one vertex with one loop of index 1: solvable BS(1,"
                  + std::to_string(*n) + ") has a non-trivial amenable normal subgroup"};
    }
    if (is_unimodular(r)) {
      std::string reason = "modular homomorphism has image in {-1,1}: unimodular GBS group "
                           "with an infinite cyclic normal subgroup";
      if (r.vertices == 1 && r.edges.size() == 1
          && detail::abs_ll(r.edges[0].alpha) == 1 && detail::abs_ll(r.edges[0].omega) == 1) {
        reason += " (also BS(1,"
                  + std::to_string(r.edges[0].alpha * r.edges[0].omega)
                  + "); the unimodular verdict is preferred)";
      }
      return {Verdict::NotCstarSimple_Unimodular, 0, reason};
    }
    return {Verdict::CstarSimple, 0,
            "reduced GBS graph is neither BS(1,n) nor unimodular, so the group is C*-simple"};
  }

  //! GBS groups commensurate an infinite cyclic subgroup and never have P_nai.
  inline bool p_nai_verdict(GBSGraph const& g) {
    if (g.vertices == 0) {
      fail(ErrorCode::EmptyGraph, "graph of groups with no vertices");
    }
    detail::check_connected(g);
    return false;
  }

}  // namespace onerel
