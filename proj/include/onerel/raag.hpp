#pragma once

// Right-angled Artin groups A(Γ): word problem by shuffle reduction,
// canonical forms, positivity and the Bestvina-Brady character.

#include <compare>
#include <cstddef>
#include <vector>

#include "error.hpp"
#include "graphs.hpp"
#include "trace.hpp"
#include "words.hpp"

namespace onerel {

  namespace detail {

    //! Deletes pairs x ... x^-1 whose intervening letters all commute with x,
    //! until no such pair remains. Free cancellation is the special case of
    //! an empty interval.
    inline FreeWord shuffle_reduce(FreeWord w, SimpGraph const& g) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.size() && !changed; ++i) {
          for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[j].is_inverse_of(w[i])) {
              w.erase(w.begin() + static_cast<std::ptrdiff_t>(j));
              w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
              changed = true;
              break;
            }
            if (!g.adjacent(w[i].gen, w[j].gen)) {
              break;
            }
          }
        }
      }
      return w;
    }

  }  // namespace detail

  //! An element of A(Γ) stored as its canonical representative: shuffle
  //! reduced, then lexicographically least for the order
  //! g1 < g1^-1 < g2 < g2^-1 < ...
  class RaagElement {
   public:
    RaagElement() = default;

    RaagElement(GraphRef graph, FreeWord const& w) : _graph(std::move(graph)) {
      check_letters(w, _graph->size());
      auto const& g = *_graph;
      _nf           = detail::lex_normal_form(
          detail::shuffle_reduce(reduce(w), g),
          [&g](Letter a, Letter b) { return g.adjacent(a.gen, b.gen); },
          std::less<>());
    }

    [[nodiscard]] FreeWord const& nf() const noexcept {
      return _nf;
    }

    [[nodiscard]] GraphRef const& graph() const noexcept {
      return _graph;
    }

    [[nodiscard]] bool is_trivial() const noexcept {
      return _nf.empty();
    }

    [[nodiscard]] bool is_positive() const noexcept {
      for (Letter l : _nf) {
        if (l.sign < 0) {
          return false;
        }
      }
      return true;
    }

    //! Value of the character sending every vertex to 1.
    [[nodiscard]] long long bb_degree() const noexcept {
      long long s = 0;
      for (Letter l : _nf) {
        s += l.sign;
      }
      return s;
    }

    friend bool operator==(RaagElement const& a, RaagElement const& b) {
      detail::check_same_graph(a._graph, b._graph);
      return a._nf == b._nf;
    }

    friend std::strong_ordering operator<=>(RaagElement const& a, RaagElement const& b) {
      if (auto c = a._nf.size() <=> b._nf.size(); c != 0) {
        return c;
      }
      return a._nf <=> b._nf;
    }

   private:
    GraphRef _graph;
    FreeWord _nf;
  };

  inline RaagElement normalize_raag(GraphRef const& g, FreeWord const& w) {
    return RaagElement(g, w);
  }

  inline RaagElement multiply(RaagElement const& a, RaagElement const& b) {
    detail::check_same_graph(a.graph(), b.graph());
    return RaagElement(a.graph(), concat(a.nf(), b.nf()));
  }

  inline RaagElement invert(RaagElement const& a) {
    return RaagElement(a.graph(), inverse(a.nf()));
  }

  inline bool is_trivial(RaagElement const& a) noexcept {
    return a.is_trivial();
  }

  inline bool is_positive(RaagElement const& a) noexcept {
    return a.is_positive();
  }

  inline long long bb_degree(RaagElement const& a) noexcept {
    return a.bb_degree();
  }

  //! The free basis a_i^-1 a_{i+1} (i = 1 .. n-1) of the Bestvina-Brady
  //! subgroup of A(P_n).
  inline std::vector<FreeWord> bb_basis(std::size_t n) {
    if (n < 2) {
      fail(ErrorCode::TooFewVertices, "bb_basis needs n >= 2");
    }
    std::vector<FreeWord> out;
    for (gen_type i = 0; i + 1 < n; ++i) {
      out.push_back({{i, -1}, {i + 1, 1}});
    }
    return out;
  }

  //! Enumerates canonical forms of all elements of A(Γ) with normal form
  //! length at most `max_len`, in shortlex order. Canonical forms are prefix
  //! closed.
  inline std::vector<RaagElement> enumerate_raag(GraphRef const& g, std::size_t max_len) {
    std::vector<RaagElement> out;
    out.emplace_back(g, FreeWord{});
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t level_end = out.size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (gen_type gen = 0; gen < g->size(); ++gen) {
          for (int sign : {1, -1}) {
            FreeWord w = out[i].nf();
            w.push_back({gen, sign});
            RaagElement e(g, w);
            if (e.nf() == w) {
              out.push_back(std::move(e));
            }
          }
        }
      }
      level_begin = level_end;
    }
    return out;
  }

}  // namespace onerel
