#pragma once

// The trace monoid T(Γ): positive words modulo commutation of adjacent
// vertices, with lexicographic normal forms.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <vector>

#include "error.hpp"
#include "graphs.hpp"
#include "words.hpp"

namespace onerel {

  using GraphRef = std::shared_ptr<SimpGraph const>;

  inline GraphRef make_graph_ref(SimpGraph g) {
    return std::make_shared<SimpGraph const>(std::move(g));
  }

  namespace detail {

    //! Lexicographically least word in the partial-commutation class of `w`.
    //! At each step the least letter that commutes with everything before it
    //! is emitted. `commutes(a, b)` must be symmetric and false for a == b.
    template <typename L, typename Commutes, typename Less>
    std::vector<L> lex_normal_form(std::vector<L> w, Commutes&& commutes, Less&& less) {
      std::vector<L> out;
      out.reserve(w.size());
      while (!w.empty()) {
        std::size_t best = 0;
        for (std::size_t j = 1; j < w.size(); ++j) {
          if (!less(w[j], w[best])) {
            continue;
          }
          bool available = true;
          for (std::size_t i = 0; i < j && available; ++i) {
            available = commutes(w[i], w[j]);
          }
          if (available) {
            best = j;
          }
        }
        out.push_back(w[best]);
        w.erase(w.begin() + static_cast<std::ptrdiff_t>(best));
      }
      return out;
    }

    inline void check_same_graph(GraphRef const& a, GraphRef const& b) {
      if (a != b && !(a && b && *a == *b)) {
        fail(ErrorCode::GraphMismatch, "elements over different graphs");
      }
    }

  }  // namespace detail

  //! An element of T(Γ) stored as its canonical representative.
  class Trace {
   public:
    Trace() = default;

    Trace(GraphRef graph, PositiveWord const& w) : _graph(std::move(graph)) {
      check_letters(w, _graph->size());
      auto const& g = *_graph;
      _nf           = detail::lex_normal_form(
          w,
          [&g](gen_type a, gen_type b) { return g.adjacent(a, b); },
          std::less<>());
    }

    [[nodiscard]] PositiveWord const& nf() const noexcept {
      return _nf;
    }

    [[nodiscard]] GraphRef const& graph() const noexcept {
      return _graph;
    }

    [[nodiscard]] std::size_t length() const noexcept {
      return _nf.size();
    }

    friend bool operator==(Trace const& a, Trace const& b) {
      detail::check_same_graph(a._graph, b._graph);
      return a._nf == b._nf;
    }

    //! Shortlex order on canonical forms.
    friend std::strong_ordering operator<=>(Trace const& a, Trace const& b) {
      if (auto c = a._nf.size() <=> b._nf.size(); c != 0) {
        return c;
      }
      return a._nf <=> b._nf;
    }

   private:
    struct raw_tag {};
    Trace(raw_tag, GraphRef graph, PositiveWord nf)
        : _graph(std::move(graph)), _nf(std::move(nf)) {}

    friend std::vector<Trace> enumerate_traces(GraphRef const&, std::size_t);

    GraphRef     _graph;
    PositiveWord _nf;
  };

  inline Trace normalize_trace(GraphRef const& g, PositiveWord const& w) {
    return Trace(g, w);
  }

  inline bool trace_equal(Trace const& a, Trace const& b) {
    return a == b;
  }

  inline Trace concat(Trace const& a, Trace const& b) {
    detail::check_same_graph(a.graph(), b.graph());
    PositiveWord w = a.nf();
    w.insert(w.end(), b.nf().begin(), b.nf().end());
    return Trace(a.graph(), w);
  }

  //! True iff some representative of `t` begins with `u`.
  inline bool starts_with(Trace const& t, PositiveWord const& u) {
    auto const& g = *t.graph();
    check_letters(u, g.size());
    PositiveWord rest = t.nf();
    for (auto letter : u) {
      bool found = false;
      for (std::size_t j = 0; j < rest.size(); ++j) {
        if (rest[j] == letter) {
          found = true;
          for (std::size_t i = 0; i < j && found; ++i) {
            found = g.adjacent(rest[i], letter);
          }
          if (found) {
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
          }
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  //! All traces of length at most `max_len`, each once, in shortlex order of
  //! their canonical forms. Canonical forms are prefix closed, so the search
  //! only extends canonical words.
  inline std::vector<Trace> enumerate_traces(GraphRef const& g, std::size_t max_len) {
    std::vector<Trace> out;
    out.push_back(Trace(Trace::raw_tag{}, g, {}));
    std::size_t level_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
      std::size_t level_end = out.size();
      for (std::size_t i = level_begin; i < level_end; ++i) {
        for (gen_type a = 0; a < g->size(); ++a) {
          PositiveWord w = out[i].nf();
          w.push_back(a);
          // w is canonical iff `a` cannot move left past a larger letter.
          bool canonical = true;
          for (std::size_t j = w.size() - 1; j-- > 0;) {
            if (!g->adjacent(w[j], a)) {
              break;
            }
            if (w[j] > a) {
              canonical = false;
              break;
            }
          }
          if (canonical) {
            out.push_back(Trace(Trace::raw_tag{}, g, std::move(w)));
          }
        }
      }
      level_begin = level_end;
    }
    return out;
  }

}  // namespace onerel
