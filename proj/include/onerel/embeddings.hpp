#pragma once

// Explicit embedding maps out of trace monoids and right-angled Artin groups,
// and bounded brute-force verifiers for them.

#include <array>
#include <concepts>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "concrete_groups.hpp"
#include "error.hpp"
#include "graphs.hpp"
#include "raag.hpp"
#include "trace.hpp"
#include "words.hpp"

namespace onerel {

  ////////////////////////////////////////////////////////////////////////////
  // Target monoids and groups
  ////////////////////////////////////////////////////////////////////////////

  //! A monoid with decidable equality and a total order on elements (used to
  //! find collisions).
  template <typename M>
  concept MonoidPolicy = requires(M const& m, typename M::value_type const& a) {
    { m.identity() } -> std::convertible_to<typename M::value_type>;
    { m.multiply(a, a) } -> std::convertible_to<typename M::value_type>;
    { a == a } -> std::convertible_to<bool>;
    { a < a } -> std::convertible_to<bool>;
  };

  template <typename G>
  concept GroupPolicy = MonoidPolicy<G> && requires(G const& g, typename G::value_type const& a) {
    { g.invert(a) } -> std::convertible_to<typename G::value_type>;
  };

  template <GroupPolicy G>
  typename G::value_type power(G const& g, typename G::value_type const& x, long long k) {
    auto base = k < 0 ? g.invert(x) : x;
    auto out  = g.identity();
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) {
      out = g.multiply(out, base);
    }
    return out;
  }

  template <GroupPolicy G>
  typename G::value_type commutator(G const& g,
                                    typename G::value_type const& x,
                                    typename G::value_type const& y) {
    return g.multiply(g.multiply(x, y), g.multiply(g.invert(x), g.invert(y)));
  }

  using WordTriple = std::array<PositiveWord, 3>;

  //! M_2 x M_2 x M_2 with M_2 = {x, y}^* (x = 0, y = 1).
  struct FreeMonoidCube {
    using value_type = WordTriple;

    [[nodiscard]] value_type identity() const {
      return {};
    }

    [[nodiscard]] value_type multiply(value_type a, value_type const& b) const {
      for (std::size_t i = 0; i < 3; ++i) {
        a[i].insert(a[i].end(), b[i].begin(), b[i].end());
      }
      return a;
    }
  };

  struct BSGroup {
    using value_type = AffineElement;
    int n            = 2;

    [[nodiscard]] value_type identity() const {
      return AffineElement(n);
    }
    [[nodiscard]] value_type multiply(value_type const& a, value_type const& b) const {
      return a * b;
    }
    [[nodiscard]] value_type invert(value_type const& a) const {
      return a.inverse();
    }
  };

  //! BS(1,n)^3.
  struct BSCube {
    using value_type = std::array<AffineElement, 3>;
    int n            = 2;

    [[nodiscard]] value_type identity() const {
      return {AffineElement(n), AffineElement(n), AffineElement(n)};
    }
    [[nodiscard]] value_type multiply(value_type const& a, value_type const& b) const {
      return {a[0] * b[0], a[1] * b[1], a[2] * b[2]};
    }
    [[nodiscard]] value_type invert(value_type const& a) const {
      return {a[0].inverse(), a[1].inverse(), a[2].inverse()};
    }
  };

  struct TrefoilGroup {
    using value_type = TrefoilElement;

    [[nodiscard]] value_type identity() const {
      return {};
    }
    [[nodiscard]] value_type multiply(value_type const& a, value_type const& b) const {
      return a * b;
    }
    [[nodiscard]] value_type invert(value_type const& a) const {
      return a.inverse();
    }
  };

  struct HNNTrefoilGroup {
    using value_type = HNNTrefoilElement;

    [[nodiscard]] value_type identity() const {
      return {};
    }
    [[nodiscard]] value_type multiply(value_type const& a, value_type const& b) const {
      return a * b;
    }
    [[nodiscard]] value_type invert(value_type const& a) const {
      return a.inverse();
    }
  };

  struct TraceMonoid {
    using value_type = Trace;
    GraphRef graph;

    [[nodiscard]] value_type identity() const {
      return Trace(graph, {});
    }
    [[nodiscard]] value_type multiply(value_type const& a, value_type const& b) const {
      return concat(a, b);
    }
  };

  struct RaagGroup {
    using value_type = RaagElement;
    GraphRef graph;

    [[nodiscard]] value_type identity() const {
      return RaagElement(graph, {});
    }
    [[nodiscard]] value_type multiply(value_type const& a, value_type const& b) const {
      return onerel::multiply(a, b);
    }
    [[nodiscard]] value_type invert(value_type const& a) const {
      return onerel::invert(a);
    }
  };

  //! Element of A * <f>: alternating non-trivial syllables from A = A(Γ)
  //! (canonical RAAG words) and from <f> (non-zero powers).
  struct FreeProductElement {
    struct Syllable {
      long long f = 0;  // non-zero for an <f> syllable
      FreeWord  a;      // canonical form for an A syllable

      [[nodiscard]] bool is_f() const noexcept {
        return f != 0;
      }
      friend bool operator==(Syllable const&, Syllable const&) = default;
      friend auto operator<=>(Syllable const&, Syllable const&) = default;
    };

    std::vector<Syllable> syllables;

    [[nodiscard]] bool is_identity() const noexcept {
      return syllables.empty();
    }

    friend bool operator==(FreeProductElement const&, FreeProductElement const&) = default;
    friend auto operator<=>(FreeProductElement const&, FreeProductElement const&) = default;
  };

  //! A(Γ) * Z with Z = <f>.
  struct FreeProductGroup {
    using value_type = FreeProductElement;
    GraphRef graph;

    [[nodiscard]] value_type identity() const {
      return {};
    }

    [[nodiscard]] value_type f_power(long long k) const {
      value_type out;
      if (k != 0) {
        out.syllables.push_back({k, {}});
      }
      return out;
    }

    [[nodiscard]] value_type embed(RaagElement const& a) const {
      value_type out;
      if (!a.is_trivial()) {
        out.syllables.push_back({0, a.nf()});
      }
      return out;
    }

    [[nodiscard]] value_type multiply(value_type a, value_type const& b) const {
      for (auto const& s : b.syllables) {
        push(a, s);
      }
      return a;
    }

    [[nodiscard]] value_type invert(value_type const& a) const {
      value_type out;
      for (auto it = a.syllables.rbegin(); it != a.syllables.rend(); ++it) {
        if (it->is_f()) {
          out.syllables.push_back({-it->f, {}});
        } else {
          out.syllables.push_back({0, RaagElement(graph, inverse(it->a)).nf()});
        }
      }
      return out;
    }

   private:
    void push(value_type& x, value_type::Syllable const& s) const {
      if (x.syllables.empty() || x.syllables.back().is_f() != s.is_f()) {
        x.syllables.push_back(s);
        return;
      }
      auto& last = x.syllables.back();
      if (s.is_f()) {
        last.f += s.f;
        if (last.f == 0) {
          x.syllables.pop_back();
        }
      } else {
        last.a = RaagElement(graph, concat(last.a, s.a)).nf();
        if (last.a.empty()) {
          x.syllables.pop_back();
        }
      }
    }
  };

  static_assert(MonoidPolicy<FreeMonoidCube>);
  static_assert(GroupPolicy<BSCube>);
  static_assert(GroupPolicy<HNNTrefoilGroup>);
  static_assert(GroupPolicy<FreeProductGroup>);

  ////////////////////////////////////////////////////////////////////////////
  // Maps
  ////////////////////////////////////////////////////////////////////////////

  //! Assignment of a target element to each vertex of the source graph, such
  //! that adjacent vertices have commuting images. It extends to T(Γ) and,
  //! for group targets, to A(Γ).
  template <MonoidPolicy M>
  class MonoidMap {
   public:
    using value_type = typename M::value_type;

    MonoidMap(GraphRef source, M target, std::vector<value_type> images)
        : _source(std::move(source)), _target(std::move(target)), _images(std::move(images)) {
      if (_images.size() != _source->size()) {
        fail(ErrorCode::InvalidArgument, "one image per source generator is required");
      }
      for (auto [u, v] : _source->edges()) {
        if (!(_target.multiply(_images[u], _images[v])
              == _target.multiply(_images[v], _images[u]))) {
          fail(ErrorCode::NonCommutingImages,
               "images of adjacent vertices " + _source->name(u) + " and "
                   + _source->name(v) + " do not commute");
        }
      }
    }

    [[nodiscard]] GraphRef const& source() const noexcept {
      return _source;
    }

    [[nodiscard]] M const& target() const noexcept {
      return _target;
    }

    [[nodiscard]] std::vector<value_type> const& images() const noexcept {
      return _images;
    }

    [[nodiscard]] value_type operator()(PositiveWord const& w) const {
      check_letters(w, _source->size());
      auto out = _target.identity();
      for (auto g : w) {
        out = _target.multiply(out, _images[g]);
      }
      return out;
    }

    [[nodiscard]] value_type operator()(Trace const& t) const {
      return (*this)(t.nf());
    }

    [[nodiscard]] value_type operator()(FreeWord const& w) const
      requires GroupPolicy<M>
    {
      check_letters(w, _source->size());
      auto out = _target.identity();
      for (Letter l : w) {
        out = _target.multiply(out, l.sign > 0 ? _images[l.gen] : _target.invert(_images[l.gen]));
      }
      return out;
    }

   private:
    GraphRef                _source;
    M                       _target;
    std::vector<value_type> _images;
  };

  struct InjectivityReport {
    std::size_t                                     checked = 0;
    std::vector<std::pair<PositiveWord, PositiveWord>> collisions;

    [[nodiscard]] bool ok() const noexcept {
      return collisions.empty();
    }

    [[nodiscard]] std::string to_text(Alphabet const& source) const {
      std::string out = "checked=" + std::to_string(checked)
                        + " collisions=" + std::to_string(collisions.size())
                        + " (bounded certificate)\n";
      for (auto const& [u, v] : collisions) {
        out += "collision: " + format_word(u, source) + " = " + format_word(v, source) + "\n";
      }
      return out;
    }
  };

  struct KernelReport {
    std::size_t           checked = 0;
    std::vector<FreeWord> kernel;

    [[nodiscard]] bool ok() const noexcept {
      return kernel.empty();
    }

    [[nodiscard]] std::string to_text(Alphabet const& source) const {
      std::string out = "checked=" + std::to_string(checked)
                        + " kernel=" + std::to_string(kernel.size())
                        + " (bounded certificate)\n";
      for (auto const& w : kernel) {
        out += "kernel: " + format_word(w, source) + "\n";
      }
      return out;
    }
  };

  //! Maps every trace of length <= max_len and reports pairs of distinct
  //! traces with equal images. Pairs are listed in shortlex order of the
  //! later trace, each paired with the first trace having that image.
  template <MonoidPolicy M>
  InjectivityReport verify_monoid_injective(MonoidMap<M> const& map, std::size_t max_len) {
    using value_type = typename M::value_type;
    InjectivityReport                     report;
    auto const                            traces = enumerate_traces(map.source(), max_len);
    std::map<value_type, std::size_t>     seen;
    std::map<PositiveWord, value_type>    cache;  // prefix images
    for (std::size_t i = 0; i < traces.size(); ++i) {
      auto const& nf = traces[i].nf();
      value_type  img;
      if (nf.empty()) {
        img = map.target().identity();
      } else {
        PositiveWord prefix(nf.begin(), nf.end() - 1);
        img = map.target().multiply(cache.at(prefix), map.images()[nf.back()]);
      }
      if (nf.size() < max_len) {
        cache.emplace(nf, img);
      }
      auto [it, inserted] = seen.try_emplace(img, i);
      if (!inserted) {
        report.collisions.emplace_back(traces[it->second].nf(), nf);
      }
      ++report.checked;
    }
    return report;
  }

  //! Maps every non-trivial element of A(Γ) with canonical form length
  //! <= max_len and reports those sent to the identity. A necessary condition
  //! for injectivity only.
  template <GroupPolicy G>
  KernelReport verify_no_kernel(MonoidMap<G> const& map, std::size_t max_len) {
    using value_type = typename G::value_type;
    KernelReport                    report;
    auto const                      elts     = enumerate_raag(map.source(), max_len);
    auto const                      identity = map.target().identity();
    std::map<FreeWord, value_type>  cache;
    for (auto const& e : elts) {
      auto const& nf = e.nf();
      value_type  img;
      if (nf.empty()) {
        img = identity;
      } else {
        FreeWord prefix(nf.begin(), nf.end() - 1);
        auto     gen = map.images()[nf.back().gen];
        img          = map.target().multiply(cache.at(prefix),
                                    nf.back().sign > 0 ? gen : map.target().invert(gen));
      }
      if (nf.size() < max_len) {
        cache.emplace(nf, img);
      }
      if (nf.empty()) {
        continue;
      }
      ++report.checked;
      if (img == identity) {
        report.kernel.push_back(nf);
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////////
  // T(P_4) -> M_2^3
  ////////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline bool is_p4(SimpGraph const& g) {
      return g.size() == 4 && g.edges() == std::set<SimpGraph::edge_type>{{0, 1}, {1, 2}, {2, 3}};
    }

    inline void check_p4(SimpGraph const& g) {
      if (!is_p4(g)) {
        fail(ErrorCode::WrongGraph, "expected the path a - b - c - d on four vertices");
      }
    }
  }  // namespace detail

  inline Alphabet free_monoid_alphabet() {
    return Alphabet({"x", "y"});
  }

  //! Images of the four generators of T(P_4) in M_2^3 (x = 0, y = 1):
  //! α -> (x, y, 1), β -> (x, 1, x), γ -> (1, x, 1), δ -> (y, x, y).
  inline std::vector<WordTriple> phi_p4_images() {
    return {WordTriple{PositiveWord{0}, PositiveWord{1}, PositiveWord{}},
            WordTriple{PositiveWord{0}, PositiveWord{}, PositiveWord{0}},
            WordTriple{PositiveWord{}, PositiveWord{0}, PositiveWord{}},
            WordTriple{PositiveWord{1}, PositiveWord{0}, PositiveWord{1}}};
  }

  inline MonoidMap<FreeMonoidCube> phi_p4_map(GraphRef const& p4) {
    detail::check_p4(*p4);
    return MonoidMap<FreeMonoidCube>(p4, {}, phi_p4_images());
  }

  inline WordTriple phi_p4(Trace const& t) {
    return phi_p4_map(t.graph())(t);
  }

  //! T(P_4) -> BS(1,2)^3: phi followed by x -> t, y -> a t in each factor.
  inline MonoidMap<BSCube> bs_cube_map(GraphRef const& p4) {
    detail::check_p4(*p4);
    int const           n = 2;
    AffineElement const x = bs_from_word(n, {{bs::t, 1}});
    AffineElement const y = bs_from_word(n, {{bs::a, 1}, {bs::t, 1}});
    std::vector<BSCube::value_type> images;
    for (auto const& triple : phi_p4_images()) {
      BSCube::value_type img{AffineElement(n), AffineElement(n), AffineElement(n)};
      for (std::size_t i = 0; i < 3; ++i) {
        for (auto letter : triple[i]) {
          img[i] = img[i] * (letter == 0 ? x : y);
        }
      }
      images.push_back(img);
    }
    return MonoidMap<BSCube>(p4, BSCube{n}, std::move(images));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Maps into the trefoil group and its HNN extension
  ////////////////////////////////////////////////////////////////////////////

  //! α -> a = x^2 y, β -> b = x^3, γ -> c = xy on P_3.
  inline MonoidMap<TrefoilGroup> trefoil_p3_map(GraphRef const& p3) {
    if (p3->size() != 3 || p3->edges() != std::set<SimpGraph::edge_type>{{0, 1}, {1, 2}}) {
      fail(ErrorCode::WrongGraph, "expected the path on three vertices");
    }
    return MonoidMap<TrefoilGroup>(p3, {}, {trefoil::a(), trefoil::b(), trefoil::c()});
  }

  //! α -> a, β -> b, γ -> c, δ -> d = t xy t^-1 on P_4.
  inline MonoidMap<HNNTrefoilGroup> hnn_p4_map(GraphRef const& p4) {
    detail::check_p4(*p4);
    return MonoidMap<HNNTrefoilGroup>(p4, {}, {hnn::a(), hnn::b(), hnn::c(), hnn::d()});
  }

  //! (a c^k a^-1, b^l, c^m, d^-1 b^n d)
  template <GroupPolicy G>
  std::array<typename G::value_type, 4> prop14_elements(G const&                      g,
                                                        typename G::value_type const& a,
                                                        typename G::value_type const& b,
                                                        typename G::value_type const& c,
                                                        typename G::value_type const& d,
                                                        long long                     k,
                                                        long long                     l,
                                                        long long                     m,
                                                        long long                     n) {
    if (k == 0 || l == 0 || m == 0 || n == 0) {
      fail(ErrorCode::ZeroExponent, "exponents must be non-zero");
    }
    return {g.multiply(g.multiply(a, power(g, c, k)), g.invert(a)),
            power(g, b, l),
            power(g, c, m),
            g.multiply(g.multiply(g.invert(d), power(g, b, n)), d)};
  }

  ////////////////////////////////////////////////////////////////////////////
  // RAAG embeddings
  ////////////////////////////////////////////////////////////////////////////

  //! T(Γ) -> A(Γ)^+.
  inline RaagElement paris(GraphRef const& g, PositiveWord const& w) {
    check_letters(w, g->size());
    return RaagElement(g, to_free_word(w));
  }

  //! Star alphabet {center, leaf_1, ..., leaf_k} into A(P_3) = F(α, γ) x <β>:
  //! center -> β, leaf_i -> α^i γ α^-i.
  inline std::vector<FreeWord> star_images(std::size_t k) {
    if (k == 0) {
      fail(ErrorCode::InvalidArgument, "a star needs at least one leaf");
    }
    std::vector<FreeWord> out{{{1, 1}}};
    for (std::size_t i = 1; i <= k; ++i) {
      auto const ii = static_cast<long long>(i);
      out.push_back(concat(concat(power({{0, 1}}, ii), {{2, 1}}), power({{0, 1}}, -ii)));
    }
    return out;
  }

  inline RaagElement star_embed(std::size_t k, FreeWord const& w) {
    auto const images = star_images(k);
    check_letters(w, k + 1);
    FreeWord out;
    for (Letter l : w) {
      auto const& img = images[l.gen];
      out             = concat(out, l.sign > 0 ? img : inverse(img));
    }
    return RaagElement(make_graph_ref(path_graph(3)), out);
  }

  //! Embedding data for a forest Γ with d(Γ) in {1, 2}: target A(P_{d+1}) * <f>
  //! and the image of every vertex. Component i (order of least vertex) is
  //! embedded into A(P_{d+1}) and conjugated by f^i.
  struct ForestEmbedding {
    FreeProductGroup                target;
    std::vector<FreeProductElement> images;
  };

  inline ForestEmbedding forest_embedding(SimpGraph const& g) {
    if (!is_forest(g)) {
      fail(ErrorCode::NotForest, "forest_embed requires an acyclic graph");
    }
    std::size_t const d = max_component_diameter(g);
    if (d == 0) {
      fail(ErrorCode::DiameterOutOfRange,
           "d = 0: totally disconnected graphs are excluded; BS(1,2) contains a free "
           "submonoid of rank 2 but no free subgroup of rank 2");
    }
    if (d > 2) {
      fail(ErrorCode::DiameterOutOfRange,
           "d >= 3 needs an embedding into A(P_4), which is not provided");
    }
    auto const       target_graph = make_graph_ref(path_graph(d + 1));
    FreeProductGroup fp{target_graph};
    std::vector<FreeProductElement> images(g.size());

    auto const comps = component_vertices(g);
    for (std::size_t i = 0; i < comps.size(); ++i) {
      auto const& vs = comps[i];
      std::vector<FreeWord> local(vs.size());
      if (vs.size() == 1) {
        local[0] = {{0, 1}};
      } else if (vs.size() == 2) {
        local[0] = {{0, 1}};
        local[1] = {{1, 1}};
      } else {
        // a star: its centre is the unique vertex of degree > 1
        std::size_t centre = 0;
        for (std::size_t j = 0; j < vs.size(); ++j) {
          if (g.neighbours(vs[j]).size() > 1) {
            centre = j;
          }
        }
        auto const  star = star_images(vs.size() - 1);
        std::size_t leaf = 1;
        for (std::size_t j = 0; j < vs.size(); ++j) {
          local[j] = j == centre ? star[0] : star[leaf++];
        }
      }
      auto const conj = fp.f_power(static_cast<long long>(i));
      auto const back = fp.f_power(-static_cast<long long>(i));
      for (std::size_t j = 0; j < vs.size(); ++j) {
        auto inner     = fp.embed(RaagElement(target_graph, local[j]));
        images[vs[j]]  = fp.multiply(fp.multiply(conj, inner), back);
      }
    }
    return {fp, std::move(images)};
  }

  inline FreeProductElement forest_embed(SimpGraph const& g, FreeWord const& w) {
    check_letters(w, g.size());
    auto const emb = forest_embedding(g);
    auto       out = emb.target.identity();
    for (Letter l : w) {
      auto const& img = emb.images[l.gen];
      out             = emb.target.multiply(out, l.sign > 0 ? img : emb.target.invert(img));
    }
    return out;
  }

  inline std::string format_free_product(FreeProductElement const& e, Alphabet const& a) {
    if (e.is_identity()) {
      return "1";
    }
    std::string out;
    for (auto const& s : e.syllables) {
      if (!out.empty()) {
        out += " * ";
      }
      out += s.is_f() ? "f^" + std::to_string(s.f) : "[" + format_word(s.a, a) + "]";
    }
    return out;
  }

}  // namespace onerel
