#pragma once

// Fixed regression checks over the worked examples: free submonoids of
// BS(1,2), the trace monoid T(P_4) inside M_2^3 and BS(1,2)^3, copies of
// T(P_3) and T(P_4) in the trefoil group and its HNN extension, induced path
// search, GBS and one-relator verdicts, and free-power search.

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "concrete_groups.hpp"
#include "embeddings.hpp"
#include "gbs.hpp"
#include "graphs.hpp"
#include "one_relator.hpp"
#include "raag.hpp"
#include "stallings.hpp"
#include "trace.hpp"
#include "words.hpp"

namespace onerel::regression {

  struct CheckResult {
    std::string name;
    bool        pass = false;
    std::string detail;

    [[nodiscard]] std::string to_line() const {
      return std::string(pass ? "PASS" : "FAIL") + " " + name + " " + detail;
    }
  };

  namespace detail {
    //! Collects sub-check outcomes into one result.
    class Tally {
     public:
      explicit Tally(std::string name) : _result{std::move(name), true, ""} {}

      void expect(bool ok, std::string const& what) {
        if (!_result.detail.empty()) {
          _result.detail += "; ";
        }
        _result.detail += what + (ok ? "=ok" : "=FAILED");
        _result.pass = _result.pass && ok;
      }

      CheckResult done() {
        return std::move(_result);
      }

     private:
      CheckResult _result;
    };

    template <GroupPolicy G>
    bool commute(G const& g, typename G::value_type const& x, typename G::value_type const& y) {
      return commutator(g, x, y) == g.identity();
    }
  }  // namespace detail

  //! Positive words of length <= max_len over {t, at} are pairwise distinct
  //! in BS(1,2), and t a t^-1 a^-2 is trivial there.
  inline CheckResult bs_free_submonoid(std::size_t max_len = 10) {
    detail::Tally       tally("bs-free-submonoid");
    AffineElement const t  = bs_from_word(2, {{bs::t, 1}});
    AffineElement const at = bs_from_word(2, {{bs::a, 1}, {bs::t, 1}});
    std::set<AffineElement>    seen;
    std::size_t                words = 0;
    std::function<void(AffineElement const&, std::size_t)> walk =
        [&](AffineElement const& e, std::size_t len) {
          ++words;
          seen.insert(e);
          if (len < max_len) {
            walk(e * t, len + 1);
            walk(e * at, len + 1);
          }
        };
    walk(AffineElement(2), 0);
    tally.expect(seen.size() == words,
                 "distinct(" + std::to_string(seen.size()) + "/" + std::to_string(words) + ")");
    auto const rel = bs_from_word(2, {{bs::t, 1}, {bs::a, 1}, {bs::t, -1}, {bs::a, -1}, {bs::a, -1}});
    tally.expect(rel.is_identity(), "t a t^-1 a^-2 trivial");
    return tally.done();
  }

  //! phi: T(P_4) -> M_2^3 separates all traces of length <= max_len.
  inline CheckResult phi_p4_injective(std::size_t max_len = 8) {
    detail::Tally tally("phi-p4-injective");
    auto const    p4     = make_graph_ref(path_graph(4));
    auto const    report = verify_monoid_injective(phi_p4_map(p4), max_len);
    tally.expect(report.ok(), "traces(" + std::to_string(report.checked) + ") collisions("
                                  + std::to_string(report.collisions.size()) + ")");
    return tally.done();
  }

  //! a = x^2 y, b = x^3, c = xy in <x, y | x^3 = y^2>.
  inline CheckResult trefoil_p3(std::size_t injective_len = 6, std::size_t kernel_len = 4) {
    detail::Tally      tally("trefoil-p3");
    TrefoilGroup const g;
    auto const         a = trefoil::a(), b = trefoil::b(), c = trefoil::c();
    tally.expect(detail::commute(g, a, b), "[a,b]=1");
    tally.expect(detail::commute(g, b, c), "[b,c]=1");
    tally.expect(!detail::commute(g, a, c), "[a,c]!=1");
    tally.expect(b == power(g, g.multiply(a, g.invert(c)), 3), "b=(ac^-1)^3");

    auto const p3  = make_graph_ref(path_graph(3));
    auto const map = trefoil_p3_map(p3);
    auto const inj = verify_monoid_injective(map, injective_len);
    tally.expect(inj.ok(), "monoid-injective@" + std::to_string(injective_len) + "("
                               + std::to_string(inj.checked) + " traces)");
    auto const ker = verify_no_kernel(map, kernel_len);
    std::string witness = ker.kernel.empty() ? "none" : format_word(ker.kernel.front(), p3->alphabet());
    tally.expect(!ker.ok(), "group-kernel@" + std::to_string(kernel_len) + "("
                                + std::to_string(ker.kernel.size()) + " elements, first " + witness
                                + ")");
    return tally.done();
  }

  //! a, b, c as above and d = t xy t^-1 in the HNN extension t x^3 t^-1 = xy.
  inline CheckResult hnn_p4(std::size_t injective_len = 5) {
    detail::Tally         tally("hnn-trefoil-p4");
    HNNTrefoilGroup const g;
    auto const            a = hnn::a(), b = hnn::b(), c = hnn::c(), d = hnn::d();
    tally.expect(detail::commute(g, a, b), "[a,b]=1");
    tally.expect(detail::commute(g, b, c), "[b,c]=1");
    tally.expect(detail::commute(g, c, d), "[c,d]=1");
    tally.expect(d == hnn::from_text("t x y t^-1"), "d=txyt^-1");
    tally.expect(g.multiply(g.multiply(hnn::from_text("t"), b), g.invert(hnn::from_text("t"))) == c,
                 "tx^3t^-1=xy");
    auto const p4  = make_graph_ref(path_graph(4));
    auto const inj = verify_monoid_injective(hnn_p4_map(p4), injective_len);
    tally.expect(inj.ok(), "monoid-injective@" + std::to_string(injective_len) + "("
                               + std::to_string(inj.checked) + " traces)");
    return tally.done();
  }

  //! K_{2,2,2} has no induced P_4, and T(P_4) -> BS(1,2)^3 is injective.
  inline CheckResult octahedron_and_bs_cube(std::size_t max_len = 8) {
    detail::Tally tally("octahedron-bs-cube");
    tally.expect(!find_induced_path(complete_multipartite({2, 2, 2}), 4).has_value(),
                 "K222 induced P4 absent");
    tally.expect(find_induced_path(complete_multipartite({2, 2, 2}), 3).has_value(),
                 "K222 induced P3 present");
    auto const p4     = make_graph_ref(path_graph(4));
    auto const report = verify_monoid_injective(bs_cube_map(p4), max_len);
    tally.expect(report.ok(), "bs-cube-injective@" + std::to_string(max_len) + "("
                                  + std::to_string(report.checked) + " traces)");
    return tally.done();
  }

  inline CheckResult classification_table() {
    detail::Tally tally("classification-table");
    auto gbs_case = [&](std::string const& label, GBSGraph const& graph, Verdict v, long long n = 0) {
      auto const c  = classify_cstar(graph);
      bool       ok = c.verdict == v && (v != Verdict::NotCstarSimple_SolvableBS || c.bs_n == n);
      // GBS groups never have P_nai, which in turn would force C*-simplicity
      ok = ok && !p_nai_verdict(graph);
      tally.expect(ok, label + "->" + c.verdict_name());
    };
    gbs_case("BS(1,2)", bs_loop(1, 2), Verdict::NotCstarSimple_SolvableBS, 2);
    gbs_case("BS(2,2)", bs_loop(2, 2), Verdict::NotCstarSimple_Unimodular);
    gbs_case("BS(1,1)", bs_loop(1, 1), Verdict::NotCstarSimple_Unimodular);
    gbs_case("BS(2,3)", bs_loop(2, 3), Verdict::CstarSimple);
    gbs_case("trefoil-edge(3,2)", GBSGraph{2, {{0, 1, 3, 2}}}, Verdict::NotCstarSimple_Unimodular);

    auto rel_case = [&](std::string const& text, Verdict v, Tristate nai, long long n = 0) {
      auto const p  = parse_presentation(text);
      auto const c  = classify(p);
      auto const pn = p_nai(p);
      bool       ok = c.verdict == v && pn == nai
                && (v != Verdict::NotCstarSimple_SolvableBS || c.bs_n == n)
                && !(pn == Tristate::Yes && c.verdict != Verdict::CstarSimple);
      tally.expect(ok, text + "->" + c.verdict_name() + ",P_nai=" + std::string(to_string(pn)));
    };
    rel_case("< a, b, c | a b a^-1 b^-1 >", Verdict::CstarSimple, Tristate::Yes);
    rel_case("< a, b | a b a b >", Verdict::CstarSimple, Tristate::Yes);
    rel_case("< a, t | t a t^-1 a^-2 >", Verdict::NotCstarSimple_SolvableBS, Tristate::No, 2);
    rel_case("< a, t | t a^2 t^-1 a^-2 >", Verdict::NotCstarSimple_Unimodular, Tristate::No);
    rel_case("< a, t | t a^2 t^-1 a^-3 >", Verdict::CstarSimple, Tristate::No);
    return tally.done();
  }

  //! Squares of a, b, ab freely generate; alpha^-1 beta, beta^-1 gamma,
  //! gamma^-1 delta satisfy no relation of length <= max_len in A(P_4).
  inline CheckResult free_power_and_bb(std::size_t max_len = 6) {
    detail::Tally  tally("free-power-bb");
    FreeWord const a{{0, 1}}, b{{1, 1}}, ab{{0, 1}, {1, 1}};
    auto const     r = find_free_power(2, {a, b, ab}, 3);
    tally.expect(r == std::optional<std::size_t>{2},
                 "find_free_power=" + (r ? std::to_string(*r) : std::string("none")));
    auto const rank = subgroup_rank(from_generators(2, {power(a, 2), power(b, 2), power(ab, 2)}));
    tally.expect(rank == 3, "rank<a^2,b^2,(ab)^2>=" + std::to_string(rank));

    auto const     p4    = make_graph_ref(path_graph(4));
    RaagGroup const g{p4};
    std::vector<RaagElement> basis;
    for (auto const& w : bb_basis(4)) {
      basis.emplace_back(p4, w);
    }
    std::size_t checked = 0, trivial = 0;
    // depth-first over freely reduced words in the basis and its inverses
    std::function<void(RaagElement const&, std::size_t, int, std::size_t)> walk =
        [&](RaagElement const& e, std::size_t last_gen, int last_sign, std::size_t len) {
          if (len > 0) {
            ++checked;
            trivial += e.is_trivial() ? 1 : 0;
          }
          if (len == max_len) {
            return;
          }
          for (std::size_t i = 0; i < basis.size(); ++i) {
            for (int s : {1, -1}) {
              if (len > 0 && i == last_gen && s == -last_sign) {
                continue;
              }
              walk(g.multiply(e, s > 0 ? basis[i] : g.invert(basis[i])), i, s, len + 1);
            }
          }
        };
    walk(g.identity(), 0, 0, 0);
    tally.expect(trivial == 0, "bb-words(" + std::to_string(checked) + ") trivial("
                                   + std::to_string(trivial) + ")");
    return tally.done();
  }

  //! The fixed suite. `max_len` bounds the trace injectivity checks; the
  //! trefoil kernel search runs at length 7, the length of b^-1 (ac^-1)^3.
  inline std::vector<CheckResult> run_all(std::size_t max_len = 8) {
    return {bs_free_submonoid(10),
            phi_p4_injective(max_len),
            trefoil_p3(std::min<std::size_t>(max_len, 6), 7),
            hnn_p4(std::min<std::size_t>(max_len, 5)),
            octahedron_and_bs_cube(max_len),
            classification_table(),
            free_power_and_bb(6)};
  }

}  // namespace onerel::regression
