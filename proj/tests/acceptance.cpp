// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "onerel/regression.hpp"
#include "oracle_suites.hpp"

using namespace onerel;

namespace {

  struct Criterion {
    bool        pass;
    std::string detail;
  };

  //! Trace counts on P_4 agree with the swap-closure class counts, with 13
  //! traces of length 2, and phi separates traces of length <= 8.
  Criterion trace_counts_and_phi() {
    auto const               p4 = make_graph_ref(path_graph(4));
    auto const               traces = enumerate_traces(p4, 5);
    std::vector<std::size_t> counted(6, 0), oracle_counts(6, 0);
    for (auto const& t : traces) {
      ++counted[t.length()];
    }
    for (std::size_t len = 0; len <= 5; ++len) {
      auto const            cls = oracle::swap_classes(*p4, len);
      std::set<std::size_t> ids(cls.begin(), cls.end());
      oracle_counts[len] = ids.size();
    }
    auto const phi  = regression::phi_p4_injective(8);
    bool const pass = counted == oracle_counts && counted[2] == 13 && phi.pass;
    return {pass, "len2=" + std::to_string(counted[2]) + " counts-match="
                      + (counted == oracle_counts ? "yes" : "no") + " " + phi.detail};
  }

  Criterion from(regression::CheckResult const& r) {
    return {r.pass, r.detail};
  }

  Criterion normal_form_oracles() {
    auto const t = oracle::trace_sweep(4, 6);
    auto const r = oracle::raag_sweep(4, 6);
    auto const s = oracle::check_intersections(7, 30, 6);
    bool const pass = t.mismatches == 0 && r.mismatches == 0 && s.mismatch == 0;
    auto describe = [](char const* name, oracle::SweepResult const& x) {
      return std::string(name) + "(graphs=" + std::to_string(x.graphs) + " words="
             + std::to_string(x.words) + " mismatches=" + std::to_string(x.mismatches)
             + (x.first_mismatch.empty() ? "" : " first=" + x.first_mismatch) + ")";
    };
    return {pass, describe("trace", t) + " " + describe("raag", r) + " intersect(trials="
                      + std::to_string(s.trials) + " words=" + std::to_string(s.words)
                      + " mismatches=" + std::to_string(s.mismatch) + ")"};
  }

}  // namespace

int main() {
  struct Row {
    char const* title;
    Criterion (*check)();
  };
  Row const rows[] = {
      {"trace counts on P4 and phi injectivity", trace_counts_and_phi},
      {"free submonoid of BS(1,2)", [] { return from(regression::bs_free_submonoid(10)); }},
      {"T(P3) in the trefoil group with group kernel at length 4",
       [] { return from(regression::trefoil_p3(6, 4)); }},
      {"T(P4) in the HNN extension of the trefoil group", [] { return from(regression::hnn_p4(5)); }},
      {"octahedron and BS(1,2)^3", [] { return from(regression::octahedron_and_bs_cube(8)); }},
      {"C*-simplicity classification table", [] { return from(regression::classification_table()); }},
      {"normal forms against exhaustive oracles", normal_form_oracles},
      {"free powers and Bestvina-Brady basis", [] { return from(regression::free_power_and_bb(6)); }},
  };
  int failed = 0;
  int n      = 0;
  for (auto const& row : rows) {
    ++n;
    Criterion c = row.check();
    std::cout << (c.pass ? "PASS" : "FAIL") << " criterion " << n << ": " << row.title << " ["
              << c.detail << "]" << std::endl;
    failed += c.pass ? 0 : 1;
  }
  std::cout << (n - failed) << "/" << n << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
