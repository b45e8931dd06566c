#include <random>

#include "onerel/gbs.hpp"
#include "test_support.hpp"

using namespace onerel;

namespace {
  GBSGraph const trefoil_graph{2, {{0, 1, 3, 2}}};

  //! Hermite normal form of the exponent lattice of |r| over small primes;
  //! two finite sets of rationals generate the same subgroup of Q_{>0} iff
  //! their forms agree.
  std::vector<std::vector<long long>> lattice(ModularImage const& img) {
    static constexpr std::array<long long, 6> primes{2, 3, 5, 7, 11, 13};
    std::vector<std::vector<long long>>       rows;
    for (auto const& r : img.generators) {
      std::vector<long long> row(primes.size(), 0);
      for (int side = 0; side < 2; ++side) {
        BigInt v = abs(side == 0 ? numerator(r) : denominator(r));
        for (std::size_t p = 0; p < primes.size(); ++p) {
          while (v % primes[p] == 0) {
            v /= primes[p];
            row[p] += side == 0 ? 1 : -1;
          }
        }
        REQUIRE(v == 1);
      }
      rows.push_back(row);
    }
    // integer row reduction
    std::vector<std::vector<long long>> out;
    for (std::size_t col = 0; col < primes.size(); ++col) {
      while (true) {
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i][col] != 0
              && (pivot == rows.size() || std::llabs(rows[i][col]) < std::llabs(rows[pivot][col]))) {
            pivot = i;
          }
        }
        if (pivot == rows.size()) {
          break;
        }
        bool done = true;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (i == pivot || rows[i][col] == 0) {
            continue;
          }
          long long q = rows[i][col] / rows[pivot][col];
          for (std::size_t j = 0; j < primes.size(); ++j) {
            rows[i][j] -= q * rows[pivot][j];
          }
          done = done && rows[i][col] == 0;
        }
        if (done) {
          auto row = rows[pivot];
          rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
          if (row[col] < 0) {
            for (auto& x : row) {
              x = -x;
            }
          }
          out.push_back(row);
          break;
        }
      }
    }
    // reduce entries above each pivot
    for (std::size_t i = 0; i < out.size(); ++i) {
      std::size_t col = 0;
      while (out[i][col] == 0) {
        ++col;
      }
      for (std::size_t k = 0; k < i; ++k) {
        long long q = out[k][col] / out[i][col];
        if (out[k][col] - q * out[i][col] < 0) {
          --q;
        }
        for (std::size_t j = 0; j < out[k].size(); ++j) {
          out[k][j] -= q * out[i][j];
        }
      }
    }
    return out;
  }

  GBSGraph random_gbs(std::mt19937& rng) {
    static constexpr std::array<long long, 10> labels{1, -1, 2, -2, 3, -3, 4, 6, 1, 2};
    std::uniform_int_distribution<std::size_t> lab(0, labels.size() - 1);
    std::size_t const                          n = 1 + rng() % 4;
    GBSGraph                                   g{n, {}};
    for (std::size_t v = 1; v < n; ++v) {
      g.edges.push_back({rng() % v, v, labels[lab(rng)], labels[lab(rng)]});
    }
    for (std::size_t extra = rng() % 3; extra > 0; --extra) {
      g.edges.push_back({rng() % n, rng() % n, labels[lab(rng)], labels[lab(rng)]});
    }
    std::shuffle(g.edges.begin(), g.edges.end(), rng);
    return g;
  }
}  // namespace

TEST_CASE("parse_gbs") {
  auto g = parse_gbs("gbs-vertices: 2\ngbs-edge: 0 1 3 2\n");
  REQUIRE(g == trefoil_graph);
  REQUIRE(parse_gbs(format_gbs(g)) == g);
  REQUIRE(parse_gbs("gbs-vertices: 1\n\ngbs-edge: 0 0 1 -2") == bs_loop(1, -2));
  REQUIRE_ERROR(parse_gbs("gbs-edge: 0 1 1 1"), ErrorCode::Malformed);
  REQUIRE_ERROR(parse_gbs("gbs-vertices: 1\ngbs-edge: 0 1 1 1"), ErrorCode::UnknownEndpoint);
  REQUIRE_ERROR(parse_gbs("gbs-vertices: 1\ngbs-edge: 0 0 0 1"), ErrorCode::Malformed);
  REQUIRE_ERROR(parse_gbs("gbs-vertices: 1\ngbs-edge: 0 0 1"), ErrorCode::Malformed);
  REQUIRE_ERROR(parse_gbs("gbs-vertices: 1 2"), ErrorCode::Malformed);
  REQUIRE_ERROR(parse_gbs(""), ErrorCode::Malformed);
}

TEST_CASE("reduce_gbs") {
  auto r = reduce_gbs({2, {{0, 1, 1, 1}}});
  REQUIRE(r.vertices == 1);
  REQUIRE(r.edges.empty());
  REQUIRE(reduce_gbs(trefoil_graph) == trefoil_graph);
  REQUIRE(reduce_gbs(bs_loop(1, 2)) == bs_loop(1, 2));
  // a loop (2,3) at vertex 1 hanging off an index-1 edge: the loop moves
  // to vertex 0 with its index at that end multiplied by 1 * 5
  r = reduce_gbs({2, {{0, 1, 5, 1}, {1, 1, 2, 3}}});
  REQUIRE(r == GBSGraph{1, {{0, 0, 10, 15}}});
  REQUIRE_ERROR(reduce_gbs({2, {}}), ErrorCode::Disconnected);
}

TEST_CASE("modular_image") {
  auto img = modular_image(bs_loop(1, 5));
  REQUIRE(img.generators == std::vector<Rational>{Rational(5)});
  REQUIRE(modular_image(trefoil_graph).generators.empty());
  img = modular_image(bs_loop(2, 2));
  REQUIRE(img.generators == std::vector<Rational>{Rational(1)});
  // a two-vertex cycle: 0 -(2,3)-> 1 -(1,2)-> 0 gives 3/2 * 2/1 = 3
  img = modular_image({2, {{0, 1, 2, 3}, {1, 0, 1, 2}}});
  REQUIRE(img.generators == std::vector<Rational>{Rational(3)});
  REQUIRE_ERROR(modular_image({3, {{0, 1, 1, 1}}}), ErrorCode::Disconnected);
}

TEST_CASE("is_unimodular and detect_solvable_bs") {
  REQUIRE(is_unimodular(bs_loop(2, 2)));
  REQUIRE_FALSE(is_unimodular(bs_loop(1, 2)));
  REQUIRE(is_unimodular(trefoil_graph));
  REQUIRE(is_unimodular(bs_loop(2, -2)));
  REQUIRE(detect_solvable_bs(bs_loop(1, 2)) == std::optional<long long>{2});
  REQUIRE(detect_solvable_bs(bs_loop(-3, 1)) == std::optional<long long>{-3});
  REQUIRE_FALSE(detect_solvable_bs(bs_loop(2, 3)).has_value());
  REQUIRE_FALSE(detect_solvable_bs(trefoil_graph).has_value());
  REQUIRE_FALSE(detect_solvable_bs(bs_loop(1, 1)).has_value());
  REQUIRE_FALSE(detect_solvable_bs(bs_loop(1, -1)).has_value());
  // BS(1,2) disguised by an index-1 edge
  REQUIRE(detect_solvable_bs({2, {{0, 1, 1, 1}, {1, 1, 1, 2}}}) == std::optional<long long>{2});
}

TEST_CASE("classify_cstar") {
  auto c = classify_cstar(bs_loop(1, 2));
  REQUIRE(c.verdict == Verdict::NotCstarSimple_SolvableBS);
  REQUIRE(c.verdict_name() == "NotCstarSimple_SolvableBS(2)");
  REQUIRE(c.to_line().rfind("verdict=NotCstarSimple_SolvableBS(2) reason=", 0) == 0);
  REQUIRE(classify_cstar(bs_loop(2, 3)).verdict == Verdict::CstarSimple);
  REQUIRE(classify_cstar(trefoil_graph).verdict == Verdict::NotCstarSimple_Unimodular);
  REQUIRE(classify_cstar(bs_loop(2, 2)).verdict == Verdict::NotCstarSimple_Unimodular);
  c = classify_cstar(bs_loop(1, 1));
  REQUIRE(c.verdict == Verdict::NotCstarSimple_Unimodular);
  REQUIRE(c.reason.find("BS(1,1)") != std::string::npos);
  REQUIRE(classify_cstar(bs_loop(1, -1)).verdict == Verdict::NotCstarSimple_Unimodular);
  REQUIRE(classify_cstar({2, {{0, 1, 1, 4}}}).verdict == Verdict::Cyclic);
  REQUIRE(classify_cstar({1, {}}).verdict == Verdict::Cyclic);
  REQUIRE_ERROR(classify_cstar({0, {}}), ErrorCode::EmptyGraph);
  REQUIRE_ERROR(classify_cstar({2, {}}), ErrorCode::Disconnected);
}

TEST_CASE("p_nai_verdict") {
  REQUIRE_FALSE(p_nai_verdict(bs_loop(1, 2)));
  REQUIRE_FALSE(p_nai_verdict(bs_loop(2, 3)));
  REQUIRE_FALSE(p_nai_verdict(trefoil_graph));
  REQUIRE_ERROR(p_nai_verdict({0, {}}), ErrorCode::EmptyGraph);
}

TEST_CASE("random GBS graphs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    auto const g = random_gbs(rng);
    auto const r = reduce_gbs(g);
    INFO(format_gbs(g));
    REQUIRE(lattice(modular_image(g)) == lattice(modular_image(r)));
    for (auto const& e : r.edges) {
      REQUIRE((e.is_loop() || (std::llabs(e.alpha) != 1 && std::llabs(e.omega) != 1)));
    }
    auto const c = classify_cstar(g);
    REQUIRE(c.verdict != Verdict::Unknown);
    REQUIRE(c.verdict == classify_cstar(r).verdict);
    REQUIRE(c.bs_n == classify_cstar(r).bs_n);
    if (auto n = detect_solvable_bs(g)) {
      REQUIRE(std::llabs(*n) >= 2);
      REQUIRE_FALSE(is_unimodular(r));
    }
    REQUIRE_FALSE(p_nai_verdict(g));
  }
}
