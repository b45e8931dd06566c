#include <random>

#include "onerel/embeddings.hpp"
#include "onerel/stallings.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace onerel;

namespace {
  GraphRef const p3 = make_graph_ref(path_graph(3));
  GraphRef const p4 = make_graph_ref(path_graph(4));

  PositiveWord xy(std::string_view text) {
    return parse_positive_word(text, free_monoid_alphabet());
  }

  Trace tr(std::string_view text) {
    return normalize_trace(p4, parse_positive_word(text, p4->alphabet()));
  }

  SimpGraph two_edges() {
    auto g = edgeless_graph(4);
    g.add_edge(0, 1);
    g.add_edge(2, 3);
    return g;
  }
}  // namespace

TEST_CASE("phi_p4") {
  REQUIRE(phi_p4(tr("v1")) == WordTriple{xy("x"), xy("y"), xy("")});
  REQUIRE(phi_p4(tr("v1 v2")) == WordTriple{xy("x x"), xy("y"), xy("x")});
  REQUIRE(phi_p4(tr("")) == WordTriple{});
  REQUIRE(phi_p4(tr("v2 v1")) == phi_p4(tr("v1 v2")));
  REQUIRE_ERROR(phi_p4(normalize_trace(p3, {0})), ErrorCode::WrongGraph);
  auto relabelled = edgeless_graph(4);
  relabelled.add_edge(0, 1);
  relabelled.add_edge(1, 3);
  relabelled.add_edge(2, 3);
  REQUIRE_ERROR(phi_p4_map(make_graph_ref(relabelled)), ErrorCode::WrongGraph);
}

TEST_CASE("phi_p4 is constant on swap classes") {
  auto const map = phi_p4_map(p4);
  for (std::size_t len = 0; len <= 5; ++len) {
    auto const words   = oracle::all_positive_words(4, len);
    auto const classes = oracle::swap_classes(*p4, len);
    std::map<std::size_t, WordTriple> image;
    for (std::size_t i = 0; i < words.size(); ++i) {
      auto [it, fresh] = image.try_emplace(classes[i], map(words[i]));
      REQUIRE(it->second == map(words[i]));
    }
  }
}

TEST_CASE("paris") {
  REQUIRE(paris(p4, {1, 0}) == paris(p4, {0, 1}));
  REQUIRE(paris(p4, {}).is_trivial());
  REQUIRE_FALSE(paris(p4, {3, 0}) == paris(p4, {0, 3}));
  REQUIRE(is_positive(paris(p4, {3, 2, 1, 0})));
  REQUIRE_ERROR(paris(p4, {4}), ErrorCode::InvalidLetter);
}

TEST_CASE("star_embed") {
  Alphabet const star({"center", "leaf1", "leaf2"});
  auto w = [&](std::string_view t) { return parse_word(t, star); };
  REQUIRE(star_embed(2, w("center leaf1")) == star_embed(2, w("leaf1 center")));
  REQUIRE_FALSE(star_embed(2, w("leaf1 leaf2 leaf1^-1 leaf2^-1")).is_trivial());
  REQUIRE(star_embed(2, w("")).is_trivial());
  REQUIRE(star_embed(2, w("leaf1")).nf() == parse_word("v1 v3 v1^-1", p3->alphabet()));
  REQUIRE_ERROR(star_embed(2, FreeWord{{3, 1}}), ErrorCode::InvalidLetter);
  REQUIRE_ERROR(star_embed(0, {}), ErrorCode::InvalidArgument);
}

TEST_CASE("star_embed leaf images form a free basis") {
  for (std::size_t k = 1; k <= 5; ++k) {
    // over F(alpha, gamma): alpha^i gamma alpha^-i
    std::vector<FreeWord> basis;
    for (std::size_t i = 1; i <= k; ++i) {
      auto const ii = static_cast<long long>(i);
      basis.push_back(concat(concat(power({{0, 1}}, ii), {{1, 1}}), power({{0, 1}}, -ii)));
    }
    REQUIRE(subgroup_rank(from_generators(2, basis)) == k);
  }
}

TEST_CASE("forest_embed") {
  auto const g   = two_edges();
  auto const img = forest_embed(g, {{2, 1}});
  REQUIRE(img.syllables.size() == 3);
  REQUIRE(img.syllables[0].f == 1);
  REQUIRE(img.syllables[1].a == FreeWord{{0, 1}});
  REQUIRE(img.syllables[2].f == -1);
  REQUIRE(format_free_product(img, path_graph(2).alphabet()) == "f^1 * [v1] * f^-1");

  auto const single = forest_embed(path_graph(2), {{0, 1}, {1, 1}});
  REQUIRE(single.syllables.size() == 1);
  REQUIRE_FALSE(single.syllables[0].is_f());

  auto const comm = forest_embed(g, {{0, 1}, {2, 1}, {0, -1}, {2, -1}});
  REQUIRE_FALSE(comm.is_identity());
  REQUIRE(forest_embed(g, {{0, 1}, {1, 1}, {0, -1}, {1, -1}}).is_identity());
  REQUIRE(forest_embed(g, {}).is_identity());

  auto star3 = edgeless_graph(5);
  star3.add_edge(1, 0);
  star3.add_edge(1, 2);
  star3.add_edge(1, 3);
  auto const c = forest_embed(star3, {{1, 1}});
  REQUIRE(c.syllables.size() == 1);
  REQUIRE(c.syllables[0].a == FreeWord{{1, 1}});
  REQUIRE(forest_embed(star3, {{4, 1}}).syllables.size() == 3);

  auto triangle = edgeless_graph(3);
  triangle.add_edge(0, 1);
  triangle.add_edge(1, 2);
  triangle.add_edge(0, 2);
  REQUIRE_ERROR(forest_embed(triangle, {}), ErrorCode::NotForest);
  REQUIRE_ERROR(forest_embed(path_graph(4), {}), ErrorCode::DiameterOutOfRange);
  REQUIRE_ERROR(forest_embed(edgeless_graph(3), {}), ErrorCode::DiameterOutOfRange);
  REQUIRE_ERROR(forest_embed(g, {{4, 1}}), ErrorCode::InvalidLetter);
}

TEST_CASE("forest_embed is a homomorphism") {
  std::vector<SimpGraph> forests;
  forests.push_back(two_edges());
  auto h = edgeless_graph(7);
  h.add_edge(0, 1);
  h.add_edge(0, 2);
  h.add_edge(3, 4);
  h.add_edge(5, 4);
  forests.push_back(h);  // a star on 0,1,2, the path 3-4-5 and an isolated vertex 6
  std::mt19937 rng(31);
  for (auto const& g : forests) {
    auto const emb = forest_embedding(g);
    for (int trial = 0; trial < 300; ++trial) {
      auto const u = oracle::random_word(rng, g.size(), 5);
      auto const v = oracle::random_word(rng, g.size(), 5);
      REQUIRE(forest_embed(g, concat(u, v))
              == emb.target.multiply(forest_embed(g, u), forest_embed(g, v)));
      // commuting generators map to commuting elements
      for (auto [a, b] : g.edges()) {
        auto const x = emb.images[a], y = emb.images[b];
        REQUIRE(emb.target.multiply(x, y) == emb.target.multiply(y, x));
      }
    }
  }
}

TEST_CASE("free product normal form alternates") {
  FreeProductGroup const fp{p3};
  auto const             a = fp.embed(RaagElement(p3, {{0, 1}}));
  auto const             f = fp.f_power(1);
  auto const             x = fp.multiply(fp.multiply(f, a), fp.invert(f));
  REQUIRE(x.syllables.size() == 3);
  REQUIRE(fp.multiply(x, fp.invert(x)).is_identity());
  auto const y = fp.multiply(fp.multiply(x, x), a);
  for (std::size_t i = 1; i < y.syllables.size(); ++i) {
    REQUIRE(y.syllables[i].is_f() != y.syllables[i - 1].is_f());
  }
}

TEST_CASE("verify_monoid_injective") {
  auto const phi = verify_monoid_injective(phi_p4_map(p4), 6);
  REQUIRE(phi.ok());
  REQUIRE(phi.checked == enumerate_traces(p4, 6).size());
  REQUIRE(phi.to_text(p4->alphabet()).rfind("checked=", 0) == 0);

  REQUIRE(verify_monoid_injective(trefoil_p3_map(p3), 6).ok());

  auto const p2     = make_graph_ref(path_graph(2));
  auto const broken = MonoidMap<FreeMonoidCube>(
      p2, {}, {WordTriple{xy("x"), xy(""), xy("")}, WordTriple{xy("x"), xy(""), xy("")}});
  auto const r = verify_monoid_injective(broken, 2);
  REQUIRE(r.collisions.size() >= 1);
  REQUIRE(r.collisions[0] == std::pair{PositiveWord{0}, PositiveWord{1}});
  REQUIRE(r.to_text(p2->alphabet()).find("collision: v1 = v2") != std::string::npos);
}

TEST_CASE("MonoidMap checks commutation") {
  HNNTrefoilGroup const g;
  REQUIRE_ERROR(MonoidMap<HNNTrefoilGroup>(p4, g, {hnn::a(), hnn::b(), hnn::c(), hnn::a()}),
                ErrorCode::NonCommutingImages);
  REQUIRE_ERROR(MonoidMap<HNNTrefoilGroup>(p4, g, {hnn::a()}), ErrorCode::InvalidArgument);
}

TEST_CASE("verify_no_kernel") {
  // the shortest kernel elements of A(P_3) -> trefoil have length 7
  auto const p3_short = verify_no_kernel(trefoil_p3_map(p3), 6);
  REQUIRE(p3_short.ok());
  auto const p3_long = verify_no_kernel(trefoil_p3_map(p3), 7);
  REQUIRE_FALSE(p3_long.ok());
  auto const witness = normalize_raag(p3, parse_word("v2^-1 v1 v3^-1 v1 v3^-1 v1 v3^-1", p3->alphabet()));
  REQUIRE(std::find(p3_long.kernel.begin(), p3_long.kernel.end(), witness.nf()) != p3_long.kernel.end());
  REQUIRE(p3_long.to_text(p3->alphabet()).find("bounded certificate") != std::string::npos);

  auto const hnn = verify_no_kernel(hnn_p4_map(p4), 7);
  REQUIRE_FALSE(hnn.ok());

  RaagGroup const          a4{p4};
  std::vector<RaagElement> id;
  for (gen_type i = 0; i < 4; ++i) {
    id.emplace_back(p4, FreeWord{{i, 1}});
  }
  auto const identity = verify_no_kernel(MonoidMap<RaagGroup>(p4, a4, id), 4);
  REQUIRE(identity.ok());
  REQUIRE(identity.checked + 1 == enumerate_raag(p4, 4).size());
}

TEST_CASE("prop14_elements") {
  HNNTrefoilGroup const g;
  auto const e = prop14_elements(g, hnn::a(), hnn::b(), hnn::c(), hnn::d(), 1, 1, 1, 1);
  REQUIRE(e[0] == hnn::from_text("x^2 y x y y^-1 x^-2"));
  REQUIRE(e[1] == hnn::b());
  REQUIRE(e[2] == hnn::c());
  REQUIRE(e[3] == hnn::from_text("t y^-1 x^-1 t^-1 x^3 t x y t^-1"));
  for (long long k : {-2, 1, 3}) {
    auto const f = prop14_elements(g, hnn::a(), hnn::b(), hnn::c(), hnn::d(), k, 2, 1, -1);
    REQUIRE(commutator(g, f[0], f[1]).is_identity());
  }
  REQUIRE_ERROR(prop14_elements(g, hnn::a(), hnn::b(), hnn::c(), hnn::d(), 0, 1, 1, 1),
                ErrorCode::ZeroExponent);

  // [b, c] != 1 in the free group on b, c: the map is rejected
  TrefoilGroup const tg;
  auto const         x = trefoil_from_word({{0, 1}});
  auto const         y = trefoil_from_word({{1, 1}});
  auto const         broken = prop14_elements(tg, x, x, y, x, 1, 1, 1, 1);
  REQUIRE_ERROR(MonoidMap<TrefoilGroup>(p4, tg, {broken.begin(), broken.end()}),
                ErrorCode::NonCommutingImages);
}
