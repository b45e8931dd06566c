#include <random>
#include <set>

#include "onerel/concrete_groups.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace onerel;

namespace {
  FreeWord bsw(std::string_view text) {
    return parse_word(text, bs::alphabet());
  }
  FreeWord trw(std::string_view text) {
    return parse_word(text, trefoil::alphabet());
  }
  FreeWord hw(std::string_view text) {
    return parse_word(text, hnn::alphabet());
  }

  //! Inserts `piece` into `w` at position `pos`.
  FreeWord insert_at(FreeWord w, std::size_t pos, FreeWord const& piece) {
    w.insert(w.begin() + static_cast<std::ptrdiff_t>(pos), piece.begin(), piece.end());
    return w;
  }

  std::vector<FreeWord> hnn_relators() {
    return {hw("x^3 y^-2"), hw("t x^3 t^-1 y^-1 x^-1"), hw("y^2 x^-3"), hw("x y t x^-3 t^-1")};
  }
}  // namespace

// --- BS(1,n) -------------------------------------------------------------

TEST_CASE("bs_from_word") {
  REQUIRE(bs_from_word(2, bsw("t a t^-1 a^-2")).is_identity());
  auto const t = bs_from_word(2, bsw("t"));
  REQUIRE(t.k() == 1);
  REQUIRE(t.b() == 0);
  auto const at = bs_from_word(2, bsw("a t"));
  REQUIRE(at.k() == 1);
  REQUIRE(at.b() == 1);
  REQUIRE(bs_from_word(3, bsw("t a t^-1 a^-3")).is_identity());
  REQUIRE(bs_from_word(-2, bsw("t a t^-1 a^2")).is_identity());
  REQUIRE_FALSE(bs_from_word(2, bsw("t a t^-1 a^-1")).is_identity());
  auto const half = bs_from_word(2, bsw("t^-1 a t"));
  REQUIRE(half.b() == Rational(1, 2));
  REQUIRE(half.to_string() == "k=0 b=1/2");
  REQUIRE_ERROR(bs_from_word(2, FreeWord{{2, 1}}), ErrorCode::InvalidLetter);
  REQUIRE_ERROR(AffineElement(1), ErrorCode::InvalidArgument);
  REQUIRE_ERROR(AffineElement(0), ErrorCode::InvalidArgument);
}

TEST_CASE("bs_equal") {
  REQUIRE(bs_equal(AffineElement(2, 0, 0), AffineElement(2)));
  auto const t  = bs_from_word(2, bsw("t"));
  auto const at = bs_from_word(2, bsw("a t"));
  REQUIRE_FALSE(bs_equal(t * at, at * t));
  REQUIRE((t * at).b() == 2);
  REQUIRE((at * t).b() == 1);
  auto const e = bs_from_word(2, bsw("a^3 t^-2 a t"));
  REQUIRE(bs_equal(e, e.inverse() * e * e));
  REQUIRE_ERROR(bs_equal(AffineElement(2), AffineElement(3)), ErrorCode::ModulusMismatch);
}

TEST_CASE("positive words over t and at are distinct in BS(1,2)") {
  std::set<AffineElement> seen;
  std::size_t             words = 0;
  for (std::size_t len = 0; len <= 10; ++len) {
    for (auto const& code : oracle::all_positive_words(2, len)) {
      AffineElement e(2);
      for (auto c : code) {
        e = e * bs_from_word(2, c == 0 ? bsw("t") : bsw("a t"));
      }
      seen.insert(e);
      ++words;
    }
  }
  REQUIRE(words == 2047);
  REQUIRE(seen.size() == 2047);
}

TEST_CASE("BS(1,n) is a homomorphic image of the free group and respects the relator") {
  std::mt19937 rng(3);
  for (int n : {2, 3, -2, 5}) {
    auto const rel = concat(concat(bsw("t a t^-1"), power(bsw("a"), -n)), {});
    for (int trial = 0; trial < 200; ++trial) {
      auto const u = oracle::random_word(rng, 2, 8);
      auto const v = oracle::random_word(rng, 2, 8);
      REQUIRE(bs_from_word(n, concat(u, v)) == bs_from_word(n, u) * bs_from_word(n, v));
      REQUIRE(bs_from_word(n, insert_at(u, rng() % (u.size() + 1), rel)) == bs_from_word(n, u));
      REQUIRE((bs_from_word(n, u) * bs_from_word(n, u).inverse()).is_identity());
    }
  }
}

// --- trefoil group ---------------------------------------------------------

TEST_CASE("trefoil normal forms") {
  REQUIRE(trefoil_from_word(trw("x^3 y^-2")).is_identity());
  auto const a = trefoil::a(), b = trefoil::b(), c = trefoil::c();
  REQUIRE(trefoil_multiply(trefoil_multiply(a, b), trefoil_multiply(a.inverse(), b.inverse()))
              .is_identity());
  auto const x = trefoil_from_word(trw("x"));
  REQUIRE(x.central() == 0);
  REQUIRE(x.syllables() == std::vector<Syllable>{Syllable::X});
  REQUIRE(trefoil_from_word(trw("x^-1")).to_string() == "z^-1 x^2");
  REQUIRE(trefoil_from_word(trw("y^-1 x y^3")).to_string() == "z^0 y x y");
  REQUIRE(trefoil_from_word(trw("y x^4 y")).to_string() == "z^1 y x y");
  REQUIRE_ERROR(trefoil_from_word(FreeWord{{2, 1}}), ErrorCode::InvalidLetter);

  REQUIRE(trefoil_equal(b, trefoil_power(trefoil_multiply(a, trefoil_invert(c)), 3)));
  REQUIRE(trefoil_equal(a * b, b * a));
  REQUIRE_FALSE(trefoil_equal(a * c, c * a));
}

TEST_CASE("trefoil power membership") {
  REQUIRE(trefoil_power_of_b(trefoil_from_word(trw("x^6"))) == std::optional<long long>{2});
  REQUIRE(trefoil_power_of_c(trefoil_from_word(trw("x y x y"))) == std::optional<long long>{2});
  REQUIRE_FALSE(trefoil_power_of_b(trefoil_from_word(trw("x"))).has_value());
  REQUIRE_FALSE(trefoil_power_of_c(trefoil_from_word(trw("x"))).has_value());
  REQUIRE(trefoil_power_of_c(trefoil_from_word(trw(""))) == std::optional<long long>{0});
  for (long long k = -5; k <= 5; ++k) {
    REQUIRE(trefoil_power_of_c(trefoil_power(trefoil::c(), k)) == std::optional<long long>{k});
    REQUIRE(trefoil_power_of_b(trefoil_power(trefoil::b(), k)) == std::optional<long long>{k});
    if (k != 0) {
      REQUIRE_FALSE(trefoil_power_of_c(trefoil_power(trefoil::b(), k)).has_value());
    }
  }
}

TEST_CASE("trefoil normal forms agree with the SL(2,Z) x Z image") {
  std::mt19937 rng(5);
  auto const   words = [] {
    std::vector<FreeWord> out;
    for (std::size_t len = 0; len <= 6; ++len) {
      for (auto const& w : oracle::all_free_words(2, len)) {
        out.push_back(w);
      }
    }
    return out;
  }();
  // distinct oracle images <=> distinct normal forms, over all words of length <= 6
  std::map<TrefoilElement, oracle::TrefoilImage> image_of;
  for (auto const& w : words) {
    auto const e   = trefoil_from_word(w);
    auto const img = oracle::trefoil_image(w);
    REQUIRE(e.is_alternating());
    auto [it, fresh] = image_of.try_emplace(e, img);
    REQUIRE(it->second == img);
  }
  std::set<std::pair<std::array<long long, 4>, long long>> images;
  for (auto const& [e, img] : image_of) {
    images.insert({img.mat.m, img.degree});
  }
  REQUIRE(images.size() == image_of.size());

  for (int trial = 0; trial < 500; ++trial) {
    auto const u = oracle::random_word(rng, 2, 10);
    auto const v = oracle::random_word(rng, 2, 10);
    REQUIRE(trefoil_from_word(concat(u, v)) == trefoil_from_word(u) * trefoil_from_word(v));
    REQUIRE(trefoil_from_word(inverse(u)) == trefoil_from_word(u).inverse());
    REQUIRE(trefoil_from_word(insert_at(u, rng() % (u.size() + 1), trw("x^3 y^-2")))
            == trefoil_from_word(u));
    REQUIRE((trefoil_from_word(u) == trefoil_from_word(v))
            == (oracle::trefoil_image(u) == oracle::trefoil_image(v)));
  }
}

// --- HNN extension ---------------------------------------------------------

TEST_CASE("hnn normal forms") {
  REQUIRE(hnn_from_word(hw("t x^3 t^-1 y^-1 x^-1")).is_identity());
  auto const c = hnn::c(), d = hnn::d(), a = hnn::a();
  REQUIRE((c * d * c.inverse() * d.inverse()).is_identity());
  auto const txt = hnn::from_text("t x t^-1");
  REQUIRE(txt.stable_length() == 2);
  REQUIRE(txt.base().size() == 3);
  REQUIRE(hnn_equal(d * c, c * d));
  REQUIRE_FALSE(hnn_equal(a * d, d * a));
  auto const g = hnn::from_text("x t y t^-1 x^2 t^-1 y");
  REQUIRE(hnn_multiply(g, hnn_invert(g)).is_identity());
  REQUIRE(hnn::from_text("t^-1 x y t").stable_length() == 0);
  REQUIRE(hnn::from_text("t^-1 x y t") == hnn::b());
  REQUIRE(hnn::from_text("t x^6 t^-1") == c * c);
  REQUIRE_ERROR(hnn_from_word(FreeWord{{3, 1}}), ErrorCode::InvalidLetter);
}

TEST_CASE("hnn canonical forms are invariant under relator insertion and bracketing") {
  std::mt19937 rng(17);
  auto const   rels = hnn_relators();
  for (int trial = 0; trial < 1500; ++trial) {
    auto const u = oracle::random_word(rng, 3, 12);
    auto const e = hnn_from_word(u);
    // relators and their conjugates by short words
    auto const conj = oracle::random_word(rng, 3, 3);
    auto const rel  = rels[rng() % rels.size()];
    auto const ins  = concat(concat(conj, rng() % 2 ? rel : inverse(rel)), inverse(conj));
    REQUIRE(hnn_from_word(insert_at(u, rng() % (u.size() + 1), ins)) == e);
    // arbitrary split point: left-to-right vs multiplied halves
    std::size_t const cut = rng() % (u.size() + 1);
    FreeWord const    lhs(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(cut));
    FreeWord const    rhs(u.begin() + static_cast<std::ptrdiff_t>(cut), u.end());
    REQUIRE(hnn_from_word(lhs) * hnn_from_word(rhs) == e);
    REQUIRE(hnn_from_word(inverse(u)) == e.inverse());
    REQUIRE((e * e.inverse()).is_identity());
    // associativity on three random factors
    auto const v = hnn_from_word(oracle::random_word(rng, 3, 6));
    auto const w = hnn_from_word(oracle::random_word(rng, 3, 6));
    REQUIRE((e * v) * w == e * (v * w));
  }
}

TEST_CASE("hnn canonical forms are stable under re-parsing") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    auto const e = hnn_from_word(oracle::random_word(rng, 3, 12));
    // rebuild from the printed canonical pieces
    HNNTrefoilElement rebuilt;
    for (std::size_t i = 0; i < e.base().size(); ++i) {
      FreeWord piece = power(hw("x^3"), e.base()[i].central());
      for (auto s : e.base()[i].syllables()) {
        piece = concat(piece, s == Syllable::X ? hw("x") : s == Syllable::X2 ? hw("x^2") : hw("y"));
      }
      if (i < e.stable().size()) {
        piece.push_back({hnn::t, e.stable()[i]});
      }
      rebuilt = rebuilt * hnn_from_word(piece);
    }
    REQUIRE(rebuilt == e);
  }
}

TEST_CASE("psi and principal elements") {
  Alphabet const ft({"f", "t"});
  REQUIRE(psi(parse_word("t^-2 f t^5", ft), 1) == 3);
  REQUIRE(psi(parse_word("f f^-1 f^3", ft), 1) == 0);
  REQUIRE(is_principal(2, {4, 6}));
  REQUIRE_FALSE(is_principal(2, {4, 8}));
  REQUIRE_FALSE(is_principal(0, {0}));
}
