#pragma once

// Exact arithmetic in three concrete groups:
//   BS(1,n) = <a, t | t a t^-1 = a^n>       as affine maps x -> n^k x + b,
//   the trefoil group <x, y | x^3 = y^2>    by amalgam normal forms,
//   <x, y, t | x^3 = y^2, t x^3 t^-1 = xy>  by Britton reduction over the trefoil group.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "words.hpp"

namespace onerel {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  //! num/den in lowest terms; boost rejects a negative denominator.
  inline Rational ratio(BigInt num, BigInt den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    return Rational(num, den);
  }

  // ---------------------------------------------------------------------------
  // BS(1, n)
  // ---------------------------------------------------------------------------

  namespace bs {
    inline constexpr gen_type a = 0;
    inline constexpr gen_type t = 1;

    inline Alphabet alphabet() {
      return Alphabet({"a", "t"});
    }
  }  // namespace bs

  //! The affine map x -> n^k x + b; composition is the group law.
  class AffineElement {
   public:
    AffineElement() = default;

    explicit AffineElement(int modulus, long long k = 0, Rational b = 0)
        : _n(modulus), _k(k), _b(std::move(b)) {
      if (_n == 0 || _n == 1 || _n == -1) {
        fail(ErrorCode::InvalidArgument, "BS(1,n) requires |n| >= 2");
      }
    }

    [[nodiscard]] int modulus() const noexcept {
      return _n;
    }

    [[nodiscard]] long long k() const noexcept {
      return _k;
    }

    [[nodiscard]] Rational const& b() const noexcept {
      return _b;
    }

    [[nodiscard]] bool is_identity() const {
      return _k == 0 && _b == 0;
    }

    //! n^e as an exact rational, for any integer e.
    static Rational scale(int n, long long e) {
      BigInt p = boost::multiprecision::pow(BigInt(n < 0 ? -n : n),
                                            static_cast<unsigned>(e < 0 ? -e : e));
      if (n < 0 && (e % 2 != 0)) {
        p = -p;
      }
      return e >= 0 ? Rational(p) : ratio(BigInt(1), p);
    }

    friend AffineElement operator*(AffineElement const& f, AffineElement const& g) {
      check_modulus(f, g);
      return AffineElement(f._n, f._k + g._k, scale(f._n, f._k) * g._b + f._b);
    }

    [[nodiscard]] AffineElement inverse() const {
      return AffineElement(_n, -_k, -scale(_n, -_k) * _b);
    }

    friend bool operator==(AffineElement const& f, AffineElement const& g) {
      check_modulus(f, g);
      return f._k == g._k && f._b == g._b;
    }

    friend std::strong_ordering operator<=>(AffineElement const& f, AffineElement const& g) {
      check_modulus(f, g);
      if (auto c = f._k <=> g._k; c != 0) {
        return c;
      }
      if (f._b < g._b) {
        return std::strong_ordering::less;
      }
      return f._b == g._b ? std::strong_ordering::equal : std::strong_ordering::greater;
    }

    [[nodiscard]] std::string to_string() const {
      return "k=" + std::to_string(_k) + " b=" + _b.str();
    }

   private:
    static void check_modulus(AffineElement const& f, AffineElement const& g) {
      if (f._n != g._n) {
        fail(ErrorCode::ModulusMismatch,
             "BS(1," + std::to_string(f._n) + ") vs BS(1," + std::to_string(g._n) + ")");
      }
    }

    int       _n = 2;
    long long _k = 0;
    Rational  _b = 0;
  };

  //! Image of a word over {a, t} under a -> x+1, t -> n x.
  inline AffineElement bs_from_word(int n, FreeWord const& w) {
    check_letters(w, 2);
    AffineElement const a(n, 0, 1);
    AffineElement const t(n, 1, 0);
    AffineElement const a_inv = a.inverse();
    AffineElement const t_inv = t.inverse();
    AffineElement       out(n);
    for (Letter l : w) {
      if (l.gen == bs::a) {
        out = out * (l.sign > 0 ? a : a_inv);
      } else {
        out = out * (l.sign > 0 ? t : t_inv);
      }
    }
    return out;
  }

  inline bool bs_equal(AffineElement const& e1, AffineElement const& e2) {
    return e1 == e2;
  }

  // ---------------------------------------------------------------------------
  // The trefoil group <x, y | x^3 = y^2>
  // ---------------------------------------------------------------------------

  namespace trefoil {
    inline constexpr gen_type x = 0;
    inline constexpr gen_type y = 1;

    inline Alphabet alphabet() {
      return Alphabet({"x", "y"});
    }
  }  // namespace trefoil

  //! Coset representatives: x, x^2 for <x>/<x^3> and y for <y>/<y^2>.
  enum class Syllable : std::uint8_t { X = 1, X2 = 2, Y = 3 };

  //! z^central s_1 ... s_m with z = x^3 = y^2 central and the s_i alternating
  //! between {x, x^2} and {y}.
  class TrefoilElement {
   public:
    TrefoilElement() = default;

    [[nodiscard]] long long central() const noexcept {
      return _central;
    }

    [[nodiscard]] std::vector<Syllable> const& syllables() const noexcept {
      return _syllables;
    }

    [[nodiscard]] bool is_identity() const noexcept {
      return _central == 0 && _syllables.empty();
    }

    //! Right multiplication by a single letter.
    void push(Letter l) {
      if (l.gen == trefoil::x) {
        if (l.sign < 0) {
          // x^-1 = z^-1 x^2
          --_central;
          push_x();
          push_x();
        } else {
          push_x();
        }
      } else {
        if (l.sign < 0) {
          // y^-1 = z^-1 y
          --_central;
        }
        push_y();
      }
    }

    void push(Syllable s) {
      switch (s) {
        case Syllable::X2: push_x(); [[fallthrough]];
        case Syllable::X: push_x(); break;
        case Syllable::Y: push_y(); break;
      }
    }

    void push_central(long long k) noexcept {
      _central += k;
    }

    //! True iff the syllables strictly alternate between the two factors.
    [[nodiscard]] bool is_alternating() const noexcept {
      for (std::size_t i = 1; i < _syllables.size(); ++i) {
        if ((_syllables[i] == Syllable::Y) == (_syllables[i - 1] == Syllable::Y)) {
          return false;
        }
      }
      return true;
    }

    friend TrefoilElement operator*(TrefoilElement a, TrefoilElement const& b) {
      a._central += b._central;
      for (auto s : b._syllables) {
        a.push(s);
      }
      return a;
    }

    [[nodiscard]] TrefoilElement inverse() const {
      TrefoilElement out;
      out._central = -_central;
      for (auto it = _syllables.rbegin(); it != _syllables.rend(); ++it) {
        switch (*it) {
          case Syllable::X:
            out.push(Letter{trefoil::x, -1});
            break;
          case Syllable::X2:
            out.push(Letter{trefoil::x, -1});
            out.push(Letter{trefoil::x, -1});
            break;
          case Syllable::Y: out.push(Letter{trefoil::y, -1}); break;
        }
      }
      return out;
    }

    friend bool operator==(TrefoilElement const&, TrefoilElement const&) = default;

    //! Orders by syllable count, then syllables, then central exponent.
    friend std::strong_ordering operator<=>(TrefoilElement const& a, TrefoilElement const& b) {
      if (auto c = a._syllables.size() <=> b._syllables.size(); c != 0) {
        return c;
      }
      if (auto c = a._syllables <=> b._syllables; c != 0) {
        return c;
      }
      return a._central <=> b._central;
    }

    [[nodiscard]] std::string to_string() const {
      std::string out = "z^" + std::to_string(_central);
      for (auto s : _syllables) {
        out += s == Syllable::X ? " x" : (s == Syllable::X2 ? " x^2" : " y");
      }
      return out;
    }

   private:
    void push_x() {
      if (!_syllables.empty() && _syllables.back() != Syllable::Y) {
        if (_syllables.back() == Syllable::X) {
          _syllables.back() = Syllable::X2;
        } else {
          _syllables.pop_back();
          ++_central;
        }
      } else {
        _syllables.push_back(Syllable::X);
      }
    }

    void push_y() {
      if (!_syllables.empty() && _syllables.back() == Syllable::Y) {
        _syllables.pop_back();
        ++_central;
      } else {
        _syllables.push_back(Syllable::Y);
      }
    }

    long long             _central = 0;
    std::vector<Syllable> _syllables;
  };

  inline TrefoilElement trefoil_from_word(FreeWord const& w) {
    check_letters(w, 2);
    TrefoilElement out;
    for (Letter l : w) {
      out.push(l);
    }
    return out;
  }

  inline bool trefoil_equal(TrefoilElement const& a, TrefoilElement const& b) {
    return a == b;
  }

  inline TrefoilElement trefoil_multiply(TrefoilElement const& a, TrefoilElement const& b) {
    return a * b;
  }

  inline TrefoilElement trefoil_invert(TrefoilElement const& a) {
    return a.inverse();
  }

  inline TrefoilElement trefoil_power(TrefoilElement const& g, long long k) {
    TrefoilElement base = k < 0 ? g.inverse() : g;
    TrefoilElement out;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) {
      out = out * base;
    }
    return out;
  }

  namespace trefoil {
    //! b = x^3
    inline TrefoilElement b() {
      TrefoilElement out;
      out.push_central(1);
      return out;
    }

    //! c = xy
    inline TrefoilElement c() {
      return trefoil_from_word({{x, 1}, {y, 1}});
    }

    //! a = x^2 y
    inline TrefoilElement a() {
      return trefoil_from_word({{x, 1}, {x, 1}, {y, 1}});
    }
  }  // namespace trefoil

  //! Some(k) iff g = b^k, with b = x^3.
  inline std::optional<long long> trefoil_power_of_b(TrefoilElement const& g) {
    if (!g.syllables().empty()) {
      return std::nullopt;
    }
    return g.central();
  }

  //! Some(k) iff g = c^k, with c = xy. |c^k| = 2|k| syllables, so only
  //! k = ±(syllable count)/2 need to be compared.
  inline std::optional<long long> trefoil_power_of_c(TrefoilElement const& g) {
    auto const len = g.syllables().size();
    if (len % 2 != 0) {
      return std::nullopt;
    }
    auto const n = static_cast<long long>(len / 2);
    auto const c = trefoil::c();
    for (long long k : {n, -n}) {
      if (trefoil_power(c, k) == g) {
        return k;
      }
    }
    return std::nullopt;
  }

  // ---------------------------------------------------------------------------
  // The HNN extension <x, y, t | x^3 = y^2, t x^3 t^-1 = xy>
  // ---------------------------------------------------------------------------

  namespace hnn {
    inline constexpr gen_type x = 0;
    inline constexpr gen_type y = 1;
    inline constexpr gen_type t = 2;

    inline Alphabet alphabet() {
      return Alphabet({"x", "y", "t"});
    }
  }  // namespace hnn

  //! g_0 t^e_1 g_1 ... t^e_m g_m, Britton reduced. Canonical form: every g_i
  //! with i < m is the preferred representative of its left coset modulo the
  //! subgroup that passes through the following stable letter (<c> before t,
  //! <b> before t^-1), using c^k t = t b^k and b^k t^-1 = t^-1 c^k.
  class HNNTrefoilElement {
   public:
    HNNTrefoilElement() : _base(1) {}

    [[nodiscard]] std::vector<TrefoilElement> const& base() const noexcept {
      return _base;
    }

    [[nodiscard]] std::vector<int> const& stable() const noexcept {
      return _stable;
    }

    [[nodiscard]] bool is_identity() const noexcept {
      return _stable.empty() && _base[0].is_identity();
    }

    [[nodiscard]] std::size_t stable_length() const noexcept {
      return _stable.size();
    }

    friend HNNTrefoilElement operator*(HNNTrefoilElement const& a, HNNTrefoilElement const& b) {
      HNNTrefoilElement out = a;
      out.append_base(b._base[0]);
      for (std::size_t i = 0; i < b._stable.size(); ++i) {
        out.append_stable(b._stable[i]);
        out.append_base(b._base[i + 1]);
      }
      out.canonicalize();
      return out;
    }

    [[nodiscard]] HNNTrefoilElement inverse() const {
      HNNTrefoilElement out;
      out._base[0] = _base.back().inverse();
      for (std::size_t i = _stable.size(); i-- > 0;) {
        out.append_stable(-_stable[i]);
        out.append_base(_base[i].inverse());
      }
      out.canonicalize();
      return out;
    }

    friend bool operator==(HNNTrefoilElement const&, HNNTrefoilElement const&) = default;

    friend std::strong_ordering operator<=>(HNNTrefoilElement const& a,
                                            HNNTrefoilElement const& b) {
      if (auto c = a._stable.size() <=> b._stable.size(); c != 0) {
        return c;
      }
      if (auto c = a._stable <=> b._stable; c != 0) {
        return c;
      }
      return a._base <=> b._base;
    }

    [[nodiscard]] std::string to_string() const {
      std::string out = "[" + _base[0].to_string() + "]";
      for (std::size_t i = 0; i < _stable.size(); ++i) {
        out += _stable[i] > 0 ? " t " : " t^-1 ";
        out += "[" + _base[i + 1].to_string() + "]";
      }
      return out;
    }

    friend HNNTrefoilElement hnn_from_word(FreeWord const& w);

   private:
    void append_base(TrefoilElement const& g) {
      _base.back() = _base.back() * g;
    }

    //! Appends t^e, cancelling a pinch t b^k t^-1 = c^k or t^-1 c^k t = b^k.
    void append_stable(int e) {
      if (!_stable.empty() && _stable.back() == -e) {
        auto const& g = _base.back();
        std::optional<TrefoilElement> replacement;
        if (e < 0) {
          if (auto k = trefoil_power_of_b(g)) {
            replacement = trefoil_power(trefoil::c(), *k);
          }
        } else if (auto k = trefoil_power_of_c(g)) {
          replacement = trefoil_power(trefoil::b(), *k);
        }
        if (replacement) {
          _base.pop_back();
          _stable.pop_back();
          append_base(*replacement);
          return;
        }
      }
      _stable.push_back(e);
      _base.emplace_back();
    }

    //! Preferred representative r of g<c>: least in TrefoilElement order
    //! among g c^k. The syllable length of g c^k is at least 2|k| - |g|, so
    //! every coset element no longer than g has |k| <= |g|.
    static std::pair<TrefoilElement, long long> split_mod_c(TrefoilElement const& g) {
      auto const     bound = static_cast<long long>(g.syllables().size());
      auto const     c_inv = trefoil::c().inverse();
      TrefoilElement best  = g;
      long long      best_k = 0;
      // candidates g c^-k for k in [-bound, bound]; best = g c^-best_k
      TrefoilElement cur = g * trefoil_power(trefoil::c(), bound);
      for (long long k = -bound; k <= bound; ++k) {
        if (cur < best) {
          best   = cur;
          best_k = k;
        }
        cur = cur * c_inv;
      }
      return {best, best_k};
    }

    void canonicalize() {
      for (std::size_t i = 0; i < _stable.size(); ++i) {
        TrefoilElement& g = _base[i];
        if (_stable[i] > 0) {
          // g = r c^k, and c^k t = t b^k
          auto [r, k] = split_mod_c(g);
          g           = r;
          TrefoilElement moved;
          moved.push_central(k);
          _base[i + 1] = moved * _base[i + 1];
        } else {
          // g = r b^k with r of central exponent 0, and b^k t^-1 = t^-1 c^k
          long long k = g.central();
          g.push_central(-k);
          _base[i + 1] = trefoil_power(trefoil::c(), k) * _base[i + 1];
        }
      }
    }

    std::vector<TrefoilElement> _base;
    std::vector<int>            _stable;
  };

  inline HNNTrefoilElement hnn_from_word(FreeWord const& w) {
    check_letters(w, 3);
    HNNTrefoilElement out;
    for (Letter l : w) {
      if (l.gen == hnn::t) {
        out.append_stable(l.sign);
      } else {
        out._base.back().push(l);
      }
    }
    out.canonicalize();
    return out;
  }

  inline bool hnn_equal(HNNTrefoilElement const& a, HNNTrefoilElement const& b) {
    return a == b;
  }

  inline HNNTrefoilElement hnn_multiply(HNNTrefoilElement const& a,
                                        HNNTrefoilElement const& b) {
    return a * b;
  }

  inline HNNTrefoilElement hnn_invert(HNNTrefoilElement const& a) {
    return a.inverse();
  }

  namespace hnn {
    inline HNNTrefoilElement from_text(std::string_view text) {
      return hnn_from_word(parse_word(text, alphabet()));
    }

    inline HNNTrefoilElement a() {
      return from_text("x^2 y");
    }
    inline HNNTrefoilElement b() {
      return from_text("x^3");
    }
    inline HNNTrefoilElement c() {
      return from_text("x y");
    }
    inline HNNTrefoilElement d() {
      return from_text("t x y t^-1");
    }
  }  // namespace hnn

  // ---------------------------------------------------------------------------
  // Ascending HNN bookkeeping
  // ---------------------------------------------------------------------------

  //! The character sending the stable letter to 1 and the base to 0.
  inline long long psi(FreeWord const& w, gen_type stable_letter) noexcept {
    return exponent_sum(w, stable_letter);
  }

  //! psi(g) = l > 0 and psi(A) = lZ, where psi(A) is generated by the psi
  //! values of A's generators.
  inline bool is_principal(long long psi_g, std::vector<long long> const& psi_of_subgroup) {
    if (psi_g <= 0) {
      return false;
    }
    long long g = 0;
    for (long long v : psi_of_subgroup) {
      g = std::gcd(g, v < 0 ? -v : v);
    }
    return g == psi_g;
  }

}  // namespace onerel
