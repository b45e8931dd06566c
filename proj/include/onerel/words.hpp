#pragma once

// Words in free groups and free monoids: parsing, free and cyclic reduction,
// exponent sums and roots.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace onerel {

  using gen_type = std::uint32_t;

  //! A generator together with an exponent sign.
  struct Letter {
    gen_type gen  = 0;
    int      sign = 1;

    //! Position in the total order g1 < g1^-1 < g2 < g2^-1 < ...
    [[nodiscard]] constexpr std::uint64_t key() const noexcept {
      return 2 * static_cast<std::uint64_t>(gen) + (sign < 0 ? 1 : 0);
    }

    [[nodiscard]] constexpr Letter inverse() const noexcept {
      return {gen, -sign};
    }

    [[nodiscard]] constexpr bool is_inverse_of(Letter other) const noexcept {
      return gen == other.gen && sign == -other.sign;
    }

    friend constexpr bool operator==(Letter, Letter) = default;
    friend constexpr auto operator<=>(Letter a, Letter b) noexcept {
      return a.key() <=> b.key();
    }
  };

  using FreeWord     = std::vector<Letter>;
  using PositiveWord = std::vector<gen_type>;

  //! Ordered set of generator names; declaration order is the order used by
  //! every normal form in the library.
  class Alphabet {
   public:
    Alphabet() = default;

    explicit Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
      for (std::size_t i = 0; i < _names.size(); ++i) {
        validate(_names[i]);
        for (std::size_t j = 0; j < i; ++j) {
          if (_names[j] == _names[i]) {
            fail(ErrorCode::Malformed, "duplicate generator '" + _names[i] + "'");
          }
        }
      }
    }

    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }

    [[nodiscard]] std::string const& name(gen_type i) const {
      return _names.at(i);
    }

    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    [[nodiscard]] std::optional<gen_type> index(std::string_view name) const {
      auto it = std::find(_names.begin(), _names.end(), name);
      if (it == _names.end()) {
        return std::nullopt;
      }
      return static_cast<gen_type>(it - _names.begin());
    }

    friend bool operator==(Alphabet const&, Alphabet const&) = default;

   private:
    static void validate(std::string const& name) {
      if (name.empty()) {
        fail(ErrorCode::Malformed, "empty generator name");
      }
      for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c)) || c == '^' || c == ','
            || c == '|' || c == '<' || c == '>') {
          fail(ErrorCode::Malformed, "invalid character in generator name '" + name + "'");
        }
      }
    }

    std::vector<std::string> _names;
  };

  namespace detail {
    inline std::vector<std::string_view> split_ws(std::string_view text) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        if (j > i) {
          out.push_back(text.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }
  }  // namespace detail

  //! Parses whitespace separated tokens `name` or `name^k` (k a non-zero
  //! integer). The result is not reduced.
  inline FreeWord parse_word(std::string_view text, Alphabet const& alphabet) {
    FreeWord out;
    for (auto token : detail::split_ws(text)) {
      auto            caret = token.find('^');
      std::string_view name = token.substr(0, caret);
      long long       exp   = 1;
      if (caret != std::string_view::npos) {
        auto digits = token.substr(caret + 1);
        if (digits.empty()) {
          fail(ErrorCode::MalformedToken, std::string(token));
        }
        auto const* first = digits.data();
        auto const* last  = digits.data() + digits.size();
        if (*first == '+') {
          ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, exp);
        if (ec != std::errc() || ptr != last) {
          fail(ErrorCode::MalformedToken, std::string(token));
        }
        if (exp == 0) {
          fail(ErrorCode::ZeroExponent, std::string(token));
        }
      }
      if (name.empty()) {
        fail(ErrorCode::MalformedToken, std::string(token));
      }
      auto idx = alphabet.index(name);
      if (!idx) {
        fail(ErrorCode::UnknownGenerator, std::string(name));
      }
      int       sign  = exp > 0 ? 1 : -1;
      long long count = exp > 0 ? exp : -exp;
      out.insert(out.end(), static_cast<std::size_t>(count), Letter{*idx, sign});
    }
    return out;
  }

  //! Parses a positive word; inverse letters are rejected.
  inline PositiveWord parse_positive_word(std::string_view text, Alphabet const& alphabet) {
    PositiveWord out;
    for (Letter l : parse_word(text, alphabet)) {
      if (l.sign < 0) {
        fail(ErrorCode::MalformedToken, "negative exponent in positive word");
      }
      out.push_back(l.gen);
    }
    return out;
  }

  //! Letters printed one at a time; the empty word prints as `1`.
  inline std::string format_word(FreeWord const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += alphabet.name(w[i].gen);
      if (w[i].sign < 0) {
        out += "^-1";
      }
    }
    return out;
  }

  inline std::string format_word(PositiveWord const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += alphabet.name(w[i]);
    }
    return out;
  }

  inline FreeWord to_free_word(PositiveWord const& w) {
    FreeWord out;
    out.reserve(w.size());
    for (auto g : w) {
      out.push_back({g, 1});
    }
    return out;
  }

  inline FreeWord inverse(FreeWord const& w) {
    FreeWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(it->inverse());
    }
    return out;
  }

  inline FreeWord concat(FreeWord a, FreeWord const& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  }

  inline FreeWord power(FreeWord const& w, long long k) {
    FreeWord base = k < 0 ? inverse(w) : w;
    FreeWord out;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) {
      out.insert(out.end(), base.begin(), base.end());
    }
    return out;
  }

  [[nodiscard]] inline bool is_reduced(FreeWord const& w) noexcept {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i].is_inverse_of(w[i - 1])) {
        return false;
      }
    }
    return true;
  }

  //! Free reduction by a single stack pass.
  inline FreeWord reduce(FreeWord const& w) {
    FreeWord out;
    out.reserve(w.size());
    for (Letter l : w) {
      if (!out.empty() && out.back().is_inverse_of(l)) {
        out.pop_back();
      } else {
        out.push_back(l);
      }
    }
    return out;
  }

  [[nodiscard]] inline bool is_cyclically_reduced(FreeWord const& w) noexcept {
    return is_reduced(w) && (w.size() < 2 || !w.front().is_inverse_of(w.back()));
  }

  struct CyclicReduction {
    FreeWord core;
    FreeWord conjugator;
  };

  //! w = conjugator * core * conjugator^-1 in the free group, with core
  //! cyclically reduced.
  inline CyclicReduction cyclically_reduce(FreeWord const& w) {
    FreeWord    r = reduce(w);
    std::size_t i = 0;
    std::size_t j = r.size();
    while (j - i >= 2 && r[i].is_inverse_of(r[j - 1])) {
      ++i;
      --j;
    }
    return {FreeWord(r.begin() + i, r.begin() + j), FreeWord(r.begin(), r.begin() + i)};
  }

  //! Translation length on the Cayley tree of the free group.
  inline std::size_t translation_length(FreeWord const& w) {
    return cyclically_reduce(w).core.size();
  }

  struct PrimitiveRoot {
    FreeWord    root;
    std::size_t exponent = 1;
  };

  //! Writes a cyclically reduced word as root^exponent with exponent maximal.
  inline PrimitiveRoot primitive_root(FreeWord const& w) {
    if (w.empty()) {
      fail(ErrorCode::EmptyWord, "primitive_root of the empty word");
    }
    if (!is_cyclically_reduced(w)) {
      fail(ErrorCode::NotCyclicallyReduced, "primitive_root requires a cyclically reduced word");
    }
    std::size_t const n = w.size();
    for (std::size_t period = 1; period <= n / 2; ++period) {
      if (n % period != 0) {
        continue;
      }
      bool periodic = true;
      for (std::size_t i = period; i < n && periodic; ++i) {
        periodic = w[i] == w[i - period];
      }
      if (periodic) {
        return {FreeWord(w.begin(), w.begin() + period), n / period};
      }
    }
    return {w, 1};
  }

  inline long long exponent_sum(FreeWord const& w, gen_type g) noexcept {
    long long s = 0;
    for (Letter l : w) {
      if (l.gen == g) {
        s += l.sign;
      }
    }
    return s;
  }

  //! Checks every letter of `w` against an alphabet of size `rank`.
  inline void check_letters(FreeWord const& w, std::size_t rank) {
    for (Letter l : w) {
      if (l.gen >= rank || (l.sign != 1 && l.sign != -1)) {
        fail(ErrorCode::InvalidLetter, "letter index " + std::to_string(l.gen)
                                           + " outside alphabet of size "
                                           + std::to_string(rank));
      }
    }
  }

  inline void check_letters(PositiveWord const& w, std::size_t rank) {
    for (auto g : w) {
      if (g >= rank) {
        fail(ErrorCode::InvalidLetter, "letter index " + std::to_string(g)
                                           + " outside alphabet of size "
                                           + std::to_string(rank));
      }
    }
  }

}  // namespace onerel
