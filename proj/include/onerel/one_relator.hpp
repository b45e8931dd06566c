#pragma once

// One-relator presentations <x_1, ..., x_k | W> and the decidable fragment of
// their C*-simplicity and P_nai classification.

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gbs.hpp"
#include "words.hpp"

namespace onerel {

  struct OneRelatorPresentation {
    Alphabet alphabet;
    FreeWord relator;     // cyclically reduced
    FreeWord conjugator;  // discarded by cyclic reduction of the input relator

    [[nodiscard]] std::size_t rank() const noexcept {
      return alphabet.size();
    }
  };

  //! Parses `< g1, g2, ... | word >`; the relator may be empty.
  inline OneRelatorPresentation parse_presentation(std::string_view text) {
    auto const open  = text.find('<');
    auto const bar   = text.find('|');
    auto const close = text.rfind('>');
    if (open == std::string_view::npos || bar == std::string_view::npos
        || close == std::string_view::npos || !(open < bar && bar < close)) {
      fail(ErrorCode::Malformed, "expected `< generators | relator >`");
    }
    auto outside = [&](std::string_view s) {
      for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
          return true;
        }
      }
      return false;
    };
    if (outside(text.substr(0, open)) || outside(text.substr(close + 1))) {
      fail(ErrorCode::Malformed, "text outside the angle brackets");
    }
    std::string_view gens = text.substr(open + 1, bar - open - 1);
    std::string_view rel  = text.substr(bar + 1, close - bar - 1);
    if (rel.find('|') != std::string_view::npos || rel.find('<') != std::string_view::npos) {
      fail(ErrorCode::Malformed, "more than one relator section");
    }

    std::vector<std::string> names;
    std::size_t              start = 0;
    while (start <= gens.size()) {
      auto comma = gens.find(',', start);
      auto piece = gens.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                      : comma - start);
      auto tokens = detail::split_ws(piece);
      if (tokens.size() != 1) {
        fail(ErrorCode::Malformed, "bad generator list");
      }
      names.emplace_back(tokens[0]);
      if (comma == std::string_view::npos) {
        break;
      }
      start = comma + 1;
    }
    OneRelatorPresentation p;
    p.alphabet = Alphabet(std::move(names));
    auto cr    = cyclically_reduce(parse_word(rel, p.alphabet));
    p.relator    = std::move(cr.core);
    p.conjugator = std::move(cr.conjugator);
    return p;
  }

  inline std::string format_presentation(OneRelatorPresentation const& p) {
    std::string out = "< ";
    for (std::size_t i = 0; i < p.rank(); ++i) {
      out += (i ? ", " : "") + p.alphabet.name(static_cast<gen_type>(i));
    }
    out += " | ";
    if (!p.relator.empty()) {
      out += format_word(p.relator, p.alphabet) + " ";
    }
    return out + ">";
  }

  //! Exponents (m, n) such that the relator is t a^m t^-1 a^-n up to cyclic
  //! permutation, inversion and exchange of the two generators.
  inline std::optional<std::pair<long long, long long>> match_bs_relator(FreeWord const& relator) {
    if (relator.size() < 4) {
      return std::nullopt;
    }
    // Reads a maximal run of `a` letters of one sign starting at i.
    auto run = [](FreeWord const& w, std::size_t i, gen_type a) -> std::pair<long long, std::size_t> {
      if (i >= w.size() || w[i].gen != a) {
        return {0, i};
      }
      int         sign = w[i].sign;
      std::size_t j    = i;
      while (j < w.size() && w[j].gen == a && w[j].sign == sign) {
        ++j;
      }
      return {sign * static_cast<long long>(j - i), j};
    };
    for (FreeWord const& w : {relator, inverse(relator)}) {
      for (std::size_t shift = 0; shift < w.size(); ++shift) {
        FreeWord r(w.begin() + static_cast<std::ptrdiff_t>(shift), w.end());
        r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(shift));
        gen_type const t = r[0].gen;
        if (r[0].sign != 1 || t > 1) {
          continue;
        }
        gen_type const a = 1 - t;
        auto [m, i] = run(r, 1, a);
        if (m == 0 || i >= r.size() || r[i] != Letter{t, -1}) {
          continue;
        }
        auto [q, j] = run(r, i + 1, a);
        if (q == 0 || j != r.size()) {
          continue;
        }
        return std::pair{m, -q};
      }
    }
    return std::nullopt;
  }

  //! First matching rule wins:
  //!   k = 1 -> Cyclic; k >= 3 -> CstarSimple; k = 2 with empty relator ->
  //!   CstarSimple (F_2); relator a proper power -> CstarSimple; relator of
  //!   the form t a^m t^-1 a^-n -> classify BS(m, n) as a GBS graph;
  //!   otherwise Unknown.
  inline Classification classify(OneRelatorPresentation const& p) {
    auto const k = p.rank();
    if (k == 0) {
      return {Verdict::Cyclic, 0, "no generators: trivial group"};
    }
    if (k == 1) {
      return {Verdict::Cyclic, 0, "one generator: cyclic group, amenable"};
    }
    if (k >= 3) {
      return {Verdict::CstarSimple, 0,
              "k>=3 generators: acylindrically hyperbolic one-relator group"};
    }
    if (p.relator.empty()) {
      return {Verdict::CstarSimple, 0,
              "k=2 with empty relator: free group F2, C*-simple by Powers (classical, "
              "not part of the one-relator classification)"};
    }
    if (primitive_root(p.relator).exponent >= 2) {
      return {Verdict::CstarSimple, 0,
              "relator is a proper power: hyperbolic by the spelling theorem, non-cyclic, "
              "hence not a GBS group"};
    }
    if (auto mn = match_bs_relator(p.relator)) {
      auto c = classify_cstar(bs_loop(mn->first, mn->second));
      c.reason = "relator matches BS(" + std::to_string(mn->first) + ","
                 + std::to_string(mn->second) + "); " + c.reason;
      return c;
    }
    return {Verdict::Unknown, 0,
            "k=2 relator is neither a proper power nor a Baumslag-Solitar relator; deciding "
            "the GBS case needs Howie's Magnus-subgroup intersection algorithm (not "
            "implemented)"};
  }

  enum class Tristate { Yes, No, Unknown };

  inline std::string_view to_string(Tristate t) noexcept {
    switch (t) {
      case Tristate::Yes: return "Yes";
      case Tristate::No: return "No";
      case Tristate::Unknown: return "Unknown";
    }
    return "Unknown";
  }

  //! P_nai holds exactly for the non-cyclic, non-GBS one-relator groups.
  inline Tristate p_nai(OneRelatorPresentation const& p) {
    auto const c = classify(p);
    switch (c.verdict) {
      case Verdict::Cyclic:
      case Verdict::NotCstarSimple_SolvableBS:
      case Verdict::NotCstarSimple_Unimodular: return Tristate::No;
      case Verdict::CstarSimple:
        // every CstarSimple verdict reached from a GBS graph carries a BS match
        if (p.rank() >= 3 || p.relator.empty() || primitive_root(p.relator).exponent >= 2) {
          return Tristate::Yes;
        }
        return Tristate::No;
      case Verdict::Unknown: return Tristate::Unknown;
    }
    return Tristate::Unknown;
  }

}  // namespace onerel
