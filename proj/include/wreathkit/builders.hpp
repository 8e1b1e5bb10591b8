#ifndef WREATHKIT_BUILDERS_HPP_
#define WREATHKIT_BUILDERS_HPP_

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "fingrp.hpp"
#include "presentation.hpp"
#include "smallcanc.hpp"
#include "words.hpp"

namespace wreathkit {

  // a_1..a_4 with a_l^-1 a_{l+1} a_l a_{l+1}^-2, indices mod 4.
  inline Presentation higman_presentation() {
    Presentation p(Alphabet::make({"a1", "a2", "a3", "a4"}));
    for (std::size_t l = 0; l < 4; ++l) {
      std::size_t const next = (l + 1) % 4;
      p.add_relator(Word(p.alphabet, {make_letter(l, true), make_letter(next), make_letter(l),
                                      make_letter(next, true), make_letter(next, true)}));
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // The 44-generator presentation
  ////////////////////////////////////////////////////////////////////////

  // a1..a4 are generators 0..3, x1..x20 are 4..23, y1..y20 are 24..43.
  inline AlphabetPtr s0_alphabet() {
    static AlphabetPtr const alpha = [] {
      std::vector<std::string> names;
      for (int i = 1; i <= 4; ++i) {
        names.push_back("a" + std::to_string(i));
      }
      for (char c : {'x', 'y'}) {
        for (int i = 1; i <= 20; ++i) {
          names.push_back(c + std::to_string(i));
        }
      }
      return Alphabet::make(std::move(names));
    }();
    return alpha;
  }

  inline std::size_t s0_a(std::size_t i) {
    return i - 1;
  }
  inline std::size_t s0_x(std::size_t j) {
    return 3 + j;
  }
  inline std::size_t s0_y(std::size_t k) {
    return 23 + k;
  }

  // y1^t y2^t ... y20^t
  inline Word zt_word(long long t) {
    if (t < 1) {
      throw InvalidParameter("Z_t needs t >= 1");
    }
    letters_type w;
    for (std::size_t k = 1; k <= 20; ++k) {
      w.insert(w.end(), static_cast<std::size_t>(t), make_letter(s0_y(k)));
    }
    return Word::from_reduced(s0_alphabet(), std::move(w));
  }

  // x1^n x2^n ... x20^n
  inline letters_type s0_slot_letters(std::size_t n) {
    letters_type w;
    for (std::size_t j = 1; j <= 20; ++j) {
      w.insert(w.end(), n, make_letter(s0_x(j)));
    }
    return w;
  }

  // One exponent per relator slot: S_ij (slots 0..79, i major), T_ij
  // (80..159), U_k (160..179), V_l (180..183).
  struct S0Params {
    static constexpr std::size_t num_slots = 184;

    std::vector<std::size_t> exponents;

    static S0Params defaults() {
      S0Params p;
      for (std::size_t s = 0; s < num_slots; ++s) {
        p.exponents.push_back(s + 1);
      }
      return p;
    }

    S0Params escalated(std::size_t factor = 10) const {
      S0Params p = *this;
      for (auto& e : p.exponents) {
        e *= factor;
      }
      return p;
    }

    static std::string slot_name(std::size_t s) {
      if (s < 80) {
        return "S_" + std::to_string(s / 20 + 1) + "_" + std::to_string(s % 20 + 1);
      } else if (s < 160) {
        return "T_" + std::to_string((s - 80) / 20 + 1) + "_" + std::to_string((s - 80) % 20 + 1);
      } else if (s < 180) {
        return "U_" + std::to_string(s - 159);
      }
      return "V_" + std::to_string(s - 179);
    }
  };

  inline Presentation s0_presentation(S0Params const& params = S0Params::defaults()) {
    if (params.exponents.size() != S0Params::num_slots) {
      throw InvalidParameter("expected 184 slot exponents");
    }
    std::map<std::size_t, std::size_t> used;
    for (std::size_t s = 0; s < params.exponents.size(); ++s) {
      auto n = params.exponents[s];
      if (n < 1) {
        throw InvalidParameter("slot exponents must be positive");
      }
      auto [it, fresh] = used.emplace(n, s);
      if (!fresh) {
        throw DuplicateSlotWord(S0Params::slot_name(it->second) + " and " + S0Params::slot_name(s)
                                + " share exponent " + std::to_string(n));
      }
    }
    auto         alpha = s0_alphabet();
    Presentation p(alpha);
    auto         add = [&](letters_type head, std::size_t slot) {
      auto tail = s0_slot_letters(params.exponents[slot]);
      head.insert(head.end(), tail.begin(), tail.end());
      p.add_relator(Word(alpha, std::move(head)));
    };
    for (std::size_t i = 1; i <= 4; ++i) {
      for (std::size_t j = 1; j <= 20; ++j) {
        add({make_letter(s0_a(i), true), make_letter(s0_x(j)), make_letter(s0_a(i))},
            (i - 1) * 20 + (j - 1));
      }
    }
    for (std::size_t i = 1; i <= 4; ++i) {
      for (std::size_t j = 1; j <= 20; ++j) {
        add({make_letter(s0_a(i)), make_letter(s0_x(j)), make_letter(s0_a(i), true)},
            80 + (i - 1) * 20 + (j - 1));
      }
    }
    for (std::size_t k = 1; k <= 20; ++k) {
      add({make_letter(s0_y(k))}, 160 + (k - 1));
    }
    for (std::size_t l = 1; l <= 4; ++l) {
      std::size_t const next = l % 4 + 1;
      add({make_letter(s0_a(l), true), make_letter(s0_a(next)), make_letter(s0_a(l)),
           make_letter(s0_a(next), true), make_letter(s0_a(next), true)},
          180 + (l - 1));
    }
    return p;
  }

  struct S0Certificate {
    S0Params                params;
    Presentation            presentation;
    SmallCancellationResult small_cancellation;
    std::size_t             escalations = 0;
  };

  // Checks C'(1/6) at `params`, multiplying all exponents by 10 on failure,
  // at most `max_escalations` times.
  inline S0Certificate s0_certified(S0Params params = S0Params::defaults(),
                                    std::size_t max_escalations = 3) {
    S0Certificate c{params, s0_presentation(params), {}, 0};
    c.small_cancellation = check_small_cancellation(c.presentation, Rational(1, 6));
    while (!c.small_cancellation.holds && c.escalations < max_escalations) {
      c.params       = c.params.escalated();
      c.presentation = s0_presentation(c.params);
      c.small_cancellation = check_small_cancellation(c.presentation, Rational(1, 6));
      ++c.escalations;
    }
    return c;
  }

  ////////////////////////////////////////////////////////////////////////
  // P_n and the subword conditions
  ////////////////////////////////////////////////////////////////////////

  struct LetterClasses {
    std::vector<bool> ax;  // by generator
    std::vector<bool> y;
  };

  // Names starting with 'a' or 'x' versus 'y'.
  inline LetterClasses letter_classes_by_prefix(Alphabet const& alpha) {
    LetterClasses c{std::vector<bool>(alpha.size()), std::vector<bool>(alpha.size())};
    for (std::size_t g = 0; g < alpha.size(); ++g) {
      char first = alpha.name(g).front();
      c.ax[g]    = first == 'a' || first == 'x';
      c.y[g]     = first == 'y';
    }
    return c;
  }

  // l_1 Z_m l_2 Z_{2m} ... l_{r+s} Z_{(r+s)m}, with l the letters of R_n then
  // of the x-word.
  inline Word pn_relator(Word const& Rn, Word const& x_word, long long m) {
    if (m < 1) {
      throw InvalidParameter("m must be positive");
    }
    if (!same_alphabet(Rn.alphabet(), s0_alphabet())
        || !same_alphabet(x_word.alphabet(), s0_alphabet())) {
      throw AlphabetMismatch("P_n is built over the 44-generator alphabet");
    }
    for (auto l : Rn.letters()) {
      if (generator_of(l) > s0_a(4)) {
        throw WrongLetterClass("R_n may only use a-letters");
      }
    }
    for (auto l : x_word.letters()) {
      if (generator_of(l) < s0_x(1) || generator_of(l) > s0_x(20)) {
        throw WrongLetterClass("the x-word may only use x-letters");
      }
    }
    letters_type ls = Rn.letters();
    ls.insert(ls.end(), x_word.letters().begin(), x_word.letters().end());
    if (ls.empty()) {
      throw InvalidParameter("R_n and the x-word are both empty");
    }
    letters_type out;
    for (std::size_t q = 0; q < ls.size(); ++q) {
      out.push_back(ls[q]);
      auto z = zt_word(static_cast<long long>(q + 1) * m).letters();
      out.insert(out.end(), z.begin(), z.end());
    }
    return Word::from_reduced(s0_alphabet(), std::move(out));
  }

  inline std::size_t pn_expected_length(std::size_t letters, std::size_t m) {
    return letters + 20 * m * letters * (letters + 1) / 2;
  }

  struct ConditionResult {
    bool                       holds = true;
    std::optional<std::size_t> relator;       // failing relator index, if any
    std::optional<std::size_t> window_start;  // failing cyclic window
    std::size_t                window = 0;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Every cyclic subword of R^{+-1} of length >= |R|/6 must contain two
  // consecutive a/x letters or y_i y_j^q y_k with i, j, k distinct and the two
  // flanking letters of the same sign. Both features are inversion symmetric,
  // so scanning the cyclic windows of R of length ceil(|R|/6) is exact.
  inline ConditionResult check_condition_b(Word const& R, LetterClasses const& classes) {
    ConditionResult   res;
    auto const&       w = R.letters();
    std::size_t const L = w.size();
    if (L == 0) {
      return res;
    }
    std::size_t const win = (L + 5) / 6;
    res.window            = win;
    auto at = [&](std::size_t p) { return w[p % L]; };
    auto ax = [&](letter_type l) { return bool(classes.ax[generator_of(l)]); };
    auto y  = [&](letter_type l) { return bool(classes.y[generator_of(l)]); };

    std::size_t const         span = 2 * L;
    std::size_t const         none = SIZE_MAX;
    std::vector<std::size_t>  feature_end(span, none);
    for (std::size_t p = 0; p < span; ++p) {
      std::size_t best = none;
      if (p + 1 < span && ax(at(p)) && ax(at(p + 1))) {
        best = p + 2;
      }
      if (y(at(p)) && p + 1 < span && y(at(p + 1))
          && generator_of(at(p + 1)) != generator_of(at(p))) {
        letter_type mid = at(p + 1);
        std::size_t s   = p + 1;
        while (s < span && s - p <= L && at(s) == mid) {
          ++s;
        }
        if (s < span && s - p <= L) {
          letter_type last = at(s);
          if (y(last) && is_inverted(last) == is_inverted(at(p))
              && generator_of(last) != generator_of(mid)
              && generator_of(last) != generator_of(at(p))) {
            best = std::min(best, s + 1);
          }
        }
      }
      feature_end[p] = best;
    }
    std::vector<std::size_t> earliest(span + 1, none);
    for (std::size_t p = span; p-- > 0;) {
      earliest[p] = std::min(feature_end[p], earliest[p + 1]);
    }
    for (std::size_t start = 0; start < L; ++start) {
      if (earliest[start] == none || earliest[start] > start + win) {
        res.holds        = false;
        res.window_start = start;
        return res;
      }
    }
    return res;
  }

  inline ConditionResult check_condition_b(Word const& R) {
    return check_condition_b(R, letter_classes_by_prefix(*R.alphabet()));
  }

  inline ConditionResult check_condition_b(Presentation const& p) {
    auto classes = letter_classes_by_prefix(*p.alphabet);
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
      auto r = check_condition_b(p.relators[k], classes);
      if (!r) {
        r.relator = k;
        return r;
      }
    }
    return {};
  }

  // No cyclic shift of a relator contains y_i^{+-m}.
  inline ConditionResult check_condition_pp(Presentation const& p, long long m,
                                            LetterClasses const& classes) {
    if (m < 2) {
      throw InvalidParameter("m must be at least 2");
    }
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
      auto const&       w = p.relators[k].letters();
      std::size_t const L = w.size();
      if (L == 0) {
        continue;
      }
      // start scanning right after a letter change so runs are not split
      std::size_t origin = 0;
      while (origin < L && w[origin] == w[(origin + L - 1) % L]) {
        ++origin;
      }
      if (origin == L) {
        if (classes.y[generator_of(w[0])] && static_cast<long long>(L) >= m) {
          return {false, k, 0, static_cast<std::size_t>(m)};
        }
        continue;
      }
      std::size_t run = 0;
      for (std::size_t q = 0; q < L; ++q) {
        std::size_t pos = (origin + q) % L;
        run             = q > 0 && w[pos] == w[(pos + L - 1) % L] ? run + 1 : 1;
        if (classes.y[generator_of(w[pos])] && static_cast<long long>(run) >= m) {
          return {false, k, (pos + L + 1 - run) % L, static_cast<std::size_t>(m)};
        }
      }
    }
    return {};
  }

  inline ConditionResult check_condition_pp(Presentation const& p, long long m) {
    return check_condition_pp(p, m, letter_classes_by_prefix(*p.alphabet));
  }

  // Condition (+) against a supplied finite quotient of the current
  // presentation: |Q| divides m, and the word W_n maps to the identity.
  struct ConditionPlus {
    bool divisible     = false;
    bool trivial_image = false;

    explicit operator bool() const noexcept {
      return divisible && trivial_image;
    }
  };

  inline ConditionPlus check_condition_plus(FiniteGroup const& Q,
                                            std::vector<element_type> const& generator_images,
                                            long long m, Word const& Wn) {
    if (m < 1) {
      throw InvalidParameter("m must be positive");
    }
    if (generator_images.size() != Wn.alphabet()->size()) {
      throw InvalidArgument("one image per generator is required");
    }
    return {m % static_cast<long long>(Q.order()) == 0, evaluate(Q, generator_images, Wn) == 0};
  }

}  // namespace wreathkit

#endif  // WREATHKIT_BUILDERS_HPP_
