#ifndef WREATHKIT_WORDS_HPP_
#define WREATHKIT_WORDS_HPP_

#include <algorithm>
#include <cctype>
#include <charconv>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "error.hpp"

namespace wreathkit {

  // A signed letter is 2 * generator + (1 if inverted). With this encoding the
  // natural order on letters is a < a^-1 < b < b^-1 < ... for generators in
  // alphabet order, and inversion is a single xor.
  using letter_type  = std::uint32_t;
  using letters_type = std::vector<letter_type>;

  constexpr letter_type make_letter(std::size_t gen, bool inverted = false) noexcept {
    return static_cast<letter_type>(2 * gen + (inverted ? 1 : 0));
  }
  constexpr std::size_t generator_of(letter_type l) noexcept {
    return l >> 1;
  }
  constexpr bool is_inverted(letter_type l) noexcept {
    return (l & 1) != 0;
  }
  constexpr letter_type inverse_of(letter_type l) noexcept {
    return l ^ 1;
  }

  class Alphabet;
  using AlphabetPtr = std::shared_ptr<Alphabet const>;

  class Alphabet {
   public:
    static bool valid_name(std::string_view name) {
      if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
        return false;
      }
      return std::all_of(name.begin(), name.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }

    // `eps` is reserved for the empty word in the text syntax.
    static AlphabetPtr make(std::vector<std::string> names) {
      std::unordered_map<std::string, std::size_t> index;
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (!valid_name(names[i]) || names[i] == "eps") {
          throw InvalidArgument("invalid generator name '" + names[i] + "'");
        }
        if (!index.emplace(names[i], i).second) {
          throw InvalidArgument("duplicate generator name '" + names[i] + "'");
        }
      }
      return AlphabetPtr(new Alphabet(std::move(names), std::move(index)));
    }

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::string const& name(std::size_t gen) const {
      return _names.at(gen);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<std::size_t> index(std::string const& name) const {
      auto it = _index.find(name);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    friend bool operator==(Alphabet const& x, Alphabet const& y) {
      return x._names == y._names;
    }

   private:
    Alphabet(std::vector<std::string> names,
             std::unordered_map<std::string, std::size_t> index)
        : _names(std::move(names)), _index(std::move(index)) {}

    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
  };

  inline bool same_alphabet(AlphabetPtr const& x, AlphabetPtr const& y) {
    return x == y || (x && y && *x == *y);
  }

  namespace detail {
    // In-place free reduction using the output prefix as a stack.
    inline void free_reduce(letters_type& w) {
      std::size_t top = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (top > 0 && w[top - 1] == inverse_of(w[i])) {
          --top;
        } else {
          w[top++] = w[i];
        }
      }
      w.resize(top);
    }

    inline bool is_freely_reduced(std::span<letter_type const> w) {
      for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] == inverse_of(w[i - 1])) {
          return false;
        }
      }
      return true;
    }

    inline letters_type inverse(std::span<letter_type const> w) {
      letters_type out(w.rbegin(), w.rend());
      for (auto& l : out) {
        l = inverse_of(l);
      }
      return out;
    }

    // Number of letters peeled from each end to reach the cyclic core.
    inline std::size_t cyclic_peel(std::span<letter_type const> w) {
      std::size_t i = 0;
      while (2 * i + 1 < w.size() && w[i] == inverse_of(w[w.size() - 1 - i])) {
        ++i;
      }
      return i;
    }

    inline bool is_cyclically_reduced(std::span<letter_type const> w) {
      return is_freely_reduced(w) && (w.size() < 2 || w.front() != inverse_of(w.back()));
    }

    // Start index of the lexicographically least rotation.
    inline std::size_t least_rotation(std::span<letter_type const> s) {
      std::size_t const n = s.size();
      std::size_t       i = 0, j = 1, k = 0;
      while (i < n && j < n && k < n) {
        letter_type a = s[(i + k) % n], b = s[(j + k) % n];
        if (a == b) {
          ++k;
          continue;
        }
        if (a > b) {
          i += k + 1;
        } else {
          j += k + 1;
        }
        if (i == j) {
          ++j;
        }
        k = 0;
      }
      return n == 0 ? 0 : std::min(i, j);
    }

    // Smallest p dividing |s| with s = (s[0..p))^(|s|/p).
    inline std::size_t primitive_period(std::span<letter_type const> s) {
      std::size_t const n = s.size();
      if (n == 0) {
        return 0;
      }
      std::vector<std::size_t> pi(n, 0);
      for (std::size_t q = 1; q < n; ++q) {
        std::size_t k = pi[q - 1];
        while (k > 0 && s[q] != s[k]) {
          k = pi[k - 1];
        }
        if (s[q] == s[k]) {
          ++k;
        }
        pi[q] = k;
      }
      std::size_t p = n - pi[n - 1];
      return n % p == 0 ? p : n;
    }

    inline letters_type rotate(std::span<letter_type const> s, std::size_t k) {
      letters_type out;
      out.reserve(s.size());
      out.insert(out.end(), s.begin() + k, s.end());
      out.insert(out.end(), s.begin(), s.begin() + k);
      return out;
    }
  }  // namespace detail

  // A freely reduced word over a fixed alphabet. The empty word is the identity.
  class Word {
   public:
    Word() = default;

    explicit Word(AlphabetPtr alphabet) : _alphabet(std::move(alphabet)) {}

    // Validates letters and freely reduces.
    Word(AlphabetPtr alphabet, letters_type raw)
        : _alphabet(std::move(alphabet)), _letters(std::move(raw)) {
      std::size_t const bound = 2 * (_alphabet ? _alphabet->size() : 0);
      for (auto l : _letters) {
        if (l >= bound) {
          throw InvalidLetter("letter " + std::to_string(l)
                              + " out of range for alphabet of size "
                              + std::to_string(bound / 2));
        }
      }
      detail::free_reduce(_letters);
    }

    // Trusted constructor: `reduced` must already be freely reduced and valid.
    static Word from_reduced(AlphabetPtr alphabet, letters_type reduced) {
      Word w(std::move(alphabet));
      w._letters = std::move(reduced);
      return w;
    }

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    letters_type const& letters() const noexcept {
      return _letters;
    }
    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    letter_type operator[](std::size_t i) const {
      return _letters[i];
    }

    friend bool operator==(Word const& x, Word const& y) {
      return x._letters == y._letters && same_alphabet(x._alphabet, y._alphabet);
    }

    // Shortlex.
    friend std::strong_ordering operator<=>(Word const& x, Word const& y) {
      if (x.size() != y.size()) {
        return x.size() <=> y.size();
      }
      return x._letters <=> y._letters;
    }

   private:
    AlphabetPtr  _alphabet;
    letters_type _letters;
  };

  inline Word normalize(AlphabetPtr const& alphabet, letters_type raw) {
    return Word(alphabet, std::move(raw));
  }

  inline Word identity(AlphabetPtr const& alphabet) {
    return Word(alphabet);
  }

  inline Word letter_word(AlphabetPtr const& alphabet, std::size_t gen, int sign = 1) {
    return Word(alphabet, {make_letter(gen, sign < 0)});
  }

  inline void check_same_alphabet(Word const& u, Word const& v) {
    if (!same_alphabet(u.alphabet(), v.alphabet())) {
      throw AlphabetMismatch("words are over different alphabets");
    }
  }

  inline Word product(Word const& u, Word const& v) {
    check_same_alphabet(u, v);
    letters_type out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u.letters().begin(), u.letters().end());
    out.insert(out.end(), v.letters().begin(), v.letters().end());
    detail::free_reduce(out);
    return Word::from_reduced(u.alphabet(), std::move(out));
  }

  template <typename... Words>
  Word product(Word const& u, Word const& v, Words const&... rest) {
    return product(product(u, v), rest...);
  }

  inline Word inverse(Word const& u) {
    return Word::from_reduced(u.alphabet(), detail::inverse(u.letters()));
  }

  inline Word power(Word const& u, long long k) {
    Word base = k < 0 ? inverse(u) : u;
    Word out(u.alphabet());
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) {
      out = product(out, base);
    }
    return out;
  }

  // x y x^-1
  inline Word conjugate(Word const& x, Word const& by) {
    return product(by, x, inverse(by));
  }

  // x y x^-1 y^-1
  inline Word commutator(Word const& x, Word const& y) {
    return product(x, y, inverse(x), inverse(y));
  }

  inline bool is_cyclically_reduced(Word const& u) {
    return detail::is_cyclically_reduced(u.letters());
  }

  struct CyclicNormalForm {
    Word conjugator;
    Word core;
  };

  // u = conjugator * core * conjugator^-1 holds exactly in the free group, with
  // core the least rotation of the cyclic reduction of u.
  inline CyclicNormalForm cyclic_normalize(Word const& u) {
    auto const&  w    = u.letters();
    std::size_t  peel = detail::cyclic_peel(w);
    letters_type mid(w.begin() + peel, w.end() - peel);
    std::size_t  k = detail::least_rotation(mid);

    letters_type conj(w.begin(), w.begin() + peel);
    conj.insert(conj.end(), mid.begin(), mid.begin() + k);
    detail::free_reduce(conj);
    return {Word::from_reduced(u.alphabet(), std::move(conj)),
            Word::from_reduced(u.alphabet(), detail::rotate(mid, k))};
  }

  inline Word cyclic_core(Word const& u) {
    auto const& w    = u.letters();
    std::size_t peel = detail::cyclic_peel(w);
    return Word::from_reduced(u.alphabet(), letters_type(w.begin() + peel, w.end() - peel));
  }

  // Canonical representative of the conjugacy class of u.
  inline Word canonical_cyclic(Word const& u) {
    return cyclic_normalize(u).core;
  }

  // All distinct rotations, starting with u itself.
  inline std::vector<Word> cyclic_shifts(Word const& u) {
    if (!is_cyclically_reduced(u)) {
      throw NotCyclicallyReduced("cyclic_shifts requires a cyclically reduced word");
    }
    std::vector<Word> out;
    if (u.empty()) {
      out.push_back(u);
      return out;
    }
    std::size_t p = detail::primitive_period(u.letters());
    for (std::size_t k = 0; k < p; ++k) {
      out.push_back(Word::from_reduced(u.alphabet(), detail::rotate(u.letters(), k)));
    }
    return out;
  }

  struct ProperPower {
    Word        root;
    std::size_t exponent;
  };

  // Maximal decomposition u = root^e with e >= 2, if one exists.
  inline std::optional<ProperPower> is_proper_power(Word const& u) {
    if (u.empty()) {
      return std::nullopt;
    }
    std::size_t p = detail::primitive_period(u.letters());
    if (p == u.size()) {
      return std::nullopt;
    }
    return ProperPower{
        Word::from_reduced(u.alphabet(), letters_type(u.letters().begin(), u.letters().begin() + p)),
        u.size() / p};
  }

  inline std::vector<long long> exponent_sums(Word const& u) {
    std::vector<long long> out(u.alphabet() ? u.alphabet()->size() : 0, 0);
    for (auto l : u.letters()) {
      out[generator_of(l)] += is_inverted(l) ? -1 : 1;
    }
    return out;
  }

  // Total number of occurrences of gen, ignoring sign.
  inline std::size_t occurrences(Word const& u, std::size_t gen) {
    return std::count_if(u.letters().begin(), u.letters().end(),
                         [gen](letter_type l) { return generator_of(l) == gen; });
  }

  ////////////////////////////////////////////////////////////////////////
  // Text syntax: whitespace separated `ident` or `ident^k` (k nonzero), `eps`
  // for the empty word.
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline letters_type parse_letters(Alphabet const& alphabet,
                                      std::string_view text,
                                      std::size_t      line = 0,
                                      std::size_t      col0 = 1) {
      letters_type out;
      std::size_t  i = 0;
      while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
          continue;
        }
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
          ++i;
        }
        std::string_view token = text.substr(start, i - start);
        std::size_t      col   = col0 + start;
        if (token == "eps") {
          continue;
        }
        std::string_view name = token;
        long long        exp  = 1;
        if (auto caret = token.find('^'); caret != std::string_view::npos) {
          name                 = token.substr(0, caret);
          std::string_view num = token.substr(caret + 1);
          if (!num.empty() && num.front() == '+') {
            num.remove_prefix(1);
          }
          auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), exp);
          if (num.empty() || ec != std::errc() || ptr != num.data() + num.size()) {
            throw ParseError("malformed exponent in '" + std::string(token) + "'", line, col);
          }
          if (exp == 0) {
            throw ParseError("zero exponent in '" + std::string(token) + "'", line, col);
          }
        }
        if (!Alphabet::valid_name(name)) {
          throw ParseError("malformed generator '" + std::string(name) + "'", line, col);
        }
        auto gen = alphabet.index(std::string(name));
        if (!gen) {
          throw UnknownGenerator("unknown generator '" + std::string(name) + "'", line, col);
        }
        letter_type l = make_letter(*gen, exp < 0);
        out.insert(out.end(), static_cast<std::size_t>(exp < 0 ? -exp : exp), l);
      }
      return out;
    }
  }  // namespace detail

  inline Word parse_word(AlphabetPtr const& alphabet, std::string_view text) {
    return Word(alphabet, detail::parse_letters(*alphabet, text));
  }

  inline std::string to_string(Word const& u) {
    if (u.empty()) {
      return "eps";
    }
    std::string out;
    auto const& w = u.letters();
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) {
        ++j;
      }
      long long run = static_cast<long long>(j - i) * (is_inverted(w[i]) ? -1 : 1);
      if (!out.empty()) {
        out += ' ';
      }
      out += u.alphabet()->name(generator_of(w[i]));
      if (run != 1) {
        out += '^' + std::to_string(run);
      }
      i = j;
    }
    return out;
  }

}  // namespace wreathkit

#endif  // WREATHKIT_WORDS_HPP_
