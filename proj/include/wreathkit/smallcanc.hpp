#ifndef WREATHKIT_SMALLCANC_HPP_
#define WREATHKIT_SMALLCANC_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "presentation.hpp"
#include "rational.hpp"
#include "snf.hpp"
#include "words.hpp"

namespace wreathkit {

  ////////////////////////////////////////////////////////////////////////
  // Symmetrization
  ////////////////////////////////////////////////////////////////////////

  inline void check_relators(Presentation const& p) {
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
      if (p.relators[k].empty()) {
        throw EmptyRelator("relator " + std::to_string(k + 1) + " is empty");
      }
      if (!is_cyclically_reduced(p.relators[k])) {
        throw NotCyclicallyReduced("relator " + std::to_string(k + 1)
                                   + " is not cyclically reduced");
      }
    }
  }

  // Closure under cyclic shifts and inversion, without duplicates, in shortlex
  // order.
  inline std::vector<Word> symmetrize(Presentation const& p) {
    check_relators(p);
    std::vector<Word> out;
    for (auto const& r : p.relators) {
      for (auto const& s : cyclic_shifts(r)) {
        out.push_back(s);
      }
      for (auto const& s : cyclic_shifts(inverse(r))) {
        out.push_back(s);
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  namespace detail {

    // Suffix array by prefix doubling on cyclic shifts (Manber-Myers with
    // counting sort). `s` must end with a unique smallest symbol.
    inline std::vector<std::uint32_t> suffix_array(std::vector<std::uint32_t> const& s,
                                                   std::size_t                       sigma) {
      std::size_t const          n = s.size();
      std::vector<std::uint32_t> p(n), c(n), pn(n), cn(n);
      std::vector<std::uint32_t> cnt(std::max(sigma, n) + 1, 0);
      for (auto x : s) {
        ++cnt[x];
      }
      for (std::size_t i = 1; i < cnt.size(); ++i) {
        cnt[i] += cnt[i - 1];
      }
      for (std::size_t i = n; i-- > 0;) {
        p[--cnt[s[i]]] = static_cast<std::uint32_t>(i);
      }
      std::size_t classes = 1;
      c[p[0]]             = 0;
      for (std::size_t i = 1; i < n; ++i) {
        if (s[p[i]] != s[p[i - 1]]) {
          ++classes;
        }
        c[p[i]] = static_cast<std::uint32_t>(classes - 1);
      }
      for (std::size_t h = 1; h < n && classes < n; h <<= 1) {
        for (std::size_t i = 0; i < n; ++i) {
          pn[i] = static_cast<std::uint32_t>((p[i] + n - h) % n);
        }
        std::fill(cnt.begin(), cnt.begin() + classes, 0);
        for (std::size_t i = 0; i < n; ++i) {
          ++cnt[c[pn[i]]];
        }
        for (std::size_t i = 1; i < classes; ++i) {
          cnt[i] += cnt[i - 1];
        }
        for (std::size_t i = n; i-- > 0;) {
          p[--cnt[c[pn[i]]]] = pn[i];
        }
        cn[p[0]] = 0;
        classes  = 1;
        for (std::size_t i = 1; i < n; ++i) {
          if (c[p[i]] != c[p[i - 1]] || c[(p[i] + h) % n] != c[(p[i - 1] + h) % n]) {
            ++classes;
          }
          cn[p[i]] = static_cast<std::uint32_t>(classes - 1);
        }
        c.swap(cn);
      }
      return p;
    }

    // Kasai: lcp[r] = LCP(sa[r], sa[r + 1]).
    inline std::vector<std::uint32_t> lcp_array(std::vector<std::uint32_t> const& s,
                                                std::vector<std::uint32_t> const& sa) {
      std::size_t const          n = s.size();
      std::vector<std::uint32_t> rank(n), lcp(n, 0);
      for (std::size_t r = 0; r < n; ++r) {
        rank[sa[r]] = static_cast<std::uint32_t>(r);
      }
      std::size_t k = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (rank[i] + 1 == n) {
          k = 0;
          continue;
        }
        std::size_t j = sa[rank[i] + 1];
        while (i + k < n && j + k < n && s[i + k] == s[j + k]) {
          ++k;
        }
        lcp[rank[i]] = static_cast<std::uint32_t>(k);
        if (k > 0) {
          --k;
        }
      }
      return lcp;
    }

    // One conjugacy class of symmetrized relators: `word` is its canonical
    // rotation, and the distinct elements of the symmetrized set are the
    // rotations by 0 .. period-1.
    struct RelatorClass {
      letters_type word;
      std::size_t  period;
    };

    // Per-element maximal piece lengths for the symmetrized set.
    struct PieceAnalysis {
      std::vector<RelatorClass>                    classes;
      std::vector<std::array<std::size_t, 2>>      relator_classes;  // relator -> (r, r^-1)
      std::vector<std::size_t>                     element_start;    // class -> first element
      std::vector<std::size_t>                     best;             // element -> max piece
      std::vector<std::optional<std::size_t>>      partner;          // element -> other slot
      std::size_t num_elements() const {
        return best.size();
      }
      std::pair<std::size_t, std::size_t> locate(std::size_t element) const {
        auto it = std::upper_bound(element_start.begin(), element_start.end(), element);
        std::size_t c = static_cast<std::size_t>(it - element_start.begin()) - 1;
        return {c, element - element_start[c]};
      }
      letters_type element_word(std::size_t element) const {
        auto [c, off] = locate(element);
        return rotate(classes[c].word, off);
      }
    };

    inline PieceAnalysis analyze_pieces(Presentation const& p) {
      check_relators(p);
      PieceAnalysis                       a;
      std::map<letters_type, std::size_t> index;
      auto                                class_of = [&](letters_type const& w) {
        std::size_t  k   = least_rotation(w);
        letters_type can = rotate(w, k);
        auto [it, fresh] = index.emplace(can, a.classes.size());
        if (fresh) {
          a.classes.push_back({can, primitive_period(can)});
        }
        return it->second;
      };
      for (auto const& r : p.relators) {
        std::size_t c0 = class_of(r.letters());
        std::size_t c1 = class_of(inverse(r.letters()));
        a.relator_classes.push_back({c0, c1});
      }

      // Text: for each class its word twice, then a unique separator. Letters
      // are shifted past the sentinel 0; separators sit above all letters.
      std::uint32_t const        sep_base = static_cast<std::uint32_t>(2 * p.num_generators() + 1);
      std::vector<std::uint32_t> text;
      std::vector<std::int64_t>  owner;  // text position -> element, or -1
      std::vector<std::size_t>   length_of;
      std::size_t                elements = 0;
      for (std::size_t c = 0; c < a.classes.size(); ++c) {
        auto const& w = a.classes[c].word;
        a.element_start.push_back(elements);
        for (int copy = 0; copy < 2; ++copy) {
          for (std::size_t i = 0; i < w.size(); ++i) {
            text.push_back(w[i] + 1);
            owner.push_back(copy == 0 && i < a.classes[c].period
                                ? static_cast<std::int64_t>(elements + i)
                                : -1);
          }
        }
        text.push_back(sep_base + static_cast<std::uint32_t>(c));
        owner.push_back(-1);
        for (std::size_t i = 0; i < a.classes[c].period; ++i) {
          length_of.push_back(w.size());
        }
        elements += a.classes[c].period;
      }
      text.push_back(0);
      owner.push_back(-1);

      a.best.assign(elements, 0);
      a.partner.assign(elements, std::nullopt);
      if (elements == 0) {
        return a;
      }
      auto sa  = suffix_array(text, sep_base + a.classes.size() + 1);
      auto lcp = lcp_array(text, sa);

      for (std::size_t r = 0; r < sa.size(); ++r) {
        std::int64_t e = owner[sa[r]];
        if (e < 0) {
          continue;
        }
        std::size_t const len  = length_of[e];
        std::size_t&      best = a.best[e];
        auto              consider = [&](std::size_t r2, std::size_t run) {
          std::int64_t f = owner[sa[r2]];
          if (f < 0) {
            return;
          }
          std::size_t cand = std::min({run, len, length_of[f]});
          if (cand > best || (cand == best && !a.partner[e])) {
            best         = cand;
            a.partner[e] = static_cast<std::size_t>(f);
          }
        };
        std::size_t run = SIZE_MAX;
        for (std::size_t r2 = r + 1; r2 < sa.size(); ++r2) {
          run = std::min<std::size_t>(run, lcp[r2 - 1]);
          if (run <= best || best == len) {
            break;
          }
          consider(r2, run);
        }
        run = SIZE_MAX;
        for (std::size_t r2 = r; r2-- > 0;) {
          run = std::min<std::size_t>(run, lcp[r2]);
          if (run <= best || best == len) {
            break;
          }
          consider(r2, run);
        }
      }
      return a;
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Pieces and C'(lambda)
  ////////////////////////////////////////////////////////////////////////

  struct PieceReport {
    std::size_t              symmetrized_size = 0;
    std::vector<std::size_t> max_piece;  // per input relator
    Rational                 max_ratio{0};
    // relator attaining max_ratio, if any relator exists
    std::optional<std::size_t> argmax;
  };

  inline PieceReport pieces(Presentation const& p) {
    auto        a = detail::analyze_pieces(p);
    PieceReport report;
    report.symmetrized_size = a.num_elements();
    auto class_max          = [&](std::size_t c) {
      std::size_t m = 0;
      for (std::size_t e = a.element_start[c]; e < a.element_start[c] + a.classes[c].period; ++e) {
        m = std::max(m, a.best[e]);
      }
      return m;
    };
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
      std::size_t m = std::max(class_max(a.relator_classes[k][0]), class_max(a.relator_classes[k][1]));
      report.max_piece.push_back(m);
      Rational ratio(static_cast<long long>(m), static_cast<long long>(p.relators[k].size()));
      if (!report.argmax || ratio > report.max_ratio) {
        report.max_ratio = ratio;
        report.argmax    = k;
      }
    }
    return report;
  }

  struct PieceWitness {
    Word        piece;
    Word        relator;  // symmetrized relator having `piece` as a prefix
    Word        other;    // a second, distinct one
    std::size_t relator_index;  // input relators they come from
    std::size_t other_index;
  };

  struct SmallCancellationResult {
    bool                        holds = true;
    std::optional<PieceWitness> witness;
  };

  // Every piece p of every symmetrized relator r must satisfy |p| < lambda |r|.
  inline SmallCancellationResult check_small_cancellation(Presentation const& p, Rational lambda) {
    if (lambda <= 0) {
      throw InvalidArgument("lambda must be positive");
    }
    auto a = detail::analyze_pieces(p);
    auto source = [&](std::size_t element) {
      std::size_t c = a.locate(element).first;
      for (std::size_t k = 0; k < a.relator_classes.size(); ++k) {
        if (a.relator_classes[k][0] == c || a.relator_classes[k][1] == c) {
          return k;
        }
      }
      return std::size_t(0);
    };
    for (std::size_t e = 0; e < a.num_elements(); ++e) {
      long long piece = static_cast<long long>(a.best[e]);
      long long len   = static_cast<long long>(a.classes[a.locate(e).first].word.size());
      if (Rational(piece, 1) < lambda * len) {
        continue;
      }
      SmallCancellationResult res;
      res.holds          = false;
      letters_type r     = a.element_word(e);
      std::size_t  other = a.partner[e].value_or(e);
      res.witness        = PieceWitness{
          Word::from_reduced(p.alphabet, letters_type(r.begin(), r.begin() + a.best[e])),
          Word::from_reduced(p.alphabet, r),
          Word::from_reduced(p.alphabet, a.element_word(other)),
          source(e),
          source(other)};
      return res;
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Dehn's algorithm
  ////////////////////////////////////////////////////////////////////////

  enum class WordProblemResult { trivial, nontrivial };

  inline std::string to_string(WordProblemResult r) {
    return r == WordProblemResult::trivial ? "trivial" : "nontrivial";
  }

  // Dehn's algorithm over a C'(1/6) presentation. Greendlinger's lemma makes
  // it a decision procedure there, so the condition is checked up front.
  class DehnSolver {
   public:
    explicit DehnSolver(Presentation p) : _p(std::move(p)) {
      auto sc = check_small_cancellation(_p, Rational(1, 6));
      if (!sc.holds) {
        throw PreconditionViolated("presentation is not C'(1/6): piece "
                                   + to_string(sc.witness->piece) + " in "
                                   + to_string(sc.witness->relator));
      }
      // relators in input order, each followed by its inverse, rotations
      // starting from the canonical one
      std::map<letters_type, bool> seen;
      for (auto const& r : _p.relators) {
        for (auto const& w : {r.letters(), detail::inverse(r.letters())}) {
          std::size_t start  = detail::least_rotation(w);
          std::size_t period = detail::primitive_period(w);
          for (std::size_t i = 0; i < period; ++i) {
            auto rot = detail::rotate(w, (start + i) % w.size());
            if (seen.emplace(rot, true).second) {
              _symmetrized.push_back(std::move(rot));
            }
          }
        }
      }
    }

    Presentation const& presentation() const noexcept {
      return _p;
    }

    std::size_t last_steps() const noexcept {
      return _steps;
    }

    WordProblemResult solve(Word const& w) {
      if (!same_alphabet(w.alphabet(), _p.alphabet)) {
        throw AlphabetMismatch("word over a different alphabet");
      }
      letters_type cur = cyclic_core(w).letters();
      _steps           = 0;
      while (!cur.empty() && reduce_once(cur)) {
        ++_steps;
      }
      return cur.empty() ? WordProblemResult::trivial : WordProblemResult::nontrivial;
    }

   private:
    // Replace the first (relator-major, then position) cyclic subword that is
    // more than half of a symmetrized relator by the inverse of its
    // complement.
    bool reduce_once(letters_type& w) const {
      std::size_t const n = w.size();
      for (auto const& r : _symmetrized) {
        if (2 * n <= r.size()) {
          continue;
        }
        for (std::size_t pos = 0; pos < n; ++pos) {
          if (w[pos] != r[0]) {
            continue;
          }
          std::size_t limit = std::min(n, r.size());
          std::size_t k     = 0;
          while (k < limit && w[(pos + k) % n] == r[k]) {
            ++k;
          }
          if (2 * k <= r.size()) {
            continue;
          }
          letters_type next = detail::inverse(std::span<letter_type const>(r).subspan(k));
          for (std::size_t i = k; i < n; ++i) {
            next.push_back(w[(pos + i) % n]);
          }
          detail::free_reduce(next);
          std::size_t peel = detail::cyclic_peel(next);
          w.assign(next.begin() + peel, next.end() - peel);
          return true;
        }
      }
      return false;
    }

    Presentation              _p;
    std::vector<letters_type> _symmetrized;
    std::size_t               _steps = 0;
  };

  inline WordProblemResult dehn_word_problem(Presentation const& p, Word const& w) {
    return DehnSolver(p).solve(w);
  }

  ////////////////////////////////////////////////////////////////////////
  // Tietze elimination
  ////////////////////////////////////////////////////////////////////////

  // Solves the first relator in which `gen` occurs exactly once for `gen`,
  // substitutes into the remaining relators and drops both. Relators that
  // become trivial are dropped as well.
  inline Presentation tietze_eliminate(Presentation const& p, std::size_t gen) {
    if (gen >= p.num_generators()) {
      throw InvalidArgument("generator index out of range");
    }
    std::optional<std::size_t> which;
    for (std::size_t k = 0; k < p.relators.size() && !which; ++k) {
      if (occurrences(p.relators[k], gen) == 1) {
        which = k;
      }
    }
    if (!which) {
      throw CannotEliminate("no relator contains " + p.alphabet->name(gen) + " exactly once");
    }
    // r = A g^e B  =>  g^e = (B A)^-1
    auto const& r   = p.relators[*which].letters();
    std::size_t at  = static_cast<std::size_t>(
        std::find_if(r.begin(), r.end(), [gen](letter_type l) { return generator_of(l) == gen; })
        - r.begin());
    letters_type ba(r.begin() + at + 1, r.end());
    ba.insert(ba.end(), r.begin(), r.begin() + at);
    letters_type image = is_inverted(r[at]) ? ba : detail::inverse(ba);
    letters_type image_inv = detail::inverse(image);

    std::vector<std::string> names;
    std::vector<std::size_t> remap(p.num_generators(), 0);
    for (std::size_t g = 0; g < p.num_generators(); ++g) {
      if (g != gen) {
        remap[g] = names.size();
        names.push_back(p.alphabet->name(g));
      }
    }
    auto relabel = [&](letter_type l) { return make_letter(remap[generator_of(l)], is_inverted(l)); };

    Presentation out(Alphabet::make(std::move(names)));
    for (std::size_t k = 0; k < p.relators.size(); ++k) {
      if (k == *which) {
        continue;
      }
      letters_type w;
      for (auto l : p.relators[k].letters()) {
        if (generator_of(l) == gen) {
          auto const& sub = is_inverted(l) ? image_inv : image;
          for (auto m : sub) {
            w.push_back(relabel(m));
          }
        } else {
          w.push_back(relabel(l));
        }
      }
      detail::free_reduce(w);
      std::size_t peel = detail::cyclic_peel(w);
      letters_type core(w.begin() + peel, w.end() - peel);
      if (!core.empty()) {
        out.relators.push_back(Word::from_reduced(out.alphabet, std::move(core)));
      }
    }
    return out;
  }

  inline Presentation tietze_eliminate(Presentation const& p, std::string const& gen) {
    auto g = p.alphabet->index(gen);
    if (!g) {
      throw InvalidArgument("unknown generator '" + gen + "'");
    }
    return tietze_eliminate(p, *g);
  }

  ////////////////////////////////////////////////////////////////////////
  // Abelianization
  ////////////////////////////////////////////////////////////////////////

  struct Abelianization {
    std::vector<Integer> divisors;  // nonzero elementary divisors, 1s included
    std::size_t          free_rank = 0;
  };

  inline IntMatrix exponent_sum_matrix(Presentation const& p) {
    IntMatrix m;
    for (auto const& r : p.relators) {
      auto sums = exponent_sums(r);
      m.emplace_back(sums.begin(), sums.end());
    }
    return m;
  }

  inline Abelianization presentation_abelianization(Presentation const& p) {
    auto           snf = smith_normal_form(exponent_sum_matrix(p), p.num_generators());
    Abelianization ab;
    for (auto const& d : snf.diagonal) {
      if (d != 0) {
        ab.divisors.push_back(d);
      }
    }
    ab.free_rank = p.num_generators() - snf.rank;
    return ab;
  }

  inline bool is_trivial(Abelianization const& ab) {
    return ab.free_rank == 0
           && std::all_of(ab.divisors.begin(), ab.divisors.end(), [](auto const& d) { return d == 1; });
  }

  // C'(1/6) together with no relator being a proper power gives a torsion-free
  // group.
  inline bool torsion_free_certificate(Presentation const& p) {
    if (!check_small_cancellation(p, Rational(1, 6)).holds) {
      return false;
    }
    return std::none_of(p.relators.begin(), p.relators.end(),
                        [](Word const& r) { return is_proper_power(r).has_value(); });
  }

}  // namespace wreathkit

#endif  // WREATHKIT_SMALLCANC_HPP_
