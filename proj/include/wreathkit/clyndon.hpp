#ifndef WREATHKIT_CLYNDON_HPP_
#define WREATHKIT_CLYNDON_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cosetenum.hpp"
#include "fingrp.hpp"
#include "presentation.hpp"
#include "smallcanc.hpp"
#include "stallings.hpp"
#include "wlp.hpp"

namespace wreathkit {

  ////////////////////////////////////////////////////////////////////////
  // Free products and W(A * B, A)
  ////////////////////////////////////////////////////////////////////////

  struct FreeProductPresentation {
    Presentation first;
    Presentation second;
    Presentation combined;  // generators of `first`, then of `second`

    Word from_first(Word const& w) const {
      return Word::from_reduced(combined.alphabet, w.letters());
    }
    Word from_second(Word const& w) const {
      letters_type out;
      auto const   shift = static_cast<letter_type>(2 * first.num_generators());
      for (auto l : w.letters()) {
        out.push_back(l + shift);
      }
      return Word::from_reduced(combined.alphabet, std::move(out));
    }
  };

  inline FreeProductPresentation free_product(Presentation first, Presentation second) {
    auto names = first.alphabet->names();
    for (auto const& n : second.alphabet->names()) {
      if (first.alphabet->index(n)) {
        throw InvalidArgument("factors share the generator name '" + n + "'");
      }
      names.push_back(n);
    }
    FreeProductPresentation fp{std::move(first), std::move(second),
                               Presentation(Alphabet::make(std::move(names)))};
    for (auto const& r : fp.first.relators) {
      fp.combined.add_relator(fp.from_first(r));
    }
    for (auto const& r : fp.second.relators) {
      fp.combined.add_relator(fp.from_second(r));
    }
    return fp;
  }

  namespace detail {
    inline EnumeratedGroup enumerate_factor(Presentation const& p, std::size_t budget) {
      auto t = todd_coxeter(p, {}, budget);
      if (!t.closed()) {
        throw RequiresFiniteFactors("factor enumeration did not close within "
                                    + std::to_string(budget) + " cosets");
      }
      return quotient_group(t);
    }
  }  // namespace detail

  // Adds [h_p, t h_q t^-1] for generators h_p, h_q of the first factor and t
  // the representative words of the nontrivial elements of the second.
  inline Presentation wgh_presentation(FreeProductPresentation const& fp,
                                       std::size_t budget = default_max_cosets()) {
    detail::enumerate_factor(fp.first, budget);
    auto        B = detail::enumerate_factor(fp.second, budget);
    Presentation out = fp.combined;
    auto const   rank_a = fp.first.num_generators();
    for (std::size_t t = 1; t < B.representatives.size(); ++t) {
      Word tw = fp.from_second(B.representatives[t]);
      for (std::size_t p = 0; p < rank_a; ++p) {
        for (std::size_t q = 0; q < rank_a; ++q) {
          auto hp = letter_word(out.alphabet, p), hq = letter_word(out.alphabet, q);
          out.add_relator(commutator(hp, conjugate(hq, tw)));
        }
      }
    }
    return out;
  }

  // The natural structure on an enumerated W(A * B, A): epsilon kills A, the
  // summand at t is the conjugate of the image of A by t's representative.
  inline WreathLikeProduct wgh_wreath_structure(FreeProductPresentation const& fp,
                                                EnumeratedGroup const&         W,
                                                std::size_t budget = default_max_cosets()) {
    auto                      B = detail::enumerate_factor(fp.second, budget);
    std::vector<element_type> images(fp.combined.num_generators(), 0);
    for (std::size_t g = 0; g < fp.second.num_generators(); ++g) {
      images[fp.first.num_generators() + g] = B.generator_images[g];
    }
    std::vector<element_type> eps;
    for (auto const& w : W.representatives) {
      eps.push_back(evaluate(B.group, images, w));
    }
    WreathLikeProduct out;
    out.W       = W.group;
    out.B       = B.group;
    out.epsilon = Homomorphism{W.group, B.group, std::move(eps)};
    std::vector<element_type> a_gens(W.generator_images.begin(),
                                     W.generator_images.begin()
                                         + static_cast<std::ptrdiff_t>(fp.first.num_generators()));
    auto A_e = generated_subgroup(W.group, a_gens);
    for (element_type t = 0; t < B.group.order(); ++t) {
      element_type s = evaluate(W.group, W.generator_images, fp.from_second(B.representatives[t]));
      ElementSet   At;
      for (auto a : A_e) {
        At.push_back(W.group.conj(a, s));
      }
      std::sort(At.begin(), At.end());
      out.summands.push_back(std::move(At));
    }
    out.action  = regular_action(B.group);
    out.section = canonical_section(out.epsilon);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // The F7n family
  ////////////////////////////////////////////////////////////////////////

  struct F7nFamily {
    AlphabetPtr       alphabet;  // f1 .. f_{kn}
    std::vector<Word> relators;  // r_1 .. r_n
    bool              warning = false;  // parameters outside k >= 7, m >= 2

    Presentation presentation() const {
      return Presentation(alphabet, relators);
    }
  };

  // r_i = f_{(i-1)k+1} f_{(i-1)k+2}^m ... f_{ik}^m
  inline F7nFamily f7n_generators(std::size_t k, std::size_t n, std::size_t m) {
    if (k < 2) {
      throw InvalidParameter("k must be at least 2");
    }
    if (n < 1 || m < 1) {
      throw InvalidParameter("n and m must be at least 1");
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= k * n; ++i) {
      names.push_back("f" + std::to_string(i));
    }
    F7nFamily out{Alphabet::make(std::move(names)), {}, k < 7 || m < 2};
    for (std::size_t i = 0; i < n; ++i) {
      letters_type r{make_letter(i * k)};
      for (std::size_t j = 1; j < k; ++j) {
        r.insert(r.end(), m, make_letter(i * k + j));
      }
      out.relators.push_back(Word::from_reduced(out.alphabet, std::move(r)));
    }
    return out;
  }

  struct F7nReport {
    bool                        c16         = false;
    bool                        free_factor = false;
    std::optional<std::size_t>  quotient_free_rank;  // set when no relator survives
    bool                        warning     = false;
    Rational                    max_ratio;
    std::optional<PieceWitness> witness;
  };

  inline F7nReport verify_f7n(std::size_t k, std::size_t n, std::size_t m) {
    auto      fam = f7n_generators(k, n, m);
    auto      p   = fam.presentation();
    F7nReport report;
    report.warning = fam.warning;
    auto sc        = check_small_cancellation(p, Rational(1, 6));
    report.c16     = sc.holds;
    report.witness = sc.witness;
    report.max_ratio = pieces(p).max_ratio;

    std::vector<Word> basis;
    for (std::size_t i = 0; i < n; ++i) {
      basis.push_back(fam.relators[i]);
      for (std::size_t j = 1; j < k; ++j) {
        basis.push_back(letter_word(fam.alphabet, i * k + j));
      }
    }
    report.free_factor = is_basis_of_ambient(fam.alphabet, basis);

    Presentation q = p;
    try {
      for (std::size_t i = 0; i < n; ++i) {
        q = tietze_eliminate(q, "f" + std::to_string(i * k + 1));
      }
      if (q.relators.empty()) {
        report.quotient_free_rank = q.num_generators();
      }
    } catch (CannotEliminate const&) {
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal closures of free factors
  ////////////////////////////////////////////////////////////////////////

  // F = H * L for a certified basis H u L of F.
  class FreeSplit {
   public:
    FreeSplit(std::vector<Word> H, std::vector<Word> L) : _H(std::move(H)), _L(std::move(L)) {
      std::vector<Word> all = _H;
      all.insert(all.end(), _L.begin(), _L.end());
      if (all.empty() || !is_basis_of_ambient(all.front().alphabet(), all)) {
        throw InvalidSplit("H and L do not form a basis of the ambient free group");
      }
      _rewriter.emplace(std::move(all));
    }

    AlphabetPtr const& ambient() const {
      return _H.empty() ? _L.front().alphabet() : _H.front().alphabet();
    }
    std::vector<Word> const& H() const noexcept {
      return _H;
    }
    std::vector<Word> const& L() const noexcept {
      return _L;
    }

    // Image of w under F -> F / <<H>> = L, written back in F.
    Word coset_label(Word const& w) const {
      auto         u = _rewriter->rewrite(w);
      letters_type kept;
      auto const   cut = static_cast<letter_type>(2 * _H.size());
      for (auto l : u.letters()) {
        if (l >= cut) {
          kept.push_back(l);
        }
      }
      return _rewriter->expand(normalize(_rewriter->letters(), std::move(kept)));
    }

    bool in_normal_closure(Word const& w) const {
      return coset_label(w).empty();
    }

   private:
    std::vector<Word>            _H;
    std::vector<Word>            _L;
    std::optional<BasisRewriter> _rewriter;
  };

  inline Word coset_of_normal_closure(FreeSplit const& split, Word const& w) {
    return split.coset_label(w);
  }

  // TS = {ts}, checked to lie in pairwise distinct cosets of <<H>> in F.
  inline std::vector<Word> compose_transversals(std::vector<Word> const& T,
                                                std::vector<Word> const& S,
                                                FreeSplit const&         context) {
    std::vector<Word>              out;
    std::map<Word, std::size_t>    seen;
    for (auto const& t : T) {
      for (auto const& s : S) {
        Word ts    = product(t, s);
        Word label = context.coset_label(ts);
        auto [it, fresh] = seen.emplace(label, out.size());
        if (!fresh) {
          throw NotATransversal(to_string(out[it->second]) + " and " + to_string(ts)
                                + " lie in the same coset");
        }
        out.push_back(std::move(ts));
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Malnormality
  ////////////////////////////////////////////////////////////////////////

  struct MalnormalReport {
    bool        holds   = true;
    bool        bounded = false;  // true: only elements up to `radius` were checked
    std::size_t radius  = 0;
    std::size_t checked = 0;
    std::string witness;
  };

  inline MalnormalReport check_malnormal(FiniteGroup const& G, ElementSet const& H) {
    MalnormalReport r;
    for (element_type g = 0; g < G.order(); ++g) {
      if (contains(H, g)) {
        continue;
      }
      ++r.checked;
      for (auto h : H) {
        if (h != 0 && contains(H, G.conj(h, g))) {
          r.holds   = false;
          r.witness = "g=" + std::to_string(g) + " h=" + std::to_string(h);
          return r;
        }
      }
    }
    return r;
  }

  // Normal forms in A * B for finite A, B: alternating nontrivial syllables.
  struct FreeProductOfFinite {
    FiniteGroup A;
    FiniteGroup B;

    using Syllable = std::pair<int, element_type>;  // factor 0 = A, 1 = B
    using Element  = std::vector<Syllable>;

    FiniteGroup const& factor(int f) const {
      return f == 0 ? A : B;
    }

    Element multiply(Element x, Element const& y) const {
      for (auto const& s : y) {
        if (!x.empty() && x.back().first == s.first) {
          element_type v = factor(s.first).mul(x.back().second, s.second);
          if (v == 0) {
            x.pop_back();
          } else {
            x.back().second = v;
          }
        } else {
          x.push_back(s);
        }
      }
      return x;
    }

    Element inverse(Element const& x) const {
      Element out;
      for (auto it = x.rbegin(); it != x.rend(); ++it) {
        out.emplace_back(it->first, factor(it->first).inv(it->second));
      }
      return out;
    }

    // All normal forms with 1..L syllables, shortest first.
    std::vector<Element> ball(std::size_t L) const {
      std::vector<Element> out, layer{{}};
      for (std::size_t len = 1; len <= L; ++len) {
        std::vector<Element> next;
        for (auto const& x : layer) {
          for (int f = 0; f < 2; ++f) {
            if (!x.empty() && x.back().first == f) {
              continue;
            }
            for (element_type e = 1; e < factor(f).order(); ++e) {
              auto y = x;
              y.emplace_back(f, e);
              next.push_back(std::move(y));
            }
          }
        }
        out.insert(out.end(), next.begin(), next.end());
        layer = std::move(next);
      }
      return out;
    }
  };

  // H inside factor `f`; checks every g of syllable length <= L outside H.
  inline MalnormalReport check_malnormal_bounded(FreeProductOfFinite const& G, int f,
                                                 ElementSet const& H, std::size_t L) {
    MalnormalReport r;
    r.bounded = true;
    r.radius  = L;
    auto in_H = [&](FreeProductOfFinite::Element const& x) {
      return x.empty() || (x.size() == 1 && x[0].first == f && contains(H, x[0].second));
    };
    for (auto const& g : G.ball(L)) {
      if (in_H(g)) {
        continue;
      }
      ++r.checked;
      auto ginv = G.inverse(g);
      for (auto h : H) {
        if (h == 0) {
          continue;
        }
        auto c = G.multiply(G.multiply(g, {{f, h}}), ginv);
        if (in_H(c)) {
          r.holds   = false;
          r.witness = "syllables=" + std::to_string(g.size()) + " h=" + std::to_string(h);
          return r;
        }
      }
    }
    return r;
  }

  // The first factor of a free product of finite groups, to radius L.
  inline MalnormalReport check_malnormal_bounded(FreeProductPresentation const& fp, std::size_t L,
                                                 std::size_t budget = default_max_cosets()) {
    auto       A = detail::enumerate_factor(fp.first, budget);
    auto       B = detail::enumerate_factor(fp.second, budget);
    ElementSet H(A.group.order());
    std::iota(H.begin(), H.end(), 0);
    return check_malnormal_bounded(FreeProductOfFinite{A.group, B.group}, 0, H, L);
  }

}  // namespace wreathkit

#endif  // WREATHKIT_CLYNDON_HPP_
