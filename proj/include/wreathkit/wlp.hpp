#ifndef WREATHKIT_WLP_HPP_
#define WREATHKIT_WLP_HPP_

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fingrp.hpp"

namespace wreathkit {

  using Action = std::vector<std::vector<std::size_t>>;  // action[b][i]

  // Extension data W -> B with base split into summands A_i indexed by a
  // B-set I. Nothing is trusted: see verify_wreath_like.
  struct WreathLikeProduct {
    FiniteGroup               W;
    FiniteGroup               B;
    Homomorphism              epsilon;
    std::vector<ElementSet>   summands;  // A_i as element sets of W
    Action                    action;
    std::vector<element_type> section;  // section[b] in W

    std::size_t index_size() const noexcept {
      return summands.size();
    }
    ElementSet base() const {
      return kernel(epsilon);
    }
  };

  inline Action regular_action(FiniteGroup const& B) {
    Action act(B.order(), std::vector<std::size_t>(B.order()));
    for (element_type b = 0; b < B.order(); ++b) {
      for (element_type i = 0; i < B.order(); ++i) {
        act[b][i] = B.mul(b, i);
      }
    }
    return act;
  }

  inline bool is_regular(WreathLikeProduct const& x) {
    return x.action == regular_action(x.B);
  }

  inline bool is_transitive(Action const& act, std::size_t index_size) {
    if (index_size == 0) {
      return true;
    }
    std::vector<bool> seen(index_size, false);
    for (auto const& perm : act) {
      seen[perm[0]] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  inline ElementSet canonical_section(Homomorphism const& eps) {
    ElementSet sigma(eps.target.order(), UINT32_MAX);
    for (element_type w = 0; w < eps.source.order(); ++w) {
      if (sigma[eps(w)] == UINT32_MAX) {
        sigma[eps(w)] = w;
      }
    }
    return sigma;
  }

  struct WlpCheck {
    bool        ok = true;
    std::string clause;
    std::string witness;

    explicit operator bool() const noexcept {
      return ok;
    }
  };

  inline WlpCheck verify_wreath_like(WreathLikeProduct const& x) {
    auto fail = [](std::string clause, std::string witness) {
      return WlpCheck{false, std::move(clause), std::move(witness)};
    };
    auto const& W = x.W;
    auto const& B = x.B;
    if (!(x.epsilon.source == W) || !(x.epsilon.target == B)) {
      return fail("epsilon", "source or target differs from W or B");
    }
    if (!is_homomorphism(W, B, x.epsilon.image)) {
      return fail("epsilon", "not a homomorphism");
    }
    std::vector<bool> hit(B.order(), false);
    for (auto b : x.epsilon.image) {
      hit[b] = true;
    }
    for (element_type b = 0; b < B.order(); ++b) {
      if (!hit[b]) {
        return fail("epsilon", "not surjective: missing " + std::to_string(b));
      }
    }
    std::size_t const I = x.index_size();
    if (x.action.size() != B.order()) {
      return fail("action", "one permutation per element of B is required");
    }
    for (element_type b = 0; b < B.order(); ++b) {
      auto const& p = x.action[b];
      if (p.size() != I) {
        return fail("action", "permutation of wrong size for b=" + std::to_string(b));
      }
      std::vector<bool> seen(I, false);
      for (auto i : p) {
        if (i >= I || seen[i]) {
          return fail("action", "b=" + std::to_string(b) + " is not a permutation");
        }
        seen[i] = true;
      }
    }
    for (std::size_t i = 0; i < I; ++i) {
      if (x.action[0][i] != i) {
        return fail("action", "identity moves i=" + std::to_string(i));
      }
    }
    for (element_type b = 0; b < B.order(); ++b) {
      for (element_type c = 0; c < B.order(); ++c) {
        for (std::size_t i = 0; i < I; ++i) {
          if (x.action[b][x.action[c][i]] != x.action[B.mul(b, c)][i]) {
            return fail("action", "b=" + std::to_string(b) + " c=" + std::to_string(c)
                                      + " i=" + std::to_string(i));
          }
        }
      }
    }
    if (x.section.size() != B.order()) {
      return fail("section", "wrong size");
    }
    for (element_type b = 0; b < B.order(); ++b) {
      if (x.section[b] >= W.order() || x.epsilon(x.section[b]) != b) {
        return fail("section", "epsilon(section(b)) != b for b=" + std::to_string(b));
      }
    }
    auto const kernel_set = x.base();
    for (std::size_t i = 0; i < I; ++i) {
      auto const& Ai = x.summands[i];
      if (!is_subgroup(W, Ai)) {
        return fail("summand", "A_" + std::to_string(i) + " is not a subgroup");
      }
      for (auto a : Ai) {
        if (!contains(kernel_set, a)) {
          return fail("summand", "A_" + std::to_string(i) + " leaves the kernel at "
                                     + std::to_string(a));
        }
      }
    }
    for (std::size_t i = 0; i < I; ++i) {
      for (std::size_t j = i + 1; j < I; ++j) {
        for (auto a : x.summands[i]) {
          for (auto c : x.summands[j]) {
            if (W.mul(a, c) != W.mul(c, a)) {
              return fail("commuting", "A_" + std::to_string(i) + " and A_" + std::to_string(j)
                                           + " at (" + std::to_string(a) + ", "
                                           + std::to_string(c) + ")");
            }
            if (a == c && a != 0) {
              return fail("intersection", "A_" + std::to_string(i) + " and A_"
                                              + std::to_string(j) + " share "
                                              + std::to_string(a));
            }
          }
        }
      }
    }
    // commuting subgroups whose product has the product order form a direct sum
    std::vector<element_type> gens;
    std::size_t               product = 1;
    for (auto const& Ai : x.summands) {
      gens.insert(gens.end(), Ai.begin(), Ai.end());
      product *= Ai.size();
    }
    auto generated = generated_subgroup(W, gens);
    if (generated != kernel_set) {
      return fail("base", "summands generate " + std::to_string(generated.size())
                              + " elements, kernel has " + std::to_string(kernel_set.size()));
    }
    if (product != kernel_set.size()) {
      return fail("base", "sum of summands is not direct");
    }
    for (element_type w = 0; w < W.order(); ++w) {
      for (std::size_t i = 0; i < I; ++i) {
        auto const& target = x.summands[x.action[x.epsilon(w)][i]];
        for (auto a : x.summands[i]) {
          if (!contains(target, W.conj(a, w))) {
            return fail("conjugation", "w=" + std::to_string(w) + " i=" + std::to_string(i)
                                           + " a=" + std::to_string(a));
          }
        }
      }
    }
    return {};
  }

  ////////////////////////////////////////////////////////////////////////
  // Ordinary wreath products
  ////////////////////////////////////////////////////////////////////////

  // Element (f, b) with f: I -> A has id code(f) * |B| + b, where
  // code(f) = sum f(i) |A|^i.
  struct WreathCoding {
    std::size_t a_order;
    std::size_t b_order;
    std::size_t index_size;

    element_type encode(std::vector<element_type> const& f, element_type b) const {
      std::size_t code = 0;
      for (std::size_t i = index_size; i-- > 0;) {
        code = code * a_order + f[i];
      }
      return static_cast<element_type>(code * b_order + b);
    }
    std::pair<std::vector<element_type>, element_type> decode(element_type w) const {
      std::vector<element_type> f(index_size);
      std::size_t               code = w / b_order;
      for (std::size_t i = 0; i < index_size; ++i) {
        f[i] = static_cast<element_type>(code % a_order);
        code /= a_order;
      }
      return {f, static_cast<element_type>(w % b_order)};
    }
    // The element of A_i with value a.
    element_type at(std::size_t i, element_type a) const {
      std::vector<element_type> f(index_size, 0);
      f[i] = a;
      return encode(f, 0);
    }
  };

  // (f, b)(g, c) = (f * (b.g), bc) with (b.g)(i) = g(b^-1 i).
  inline WreathLikeProduct ordinary_wreath(FiniteGroup const& A, FiniteGroup const& B,
                                           Action const& action) {
    std::size_t const I = action.empty() ? 0 : action[0].size();
    if (action.size() != B.order()) {
      throw InvalidArgument("action needs one permutation per element of B");
    }
    std::size_t base_order = 1;
    for (std::size_t i = 0; i < I; ++i) {
      base_order *= A.order();
      if (base_order * B.order() > 65536) {
        throw TooLarge("wreath product larger than 65536 elements");
      }
    }
    WreathCoding const coding{A.order(), B.order(), I};
    std::size_t const  n = base_order * B.order();
    Action             inv_action(B.order(), std::vector<std::size_t>(I));
    for (element_type b = 0; b < B.order(); ++b) {
      for (std::size_t i = 0; i < I; ++i) {
        inv_action[b][action[b][i]] = i;
      }
    }
    std::vector<std::vector<element_type>> funcs(base_order);
    for (std::size_t code = 0; code < base_order; ++code) {
      funcs[code] = coding.decode(static_cast<element_type>(code * B.order())).first;
    }
    std::vector<element_type> t(n * n);
    std::vector<element_type> h(I);
    for (std::size_t x = 0; x < n; ++x) {
      auto const& f = funcs[x / B.order()];
      auto        b = static_cast<element_type>(x % B.order());
      for (std::size_t y = 0; y < n; ++y) {
        auto const& g = funcs[y / B.order()];
        auto        c = static_cast<element_type>(y % B.order());
        for (std::size_t i = 0; i < I; ++i) {
          h[i] = A.mul(f[i], g[inv_action[b][i]]);
        }
        t[x * n + y] = coding.encode(h, B.mul(b, c));
      }
    }
    WreathLikeProduct out;
    out.W = FiniteGroup::trusted(n, std::move(t));
    out.B = B;
    std::vector<element_type> eps(n);
    for (std::size_t x = 0; x < n; ++x) {
      eps[x] = static_cast<element_type>(x % B.order());
    }
    out.epsilon = Homomorphism{out.W, B, std::move(eps)};
    for (std::size_t i = 0; i < I; ++i) {
      ElementSet Ai;
      for (element_type a = 0; a < A.order(); ++a) {
        Ai.push_back(coding.at(i, a));
      }
      std::sort(Ai.begin(), Ai.end());
      out.summands.push_back(std::move(Ai));
    }
    out.action = action;
    for (element_type b = 0; b < B.order(); ++b) {
      out.section.push_back(b);
    }
    return out;
  }

  inline WreathLikeProduct ordinary_wreath(FiniteGroup const& A, FiniteGroup const& B) {
    return ordinary_wreath(A, B, regular_action(B));
  }

  ////////////////////////////////////////////////////////////////////////
  // Base calculus
  ////////////////////////////////////////////////////////////////////////

  // a = prod_i a_i with a_i in A_i, for every base element a.
  class BaseDecomposition {
   public:
    explicit BaseDecomposition(WreathLikeProduct const& x) : _I(x.index_size()) {
      _components[0] = std::vector<element_type>(_I, 0);
      std::vector<element_type> frontier{0};
      for (std::size_t i = 0; i < _I; ++i) {
        std::vector<element_type> next;
        for (auto y : frontier) {
          for (auto a : x.summands[i]) {
            element_type ya = x.W.mul(y, a);
            if (_components.count(ya) == 0) {
              auto c        = _components.at(y);
              c[i]          = a;
              _components[ya] = std::move(c);
            }
            next.push_back(ya);
          }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = std::move(next);
      }
    }

    bool in_base(element_type a) const {
      return _components.count(a) != 0;
    }

    std::vector<element_type> const& components(element_type a) const {
      auto it = _components.find(a);
      if (it == _components.end()) {
        throw NotInBase("element " + std::to_string(a) + " is not in the base");
      }
      return it->second;
    }

    std::vector<std::size_t> support(element_type a) const {
      std::vector<std::size_t> out;
      auto const&              c = components(a);
      for (std::size_t i = 0; i < _I; ++i) {
        if (c[i] != 0) {
          out.push_back(i);
        }
      }
      return out;
    }

   private:
    std::size_t                                           _I;
    std::map<element_type, std::vector<element_type>> _components;
  };

  inline std::vector<std::size_t> support(WreathLikeProduct const& x, element_type a) {
    return BaseDecomposition(x).support(a);
  }

  namespace detail {
    inline void require_regular_abelian(WreathLikeProduct const& x) {
      if (!is_regular(x)) {
        throw PreconditionViolated("the index set must be B with left multiplication");
      }
      auto const& A1 = x.summands.at(0);
      for (auto a : A1) {
        for (auto c : A1) {
          if (x.W.mul(a, c) != x.W.mul(c, a)) {
            throw RequiresAbelianBase("base summands are not abelian");
          }
        }
      }
    }

    inline element_type pi_with_section(WreathLikeProduct const& x, BaseDecomposition const& d,
                                        std::vector<element_type> const& X,
                                        std::vector<element_type> const& sigma, element_type a) {
      element_type out = 0;
      for (auto b : X) {
        element_type s = sigma[b];
        out            = x.W.mul(out, d.components(x.W.conj(a, x.W.inv(s)))[0]);
      }
      return out;
    }
  }  // namespace detail

  // pi_X(a) = prod_{x in X} (sigma(x)^-1 a sigma(x))(1), an element of the
  // summand at the identity of B. Computed with two sections, which must agree.
  inline element_type pi_over_coset(WreathLikeProduct const& x, BaseDecomposition const& d,
                                    std::vector<element_type> const& X, element_type a) {
    detail::require_regular_abelian(x);
    d.components(a);
    element_type v = detail::pi_with_section(x, d, X, x.section, a);
    std::vector<element_type> other(x.B.order(), 0);
    for (element_type w = 0; w < x.W.order(); ++w) {
      other[x.epsilon(w)] = w;  // largest element of each fibre
    }
    if (detail::pi_with_section(x, d, X, other, a) != v) {
      throw std::logic_error("pi depends on the section");
    }
    return v;
  }

  inline element_type pi_over_coset(WreathLikeProduct const& x, std::vector<element_type> const& X,
                                    element_type a) {
    return pi_over_coset(x, BaseDecomposition(x), X, a);
  }

  // Left cosets bR, numbered by smallest element, each sorted.
  inline std::vector<ElementSet> left_cosets(FiniteGroup const& B, ElementSet const& R) {
    std::vector<ElementSet> out;
    std::vector<bool>       done(B.order(), false);
    for (element_type b = 0; b < B.order(); ++b) {
      if (done[b]) {
        continue;
      }
      ElementSet c;
      for (auto r : R) {
        c.push_back(B.mul(b, r));
        done[c.back()] = true;
      }
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
    }
    return out;
  }

  inline ElementSet n_r_subgroup(WreathLikeProduct const& x, ElementSet const& R) {
    detail::require_regular_abelian(x);
    if (!is_subgroup(x.B, R)) {
      throw NotASubgroup("R is not a subgroup of B");
    }
    BaseDecomposition d(x);
    auto              cosets = left_cosets(x.B, R);
    ElementSet        out;
    for (auto a : x.base()) {
      bool in = true;
      for (auto const& c : cosets) {
        if (detail::pi_with_section(x, d, c, x.section, a) != 0) {
          in = false;
          break;
        }
      }
      if (in) {
        out.push_back(a);
      }
    }
    if (!is_normal(x.W, out)) {
      throw std::logic_error("N_R is not normal");
    }
    return out;
  }

  namespace detail {
    // Image of x under W -> W/K for K inside the base, keeping the B-set.
    inline WreathLikeProduct push_to_quotient(WreathLikeProduct const& x, ElementSet const& K,
                                              std::vector<ElementSet> const& summand_preimages,
                                              Action action) {
      auto                      q = quotient_by_normal(x.W, K);
      std::vector<element_type> eps(q.group.order(), 0);
      for (element_type w = 0; w < x.W.order(); ++w) {
        eps[q.projection(w)] = x.epsilon(w);
      }
      WreathLikeProduct out;
      out.W       = q.group;
      out.B       = x.B;
      out.epsilon = Homomorphism{q.group, x.B, std::move(eps)};
      for (auto const& pre : summand_preimages) {
        ElementSet img;
        for (auto a : pre) {
          img.push_back(q.projection(a));
        }
        std::sort(img.begin(), img.end());
        img.erase(std::unique(img.begin(), img.end()), img.end());
        out.summands.push_back(std::move(img));
      }
      out.action  = std::move(action);
      out.section = canonical_section(out.epsilon);
      return out;
    }
  }  // namespace detail

  // W / N_R over I = B/R with the left multiplication action.
  inline WreathLikeProduct untwisted_quotient(WreathLikeProduct const& x, ElementSet const& R) {
    auto NR     = n_r_subgroup(x, R);
    auto cosets = left_cosets(x.B, R);
    std::vector<std::size_t> coset_of(x.B.order());
    for (std::size_t k = 0; k < cosets.size(); ++k) {
      for (auto b : cosets[k]) {
        coset_of[b] = k;
      }
    }
    Action act(x.B.order(), std::vector<std::size_t>(cosets.size()));
    for (element_type b = 0; b < x.B.order(); ++b) {
      for (std::size_t k = 0; k < cosets.size(); ++k) {
        act[b][k] = coset_of[x.B.mul(b, cosets[k][0])];
      }
    }
    std::vector<ElementSet> pre;
    for (auto const& c : cosets) {
      std::vector<element_type> gens;
      for (auto b : c) {
        gens.insert(gens.end(), x.summands[b].begin(), x.summands[b].end());
      }
      pre.push_back(generated_subgroup(x.W, gens));
    }
    return detail::push_to_quotient(x, NR, pre, std::move(act));
  }

  inline bool is_untwisted(WreathLikeProduct const& x) {
    for (std::size_t i = 0; i < x.index_size(); ++i) {
      for (element_type w = 0; w < x.W.order(); ++w) {
        if (x.action[x.epsilon(w)][i] != i) {
          continue;
        }
        for (auto a : x.summands[i]) {
          if (x.W.mul(w, a) != x.W.mul(a, w)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  // V containing the base, as a wreath-like product over epsilon(V). With
  // `regroup` (regular case) the summands are C_d = sum_{t in T} A_{dt} for the
  // right transversal T of smallest coset elements, and epsilon(V) acts on
  // itself.
  inline WreathLikeProduct restrict_to_subgroup(WreathLikeProduct const& x, ElementSet const& V,
                                                bool regroup = false) {
    if (!is_subgroup(x.W, V)) {
      throw NotASubgroup("V is not a subgroup of W");
    }
    for (auto a : x.base()) {
      if (!contains(V, a)) {
        throw BaseNotContained("V does not contain the base");
      }
    }
    if (regroup && !is_regular(x)) {
      throw PreconditionViolated("regrouping needs the regular action");
    }
    auto index_in = [](ElementSet const& s, element_type a) {
      return static_cast<element_type>(std::lower_bound(s.begin(), s.end(), a) - s.begin());
    };
    ElementSet D;
    for (auto v : V) {
      D.push_back(x.epsilon(v));
    }
    std::sort(D.begin(), D.end());
    D.erase(std::unique(D.begin(), D.end()), D.end());

    WreathLikeProduct out;
    out.W = subgroup_as_group(x.W, V);
    out.B = subgroup_as_group(x.B, D);
    std::vector<element_type> eps;
    for (auto v : V) {
      eps.push_back(index_in(D, x.epsilon(v)));
    }
    out.epsilon = Homomorphism{out.W, out.B, std::move(eps)};
    out.section = canonical_section(out.epsilon);
    auto to_v   = [&](ElementSet const& s) {
      ElementSet r;
      for (auto a : s) {
        r.push_back(index_in(V, a));
      }
      std::sort(r.begin(), r.end());
      return r;
    };
    if (!regroup) {
      for (auto const& Ai : x.summands) {
        out.summands.push_back(to_v(Ai));
      }
      for (auto d : D) {
        out.action.push_back(x.action[d]);
      }
      return out;
    }
    // right cosets Dt, t smallest
    std::vector<bool>         done(x.B.order(), false);
    std::vector<element_type> T;
    for (element_type b = 0; b < x.B.order(); ++b) {
      if (done[b]) {
        continue;
      }
      T.push_back(b);
      for (auto d : D) {
        done[x.B.mul(d, b)] = true;
      }
    }
    for (auto d : D) {
      std::vector<element_type> gens;
      for (auto t : T) {
        auto const& A = x.summands[x.B.mul(d, t)];
        gens.insert(gens.end(), A.begin(), A.end());
      }
      out.summands.push_back(to_v(generated_subgroup(x.W, gens)));
    }
    out.action = regular_action(out.B);
    return out;
  }

  // W / <<N>> for N normal in the summand A_0, over the same B-set.
  inline WreathLikeProduct quotient_base_by_normal(WreathLikeProduct const& x, ElementSet const& N) {
    if (!is_transitive(x.action, x.index_size())) {
      throw InvalidArgument("the action on the index set must be transitive");
    }
    auto const& A0 = x.summands.at(0);
    for (auto a : N) {
      if (!contains(A0, a)) {
        throw NotNormal("N is not inside the reference summand");
      }
    }
    if (!is_subgroup(x.W, N)) {
      throw NotNormal("N is not a subgroup");
    }
    for (auto a : A0) {
      for (auto n : N) {
        if (!contains(N, x.W.conj(n, a))) {
          throw NotNormal("N is not normal in A");
        }
      }
    }
    auto K = normal_closure(x.W, N);
    return detail::push_to_quotient(x, K, x.summands, x.action);
  }

}  // namespace wreathkit

#endif  // WREATHKIT_WLP_HPP_
