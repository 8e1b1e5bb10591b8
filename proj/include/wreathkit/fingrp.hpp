#ifndef WREATHKIT_FINGRP_HPP_
#define WREATHKIT_FINGRP_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rational.hpp"
#include "words.hpp"

namespace wreathkit {

  using element_type = std::uint32_t;
  using ElementSet   = std::vector<element_type>;  // sorted, duplicate free

  inline bool contains(ElementSet const& s, element_type x) {
    return std::binary_search(s.begin(), s.end(), x);
  }

  // A group given by its multiplication table; element 0 is the identity.
  // Copies share the (immutable) table.
  class FiniteGroup {
   public:
    // Trivial group.
    FiniteGroup() : FiniteGroup(1, {0}, {}) {}

    // Builds without checking the axioms; use validate_group for untrusted
    // tables.
    static FiniteGroup trusted(std::size_t n, std::vector<element_type> table,
                               std::vector<std::string> names = {}) {
      return FiniteGroup(n, std::move(table), std::move(names));
    }

    std::size_t order() const noexcept {
      return _d->n;
    }
    element_type mul(element_type a, element_type b) const {
      return _d->table[static_cast<std::size_t>(a) * _d->n + b];
    }
    element_type inv(element_type a) const {
      return _d->inverse[a];
    }
    element_type conj(element_type x, element_type by) const {
      return mul(mul(by, x), inv(by));
    }
    element_type commutator(element_type x, element_type y) const {
      return mul(mul(x, y), mul(inv(x), inv(y)));
    }
    std::vector<element_type> const& table() const noexcept {
      return _d->table;
    }
    std::vector<std::string> const& names() const noexcept {
      return _d->names;
    }
    std::string name(element_type a) const {
      return _d->names.empty() ? std::to_string(a) : _d->names[a];
    }
    // A generating set, chosen greedily.
    std::vector<element_type> const& generators() const {
      return _d->generators;
    }
    element_type power(element_type a, long long k) const {
      element_type base = k < 0 ? inv(a) : a, out = 0;
      for (long long i = 0; i < (k < 0 ? -k : k); ++i) {
        out = mul(out, base);
      }
      return out;
    }
    std::size_t element_order(element_type a) const {
      std::size_t  k = 1;
      element_type x = a;
      while (x != 0) {
        x = mul(x, a);
        ++k;
      }
      return k;
    }
    bool is_abelian() const {
      auto const& g = generators();
      for (auto x : g) {
        for (auto y : g) {
          if (mul(x, y) != mul(y, x)) {
            return false;
          }
        }
      }
      return true;
    }

    // Same underlying table object.
    bool same_as(FiniteGroup const& other) const noexcept {
      return _d == other._d;
    }
    friend bool operator==(FiniteGroup const& x, FiniteGroup const& y) {
      return x._d == y._d || (x._d->n == y._d->n && x._d->table == y._d->table);
    }

   private:
    struct Data {
      std::size_t               n;
      std::vector<element_type> table;
      std::vector<element_type> inverse;
      std::vector<element_type> generators;
      std::vector<std::string>  names;
    };

    FiniteGroup(std::size_t n, std::vector<element_type> table, std::vector<std::string> names) {
      auto d     = std::make_shared<Data>();
      d->n       = n;
      d->table   = std::move(table);
      d->names   = std::move(names);
      d->inverse.assign(n, 0);
      for (element_type a = 0; a < n; ++a) {
        for (element_type b = 0; b < n; ++b) {
          if (d->table[static_cast<std::size_t>(a) * n + b] == 0) {
            d->inverse[a] = b;
            break;
          }
        }
      }
      // greedy: smallest element outside the current subgroup
      std::vector<bool>         in(n, false);
      std::vector<element_type> members{0};
      in[0] = true;
      for (element_type c = 1; c < n; ++c) {
        if (in[c]) {
          continue;
        }
        d->generators.push_back(c);
        for (std::size_t q = 0; q < members.size(); ++q) {
          for (auto g : d->generators) {
            element_type y = d->table[static_cast<std::size_t>(members[q]) * n + g];
            if (!in[y]) {
              in[y] = true;
              members.push_back(y);
            }
          }
        }
      }
      _d = std::move(d);
    }

    std::shared_ptr<Data const> _d;
  };

  ////////////////////////////////////////////////////////////////////////
  // Validation
  ////////////////////////////////////////////////////////////////////////

  // Exhaustive associativity for n <= 512; above that Light's test against a
  // generating set, which is also exact.
  inline FiniteGroup validate_group(std::vector<std::vector<element_type>> const& rows,
                                    std::vector<std::string>                      names = {}) {
    std::size_t const n = rows.size();
    if (n == 0) {
      throw NotAGroup("empty table");
    }
    if (!names.empty() && names.size() != n) {
      throw NotAGroup("names do not match the order");
    }
    std::vector<element_type> flat;
    flat.reserve(n * n);
    for (auto const& row : rows) {
      if (row.size() != n) {
        throw NotAGroup("table is not square");
      }
      for (auto x : row) {
        if (x >= n) {
          throw NotAGroup("entry " + std::to_string(x) + " out of range");
        }
        flat.push_back(x);
      }
    }
    auto at = [&](std::size_t a, std::size_t b) { return flat[a * n + b]; };
    for (std::size_t a = 0; a < n; ++a) {
      if (at(0, a) != a || at(a, 0) != a) {
        throw NotAGroup("element 0 is not an identity (witness " + std::to_string(a) + ")");
      }
    }
    std::vector<bool> seen(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t b = 0; b < n; ++b) {
        if (seen[at(a, b)]) {
          throw NotAGroup("row " + std::to_string(a) + " is not a permutation");
        }
        seen[at(a, b)] = true;
      }
      std::fill(seen.begin(), seen.end(), false);
      for (std::size_t b = 0; b < n; ++b) {
        if (seen[at(b, a)]) {
          throw NotAGroup("column " + std::to_string(a) + " is not a permutation");
        }
        seen[at(b, a)] = true;
      }
    }
    auto witness = [](std::size_t a, std::size_t b, std::size_t c) {
      return NotAGroup("associativity fails at (" + std::to_string(a) + ", " + std::to_string(b)
                       + ", " + std::to_string(c) + ")");
    };
    if (n <= 512) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          std::size_t ab = at(a, b);
          for (std::size_t c = 0; c < n; ++c) {
            if (at(ab, c) != at(a, at(b, c))) {
              throw witness(a, b, c);
            }
          }
        }
      }
      return FiniteGroup::trusted(n, std::move(flat), std::move(names));
    }
    // The greedy generators are built by right multiplication only, which
    // generates the magma, and that is all Light's test needs.
    auto G = FiniteGroup::trusted(n, std::move(flat), std::move(names));
    for (auto s : G.generators()) {
      for (std::size_t a = 0; a < n; ++a) {
        std::size_t as = G.mul(a, s);
        for (std::size_t c = 0; c < n; ++c) {
          if (G.mul(as, c) != G.mul(a, G.mul(s, c))) {
            throw witness(a, s, c);
          }
        }
      }
    }
    return G;
  }

  inline std::vector<std::vector<element_type>> table_rows(FiniteGroup const& G) {
    std::vector<std::vector<element_type>> rows(G.order());
    for (element_type a = 0; a < G.order(); ++a) {
      rows[a].assign(G.table().begin() + a * G.order(), G.table().begin() + (a + 1) * G.order());
    }
    return rows;
  }

  ////////////////////////////////////////////////////////////////////////
  // Standard groups
  ////////////////////////////////////////////////////////////////////////

  inline FiniteGroup cyclic_group(std::size_t n) {
    if (n == 0) {
      throw InvalidArgument("cyclic group of order 0");
    }
    std::vector<element_type> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a * n + b] = static_cast<element_type>((a + b) % n);
      }
    }
    return FiniteGroup::trusted(n, std::move(t));
  }

  // (g, h) has id g * |H| + h.
  inline FiniteGroup direct_product(FiniteGroup const& G, FiniteGroup const& H) {
    std::size_t const         g = G.order(), h = H.order(), n = g * h;
    std::vector<element_type> t(n * n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        t[x * n + y] = static_cast<element_type>(
            G.mul(static_cast<element_type>(x / h), static_cast<element_type>(y / h)) * h
            + H.mul(static_cast<element_type>(x % h), static_cast<element_type>(y % h)));
      }
    }
    return FiniteGroup::trusted(n, std::move(t));
  }

  using Permutation = std::vector<std::uint32_t>;

  // Elements in breadth-first order from the identity; x * y means "x then y"
  // is NOT used: composition is (x * y)(i) = x(y(i)).
  inline FiniteGroup group_from_permutations(std::vector<Permutation> const& gens,
                                             std::vector<Permutation>*       elements_out = nullptr) {
    std::size_t const degree = gens.empty() ? 0 : gens.front().size();
    Permutation       id(degree);
    std::iota(id.begin(), id.end(), 0);
    auto compose = [&](Permutation const& x, Permutation const& y) {
      Permutation z(degree);
      for (std::size_t i = 0; i < degree; ++i) {
        z[i] = x[y[i]];
      }
      return z;
    };
    std::vector<Permutation>           elements{id};
    std::map<Permutation, std::size_t> index{{id, 0}};
    for (std::size_t q = 0; q < elements.size(); ++q) {
      for (auto const& g : gens) {
        auto y = compose(elements[q], g);
        if (index.emplace(y, elements.size()).second) {
          elements.push_back(std::move(y));
        }
      }
    }
    std::size_t const         n = elements.size();
    std::vector<element_type> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        t[a * n + b] = static_cast<element_type>(index.at(compose(elements[a], elements[b])));
      }
    }
    if (elements_out) {
      *elements_out = elements;
    }
    return FiniteGroup::trusted(n, std::move(t));
  }

  inline FiniteGroup symmetric_group(std::size_t d) {
    if (d <= 1) {
      return FiniteGroup();
    }
    Permutation swap(d), cycle(d);
    std::iota(swap.begin(), swap.end(), 0);
    std::swap(swap[0], swap[1]);
    for (std::size_t i = 0; i < d; ++i) {
      cycle[i] = static_cast<std::uint32_t>((i + 1) % d);
    }
    return group_from_permutations({swap, cycle});
  }

  inline FiniteGroup alternating_group(std::size_t d) {
    if (d <= 2) {
      return FiniteGroup();
    }
    std::vector<Permutation> gens;
    for (std::size_t k = 2; k < d; ++k) {
      Permutation c(d);
      std::iota(c.begin(), c.end(), 0);
      c[0] = 1, c[1] = static_cast<std::uint32_t>(k), c[k] = 0;
      gens.push_back(c);
    }
    return group_from_permutations(gens);
  }

  // Symmetries of the n-gon, order 2n.
  inline FiniteGroup dihedral_group(std::size_t n) {
    Permutation rot(n), ref(n);
    for (std::size_t i = 0; i < n; ++i) {
      rot[i] = static_cast<std::uint32_t>((i + 1) % n);
      ref[i] = static_cast<std::uint32_t>((n - i) % n);
    }
    return group_from_permutations({rot, ref});
  }

  // Q8 as the regular representation on {±1, ±i, ±j, ±k}.
  inline FiniteGroup quaternion_group() {
    // unit u in {1,i,j,k} = 0..3, sign s: element 2*u + s
    static constexpr int prod[4][4][2] = {{{0, 0}, {1, 0}, {2, 0}, {3, 0}},
                                          {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
                                          {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
                                          {{3, 0}, {2, 0}, {1, 1}, {0, 1}}};
    std::vector<element_type> t(64);
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        auto const& p = prod[a / 2][b / 2];
        int         s = (a % 2) ^ (b % 2) ^ p[1];
        t[a * 8 + b]  = static_cast<element_type>(2 * p[0] + s);
      }
    }
    return FiniteGroup::trusted(8, std::move(t),
                                {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
  }

  ////////////////////////////////////////////////////////////////////////
  // Subgroups
  ////////////////////////////////////////////////////////////////////////

  inline ElementSet generated_subgroup(FiniteGroup const& G, std::vector<element_type> const& S) {
    std::vector<bool>         in(G.order(), false);
    std::vector<element_type> members{0};
    in[0] = true;
    for (std::size_t q = 0; q < members.size(); ++q) {
      for (auto s : S) {
        element_type y = G.mul(members[q], s);
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  inline bool is_subgroup(FiniteGroup const& G, ElementSet const& H) {
    if (H.empty() || !contains(H, 0)) {
      return false;
    }
    for (auto x : H) {
      for (auto y : H) {
        if (!contains(H, G.mul(x, G.inv(y)))) {
          return false;
        }
      }
    }
    return true;
  }

  inline bool is_normal(FiniteGroup const& G, ElementSet const& N) {
    if (!is_subgroup(G, N)) {
      return false;
    }
    for (auto g : G.generators()) {
      for (auto x : N) {
        if (!contains(N, G.conj(x, g))) {
          return false;
        }
      }
    }
    return true;
  }

  inline ElementSet normal_closure(FiniteGroup const& G, std::vector<element_type> const& S) {
    std::vector<element_type> gens(S.begin(), S.end());
    ElementSet                N = generated_subgroup(G, gens);
    bool                      grown = true;
    while (grown) {
      grown = false;
      for (auto g : G.generators()) {
        for (std::size_t i = 0; i < gens.size(); ++i) {
          element_type c = G.conj(gens[i], g);
          if (!contains(N, c)) {
            gens.push_back(c);
            N     = generated_subgroup(G, gens);
            grown = true;
          }
        }
      }
    }
    return N;
  }

  inline ElementSet centralizer(FiniteGroup const& G, element_type g) {
    ElementSet out;
    for (element_type x = 0; x < G.order(); ++x) {
      if (G.mul(x, g) == G.mul(g, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  inline ElementSet centralizer_of_set(FiniteGroup const& G, ElementSet const& S) {
    ElementSet out;
    for (element_type x = 0; x < G.order(); ++x) {
      if (std::all_of(S.begin(), S.end(), [&](element_type s) { return G.mul(x, s) == G.mul(s, x); })) {
        out.push_back(x);
      }
    }
    return out;
  }

  inline ElementSet derived_subgroup(FiniteGroup const& G) {
    std::vector<element_type> comms;
    for (auto x : G.generators()) {
      for (auto y : G.generators()) {
        comms.push_back(G.commutator(x, y));
      }
    }
    return normal_closure(G, comms);
  }

  // Fewer generators than FiniteGroup::generators(): repeatedly adds the
  // element that enlarges the current subgroup most. Quadratic in |G|.
  inline std::vector<element_type> small_generating_set(FiniteGroup const& G) {
    std::vector<element_type> gens;
    ElementSet                H{0};
    while (H.size() < G.order()) {
      element_type best      = 0;
      std::size_t  best_size = 0;
      for (element_type c = 1; c < G.order(); ++c) {
        if (contains(H, c)) {
          continue;
        }
        auto trial = gens;
        trial.push_back(c);
        std::size_t size = generated_subgroup(G, trial).size();
        if (size > best_size) {
          best_size = size;
          best      = c;
          if (size == G.order()) {
            break;
          }
        }
      }
      gens.push_back(best);
      H = generated_subgroup(G, gens);
    }
    return gens;
  }

  ////////////////////////////////////////////////////////////////////////
  // Conjugacy
  ////////////////////////////////////////////////////////////////////////

  struct ConjugacyData {
    std::vector<ElementSet>  classes;   // ordered by smallest element
    std::vector<std::size_t> class_of;  // element -> class index
    ElementSet               center;
  };

  inline ConjugacyData conjugacy_data(FiniteGroup const& G) {
    ConjugacyData data;
    data.class_of.assign(G.order(), SIZE_MAX);
    for (element_type g = 0; g < G.order(); ++g) {
      if (data.class_of[g] != SIZE_MAX) {
        continue;
      }
      std::size_t               id = data.classes.size();
      std::vector<element_type> orbit{g};
      data.class_of[g] = id;
      for (std::size_t q = 0; q < orbit.size(); ++q) {
        for (auto x : G.generators()) {
          element_type y = G.conj(orbit[q], x);
          if (data.class_of[y] == SIZE_MAX) {
            data.class_of[y] = id;
            orbit.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      if (orbit.size() == 1) {
        data.center.push_back(g);
      }
      data.classes.push_back(std::move(orbit));
    }
    return data;
  }

  ////////////////////////////////////////////////////////////////////////
  // Homomorphisms and quotients
  ////////////////////////////////////////////////////////////////////////

  struct Homomorphism {
    FiniteGroup               source;
    FiniteGroup               target;
    std::vector<element_type> image;

    element_type operator()(element_type x) const {
      return image[x];
    }
  };

  inline bool is_homomorphism(FiniteGroup const& S, FiniteGroup const& T,
                              std::vector<element_type> const& image) {
    if (image.size() != S.order()) {
      return false;
    }
    for (auto x : image) {
      if (x >= T.order()) {
        return false;
      }
    }
    for (element_type x = 0; x < S.order(); ++x) {
      for (element_type y = 0; y < S.order(); ++y) {
        if (image[S.mul(x, y)] != T.mul(image[x], image[y])) {
          return false;
        }
      }
    }
    return true;
  }

  inline Homomorphism make_homomorphism(FiniteGroup S, FiniteGroup T, std::vector<element_type> image) {
    if (!is_homomorphism(S, T, image)) {
      throw NotAHomomorphism("map does not respect multiplication");
    }
    return {std::move(S), std::move(T), std::move(image)};
  }

  inline Homomorphism identity_homomorphism(FiniteGroup const& G) {
    std::vector<element_type> id(G.order());
    std::iota(id.begin(), id.end(), 0);
    return {G, G, std::move(id)};
  }

  // delta1 after delta2
  inline Homomorphism compose(Homomorphism const& delta1, Homomorphism const& delta2) {
    std::vector<element_type> img(delta2.source.order());
    for (element_type x = 0; x < img.size(); ++x) {
      img[x] = delta1.image[delta2.image[x]];
    }
    return {delta2.source, delta1.target, std::move(img)};
  }

  inline Homomorphism inverse(Homomorphism const& delta) {
    std::vector<element_type> img(delta.image.size());
    for (element_type x = 0; x < img.size(); ++x) {
      img[delta.image[x]] = x;
    }
    return {delta.target, delta.source, std::move(img)};
  }

  inline ElementSet kernel(Homomorphism const& f) {
    ElementSet k;
    for (element_type x = 0; x < f.image.size(); ++x) {
      if (f.image[x] == 0) {
        k.push_back(x);
      }
    }
    return k;
  }

  struct Quotient {
    FiniteGroup  group;
    Homomorphism projection;
  };

  // Cosets numbered by their smallest element; gN for g in G.
  inline Quotient quotient_by_normal(FiniteGroup const& G, ElementSet const& N) {
    if (!is_normal(G, N)) {
      throw NotNormal("subgroup is not normal");
    }
    std::vector<element_type> coset(G.order(), UINT32_MAX);
    std::vector<element_type> reps;
    for (element_type g = 0; g < G.order(); ++g) {
      if (coset[g] != UINT32_MAX) {
        continue;
      }
      auto id = static_cast<element_type>(reps.size());
      reps.push_back(g);
      for (auto x : N) {
        coset[G.mul(g, x)] = id;
      }
    }
    std::size_t const         q = reps.size();
    std::vector<element_type> t(q * q);
    for (std::size_t a = 0; a < q; ++a) {
      for (std::size_t b = 0; b < q; ++b) {
        t[a * q + b] = coset[G.mul(reps[a], reps[b])];
      }
    }
    auto Q = FiniteGroup::trusted(q, std::move(t));
    return {Q, Homomorphism{G, Q, std::move(coset)}};
  }

  // Subgroup as a group in its own right: element k is H[k].
  inline FiniteGroup subgroup_as_group(FiniteGroup const& G, ElementSet const& H) {
    std::size_t const         n = H.size();
    std::vector<element_type> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        auto it = std::lower_bound(H.begin(), H.end(), G.mul(H[a], H[b]));
        t[a * n + b] = static_cast<element_type>(it - H.begin());
      }
    }
    return FiniteGroup::trusted(n, std::move(t));
  }

  inline element_type evaluate(FiniteGroup const& G, std::vector<element_type> const& images,
                               Word const& w) {
    element_type x = 0;
    for (auto l : w.letters()) {
      element_type g = images.at(generator_of(l));
      x              = G.mul(x, is_inverted(l) ? G.inv(g) : g);
    }
    return x;
  }

  ////////////////////////////////////////////////////////////////////////
  // Automorphisms and isomorphism
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    // Extends gens[i] -> images[i] (i < count) over <gens[0..count)>,
    // checking well-definedness and injectivity. Unset entries are UINT32_MAX.
    inline bool extend_map(FiniteGroup const& G, FiniteGroup const& H,
                           std::vector<element_type> const& gens,
                           std::vector<element_type> const& images, std::size_t count,
                           std::vector<element_type>& map) {
      map.assign(G.order(), UINT32_MAX);
      std::vector<bool>         used(H.order(), false);
      std::vector<element_type> queue{0};
      map[0]  = 0;
      used[0] = true;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        element_type x = queue[q];
        for (std::size_t i = 0; i < count; ++i) {
          element_type y  = G.mul(x, gens[i]);
          element_type fy = H.mul(map[x], images[i]);
          if (map[y] == UINT32_MAX) {
            if (used[fy]) {
              return false;
            }
            map[y]   = fy;
            used[fy] = true;
            queue.push_back(y);
          } else if (map[y] != fy) {
            return false;
          }
        }
      }
      return true;
    }

    // All injective homomorphisms G -> H that are determined by images of
    // `gens` drawn from `candidates[i]`, depth-first in candidate order.
    // `emit` returns false to stop.
    inline void search_embeddings(FiniteGroup const& G, FiniteGroup const& H,
                                  std::vector<element_type> const&              gens,
                                  std::vector<std::vector<element_type>> const& candidates,
                                  std::function<bool(std::vector<element_type> const&)> const& emit) {
      std::vector<element_type> images(gens.size(), 0), map;
      bool                      stop = false;
      std::function<void(std::size_t)> go = [&](std::size_t i) {
        if (stop) {
          return;
        }
        if (i == gens.size()) {
          extend_map(G, H, gens, images, gens.size(), map);
          stop = !emit(map);
          return;
        }
        for (auto c : candidates[i]) {
          images[i] = c;
          if (extend_map(G, H, gens, images, i + 1, map)) {
            go(i + 1);
          }
          if (stop) {
            return;
          }
        }
      };
      go(0);
    }

    // Candidate images for each generator: same element order and the same
    // conjugacy class size.
    inline std::vector<std::vector<element_type>> profile_candidates(
        FiniteGroup const& G, FiniteGroup const& H, std::vector<element_type> const& gens) {
      auto cg = conjugacy_data(G), ch = conjugacy_data(H);
      std::vector<std::vector<element_type>> out;
      for (auto g : gens) {
        std::vector<element_type> c;
        std::size_t               og = G.element_order(g), sg = cg.classes[cg.class_of[g]].size();
        for (element_type h = 0; h < H.order(); ++h) {
          if (H.element_order(h) == og && ch.classes[ch.class_of[h]].size() == sg) {
            c.push_back(h);
          }
        }
        out.push_back(std::move(c));
      }
      return out;
    }

    inline std::vector<std::size_t> order_histogram(FiniteGroup const& G) {
      std::vector<std::size_t> h(G.order() + 1, 0);
      for (element_type x = 0; x < G.order(); ++x) {
        ++h[G.element_order(x)];
      }
      return h;
    }

    inline std::vector<std::size_t> class_sizes(ConjugacyData const& c) {
      std::vector<std::size_t> s;
      for (auto const& cl : c.classes) {
        s.push_back(cl.size());
      }
      std::sort(s.begin(), s.end());
      return s;
    }

  }  // namespace detail

  struct Automorphism {
    std::vector<element_type> image;
    bool                      inner            = false;
    bool                      class_preserving = false;
    std::size_t               coset            = 0;  // index in Aut / Inn
  };

  struct AutomorphismData {
    FiniteGroup               group;
    std::vector<Automorphism> all;  // identity first
    std::size_t               inner_count  = 0;
    std::size_t               outer_cosets = 0;  // |Out(G)|

    Homomorphism as_homomorphism(std::size_t k) const {
      return {group, group, all[k].image};
    }
  };

  inline bool is_class_preserving(ConjugacyData const& c, std::vector<element_type> const& image) {
    for (element_type x = 0; x < image.size(); ++x) {
      if (c.class_of[image[x]] != c.class_of[x]) {
        return false;
      }
    }
    return true;
  }

  inline AutomorphismData automorphisms(FiniteGroup const& G, std::size_t bound = 256) {
    if (G.order() > bound) {
      throw TooLarge("automorphism search is limited to order " + std::to_string(bound));
    }
    auto             conj = conjugacy_data(G);
    auto             gens = small_generating_set(G);
    auto             cand = detail::profile_candidates(G, G, gens);
    AutomorphismData data;
    data.group = G;
    detail::search_embeddings(G, G, gens, cand, [&](std::vector<element_type> const& map) {
      data.all.push_back({map, false, is_class_preserving(conj, map), 0});
      return true;
    });
    std::sort(data.all.begin(), data.all.end(),
              [](auto const& x, auto const& y) { return x.image < y.image; });

    std::map<std::vector<element_type>, std::size_t> index;
    for (std::size_t k = 0; k < data.all.size(); ++k) {
      index[data.all[k].image] = k;
    }
    std::set<std::vector<element_type>> inner;
    for (element_type x = 0; x < G.order(); ++x) {
      std::vector<element_type> c(G.order());
      for (element_type g = 0; g < G.order(); ++g) {
        c[g] = G.conj(g, x);
      }
      inner.insert(std::move(c));
    }
    for (auto const& c : inner) {
      data.all.at(index.at(c)).inner = true;
    }
    data.inner_count = inner.size();

    std::vector<bool> assigned(data.all.size(), false);
    for (std::size_t k = 0; k < data.all.size(); ++k) {
      if (assigned[k]) {
        continue;
      }
      for (auto const& c : inner) {
        std::vector<element_type> ac(G.order());
        for (element_type g = 0; g < G.order(); ++g) {
          ac[g] = data.all[k].image[c[g]];
        }
        std::size_t j       = index.at(ac);
        assigned[j]         = true;
        data.all[j].coset   = data.outer_cosets;
      }
      ++data.outer_cosets;
    }
    return data;
  }

  inline bool is_isomorphic(FiniteGroup const& G, FiniteGroup const& H) {
    if (G.order() != H.order()) {
      return false;
    }
    auto cg = conjugacy_data(G), ch = conjugacy_data(H);
    if (detail::class_sizes(cg) != detail::class_sizes(ch) || cg.center.size() != ch.center.size()
        || detail::order_histogram(G) != detail::order_histogram(H)
        || derived_subgroup(G).size() != derived_subgroup(H).size()) {
      return false;
    }
    auto gens  = G.order() <= 512 ? small_generating_set(G) : G.generators();
    auto cand  = detail::profile_candidates(G, H, gens);
    bool found = false;
    detail::search_embeddings(G, H, gens, cand, [&](std::vector<element_type> const& map) {
      found = std::find(map.begin(), map.end(), UINT32_MAX) == map.end();
      return !found;
    });
    return found;
  }

  ////////////////////////////////////////////////////////////////////////
  // Characters G -> Q/Z
  ////////////////////////////////////////////////////////////////////////

  // Value q stands for exp(2 pi i q); values lie in [0, 1).
  struct Character {
    FiniteGroup           group;
    std::vector<Rational> values;

    Rational operator()(element_type g) const {
      return values[g];
    }
    bool is_trivial() const {
      return std::all_of(values.begin(), values.end(), [](Rational const& r) { return r == Rational(0); });
    }
    friend bool operator==(Character const& x, Character const& y) {
      return x.values == y.values;
    }
  };

  inline Character trivial_character(FiniteGroup const& G) {
    return {G, std::vector<Rational>(G.order(), Rational(0))};
  }

  inline bool is_character(FiniteGroup const& G, std::vector<Rational> const& v) {
    if (v.size() != G.order() || v[0] != Rational(0)) {
      return false;
    }
    for (element_type x = 0; x < G.order(); ++x) {
      for (element_type y = 0; y < G.order(); ++y) {
        if (v[G.mul(x, y)] != mod_one(v[x] + v[y])) {
          return false;
        }
      }
    }
    return true;
  }

  inline Character add(Character const& x, Character const& y) {
    Character out{x.group, {}};
    for (std::size_t g = 0; g < x.values.size(); ++g) {
      out.values.push_back(mod_one(x.values[g] + y.values[g]));
    }
    return out;
  }

  // Factored through G/[G,G]: each abelianization generator of order d goes
  // to some k/d, and consistent assignments are kept.
  inline std::vector<Character> characters(FiniteGroup const& G) {
    auto                      q    = quotient_by_normal(G, derived_subgroup(G));
    FiniteGroup const&        Q    = q.group;
    auto                      gens = small_generating_set(Q);
    std::vector<std::size_t>  ord;
    for (auto g : gens) {
      ord.push_back(Q.element_order(g));
    }
    std::vector<Character> out;
    std::vector<long long> k(gens.size(), 0);
    while (true) {
      std::vector<std::optional<Rational>> val(Q.order());
      val[0]                            = Rational(0);
      std::vector<element_type> queue{0};
      bool                      ok = true;
      for (std::size_t i = 0; i < queue.size() && ok; ++i) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
          element_type y = Q.mul(queue[i], gens[j]);
          Rational     v = mod_one(*val[queue[i]] + Rational(k[j], static_cast<long long>(ord[j])));
          if (!val[y]) {
            val[y] = v;
            queue.push_back(y);
          } else if (*val[y] != v) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        Character chi{G, {}};
        for (element_type g = 0; g < G.order(); ++g) {
          chi.values.push_back(*val[q.projection(g)]);
        }
        out.push_back(std::move(chi));
      }
      std::size_t j = 0;
      while (j < k.size() && ++k[j] == static_cast<long long>(ord[j])) {
        k[j++] = 0;
      }
      if (j == k.size()) {
        break;
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Phased basis maps u_g -> exp(2 pi i rho(g)) u_delta(g) on the group algebra
  ////////////////////////////////////////////////////////////////////////

  struct PhasedBasisMap {
    Character    rho;
    Homomorphism delta;  // an automorphism of rho.group
  };

  struct PhasedBasisElement {
    Rational     phase;
    element_type element;
    friend bool  operator==(PhasedBasisElement const&, PhasedBasisElement const&) = default;
  };

  inline PhasedBasisMap identity_map(FiniteGroup const& G) {
    return {trivial_character(G), identity_homomorphism(G)};
  }

  inline PhasedBasisElement apply(PhasedBasisMap const& m, element_type g) {
    return {m.rho(g), m.delta(g)};
  }

  inline PhasedBasisElement apply(PhasedBasisMap const& m, PhasedBasisElement const& x) {
    return {mod_one(x.phase + m.rho(x.element)), m.delta(x.element)};
  }

  // (delta . rho)(g) = rho(delta^-1(g))
  inline Character act(Homomorphism const& delta, Character const& rho) {
    auto      dinv = inverse(delta);
    Character out{rho.group, {}};
    for (element_type g = 0; g < rho.values.size(); ++g) {
      out.values.push_back(rho(dinv(g)));
    }
    return out;
  }

  // m1 after m2 = (rho1 o delta2 + rho2, delta1 delta2)
  inline PhasedBasisMap psi_compose(PhasedBasisMap const& m1, PhasedBasisMap const& m2) {
    if (!(m1.rho.group == m2.rho.group)) {
      throw GroupMismatch("phased maps over different groups");
    }
    Character phase{m2.rho.group, {}};
    for (element_type g = 0; g < m2.rho.values.size(); ++g) {
      phase.values.push_back(mod_one(m1.rho(m2.delta(g)) + m2.rho(g)));
    }
    return {std::move(phase), compose(m1.delta, m2.delta)};
  }

  // Inner on the group algebra iff the centre, spanned by class sums, is fixed
  // pointwise: delta preserves every class and rho vanishes on it.
  inline bool psi_is_inner(PhasedBasisMap const& m) {
    auto c = conjugacy_data(m.rho.group);
    return m.rho.is_trivial() && is_class_preserving(c, m.delta.image);
  }

}  // namespace wreathkit

#endif  // WREATHKIT_FINGRP_HPP_
