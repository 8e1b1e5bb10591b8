#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>

#include "oracles.hpp"
#include "wreathkit/fingrp.hpp"

using namespace wreathkit;

namespace {

  std::vector<std::size_t> sizes(ConjugacyData const& c) {
    std::vector<std::size_t> out;
    for (auto const& cl : c.classes) {
      out.push_back(cl.size());
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Breadth-first words over the generators, to extend maps defined on them.
  struct Cayley {
    std::vector<element_type> gens;
    std::vector<element_type> order;                               // discovery order
    std::vector<std::pair<element_type, element_type>> via;         // parent, generator index
  };

  Cayley cayley(FiniteGroup const& G) {
    Cayley c{G.generators(), {0}, std::vector<std::pair<element_type, element_type>>(G.order())};
    std::vector<bool> seen(G.order(), false);
    seen[0] = true;
    for (std::size_t q = 0; q < c.order.size(); ++q) {
      for (element_type s = 0; s < c.gens.size(); ++s) {
        auto y = G.mul(c.order[q], c.gens[s]);
        if (!seen[y]) {
          seen[y]  = true;
          c.via[y] = {c.order[q], s};
          c.order.push_back(y);
        }
      }
    }
    return c;
  }

  // Every endomorphism determined by images of the generators, kept if it is a
  // homomorphism; `bijective` filters automorphisms.
  std::set<std::vector<element_type>> brute_endomorphisms(FiniteGroup const& G, bool bijective) {
    auto                                c = cayley(G);
    std::set<std::vector<element_type>> out;
    std::vector<element_type>           imgs(c.gens.size(), 0);
    while (true) {
      std::vector<element_type> f(G.order(), 0);
      for (std::size_t q = 1; q < c.order.size(); ++q) {
        auto [p, s]     = c.via[c.order[q]];
        f[c.order[q]] = G.mul(f[p], imgs[s]);
      }
      bool ok = true;
      for (element_type x = 0; x < G.order() && ok; ++x) {
        for (element_type y = 0; y < G.order() && ok; ++y) {
          ok = f[G.mul(x, y)] == G.mul(f[x], f[y]);
        }
      }
      if (ok && bijective) {
        auto sorted = f;
        std::sort(sorted.begin(), sorted.end());
        ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
      }
      if (ok) {
        out.insert(f);
      }
      std::size_t k = 0;
      while (k < imgs.size() && ++imgs[k] == G.order()) {
        imgs[k++] = 0;
      }
      if (k == imgs.size()) {
        break;
      }
    }
    return out;
  }

  // Characters by trying every assignment of phases j/e to the generators.
  std::size_t brute_character_count(FiniteGroup const& G) {
    long long e = 1;
    for (element_type x = 0; x < G.order(); ++x) {
      e = std::lcm(e, static_cast<long long>(G.element_order(x)));
    }
    auto                  c = cayley(G);
    std::vector<long long> imgs(c.gens.size(), 0);
    std::size_t            count = 0;
    while (true) {
      std::vector<long long> f(G.order(), 0);
      for (std::size_t q = 1; q < c.order.size(); ++q) {
        auto [p, s]     = c.via[c.order[q]];
        f[c.order[q]] = (f[p] + imgs[s]) % e;
      }
      bool ok = true;
      for (element_type x = 0; x < G.order() && ok; ++x) {
        for (element_type y = 0; y < G.order() && ok; ++y) {
          ok = f[G.mul(x, y)] == (f[x] + f[y]) % e;
        }
      }
      count += ok;
      std::size_t k = 0;
      while (k < imgs.size() && ++imgs[k] == e) {
        imgs[k++] = 0;
      }
      if (k == imgs.size()) {
        break;
      }
    }
    return count;
  }

  // Psi applied to a class sum, as a sparse vector element -> phase; inner on
  // the centre iff every class sum comes back unchanged.
  bool fixes_centre(PhasedBasisMap const& m) {
    auto c = conjugacy_data(m.rho.group);
    for (auto const& cls : c.classes) {
      std::map<element_type, Rational> image;
      for (auto g : cls) {
        image[m.delta(g)] = m.rho(g);
      }
      std::map<element_type, Rational> original;
      for (auto g : cls) {
        original[g] = Rational(0);
      }
      if (image != original) {
        return false;
      }
    }
    return true;
  }

  std::vector<FiniteGroup> corpus() {
    return {symmetric_group(3), dihedral_group(4), quaternion_group(), alternating_group(4)};
  }

}  // namespace

TEST_CASE("validate_group", "[fingrp]") {
  CHECK(validate_group({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}).order() == 3);
  // a Latin square with identity that is not associative (order 5 loop)
  std::vector<std::vector<element_type>> loop = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(validate_group(loop), NotAGroup);
  CHECK_THROWS_AS(validate_group({{0, 1}, {1, 1}}), NotAGroup);
  CHECK_THROWS_AS(validate_group({{1, 0}, {0, 1}}), NotAGroup);
  CHECK_NOTHROW(validate_group(table_rows(symmetric_group(3))));
  CHECK_NOTHROW(validate_group(table_rows(quaternion_group())));
}

TEST_CASE("validation above the exhaustive bound", "[fingrp]") {
  CHECK_NOTHROW(validate_group(table_rows(symmetric_group(6))));
  auto rows = table_rows(cyclic_group(720));
  CHECK_NOTHROW(validate_group(rows));
  // swap an intercalate: still a Latin square with identity, no longer a group
  std::swap(rows[1][1], rows[1][361]);
  std::swap(rows[361][361], rows[361][1]);
  CHECK_THROWS_AS(validate_group(rows), NotAGroup);
}

TEST_CASE("standard groups", "[fingrp]") {
  CHECK(cyclic_group(5).order() == 5);
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(dihedral_group(4).order() == 8);
  CHECK(quaternion_group().order() == 8);
  CHECK(direct_product(cyclic_group(2), cyclic_group(3)).order() == 6);
  std::vector<oracle::Perm> gens = {{1, 0, 2, 3}, {1, 2, 3, 0}};
  std::vector<Permutation>  pg   = {{1, 0, 2, 3}, {1, 2, 3, 0}};
  CHECK(group_from_permutations(pg).order() == oracle::closure(gens, 4).size());
}

TEST_CASE("conjugacy classes", "[fingrp]") {
  auto s3 = conjugacy_data(symmetric_group(3));
  CHECK(sizes(s3) == std::vector<std::size_t>{1, 2, 3});
  CHECK(s3.center == ElementSet{0});

  auto q8 = conjugacy_data(quaternion_group());
  CHECK(sizes(q8) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  CHECK(q8.center.size() == 2);

  auto z = direct_product(cyclic_group(2), cyclic_group(4));
  auto c = conjugacy_data(z);
  CHECK(c.classes.size() == 8);
  CHECK(c.center.size() == 8);

  for (auto const& G : corpus()) {
    auto        d     = conjugacy_data(G);
    std::size_t total = 0;
    for (auto const& cl : d.classes) {
      total += cl.size();
      CHECK(G.order() % cl.size() == 0);
      for (auto x : cl) {
        for (element_type g = 0; g < G.order(); ++g) {
          CHECK(contains(cl, G.conj(x, g)));
        }
      }
    }
    CHECK(total == G.order());
  }
}

TEST_CASE("subgroups, centralizers and closures", "[fingrp]") {
  auto G = symmetric_group(3);
  // find a transposition: an element of order 2
  element_type t = 1;
  while (G.element_order(t) != 2) {
    ++t;
  }
  CHECK(centralizer(G, t).size() == 2);
  CHECK(normal_closure(G, {t}).size() == 6);
  CHECK(generated_subgroup(G, {0}) == ElementSet{0});
  CHECK(derived_subgroup(G).size() == 3);
  CHECK(is_normal(G, derived_subgroup(G)));
  CHECK_FALSE(is_normal(G, generated_subgroup(G, {t})));
  CHECK(is_subgroup(G, generated_subgroup(G, {t})));
  element_type u = t + 1;
  while (G.element_order(u) != 2) {
    ++u;
  }
  CHECK_FALSE(is_subgroup(G, ElementSet{0, t, u}));
}

TEST_CASE("quotients", "[fingrp]") {
  auto G = symmetric_group(3);
  auto q = quotient_by_normal(G, derived_subgroup(G));
  CHECK(is_isomorphic(q.group, cyclic_group(2)));
  CHECK(is_homomorphism(G, q.group, q.projection.image));
  CHECK(is_isomorphic(quotient_by_normal(G, ElementSet{0}).group, G));
  ElementSet all(G.order());
  std::iota(all.begin(), all.end(), 0);
  CHECK(quotient_by_normal(G, all).group.order() == 1);
  element_type t = 1;
  while (G.element_order(t) != 2) {
    ++t;
  }
  CHECK_THROWS_AS(quotient_by_normal(G, generated_subgroup(G, {t})), NotNormal);
}

TEST_CASE("homomorphisms", "[fingrp]") {
  auto G = cyclic_group(4);
  CHECK_THROWS_AS(make_homomorphism(G, cyclic_group(2), {0, 1, 1, 0}), NotAHomomorphism);
  auto f = make_homomorphism(G, cyclic_group(2), {0, 1, 0, 1});
  CHECK(kernel(f) == ElementSet{0, 2});
  auto dbl = make_homomorphism(G, G, {0, 3, 2, 1});
  CHECK(compose(dbl, dbl).image == identity_homomorphism(G).image);
  CHECK(inverse(dbl).image == dbl.image);
}

TEST_CASE("isomorphism testing", "[fingrp]") {
  CHECK_FALSE(is_isomorphic(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))));
  CHECK(is_isomorphic(cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(3))));
  CHECK_FALSE(is_isomorphic(dihedral_group(4), quaternion_group()));
  CHECK(is_isomorphic(dihedral_group(3), symmetric_group(3)));
  CHECK_FALSE(is_isomorphic(alternating_group(4), dihedral_group(6)));
}

TEST_CASE("automorphisms match brute force", "[fingrp]") {
  auto v4 = automorphisms(direct_product(cyclic_group(2), cyclic_group(2)));
  CHECK(v4.all.size() == 6);
  CHECK(v4.inner_count == 1);

  auto s3 = automorphisms(symmetric_group(3));
  CHECK(s3.all.size() == 6);
  CHECK(s3.inner_count == 6);
  for (auto const& a : s3.all) {
    CHECK(a.class_preserving);
  }
  CHECK(s3.all.front().image == identity_homomorphism(symmetric_group(3)).image);
  CHECK(s3.all.front().class_preserving);

  for (auto const& G : corpus()) {
    auto                                A = automorphisms(G);
    std::set<std::vector<element_type>> mine;
    for (auto const& a : A.all) {
      mine.insert(a.image);
    }
    CHECK(mine == brute_endomorphisms(G, true));

    std::set<std::vector<element_type>> inner;
    for (element_type g = 0; g < G.order(); ++g) {
      std::vector<element_type> f(G.order());
      for (element_type x = 0; x < G.order(); ++x) {
        f[x] = G.conj(x, g);
      }
      inner.insert(f);
    }
    CHECK(A.inner_count == inner.size());
    CHECK(A.outer_cosets * A.inner_count == A.all.size());

    auto c = conjugacy_data(G);
    for (auto const& a : A.all) {
      CHECK(a.inner == (inner.count(a.image) == 1));
      bool preserving = true;
      for (auto const& cl : c.classes) {
        ElementSet img;
        for (auto x : cl) {
          img.push_back(a.image[x]);
        }
        std::sort(img.begin(), img.end());
        preserving = preserving && img == cl;
      }
      CHECK(a.class_preserving == preserving);
      // the corpus has no class-preserving outer automorphisms
      CHECK(a.class_preserving == a.inner);
    }
    // closed under composition
    for (auto const& a : A.all) {
      for (auto const& b : A.all) {
        std::vector<element_type> ab(G.order());
        for (element_type x = 0; x < G.order(); ++x) {
          ab[x] = a.image[b.image[x]];
        }
        CHECK(mine.count(ab) == 1);
      }
    }
  }

  for (std::size_t n : {2, 4, 6, 8, 9, 10, 12, 16}) {
    auto G = cyclic_group(n);
    CHECK(automorphisms(G).all.size() == brute_endomorphisms(G, true).size());
  }
  CHECK_THROWS_AS(automorphisms(symmetric_group(6)), TooLarge);
}

TEST_CASE("characters", "[fingrp]") {
  CHECK(characters(symmetric_group(3)).size() == 2);
  CHECK(characters(cyclic_group(6)).size() == 6);
  CHECK(characters(FiniteGroup()).size() == 1);
  for (auto const& G : {symmetric_group(3), dihedral_group(4), quaternion_group(), alternating_group(4),
                        cyclic_group(6), direct_product(cyclic_group(2), cyclic_group(4))}) {
    auto chars = characters(G);
    CHECK(chars.size() == brute_character_count(G));
    CHECK(chars.size() == quotient_by_normal(G, derived_subgroup(G)).group.order());
    for (auto const& c : chars) {
      CHECK(is_character(G, c.values));
      CHECK(c(0) == Rational(0));
      for (auto const& v : c.values) {
        CHECK(v >= Rational(0));
        CHECK(v < Rational(1));
      }
    }
    // characters separate points exactly when G is abelian
    bool separate = true;
    for (element_type x = 1; x < G.order() && separate; ++x) {
      separate = std::any_of(chars.begin(), chars.end(), [&](Character const& c) { return c(x) != c(0); });
    }
    CHECK(separate == G.is_abelian());
  }
}

TEST_CASE("phased basis maps", "[fingrp]") {
  auto G     = symmetric_group(3);
  auto A     = automorphisms(G);
  auto chars = characters(G);
  REQUIRE(chars.size() == 2);
  auto sign = chars[0].is_trivial() ? chars[1] : chars[0];

  PhasedBasisMap m{sign, A.as_homomorphism(1)};
  auto           id = identity_map(G);
  auto           c  = psi_compose(m, id);
  CHECK(c.rho.values == m.rho.values);
  CHECK(c.delta.image == m.delta.image);

  PhasedBasisMap r1{sign, identity_homomorphism(G)}, r2{sign, identity_homomorphism(G)};
  CHECK(psi_compose(r1, r2).rho.values == add(sign, sign).values);

  CHECK(psi_is_inner({trivial_character(G), A.as_homomorphism(2)}));
  CHECK_FALSE(psi_is_inner({sign, identity_homomorphism(G)}));

  auto           V     = direct_product(cyclic_group(2), cyclic_group(2));
  auto           VA    = automorphisms(V);
  PhasedBasisMap swap{trivial_character(V), VA.as_homomorphism(1)};
  CHECK_FALSE(psi_is_inner(swap));

  CHECK_THROWS_AS(psi_compose(m, identity_map(cyclic_group(6))), GroupMismatch);
}

TEST_CASE("innerness criterion and semidirect law on the corpus", "[fingrp]") {
  auto r = oracle::rng(41);
  for (auto const& G : corpus()) {
    auto                        A     = automorphisms(G);
    auto                        chars = characters(G);
    std::vector<PhasedBasisMap> maps;
    for (auto const& rho : chars) {
      for (std::size_t k = 0; k < A.all.size(); ++k) {
        maps.push_back({rho, A.as_homomorphism(k)});
      }
    }
    for (auto const& m : maps) {
      CHECK(psi_is_inner(m) == fixes_centre(m));
      CHECK(psi_is_inner(m) == (m.rho.is_trivial() && is_class_preserving(conjugacy_data(G), m.delta.image)));
    }
    std::uniform_int_distribution<std::size_t> pick(0, maps.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      auto const &x = maps[pick(r)], &y = maps[pick(r)], &z = maps[pick(r)];
      auto        xy = psi_compose(x, y);
      for (element_type g = 0; g < G.order(); ++g) {
        CHECK(apply(xy, g) == apply(x, apply(y, g)));
      }
      auto lhs = psi_compose(psi_compose(x, y), z), rhs = psi_compose(x, psi_compose(y, z));
      CHECK(lhs.rho.values == rhs.rho.values);
      CHECK(lhs.delta.image == rhs.delta.image);
      if (psi_is_inner(x) && psi_is_inner(y)) {
        CHECK(psi_is_inner(xy));
      }
    }
  }
}

TEST_CASE("semidirect law on all triples for S3", "[fingrp]") {
  auto G     = symmetric_group(3);
  auto A     = automorphisms(G);
  auto chars = characters(G);
  for (auto const& rho : chars) {
    for (std::size_t k = 0; k < A.all.size(); ++k) {
      auto           delta = A.as_homomorphism(k);
      PhasedBasisMap d{trivial_character(G), delta}, p{rho, identity_homomorphism(G)};
      PhasedBasisMap dinv{trivial_character(G), inverse(delta)};
      // conjugating a pure phase by delta acts on the character
      auto conj = psi_compose(psi_compose(d, p), dinv);
      CHECK(conj.delta.image == identity_homomorphism(G).image);
      CHECK(conj.rho.values == act(delta, rho).values);
      for (element_type g = 0; g < G.order(); ++g) {
        CHECK(act(delta, rho)(g) == rho(inverse(delta)(g)));
      }
    }
  }
}
