#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <numeric>

#include "oracles.hpp"
#include "wreathkit/stallings.hpp"

using namespace wreathkit;

namespace {

  AlphabetPtr F(std::size_t r) {
    static std::vector<AlphabetPtr> cache{Alphabet::make({}), Alphabet::make({"a"}),
                                          Alphabet::make({"a", "b"}), Alphabet::make({"a", "b", "c"})};
    return cache.at(r);
  }

  std::vector<Word> words(AlphabetPtr const& a, std::vector<std::string> const& texts) {
    std::vector<Word> out;
    for (auto const& t : texts) {
      out.push_back(parse_word(a, t));
    }
    return out;
  }

  // Straightforward folding: glue petals, then merge vertices with union-find
  // until no vertex has two equally labelled edges, then strip hairs and
  // renumber breadth-first. Returns vertex count and sorted edge triples in the
  // canonical numbering.
  struct NaiveGraph {
    std::size_t                                                  vertices;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> edges;  // v, gen, w
  };

  NaiveGraph naive_fold(std::size_t rank, std::vector<Word> const& gens) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> edges;
    std::size_t                                                     n = 1;
    for (auto const& g : gens) {
      if (g.empty()) {
        continue;
      }
      std::size_t prev = 0;
      for (std::size_t i = 0; i < g.size(); ++i) {
        std::size_t next = i + 1 == g.size() ? 0 : n++;
        auto        l    = g[i];
        if (is_inverted(l)) {
          edges.emplace_back(next, generator_of(l), prev);
        } else {
          edges.emplace_back(prev, generator_of(l), next);
        }
        prev = next;
      }
    }
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    bool changed = true;
    while (changed) {
      changed = false;
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> out, in;
      for (auto [v, g, w] : edges) {
        v = find(v), w = find(w);
        for (auto [key, val, other] : {std::tuple{std::pair{v, g}, w, &out}, std::tuple{std::pair{w, g}, v, &in}}) {
          auto [it, fresh] = other->emplace(key, val);
          if (!fresh && find(it->second) != find(val)) {
            auto x = find(it->second), y = find(val);
            parent[std::max(x, y)] = std::min(x, y);
            changed                = true;
          }
        }
      }
    }
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> folded;
    for (auto [v, g, w] : edges) {
      folded.emplace(find(v), g, find(w));
    }
    // strip degree-one vertices other than the base
    for (bool again = true; again;) {
      again = false;
      std::map<std::size_t, std::size_t> degree;
      for (auto [v, g, w] : folded) {
        ++degree[v];
        ++degree[w];
      }
      for (auto it = folded.begin(); it != folded.end(); ++it) {
        auto [v, g, w] = *it;
        if ((v != 0 && degree[v] == 1) || (w != 0 && degree[w] == 1)) {
          folded.erase(it);
          again = true;
          break;
        }
      }
    }
    // breadth-first renumbering, scanning letters a, a^-1, b, b^-1, ...
    std::map<std::size_t, std::size_t> label{{0, 0}};
    std::vector<std::size_t>           order{0};
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto v = order[i];
      for (std::size_t g = 0; g < rank; ++g) {
        for (int dir = 0; dir < 2; ++dir) {
          for (auto [x, h, y] : folded) {
            if (h != g) {
              continue;
            }
            std::size_t from = dir == 0 ? x : y, to = dir == 0 ? y : x;
            if (from == v && !label.count(to)) {
              label[to] = order.size();
              order.push_back(to);
            }
          }
        }
      }
    }
    NaiveGraph out{order.size(), {}};
    for (auto [v, g, w] : folded) {
      out.edges.emplace(label.at(v), g, label.at(w));
    }
    return out;
  }

  NaiveGraph as_naive(SubgroupGraph const& g) {
    NaiveGraph out{g.num_vertices(), {}};
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      for (std::size_t gen = 0; gen < g.alphabet()->size(); ++gen) {
        if (auto t = g.target(v, make_letter(gen))) {
          out.edges.emplace(v, gen, *t);
        }
      }
    }
    return out;
  }

  // Schreier generators of the kernel of a map F_r -> Sym(d), together with
  // the order of the image (the kernel's index) from a naive closure.
  std::pair<std::vector<Word>, std::size_t> kernel_generators(std::mt19937_64& r, std::size_t rank,
                                                               std::size_t d) {
    auto                    a = F(rank);
    std::vector<oracle::Perm> images;
    for (std::size_t g = 0; g < rank; ++g) {
      images.push_back(oracle::random_perm(r, d));
    }
    std::map<oracle::Perm, letters_type> rep{{oracle::identity(d), {}}};
    std::vector<oracle::Perm>            queue{oracle::identity(d)};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      auto x = queue[i];
      for (std::size_t g = 0; g < rank; ++g) {
        auto y = oracle::compose(x, images[g]);
        if (!rep.count(y)) {
          auto w = rep[x];
          w.push_back(make_letter(g));
          rep[y] = w;
          queue.push_back(y);
        }
      }
    }
    std::vector<Word> gens;
    for (auto const& [x, w] : rep) {
      for (std::size_t g = 0; g < rank; ++g) {
        auto y  = oracle::compose(x, images[g]);
        Word sg = product(Word(a, w), letter_word(a, g), inverse(Word(a, rep.at(y))));
        if (!sg.empty()) {
          gens.push_back(sg);
        }
      }
    }
    REQUIRE(oracle::closure(images, d).size() == rep.size());
    return {gens, rep.size()};
  }

}  // namespace

TEST_CASE("fold examples", "[stallings]") {
  auto a = F(2);
  auto g = fold_subgroup_graph(a, words(a, {"a"}));
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_edges() == 1);
  CHECK(g.target(0, make_letter(0)) == std::optional<std::size_t>(0));

  g = fold_subgroup_graph(a, words(a, {"a^2", "b", "a b a^-1"}));
  CHECK(g.num_vertices() == 2);
  CHECK(g.is_cover());

  g = fold_subgroup_graph(a, {});
  CHECK(g.num_vertices() == 1);
  CHECK(g.num_edges() == 0);
}

TEST_CASE("membership", "[stallings]") {
  auto a = F(2);
  auto g = fold_subgroup_graph(a, words(a, {"a^2", "b", "a b a^-1"}));
  CHECK(membership(g, parse_word(a, "a^2")));
  CHECK_FALSE(membership(g, parse_word(a, "a")));
  CHECK(membership(g, identity(a)));
  CHECK(membership(fold_subgroup_graph(a, {}), identity(a)));

  // odd a-exponent sum is exactly non-membership here
  auto r = oracle::rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    auto w = oracle::random_reduced(r, a, trial % 11);
    CHECK(membership(g, w) == (exponent_sums(w)[0] % 2 == 0));
  }
}

TEST_CASE("rank, index and transversal", "[stallings]") {
  auto a = F(2);
  auto r = rank_index_transversal(fold_subgroup_graph(a, words(a, {"a^2", "b", "a b a^-1"})));
  CHECK(r.rank == 3);
  CHECK(r.index == std::optional<std::size_t>(2));
  REQUIRE(r.transversal);
  CHECK(*r.transversal == words(a, {"eps", "a"}));

  r = rank_index_transversal(fold_subgroup_graph(a, words(a, {"a", "b"})));
  CHECK(r.rank == 2);
  CHECK(r.index == std::optional<std::size_t>(1));
  CHECK(*r.transversal == words(a, {"eps"}));

  r = rank_index_transversal(fold_subgroup_graph(a, words(a, {"a^2", "b"})));
  CHECK(r.rank == 2);
  CHECK_FALSE(r.index);
  CHECK_FALSE(r.transversal);
}

TEST_CASE("basis certification and rewriting", "[stallings]") {
  auto a = F(2);
  CHECK(is_basis_of_ambient(a, words(a, {"a b", "b"})));
  CHECK_FALSE(is_basis_of_ambient(a, words(a, {"a^2", "b"})));
  CHECK(is_basis_of_ambient(a, words(a, {"a", "b"})));
  CHECK_FALSE(is_basis_of_ambient(a, words(a, {"a", "b", "a b"})));

  BasisRewriter rw(words(a, {"a b", "b"}));
  auto          u = rw.rewrite(parse_word(a, "a"));
  CHECK(u == parse_word(rw.letters(), "b1 b2^-1"));
  CHECK(rw.expand(u) == parse_word(a, "a"));

  BasisRewriter plain(words(a, {"a", "b"}));
  CHECK(plain.rewrite(parse_word(a, "a b")) == parse_word(plain.letters(), "b1 b2"));
  CHECK_THROWS_AS(rewrite_in_basis(words(a, {"a^2"}), parse_word(a, "a")), NotInSubgroup);
}

TEST_CASE("rewriting round-trips on random subgroup elements", "[stallings]") {
  auto              a = F(2);
  auto              r = oracle::rng(22);
  std::vector<Word> gens = words(a, {"a^2 b", "b^3", "a b a^-1 b^-1"});
  BasisRewriter     rw(gens);
  std::uniform_int_distribution<std::size_t> pick(0, 2 * gens.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    letters_type u;
    for (int i = 0; i < 1 + trial % 8; ++i) {
      u.push_back(static_cast<letter_type>(pick(r)));
    }
    Word uw = Word(rw.letters(), u);
    Word w  = rw.expand(uw);
    CHECK(rw.expand(rw.rewrite(w)) == w);
  }
}

TEST_CASE("folding matches a naive union-find folder", "[stallings]") {
  auto r = oracle::rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t       rank = 2 + trial % 2;
    std::vector<Word> gens;
    for (int k = 0; k < 1 + trial % 4; ++k) {
      gens.push_back(oracle::random_reduced(r, F(rank), 1 + (trial + k) % 7));
    }
    auto mine   = as_naive(fold_subgroup_graph(F(rank), gens));
    auto theirs = naive_fold(rank, gens);
    CHECK(mine.vertices == theirs.vertices);
    CHECK(mine.edges == theirs.edges);
  }
}

TEST_CASE("Nielsen-Schreier on kernels of maps to symmetric groups", "[stallings]") {
  auto r = oracle::rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rank = 2 + trial % 2;
    std::size_t d    = 2 + trial % 4;
    auto [gens, order] = kernel_generators(r, rank, d);
    auto g   = fold_subgroup_graph(F(rank), gens);
    auto rit = rank_index_transversal(g);
    REQUIRE(rit.index);
    CHECK(*rit.index == order);
    CHECK(rit.rank - 1 == order * (rank - 1));
  }
}

TEST_CASE("Schreier transversal properties", "[stallings]") {
  auto r = oracle::rng(25);
  for (int trial = 0; trial < 10; ++trial) {
    auto [gens, order] = kernel_generators(r, 2, 3);
    auto g  = fold_subgroup_graph(F(2), gens);
    auto ts = *rank_index_transversal(g).transversal;
    CHECK(ts.size() == order);
    CHECK(std::find(ts.begin(), ts.end(), identity(F(2))) != ts.end());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (std::size_t j = 0; j < ts.size(); ++j) {
        CHECK(membership(g, product(ts[i], inverse(ts[j]))) == (i == j));
      }
    }
    // every short word lies in exactly one coset H t
    for (int k = 0; k < 50; ++k) {
      auto        w    = oracle::random_reduced(r, F(2), k % 7);
      std::size_t hits = 0;
      for (auto const& t : ts) {
        hits += membership(g, product(w, inverse(t)));
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("fold-order independence", "[stallings]") {
  auto r = oracle::rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t       rank = 2 + trial % 2;
    std::vector<Word> gens;
    for (int k = 0; k < 2 + trial % 4; ++k) {
      gens.push_back(oracle::random_reduced(r, F(rank), 1 + (trial * 3 + k) % 8));
    }
    auto reference = fold_subgroup_graph(F(rank), gens);
    for (int shuffle = 0; shuffle < 10; ++shuffle) {
      std::shuffle(gens.begin(), gens.end(), r);
      CHECK(fold_subgroup_graph(F(rank), gens) == reference);
    }
  }
}
