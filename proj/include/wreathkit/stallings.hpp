#ifndef WREATHKIT_STALLINGS_HPP_
#define WREATHKIT_STALLINGS_HPP_

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "words.hpp"

namespace wreathkit {

  namespace detail {

    inline letters_type reduced_product(letters_type const& x, letters_type const& y) {
      letters_type out(x);
      out.insert(out.end(), y.begin(), y.end());
      free_reduce(out);
      return out;
    }

    // Stallings folding on an explicit edge list. Each edge may carry a
    // weight, a word over an auxiliary alphabet. Folding maintains the
    // invariant that for every vertex u there is a word P(u) over the ambient
    // alphabet (P(base) = 1) with expand(weight(a -g-> b)) = P(a) g P(b)^-1, so
    // that reading a closed path at the base yields an expression of the read
    // word over the auxiliary alphabet.
    class Folder {
     public:
      Folder(std::size_t rank, bool track_weights)
          : _rank(rank), _track(track_weights) {
        add_vertex();
      }

      std::size_t add_vertex() {
        _slots.emplace_back(2 * _rank);
        _alive.push_back(true);
        return _slots.size() - 1;
      }

      void add_edge(std::size_t from, std::size_t gen, std::size_t to, letters_type weight = {}) {
        auto id = static_cast<std::uint32_t>(_edges.size());
        _edges.push_back({static_cast<std::uint32_t>(from),
                          static_cast<std::uint32_t>(to),
                          static_cast<std::uint32_t>(gen),
                          std::move(weight),
                          true});
        push(from, make_letter(gen, false), id);
        push(to, make_letter(gen, true), id);
      }

      // A closed path at the base reading w; the final edge carries `weight`.
      void add_petal(letters_type const& w, letters_type weight = {}) {
        if (w.empty()) {
          return;
        }
        std::size_t cur = 0;
        for (std::size_t i = 0; i < w.size(); ++i) {
          std::size_t  next = (i + 1 == w.size()) ? 0 : add_vertex();
          letters_type wt   = (i + 1 == w.size()) ? weight : letters_type{};
          letter_type  l    = w[i];
          if (is_inverted(l)) {
            add_edge(next, generator_of(l), cur, inverse(wt));
          } else {
            add_edge(cur, generator_of(l), next, std::move(wt));
          }
          cur = next;
        }
      }

      void fold() {
        while (!_queue.empty()) {
          auto [v, l] = _queue.front();
          _queue.pop_front();
          if (!_alive[v]) {
            continue;
          }
          auto& slot = clean(v, l);
          if (slot.size() < 2) {
            continue;
          }
          std::uint32_t e1 = slot[0], e2 = slot[1];
          std::size_t   w1 = other_end(e1, l), w2 = other_end(e2, l);
          if (w1 == w2) {
            _edges[e2].alive = false;
            enqueue(v, l);
            enqueue(w1, inverse_of(l));
            continue;
          }
          std::size_t gone, keep;
          if (w1 == 0) {
            gone = w2, keep = w1;
          } else if (w2 == 0) {
            gone = w1, keep = w2;
          } else if (degree(w2) <= degree(w1)) {
            gone = w2, keep = w1;
          } else {
            gone = w1, keep = w2;
          }
          if (_track) {
            letters_type t1 = traversal(e1, l), t2 = traversal(e2, l);
            letters_type p  = gone == w2 ? reduced_product(inverse(t1), t2)
                                         : reduced_product(inverse(t2), t1);
            reweight(gone, p);
          }
          merge(gone, keep);
          enqueue(v == gone ? keep : v, l);
        }
        prune();
      }

      std::size_t rank() const noexcept {
        return _rank;
      }

      // Canonical numbering: breadth-first from the base, letters in order.
      // Returns the table (vertices x 2*rank, -1 where undefined) and, when
      // weights are tracked, the traversal weight of every defined entry.
      void canonical(std::vector<std::int32_t>& table,
                     std::vector<letters_type>* weights) const {
        std::size_t const         width = 2 * _rank;
        std::vector<std::int32_t> relabel(_slots.size(), -1);
        std::vector<std::size_t>  order{0};
        relabel[0] = 0;
        for (std::size_t q = 0; q < order.size(); ++q) {
          std::size_t v = order[q];
          for (letter_type l = 0; l < width; ++l) {
            auto e = single(v, l);
            if (!e) {
              continue;
            }
            std::size_t t = other_end(*e, l);
            if (relabel[t] < 0) {
              relabel[t] = static_cast<std::int32_t>(order.size());
              order.push_back(t);
            }
          }
        }
        table.assign(order.size() * width, -1);
        if (weights) {
          weights->assign(order.size() * width, {});
        }
        for (std::size_t q = 0; q < order.size(); ++q) {
          for (letter_type l = 0; l < width; ++l) {
            auto e = single(order[q], l);
            if (!e) {
              continue;
            }
            table[q * width + l] = relabel[other_end(*e, l)];
            if (weights) {
              (*weights)[q * width + l] = traversal(*e, l);
            }
          }
        }
      }

     private:
      struct Edge {
        std::uint32_t from, to, gen;
        letters_type  weight;
        bool          alive;
      };

      void push(std::size_t v, letter_type l, std::uint32_t e) {
        _slots[v][l].push_back(e);
        if (_slots[v][l].size() >= 2) {
          enqueue(v, l);
        }
      }

      void enqueue(std::size_t v, letter_type l) {
        _queue.emplace_back(v, l);
      }

      std::vector<std::uint32_t>& clean(std::size_t v, letter_type l) {
        auto& s = _slots[v][l];
        std::erase_if(s, [this](std::uint32_t e) { return !_edges[e].alive; });
        return s;
      }

      std::optional<std::uint32_t> single(std::size_t v, letter_type l) const {
        for (auto e : _slots[v][l]) {
          if (_edges[e].alive) {
            return e;
          }
        }
        return std::nullopt;
      }

      std::size_t other_end(std::uint32_t e, letter_type l) const {
        return is_inverted(l) ? _edges[e].from : _edges[e].to;
      }

      letters_type traversal(std::uint32_t e, letter_type l) const {
        return is_inverted(l) ? inverse(_edges[e].weight) : _edges[e].weight;
      }

      std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (auto const& s : _slots[v]) {
          for (auto e : s) {
            d += _edges[e].alive ? 1 : 0;
          }
        }
        return d;
      }

      std::vector<std::uint32_t> incident(std::size_t v) const {
        std::vector<std::uint32_t> out;
        for (auto const& s : _slots[v]) {
          for (auto e : s) {
            if (_edges[e].alive) {
              out.push_back(e);
            }
          }
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
      }

      // Potential p at vertex u: weight(a -> b) becomes p(a) weight p(b)^-1.
      void reweight(std::size_t u, letters_type const& p) {
        if (p.empty()) {
          return;
        }
        letters_type pinv = inverse(p);
        for (auto e : incident(u)) {
          auto& edge = _edges[e];
          if (edge.from == u) {
            edge.weight = reduced_product(p, edge.weight);
          }
          if (edge.to == u) {
            edge.weight = reduced_product(edge.weight, pinv);
          }
        }
      }

      void merge(std::size_t gone, std::size_t keep) {
        auto moved = incident(gone);
        for (letter_type l = 0; l < 2 * _rank; ++l) {
          for (auto e : _slots[gone][l]) {
            if (_edges[e].alive) {
              _slots[keep][l].push_back(e);
            }
          }
          _slots[gone][l].clear();
          if (_slots[keep][l].size() >= 2) {
            enqueue(keep, l);
          }
        }
        for (auto e : moved) {
          if (_edges[e].from == gone) {
            _edges[e].from = static_cast<std::uint32_t>(keep);
          }
          if (_edges[e].to == gone) {
            _edges[e].to = static_cast<std::uint32_t>(keep);
          }
        }
        _alive[gone] = false;
      }

      // Remove hanging trees away from the base.
      void prune() {
        std::vector<std::size_t> stack;
        for (std::size_t v = 1; v < _slots.size(); ++v) {
          if (_alive[v] && degree(v) <= 1) {
            stack.push_back(v);
          }
        }
        while (!stack.empty()) {
          std::size_t v = stack.back();
          stack.pop_back();
          if (!_alive[v] || degree(v) > 1) {
            continue;
          }
          for (auto e : incident(v)) {
            _edges[e].alive = false;
            std::size_t t   = _edges[e].from == v ? _edges[e].to : _edges[e].from;
            if (t != 0 && _alive[t] && degree(t) <= 1) {
              stack.push_back(t);
            }
          }
          _alive[v] = false;
        }
      }

      std::size_t                                          _rank;
      bool                                                 _track;
      std::vector<Edge>                                    _edges;
      std::vector<std::vector<std::vector<std::uint32_t>>> _slots;
      std::vector<bool>                                    _alive;
      std::deque<std::pair<std::size_t, letter_type>>      _queue;
    };

  }  // namespace detail

  // Folded core graph of a finitely generated subgroup of a free group,
  // vertices numbered breadth-first from the base (vertex 0).
  class SubgroupGraph {
   public:
    SubgroupGraph(AlphabetPtr alphabet, std::vector<std::int32_t> table)
        : _alphabet(std::move(alphabet)), _table(std::move(table)) {}

    AlphabetPtr const& alphabet() const noexcept {
      return _alphabet;
    }
    std::size_t width() const noexcept {
      return 2 * _alphabet->size();
    }
    std::size_t num_vertices() const noexcept {
      return width() == 0 ? 1 : _table.size() / width();
    }
    std::optional<std::size_t> target(std::size_t v, letter_type l) const {
      auto t = _table[v * width() + l];
      return t < 0 ? std::nullopt : std::optional<std::size_t>(t);
    }
    std::vector<std::int32_t> const& table() const noexcept {
      return _table;
    }

    // Counts each geometric edge once (positive orientation).
    std::size_t num_edges() const {
      std::size_t e = 0;
      for (std::size_t v = 0; v < num_vertices(); ++v) {
        for (std::size_t g = 0; g < _alphabet->size(); ++g) {
          e += target(v, make_letter(g)) ? 1 : 0;
        }
      }
      return e;
    }

    bool is_cover() const {
      return std::none_of(_table.begin(), _table.end(), [](auto t) { return t < 0; });
    }

    // Endpoint of reading w from v, if every transition exists.
    std::optional<std::size_t> read(std::size_t v, std::span<letter_type const> w) const {
      for (auto l : w) {
        auto t = target(v, l);
        if (!t) {
          return std::nullopt;
        }
        v = *t;
      }
      return v;
    }

    friend bool operator==(SubgroupGraph const& x, SubgroupGraph const& y) {
      return same_alphabet(x._alphabet, y._alphabet) && x._table == y._table;
    }

   private:
    AlphabetPtr               _alphabet;
    std::vector<std::int32_t> _table;
  };

  inline SubgroupGraph fold_subgroup_graph(AlphabetPtr const& alphabet,
                                           std::vector<Word> const& generators) {
    detail::Folder folder(alphabet->size(), false);
    for (auto const& g : generators) {
      if (!same_alphabet(g.alphabet(), alphabet)) {
        throw AlphabetMismatch("subgroup generator over a different alphabet");
      }
      folder.add_petal(g.letters());
    }
    folder.fold();
    std::vector<std::int32_t> table;
    folder.canonical(table, nullptr);
    return SubgroupGraph(alphabet, std::move(table));
  }

  // A core graph accepts exactly the reduced words of the subgroup, so a
  // missing transition is already a rejection.
  inline bool membership(SubgroupGraph const& g, Word const& w) {
    auto end = g.read(0, w.letters());
    return end && *end == 0;
  }

  struct RankIndexTransversal {
    std::size_t                      rank;
    std::optional<std::size_t>       index;  // nullopt: infinite
    std::optional<std::vector<Word>> transversal;
  };

  // Schreier transversal from the breadth-first spanning tree; representative
  // t_v reads from the base to v, so H t_v are the distinct right cosets.
  inline std::vector<Word> spanning_tree_words(SubgroupGraph const& g) {
    std::vector<std::optional<letters_type>> word(g.num_vertices());
    word[0] = letters_type{};
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      // BFS numbering: every vertex other than the base is discovered from a
      // smaller one, so one sweep in vertex order suffices.
      if (!word[v]) {
        continue;
      }
      for (letter_type l = 0; l < g.width(); ++l) {
        auto t = g.target(v, l);
        if (t && !word[*t]) {
          letters_type w = *word[v];
          w.push_back(l);
          word[*t] = std::move(w);
        }
      }
    }
    std::vector<Word> out;
    for (auto& w : word) {
      out.push_back(Word::from_reduced(g.alphabet(), w.value_or(letters_type{})));
    }
    return out;
  }

  inline RankIndexTransversal rank_index_transversal(SubgroupGraph const& g) {
    RankIndexTransversal r;
    r.rank = g.num_edges() + 1 - g.num_vertices();
    if (g.is_cover()) {
      r.index       = g.num_vertices();
      r.transversal = spanning_tree_words(g);
    }
    return r;
  }

  inline bool is_basis_of_ambient(AlphabetPtr const& alphabet, std::vector<Word> const& candidates) {
    if (candidates.size() != alphabet->size()) {
      return false;
    }
    auto g = fold_subgroup_graph(alphabet, candidates);
    return g.num_vertices() == 1 && g.is_cover();
  }

  // Fresh alphabet with one letter per basis element.
  inline AlphabetPtr basis_alphabet(std::size_t k, std::vector<std::string> names = {}) {
    if (names.empty()) {
      for (std::size_t i = 0; i < k; ++i) {
        names.push_back("b" + std::to_string(i + 1));
      }
    }
    if (names.size() != k) {
      throw InvalidArgument("basis alphabet needs one name per basis element");
    }
    return Alphabet::make(std::move(names));
  }

  // Rewrites subgroup elements over a fixed generating list by folding with
  // edge weights. Construct once, rewrite many.
  class BasisRewriter {
   public:
    BasisRewriter(std::vector<Word> basis, AlphabetPtr basis_letters = nullptr)
        : _basis(std::move(basis)) {
      if (_basis.empty()) {
        throw InvalidArgument("rewriting needs a nonempty generating list");
      }
      _ambient = _basis.front().alphabet();
      _letters = basis_letters ? std::move(basis_letters) : basis_alphabet(_basis.size());
      if (_letters->size() != _basis.size()) {
        throw InvalidArgument("basis alphabet size mismatch");
      }
      detail::Folder folder(_ambient->size(), true);
      for (std::size_t k = 0; k < _basis.size(); ++k) {
        check_same_alphabet(_basis[k], _basis.front());
        folder.add_petal(_basis[k].letters(), {make_letter(k)});
      }
      folder.fold();
      std::vector<std::int32_t> table;
      folder.canonical(table, &_weights);
      _graph.emplace(_ambient, std::move(table));
    }

    SubgroupGraph const& graph() const {
      return *_graph;
    }
    AlphabetPtr const& letters() const noexcept {
      return _letters;
    }

    Word rewrite(Word const& w) const {
      if (!same_alphabet(w.alphabet(), _ambient)) {
        throw AlphabetMismatch("word over a different alphabet than the basis");
      }
      std::size_t  v = 0;
      letters_type acc;
      for (auto l : w.letters()) {
        auto t = _graph->target(v, l);
        if (!t) {
          throw NotInSubgroup(to_string(w) + " is not in the subgroup");
        }
        auto const& wt = _weights[v * _graph->width() + l];
        acc.insert(acc.end(), wt.begin(), wt.end());
        detail::free_reduce(acc);
        v = *t;
      }
      if (v != 0) {
        throw NotInSubgroup(to_string(w) + " is not in the subgroup");
      }
      return Word::from_reduced(_letters, std::move(acc));
    }

    Word expand(Word const& u) const {
      if (!same_alphabet(u.alphabet(), _letters)) {
        throw AlphabetMismatch("expand expects a word over the basis letters");
      }
      letters_type out;
      for (auto l : u.letters()) {
        auto const& b = _basis[generator_of(l)].letters();
        if (is_inverted(l)) {
          auto inv = detail::inverse(b);
          out.insert(out.end(), inv.begin(), inv.end());
        } else {
          out.insert(out.end(), b.begin(), b.end());
        }
      }
      detail::free_reduce(out);
      return Word::from_reduced(_ambient, std::move(out));
    }

   private:
    std::vector<Word>            _basis;
    AlphabetPtr                  _ambient;
    AlphabetPtr                  _letters;
    std::optional<SubgroupGraph> _graph;
    std::vector<letters_type>    _weights;
  };

  inline Word rewrite_in_basis(std::vector<Word> const& basis, Word const& w) {
    return BasisRewriter(basis).rewrite(w);
  }

}  // namespace wreathkit

#endif  // WREATHKIT_STALLINGS_HPP_
