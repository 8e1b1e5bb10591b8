#ifndef WREATHKIT_COSETENUM_HPP_
#define WREATHKIT_COSETENUM_HPP_

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "fingrp.hpp"
#include "presentation.hpp"
#include "words.hpp"

namespace wreathkit {

  enum class CosetStatus { closed, exceeded };

  // Columns are letters (2 * generator + inverted). When closed, cosets are
  // numbered 0..n-1 in order of definition with 0 the subgroup itself.
  struct CosetTable {
    AlphabetPtr               alphabet;
    std::vector<Word>         subgroup_generators;
    std::size_t               num_cosets = 0;
    std::size_t               budget     = 0;
    CosetStatus               status     = CosetStatus::exceeded;
    std::vector<std::int32_t> table;  // num_cosets * width, -1 undefined

    std::size_t width() const noexcept {
      return 2 * alphabet->size();
    }
    bool closed() const noexcept {
      return status == CosetStatus::closed;
    }
    std::int32_t act(std::size_t c, letter_type l) const {
      return table[c * width() + l];
    }
    std::int32_t act(std::size_t c, Word const& w) const {
      auto x = static_cast<std::int32_t>(c);
      for (auto l : w.letters()) {
        if (x < 0) {
          break;
        }
        x = act(static_cast<std::size_t>(x), l);
      }
      return x;
    }
    // Image of every coset under generator g.
    std::vector<std::int32_t> permutation(std::size_t g) const {
      std::vector<std::int32_t> out(num_cosets);
      for (std::size_t c = 0; c < num_cosets; ++c) {
        out[c] = act(c, make_letter(g, false));
      }
      return out;
    }
  };

  inline std::size_t default_max_cosets() {
    if (char const* env = std::getenv("WREATHKIT_MAX_COSETS")) {
      try {
        auto v = std::stoull(env);
        if (v >= 1) {
          return v;
        }
      } catch (std::exception const&) {
      }
    }
    return 100000;
  }

  namespace detail {

    class Enumerator {
     public:
      Enumerator(std::size_t width, std::size_t budget)
          : _w(width), _budget(budget), _table(budget * width, -1), _p(budget, 0) {
        _p[0] = 0;
        _n    = 1;
      }

      std::size_t size() const noexcept {
        return _n;
      }
      bool live(std::size_t c) const noexcept {
        return _p[c] == static_cast<std::int32_t>(c);
      }
      std::int32_t& at(std::size_t c, letter_type x) {
        return _table[c * _w + x];
      }

      // false when no coset could be allocated
      bool define(std::size_t c, letter_type x) {
        if (_n == _budget) {
          return false;
        }
        auto d = static_cast<std::int32_t>(_n++);
        _p[d]         = d;
        at(c, x)      = d;
        at(d, x ^ 1U) = static_cast<std::int32_t>(c);
        return true;
      }

      // HLT scan; with `fill` unset only deductions and coincidences happen.
      bool scan(std::size_t c, letters_type const& w, bool fill) {
        if (w.empty()) {
          return true;
        }
        auto        f = static_cast<std::int32_t>(c), b = f;
        std::size_t i = 0;
        std::size_t j = w.size();  // one past the last unscanned letter
        while (true) {
          while (i < j && at(f, w[i]) >= 0) {
            f = at(f, w[i++]);
          }
          if (i == j) {
            if (f != static_cast<std::int32_t>(c)) {
              coincidence(f, static_cast<std::int32_t>(c));
            }
            return true;
          }
          while (j > i && at(b, w[j - 1] ^ 1U) >= 0) {
            b = at(b, w[--j] ^ 1U);
          }
          if (j == i) {
            coincidence(f, b);
            return true;
          }
          if (j == i + 1) {
            at(f, w[i])      = b;
            at(b, w[i] ^ 1U) = f;
            return true;
          }
          if (!fill) {
            return true;
          }
          if (!define(f, w[i])) {
            return false;
          }
        }
      }

      std::int32_t rep(std::int32_t k) {
        std::int32_t r = k;
        while (_p[r] != r) {
          r = _p[r];
        }
        while (_p[k] != r) {
          std::int32_t next = _p[k];
          _p[k]             = r;
          k                 = next;
        }
        return r;
      }

      void coincidence(std::int32_t a, std::int32_t b) {
        _queue.clear();
        merge(a, b);
        for (std::size_t q = 0; q < _queue.size(); ++q) {
          std::int32_t e = _queue[q];
          for (letter_type x = 0; x < _w; ++x) {
            std::int32_t f = at(e, x);
            if (f < 0) {
              continue;
            }
            at(f, x ^ 1U)   = -1;
            std::int32_t e1 = rep(e), f1 = rep(f);
            if (at(e1, x) >= 0) {
              merge(f1, at(e1, x));
            } else if (at(f1, x ^ 1U) >= 0) {
              merge(e1, at(f1, x ^ 1U));
            } else {
              at(e1, x)      = f1;
              at(f1, x ^ 1U) = e1;
            }
          }
        }
      }

      // Removes dead cosets preserving order; returns the new index of `c`
      // (or of the next live coset after it).
      std::size_t compact(std::size_t c) {
        std::vector<std::int32_t> renum(_n, -1);
        std::size_t               k = 0, new_c = SIZE_MAX;
        for (std::size_t e = 0; e < _n; ++e) {
          if (e >= c && new_c == SIZE_MAX && live(e)) {
            new_c = k;
          }
          if (live(e)) {
            renum[e] = static_cast<std::int32_t>(k++);
          }
        }
        for (std::size_t e = 0; e < _n; ++e) {
          if (!live(e)) {
            continue;
          }
          std::size_t to = static_cast<std::size_t>(renum[e]);
          for (letter_type x = 0; x < _w; ++x) {
            std::int32_t y       = at(e, x);
            _table[to * _w + x] = y < 0 ? -1 : renum[y];
          }
        }
        std::fill(_table.begin() + static_cast<std::ptrdiff_t>(k * _w), _table.end(), -1);
        for (std::size_t e = 0; e < _budget; ++e) {
          _p[e] = static_cast<std::int32_t>(e);
        }
        _n = k;
        return new_c == SIZE_MAX ? k : new_c;
      }

      std::vector<std::int32_t> take_table() {
        _table.resize(_n * _w);
        return std::move(_table);
      }

     private:
      void merge(std::int32_t k, std::int32_t l) {
        std::int32_t a = rep(k), b = rep(l);
        if (a == b) {
          return;
        }
        if (a > b) {
          std::swap(a, b);
        }
        _p[b] = a;
        _queue.push_back(b);
      }

      std::size_t               _w;
      std::size_t               _budget;
      std::size_t               _n;
      std::vector<std::int32_t> _table;
      std::vector<std::int32_t> _p;
      std::vector<std::int32_t> _queue;
    };

  }  // namespace detail

  // Checks the closure properties of a table claimed closed: every entry
  // defined and mutually inverse, relators fix every coset, subgroup
  // generators fix coset 0, and every coset is reachable from coset 0.
  inline bool verify_closed_table(CosetTable const& t, Presentation const& p) {
    std::size_t const n = t.num_cosets, w = t.width();
    if (t.table.size() != n * w || n == 0) {
      return false;
    }
    for (std::size_t c = 0; c < n; ++c) {
      for (letter_type x = 0; x < w; ++x) {
        std::int32_t d = t.act(c, x);
        if (d < 0 || static_cast<std::size_t>(d) >= n
            || t.act(static_cast<std::size_t>(d), x ^ 1U) != static_cast<std::int32_t>(c)) {
          return false;
        }
      }
      for (auto const& r : p.relators) {
        if (t.act(c, r) != static_cast<std::int32_t>(c)) {
          return false;
        }
      }
    }
    for (auto const& h : t.subgroup_generators) {
      if (t.act(0, h) != 0) {
        return false;
      }
    }
    std::vector<bool>        seen(n, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      for (letter_type x = 0; x < w; ++x) {
        auto d = static_cast<std::size_t>(t.act(queue[q], x));
        if (!seen[d]) {
          seen[d] = true;
          queue.push_back(d);
        }
      }
    }
    return queue.size() == n;
  }

  // HLT enumeration. When the table fills up, every live coset is scanned
  // without defining (lookahead) and dead rows are compacted away; if that
  // leaves the table at least 75% full the result is `exceeded`.
  inline CosetTable todd_coxeter(Presentation const&      p,
                                 std::vector<Word> const& subgroup_gens,
                                 std::size_t              max_cosets = default_max_cosets()) {
    if (max_cosets < 1) {
      throw InvalidArgument("max_cosets must be at least 1");
    }
    for (auto const& h : subgroup_gens) {
      if (!same_alphabet(h.alphabet(), p.alphabet)) {
        throw AlphabetMismatch("subgroup generator over a different alphabet");
      }
    }
    CosetTable out;
    out.alphabet            = p.alphabet;
    out.subgroup_generators = subgroup_gens;
    out.budget              = max_cosets;
    std::size_t const w     = out.width();

    std::vector<letters_type> rels;
    for (auto const& r : p.relators) {
      if (!r.empty()) {
        rels.push_back(r.letters());
      }
    }

    detail::Enumerator e(w, max_cosets);
    bool               ok = true;

    auto lookahead = [&](std::size_t c) -> std::size_t {
      for (std::size_t d = 0; d < e.size(); ++d) {
        for (auto const& r : rels) {
          if (!e.live(d)) {
            break;
          }
          e.scan(d, r, false);
        }
      }
      return e.compact(c);
    };
    auto exhausted = [&] { return 4 * e.size() >= 3 * max_cosets; };

    enum class Step { done, retry, fail };
    // Runs `step`; when the table is full, makes room and asks the caller to
    // restart the current coset, which may have moved.
    auto attempt = [&](std::size_t& c, auto&& step) {
      if (step()) {
        return Step::done;
      }
      std::size_t before = e.size();
      c                  = lookahead(c);
      return exhausted() || e.size() == before ? Step::fail : Step::retry;
    };

    std::size_t c = 0;
    for (std::size_t k = 0; ok && k < subgroup_gens.size();) {
      auto s = attempt(c, [&] { return e.scan(0, subgroup_gens[k].letters(), true); });
      ok     = s != Step::fail;
      k += s == Step::done ? 1 : 0;
    }
    c = 0;
    while (ok && c < e.size()) {
      if (!e.live(c)) {
        ++c;
        continue;
      }
      Step s = Step::done;
      for (std::size_t k = 0; s == Step::done && k < rels.size() && e.live(c); ++k) {
        s = attempt(c, [&] { return e.scan(c, rels[k], true); });
      }
      for (letter_type x = 0; s == Step::done && x < w && e.live(c); ++x) {
        if (e.at(c, x) < 0) {
          s = attempt(c, [&] { return e.define(c, x); });
        }
      }
      ok = s != Step::fail;
      if (s == Step::done) {
        ++c;
      }
    }
    e.compact(0);
    out.num_cosets = e.size();
    out.table      = e.take_table();
    out.status     = ok ? CosetStatus::closed : CosetStatus::exceeded;
    if (out.closed() && !verify_closed_table(out, p)) {
      throw std::logic_error("coset enumeration produced an inconsistent table");
    }
    return out;
  }

  // Finite group of a closed table over a subgroup generated by trivial words:
  // coset i stands for its breadth-first representative word w_i, and
  // i * j is the coset reached from i along w_j.
  struct EnumeratedGroup {
    FiniteGroup               group;
    std::vector<element_type> generator_images;
    std::vector<Word>         representatives;
  };

  inline EnumeratedGroup quotient_group(CosetTable const& t) {
    if (!t.closed()) {
      throw NotClosed("coset table is not closed");
    }
    for (auto const& h : t.subgroup_generators) {
      if (!h.empty()) {
        throw PreconditionViolated("quotient_group needs the trivial subgroup");
      }
    }
    std::size_t const        n = t.num_cosets;
    std::vector<std::size_t> parent(n, SIZE_MAX), order{0};
    std::vector<letter_type> via(n, 0);
    parent[0] = 0;
    for (std::size_t q = 0; q < order.size(); ++q) {
      for (letter_type x = 0; x < t.width(); ++x) {
        auto d = static_cast<std::size_t>(t.act(order[q], x));
        if (parent[d] == SIZE_MAX) {
          parent[d] = order[q];
          via[d]    = x;
          order.push_back(d);
        }
      }
    }
    EnumeratedGroup out;
    out.representatives.assign(n, identity(t.alphabet));
    for (std::size_t q = 1; q < n; ++q) {
      std::size_t d          = order[q];
      auto        letters    = out.representatives[parent[d]].letters();
      letters.push_back(via[d]);
      out.representatives[d] = Word::from_reduced(t.alphabet, std::move(letters));
    }
    // column j of the table is the permutation i -> i . w_j
    std::vector<element_type> tab(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      tab[i * n + 0] = static_cast<element_type>(i);
    }
    for (std::size_t q = 1; q < n; ++q) {
      std::size_t j = order[q], pj = parent[j];
      for (std::size_t i = 0; i < n; ++i) {
        tab[i * n + j] = static_cast<element_type>(t.act(tab[i * n + pj], via[j]));
      }
    }
    out.group = FiniteGroup::trusted(n, std::move(tab));
    for (std::size_t g = 0; g < t.alphabet->size(); ++g) {
      out.generator_images.push_back(static_cast<element_type>(t.act(0, make_letter(g, false))));
    }
    return out;
  }

}  // namespace wreathkit

#endif  // WREATHKIT_COSETENUM_HPP_
