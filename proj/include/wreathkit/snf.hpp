#ifndef WREATHKIT_SNF_HPP_
#define WREATHKIT_SNF_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace wreathkit {

  using Integer   = boost::multiprecision::cpp_int;
  using IntMatrix = std::vector<std::vector<Integer>>;

  inline IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = 1;
    }
    return m;
  }

  inline IntMatrix multiply(IntMatrix const& a, IntMatrix const& b, std::size_t inner) {
    std::size_t rows = a.size(), cols = b.empty() ? 0 : b.front().size();
    IntMatrix   out(rows, std::vector<Integer>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t k = 0; k < inner; ++k) {
        if (a[i][k] == 0) {
          continue;
        }
        for (std::size_t j = 0; j < cols; ++j) {
          out[i][j] += a[i][k] * b[k][j];
        }
      }
    }
    return out;
  }

  // U * M * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...,
  // nonzero diagonal entries positive.
  struct SmithForm {
    IntMatrix            D, U, V;
    std::vector<Integer> diagonal;  // the first min(rows, cols) entries of D
    std::size_t          rank = 0;
  };

  namespace detail {
    inline Integer abs_value(Integer const& x) {
      return x < 0 ? Integer(-x) : x;
    }
  }  // namespace detail

  // Pivoting always takes an entry of least absolute value in the active
  // block, which keeps entries small on the exponent-sum matrices we feed it.
  inline SmithForm smith_normal_form(IntMatrix const& m, std::size_t cols) {
    std::size_t const rows = m.size();
    SmithForm         s;
    s.D = m;
    for (auto const& row : s.D) {
      if (row.size() != cols) {
        throw InvalidArgument("ragged matrix");
      }
    }
    s.U = identity_matrix(rows);
    s.V = identity_matrix(cols);
    auto& D = s.D;

    auto swap_rows = [&](std::size_t a, std::size_t b) {
      std::swap(D[a], D[b]);
      std::swap(s.U[a], s.U[b]);
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
      for (auto& row : D) {
        std::swap(row[a], row[b]);
      }
      for (auto& row : s.V) {
        std::swap(row[a], row[b]);
      }
    };
    // row_a += q * row_b
    auto add_row = [&](std::size_t a, std::size_t b, Integer const& q) {
      for (std::size_t j = 0; j < cols; ++j) {
        D[a][j] += q * D[b][j];
      }
      for (std::size_t j = 0; j < rows; ++j) {
        s.U[a][j] += q * s.U[b][j];
      }
    };
    // col_a += q * col_b
    auto add_col = [&](std::size_t a, std::size_t b, Integer const& q) {
      for (std::size_t i = 0; i < rows; ++i) {
        D[i][a] += q * D[i][b];
      }
      for (std::size_t i = 0; i < cols; ++i) {
        s.V[i][a] += q * s.V[i][b];
      }
    };

    std::size_t const n = std::min(rows, cols);
    for (std::size_t t = 0; t < n; ++t) {
      bool finished = false;
      while (true) {
        std::optional<std::pair<std::size_t, std::size_t>> pivot;
        Integer                                            best;
        for (std::size_t i = t; i < rows; ++i) {
          for (std::size_t j = t; j < cols; ++j) {
            if (D[i][j] != 0 && (!pivot || detail::abs_value(D[i][j]) < best)) {
              pivot = {i, j};
              best  = detail::abs_value(D[i][j]);
            }
          }
        }
        if (!pivot) {
          finished = true;
          break;
        }
        swap_rows(t, pivot->first);
        swap_cols(t, pivot->second);

        bool dirty = false;
        for (std::size_t i = t + 1; i < rows; ++i) {
          if (D[i][t] != 0) {
            add_row(i, t, -Integer(D[i][t] / D[t][t]));
            dirty = dirty || D[i][t] != 0;
          }
        }
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (D[t][j] != 0) {
            add_col(j, t, -Integer(D[t][j] / D[t][t]));
            dirty = dirty || D[t][j] != 0;
          }
        }
        if (dirty) {
          continue;
        }
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < rows && !bad_row; ++i) {
          for (std::size_t j = t + 1; j < cols; ++j) {
            if (D[i][j] % D[t][t] != 0) {
              bad_row = i;
              break;
            }
          }
        }
        if (!bad_row) {
          break;
        }
        add_row(t, *bad_row, 1);
      }
      if (finished) {
        break;
      }
      if (D[t][t] < 0) {
        add_row(t, t, -2);
      }
    }

    for (std::size_t t = 0; t < n; ++t) {
      s.diagonal.push_back(D[t][t]);
      s.rank += D[t][t] != 0 ? 1 : 0;
    }
#ifndef NDEBUG
    if (multiply(multiply(s.U, m, rows), s.V, cols) != s.D) {
      throw Error("Smith normal form verification failed");
    }
#endif
    return s;
  }

}  // namespace wreathkit

#endif  // WREATHKIT_SNF_HPP_
