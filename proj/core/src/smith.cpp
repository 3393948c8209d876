#include "torkit/smith.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace torkit {

namespace {

IntegerMatrix integer_identity(std::size_t n) {
  IntegerMatrix m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 1;
  }
  return m;
}

IntegerMatrix integer_product(const IntegerMatrix& a, const IntegerMatrix& b) {
  std::size_t r = a.size();
  std::size_t k = b.size();
  std::size_t c = k == 0 ? 0 : b.front().size();
  IntegerMatrix out(r, std::vector<Integer>(c, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < c; ++j) {
        out[i][j] += a[i][t] * b[t][j];
      }
    }
  }
  return out;
}

Integer abs_det_mod_sign(const IntegerMatrix& m) {
  std::size_t n = m.size();
  ExactMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      e.at(i, j) = GaussianRational(Rational(m[i][j]));
    }
  }
  GaussianRational d = determinant(e);
  if (!d.is_integer()) {
    throw std::logic_error("integer determinant came out non-integral");
  }
  return abs(d.re().get_num());
}

}  // namespace

SmithDecomposition smith_normal_form(const ExactMatrix& m) {
  std::size_t rows = m.rows();
  std::size_t cols = m.cols();
  IntegerMatrix a(rows, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const GaussianRational& e = m.at(i, j);
      if (!e.is_integer()) {
        throw std::invalid_argument("smith_normal_form requires integral entries, got " +
                                    e.str());
      }
      a[i][j] = e.re().get_num();
    }
  }

  IntegerMatrix left = integer_identity(rows);
  IntegerMatrix right = integer_identity(cols);

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(a[i], a[j]);
    std::swap(left[i], left[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) {
      std::swap(a[r][i], a[r][j]);
    }
    for (std::size_t r = 0; r < cols; ++r) {
      std::swap(right[r][i], right[r][j]);
    }
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& v : a[i]) {
      v = -v;
    }
    for (auto& v : left[i]) {
      v = -v;
    }
  };

  auto row_axpy = [&](std::size_t dst, const Integer& q, std::size_t src) {
    for (std::size_t j = 0; j < cols; ++j) {
      a[dst][j] -= q * a[src][j];
    }
    for (std::size_t j = 0; j < rows; ++j) {
      left[dst][j] -= q * left[src][j];
    }
  };
  auto col_axpy = [&](std::size_t dst, const Integer& q, std::size_t src) {
    for (std::size_t r = 0; r < rows; ++r) {
      a[r][dst] -= q * a[r][src];
    }
    for (std::size_t r = 0; r < cols; ++r) {
      right[r][dst] -= q * right[r][src];
    }
  };
  // One extended-gcd step replaces the Euclidean remainder cascade: the pair
  // (a[t][t], a[i][t]) becomes (g, 0) under a determinant-1 transform of the
  // two rows. Used only when the pivot does not already divide the target, so
  // every gcd step strictly shrinks the pivot; divisible targets are cleared
  // with plain quotient eliminations that leave the pivot row and column
  // untouched. Quotient-by-quotient remainder clearing instead makes
  // intermediate entries blow up exponentially on dense inputs.
  auto row_gcd_step = [&](std::size_t t, std::size_t i) {
    Integer g, s, u;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a[t][t].get_mpz_t(),
               a[i][t].get_mpz_t());
    Integer p = a[t][t] / g;
    Integer q = a[i][t] / g;
    for (std::size_t j = 0; j < cols; ++j) {
      Integer top = s * a[t][j] + u * a[i][j];
      a[i][j] = p * a[i][j] - q * a[t][j];
      a[t][j] = top;
    }
    for (std::size_t j = 0; j < rows; ++j) {
      Integer top = s * left[t][j] + u * left[i][j];
      left[i][j] = p * left[i][j] - q * left[t][j];
      left[t][j] = top;
    }
  };
  auto col_gcd_step = [&](std::size_t t, std::size_t j) {
    Integer g, s, u;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), u.get_mpz_t(), a[t][t].get_mpz_t(),
               a[t][j].get_mpz_t());
    Integer p = a[t][t] / g;
    Integer q = a[t][j] / g;
    for (std::size_t r = 0; r < rows; ++r) {
      Integer lead = s * a[r][t] + u * a[r][j];
      a[r][j] = p * a[r][j] - q * a[r][t];
      a[r][t] = lead;
    }
    for (std::size_t r = 0; r < cols; ++r) {
      Integer lead = s * right[r][t] + u * right[r][j];
      right[r][j] = p * right[r][j] - q * right[r][t];
      right[r][t] = lead;
    }
  };

  std::size_t nd = rows < cols ? rows : cols;
  for (std::size_t t = 0; t < nd; ++t) {
    for (bool settled = false; !settled;) {
      settled = true;
      // Pivot: nonzero entry of least magnitude in the remaining block.
      std::size_t pi = t, pj = t;
      bool found = false;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (a[i][j] == 0) {
            continue;
          }
          if (!found || cmp(abs(a[i][j]), abs(a[pi][pj])) < 0) {
            pi = i;
            pj = j;
            found = true;
          }
        }
      }
      if (!found) {
        break;  // remaining block is zero; trailing divisors stay 0
      }
      if (pi != t) {
        swap_rows(pi, t);
      }
      if (pj != t) {
        swap_cols(pj, t);
      }
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) {
          continue;
        }
        if (a[i][t] % a[t][t] == 0) {
          row_axpy(i, a[i][t] / a[t][t], t);
        } else {
          row_gcd_step(t, i);
          settled = false;  // pivot shrank and row t changed; re-clear
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) {
          continue;
        }
        if (a[t][j] % a[t][t] == 0) {
          col_axpy(j, a[t][j] / a[t][t], t);
        } else {
          col_gcd_step(t, j);
          settled = false;  // pivot shrank and column t changed; re-clear
        }
      }
      if (!settled) {
        continue;
      }
      // Pivot must divide the rest of the block for the divisor chain.
      for (std::size_t i = t + 1; i < rows && settled; ++i) {
        for (std::size_t j = t + 1; j < cols && settled; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t c = 0; c < cols; ++c) {
              a[t][c] += a[i][c];  // pull row i up, then re-clear
            }
            for (std::size_t c = 0; c < rows; ++c) {
              left[t][c] += left[i][c];
            }
            settled = false;
          }
        }
      }
    }
    if (a[t][t] < 0) {
      negate_row(t);
    }
  }

  SmithDecomposition out;
  out.divisors.reserve(nd);
  for (std::size_t t = 0; t < nd; ++t) {
    out.divisors.push_back(a[t][t]);
  }
  out.left = std::move(left);
  out.right = std::move(right);

  // Certificate check: rebuild diag from the original input.
  IntegerMatrix orig(rows, std::vector<Integer>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      orig[i][j] = m.at(i, j).re().get_num();
    }
  }
  IntegerMatrix prod = integer_product(integer_product(out.left, orig), out.right);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      Integer expect = (i == j && i < nd) ? out.divisors[i] : Integer(0);
      if (prod[i][j] != expect) {
        throw std::logic_error("smith_normal_form transform certificate failed");
      }
    }
  }
  if (abs_det_mod_sign(out.left) != 1 || abs_det_mod_sign(out.right) != 1) {
    throw std::logic_error("smith_normal_form transform is not unimodular");
  }
  for (std::size_t t = 0; t + 1 < nd; ++t) {
    const Integer& d = out.divisors[t];
    const Integer& e = out.divisors[t + 1];
    bool ok = d == 0 ? e == 0 : e % d == 0;
    if (!ok || d < 0 || e < 0) {
      throw std::logic_error("smith_normal_form divisor chain violated");
    }
  }
  return out;
}

}  // namespace torkit
