#pragma once

// Exact linear algebra over Z and over prime fields F_p.
//
// Everything here is exact: integer matrices hold arbitrary-precision
// entries (GMP), F_p vectors hold residues of a small prime.  No floating
// point anywhere.  All functions are pure and deterministic: a fixed
// pivoting rule makes Smith/Hermite outputs reproducible bit for bit.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "edp/errors.hpp"

namespace edp {

using Int = mpz_class;
using IntVec = std::vector<Int>;

// Strict base-10 integer parsing (mpz_class's string constructor would
// honor 0x/0 prefixes, which the text formats do not allow).
inline std::optional<Int> parse_int_token(const std::string& s) {
  Int v;
  if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
    return std::nullopt;
  return v;
}

// ---------------------------------------------------------------------------
// IntMatrix

// Dense integer matrix, row-major.  0xN and Nx0 matrices are legal and show
// up routinely (empty relation sets, rank-0 kernels).
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw validation_error(errc::dimension_mismatch, "ragged row list");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  static IntMatrix from_columns(const std::vector<IntVec>& cols,
                                std::size_t rows) {
    IntMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows)
        throw validation_error(errc::dimension_mismatch, "ragged column list");
      for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool is_zero() const {
    for (const Int& x : data_)
      if (sgn(x) != 0) return false;
    return true;
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  IntMatrix operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_)
      throw validation_error(errc::dimension_mismatch, "matrix product shape");
    IntMatrix out(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = at(i, k);
        if (sgn(a) == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          out.at(i, j) += a * o.at(k, j);
      }
    return out;
  }

  IntMatrix operator-(const IntMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw validation_error(errc::dimension_mismatch, "matrix difference");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i)
      out.data_[i] = data_[i] - o.data_[i];
    return out;
  }

  IntVec apply(const IntVec& x) const {
    if (x.size() != cols_)
      throw validation_error(errc::dimension_mismatch, "matrix-vector shape");
    IntVec y(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
    return y;
  }

  IntVec column(std::size_t j) const {
    IntVec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  static IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_)
      throw validation_error(errc::dimension_mismatch, "hstack row counts");
    IntMatrix out(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) out.at(i, j) = a.at(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j)
        out.at(i, a.cols_ + j) = b.at(i, j);
    }
    return out;
  }

  // First `count` rows, all columns.
  IntMatrix top_rows(std::size_t count) const {
    IntMatrix out(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
    return out;
  }

  IntMatrix left_cols(std::size_t count) const {
    IntMatrix out(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) out.at(i, j) = at(i, j);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j)
      std::swap(at(a, j), at(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i)
      std::swap(at(i, a), at(i, b));
  }
  void negate_row(std::size_t i) {
    for (std::size_t j = 0; j < cols_; ++j) at(i, j) = -at(i, j);
  }
  void negate_col(std::size_t j) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
  }
  // row dst -= q * row src
  void row_submul(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) -= q * at(src, j);
  }
  // col dst -= q * col src
  void col_submul(std::size_t dst, std::size_t src, const Int& q) {
    for (std::size_t i = 0; i < rows_; ++i) at(i, dst) -= q * at(i, src);
  }
  // row dst += row src
  void row_add(std::size_t dst, std::size_t src) {
    for (std::size_t j = 0; j < cols_; ++j) at(dst, j) += at(src, j);
  }

  std::string str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      os << (i ? " [" : "[");
      for (std::size_t j = 0; j < cols_; ++j)
        os << (j ? " " : "") << at(i, j).get_str();
      os << "]";
    }
    os << "]";
    return os.str();
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVec data_;
};

// ---------------------------------------------------------------------------
// Smith normal form

struct SmithDecomposition {
  IntMatrix U;  // rows x rows, unimodular
  IntMatrix D;  // same shape as input, diagonal with d_1 | d_2 | ..., d_i > 0
  IntMatrix V;  // cols x cols, unimodular
  std::size_t rank = 0;
};

namespace detail {
inline int cmpabs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}
inline bool divides(const Int& d, const Int& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}
}  // namespace detail

// U * M * V = D.  Pivot rule: smallest absolute nonzero entry of the trailing
// block, ties broken by row-major position.  Fixing the rule keeps witnesses
// reproducible across runs and platforms.
inline SmithDecomposition smith_normal_form(const IntMatrix& M) {
  const std::size_t r = M.rows(), c = M.cols();
  SmithDecomposition out{IntMatrix::identity(r), M, IntMatrix::identity(c), 0};
  IntMatrix& A = out.D;
  IntMatrix& U = out.U;
  IntMatrix& V = out.V;

  const std::size_t steps = std::min(r, c);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = r, pj = c;
    for (std::size_t i = t; i < r; ++i)
      for (std::size_t j = t; j < c; ++j) {
        if (sgn(A.at(i, j)) == 0) continue;
        if (pi == r || detail::cmpabs(A.at(i, j), A.at(pi, pj)) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi == r) break;  // trailing block is zero
    if (pi != t) { A.swap_rows(t, pi); U.swap_rows(t, pi); }
    if (pj != t) { A.swap_cols(t, pj); V.swap_cols(t, pj); }

    for (;;) {
      // Clear column t below the pivot.  A nonzero remainder becomes the new
      // (strictly smaller) pivot, so this loop terminates.
      bool again = true;
      while (again) {
        again = false;
        for (std::size_t i = t + 1; i < r; ++i) {
          if (sgn(A.at(i, t)) == 0) continue;
          Int q = A.at(i, t) / A.at(t, t);
          if (sgn(q) != 0) { A.row_submul(i, t, q); U.row_submul(i, t, q); }
          if (sgn(A.at(i, t)) != 0) {
            A.swap_rows(t, i);
            U.swap_rows(t, i);
            again = true;
          }
        }
      }
      // Clear row t right of the pivot.  Column swaps may reintroduce
      // entries below the pivot, in which case we start over.
      bool col_dirty = false;
      again = true;
      while (again) {
        again = false;
        for (std::size_t j = t + 1; j < c; ++j) {
          if (sgn(A.at(t, j)) == 0) continue;
          Int q = A.at(t, j) / A.at(t, t);
          if (sgn(q) != 0) { A.col_submul(j, t, q); V.col_submul(j, t, q); }
          if (sgn(A.at(t, j)) != 0) {
            A.swap_cols(t, j);
            V.swap_cols(t, j);
            again = true;
            col_dirty = true;
          }
        }
      }
      if (col_dirty) continue;

      // Divisibility chain: pull a non-divisible trailing entry into row t
      // and re-run the elimination; the pivot shrinks to a gcd.
      bool fixed = true;
      for (std::size_t i = t + 1; i < r && fixed; ++i)
        for (std::size_t j = t + 1; j < c && fixed; ++j)
          if (!detail::divides(A.at(t, t), A.at(i, j))) {
            A.row_add(t, i);
            U.row_add(t, i);
            fixed = false;
          }
      if (fixed) break;
    }
    if (sgn(A.at(t, t)) < 0) { A.negate_row(t); U.negate_row(t); }
  }

  for (std::size_t t = 0; t < steps; ++t)
    if (sgn(A.at(t, t)) != 0) ++out.rank;
  return out;
}

// ---------------------------------------------------------------------------
// Hermite form, kernels, lattice membership

// Column-style Hermite normal form: returns the unique echelon basis of the
// column lattice of M.  Pivot rows strictly increase per column, pivots are
// positive, and entries left of a pivot are reduced into [0, pivot).  Zero
// columns are dropped, so the result has exactly rank(M) columns.
inline IntMatrix column_hermite_form(const IntMatrix& M) {
  IntMatrix H = M;
  const std::size_t n = H.rows(), m = H.cols();
  std::size_t piv = 0;
  for (std::size_t row = 0; row < n && piv < m; ++row) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t j = piv; j < m; ++j) {
        if (sgn(H.at(row, j)) == 0) continue;
        if (best == m || detail::cmpabs(H.at(row, j), H.at(row, best)) < 0)
          best = j;
      }
      if (best == m) break;
      if (best != piv) H.swap_cols(piv, best);
      bool clean = true;
      for (std::size_t j = piv + 1; j < m; ++j) {
        if (sgn(H.at(row, j)) == 0) continue;
        Int q = H.at(row, j) / H.at(row, piv);
        if (sgn(q) != 0) H.col_submul(j, piv, q);
        if (sgn(H.at(row, j)) != 0) clean = false;
      }
      if (clean) break;
    }
    if (sgn(H.at(row, piv)) == 0) continue;
    if (sgn(H.at(row, piv)) < 0) H.negate_col(piv);
    for (std::size_t k = 0; k < piv; ++k) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H.at(row, k).get_mpz_t(),
                 H.at(row, piv).get_mpz_t());
      if (sgn(q) != 0) H.col_submul(k, piv, q);
    }
    ++piv;
  }
  return H.left_cols(piv);
}

// Canonical basis of { x in Z^cols : M x = 0 }, as columns in Hermite form.
inline IntMatrix integer_kernel(const IntMatrix& M) {
  SmithDecomposition s = smith_normal_form(M);
  const std::size_t c = M.cols();
  IntMatrix K(c, c - s.rank);
  for (std::size_t j = s.rank; j < c; ++j)
    for (std::size_t i = 0; i < c; ++i) K.at(i, j - s.rank) = s.V.at(i, j);
  return column_hermite_form(K);
}

// Exact determinant (Bareiss / fraction-free elimination).
inline Int determinant(const IntMatrix& M) {
  if (M.rows() != M.cols())
    throw validation_error(errc::dimension_mismatch, "determinant of non-square");
  const std::size_t n = M.rows();
  if (n == 0) return Int(1);
  IntMatrix A = M;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(A.at(k, k)) == 0) {
      std::size_t i = k + 1;
      while (i < n && sgn(A.at(i, k)) == 0) ++i;
      if (i == n) return Int(0);
      A.swap_rows(k, i);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = A.at(k, k) * A.at(i, j) - A.at(i, k) * A.at(k, j);
        mpz_divexact(A.at(i, j).get_mpz_t(), num.get_mpz_t(),
                     prev.get_mpz_t());
      }
    prev = A.at(k, k);
  }
  return sign > 0 ? A.at(n - 1, n - 1) : Int(-A.at(n - 1, n - 1));
}

// Repeated membership / solving against a fixed column lattice.  Wraps one
// Smith decomposition of the basis matrix.
class LatticeSolver {
 public:
  explicit LatticeSolver(IntMatrix basis)
      : basis_(std::move(basis)), snf_(smith_normal_form(basis_)) {}

  const IntMatrix& basis() const { return basis_; }

  // y with basis * y = x, or nullopt if x is not in the lattice.
  std::optional<IntVec> solve(const IntVec& x) const {
    const std::size_t n = basis_.rows(), m = basis_.cols();
    if (x.size() != n)
      throw validation_error(errc::dimension_mismatch, "lattice solve shape");
    IntVec u = snf_.U.apply(x);
    IntVec z(m);
    for (std::size_t i = 0; i < n; ++i) {
      if (i < snf_.rank) {
        if (!detail::divides(snf_.D.at(i, i), u[i])) return std::nullopt;
        mpz_divexact(z[i].get_mpz_t(), u[i].get_mpz_t(),
                     snf_.D.at(i, i).get_mpz_t());
      } else if (sgn(u[i]) != 0) {
        return std::nullopt;
      }
    }
    return snf_.V.apply(z);
  }

  bool contains(const IntVec& x) const { return solve(x).has_value(); }

  bool contains_columns(const IntMatrix& m) const {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!contains(m.column(j))) return false;
    return true;
  }

 private:
  IntMatrix basis_;
  SmithDecomposition snf_;
};

// ---------------------------------------------------------------------------
// F_p vector spaces

inline bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using FpVec = std::vector<unsigned>;

inline unsigned mod_p(const Int& x, unsigned p) {
  return static_cast<unsigned>(mpz_fdiv_ui(x.get_mpz_t(), p));
}

inline FpVec mod_p(const IntVec& x, unsigned p) {
  FpVec v(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) v[i] = mod_p(x[i], p);
  return v;
}

// (acc + a * b) mod p without intermediate overflow
inline unsigned fp_mul_add(unsigned acc, unsigned a, unsigned b, unsigned p) {
  return static_cast<unsigned>(
      (acc + static_cast<unsigned long long>(a) * b) % p);
}

inline unsigned fp_inv(unsigned a, unsigned p) {
  // p is a small prime; a != 0 mod p.
  long t = 0, nt = 1, r = static_cast<long>(p), nr = static_cast<long>(a % p);
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  return static_cast<unsigned>((t % static_cast<long>(p) + p) %
                               static_cast<long>(p));
}

// Subspace of F_p^n held as a canonical reduced echelon basis: rows ordered
// by pivot, pivot entries 1, pivot columns zero elsewhere.  Equality of
// subspaces is therefore plain equality of the stored rows.
class FpSubspace {
 public:
  FpSubspace(unsigned p, std::size_t ambient_dim)
      : p_(p), ambient_(ambient_dim) {
    if (!is_prime(p))
      throw validation_error(errc::bad_argument,
                             "modulus " + std::to_string(p) + " is not prime");
  }

  static FpSubspace full(unsigned p, std::size_t dim) {
    FpSubspace s(p, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      FpVec e(dim, 0);
      e[i] = 1;
      s.insert(e);
    }
    return s;
  }

  unsigned p() const { return p_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<FpVec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  FpVec reduce(FpVec v) const {
    check_len(v);
    for (unsigned& x : v) x %= p_;
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      unsigned coef = v[pivots_[k]];
      if (coef == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        v[j] = fp_mul_add(v[j], p_ - coef, rows_[k][j], p_);
    }
    return v;
  }

  bool contains(const FpVec& v) const {
    FpVec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](unsigned x) { return x == 0; });
  }

  bool contains(const FpSubspace& other) const {
    for (const FpVec& row : other.rows_)
      if (!contains(row)) return false;
    return true;
  }

  // Adds v to the span; returns true when the dimension grew.
  bool insert(const FpVec& v) {
    FpVec r = reduce(v);
    std::size_t piv = ambient_;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (r[j] != 0) { piv = j; break; }
    if (piv == ambient_) return false;
    unsigned inv = fp_inv(r[piv], p_);
    for (unsigned& x : r) x = fp_mul_add(0, x, inv, p_);
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      unsigned coef = rows_[k][piv];
      if (coef == 0) continue;
      for (std::size_t j = 0; j < ambient_; ++j)
        rows_[k][j] = fp_mul_add(rows_[k][j], p_ - coef, r[j], p_);
    }
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + pos, r);
    pivots_.insert(pivots_.begin() + pos, piv);
    return true;
  }

  FpSubspace joined(const FpSubspace& other) const {
    FpSubspace out = *this;
    for (const FpVec& row : other.rows_) out.insert(row);
    return out;
  }

  // All nonzero vectors of the subspace, normalized so the first nonzero
  // coordinate is 1, sorted lexicographically.  (p^dim - 1)/(p - 1) vectors;
  // meant for desk-scale dimensions only.
  std::vector<FpVec> enumerate_normalized() const {
    std::set<FpVec> seen;
    const std::size_t d = rows_.size();
    std::vector<unsigned> coeff(d, 0);
    for (;;) {
      std::size_t k = 0;
      while (k < d && coeff[k] == p_ - 1) coeff[k++] = 0;
      if (k == d) break;
      ++coeff[k];
      FpVec v(ambient_, 0);
      for (std::size_t i = 0; i < d; ++i) {
        if (coeff[i] == 0) continue;
        for (std::size_t j = 0; j < ambient_; ++j)
          v[j] = fp_mul_add(v[j], coeff[i], rows_[i][j], p_);
      }
      std::size_t lead = 0;
      while (lead < ambient_ && v[lead] == 0) ++lead;
      if (lead == ambient_) continue;
      unsigned inv = fp_inv(v[lead], p_);
      for (unsigned& x : v) x = fp_mul_add(0, x, inv, p_);
      seen.insert(std::move(v));
    }
    return {seen.begin(), seen.end()};
  }

  bool operator==(const FpSubspace& o) const {
    return p_ == o.p_ && ambient_ == o.ambient_ && rows_ == o.rows_;
  }
  bool operator!=(const FpSubspace& o) const { return !(*this == o); }

 private:
  void check_len(const FpVec& v) const {
    if (v.size() != ambient_)
      throw validation_error(errc::dimension_mismatch, "F_p vector length");
  }

  unsigned p_;
  std::size_t ambient_;
  std::vector<FpVec> rows_;
  std::vector<std::size_t> pivots_;
};

inline FpSubspace fp_span(const std::vector<FpVec>& vectors, unsigned p,
                          std::size_t ambient_dim) {
  FpSubspace s(p, ambient_dim);
  for (const FpVec& v : vectors) {
    if (v.size() != ambient_dim)
      throw validation_error(errc::dimension_mismatch, "F_p vector length");
    s.insert(v);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Minimum-cost spanning tower

struct SpanningStep {
  FpVec vector;        // normalized representative
  std::size_t source;  // index into the sources list
};

struct SpanningTower {
  unsigned long long total_cost = 0;
  std::vector<SpanningStep> chosen;
  // (cost level c, dim of the span of all sources with cost <= c)
  std::vector<std::pair<unsigned long long, std::size_t>> levels;
};

// Minimum-total-cost multiset of vectors spanning the join of the sources,
// one vector per use of a source subspace.  This is a minimum-weight basis
// of a linear matroid, so the greedy sweep by ascending cost is exact:
// level by level the span W_c of all sources with cost <= c grows, and each
// dimension increment is paid at the cheapest level where it is available.
// total_cost = sum over levels c of c * (dim W_c - dim W_{c'}).
//
// The target must lie inside the join of the sources; vector ties at equal
// cost break by source order, then lexicographically.
inline SpanningTower min_cost_spanning_tower(
    const std::vector<std::pair<FpSubspace, unsigned long long>>& sources,
    const FpSubspace& target) {
  for (const auto& [sub, cost] : sources) {
    if (cost == 0)
      throw validation_error(errc::bad_argument, "source cost must be positive");
    if (sub.p() != target.p() || sub.ambient_dim() != target.ambient_dim())
      throw validation_error(errc::dimension_mismatch,
                             "source/target space mismatch");
  }

  std::set<unsigned long long> level_set;
  for (const auto& [sub, cost] : sources) level_set.insert(cost);

  SpanningTower out;
  FpSubspace w(target.p(), target.ambient_dim());
  for (unsigned long long c : level_set) {
    for (std::size_t idx = 0; idx < sources.size(); ++idx) {
      if (sources[idx].second != c) continue;
      const FpSubspace& src = sources[idx].first;
      if (w.contains(src)) continue;
      for (const FpVec& v : src.enumerate_normalized()) {
        if (!w.contains(v)) {
          w.insert(v);
          out.chosen.push_back({v, idx});
          out.total_cost += c;
        }
      }
    }
    out.levels.emplace_back(c, w.dim());
  }
  if (!w.contains(target))
    throw limit_error(errc::infeasible, "sources do not span the target");
  return out;
}

}  // namespace edp
