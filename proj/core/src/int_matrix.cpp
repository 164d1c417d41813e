#include "inoue/int_matrix.hpp"

#include <sstream>

namespace inoue {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) fail(errc::invalid_input, "negative matrix dimension");
  e_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
  e_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) fail(errc::invalid_input, "ragged matrix literal");
    for (long v : r) e_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::companion(const IntPoly& p) {
  if (!p.is_monic()) fail(errc::invalid_input, "companion matrix needs a monic polynomial");
  int d = p.degree();
  if (d < 1) fail(errc::invalid_input, "companion matrix needs degree >= 1");
  IntMatrix m(d, d);
  for (int i = 0; i + 1 < d; ++i) m(i + 1, i) = 1;
  for (int i = 0; i < d; ++i) m(i, d - 1) = -p.coeff(i);
  return m;
}

IntMatrix IntMatrix::block_diag(const std::vector<IntMatrix>& blocks) {
  int n = 0;
  for (const auto& b : blocks) {
    if (!b.is_square()) fail(errc::invalid_input, "block_diag needs square blocks");
    n += b.rows();
  }
  IntMatrix m(n, n);
  int off = 0;
  for (const auto& b : blocks) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

int IntMatrix::dim() const {
  if (!is_square()) fail(errc::invalid_input, "dim() on a non-square matrix");
  return rows_;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::invalid_input, "matrix shape mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) fail(errc::invalid_input, "matrix shape mismatch");
  IntMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) fail(errc::invalid_input, "matrix shape mismatch in product");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += v * o(k, j);
    }
  if (!r.e_.empty()) guard_bits(r.e_.front());
  return r;
}

IntMatrix IntMatrix::operator*(const Int& k) const {
  IntMatrix r(*this);
  for (auto& v : r.e_) v *= k;
  return r;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix r(*this);
  for (auto& v : r.e_) v = -v;
  return r;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

Int IntMatrix::trace() const {
  Int t = 0;
  for (int i = 0; i < dim(); ++i) t += (*this)(i, i);
  return t;
}

IntMatrix IntMatrix::pow(unsigned e) const {
  IntMatrix r = identity(dim());
  IntMatrix base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : e_)
    if (v != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << (*this)(i, j).get_str();
    }
    os << '\n';
  }
  return os.str();
}

Int det(const IntMatrix& a) {
  int n = a.dim();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (m(i, k) != 0) { piv = i; break; }
      if (piv < 0) return 0;
      for (int j = 0; j < n; ++j) swap(m(k, j), m(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        guard_bits(m(i, j));
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

IntPoly char_poly(const IntMatrix& m) {
  int n = m.dim();
  // Berkowitz: grow through the leading principal submatrices; the vector p
  // holds det(xI - A_r) highest degree first and is advanced by lower
  // triangular Toeplitz products built from R M^k C scalars.
  std::vector<Int> p{Int(1)};
  if (n >= 1) p = {Int(1), -m(0, 0)};
  for (int r = 1; r < n; ++r) {
    // s[k] = Row_r * M_r^k * Col_r for the r x r leading block.
    std::vector<Int> s(static_cast<std::size_t>(r));
    std::vector<Int> w(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i) w[static_cast<std::size_t>(i)] = m(i, r);
    for (int k = 0; k < r; ++k) {
      Int acc = 0;
      for (int i = 0; i < r; ++i) acc += m(r, i) * w[static_cast<std::size_t>(i)];
      s[static_cast<std::size_t>(k)] = acc;
      if (k + 1 < r) {
        std::vector<Int> w2(static_cast<std::size_t>(r), Int(0));
        for (int i = 0; i < r; ++i) {
          if (w[static_cast<std::size_t>(i)] == 0) continue;
          for (int i2 = 0; i2 < r; ++i2) w2[static_cast<std::size_t>(i2)] += m(i2, i) * w[static_cast<std::size_t>(i)];
        }
        w = std::move(w2);
      }
    }
    std::vector<Int> q(p.size() + 1, Int(0));
    const Int& d = m(r, r);
    for (std::size_t i = 0; i < q.size(); ++i) {
      Int acc = 0;
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (j > i) break;
        std::size_t diff = i - j;
        if (diff == 0)
          acc += p[j];
        else if (diff == 1)
          acc -= d * p[j];
        else
          acc -= s[diff - 2] * p[j];
      }
      q[i] = std::move(acc);
      guard_bits(q[i]);
    }
    p = std::move(q);
  }
  std::vector<Int> low_first(p.rbegin(), p.rend());
  return IntPoly(std::move(low_first));
}

IntMatrix eval_poly_at(const IntPoly& p, const IntMatrix& m) {
  int n = m.dim();
  IntMatrix acc(n, n);
  for (int d = p.degree(); d >= 0; --d) {
    acc = acc * m;
    for (int i = 0; i < n; ++i) acc(i, i) += p.coeff(d);
  }
  return acc;
}

std::vector<Int> SNFResult::diagonal() const {
  std::vector<Int> d;
  int k = std::min(D.rows(), D.cols());
  d.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) d.push_back(D(i, i));
  return d;
}

namespace {

struct SNFWork {
  IntMatrix D, U, V;

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < D.cols(); ++j) swap(D(a, j), D(b, j));
    for (int j = 0; j < U.cols(); ++j) swap(U(a, j), U(b, j));
  }
  void swap_cols(int a, int b) {
    if (a == b) return;
    for (int i = 0; i < D.rows(); ++i) swap(D(i, a), D(i, b));
    for (int i = 0; i < V.rows(); ++i) swap(V(i, a), V(i, b));
  }
  void add_row(int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int j = 0; j < D.cols(); ++j) { D(dst, j) += f * D(src, j); guard_bits(D(dst, j)); }
    for (int j = 0; j < U.cols(); ++j) U(dst, j) += f * U(src, j);
  }
  void add_col(int dst, int src, const Int& f) {
    if (f == 0) return;
    for (int i = 0; i < D.rows(); ++i) { D(i, dst) += f * D(i, src); guard_bits(D(i, dst)); }
    for (int i = 0; i < V.rows(); ++i) V(i, dst) += f * V(i, src);
  }
  void negate_row(int r) {
    for (int j = 0; j < D.cols(); ++j) D(r, j) = -D(r, j);
    for (int j = 0; j < U.cols(); ++j) U(r, j) = -U(r, j);
  }

  // Smallest nonzero |entry| in the trailing block; lowest (row, col) on ties.
  bool find_pivot(int s, int& pr, int& pc) const {
    bool found = false;
    Int best;
    for (int i = s; i < D.rows(); ++i)
      for (int j = s; j < D.cols(); ++j) {
        if (D(i, j) == 0) continue;
        Int a = abs(D(i, j));
        if (!found || a < best) { found = true; best = a; pr = i; pc = j; }
      }
    return found;
  }
};

Int round_quotient(const Int& a, const Int& b) {
  // Nearest quotient: leaves |remainder| <= |b|/2, which keeps the
  // elimination loop shrinking fast.
  Int q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Int b_abs = abs(b);
  if (r * 2 > b_abs) q += (b > 0 ? 1 : -1);
  return q;
}

} // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
  SNFWork w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols())};
  int k = std::min(a.rows(), a.cols());
  for (int s = 0; s < k; ++s) {
    for (;;) {
      // Always re-scan for the globally smallest pivot: reducing against a
      // stale pivot makes the quotients, and with them the entries, blow up.
      int pr = s, pc = s;
      if (!w.find_pivot(s, pr, pc)) { pr = -1; }
      if (pr < 0) break; // trailing block is zero
      w.swap_rows(s, pr);
      w.swap_cols(s, pc);

      bool clean = true;
      for (int i = s + 1; i < w.D.rows(); ++i) {
        if (w.D(i, s) == 0) continue;
        Int q = round_quotient(w.D(i, s), w.D(s, s));
        w.add_row(i, s, -q);
        if (w.D(i, s) != 0) clean = false;
      }
      for (int j = s + 1; j < w.D.cols(); ++j) {
        if (w.D(s, j) == 0) continue;
        Int q = round_quotient(w.D(s, j), w.D(s, s));
        w.add_col(j, s, -q);
        if (w.D(s, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Divisibility sweep: the pivot must divide the whole trailing block.
      bool fixed = true;
      for (int i = s + 1; i < w.D.rows() && fixed; ++i)
        for (int j = s + 1; j < w.D.cols() && fixed; ++j)
          if (!mpz_divisible_p(w.D(i, j).get_mpz_t(), w.D(s, s).get_mpz_t())) {
            w.add_row(s, i, Int(1));
            fixed = false;
          }
      if (fixed) break;
    }
    if (w.D(s, s) == 0) break;
    if (sign_of(w.D(s, s)) < 0) w.negate_row(s);
  }
  return SNFResult{std::move(w.D), std::move(w.U), std::move(w.V)};
}

std::vector<std::vector<Int>> kernel_lattice_basis(const IntMatrix& a) {
  SNFResult snf = smith_normal_form(a);
  int n = a.cols();
  int k = std::min(a.rows(), a.cols());
  std::vector<std::vector<Int>> basis;
  for (int j = 0; j < n; ++j) {
    bool free_col = (j >= k) || (snf.D(j, j) == 0);
    if (!free_col) continue;
    std::vector<Int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = snf.V(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix inverse_unimodular(const IntMatrix& a) {
  Int d = det(a);
  if (d != 1 && d != -1) fail(errc::hypothesis_violated, "inverse_unimodular: |det| != 1");
  SNFResult snf = smith_normal_form(a);
  for (int i = 0; i < a.dim(); ++i)
    if (snf.D(i, i) != 1) fail(errc::internal_inconsistency, "unimodular matrix with SNF != I");
  // U A V = I, so A^{-1} = V U.
  return snf.V * snf.U;
}

} // namespace inoue
