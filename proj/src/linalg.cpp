#include "exotic/linalg.hpp"

#include <utility>

namespace exotic {

std::vector<std::size_t> rref(QMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(QMatrix m) { return rref(m).size(); }

QMatrix nullspace(const QMatrix& m) {
  QMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  QMatrix basis(m.cols(), m.cols() - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) basis(pivots[i], k) = -r(i, free);
    ++k;
  }
  return basis;
}

BigInt determinant(const ZMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  ZMatrix m = input;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

// --- Z/p ----------------------------------------------------------------

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

}  // namespace

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = reduce(a, p);
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (r != 1) throw Error(ErrorCode::DivisionByZero, "element not invertible mod " + std::to_string(p));
  return reduce(t, p);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

ModMatrix ModMatrix::identity(std::size_t n, std::int64_t p) {
  ModMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

ModMatrix ModMatrix::from_integers(const ZMatrix& z, std::int64_t p) {
  ModMatrix m(z.rows(), z.cols(), p);
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::size_t c = 0; c < z.cols(); ++c) {
      BigInt v = z(r, c) % p;
      m.set(r, c, v.get_si());
    }
  return m;
}

void ModMatrix::set(std::size_t r, std::size_t c, std::int64_t v) { m_(r, c) = reduce(v, p_); }

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (cols() != o.rows()) throw Error(ErrorCode::DimensionMismatch, "mod-p product shape mismatch");
  ModMatrix out(rows(), o.cols(), p_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t k = 0; k < cols(); ++k) {
      std::int64_t a = m_(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols(); ++j) out.m_(i, j) = (out.m_(i, j) + a * o.m_(k, j)) % p_;
    }
  return out;
}

ModMatrix ModMatrix::operator+(const ModMatrix& o) const {
  if (rows() != o.rows() || cols() != o.cols()) throw Error(ErrorCode::DimensionMismatch, "mod-p sum shape mismatch");
  ModMatrix out(rows(), cols(), p_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) out.set(i, j, m_(i, j) + o.m_(i, j));
  return out;
}

ModMatrix ModMatrix::operator-(const ModMatrix& o) const { return *this + o.scaled(-1); }

ModMatrix ModMatrix::scaled(std::int64_t k) const {
  ModMatrix out(rows(), cols(), p_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j) out.set(i, j, m_(i, j) * reduce(k, p_));
  return out;
}

bool ModMatrix::is_zero() const {
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = 0; j < cols(); ++j)
      if (m_(i, j) != 0) return false;
  return true;
}

ModMatrix ModMatrix::columns(std::size_t begin, std::size_t end) const {
  ModMatrix out(rows(), end - begin, p_);
  for (std::size_t i = 0; i < rows(); ++i)
    for (std::size_t j = begin; j < end; ++j) out.m_(i, j - begin) = m_(i, j);
  return out;
}

ModMatrix ModMatrix::hstack(const ModMatrix& a, const ModMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "hstack row mismatch");
  ModMatrix out(a.rows(), a.cols() + b.cols(), a.p_);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.m_(i, j) = a.m_(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.m_(i, a.cols() + j) = b.m_(i, j);
  }
  return out;
}

std::vector<std::size_t> ModMatrix::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols() && row < rows(); ++col) {
    std::size_t sel = row;
    while (sel < rows() && m_(sel, col) == 0) ++sel;
    if (sel == rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < cols(); ++c) std::swap(m_(sel, c), m_(row, c));
    std::int64_t inv = mod_inverse(m_(row, col), p_);
    for (std::size_t c = col; c < cols(); ++c) m_(row, c) = m_(row, c) * inv % p_;
    for (std::size_t r = 0; r < rows(); ++r) {
      if (r == row || m_(r, col) == 0) continue;
      std::int64_t f = m_(r, col);
      for (std::size_t c = col; c < cols(); ++c) m_(r, c) = reduce(m_(r, c) - f * m_(row, c), p_);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t ModMatrix::rank() const {
  ModMatrix copy = *this;
  return copy.rref_in_place().size();
}

ModMatrix ModMatrix::nullspace() const {
  ModMatrix r = *this;
  auto pivots = r.rref_in_place();
  std::vector<bool> is_pivot(cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  ModMatrix basis(cols(), cols() - pivots.size(), p_);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols(); ++free) {
    if (is_pivot[free]) continue;
    basis.set(free, k, 1);
    for (std::size_t i = 0; i < pivots.size(); ++i) basis.set(pivots[i], k, -r.m_(i, free));
    ++k;
  }
  return basis;
}

ModMatrix ModMatrix::column_basis() const {
  ModMatrix r = *this;
  auto pivots = r.rref_in_place();
  ModMatrix out(rows(), pivots.size(), p_);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < rows(); ++i) out.m_(i, k) = m_(i, pivots[k]);
  return out;
}

ModMatrix ModMatrix::solve(const ModMatrix& b) const {
  if (b.rows() != rows()) throw Error(ErrorCode::DimensionMismatch, "solve row mismatch");
  ModMatrix aug = hstack(*this, b);
  auto pivots = aug.rref_in_place();
  ModMatrix x(cols(), b.cols(), p_);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] >= cols()) throw Error(ErrorCode::DimensionMismatch, "linear system is inconsistent");
    for (std::size_t j = 0; j < b.cols(); ++j) x.m_(pivots[i], j) = aug.m_(i, cols() + j);
  }
  return x;
}

}  // namespace exotic
