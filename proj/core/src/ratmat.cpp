#include "rinehart/ratmat.hpp"

#include <stdexcept>
#include <utility>

namespace rinehart {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.at(i, j) += a * rhs.at(k, j);
    }
  return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
    throw std::invalid_argument("matrix shape mismatch in difference");
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
  return out;
}

bool RatMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && sgn(m[sel][c]) == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    const Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Rational>> to_rows(const RatMatrix& m) {
  std::vector<std::vector<Rational>> rows(m.rows(), std::vector<Rational>(m.cols(), Rational(0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
  return rows;
}

}  // namespace

std::size_t RatMatrix::rank() const {
  auto rows = to_rows(*this);
  return rref(rows).size();
}

std::optional<std::vector<Rational>> RatMatrix::solve(const std::vector<Rational>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("right-hand side length mismatch");
  std::vector<std::vector<Rational>> aug(rows_, std::vector<Rational>(cols_ + 1, Rational(0)));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug[i][j] = at(i, j);
    aug[i][cols_] = b[i];
  }
  const auto pivots = rref(aug);
  for (std::size_t p : pivots)
    if (p == cols_) return std::nullopt;  // pivot in the augmented column
  std::vector<Rational> x(cols_, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols_];
  return x;
}

std::vector<std::vector<Rational>> RatMatrix::kernel_basis() const {
  auto rows = to_rows(*this);
  const auto pivots = rref(rows);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols_, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

Rational quadratic_form(const RatMatrix& m, const std::vector<Rational>& v) {
  Rational acc = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (sgn(v[i]) == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) acc += v[i] * m.at(i, j) * v[j];
  }
  return acc;
}

}  // namespace

Ldlt ldlt_decompose(const RatMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("ldlt requires a symmetric matrix");
  const std::size_t n = m.rows();
  RatMatrix s = m;                       // running Schur complement, s = tᵀ m t
  RatMatrix t = RatMatrix::identity(n);  // congruence accumulator
  Ldlt out;

  auto fail_with = [&](std::vector<Rational> w) {
    std::vector<Rational> v(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i] += t.at(i, j) * w[j];
    out.psd = false;
    out.witness = v;
    out.witness_value = quadratic_form(m, v);
    if (sgn(out.witness_value) >= 0) throw std::logic_error("ldlt witness is not negative");
    return out;
  };

  for (std::size_t k = 0; k < n; ++k) {
    const Rational d = s.at(k, k);
    if (sgn(d) < 0) {
      std::vector<Rational> w(n, Rational(0));
      w[k] = 1;
      return fail_with(std::move(w));
    }
    if (sgn(d) == 0) {
      std::size_t j = n;
      for (std::size_t c = k + 1; c < n; ++c)
        if (sgn(s.at(k, c)) != 0) {
          j = c;
          break;
        }
      if (j == n) continue;  // zero Schur row: rank deficiency, not a violation
      // The 2x2 principal block [[0, b], [b, a]] is indefinite.
      const Rational b = s.at(k, j);
      const Rational a = s.at(j, j);
      std::vector<Rational> w(n, Rational(0));
      if (sgn(a) < 0) {
        w[j] = 1;
      } else if (sgn(a) == 0) {
        w[k] = 1;
        w[j] = sgn(b) > 0 ? Rational(-1) : Rational(1);
      } else {
        w[k] = 1;
        w[j] = -b / a;
      }
      return fail_with(std::move(w));
    }
    // Positive pivot: record the unit-diagonal column and eliminate it.
    std::vector<Rational> col(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) col[i] = s.at(i, k) / d;
    out.pivot_index.push_back(k);
    out.pivot.push_back(d);
    out.column.push_back(col);
    for (std::size_t i = 0; i < n; ++i) {
      if (sgn(col[i]) == 0) continue;
      for (std::size_t j2 = 0; j2 < n; ++j2) s.at(i, j2) -= d * col[i] * col[j2];
    }
    // t ← t (I − e_k colᵀ): column update keeping s = tᵀ m t.
    std::vector<Rational> tk(n);
    for (std::size_t i = 0; i < n; ++i) tk[i] = t.at(i, k);
    for (std::size_t j2 = 0; j2 < n; ++j2) {
      if (sgn(col[j2]) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) t.at(i, j2) -= col[j2] * tk[i];
    }
  }
  out.psd = true;
  out.rank = out.pivot.size();
  return out;
}

std::optional<std::vector<Rational>> express_in_span(
    const std::vector<std::vector<Rational>>& vectors, const std::vector<Rational>& target) {
  RatMatrix a(target.size(), vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != target.size())
      throw std::invalid_argument("span vector length mismatch");
    for (std::size_t i = 0; i < target.size(); ++i) a.at(i, j) = vectors[j][i];
  }
  return a.solve(target);
}

}  // namespace rinehart
