#include "reflquot/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace reflquot {

RationalVector RationalVector::from_ints(std::span<const long> values) {
  RationalVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) v[i] = Rational(values[i]);
  return v;
}

RationalVector RationalVector::unit(std::size_t dim, std::size_t i) {
  RationalVector v(dim);
  v[i] = 1;
  return v;
}

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool RationalVector::is_integral() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& r) { return r.is_integer(); });
}

RationalVector& RationalVector::operator+=(const RationalVector& o) {
  if (o.size() != size()) throw DimensionError("vector dimension mismatch in +");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& o) {
  if (o.size() != size()) throw DimensionError("vector dimension mismatch in -");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

RationalVector RationalVector::operator-() const {
  RationalVector r(*this);
  for (auto& c : r.coords_) c = -c;
  return r;
}

std::string RationalVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

Rational dot(const RationalVector& u, const RationalVector& v) {
  if (u.size() != v.size()) throw DimensionError("vector dimension mismatch in dot");
  Rational s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

std::size_t RationalVectorHash::operator()(const RationalVector& v) const noexcept {
  std::size_t h = v.size();
  for (const auto& c : v) h = h * 1000003u ^ c.hash();
  return h;
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_columns(std::span<const RationalVector> columns, std::size_t dim) {
  RationalMatrix m(dim, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != dim) throw DimensionError("column dimension mismatch");
    for (std::size_t r = 0; r < dim; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::span<const RationalVector> rows, std::size_t dim) {
  RationalMatrix m(rows.size(), dim);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != dim) throw DimensionError("row dimension mismatch");
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  RationalVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
  return v;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool RationalMatrix::is_integral() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& r) { return r.is_integer(); });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product dimension mismatch");
  RationalMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& v) {
  if (a.cols_ != v.size()) throw DimensionError("matrix-vector dimension mismatch");
  RationalVector r(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) r[i] += a(i, k) * v[k];
  return r;
}

std::size_t RationalMatrix::hash() const {
  std::size_t h = rows_ * 31 + cols_;
  for (const auto& c : data_) h = h * 1000003u ^ c.hash();
  return h;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational determinant(RationalMatrix m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && m(sel, col).is_zero()) ++sel;
    if (sel == n) return Rational(0);
    if (sel != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(sel, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::size_t rank(RationalMatrix m) { return rref(m).size(); }

BilinearForm::BilinearForm(RationalMatrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw DimensionError("Gram matrix must be square");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    for (std::size_t j = i + 1; j < gram_.cols(); ++j)
      if (gram_(i, j) != gram_(j, i)) throw std::invalid_argument("Gram matrix is not symmetric");
  if (!is_positive_definite(gram_)) throw std::invalid_argument("Gram matrix is not positive definite");
}

BilinearForm BilinearForm::standard(std::size_t dim) { return BilinearForm(RationalMatrix::identity(dim)); }

bool BilinearForm::is_positive_definite(const RationalMatrix& gram) {
  if (gram.rows() != gram.cols()) return false;
  for (std::size_t k = 1; k <= gram.rows(); ++k) {
    RationalMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = gram(i, j);
    if (determinant(std::move(minor)).sign() <= 0) return false;
  }
  return true;
}

Rational inner(const BilinearForm& form, const RationalVector& u, const RationalVector& v) {
  const std::size_t n = form.dim();
  if (u.size() != n || v.size() != n) throw DimensionError("inner: dimension mismatch");
  const auto& g = form.gram();
  Rational s;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero()) continue;
    Rational row;
    for (std::size_t j = 0; j < n; ++j)
      if (!g(i, j).is_zero()) row += g(i, j) * v[j];
    s += u[i] * row;
  }
  return s;
}

LinearSolveResult solve_linear(const RationalMatrix& a, const RationalVector& b) {
  if (a.rows() != b.size()) throw DimensionError("solve_linear: rhs dimension mismatch");
  const std::size_t n = a.cols();
  RationalMatrix aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  const auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == n) return NoSolution{};

  RationalVector x(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, n);
  if (pivots.size() == n) return UniqueSolution{std::move(x)};

  NonUniqueSolution res{std::move(x), {}};
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector k(n);
    k[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = -aug(i, free);
    res.kernel.push_back(std::move(k));
  }
  return res;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& a) {
  auto res = solve_linear(a, RationalVector(a.rows()));
  if (auto* nu = std::get_if<NonUniqueSolution>(&res)) return nu->kernel;
  return {};
}

std::vector<RationalVector> integer_kernel_basis(const RationalMatrix& a) {
  if (!a.is_integral()) throw std::invalid_argument("integer_kernel_basis: matrix is not integral");
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  RationalMatrix work = a;
  RationalMatrix u = RationalMatrix::identity(n);

  auto col_axpy = [&](std::size_t dst, std::size_t src, const Rational& q) {
    // column dst -= q * column src, applied to both work and u
    for (std::size_t r = 0; r < m; ++r) work(r, dst) -= q * work(r, src);
    for (std::size_t r = 0; r < n; ++r) u(r, dst) -= q * u(r, src);
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (std::size_t r = 0; r < m; ++r) std::swap(work(r, x), work(r, y));
    for (std::size_t r = 0; r < n; ++r) std::swap(u(r, x), u(r, y));
  };

  std::size_t pivot = 0;
  for (std::size_t row = 0; row < m && pivot < n; ++row) {
    for (std::size_t j = pivot + 1; j < n; ++j) {
      while (!work(row, j).is_zero()) {
        const Rational q = floor(work(row, pivot) / work(row, j));
        col_axpy(pivot, j, q);
        col_swap(pivot, j);
      }
    }
    if (!work(row, pivot).is_zero()) ++pivot;
  }
  std::vector<RationalVector> basis;
  for (std::size_t c = pivot; c < n; ++c) basis.push_back(u.column(c));
  return basis;
}

}  // namespace reflquot
