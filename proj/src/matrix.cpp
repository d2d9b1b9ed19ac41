#include "qcc/matrix.hpp"

namespace qcc {

Matrix::Matrix(FieldSpecPtr spec, std::size_t rows, std::size_t cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), a_(rows * cols, 0) {
  internal_check(spec_ != nullptr, "matrix without a spec");
}

Matrix Matrix::identity(FieldSpecPtr spec, std::size_t n) {
  Matrix m(std::move(spec), n, n);
  for (std::size_t i = 0; i < n; ++i)
    m.a_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(FieldSpecPtr spec,
                         const std::vector<std::vector<Fel>> &rows) {
  internal_check(!rows.empty(), "from_rows needs at least one row");
  Matrix m(std::move(spec), rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_)
      throw Error(ErrorKind::LengthMismatch, "rows of unequal length");
    for (std::size_t c = 0; c < m.cols_; ++c) {
      internal_check(rows[r][c] < m.spec_->q(), "entry index out of range");
      m.a_[r * m.cols_ + c] = rows[r][c];
    }
  }
  return m;
}

Fel Matrix::at(std::size_t r, std::size_t c) const {
  internal_check(r < rows_ && c < cols_, "matrix index out of range");
  return a_[r * cols_ + c];
}

void Matrix::set(std::size_t r, std::size_t c, Fel v) {
  internal_check(r < rows_ && c < cols_, "matrix index out of range");
  internal_check(v < spec_->q(), "entry index out of range");
  a_[r * cols_ + c] = v;
}

std::vector<Fel> Matrix::row(std::size_t r) const {
  internal_check(r < rows_, "matrix row out of range");
  return {a_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::operator*(const Matrix &o) const {
  internal_check(spec_ != nullptr && o.spec_ != nullptr,
                 "matrix without a spec");
  if (!spec_->same(*o.spec_))
    throw Error(ErrorKind::ContextMismatch, "matrices over different fields");
  if (cols_ != o.rows_)
    throw Error(ErrorKind::LengthMismatch,
                "inner dimensions do not match");
  Matrix out(spec_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Fel v = a_[i * cols_ + k];
      if (v == 0)
        continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        out.a_[i * o.cols_ + j] = spec_->add(
            out.a_[i * o.cols_ + j], spec_->mul(v, o.a_[k * o.cols_ + j]));
    }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(spec_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      out.a_[c * rows_ + r] = a_[r * cols_ + c];
  return out;
}

bool Matrix::operator==(const Matrix &o) const {
  internal_check(spec_ != nullptr && o.spec_ != nullptr,
                 "matrix without a spec");
  if (!spec_->same(*o.spec_))
    throw Error(ErrorKind::ContextMismatch, "matrices over different fields");
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Matrix entrywise_frobenius(const Matrix &m, std::uint32_t h) {
  Matrix out = m;
  const auto &spec = m.spec();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.set(r, c, spec->frobenius(m.at(r, c), h));
  return out;
}

Matrix galois_transpose(const Matrix &m, std::uint32_t h) {
  return entrywise_frobenius(m, h).transpose();
}

Rref rref(const Matrix &m) {
  const auto &spec = m.spec();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Fel>> a(rows);
  for (std::size_t r = 0; r < rows; ++r)
    a[r] = m.row(r);

  std::vector<std::size_t> pivots;
  std::size_t cur = 0;
  for (std::size_t col = 0; col < cols && cur < rows; ++col) {
    std::size_t pr = cur;
    while (pr < rows && a[pr][col] == 0)
      ++pr;
    if (pr == rows)
      continue;
    std::swap(a[cur], a[pr]);
    const Fel inv = spec->inv(a[cur][col]);
    for (std::size_t c = col; c < cols; ++c)
      a[cur][c] = spec->mul(a[cur][c], inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == cur || a[r][col] == 0)
        continue;
      const Fel f = a[r][col];
      for (std::size_t c = col; c < cols; ++c)
        a[r][c] = spec->sub(a[r][c], spec->mul(f, a[cur][c]));
    }
    pivots.push_back(col);
    ++cur;
  }

  Matrix out(spec, cur, cols);
  for (std::size_t r = 0; r < cur; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      out.set(r, c, a[r][c]);
  return {std::move(out), std::move(pivots)};
}

Matrix nullspace(const Matrix &m) {
  const auto &spec = m.spec();
  const std::size_t cols = m.cols();
  Rref r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : r.pivots)
    is_pivot[p] = true;

  Matrix out(spec, cols - r.pivots.size(), cols);
  std::size_t row = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    out.set(row, f, 1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      out.set(row, r.pivots[i], spec->neg(r.mat.at(i, f)));
    ++row;
  }
  return out;
}

bool in_row_space(const Rref &basis, const std::vector<Fel> &word) {
  const auto &spec = basis.mat.spec();
  if (word.size() != basis.mat.cols())
    throw Error(ErrorKind::LengthMismatch,
                "word length does not match the basis");
  std::vector<Fel> w = word;
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
    const Fel f = w[basis.pivots[i]];
    if (f == 0)
      continue;
    for (std::size_t c = basis.pivots[i]; c < w.size(); ++c)
      w[c] = spec->sub(w[c], spec->mul(f, basis.mat.at(i, c)));
  }
  for (Fel v : w)
    if (v != 0)
      return false;
  return true;
}

std::vector<Fel> row_times(const std::vector<Fel> &v, const Matrix &m) {
  if (v.size() != m.rows())
    throw Error(ErrorKind::LengthMismatch,
                "vector length does not match the matrix");
  const auto &spec = m.spec();
  std::vector<Fel> out(m.cols(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0)
      continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      out[j] = spec->add(out[j], spec->mul(v[i], m.at(i, j)));
  }
  return out;
}

} // namespace qcc
