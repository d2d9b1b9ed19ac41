#pragma once

#include <cstddef>
#include <vector>

#include "qcc/gf.hpp"

namespace qcc {

/// Row-major matrix over a fixed field.  Codewords are row vectors
/// throughout the library; a generator matrix spans its code by rows.
class Matrix {
public:
  Matrix() = default;
  Matrix(FieldSpecPtr spec, std::size_t rows, std::size_t cols); // zero-filled

  static Matrix identity(FieldSpecPtr spec, std::size_t n);
  static Matrix from_rows(FieldSpecPtr spec,
                          const std::vector<std::vector<Fel>> &rows);

  const FieldSpecPtr &spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Fel at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, Fel v);
  std::vector<Fel> row(std::size_t r) const;

  Matrix operator*(const Matrix &o) const;
  Matrix transpose() const;
  bool operator==(const Matrix &o) const;
  bool operator!=(const Matrix &o) const { return !(*this == o); }

private:
  FieldSpecPtr spec_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fel> a_;
};

/// Entrywise a -> a^(p^h).
Matrix entrywise_frobenius(const Matrix &m, std::uint32_t h);

/// Conjugate transpose for the p^h-power automorphism: (A^(p^h))^T.
Matrix galois_transpose(const Matrix &m, std::uint32_t h);

/// Reduced row echelon form with zero rows dropped; `pivots` lists the
/// pivot column of each remaining row in order.  Canonical for the row
/// space: two matrices span the same space iff their rref results match.
struct Rref {
  Matrix mat;
  std::vector<std::size_t> pivots;
};
Rref rref(const Matrix &m);

/// Basis of the right kernel {x : m x^T = 0}, one vector per row.
Matrix nullspace(const Matrix &m);

/// Membership of `word` in the row space spanned by an rref basis.
bool in_row_space(const Rref &basis, const std::vector<Fel> &word);

/// Row vector times matrix.
std::vector<Fel> row_times(const std::vector<Fel> &v, const Matrix &m);

} // namespace qcc
