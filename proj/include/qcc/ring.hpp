#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "qcc/gf.hpp"
#include "qcc/matrix.hpp"

namespace qcc {

/// The quotient ring F[X]/(X^n - lambda) for a unit lambda.  Shared by all
/// elements and codes living over the same (field, n, lambda) triple.
class RingContext {
public:
  static std::shared_ptr<const RingContext> make(FieldSpecPtr spec,
                                                 std::size_t n, Fel lambda);

  const FieldSpecPtr &spec() const { return spec_; }
  std::size_t n() const { return n_; }
  Fel lambda() const { return lambda_; }

  /// Multiplicative order of lambda.
  std::uint64_t t() const { return t_; }

  /// X^n - lambda is separable, i.e. the ring is a product of fields.
  bool semisimple() const { return n_ % spec_->p() != 0; }

  /// lambda^(1 + p^h) = 1, the condition under which the conjugation
  /// involution below is defined.
  bool lambda_hypothesis(std::uint32_t h) const;

  bool same(const RingContext &other) const;

private:
  RingContext() = default;
  FieldSpecPtr spec_;
  std::size_t n_ = 0;
  Fel lambda_ = 0;
  std::uint64_t t_ = 0;
};

using RingContextPtr = std::shared_ptr<const RingContext>;

/// Element of the quotient ring, dense coefficients of length exactly n.
class RingElement {
public:
  RingElement() = default;

  static RingElement zero(RingContextPtr ctx);
  static RingElement one(RingContextPtr ctx);

  /// X^k reduced into the ring: X^k = lambda^(k div n) X^(k mod n).
  static RingElement x_power(RingContextPtr ctx, std::uint64_t k);

  /// Coefficients low-to-high, length exactly n (LengthMismatch otherwise).
  static RingElement from_coeffs(RingContextPtr ctx, std::vector<Fel> coeffs);

  const RingContextPtr &ctx() const { return ctx_; }
  const std::vector<Fel> &coeffs() const { return c_; }
  Fel coeff(std::size_t i) const;
  bool is_zero() const;
  std::size_t weight() const; // nonzero coefficient count

  RingElement operator+(const RingElement &o) const;
  RingElement operator-(const RingElement &o) const;
  RingElement operator-() const;
  RingElement operator*(const RingElement &o) const;
  RingElement scaled(Fel s) const;
  bool operator==(const RingElement &o) const;
  bool operator!=(const RingElement &o) const { return !(*this == o); }

private:
  RingContextPtr ctx_;
  std::vector<Fel> c_;
};

/// Product in F[X]/(X^n - lambda).
RingElement ring_mul(const RingElement &a, const RingElement &b);

/// Multiplication by X: (a_0, ..., a_{n-1}) -> (lambda a_{n-1}, a_0, ..., a_{n-2}).
RingElement shift(const RingElement &a);

/// Matrix of the shift in the coefficient basis: ones on the superdiagonal
/// and lambda in the lower-left corner.
Matrix perm_matrix(const RingContextPtr &ctx);

/// Matrix of multiplication by `a`, row i holding the coefficients of
/// X^i * a.  Equals a evaluated at the shift matrix.
Matrix circulant(const RingElement &a);

/// The conjugation a -> sum a_i^(p^h) (X^(nt-1))^i, defined when
/// lambda^(1 + p^h) = 1 (LambdaHypothesisViolated otherwise).  Matches the
/// p^h-transpose through circulants:
///   circulant(star(a, h)) = galois_transpose(circulant(a), h).
RingElement star(const RingElement &a, std::uint32_t h);

} // namespace qcc
