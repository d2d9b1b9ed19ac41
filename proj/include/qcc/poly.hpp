#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qcc/gf.hpp"

namespace qcc {

/// Dense univariate polynomial over a fixed field, coefficients low-to-high
/// with no trailing zeros.  The zero polynomial has an empty coefficient
/// vector and degree -1.
class Poly {
public:
  Poly() = default;

  static Poly zero(FieldSpecPtr spec);
  static Poly one(FieldSpecPtr spec);
  static Poly x(FieldSpecPtr spec);
  static Poly x_pow(FieldSpecPtr spec, std::size_t k);
  static Poly from(FieldSpecPtr spec, std::vector<Fel> coeffs);

  const FieldSpecPtr &spec() const { return spec_; }
  const std::vector<Fel> &coeffs() const { return c_; }
  int deg() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Fel at(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Fel lead() const;

  Poly operator+(const Poly &o) const;
  Poly operator-(const Poly &o) const;
  Poly operator*(const Poly &o) const;
  Poly scaled(Fel s) const;
  Poly monic() const;
  Fel eval(Fel x) const;

  bool operator==(const Poly &o) const;
  bool operator!=(const Poly &o) const { return !(*this == o); }

private:
  FieldSpecPtr spec_;
  std::vector<Fel> c_;
  void trim();
};

/// Quotient and remainder; the divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
Poly mod(const Poly &a, const Poly &b);

/// Monic greatest common divisor (zero when both inputs are zero).
Poly gcd(Poly a, Poly b);

/// g = s*a + t*b with g the monic gcd.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly &a, const Poly &b);

Poly pow_mod(Poly base, std::uint64_t e, const Poly &f);

} // namespace qcc
