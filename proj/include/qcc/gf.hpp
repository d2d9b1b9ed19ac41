#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qcc/errors.hpp"

namespace qcc {

/// Element of GF(p^ell) in canonical index form: the element with
/// coefficient tuple (c_0, ..., c_{ell-1}) over GF(p) has index
/// sum c_i p^i.  Index 0 is zero, index 1 is one.
using Fel = std::uint32_t;

/// Immutable description of GF(p^ell): characteristic, extension degree and
/// the monic irreducible modulus (coefficients low-to-high, length ell+1).
/// All arithmetic runs on element indices, in the polynomial basis of the
/// modulus; inverses come from the extended Euclidean algorithm.  Small
/// fields get lookup tables at construction: discrete log/exp for q <= 2^16,
/// full addition and multiplication tables for q <= 256.
class FieldSpec {
public:
  /// Validates and builds a field description.  When `modulus` is empty the
  /// least monic irreducible of degree ell is chosen, ordering candidate
  /// coefficient tuples (c_0, ..., c_{ell-1}) lexicographically.  For
  /// ell = 1 this yields the modulus X.
  static std::shared_ptr<const FieldSpec>
  make(std::uint32_t p, std::uint32_t ell,
       const std::vector<std::uint32_t> &modulus = {});

  std::uint32_t p() const { return p_; }
  std::uint32_t ell() const { return ell_; }
  std::uint64_t q() const { return q_; }
  const std::vector<std::uint32_t> &modulus() const { return modulus_; }

  bool same(const FieldSpec &other) const;

  Fel add(Fel a, Fel b) const;
  Fel sub(Fel a, Fel b) const;
  Fel neg(Fel a) const;
  Fel mul(Fel a, Fel b) const;
  Fel inv(Fel a) const; // ZeroElement on a = 0
  Fel pow(Fel a, std::uint64_t e) const;

  /// a^(p^h) with 0 <= h < ell; HOutOfRange otherwise.
  Fel frobenius(Fel a, std::uint32_t h) const;

  /// Multiplicative order; ZeroElement on a = 0.
  std::uint64_t order(Fel a) const;

  Fel minus_one() const { return neg(1); }

  std::vector<std::uint32_t> coeff_vec(Fel a) const; // length ell, low-to-high

  /// Builds an element from prime-field coefficients (low-to-high).  Accepts
  /// up to ell entries, shorter tuples are zero-padded; values are reduced
  /// mod p.  LengthMismatch beyond ell entries.
  Fel from_coeffs(const std::vector<std::uint32_t> &c) const;

private:
  FieldSpec() = default;
  void build_tables();

  std::uint32_t p_ = 0;
  std::uint32_t ell_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;

  // q <= 2^16: exp_[k] = g^k for a fixed generator g, log_[a] inverts it.
  std::vector<Fel> exp_;
  std::vector<std::int32_t> log_;
  // q <= 256: full tables, indexed a*q + b.
  std::vector<Fel> add_tab_;
  std::vector<Fel> mul_tab_;
  std::vector<Fel> frob_tab_; // one Frobenius step, q <= 2^16

  Fel mul_generic(Fel a, Fel b) const;
  Fel add_generic(Fel a, Fel b) const;
  Fel inv_generic(Fel a) const;
};

using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

/// Value-semantic element handle for API boundaries (JSON, CLI, tests).
/// Hot paths inside the library work on raw `Fel` indices instead.
class FieldElement {
public:
  FieldElement() = default;
  FieldElement(FieldSpecPtr spec, Fel v);

  const FieldSpecPtr &spec() const { return spec_; }
  Fel index() const { return v_; }
  std::vector<std::uint32_t> coeffs() const;
  bool is_zero() const { return v_ == 0; }

  FieldElement operator+(const FieldElement &o) const;
  FieldElement operator-(const FieldElement &o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement &o) const;
  FieldElement operator/(const FieldElement &o) const;
  bool operator==(const FieldElement &o) const;
  bool operator!=(const FieldElement &o) const { return !(*this == o); }

private:
  FieldSpecPtr spec_;
  Fel v_ = 0;
};

/// Spec-facing constructors and operations.
FieldSpecPtr field_new(std::uint32_t p, std::uint32_t ell,
                       const std::vector<std::uint32_t> &modulus = {});

FieldElement frobenius(const FieldElement &a, std::uint32_t h);
std::uint64_t order_of(const FieldElement &a);

/// All field elements alpha with alpha^s = -1, by exhaustive scan of the
/// multiplicative group.  Enforces q <= 2^20 (FieldTooLarge beyond); the
/// result is sorted by element index.
std::vector<FieldElement> roots_of_unary_power_plus_one(std::uint64_t s,
                                                        const FieldSpecPtr &spec);

/// Exhaustive-scan ceiling shared by every full-group enumeration.
constexpr std::uint64_t kMaxScanField = 1ull << 20;

} // namespace qcc
