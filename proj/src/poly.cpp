#include "qcc/poly.hpp"

#include <algorithm>

namespace qcc {

namespace {
void require_same(const Poly &a, const Poly &b) {
  internal_check(a.spec() != nullptr && b.spec() != nullptr,
                 "polynomial without a spec");
  if (!a.spec()->same(*b.spec()))
    throw Error(ErrorKind::ContextMismatch,
                "polynomials over different fields");
}
} // namespace

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

Poly Poly::zero(FieldSpecPtr spec) {
  Poly p;
  p.spec_ = std::move(spec);
  return p;
}

Poly Poly::one(FieldSpecPtr spec) {
  Poly p;
  p.spec_ = std::move(spec);
  p.c_ = {1};
  return p;
}

Poly Poly::x(FieldSpecPtr spec) { return x_pow(std::move(spec), 1); }

Poly Poly::x_pow(FieldSpecPtr spec, std::size_t k) {
  Poly p;
  p.spec_ = std::move(spec);
  p.c_.assign(k + 1, 0);
  p.c_[k] = 1;
  return p;
}

Poly Poly::from(FieldSpecPtr spec, std::vector<Fel> coeffs) {
  Poly p;
  for (Fel c : coeffs)
    internal_check(c < spec->q(), "coefficient index out of range");
  p.spec_ = std::move(spec);
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

Fel Poly::lead() const {
  internal_check(!c_.empty(), "leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::operator+(const Poly &o) const {
  require_same(*this, o);
  Poly out;
  out.spec_ = spec_;
  out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i)
    out.c_[i] = spec_->add(at(i), o.at(i));
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly &o) const {
  require_same(*this, o);
  Poly out;
  out.spec_ = spec_;
  out.c_.resize(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < out.c_.size(); ++i)
    out.c_[i] = spec_->sub(at(i), o.at(i));
  out.trim();
  return out;
}

Poly Poly::operator*(const Poly &o) const {
  require_same(*this, o);
  if (is_zero() || o.is_zero())
    return zero(spec_);
  Poly out;
  out.spec_ = spec_;
  out.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0)
      continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      out.c_[i + j] =
          spec_->add(out.c_[i + j], spec_->mul(c_[i], o.c_[j]));
  }
  out.trim();
  return out;
}

Poly Poly::scaled(Fel s) const {
  internal_check(spec_ != nullptr, "polynomial without a spec");
  Poly out;
  out.spec_ = spec_;
  if (s == 0)
    return out;
  out.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i)
    out.c_[i] = spec_->mul(c_[i], s);
  return out;
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1)
    return *this;
  return scaled(spec_->inv(lead()));
}

Fel Poly::eval(Fel x) const {
  internal_check(spec_ != nullptr, "polynomial without a spec");
  Fel acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;)
    acc = spec_->add(spec_->mul(acc, x), c_[i]);
  return acc;
}

bool Poly::operator==(const Poly &o) const {
  require_same(*this, o);
  return c_ == o.c_;
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b) {
  internal_check(a.spec() != nullptr && b.spec() != nullptr,
                 "polynomial without a spec");
  if (!a.spec()->same(*b.spec()))
    throw Error(ErrorKind::ContextMismatch,
                "polynomials over different fields");
  if (b.is_zero())
    throw Error(ErrorKind::ZeroElement, "division by the zero polynomial");
  const auto &spec = a.spec();
  if (a.deg() < b.deg())
    return {Poly::zero(spec), a};

  std::vector<Fel> rem = a.coeffs();
  std::vector<Fel> quot(a.deg() - b.deg() + 1, 0);
  const Fel lead_inv = spec->inv(b.lead());
  const auto &bc = b.coeffs();
  for (std::size_t i = rem.size(); i-- >= bc.size();) {
    if (rem[i] == 0) {
      if (i == 0)
        break;
      continue;
    }
    const Fel qc = spec->mul(rem[i], lead_inv);
    const std::size_t sh = i - (bc.size() - 1);
    quot[sh] = qc;
    for (std::size_t j = 0; j < bc.size(); ++j)
      rem[sh + j] = spec->sub(rem[sh + j], spec->mul(qc, bc[j]));
    if (i == 0)
      break;
  }
  return {Poly::from(spec, std::move(quot)), Poly::from(spec, std::move(rem))};
}

Poly mod(const Poly &a, const Poly &b) { return divmod(a, b).second; }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtGcd ext_gcd(const Poly &a, const Poly &b) {
  const auto &spec = a.spec();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(spec), s1 = Poly::zero(spec);
  Poly t0 = Poly::zero(spec), t1 = Poly::one(spec);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.is_zero() && r0.lead() != 1) {
    const Fel s = spec->inv(r0.lead());
    r0 = r0.scaled(s);
    s0 = s0.scaled(s);
    t0 = t0.scaled(s);
  }
  return {std::move(r0), std::move(s0), std::move(t0)};
}

Poly pow_mod(Poly base, std::uint64_t e, const Poly &f) {
  Poly result = Poly::one(base.spec());
  base = mod(base, f);
  while (e > 0) {
    if (e & 1)
      result = mod(result * base, f);
    base = mod(base * base, f);
    e >>= 1;
  }
  return result;
}

} // namespace qcc
