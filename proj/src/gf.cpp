#include "qcc/gf.hpp"

#include <algorithm>

namespace qcc {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2)
    return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      while (m % d == 0)
        m /= d;
    }
  }
  if (m > 1)
    out.push_back(m);
  return out;
}

// Dense polynomials over GF(p), little-endian coefficients, used only for
// modulus validation and generation.  Everything is tiny (degree <= 31).
using Pp = std::vector<std::uint32_t>;

void pp_trim(Pp &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

int pp_deg(const Pp &a) { return static_cast<int>(a.size()) - 1; }

Pp pp_mulmod(const Pp &a, const Pp &b, const Pp &f, std::uint32_t p) {
  if (a.empty() || b.empty())
    return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  }
  // f is monic; cancel leading terms top-down.
  const std::size_t df = f.size() - 1;
  for (std::size_t i = acc.size(); i-- > df;) {
    std::uint64_t c = acc[i] % p;
    if (c == 0)
      continue;
    for (std::size_t j = 0; j < df; ++j)
      acc[i - df + j] =
          (acc[i - df + j] + static_cast<std::uint64_t>(p - f[j] % p) * c) % p;
    acc[i] = 0;
  }
  Pp out(df, 0);
  for (std::size_t i = 0; i < df && i < acc.size(); ++i)
    out[i] = static_cast<std::uint32_t>(acc[i] % p);
  pp_trim(out);
  return out;
}

Pp pp_powmod(Pp base, std::uint64_t e, const Pp &f, std::uint32_t p) {
  Pp result{1};
  while (e > 0) {
    if (e & 1)
      result = pp_mulmod(result, base, f, p);
    base = pp_mulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Pp pp_sub(Pp a, const Pp &b, std::uint32_t p) {
  if (a.size() < b.size())
    a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = (a[i] + p - b[i]) % p;
  pp_trim(a);
  return a;
}

std::uint32_t pp_inv_scalar(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t r = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1)
      r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Pp pp_mod(Pp a, const Pp &b, std::uint32_t p) {
  const int db = pp_deg(b);
  const std::uint32_t lead_inv = pp_inv_scalar(b.back(), p);
  while (pp_deg(a) >= db) {
    const std::uint64_t c =
        static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shiftpos = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shiftpos + i] =
          static_cast<std::uint32_t>((a[shiftpos + i] + (p - b[i]) * c) % p);
    pp_trim(a);
    if (a.empty())
      break;
  }
  return a;
}

Pp pp_gcd(Pp a, Pp b, std::uint32_t p) {
  pp_trim(a);
  pp_trim(b);
  while (!b.empty()) {
    Pp r = pp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty() && a.back() != 1) {
    const std::uint32_t s = pp_inv_scalar(a.back(), p);
    for (auto &c : a)
      c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * s % p);
  }
  return a;
}

// Rabin's test: f of degree d is irreducible over GF(p) iff X^(p^d) = X
// mod f and gcd(X^(p^(d/r)) - X, f) = 1 for every prime r dividing d.
bool pp_irreducible(const Pp &f, std::uint32_t p) {
  const int d = pp_deg(f);
  if (d <= 0)
    return false;
  if (d == 1)
    return true;
  if (f[0] == 0)
    return false; // divisible by X
  const Pp x{0, 1};
  // t_j = X^(p^j) mod f via repeated p-th powers (Frobenius on the quotient).
  std::vector<Pp> frob(static_cast<std::size_t>(d) + 1);
  frob[0] = x;
  for (int j = 1; j <= d; ++j)
    frob[j] = pp_powmod(frob[j - 1], p, f, p);
  if (pp_sub(frob[d], x, p) != Pp{})
    return false;
  for (std::uint64_t r : prime_factors(static_cast<std::uint64_t>(d))) {
    Pp diff = pp_sub(frob[d / r], x, p);
    Pp g = pp_gcd(diff, f, p);
    if (pp_deg(g) != 0)
      return false;
  }
  return true;
}

} // namespace

std::shared_ptr<const FieldSpec>
FieldSpec::make(std::uint32_t p, std::uint32_t ell,
                const std::vector<std::uint32_t> &modulus) {
  if (p > (1u << 16))
    throw Error(ErrorKind::FieldTooLarge, "characteristic above 2^16");
  if (!is_prime(p))
    throw Error(ErrorKind::NotPrime,
                "p = " + std::to_string(p) + " is not prime");
  if (ell < 1)
    throw Error(ErrorKind::DegreeMismatch, "extension degree must be >= 1");

  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < ell; ++i) {
    q *= p;
    if (q > (1ull << 31))
      throw Error(ErrorKind::FieldTooLarge, "q = p^ell above 2^31");
  }

  auto spec = std::shared_ptr<FieldSpec>(new FieldSpec());
  spec->p_ = p;
  spec->ell_ = ell;
  spec->q_ = q;

  if (!modulus.empty()) {
    if (modulus.size() != static_cast<std::size_t>(ell) + 1)
      throw Error(ErrorKind::DegreeMismatch,
                  "modulus must have exactly ell+1 coefficients");
    for (auto c : modulus)
      if (c >= p)
        throw Error(ErrorKind::DegreeMismatch,
                    "modulus coefficient out of range for GF(p)");
    if (modulus.back() != 1)
      throw Error(ErrorKind::DegreeMismatch, "modulus must be monic");
    Pp f(modulus.begin(), modulus.end());
    if (!pp_irreducible(f, p))
      throw Error(ErrorKind::NotIrreducible,
                  "modulus is reducible over GF(p)");
    spec->modulus_ = modulus;
  } else {
    // Least monic irreducible, candidate tuples (c_0, ..., c_{ell-1}) in
    // lexicographic order.  For ell >= 2 a zero constant term means the
    // candidate is divisible by X, so those are skipped up front.
    std::uint64_t start = 1;
    for (std::uint32_t i = 1; i < ell; ++i)
      start *= p;
    if (ell == 1)
      start = 0; // X itself
    bool found = false;
    for (std::uint64_t v = start; v < q && !found; ++v) {
      // v encodes the tuple (c_0, ..., c_{ell-1}) with c_0 most significant,
      // so increasing v walks the tuples in lexicographic order.
      Pp f(ell + 1, 0);
      std::uint64_t w = v;
      for (std::uint32_t j = 0; j < ell; ++j) {
        f[ell - 1 - j] = static_cast<std::uint32_t>(w % p);
        w /= p;
      }
      f[ell] = 1;
      if (pp_irreducible(f, p)) {
        spec->modulus_.assign(f.begin(), f.end());
        found = true;
      }
    }
    internal_check(found, "no irreducible modulus found");
  }

  spec->build_tables();
  return spec;
}

bool FieldSpec::same(const FieldSpec &other) const {
  return p_ == other.p_ && ell_ == other.ell_ && modulus_ == other.modulus_;
}

Fel FieldSpec::add_generic(Fel a, Fel b) const {
  if (p_ == 2)
    return a ^ b;
  Fel out = 0;
  std::uint64_t place = 1;
  std::uint64_t ua = a, ub = b;
  for (std::uint32_t i = 0; i < ell_; ++i) {
    const std::uint64_t da = ua % p_, db = ub % p_;
    out += static_cast<Fel>((da + db) % p_ * place);
    place *= p_;
    ua /= p_;
    ub /= p_;
  }
  return out;
}

Fel FieldSpec::mul_generic(Fel a, Fel b) const {
  if (a == 0 || b == 0)
    return 0;
  std::vector<std::uint32_t> ca = coeff_vec(a), cb = coeff_vec(b);
  std::vector<std::uint64_t> acc(2 * ell_ - 1, 0);
  for (std::uint32_t i = 0; i < ell_; ++i) {
    if (ca[i] == 0)
      continue;
    for (std::uint32_t j = 0; j < ell_; ++j)
      acc[i + j] =
          (acc[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_;
  }
  for (std::size_t i = acc.size(); i-- > ell_;) {
    const std::uint64_t c = acc[i];
    if (c == 0)
      continue;
    for (std::uint32_t j = 0; j < ell_; ++j)
      acc[i - ell_ + j] =
          (acc[i - ell_ + j] + (p_ - modulus_[j]) * c) % p_;
    acc[i] = 0;
  }
  Fel out = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < ell_; ++i) {
    out += static_cast<Fel>(acc[i] % p_ * place);
    place *= p_;
  }
  return out;
}

Fel FieldSpec::inv_generic(Fel a) const {
  // Extended Euclid between the coefficient polynomial and the modulus.
  Pp r0(modulus_.begin(), modulus_.end());
  Pp r1;
  {
    auto c = coeff_vec(a);
    r1.assign(c.begin(), c.end());
    pp_trim(r1);
  }
  Pp t0; // coefficient of r0
  Pp t1{1};
  while (pp_deg(r1) > 0) {
    // r0 = q * r1 + r, top-down elimination, tracking t.
    const std::uint32_t lead_inv = pp_inv_scalar(r1.back(), p_);
    Pp r = r0, t = t0;
    while (pp_deg(r) >= pp_deg(r1)) {
      const std::uint64_t c =
          static_cast<std::uint64_t>(r.back()) * lead_inv % p_;
      const std::size_t sh = r.size() - r1.size();
      for (std::size_t i = 0; i < r1.size(); ++i)
        r[sh + i] = static_cast<std::uint32_t>((r[sh + i] + (p_ - r1[i]) * c) %
                                               p_);
      if (t.size() < t1.size() + sh)
        t.resize(t1.size() + sh, 0);
      for (std::size_t i = 0; i < t1.size(); ++i)
        t[sh + i] = static_cast<std::uint32_t>((t[sh + i] + (p_ - t1[i]) * c) %
                                               p_);
      pp_trim(r);
      if (r.empty())
        break;
    }
    r0 = std::move(r1);
    t0 = std::move(t1);
    r1 = std::move(r);
    t1 = std::move(t);
  }
  internal_check(pp_deg(r1) == 0, "inverse of a non-unit");
  const std::uint32_t s = pp_inv_scalar(r1[0], p_);
  Fel out = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < ell_; ++i) {
    const std::uint32_t c = i < t1.size() ? t1[i] : 0;
    out += static_cast<Fel>(static_cast<std::uint64_t>(c) * s % p_ * place);
    place *= p_;
  }
  return out;
}

void FieldSpec::build_tables() {
  if (q_ > (1ull << 16))
    return;
  const auto q = static_cast<std::uint32_t>(q_);
  // Discrete log tables need a generator of the unit group.
  const auto factors = prime_factors(q_ - 1);
  Fel gen = 1;
  if (q_ > 2) {
    for (Fel cand = 2; cand < q; ++cand) {
      bool ok = true;
      for (auto r : factors) {
        // cand^((q-1)/r) by square-and-multiply on the generic product
        std::uint64_t e = (q_ - 1) / r;
        Fel acc = 1, base = cand;
        while (e > 0) {
          if (e & 1)
            acc = mul_generic(acc, base);
          base = mul_generic(base, base);
          e >>= 1;
        }
        if (acc == 1) {
          ok = false;
          break;
        }
      }
      if (ok) {
        gen = cand;
        break;
      }
    }
  }
  exp_.assign(q_ - 1, 1);
  log_.assign(q_, -1);
  Fel cur = 1;
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    exp_[k] = cur;
    log_[cur] = static_cast<std::int32_t>(k);
    cur = mul_generic(cur, gen);
  }
  internal_check(cur == 1, "generator order mismatch");

  frob_tab_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    std::uint64_t e = p_;
    Fel acc = 1, base = static_cast<Fel>(a);
    while (e > 0) {
      if (e & 1)
        acc = mul_generic(acc, base);
      base = mul_generic(base, base);
      e >>= 1;
    }
    frob_tab_[a] = acc;
  }

  if (q_ <= 256) {
    add_tab_.assign(q_ * q_, 0);
    mul_tab_.assign(q_ * q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_tab_[a * q + b] = add_generic(a, b);
        mul_tab_[a * q + b] = mul_generic(a, b);
      }
  }
}

Fel FieldSpec::add(Fel a, Fel b) const {
  if (!add_tab_.empty())
    return add_tab_[a * q_ + b];
  return add_generic(a, b);
}

Fel FieldSpec::neg(Fel a) const {
  if (p_ == 2)
    return a;
  Fel out = 0;
  std::uint64_t place = 1;
  std::uint64_t ua = a;
  for (std::uint32_t i = 0; i < ell_; ++i) {
    const std::uint64_t da = ua % p_;
    out += static_cast<Fel>((p_ - da) % p_ * place);
    place *= p_;
    ua /= p_;
  }
  return out;
}

Fel FieldSpec::sub(Fel a, Fel b) const { return add(a, neg(b)); }

Fel FieldSpec::mul(Fel a, Fel b) const {
  if (!mul_tab_.empty())
    return mul_tab_[a * q_ + b];
  if (!exp_.empty()) {
    if (a == 0 || b == 0)
      return 0;
    const std::uint64_t k =
        (static_cast<std::uint64_t>(log_[a]) + log_[b]) % (q_ - 1);
    return exp_[k];
  }
  return mul_generic(a, b);
}

Fel FieldSpec::inv(Fel a) const {
  if (a == 0)
    throw Error(ErrorKind::ZeroElement, "inverse of zero");
  if (!exp_.empty()) {
    const std::uint64_t k = (q_ - 1 - log_[a]) % (q_ - 1);
    return exp_[k];
  }
  return inv_generic(a);
}

Fel FieldSpec::pow(Fel a, std::uint64_t e) const {
  if (a == 0)
    return e == 0 ? 1 : 0;
  if (!exp_.empty()) {
    const std::uint64_t k =
        static_cast<std::uint64_t>(log_[a]) % (q_ - 1) * (e % (q_ - 1)) %
        (q_ - 1);
    return exp_[k];
  }
  Fel acc = 1, base = a;
  while (e > 0) {
    if (e & 1)
      acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

Fel FieldSpec::frobenius(Fel a, std::uint32_t h) const {
  if (h >= ell_)
    throw Error(ErrorKind::HOutOfRange,
                "frobenius exponent h = " + std::to_string(h) +
                    " outside [0, ell)");
  Fel out = a;
  for (std::uint32_t i = 0; i < h; ++i) {
    if (!frob_tab_.empty())
      out = frob_tab_[out];
    else
      out = pow(out, p_);
  }
  return out;
}

std::uint64_t FieldSpec::order(Fel a) const {
  if (a == 0)
    throw Error(ErrorKind::ZeroElement, "order of zero");
  std::uint64_t ord = q_ - 1;
  for (auto r : prime_factors(q_ - 1)) {
    while (ord % r == 0 && pow(a, ord / r) == 1)
      ord /= r;
  }
  return ord;
}

std::vector<std::uint32_t> FieldSpec::coeff_vec(Fel a) const {
  std::vector<std::uint32_t> out(ell_, 0);
  std::uint64_t ua = a;
  for (std::uint32_t i = 0; i < ell_; ++i) {
    out[i] = static_cast<std::uint32_t>(ua % p_);
    ua /= p_;
  }
  return out;
}

Fel FieldSpec::from_coeffs(const std::vector<std::uint32_t> &c) const {
  if (c.size() > ell_)
    throw Error(ErrorKind::LengthMismatch,
                "coefficient tuple longer than the extension degree");
  Fel out = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < ell_; ++i) {
    const std::uint32_t d = i < c.size() ? c[i] % p_ : 0;
    out += static_cast<Fel>(d * place);
    place *= p_;
  }
  return out;
}

FieldElement::FieldElement(FieldSpecPtr spec, Fel v) : spec_(std::move(spec)), v_(v) {
  internal_check(spec_ != nullptr, "FieldElement without a spec");
  internal_check(v_ < spec_->q(), "element index out of range");
}

std::vector<std::uint32_t> FieldElement::coeffs() const {
  internal_check(spec_ != nullptr, "FieldElement without a spec");
  return spec_->coeff_vec(v_);
}

namespace {
void require_same_spec(const FieldElement &a, const FieldElement &b) {
  internal_check(a.spec() != nullptr && b.spec() != nullptr,
                 "FieldElement without a spec");
  if (!a.spec()->same(*b.spec()))
    throw Error(ErrorKind::ContextMismatch,
                "field elements from different fields");
}
} // namespace

FieldElement FieldElement::operator+(const FieldElement &o) const {
  require_same_spec(*this, o);
  return {spec_, spec_->add(v_, o.v_)};
}

FieldElement FieldElement::operator-(const FieldElement &o) const {
  require_same_spec(*this, o);
  return {spec_, spec_->sub(v_, o.v_)};
}

FieldElement FieldElement::operator-() const {
  return {spec_, spec_->neg(v_)};
}

FieldElement FieldElement::operator*(const FieldElement &o) const {
  require_same_spec(*this, o);
  return {spec_, spec_->mul(v_, o.v_)};
}

FieldElement FieldElement::operator/(const FieldElement &o) const {
  require_same_spec(*this, o);
  return {spec_, spec_->mul(v_, spec_->inv(o.v_))};
}

bool FieldElement::operator==(const FieldElement &o) const {
  require_same_spec(*this, o);
  return v_ == o.v_;
}

FieldSpecPtr field_new(std::uint32_t p, std::uint32_t ell,
                       const std::vector<std::uint32_t> &modulus) {
  return FieldSpec::make(p, ell, modulus);
}

FieldElement frobenius(const FieldElement &a, std::uint32_t h) {
  return {a.spec(), a.spec()->frobenius(a.index(), h)};
}

std::uint64_t order_of(const FieldElement &a) {
  return a.spec()->order(a.index());
}

std::vector<FieldElement>
roots_of_unary_power_plus_one(std::uint64_t s, const FieldSpecPtr &spec) {
  if (spec->q() > kMaxScanField)
    throw Error(ErrorKind::FieldTooLarge,
                "exhaustive root scan needs q <= 2^20");
  const Fel target = spec->minus_one();
  std::vector<FieldElement> out;
  for (Fel a = 1; a < spec->q(); ++a)
    if (spec->pow(a, s) == target)
      out.emplace_back(spec, a);
  return out;
}

} // namespace qcc
