#include "qcc/ring.hpp"

#include <algorithm>

namespace qcc {

std::shared_ptr<const RingContext> RingContext::make(FieldSpecPtr spec,
                                                     std::size_t n,
                                                     Fel lambda) {
  internal_check(spec != nullptr, "ring context without a field");
  internal_check(lambda < spec->q(), "lambda index out of range");
  if (n < 2)
    throw Error(ErrorKind::LengthMismatch, "ring length n must be at least 2");
  if (lambda == 0)
    throw Error(ErrorKind::ZeroElement, "lambda must be a unit");
  auto ctx = std::shared_ptr<RingContext>(new RingContext());
  ctx->spec_ = std::move(spec);
  ctx->n_ = n;
  ctx->lambda_ = lambda;
  ctx->t_ = ctx->spec_->order(lambda);
  return ctx;
}

bool RingContext::lambda_hypothesis(std::uint32_t h) const {
  if (h >= spec_->ell())
    throw Error(ErrorKind::HOutOfRange,
                "h = " + std::to_string(h) + " outside [0, ell)");
  std::uint64_t ph = 1;
  for (std::uint32_t i = 0; i < h; ++i)
    ph *= spec_->p();
  return spec_->pow(lambda_, ph + 1) == 1;
}

bool RingContext::same(const RingContext &other) const {
  return spec_->same(*other.spec_) && n_ == other.n_ &&
         lambda_ == other.lambda_;
}

namespace {
void require_same_ctx(const RingElement &a, const RingElement &b) {
  internal_check(a.ctx() != nullptr && b.ctx() != nullptr,
                 "ring element without a context");
  if (!a.ctx()->same(*b.ctx()))
    throw Error(ErrorKind::ContextMismatch,
                "ring elements from different rings");
}
} // namespace

RingElement RingElement::zero(RingContextPtr ctx) {
  internal_check(ctx != nullptr, "ring element without a context");
  RingElement e;
  e.c_.assign(ctx->n(), 0);
  e.ctx_ = std::move(ctx);
  return e;
}

RingElement RingElement::one(RingContextPtr ctx) {
  RingElement e = zero(std::move(ctx));
  e.c_[0] = 1;
  return e;
}

RingElement RingElement::x_power(RingContextPtr ctx, std::uint64_t k) {
  RingElement e = zero(std::move(ctx));
  const std::size_t n = e.ctx_->n();
  const std::uint64_t lam_exp = (k / n) % e.ctx_->t();
  e.c_[k % n] = e.ctx_->spec()->pow(e.ctx_->lambda(), lam_exp);
  return e;
}

RingElement RingElement::from_coeffs(RingContextPtr ctx,
                                     std::vector<Fel> coeffs) {
  internal_check(ctx != nullptr, "ring element without a context");
  if (coeffs.size() != ctx->n())
    throw Error(ErrorKind::LengthMismatch,
                "coefficient vector length must equal n");
  for (Fel c : coeffs)
    internal_check(c < ctx->spec()->q(), "coefficient index out of range");
  RingElement e;
  e.ctx_ = std::move(ctx);
  e.c_ = std::move(coeffs);
  return e;
}

Fel RingElement::coeff(std::size_t i) const {
  internal_check(i < c_.size(), "coefficient index out of range");
  return c_[i];
}

bool RingElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](Fel v) { return v == 0; });
}

std::size_t RingElement::weight() const {
  return static_cast<std::size_t>(
      std::count_if(c_.begin(), c_.end(), [](Fel v) { return v != 0; }));
}

RingElement RingElement::operator+(const RingElement &o) const {
  require_same_ctx(*this, o);
  RingElement out = *this;
  const auto &spec = ctx_->spec();
  for (std::size_t i = 0; i < c_.size(); ++i)
    out.c_[i] = spec->add(c_[i], o.c_[i]);
  return out;
}

RingElement RingElement::operator-(const RingElement &o) const {
  require_same_ctx(*this, o);
  RingElement out = *this;
  const auto &spec = ctx_->spec();
  for (std::size_t i = 0; i < c_.size(); ++i)
    out.c_[i] = spec->sub(c_[i], o.c_[i]);
  return out;
}

RingElement RingElement::operator-() const {
  internal_check(ctx_ != nullptr, "ring element without a context");
  RingElement out = *this;
  const auto &spec = ctx_->spec();
  for (auto &v : out.c_)
    v = spec->neg(v);
  return out;
}

RingElement RingElement::operator*(const RingElement &o) const {
  return ring_mul(*this, o);
}

RingElement RingElement::scaled(Fel s) const {
  internal_check(ctx_ != nullptr, "ring element without a context");
  RingElement out = *this;
  const auto &spec = ctx_->spec();
  for (auto &v : out.c_)
    v = spec->mul(v, s);
  return out;
}

bool RingElement::operator==(const RingElement &o) const {
  require_same_ctx(*this, o);
  return c_ == o.c_;
}

RingElement ring_mul(const RingElement &a, const RingElement &b) {
  internal_check(a.ctx() != nullptr && b.ctx() != nullptr,
                 "ring element without a context");
  if (!a.ctx()->same(*b.ctx()))
    throw Error(ErrorKind::ContextMismatch,
                "ring elements from different rings");
  const auto &ctx = a.ctx();
  const auto &spec = ctx->spec();
  const std::size_t n = ctx->n();
  const Fel lambda = ctx->lambda();
  RingElement out = RingElement::zero(ctx);
  std::vector<Fel> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const Fel ai = a.coeff(i);
    if (ai == 0)
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      const Fel bj = b.coeff(j);
      if (bj == 0)
        continue;
      Fel term = spec->mul(ai, bj);
      std::size_t k = i + j;
      if (k >= n) {
        k -= n;
        term = spec->mul(term, lambda);
      }
      acc[k] = spec->add(acc[k], term);
    }
  }
  return RingElement::from_coeffs(ctx, std::move(acc));
}

RingElement shift(const RingElement &a) {
  internal_check(a.ctx() != nullptr, "ring element without a context");
  const auto &ctx = a.ctx();
  const std::size_t n = ctx->n();
  std::vector<Fel> out(n, 0);
  out[0] = ctx->spec()->mul(ctx->lambda(), a.coeff(n - 1));
  for (std::size_t i = 1; i < n; ++i)
    out[i] = a.coeff(i - 1);
  return RingElement::from_coeffs(ctx, std::move(out));
}

Matrix perm_matrix(const RingContextPtr &ctx) {
  internal_check(ctx != nullptr, "ring context required");
  const std::size_t n = ctx->n();
  Matrix m(ctx->spec(), n, n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    m.set(i, i + 1, 1);
  m.set(n - 1, 0, ctx->lambda());
  return m;
}

Matrix circulant(const RingElement &a) {
  internal_check(a.ctx() != nullptr, "ring element without a context");
  const std::size_t n = a.ctx()->n();
  Matrix m(a.ctx()->spec(), n, n);
  RingElement cur = a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      m.set(i, j, cur.coeff(j));
    if (i + 1 < n)
      cur = shift(cur);
  }
  return m;
}

RingElement star(const RingElement &a, std::uint32_t h) {
  internal_check(a.ctx() != nullptr, "ring element without a context");
  const auto &ctx = a.ctx();
  const auto &spec = ctx->spec();
  if (!ctx->lambda_hypothesis(h))
    throw Error(ErrorKind::LambdaHypothesisViolated,
                "lambda^(1+p^h) = 1 is required for conjugation");
  const std::size_t n = ctx->n();
  const std::uint64_t t = ctx->t();
  std::vector<Fel> out(n, 0);
  // (X^(nt-1))^i expands to lambda^e X^r; the exponent n*t*i - i needs
  // 128 bits before the splits by n and t.
  const unsigned __int128 step =
      static_cast<unsigned __int128>(n) * t - 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Fel ai = a.coeff(i);
    if (ai == 0)
      continue;
    const unsigned __int128 e = step * i;
    const auto r = static_cast<std::size_t>(e % n);
    const auto lam_exp = static_cast<std::uint64_t>((e / n) % t);
    const Fel term =
        spec->mul(spec->frobenius(ai, h), spec->pow(ctx->lambda(), lam_exp));
    out[r] = spec->add(out[r], term);
  }
  return RingElement::from_coeffs(ctx, std::move(out));
}

} // namespace qcc
