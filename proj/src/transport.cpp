#include "qcc/transport.hpp"

#include <numeric>

#include "qcc/errors.hpp"

namespace qcc {

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t m) {
  if (m == 1)
    return 0;
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t nr = static_cast<std::int64_t>(a % m);
  while (nr != 0) {
    const std::int64_t q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  internal_check(r == 1, "mod_inverse of a non-unit");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(m)
                                          : t);
}

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

} // namespace

TransportMap make_transport(const RingContextPtr &source,
                            const RingContextPtr &target, std::uint32_t h) {
  internal_check(source != nullptr && target != nullptr,
                 "transport without contexts");
  if (!source->spec()->same(*target->spec()) || source->n() != target->n())
    throw Error(ErrorKind::ContextMismatch,
                "transport needs the same field and length on both sides");
  if (source->lambda() != 1)
    throw Error(ErrorKind::WrongRegime,
                "transport starts from the cyclic ring");
  if (!target->lambda_hypothesis(h))
    throw Error(ErrorKind::LambdaHypothesisViolated,
                "transport needs lambda^(1 + p^h) = 1");
  const std::uint64_t t = target->t();
  const std::uint64_t n = target->n();
  if (std::gcd(n, t) != 1)
    throw Error(ErrorKind::NotCoprime, "length and ord(lambda) share a factor");

  TransportMap map;
  map.source = source;
  map.target = target;
  map.h = h;
  map.s = t == 1 ? 0 : ((t - 1) * mod_inverse(n % t, t)) % t;

  const auto &F = *target->spec();
  const Fel gamma = F.pow(target->lambda(), map.s);
  map.gamma = FieldElement(target->spec(), gamma);
  internal_check(F.pow(gamma, n) == F.inv(target->lambda()),
                 "twist scalar fails gamma^n = lambda^(-1)");
  internal_check(F.pow(gamma, 1 + pow_u64(F.p(), h)) == 1,
                 "twist scalar fails gamma^(1 + p^h) = 1");
  return map;
}

namespace {

std::vector<Fel> scale_by_powers(const FieldSpec &F, const std::vector<Fel> &c,
                                 Fel gamma) {
  std::vector<Fel> out(c.size());
  Fel g = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    out[i] = F.mul(c[i], g);
    g = F.mul(g, gamma);
  }
  return out;
}

} // namespace

RingElement apply(const TransportMap &map, const RingElement &a) {
  if (!a.ctx() || !a.ctx()->same(*map.source))
    throw Error(ErrorKind::ContextMismatch,
                "element does not live in the source ring");
  const auto &F = *map.target->spec();
  return RingElement::from_coeffs(
      map.target, scale_by_powers(F, a.coeffs(), map.gamma.index()));
}

RingElement apply_inverse(const TransportMap &map, const RingElement &b) {
  if (!b.ctx() || !b.ctx()->same(*map.target))
    throw Error(ErrorKind::ContextMismatch,
                "element does not live in the target ring");
  const auto &F = *map.target->spec();
  return RingElement::from_coeffs(
      map.source, scale_by_powers(F, b.coeffs(), F.inv(map.gamma.index())));
}

std::vector<Fel> apply_pair(const TransportMap &map,
                            const std::vector<Fel> &w) {
  const std::size_t n = map.target->n();
  if (w.size() != 2 * n)
    throw Error(ErrorKind::LengthMismatch, "pair word must have length 2n");
  const auto &F = *map.target->spec();
  const std::vector<Fel> left =
      scale_by_powers(F, {w.begin(), w.begin() + n}, map.gamma.index());
  std::vector<Fel> right =
      scale_by_powers(F, {w.begin() + n, w.end()}, map.gamma.index());
  std::vector<Fel> out = left;
  out.insert(out.end(), right.begin(), right.end());
  return out;
}

QuasiCode transport_code(const TransportMap &map, const QuasiCode &C) {
  if (!C.ctx() || !C.ctx()->same(*map.source))
    throw Error(ErrorKind::ContextMismatch,
                "code does not live in the source ring");
  const auto &F = *map.target->spec();
  std::vector<std::vector<Fel>> words;
  words.reserve(C.gens().size());
  for (const auto &w : C.gens())
    words.push_back(C.kind() == CodeKind::TwoQuasi
                        ? apply_pair(map, w)
                        : scale_by_powers(F, w, map.gamma.index()));
  return QuasiCode::from_words(map.target, C.kind(), words);
}

} // namespace qcc
