#include "qcc/semisimple.hpp"

#include <algorithm>

#include "qcc/rng.hpp"

namespace qcc {

namespace {

constexpr std::uint64_t kFactorSeed = 0x666163746f722131ull;

void require_semisimple(const RingContextPtr &ctx) {
  internal_check(ctx != nullptr, "ring context required");
  if (!ctx->semisimple())
    throw Error(ErrorKind::NotSemisimple,
                "X^n - lambda has repeated roots when p divides n");
}

bool poly_less(const Poly &x, const Poly &y) {
  if (x.deg() != y.deg())
    return x.deg() < y.deg();
  for (std::size_t i = 0; i <= static_cast<std::size_t>(x.deg()); ++i)
    if (x.at(i) != y.at(i))
      return x.at(i) < y.at(i);
  return false;
}

Poly random_poly(const FieldSpecPtr &spec, std::size_t max_deg, Rng &rng) {
  std::vector<Fel> c(max_deg + 1);
  const auto q = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(spec->q(), 0xFFFFFFFFull));
  for (auto &v : c)
    v = rng.below(q);
  return Poly::from(spec, std::move(c));
}

// Equal-degree splitting of a product of distinct irreducibles of degree d.
void split_equal_degree(const Poly &f, std::size_t d, Rng &rng,
                        std::vector<Poly> &out) {
  const auto &spec = f.spec();
  if (static_cast<std::size_t>(f.deg()) == d) {
    out.push_back(f.monic());
    return;
  }
  const Poly one = Poly::one(spec);
  Poly g = Poly::zero(spec);
  for (;;) {
    Poly r = random_poly(spec, static_cast<std::size_t>(f.deg()) - 1, rng);
    if (r.deg() < 1)
      continue;
    Poly c = gcd(r, f);
    if (c.deg() > 0 && c.deg() < f.deg()) {
      g = c; // the draw already shares a factor
      break;
    }
    if (spec->p() == 2) {
      // Absolute trace r + r^2 + r^4 + ... lands in F_2 on each component.
      const std::uint64_t steps =
          static_cast<std::uint64_t>(spec->ell()) * d;
      Poly t = r, cur = r;
      for (std::uint64_t i = 1; i < steps; ++i) {
        cur = mod(cur * cur, f);
        t = t + cur;
      }
      g = gcd(t, f);
    } else {
      // r^((q^d - 1)/2) is +-1 on each component; build it as the
      // ((q-1)/2)-th power of the norm-style product of q-power conjugates
      // to keep every exponent inside 64 bits.
      Poly s = pow_mod(r, (spec->q() - 1) / 2, f);
      Poly cur = s, acc = s;
      for (std::size_t k = 1; k < d; ++k) {
        cur = pow_mod(cur, spec->q(), f);
        acc = mod(acc * cur, f);
      }
      g = gcd(acc - one, f);
    }
    if (g.deg() > 0 && g.deg() < f.deg())
      break;
  }
  split_equal_degree(g, d, rng, out);
  split_equal_degree(divmod(f, g).first, d, rng, out);
}

// Distinct-degree stage, then equal-degree splitting.  f must be monic and
// square-free.
std::vector<Poly> factor_squarefree(const Poly &f) {
  const auto &spec = f.spec();
  Rng rng(kFactorSeed);
  std::vector<Poly> out;
  Poly rest = f;
  Poly h = Poly::x(spec);
  const Poly x = Poly::x(spec);
  std::size_t d = 0;
  while (rest.deg() > 0 &&
         static_cast<std::size_t>(rest.deg()) >= 2 * (d + 1)) {
    ++d;
    h = pow_mod(h, spec->q(), rest);
    Poly g = gcd(h - x, rest);
    if (g.deg() > 0) {
      split_equal_degree(g, d, rng, out);
      rest = divmod(rest, g).first;
      h = mod(h, rest);
    }
  }
  if (rest.deg() > 0)
    out.push_back(rest.monic());
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

// Factors of X^n - lambda, sorted, with X - 1 rotated to the front when it
// divides (always for lambda = 1).
std::vector<Poly> factor_ring_poly(const RingContextPtr &ctx) {
  require_semisimple(ctx);
  const auto &spec = ctx->spec();
  std::vector<Fel> fc(ctx->n() + 1, 0);
  fc[0] = spec->neg(ctx->lambda());
  fc[ctx->n()] = 1;
  std::vector<Poly> factors = factor_squarefree(Poly::from(spec, fc));

  const Poly xm1 =
      Poly::from(spec, {spec->neg(1), 1});
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i] == xm1) {
      std::rotate(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(i),
                  factors.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      break;
    }

  std::size_t degsum = 0;
  Poly prod = Poly::one(spec);
  for (const auto &phi : factors) {
    degsum += static_cast<std::size_t>(phi.deg());
    prod = prod * phi;
  }
  internal_check(degsum == ctx->n() && prod == Poly::from(spec, fc),
                 "factorization does not multiply back");
  return factors;
}

RingElement from_poly(const RingContextPtr &ctx, const Poly &p) {
  internal_check(p.deg() < static_cast<int>(ctx->n()),
                 "polynomial does not fit in the ring");
  std::vector<Fel> c(ctx->n(), 0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i)
    c[i] = p.coeffs()[i];
  return RingElement::from_coeffs(ctx, std::move(c));
}

} // namespace

std::vector<Poly> factor_xn_minus_1(const RingContextPtr &ctx) {
  require_semisimple(ctx);
  if (ctx->lambda() == 1)
    return factor_ring_poly(ctx);
  auto unital = RingContext::make(ctx->spec(), ctx->n(), 1);
  return factor_ring_poly(unital);
}

IdempotentBasis ring_idempotents(const RingContextPtr &ctx) {
  require_semisimple(ctx);
  const auto &spec = ctx->spec();
  IdempotentBasis basis;
  basis.ctx = ctx;
  basis.factors = factor_ring_poly(ctx);

  std::vector<Fel> fc(ctx->n() + 1, 0);
  fc[0] = spec->neg(ctx->lambda());
  fc[ctx->n()] = 1;
  const Poly f = Poly::from(spec, fc);

  for (const auto &phi : basis.factors) {
    const Poly u = divmod(f, phi).first;
    const ExtGcd eg = ext_gcd(u, phi);
    internal_check(eg.g.deg() == 0 && !eg.g.is_zero(),
                   "cofactor not coprime to its factor");
    // eg.s * u = 1 mod phi, so (u * s) mod f is 1 on this component and 0
    // elsewhere.
    const Poly e = mod(u * mod(eg.s, phi), f);
    basis.idems.push_back(from_poly(ctx, e));
    basis.dims.push_back(static_cast<std::size_t>(phi.deg()));
  }

  RingElement sum = RingElement::zero(ctx);
  for (std::size_t i = 0; i < basis.idems.size(); ++i) {
    sum = sum + basis.idems[i];
    for (std::size_t j = i; j < basis.idems.size(); ++j) {
      const RingElement prod = ring_mul(basis.idems[i], basis.idems[j]);
      if (i == j)
        internal_check(prod == basis.idems[i], "idempotency failed");
      else
        internal_check(prod.is_zero(), "orthogonality failed");
    }
  }
  internal_check(sum == RingElement::one(ctx), "idempotents do not sum to 1");
  return basis;
}

IdempotentBasis idempotents(const RingContextPtr &ctx) {
  internal_check(ctx != nullptr, "ring context required");
  if (ctx->lambda() != 1)
    throw Error(ErrorKind::WrongRegime,
                "idempotent basis is defined for lambda = 1");
  return ring_idempotents(ctx);
}

std::size_t mu(const RingContextPtr &ctx) {
  const auto factors = factor_xn_minus_1(ctx);
  internal_check(factors.size() >= 2, "no nontrivial factor of X^n - 1");
  std::size_t best = ctx->n();
  for (std::size_t i = 1; i < factors.size(); ++i)
    best = std::min(best, static_cast<std::size_t>(factors[i].deg()));
  return best;
}

StarPairing star_pairing(const IdempotentBasis &basis, std::uint32_t h) {
  StarPairing out;
  out.h = h;
  const std::size_t m = basis.idems.size();
  std::vector<std::size_t> image(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const RingElement si = star(basis.idems[i], h);
    for (std::size_t j = 0; j < m; ++j)
      if (si == basis.idems[j]) {
        image[i] = j;
        break;
      }
    internal_check(image[i] < m,
                   "conjugate of an idempotent is not an idempotent");
  }
  for (std::size_t i = 0; i < m; ++i) {
    internal_check(image[image[i]] == i, "conjugation is not an involution");
    if (image[i] == i)
      out.fixed.push_back(i);
    else if (i < image[i])
      out.pairs.emplace_back(i, image[i]);
  }
  return out;
}

RingElement ring_pow(const RingElement &u, std::uint64_t e) {
  internal_check(u.ctx() != nullptr, "ring element without a context");
  RingElement acc = RingElement::one(u.ctx());
  RingElement base = u;
  while (e > 0) {
    if (e & 1)
      acc = ring_mul(acc, base);
    base = ring_mul(base, base);
    e >>= 1;
  }
  return acc;
}

RingElement component_inverse(const IdempotentBasis &basis, std::size_t i,
                              const RingElement &u) {
  internal_check(i < basis.idems.size(), "component index out of range");
  const auto &ctx = basis.ctx;
  const auto &spec = ctx->spec();
  const RingElement &e = basis.idems[i];
  const RingElement v = ring_mul(e, u);
  if (v.is_zero())
    throw Error(ErrorKind::ZeroElement,
                "element has no inverse on the component");
  // Norm trick: v times the product of its q-power conjugates is a
  // base-field scalar multiple of the component identity.
  RingElement m = e;
  RingElement cur = v;
  for (std::size_t k = 1; k < basis.dims[i]; ++k) {
    cur = ring_pow(cur, spec->q());
    m = ring_mul(m, cur);
  }
  const RingElement norm = ring_mul(v, m);
  Fel alpha = 0;
  for (std::size_t j = 0; j < ctx->n(); ++j)
    if (e.coeff(j) != 0) {
      alpha = spec->mul(norm.coeff(j), spec->inv(e.coeff(j)));
      break;
    }
  internal_check(alpha != 0, "norm collapsed to zero on a unit");
  const RingElement inv = m.scaled(spec->inv(alpha));
  internal_check(ring_mul(v, inv) == e, "component inverse check failed");
  return inv;
}

QuasiCode code_from_goursat(const RingContextPtr &ctx,
                            const GoursatDecomposition &dec) {
  internal_check(ctx != nullptr, "ring context required");
  const std::size_t n = ctx->n();
  const RingElement zero = RingElement::zero(ctx);
  const RingElement bg = ring_mul(dec.b, dec.g);
  std::vector<std::vector<Fel>> rows;
  rows.reserve(3 * n);
  auto push_pair = [&](const RingElement &l, const RingElement &r) {
    RingElement u = l, v = r;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Fel> row = u.coeffs();
      row.insert(row.end(), v.coeffs().begin(), v.coeffs().end());
      rows.push_back(std::move(row));
      if (i + 1 < n) {
        u = shift(u);
        v = shift(v);
      }
    }
  };
  push_pair(dec.a, zero);
  push_pair(zero, dec.a2);
  push_pair(dec.b, bg);
  return QuasiCode::from_words(ctx, CodeKind::TwoQuasi, rows);
}

GoursatDecomposition decompose(const QuasiCode &C) {
  const auto &ctx = C.ctx();
  internal_check(ctx != nullptr, "code without a context");
  require_semisimple(ctx);
  if (C.kind() != CodeKind::TwoQuasi)
    throw Error(ErrorKind::LengthMismatch,
                "decomposition needs a two-quasi code");
  const auto &spec = ctx->spec();
  const std::size_t n = ctx->n();
  const IdempotentBasis basis = ring_idempotents(ctx);

  GoursatDecomposition dec;
  dec.a = RingElement::zero(ctx);
  dec.a2 = RingElement::zero(ctx);
  dec.b = RingElement::zero(ctx);
  dec.g = RingElement::zero(ctx);

  for (std::size_t i = 0; i < basis.idems.size(); ++i) {
    const RingElement &e = basis.idems[i];
    // Restrict C to the component block: the projections of the basis rows
    // span it, and its K-dimension over the component field is the F-rank
    // divided by the component degree.
    std::vector<std::vector<Fel>> proj;
    for (std::size_t r = 0; r < C.dim(); ++r) {
      const auto row = C.basis().mat.row(r);
      const RingElement c1 = RingElement::from_coeffs(
          ctx, std::vector<Fel>(row.begin(),
                                row.begin() + static_cast<std::ptrdiff_t>(n)));
      const RingElement c2 = RingElement::from_coeffs(
          ctx,
          std::vector<Fel>(row.begin() + static_cast<std::ptrdiff_t>(n),
                           row.end()));
      const RingElement u = ring_mul(e, c1);
      const RingElement v = ring_mul(e, c2);
      std::vector<Fel> w = u.coeffs();
      w.insert(w.end(), v.coeffs().begin(), v.coeffs().end());
      proj.push_back(std::move(w));
    }
    const Rref rr = proj.empty()
                        ? Rref{Matrix(spec, 0, 2 * n), {}}
                        : rref(Matrix::from_rows(spec, proj));
    const std::size_t rank = rr.mat.rows();
    internal_check(rank % basis.dims[i] == 0,
                   "component rank not a multiple of the component degree");
    const std::size_t kdim = rank / basis.dims[i];
    internal_check(kdim <= 2, "component block exceeds the plane");
    if (kdim == 0)
      continue;
    if (kdim == 2) {
      dec.a = dec.a + e;
      dec.a2 = dec.a2 + e;
      dec.full.push_back(i);
      continue;
    }
    // One-dimensional block: a line {(z u0, z v0)}.  Which sides vanish is
    // constant along the line, so the first reduced row decides.
    const auto row = rr.mat.row(0);
    const RingElement u0 = RingElement::from_coeffs(
        ctx, std::vector<Fel>(row.begin(),
                              row.begin() + static_cast<std::ptrdiff_t>(n)));
    const RingElement v0 = RingElement::from_coeffs(
        ctx, std::vector<Fel>(row.begin() + static_cast<std::ptrdiff_t>(n),
                              row.end()));
    if (v0.is_zero()) {
      dec.a = dec.a + e;
      dec.left.push_back(i);
    } else if (u0.is_zero()) {
      dec.a2 = dec.a2 + e;
      dec.right.push_back(i);
    } else {
      dec.b = dec.b + e;
      dec.g = dec.g + ring_mul(component_inverse(basis, i, u0), v0);
      dec.graph.push_back(i);
    }
  }

  internal_check(code_from_goursat(ctx, dec) == C,
                 "decomposition does not rebuild the code");
  return dec;
}

} // namespace qcc
