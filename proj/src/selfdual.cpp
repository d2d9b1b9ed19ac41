#include "qcc/selfdual.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>
#include <thread>

#include "qcc/errors.hpp"

namespace qcc {

namespace {

std::uint64_t pow_sat(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) {
    if (b != 0 && r > std::numeric_limits<std::uint64_t>::max() / b)
      return std::numeric_limits<std::uint64_t>::max();
    r *= b;
  }
  return r;
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::vector<std::uint64_t> factor_u64(std::uint64_t m) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d)
      continue;
    primes.push_back(d);
    while (m % d == 0)
      m /= d;
  }
  if (m > 1)
    primes.push_back(m);
  return primes;
}

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

/// e-range of the solutions of z^s = gen^T for z = gen^e in a cyclic group
/// of order M: the linear congruence s e == T (mod M).
struct ProgSolution {
  std::uint64_t count = 0, e0 = 0, stride = 0;
};

ProgSolution solve_in_cyclic(std::uint64_t s, std::uint64_t T,
                             std::uint64_t M) {
  const std::uint64_t su = s % M;
  const std::uint64_t g = std::gcd(su, M); // gcd(0, M) = M
  if (T % g)
    return {};
  const std::uint64_t Md = M / g;
  std::uint64_t e0 = mod_inverse((su / g) % Md, Md);
  e0 = (e0 * ((T / g) % Md)) % Md;
  return {g, e0, Md};
}

/// First element of R e_i (coefficient odometer over the basis e_i x^j)
/// generating the component's unit group.  The component field must fit
/// the exhaustive-scan cap.
RingElement component_generator(const IdempotentBasis &basis, std::size_t i,
                                std::uint64_t comp_size) {
  const auto &ctx = basis.ctx;
  const std::uint64_t q = ctx->spec()->q();
  const std::size_t d = basis.dims[i];
  const std::uint64_t M = comp_size - 1;
  const RingElement &e = basis.idems[i];
  if (M == 0 || M == 1)
    return e;

  std::vector<RingElement> cb; // e, e x, ..., e x^(d-1)
  cb.reserve(d);
  cb.push_back(e);
  for (std::size_t j = 1; j < d; ++j)
    cb.push_back(shift(cb.back()));

  const auto primes = factor_u64(M);
  for (std::uint64_t cnt = 1; cnt < comp_size; ++cnt) {
    RingElement z = RingElement::zero(ctx);
    std::uint64_t w = cnt;
    for (std::size_t j = 0; j < d; ++j) {
      const Fel digit = static_cast<Fel>(w % q);
      w /= q;
      if (digit)
        z = z + cb[j].scaled(digit);
    }
    if (z.is_zero())
      continue;
    bool generates = true;
    for (const std::uint64_t r : primes)
      if (ring_pow(z, M / r) == e) {
        generates = false;
        break;
      }
    if (!generates)
      continue;
    internal_check(ring_pow(z, M) == e, "generator candidate is not a unit");
    return z;
  }
  internal_check(false, "component unit group without generator");
  return e;
}

std::uint64_t pow_u64(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

/// gen^e inside one component: the zeroth power is the component identity
/// (the idempotent), not the identity of the whole ring.
RingElement comp_pow(const RingElement &gen, const RingElement &idem,
                     std::uint64_t e) {
  return e == 0 ? idem : ring_pow(gen, e);
}

} // namespace

std::optional<SelfDualWitness> check_neq_regime(const QuasiCode &C,
                                                std::uint32_t h) {
  const auto &ctx = C.ctx();
  internal_check(ctx != nullptr, "code without context");
  if (ctx->lambda_hypothesis(h))
    throw Error(ErrorKind::WrongRegime,
                "lambda^(1 + p^h) = 1 here; use check_eq_regime");
  if (C.kind() != CodeKind::TwoQuasi)
    throw Error(ErrorKind::LengthMismatch,
                "the pair criterion applies to codes in R^2");
  const std::size_t n = ctx->n();
  if (C.dim() != n)
    return std::nullopt;

  const std::uint64_t s = 1 + pow_u64(ctx->spec()->p(), h);
  const RingElement e1 = RingElement::one(ctx);
  for (const FieldElement &alpha :
       roots_of_unary_power_plus_one(s, ctx->spec())) {
    if (C == code_from_pair(e1, e1.scaled(alpha.index())))
      return SelfDualWitness{Regime::LambdaNeq, alpha, std::nullopt};
  }
  return std::nullopt;
}

std::optional<SelfDualWitness> check_eq_regime(const QuasiCode &C,
                                               std::uint32_t h) {
  const auto &ctx = C.ctx();
  internal_check(ctx != nullptr, "code without context");
  if (!ctx->lambda_hypothesis(h))
    throw Error(ErrorKind::WrongRegime,
                "lambda^(1 + p^h) != 1 here; use check_neq_regime");
  if (!ctx->semisimple())
    throw Error(ErrorKind::NotSemisimple,
                "the structured criterion needs gcd(n, q) = 1");
  if (C.kind() != CodeKind::TwoQuasi)
    throw Error(ErrorKind::LengthMismatch,
                "the structured criterion applies to codes in R^2");
  if (C.dim() != ctx->n())
    return std::nullopt;

  GoursatDecomposition dec = decompose(C);
  const RingElement sa = star(dec.a, h);
  const RingElement sa2 = star(dec.a2, h);
  const RingElement sb = star(dec.b, h);
  const RingElement sg = star(dec.g, h);
  const RingElement one = RingElement::one(ctx);
  const bool ok = ring_mul(dec.a, sa).is_zero() &&
                  ring_mul(dec.a2, sa2).is_zero() &&
                  ring_mul(dec.a, sb).is_zero() &&
                  ring_mul(sa, dec.b).is_zero() &&
                  ring_mul(dec.a2, sb).is_zero() &&
                  ring_mul(sa2, dec.b).is_zero() &&
                  ring_mul(ring_mul(dec.b, sb),
                           one + ring_mul(dec.g, sg))
                      .is_zero();
  if (!ok)
    return std::nullopt;
  return SelfDualWitness{Regime::LambdaEq, std::nullopt, std::move(dec)};
}

DSetDescriptor build_d_set(const IdempotentBasis &basis, std::uint32_t h) {
  const auto &ctx = basis.ctx;
  const auto &F = *ctx->spec();
  if (ctx->lambda() != 1)
    throw Error(ErrorKind::WrongRegime, "the solution set needs lambda = 1");

  DSetDescriptor dset;
  dset.basis = basis;
  dset.h = h;
  const StarPairing pairing = star_pairing(basis, h);

  for (const std::size_t i : pairing.fixed) {
    const std::size_t d = basis.dims[i];
    const std::uint64_t Q = pow_sat(F.q(), d);
    if (Q > kMaxScanField)
      throw Error(ErrorKind::FieldTooLarge,
                  "component field too large to enumerate");
    const std::uint64_t M = Q - 1;
    const RingElement &e = basis.idems[i];

    DComponent c;
    c.index = c.partner = i;
    c.paired = false;
    c.gen = component_generator(basis, i, Q);

    // Conjugation restricted to a fixed component is a power of the
    // p-Frobenius of that field; find it, then solve z^(1 + p^k) = -e as a
    // congruence on discrete logs.
    const RingElement sg = star(c.gen, h);
    RingElement pw = c.gen;
    std::uint64_t pk = 1;
    bool found = false;
    const std::size_t degree = d * F.ell();
    for (std::size_t k = 0; k < degree; ++k) {
      if (pw == sg) {
        found = true;
        break;
      }
      pw = ring_pow(pw, F.p());
      pk *= F.p();
    }
    internal_check(found, "conjugation is not a Frobenius power");

    std::uint64_t T = 0;
    if (F.p() != 2) {
      T = M / 2; // -e = gen^(M/2), the unique order-2 element
      internal_check(ring_pow(c.gen, T) == -e, "odd component without -1");
    }
    const ProgSolution sol = solve_in_cyclic(1 + pk, T, M);
    c.count = sol.count;
    c.e0 = sol.e0;
    c.stride = sol.stride;
    if (c.count > 0) {
      const RingElement z0 = comp_pow(c.gen, e, c.e0);
      internal_check(ring_mul(z0, star(z0, h)) == -e,
                     "fixed-component solution fails its equation");
    }
    dset.component_sets.push_back(std::move(c));
  }

  for (const auto &[i, j] : pairing.pairs) {
    internal_check(basis.dims[i] == basis.dims[j],
                   "swapped components of unequal degree");
    const std::uint64_t Q = pow_sat(F.q(), basis.dims[i]);
    if (Q > kMaxScanField)
      throw Error(ErrorKind::FieldTooLarge,
                  "component field too large to enumerate");
    DComponent c;
    c.index = i;
    c.partner = j;
    c.paired = true;
    c.count = Q - 1; // one solution per unit z' of the left component
    c.gen = component_generator(basis, i, Q);
    const RingElement z0 = basis.idems[i] - basis.idems[j];
    internal_check(ring_mul(z0, star(z0, h)) ==
                       -(basis.idems[i] + basis.idems[j]),
                   "paired-component solution fails its equation");
    dset.component_sets.push_back(std::move(c));
  }

  std::sort(dset.component_sets.begin(), dset.component_sets.end(),
            [](const DComponent &x, const DComponent &y) {
              return x.index < y.index;
            });
  dset.total_count = 1;
  for (const DComponent &c : dset.component_sets)
    dset.total_count = mul_sat(dset.total_count, c.count);
  return dset;
}

RingElement d_element(const DSetDescriptor &dset, std::size_t block,
                      std::uint64_t k) {
  internal_check(block < dset.component_sets.size(), "block out of range");
  const DComponent &c = dset.component_sets[block];
  internal_check(k < c.count, "element index out of range");
  const RingElement &idem = dset.basis.idems[c.index];
  if (!c.paired)
    return comp_pow(c.gen, idem, c.e0 + k * c.stride);
  const RingElement zp = comp_pow(c.gen, idem, k);
  return zp - component_inverse(dset.basis, c.partner, star(zp, dset.h));
}

RingElement sample_d(const DSetDescriptor &dset, Rng &rng) {
  if (dset.total_count == 0)
    throw Error(ErrorKind::EmptySet, "the solution set is empty");
  RingElement g = RingElement::zero(dset.basis.ctx);
  for (std::size_t b = 0; b < dset.component_sets.size(); ++b) {
    const std::uint64_t cnt = dset.component_sets[b].count;
    const std::uint64_t k =
        cnt == 1 ? 0 : rng.below(static_cast<std::uint32_t>(cnt));
    g = g + d_element(dset, b, k);
  }
  internal_check(ring_mul(g, star(g, dset.h)) ==
                     -RingElement::one(dset.basis.ctx),
                 "sampled element fails g g* = -1");
  return g;
}

RingElement sample_d(const DSetDescriptor &dset, std::uint64_t seed) {
  Rng rng(seed);
  return sample_d(dset, rng);
}

std::vector<RingElement> enumerate_d(const DSetDescriptor &dset,
                                     std::uint64_t budget) {
  if (dset.total_count == 0)
    return {};
  if (dset.total_count > budget)
    throw Error(ErrorKind::TooLargeForExhaustive,
                "solution set exceeds the enumeration budget");

  std::vector<std::vector<RingElement>> lists;
  lists.reserve(dset.component_sets.size());
  for (std::size_t b = 0; b < dset.component_sets.size(); ++b) {
    std::vector<RingElement> lst;
    lst.reserve(dset.component_sets[b].count);
    for (std::uint64_t k = 0; k < dset.component_sets[b].count; ++k)
      lst.push_back(d_element(dset, b, k));
    lists.push_back(std::move(lst));
  }

  std::vector<RingElement> out;
  out.reserve(dset.total_count);
  std::vector<std::size_t> digit(lists.size(), 0);
  for (;;) {
    RingElement g = RingElement::zero(dset.basis.ctx);
    for (std::size_t b = 0; b < lists.size(); ++b)
      g = g + lists[b][digit[b]];
    out.push_back(std::move(g));
    std::size_t b = 0;
    while (b < lists.size() && ++digit[b] == lists[b].size()) {
      digit[b] = 0;
      ++b;
    }
    if (b == lists.size())
      break;
  }
  internal_check(out.size() == dset.total_count,
                 "odometer missed part of the solution set");
  return out;
}

std::uint64_t count_d_ab(const RingElement &a, const RingElement &b,
                         const DSetDescriptor &dset, std::uint64_t budget) {
  const auto &ctx = dset.basis.ctx;
  if (!a.ctx() || !a.ctx()->same(*ctx) || !b.ctx() || !b.ctx()->same(*ctx))
    throw Error(ErrorKind::ContextMismatch,
                "word pair lives over a different ring");
  // (a, b) lies in C_{1,g} = {(u, u g)} exactly when b = a g.
  std::uint64_t count = 0;
  for (const RingElement &g : enumerate_d(dset, budget))
    if (ring_mul(a, g) == b)
      ++count;
  return count;
}

std::string SearchReport::to_csv() const {
  std::string out =
      "n,trials,best_min_weight,best_rel_distance,frac_below_delta,exact\n";
  char buf[160];
  for (const SearchRow &r : rows) {
    std::snprintf(buf, sizeof buf, "%zu,%llu,%zu,%.6f,%.6f,%s\n", r.n,
                  static_cast<unsigned long long>(r.trials),
                  r.best_min_weight, r.best_rel_distance, r.frac_below_delta,
                  r.exact ? "true" : "false");
    out += buf;
  }
  return out;
}

namespace {

struct TrialAccum {
  std::uint64_t below = 0;
  bool have = false;
  std::size_t best_w = 0;
  std::uint64_t best_trial = 0;
  RingElement best_g;
};

} // namespace

SearchReport search(const FieldSpecPtr &spec, std::uint32_t h,
                    const std::vector<std::size_t> &n_list, double delta,
                    std::uint64_t trials, std::uint64_t seed,
                    std::uint64_t budget, unsigned threads) {
  SearchReport rep;
  rep.h = h;
  rep.delta = delta;
  rep.seed = seed;
  if (trials == 0)
    return rep;

  for (const std::size_t n : n_list) {
    if (n % 2 == 0)
      throw Error(ErrorKind::WrongRegime, "search runs over odd n only");
    const RingContextPtr ctx = RingContext::make(spec, n, 1);
    const DSetDescriptor dset = build_d_set(idempotents(ctx), h);
    if (dset.total_count == 0)
      throw Error(ErrorKind::EmptySet, "no self-dual pair codes at this n");

    const std::size_t len = 2 * n;
    const bool exact = pow_sat(spec->q(), n) <= budget;

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, TrialAccum &acc) {
      for (std::uint64_t trial = lo; trial < hi; ++trial) {
        const Rng tr = Rng(seed).split(n).split(trial);
        Rng gs = tr.split(0);
        const RingElement g = sample_d(dset, gs);

        Matrix rows(spec, n, len);
        RingElement cur = g;
        for (std::size_t i = 0; i < n; ++i) {
          rows.set(i, i, 1);
          for (std::size_t j = 0; j < n; ++j)
            rows.set(i, n + j, cur.coeff(j));
          cur = shift(cur);
        }
        const auto er =
            detail::min_weight_engine(rows, budget, tr.split(1), 1, true);
        internal_check(er.exact == exact,
                       "budget regime must be uniform within one n");

        // Same threshold convention as the census: epsilon absorbs the
        // rounding of delta * len.
        if (static_cast<double>(er.min_weight) <=
            delta * static_cast<double>(len) + 1e-9)
          ++acc.below;
        if (!acc.have || er.min_weight > acc.best_w) {
          acc.have = true;
          acc.best_w = er.min_weight;
          acc.best_trial = trial;
          acc.best_g = g;
        }
      }
    };

    unsigned T = std::max(1u, threads);
    if (static_cast<std::uint64_t>(T) > trials)
      T = static_cast<unsigned>(trials);
    std::vector<TrialAccum> accs(T);
    if (T == 1) {
      run_range(0, trials, accs[0]);
    } else {
      const std::uint64_t chunk = (trials + T - 1) / T;
      std::vector<std::thread> pool;
      pool.reserve(T);
      for (unsigned t = 0; t < T; ++t) {
        const std::uint64_t lo = t * chunk;
        const std::uint64_t hi = std::min(trials, lo + chunk);
        pool.emplace_back(
            [&run_range, lo, hi, &accs, t] { run_range(lo, hi, accs[t]); });
      }
      for (auto &th : pool)
        th.join();
    }

    // Merge favors the larger weight, ties to the earlier trial, so the
    // report is independent of the partition.
    TrialAccum best;
    std::uint64_t below = 0;
    for (const TrialAccum &acc : accs) {
      below += acc.below;
      if (!acc.have)
        continue;
      if (!best.have || acc.best_w > best.best_w ||
          (acc.best_w == best.best_w && acc.best_trial < best.best_trial)) {
        best = acc;
      }
    }
    internal_check(best.have, "search produced no trials");

    SearchRow row;
    row.n = n;
    row.trials = trials;
    row.best_min_weight = best.best_w;
    row.best_rel_distance =
        static_cast<double>(best.best_w) / static_cast<double>(len);
    row.frac_below_delta =
        static_cast<double>(below) / static_cast<double>(trials);
    row.exact = exact;
    row.best_g = best.best_g;
    row.best_code = code_from_pair(RingElement::one(ctx), best.best_g);
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

} // namespace qcc
