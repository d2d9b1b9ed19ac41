// End-to-end acceptance gates.  Each criterion prints one line; the binary
// exits nonzero if any gate fails.  All tolerances and thresholds are
// pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <set>

#include "helpers.hpp"
#include "qcc/json_io.hpp"
#include "qcc/transport.hpp"

using namespace qcc;
using namespace qcc::test;

namespace {

int failures = 0;

void report(int idx, bool ok, const char *what, double secs) {
  std::printf("criterion %2d  %-4s  %s  (%.2fs)\n", idx, ok ? "PASS" : "FAIL",
              what, secs);
  if (!ok) ++failures;
}

template <class Fn>
void gate(int idx, const char *what, Fn &&fn, double limit_secs = 0) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = fn();
  } catch (const std::exception &e) {
    std::printf("  unexpected exception: %s\n", e.what());
    ok = false;
  }
  double secs = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  if (limit_secs > 0 && secs > limit_secs) {
    std::printf("  over the %.0fs budget\n", limit_secs);
    ok = false;
  }
  report(idx, ok, what, secs);
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// 1. Over GF(4), n = 3, h = 1: the equation g g* = -1 characterizes the
//    self-dual members of the C_{1,g} family, across all 64 g.
bool criterion1() {
  auto ctx = RingContext::make(FieldSpec::make(2, 2), 3, 1);
  auto one = RingElement::one(ctx);
  auto minus_one = -one;
  bool ok = true;
  for (const auto &g : all_ring_elements(ctx)) {
    bool dual = is_galois_self_dual(code_from_pair(one, g), 1);
    bool eqn = ring_mul(g, star(g, 1)) == minus_one;
    ok = ok && (dual == eqn);
  }
  return ok;
}

// 2. The block-product count of {g : g g* = -1} matches a whole-ring scan:
//    27, 16 and 256 on the three reference contexts.
bool criterion2() {
  struct Case {
    std::uint32_t p, ell;
    std::size_t n;
    std::uint32_t h;
    std::uint64_t expect;
  };
  bool ok = true;
  for (auto c : {Case{2, 2, 3, 1, 27}, Case{3, 2, 2, 1, 16},
                 Case{3, 2, 4, 1, 256}}) {
    auto ctx = RingContext::make(FieldSpec::make(c.p, c.ell), c.n, 1);
    auto dset = build_d_set(idempotents(ctx), c.h);
    std::uint64_t product = 1;
    for (const auto &b : dset.component_sets) product *= b.count;
    auto brute = brute_d_set(ctx, c.h);
    ok = ok && dset.total_count == c.expect && product == c.expect &&
         brute.size() == c.expect;
  }
  return ok;
}

// 3. Wherever the least nontrivial factor degree reaches log_p(n), the
//    count is sandwiched: p^-2 p^(n ell / 2) <= |D| <= p^3 p^(n ell / 2).
bool criterion3() {
  struct Case {
    std::uint32_t p, ell;
    std::size_t n;
    std::uint32_t h;
  };
  bool ok = true;
  for (auto c : {Case{2, 2, 3, 1}, Case{3, 2, 2, 1}, Case{3, 2, 4, 1}}) {
    auto ctx = RingContext::make(FieldSpec::make(c.p, c.ell), c.n, 1);
    if (ipow(c.p, mu(ctx)) < c.n) continue; // hypothesis mu(n) >= log_p(n)
    auto dset = build_d_set(idempotents(ctx), c.h);
    std::uint64_t mid = ipow(c.p, c.n * c.ell / 2);
    ok = ok && dset.total_count * c.p * c.p >= mid &&
         dset.total_count <= ipow(c.p, 3) * mid;
  }
  return ok;
}

// 4. Exhaustive ground truth at length 4 over GF(5), lambda = 2: of all
//    806 two-dimensional subspaces, the shift-closed self-dual ones are
//    exactly the two scalar-pair codes.
bool criterion4() {
  auto f5 = FieldSpec::make(5, 1);
  auto ctx = RingContext::make(f5, 2, 2);
  auto subs = all_subspaces(f5, 4, 2);
  if (subs.size() != 806) return false;
  auto one = RingElement::one(ctx);
  std::vector<QuasiCode> expected = {code_from_pair(one, one.scaled(2)),
                                     code_from_pair(one, one.scaled(3))};
  std::vector<QuasiCode> survivors;
  for (const auto &rows : subs) {
    QuasiCode C;
    try {
      C = QuasiCode::from_words(ctx, CodeKind::TwoQuasi, rows);
    } catch (const Error &) {
      continue; // not closed under the double shift
    }
    if (is_galois_self_dual(C, 0)) survivors.push_back(C);
  }
  if (survivors.size() != 2) return false;
  bool ok = true;
  for (const auto &C : expected) {
    bool found = false;
    for (const auto &S : survivors) found = found || S == C;
    ok = ok && found;
    auto w = check_neq_regime(C, 0);
    ok = ok && w.has_value();
  }
  return ok;
}

// 5. The scalar-pair codes over GF(5), lambda = 2, have minimum weight
//    exactly 2 at every length 2..12, with fully exhaustive scans.
bool criterion5() {
  auto f5 = FieldSpec::make(5, 1);
  bool ok = true;
  for (std::size_t n = 2; n <= 12; ++n) {
    auto ctx = RingContext::make(f5, n, 2);
    auto one = RingElement::one(ctx);
    for (Fel alpha : {2u, 3u}) {
      auto C = code_from_pair(one, one.scaled(alpha));
      ok = ok && check_neq_regime(C, 0).has_value();
      auto m = min_weight(C, ipow(5, n));
      ok = ok && m.exact && m.min_weight == 2;
    }
  }
  return ok;
}

// 6. Over GF(2), n = 3: the structured eq-regime criterion agrees with
//    brute-force duality on every one of the 35 submodules of R^2.
bool criterion6() {
  auto ctx = RingContext::make(FieldSpec::make(2, 1), 3, 1);
  auto subs = all_submodules(ctx);
  if (subs.size() != 35) return false;
  bool ok = true;
  for (const auto &C : subs) {
    bool brute = is_galois_self_dual(C, 0);
    ok = ok && (check_eq_regime(C, 0).has_value() == brute);
  }
  return ok;
}

// 7. The coefficient twist into the omega ring over GF(4), n = 2, h = 1:
//    weight preserving on words and pairs, inner-product preserving on all
//    16 x 16 word pairs, and verdict preserving on all 16 C_{1,g}.
bool criterion7() {
  auto f4 = FieldSpec::make(2, 2);
  auto src = RingContext::make(f4, 2, 1);
  auto dst = RingContext::make(f4, 2, 2);
  auto map = make_transport(src, dst, 1);
  bool ok = true;

  auto words = all_words(f4, 2);
  for (const auto &u : words) {
    auto a = RingElement::from_coeffs(src, u);
    ok = ok && apply(map, a).weight() == a.weight();
    for (const auto &v : words) {
      auto b = RingElement::from_coeffs(src, v);
      ok = ok && galois_inner(f4, u, v, 1) ==
                     galois_inner(f4, apply(map, a).coeffs(),
                                  apply(map, b).coeffs(), 1);
    }
  }
  for (const auto &w : all_words(f4, 4)) {
    auto tw = apply_pair(map, w);
    ok = ok && word_weight(tw) == word_weight(w);
  }
  auto one = RingElement::one(src);
  for (const auto &g : all_ring_elements(src)) {
    auto C = code_from_pair(one, g);
    ok = ok && is_galois_self_dual(C, 1) ==
                   is_galois_self_dual(transport_code(map, C), 1);
  }
  return ok;
}

// 8. Balanced-code census bound: for every ideal A and delta in
//    {0.1, 0.25, 0.4}, |(A x A) restricted to weight <= delta len| is at
//    most q^(2 dim A h_q(delta)).
bool criterion8() {
  bool ok = true;
  for (auto ctx : {RingContext::make(FieldSpec::make(2, 1), 7, 1),
                   RingContext::make(FieldSpec::make(2, 2), 3, 1)}) {
    auto basis = idempotents(ctx);
    const std::size_t k = basis.idems.size(), n = ctx->n();
    const double q = static_cast<double>(ctx->spec()->q());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      RingElement e = RingElement::zero(ctx);
      for (unsigned i = 0; i < k; ++i)
        if (mask & (1u << i)) e = e + basis.idems[i];
      auto A = code_from_pair(e);
      std::vector<std::vector<Fel>> rows;
      for (const auto &r : A.gens()) {
        std::vector<Fel> w1(2 * n, 0), w2(2 * n, 0);
        for (std::size_t j = 0; j < n; ++j) { w1[j] = r[j]; w2[n + j] = r[j]; }
        rows.push_back(w1);
        rows.push_back(w2);
      }
      auto AxA = QuasiCode::from_words(ctx, CodeKind::TwoQuasi, rows);
      for (double delta : {0.1, 0.25, 0.4}) {
        auto census = weight_census(AxA, delta);
        double bound =
            std::pow(q, 2.0 * static_cast<double>(A.dim()) * entropy(
                ctx->spec()->q(), delta));
        ok = ok && static_cast<double>(census) <= bound + 1e-6;
      }
    }
  }
  return ok;
}

// 9. Conjugation matches the Galois transpose through circulants on 1000
//    seeded random elements per context, and is involutive where the
//    twist has order two.
bool criterion9() {
  auto f9 = FieldSpec::make(3, 2);
  Fel i4 = 0;
  for (Fel a = 1; a < 9; ++a)
    if (f9->order(a) == 4) { i4 = a; break; }
  struct Case {
    RingContextPtr ctx;
    std::uint32_t h;
    bool involutive;
  };
  std::vector<Case> cases = {
      {RingContext::make(FieldSpec::make(2, 2), 3, 1), 1, true},
      {RingContext::make(FieldSpec::make(2, 2), 2, 2), 1, false},
      {RingContext::make(FieldSpec::make(5, 1), 3, 4), 0, false},
      {RingContext::make(f9, 2, i4), 1, false},
      {RingContext::make(FieldSpec::make(2, 1), 5, 1), 0, true},
  };
  bool ok = true;
  for (const auto &c : cases) {
    Rng rng(0x9e3779b97f4a7c15ull ^ c.ctx->lambda());
    for (int it = 0; it < 1000; ++it) {
      auto a = random_element(c.ctx, rng);
      ok = ok && circulant(star(a, c.h)) ==
                     galois_transpose(circulant(a), c.h);
      if (c.involutive) ok = ok && star(star(a, c.h), c.h) == a;
    }
  }
  return ok;
}

// 10. Randomized search over GF(4), h = 1, odd lengths 3..13, 200 trials,
//     seed 1, budget 2^20: every reported code re-verifies self-dual; the
//     best relative distance at n = 13 beats the n = 3 trivial floor
//     2/(2n) = 1/3; and the fraction of trials at relative distance <= 0.1
//     is non-increasing in n on this pinned run.
bool criterion10() {
  auto f4 = FieldSpec::make(2, 2);
  auto rep = search(f4, 1, {3, 5, 7, 9, 11, 13}, 0.1, 200, 1, 1ull << 20, 1);
  std::fputs(rep.to_csv().c_str(), stdout);
  if (rep.rows.size() != 6) return false;
  bool ok = true;
  for (const auto &row : rep.rows)
    ok = ok && is_galois_self_dual(row.best_code, 1);
  ok = ok && rep.rows.back().best_rel_distance > 1.0 / 3.0;
  for (std::size_t i = 1; i < rep.rows.size(); ++i)
    if (rep.rows[i].frac_below_delta > rep.rows[i - 1].frac_below_delta) {
      std::printf("  fraction below delta rises %.6f -> %.6f at n = %zu\n",
                  rep.rows[i - 1].frac_below_delta,
                  rep.rows[i].frac_below_delta, rep.rows[i].n);
      ok = false;
    }
  return ok;
}

} // namespace

int main() {
  gate(1, "g g* = -1 characterizes self-duality (64 codes)", criterion1, 1.0);
  gate(2, "solution-set counts 27 / 16 / 256 vs whole-ring scans", criterion2,
       10.0);
  gate(3, "count sandwich p^-2 p^(n ell/2) <= |D| <= p^3 p^(n ell/2)",
       criterion3);
  gate(4, "806-subspace sweep finds exactly the two scalar-pair codes",
       criterion4, 10.0);
  gate(5, "scalar-pair codes have minimum weight 2 at n = 2..12", criterion5);
  gate(6, "structured criterion matches brute duality on all 35 submodules",
       criterion6);
  gate(7, "coefficient twist preserves weight, inner products, verdicts",
       criterion7);
  gate(8, "balanced census bound q^(2 dim h_q(delta)) for every ideal",
       criterion8);
  gate(9, "conjugation = Galois transpose on 1000 elements per context",
       criterion9);
  gate(10, "search at n = 3..13: re-verified, floor beaten, frac monotone",
       criterion10, 300.0);
  if (failures) {
    std::printf("%d of 10 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 10 criteria passed\n");
  return 0;
}
