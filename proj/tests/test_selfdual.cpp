#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "qcc/selfdual.hpp"

using namespace qcc;
using namespace qcc::test;

namespace {

RingContextPtr cyclic(std::uint32_t p, std::uint32_t ell, std::size_t n) {
  return RingContext::make(FieldSpec::make(p, ell), n, 1);
}

std::set<std::vector<Fel>> as_set(const std::vector<RingElement> &v) {
  std::set<std::vector<Fel>> s;
  for (const auto &g : v) s.insert(g.coeffs());
  return s;
}

std::vector<std::uint64_t> block_counts(const DSetDescriptor &d) {
  std::vector<std::uint64_t> c;
  for (const auto &b : d.component_sets) c.push_back(b.count);
  return c;
}

} // namespace

TEST_CASE("solution-set sizes across contexts") {
  using V = std::vector<std::uint64_t>;
  auto d = build_d_set(idempotents(cyclic(2, 2, 3)), 1);
  CHECK(d.total_count == 27);
  CHECK(block_counts(d) == V{3, 3, 3});

  d = build_d_set(idempotents(cyclic(2, 2, 5)), 1);
  CHECK(d.total_count == 45);
  CHECK(block_counts(d) == V{3, 15});
  CHECK_FALSE(d.component_sets[0].paired);
  CHECK(d.component_sets[1].paired);

  d = build_d_set(idempotents(cyclic(2, 2, 7)), 1);
  CHECK(d.total_count == 189);
  CHECK(block_counts(d) == V{3, 63});

  CHECK(build_d_set(idempotents(cyclic(2, 2, 9)), 1).total_count == 2187);
  CHECK(build_d_set(idempotents(cyclic(2, 2, 11)), 1).total_count == 3267);
  CHECK(build_d_set(idempotents(cyclic(2, 2, 13)), 1).total_count == 12285);

  d = build_d_set(idempotents(cyclic(3, 2, 2)), 1);
  CHECK(d.total_count == 16);
  CHECK(block_counts(d) == V{4, 4});
  CHECK(build_d_set(idempotents(cyclic(3, 2, 4)), 1).total_count == 256);

  d = build_d_set(idempotents(cyclic(2, 1, 3)), 0);
  CHECK(d.total_count == 3);
  CHECK(block_counts(d) == V{1, 3});

  d = build_d_set(idempotents(cyclic(3, 1, 2)), 0);
  CHECK(d.total_count == 0);
  CHECK(block_counts(d) == V{0, 0});

  d = build_d_set(idempotents(cyclic(5, 1, 2)), 0);
  CHECK(d.total_count == 4);
  CHECK(block_counts(d) == V{2, 2});
}

TEST_CASE("enumeration matches the whole-ring scan") {
  struct Case { RingContextPtr ctx; std::uint32_t h; };
  for (auto [ctx, h] : {Case{cyclic(2, 2, 3), 1}, Case{cyclic(2, 1, 3), 0},
                        Case{cyclic(5, 1, 2), 0}, Case{cyclic(3, 2, 2), 1},
                        Case{cyclic(2, 2, 5), 1}}) {
    auto dset = build_d_set(idempotents(ctx), h);
    auto listed = enumerate_d(dset);
    CHECK(listed.size() == dset.total_count);
    CHECK(as_set(listed) == as_set(brute_d_set(ctx, h)));
  }
}

TEST_CASE("every block element solves its component equation") {
  auto basis = idempotents(cyclic(2, 2, 5));
  auto dset = build_d_set(basis, 1);
  for (std::size_t b = 0; b < dset.component_sets.size(); ++b) {
    const auto &blk = dset.component_sets[b];
    RingElement esum = basis.idems[blk.index];
    if (blk.paired) esum = esum + basis.idems[blk.partner];
    for (std::uint64_t k = 0; k < blk.count; ++k) {
      auto z = d_element(dset, b, k);
      CHECK(ring_mul(z, star(z, 1)) == -esum);
    }
  }
}

TEST_CASE("components too large to scan are refused") {
  // X^29 - 1 over GF(2) has degree-28 components: 2^28 > 2^20
  CHECK(error_kind_of([] {
        build_d_set(idempotents(cyclic(2, 1, 29)), 0);
      }) == ErrorKind::FieldTooLarge);
}

TEST_CASE("the descriptor is restricted to the cyclic ring") {
  auto twisted = RingContext::make(FieldSpec::make(2, 2), 3, 2);
  CHECK(error_kind_of([&] {
        build_d_set(ring_idempotents(twisted), 1);
      }) == ErrorKind::WrongRegime);
}

TEST_CASE("sampling is deterministic and validated") {
  auto dset = build_d_set(idempotents(cyclic(2, 2, 3)), 1);
  auto g0 = sample_d(dset, 0);
  CHECK(g0.coeffs() == std::vector<Fel>{3, 3, 2});
  CHECK(sample_d(dset, 0) == g0);
  CHECK(sample_d(dset, 1) == sample_d(dset, 1));
  Rng rng(42);
  auto a = sample_d(dset, rng);
  auto b = sample_d(dset, rng); // stream advances
  CHECK(sample_d(dset, 42) == a);
  (void)b;

  auto empty = build_d_set(idempotents(cyclic(3, 1, 2)), 0);
  CHECK(error_kind_of([&] { sample_d(empty, 0); }) == ErrorKind::EmptySet);
}

TEST_CASE("enumeration respects its budget") {
  auto dset = build_d_set(idempotents(cyclic(2, 2, 7)), 1);
  CHECK(error_kind_of([&] { enumerate_d(dset, 100); }) ==
        ErrorKind::TooLargeForExhaustive);
}

TEST_CASE("block products sandwich between entropy-style bounds") {
  // For each subset of components, p^-2 p^(d ell / 2) <= product of block
  // sizes <= p^3 p^(d ell / 2) where d sums the subset's dimensions.
  auto basis = idempotents(cyclic(3, 2, 2));
  auto dset = build_d_set(basis, 1);
  REQUIRE(dset.component_sets.size() == 2);
  const double p = 3;
  for (unsigned mask = 0; mask < 4; ++mask) {
    double prod = 1, dsum = 0;
    for (unsigned i = 0; i < 2; ++i)
      if (mask & (1u << i)) {
        prod *= static_cast<double>(dset.component_sets[i].count);
        dsum += static_cast<double>(basis.dims[dset.component_sets[i].index]);
      }
    double mid = std::pow(p, dsum * 2 / 2);
    CHECK(prod >= mid / (p * p) - 1e-9);
    CHECK(prod <= mid * p * p * p + 1e-9);
  }
}

TEST_CASE("the eq-regime criterion matches brute-force duality") {
  auto ctx = cyclic(2, 2, 3);
  auto one = RingElement::one(ctx);
  auto dset = build_d_set(idempotents(ctx), 1);
  std::size_t found = 0;
  for (const auto &g : all_ring_elements(ctx)) {
    auto C = code_from_pair(one, g);
    bool brute = is_galois_self_dual(C, 1);
    auto w = check_eq_regime(C, 1);
    CHECK(w.has_value() == brute);
    bool in_d = ring_mul(g, star(g, 1)) == -one;
    CHECK(in_d == brute);
    found += brute;
    if (w) {
      REQUIRE(w->tuple.has_value());
      const auto &t = *w->tuple;
      CHECK(t.a.is_zero());
      CHECK(t.a2.is_zero());
      CHECK(t.b == one);
      CHECK(t.g == g);
      CHECK(w->regime == Regime::LambdaEq);
    }
  }
  CHECK(found == 27);
  CHECK(found == dset.total_count);
}

TEST_CASE("the eq-regime criterion rejects wrong shapes") {
  auto ctx = cyclic(2, 2, 3);
  auto one = RingElement::one(ctx);
  // dimension != n can never be self-dual
  std::vector<std::vector<Fel>> rows;
  for (std::size_t s = 0; s < 3; ++s) {
    auto u = RingElement::x_power(ctx, s);
    std::vector<Fel> w(6, 0);
    for (int i = 0; i < 3; ++i) { w[i] = u.coeff(i); w[3 + i] = u.coeff(i); }
    rows.push_back(w);
    std::vector<Fel> v(6, 0);
    for (int i = 0; i < 3; ++i) v[3 + i] = u.coeff(i);
    rows.push_back(v);
  }
  auto R2 = QuasiCode::from_words(ctx, CodeKind::TwoQuasi, rows);
  CHECK(R2.dim() == 6);
  CHECK_FALSE(check_eq_regime(R2, 1).has_value());

  auto ideal = code_from_pair(one);
  CHECK(error_kind_of([&] { check_eq_regime(ideal, 1); }) ==
        ErrorKind::LengthMismatch);

  auto nonss = RingContext::make(FieldSpec::make(2, 1), 4, 1);
  auto C4 = code_from_pair(RingElement::one(nonss), RingElement::one(nonss));
  CHECK(error_kind_of([&] { check_eq_regime(C4, 0); }) ==
        ErrorKind::NotSemisimple);

  auto f5ctx = RingContext::make(FieldSpec::make(5, 1), 2, 2);
  auto C5 = code_from_pair(RingElement::one(f5ctx),
                           RingElement::one(f5ctx).scaled(2));
  CHECK(error_kind_of([&] { check_eq_regime(C5, 0); }) ==
        ErrorKind::WrongRegime);
}

TEST_CASE("the neq-regime criterion identifies the scalar family") {
  auto f5ctx = RingContext::make(FieldSpec::make(5, 1), 2, 2);
  auto one = RingElement::one(f5ctx);
  auto w2 = check_neq_regime(code_from_pair(one, one.scaled(2)), 0);
  REQUIRE(w2.has_value());
  CHECK(w2->regime == Regime::LambdaNeq);
  REQUIRE(w2->alpha.has_value());
  CHECK(w2->alpha->index() == 2);
  auto w3 = check_neq_regime(code_from_pair(one, one.scaled(3)), 0);
  REQUIRE(w3.has_value());
  CHECK(w3->alpha->index() == 3);
  CHECK_FALSE(check_neq_regime(code_from_pair(one, one), 0).has_value());

  auto twisted = RingContext::make(FieldSpec::make(2, 2), 2, 2);
  auto wo = check_neq_regime(
      code_from_pair(RingElement::one(twisted), RingElement::one(twisted)), 0);
  REQUIRE(wo.has_value());
  CHECK(wo->alpha->index() == 1);

  CHECK(error_kind_of([&] {
        check_neq_regime(code_from_pair(RingElement::one(cyclic(2, 1, 3)),
                                        RingElement::one(cyclic(2, 1, 3))),
                         0);
      }) == ErrorKind::WrongRegime);
  CHECK(error_kind_of([&] { check_neq_regime(code_from_pair(one), 0); }) ==
        ErrorKind::LengthMismatch);
}

TEST_CASE("counting solutions through a fixed word") {
  auto ctx = cyclic(2, 2, 3);
  auto dset = build_d_set(idempotents(ctx), 1);
  auto zero = RingElement::zero(ctx);
  auto one = RingElement::one(ctx);
  CHECK(count_d_ab(zero, zero, dset) == 27);
  auto g = sample_d(dset, 5);
  CHECK(count_d_ab(one, g, dset) == 1);
  CHECK(count_d_ab(one, zero, dset) == 0);
  CHECK(error_kind_of([&] { count_d_ab(one, g, dset, 10); }) ==
        ErrorKind::TooLargeForExhaustive);
}

TEST_CASE("low-weight solutions are reachable through their words") {
  // every g whose code has a word of weight <= 2 admits a pair (a, b) of
  // combined weight <= 2 with a g = b
  auto ctx = cyclic(2, 2, 3);
  auto dset = build_d_set(idempotents(ctx), 1);
  auto one = RingElement::one(ctx);
  for (const auto &g : enumerate_d(dset)) {
    auto C = code_from_pair(one, g);
    if (min_weight(C).min_weight > 2) continue;
    bool witnessed = false;
    for (const auto &w : span_words(C)) {
      std::size_t wt = word_weight(w);
      if (wt == 0 || wt > 2) continue;
      auto a = RingElement::from_coeffs(ctx, {w[0], w[1], w[2]});
      auto b = RingElement::from_coeffs(ctx, {w[3], w[4], w[5]});
      if (count_d_ab(a, b, dset) >= 1) { witnessed = true; break; }
    }
    CHECK(witnessed);
  }
}

TEST_CASE("per-word solution counts obey the dimension bound") {
  // |D through (a, b)| <= p^5 p^((n - dim Ra) ell / 2) whenever the least
  // nontrivial factor degree reaches log_p(n)
  auto ctx = cyclic(3, 2, 2);
  REQUIRE(std::pow(3.0, static_cast<double>(mu(ctx))) >= 2.0);
  auto dset = build_d_set(idempotents(ctx), 1);
  for (const auto &a : all_ring_elements(ctx)) {
    double bound =
        std::pow(3.0, 5.0) *
        std::pow(3.0, (2.0 - static_cast<double>(code_from_pair(a).dim())));
    for (const auto &b : all_ring_elements(ctx))
      CHECK(static_cast<double>(count_d_ab(a, b, dset)) <= bound + 1e-9);
  }
}

TEST_CASE("randomized search report is pinned") {
  auto f4 = FieldSpec::make(2, 2);
  auto rep = search(f4, 1, {3, 5}, 0.1, 20, 1);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.to_csv() ==
        "n,trials,best_min_weight,best_rel_distance,frac_below_delta,exact\n"
        "3,20,4,0.666667,0.000000,true\n"
        "5,20,4,0.400000,0.000000,true\n");
  for (const auto &row : rep.rows) {
    CHECK(row.exact);
    CHECK(is_galois_self_dual(row.best_code, 1));
    CHECK(membership(row.best_code, [&] {
      std::vector<Fel> w(2 * row.n, 0);
      w[0] = 1;
      for (std::size_t i = 0; i < row.n; ++i)
        w[row.n + i] = row.best_g.coeff(i);
      return w;
    }()));
  }
}

TEST_CASE("search is independent of threading and trial count zero") {
  auto f4 = FieldSpec::make(2, 2);
  auto serial = search(f4, 1, {3, 5}, 0.1, 20, 1, kDefaultBudget, 1);
  auto fanned = search(f4, 1, {3, 5}, 0.1, 20, 1, kDefaultBudget, 4);
  CHECK(serial.to_csv() == fanned.to_csv());

  auto none = search(f4, 1, {3, 5}, 0.1, 0, 1);
  CHECK(none.rows.empty());
  CHECK(none.to_csv() ==
        "n,trials,best_min_weight,best_rel_distance,frac_below_delta,exact\n");
}

TEST_CASE("search validates its inputs") {
  auto f4 = FieldSpec::make(2, 2);
  CHECK(error_kind_of([&] { search(f4, 1, {4}, 0.1, 5, 1); }) ==
        ErrorKind::WrongRegime);
  // X^5 - 1 over GF(3) leaves no solution at the X - 1 component
  CHECK(error_kind_of([&] {
        search(FieldSpec::make(3, 1), 0, {5}, 0.1, 5, 1);
      }) == ErrorKind::EmptySet);
}
