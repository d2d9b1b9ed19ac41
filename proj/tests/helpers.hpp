#pragma once

// Shared brute-force oracles for the test suite.  Everything here is written
// for clarity over speed and is only ever pointed at small parameter sets;
// the library proper must agree with these scans, not the other way round.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qcc/rng.hpp"
#include "qcc/selfdual.hpp"

namespace qcc::test {

// Runs fn and reports which validation error it raised, if any.
template <class Fn>
inline std::optional<ErrorKind> error_kind_of(Fn &&fn) {
  try {
    std::forward<Fn>(fn)();
  } catch (const Error &e) {
    return e.kind();
  }
  return std::nullopt;
}

// Every word in F^len, odometer order (index 0 varies fastest).
inline std::vector<std::vector<Fel>> all_words(const FieldSpecPtr &spec,
                                               std::size_t len) {
  const std::uint64_t q = spec->q();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) total *= q;
  std::vector<std::vector<Fel>> out;
  out.reserve(total);
  std::vector<Fel> w(len, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    out.push_back(w);
    for (std::size_t i = 0; i < len; ++i) {
      if (++w[i] == q) w[i] = 0; else break;
    }
  }
  return out;
}

// Every element of the quotient ring, same odometer order.
inline std::vector<RingElement> all_ring_elements(const RingContextPtr &ctx) {
  std::vector<RingElement> out;
  for (const auto &w : all_words(ctx->spec(), ctx->n()))
    out.push_back(RingElement::from_coeffs(ctx, w));
  return out;
}

inline bool next_combination(std::vector<std::size_t> &c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] + 1 <= n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Every dim-dimensional subspace of F^len, as its unique RREF basis.
// Pivot columns range over all combinations; the cells right of a pivot and
// outside the other pivot columns are free.
inline std::vector<std::vector<std::vector<Fel>>> all_subspaces(
    const FieldSpecPtr &spec, std::size_t len, std::size_t dim) {
  const std::uint64_t q = spec->q();
  std::vector<std::vector<std::vector<Fel>>> out;
  std::vector<std::size_t> piv(dim);
  for (std::size_t i = 0; i < dim; ++i) piv[i] = i;
  do {
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = piv[i] + 1; j < len; ++j)
        if (std::find(piv.begin(), piv.end(), j) == piv.end())
          free_cells.emplace_back(i, j);
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free_cells.size(); ++i) total *= q;
    for (std::uint64_t c = 0; c < total; ++c) {
      std::vector<std::vector<Fel>> rows(dim, std::vector<Fel>(len, 0));
      for (std::size_t i = 0; i < dim; ++i) rows[i][piv[i]] = 1;
      std::uint64_t w = c;
      for (const auto &[i, j] : free_cells) {
        rows[i][j] = static_cast<Fel>(w % q);
        w /= q;
      }
      out.push_back(std::move(rows));
    }
  } while (next_combination(piv, len));
  return out;
}

// All codewords of a small code via span enumeration.
inline std::vector<std::vector<Fel>> span_words(const QuasiCode &C) {
  const FieldSpecPtr &F = C.ctx()->spec();
  const std::uint64_t q = F->q();
  const std::size_t k = C.dim(), len = C.length();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= q;
  std::vector<std::vector<Fel>> out;
  out.reserve(total);
  std::vector<Fel> coef(k, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    std::vector<Fel> w(len, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (coef[i] == 0) continue;
      for (std::size_t j = 0; j < len; ++j)
        w[j] = F->add(w[j], F->mul(coef[i], C.basis().mat.at(i, j)));
    }
    out.push_back(std::move(w));
    for (std::size_t i = 0; i < k; ++i) {
      if (++coef[i] == q) coef[i] = 0; else break;
    }
  }
  return out;
}

inline std::size_t word_weight(const std::vector<Fel> &w) {
  std::size_t c = 0;
  for (Fel v : w) c += (v != 0);
  return c;
}

// Minimum nonzero weight by full span enumeration.  0 for the zero code.
inline std::size_t brute_min_weight(const QuasiCode &C) {
  std::size_t best = C.length() + 1;
  for (const auto &w : span_words(C)) {
    std::size_t wt = word_weight(w);
    if (wt != 0 && wt < best) best = wt;
  }
  return best > C.length() ? 0 : best;
}

// The solution set of g g* = -1, scanned over the whole ring.
inline std::vector<RingElement> brute_d_set(const RingContextPtr &ctx,
                                            std::uint32_t h) {
  const FieldSpecPtr &F = ctx->spec();
  RingElement minus_one = RingElement::one(ctx).scaled(F->minus_one());
  std::vector<RingElement> out;
  for (const auto &g : all_ring_elements(ctx))
    if (ring_mul(g, star(g, h)) == minus_one) out.push_back(g);
  return out;
}

// Every element of component i of a semisimple ring: the span of
// e_i, e_i X, ..., e_i X^{d-1}.
inline std::vector<RingElement> component_elements(const IdempotentBasis &basis,
                                                   std::size_t i) {
  const RingContextPtr &ctx = basis.ctx;
  const FieldSpecPtr &F = ctx->spec();
  const std::uint64_t q = F->q();
  const std::size_t d = basis.dims[i];
  std::vector<RingElement> gens;
  RingElement cur = basis.idems[i];
  RingElement xp = RingElement::x_power(ctx, 1);
  for (std::size_t j = 0; j < d; ++j) {
    gens.push_back(cur);
    cur = ring_mul(cur, xp);
  }
  std::uint64_t total = 1;
  for (std::size_t j = 0; j < d; ++j) total *= q;
  std::vector<RingElement> out;
  out.reserve(total);
  std::vector<Fel> coef(d, 0);
  for (std::uint64_t c = 0; c < total; ++c) {
    RingElement z = RingElement::zero(ctx);
    for (std::size_t j = 0; j < d; ++j)
      if (coef[j] != 0) z = z + gens[j].scaled(coef[j]);
    out.push_back(z);
    for (std::size_t j = 0; j < d; ++j) {
      if (++coef[j] == q) coef[j] = 0; else break;
    }
  }
  return out;
}

// Every submodule of R^2 for a semisimple context, assembled per component.
// Over each component K the submodules of K^2 are 0, K^2, the second axis,
// and the graphs {(u, cu)} for c in K (c = 0 is the first axis), giving
// |K| + 3 choices per component.
inline std::vector<QuasiCode> all_submodules(const RingContextPtr &ctx) {
  IdempotentBasis basis = ring_idempotents(ctx);
  const std::size_t n = ctx->n(), k = basis.idems.size();

  struct Option { std::vector<std::vector<Fel>> words; };
  auto pair_word = [n](const RingElement &a, const RingElement &b) {
    std::vector<Fel> w(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = a.coeff(i);
      w[n + i] = b.coeff(i);
    }
    return w;
  };

  RingElement xp = RingElement::x_power(ctx, 1);
  std::vector<std::vector<Option>> menu(k);
  for (std::size_t i = 0; i < k; ++i) {
    const RingElement &e = basis.idems[i];
    RingElement z = RingElement::zero(ctx);
    // each generator pair contributes its first dims[i] shifts, which span
    // the submodule it generates
    auto expand = [&](std::vector<std::pair<RingElement, RingElement>> gens) {
      Option o;
      for (auto [a, b] : gens)
        for (std::size_t j = 0; j < basis.dims[i]; ++j) {
          o.words.push_back(pair_word(a, b));
          a = ring_mul(a, xp);
          b = ring_mul(b, xp);
        }
      return o;
    };
    menu[i].push_back({{}});                       // zero
    menu[i].push_back(expand({{e, z}, {z, e}}));   // full
    menu[i].push_back(expand({{z, e}}));           // second axis
    for (const auto &c : component_elements(basis, i))
      menu[i].push_back(expand({{e, c}}));         // graph of c
  }

  std::vector<QuasiCode> out;
  std::vector<std::size_t> pick(k, 0);
  while (true) {
    std::vector<std::vector<Fel>> words;
    for (std::size_t i = 0; i < k; ++i)
      for (const auto &w : menu[i][pick[i]].words) words.push_back(w);
    out.push_back(QuasiCode::from_words(ctx, CodeKind::TwoQuasi, words));
    std::size_t i = 0;
    for (; i < k; ++i) {
      if (++pick[i] < menu[i].size()) break;
      pick[i] = 0;
    }
    if (i == k) break;
  }
  return out;
}

inline RingElement random_element(const RingContextPtr &ctx, Rng &rng) {
  const std::uint32_t q = static_cast<std::uint32_t>(ctx->spec()->q());
  std::vector<Fel> c(ctx->n());
  for (auto &v : c) v = rng.below(q);
  return RingElement::from_coeffs(ctx, c);
}

}  // namespace qcc::test
