#include "qcc/codes.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <limits>
#include <thread>

namespace qcc {

namespace {

constexpr std::uint64_t kSampleSeed = 0x73616d706c657221ull;

// Scaled-row tables are only built for small alphabets; beyond this the
// scan re-multiplies on the fly.
constexpr std::uint64_t kScaledMaxQ = 1024;

std::uint64_t pow_sat(std::uint64_t q, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / q)
      return std::numeric_limits<std::uint64_t>::max();
    r *= q;
  }
  return r;
}

void counter_digits(std::uint64_t m, std::uint64_t q,
                    std::vector<std::uint32_t> &dig) {
  for (auto &d : dig) {
    d = static_cast<std::uint32_t>(m % q);
    m /= q;
  }
}

// ---- bit-plane scan (char 2, length <= 64) --------------------------------
//
// A codeword is ell parallel 64-bit planes, plane i holding coefficient bit
// i of every position.  Row addition is ell XORs and the Hamming weight is
// the popcount of the OR of the planes.

struct PlaneTables {
  std::size_t dim = 0, cols = 0;
  std::uint32_t q = 0, ell = 0;
  std::vector<std::uint64_t> scaled; // ((r*q + s)*ell + i) = planes of s*row_r
  std::vector<std::uint64_t> inc;    // digit step s -> s+1 mod q, same layout
};

PlaneTables plane_tables(const Matrix &basis) {
  const auto &spec = basis.spec();
  PlaneTables t;
  t.dim = basis.rows();
  t.cols = basis.cols();
  t.q = static_cast<std::uint32_t>(spec->q());
  t.ell = spec->ell();
  t.scaled.assign(t.dim * t.q * t.ell, 0);
  t.inc.assign(t.dim * t.q * t.ell, 0);
  for (std::size_t r = 0; r < t.dim; ++r)
    for (std::uint32_t s = 1; s < t.q; ++s) {
      std::uint64_t *pl = &t.scaled[(r * t.q + s) * t.ell];
      for (std::size_t j = 0; j < t.cols; ++j) {
        const Fel v = spec->mul(s, basis.at(r, j));
        for (std::uint32_t i = 0; i < t.ell; ++i)
          pl[i] |= static_cast<std::uint64_t>((v >> i) & 1u) << j;
      }
    }
  for (std::size_t r = 0; r < t.dim; ++r)
    for (std::uint32_t s = 0; s < t.q; ++s) {
      const std::uint64_t *cur = &t.scaled[(r * t.q + s) * t.ell];
      const std::uint64_t *nxt =
          &t.scaled[(r * t.q + (s + 1) % t.q) * t.ell];
      std::uint64_t *d = &t.inc[(r * t.q + s) * t.ell];
      for (std::uint32_t i = 0; i < t.ell; ++i)
        d[i] = cur[i] ^ nxt[i];
    }
  return t;
}

std::size_t plane_weight(const std::uint64_t *acc, std::uint32_t ell) {
  std::uint64_t all = 0;
  for (std::uint32_t i = 0; i < ell; ++i)
    all |= acc[i];
  return static_cast<std::size_t>(std::popcount(all));
}

std::size_t plane_exhaustive(const PlaneTables &t, std::uint64_t lo,
                             std::uint64_t hi) {
  std::vector<std::uint32_t> dig(t.dim);
  counter_digits(lo, t.q, dig);
  std::vector<std::uint64_t> acc(t.ell, 0);
  for (std::size_t r = 0; r < t.dim; ++r)
    for (std::uint32_t i = 0; i < t.ell; ++i)
      acc[i] ^= t.scaled[(r * t.q + dig[r]) * t.ell + i];

  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t m = lo; m < hi;) {
    if (m != 0) {
      const std::size_t w = plane_weight(acc.data(), t.ell);
      if (w < best)
        best = w;
    }
    if (++m == hi)
      break;
    for (std::size_t j = 0;; ++j) {
      const std::uint32_t c = dig[j];
      const std::uint64_t *d = &t.inc[(j * t.q + c) * t.ell];
      for (std::uint32_t i = 0; i < t.ell; ++i)
        acc[i] ^= d[i];
      if (c + 1 == t.q) {
        dig[j] = 0;
      } else {
        dig[j] = c + 1;
        break;
      }
    }
  }
  return best;
}

std::size_t plane_sampled(const PlaneTables &t, const Rng &rng,
                          std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> acc(t.ell);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t j = lo; j < hi; ++j) {
    Rng g = rng.split(j);
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t r = 0; r < t.dim; ++r) {
      const std::uint32_t c = g.below(t.q);
      if (c == 0)
        continue;
      const std::uint64_t *pl = &t.scaled[(r * t.q + c) * t.ell];
      for (std::uint32_t i = 0; i < t.ell; ++i)
        acc[i] ^= pl[i];
    }
    const std::size_t w = plane_weight(acc.data(), t.ell);
    if (w != 0 && w < best)
      best = w;
  }
  return best;
}

// ---- generic byte scan ----------------------------------------------------

struct ByteTables {
  const FieldSpec *spec = nullptr;
  std::size_t dim = 0, cols = 0;
  std::uint64_t q = 0;
  std::vector<Fel> rows; // r*cols + j
  bool precomp = false;
  std::vector<Fel> scaled; // ((r*q + s)*cols + j)
  std::vector<Fel> inc;    // digit step s -> s+1 mod q
};

ByteTables byte_tables(const Matrix &basis) {
  const auto &spec = basis.spec();
  ByteTables t;
  t.spec = spec.get();
  t.dim = basis.rows();
  t.cols = basis.cols();
  t.q = spec->q();
  t.rows.assign(t.dim * t.cols, 0);
  for (std::size_t r = 0; r < t.dim; ++r)
    for (std::size_t j = 0; j < t.cols; ++j)
      t.rows[r * t.cols + j] = basis.at(r, j);
  t.precomp = t.q <= kScaledMaxQ;
  if (!t.precomp)
    return t;
  t.scaled.assign(t.dim * t.q * t.cols, 0);
  t.inc.assign(t.dim * t.q * t.cols, 0);
  for (std::size_t r = 0; r < t.dim; ++r)
    for (std::uint64_t s = 1; s < t.q; ++s)
      for (std::size_t j = 0; j < t.cols; ++j)
        t.scaled[(r * t.q + s) * t.cols + j] =
            spec->mul(static_cast<Fel>(s), t.rows[r * t.cols + j]);
  for (std::size_t r = 0; r < t.dim; ++r)
    for (std::uint64_t s = 0; s < t.q; ++s)
      for (std::size_t j = 0; j < t.cols; ++j)
        t.inc[(r * t.q + s) * t.cols + j] = spec->sub(
            t.scaled[(r * t.q + (s + 1) % t.q) * t.cols + j],
            t.scaled[(r * t.q + s) * t.cols + j]);
  return t;
}

void byte_encode(const ByteTables &t, const std::vector<std::uint32_t> &dig,
                 std::vector<Fel> &acc) {
  std::fill(acc.begin(), acc.end(), 0);
  for (std::size_t r = 0; r < t.dim; ++r) {
    const std::uint32_t c = dig[r];
    if (c == 0)
      continue;
    if (t.precomp) {
      const Fel *row = &t.scaled[(r * t.q + c) * t.cols];
      for (std::size_t j = 0; j < t.cols; ++j)
        acc[j] = t.spec->add(acc[j], row[j]);
    } else {
      const Fel *row = &t.rows[r * t.cols];
      for (std::size_t j = 0; j < t.cols; ++j)
        acc[j] = t.spec->add(acc[j], t.spec->mul(c, row[j]));
    }
  }
}

std::size_t byte_exhaustive(const ByteTables &t, std::uint64_t lo,
                            std::uint64_t hi) {
  std::vector<std::uint32_t> dig(t.dim);
  counter_digits(lo, t.q, dig);
  std::vector<Fel> acc(t.cols);
  byte_encode(t, dig, acc);
  std::size_t w = 0;
  for (Fel v : acc)
    w += v != 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t m = lo; m < hi;) {
    if (m != 0 && w < best)
      best = w;
    if (++m == hi)
      break;
    if (t.precomp) {
      for (std::size_t j = 0;; ++j) {
        const std::uint32_t c = dig[j];
        const Fel *d = &t.inc[(j * t.q + c) * t.cols];
        for (std::size_t e = 0; e < t.cols; ++e) {
          const Fel old = acc[e];
          const Fel nv = t.spec->add(old, d[e]);
          acc[e] = nv;
          w += static_cast<std::size_t>(nv != 0) -
               static_cast<std::size_t>(old != 0);
        }
        if (c + 1 == t.q) {
          dig[j] = 0;
        } else {
          dig[j] = c + 1;
          break;
        }
      }
    } else {
      for (std::size_t j = 0;; ++j) {
        if (dig[j] + 1 == t.q) {
          dig[j] = 0;
        } else {
          ++dig[j];
          break;
        }
      }
      byte_encode(t, dig, acc);
      w = 0;
      for (Fel v : acc)
        w += v != 0;
    }
  }
  return best;
}

std::size_t byte_sampled(const ByteTables &t, const Rng &rng, std::uint64_t lo,
                         std::uint64_t hi) {
  std::vector<std::uint32_t> dig(t.dim);
  std::vector<Fel> acc(t.cols);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  const auto qb = static_cast<std::uint32_t>(
      std::min<std::uint64_t>(t.q, std::numeric_limits<std::uint32_t>::max()));
  for (std::uint64_t j = lo; j < hi; ++j) {
    Rng g = rng.split(j);
    for (auto &d : dig)
      d = g.below(qb);
    byte_encode(t, dig, acc);
    std::size_t w = 0;
    for (Fel v : acc)
      w += v != 0;
    if (w != 0 && w < best)
      best = w;
  }
  return best;
}

// ---- chunked driver -------------------------------------------------------

template <class Fn>
std::size_t scan_chunks(unsigned threads, std::uint64_t total, Fn fn) {
  if (threads <= 1 || total < 2 * threads)
    return fn(std::uint64_t{0}, total);
  const std::uint64_t chunk = (total + threads - 1) / threads;
  std::vector<std::size_t> res(threads,
                               std::numeric_limits<std::size_t>::max());
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned k = 0; k < threads; ++k) {
    const std::uint64_t lo = std::min<std::uint64_t>(total, k * chunk);
    const std::uint64_t hi = std::min<std::uint64_t>(total, lo + chunk);
    pool.emplace_back([&res, k, lo, hi, &fn] { res[k] = fn(lo, hi); });
  }
  for (auto &th : pool)
    th.join();
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (auto v : res)
    best = std::min(best, v);
  return best;
}

} // namespace

namespace detail {

EngineResult min_weight_engine(const Matrix &basis, std::uint64_t budget,
                               const Rng &rng, unsigned threads,
                               bool allow_bitplane) {
  const auto &spec = basis.spec();
  internal_check(spec != nullptr, "basis without a spec");
  const std::size_t sentinel = basis.cols() + 1;
  if (basis.rows() == 0)
    return {sentinel, true};
  const std::uint64_t total = pow_sat(spec->q(), basis.rows());
  const bool exhaustive = total <= budget;
  const bool planes = allow_bitplane && spec->p() == 2 &&
                      basis.cols() <= 64 && spec->q() <= kScaledMaxQ;

  std::size_t best;
  if (planes) {
    const PlaneTables t = plane_tables(basis);
    if (exhaustive)
      best = scan_chunks(threads, total, [&](std::uint64_t lo, std::uint64_t hi) {
        return plane_exhaustive(t, lo, hi);
      });
    else
      best = scan_chunks(threads, budget, [&](std::uint64_t lo, std::uint64_t hi) {
        return plane_sampled(t, rng, lo, hi);
      });
  } else {
    const ByteTables t = byte_tables(basis);
    if (exhaustive)
      best = scan_chunks(threads, total, [&](std::uint64_t lo, std::uint64_t hi) {
        return byte_exhaustive(t, lo, hi);
      });
    else
      best = scan_chunks(threads, budget, [&](std::uint64_t lo, std::uint64_t hi) {
        return byte_sampled(t, rng, lo, hi);
      });
  }
  if (best == std::numeric_limits<std::size_t>::max())
    best = sentinel;
  return {best, exhaustive};
}

} // namespace detail

std::size_t QuasiCode::length() const {
  internal_check(ctx_ != nullptr, "code without a context");
  return kind_ == CodeKind::Constacyclic ? ctx_->n() : 2 * ctx_->n();
}

bool QuasiCode::operator==(const QuasiCode &o) const {
  internal_check(ctx_ != nullptr && o.ctx_ != nullptr,
                 "code without a context");
  // Row-space equality over the same field; the closing shift is context
  // metadata and deliberately not compared.
  return ctx_->spec()->same(*o.ctx_->spec()) && kind_ == o.kind_ &&
         length() == o.length() && basis_.mat == o.basis_.mat;
}

std::vector<Fel> word_shift(const RingContextPtr &ctx, CodeKind kind,
                            const std::vector<Fel> &w) {
  internal_check(ctx != nullptr, "word shift without a context");
  const std::size_t n = ctx->n();
  const std::size_t blocks = kind == CodeKind::Constacyclic ? 1 : 2;
  if (w.size() != blocks * n)
    throw Error(ErrorKind::LengthMismatch,
                "word length does not match the ring");
  const auto &spec = ctx->spec();
  std::vector<Fel> out(w.size());
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t off = b * n;
    out[off] = spec->mul(ctx->lambda(), w[off + n - 1]);
    for (std::size_t i = 1; i < n; ++i)
      out[off + i] = w[off + i - 1];
  }
  return out;
}

QuasiCode QuasiCode::from_words(RingContextPtr ctx, CodeKind kind,
                                const std::vector<std::vector<Fel>> &words) {
  internal_check(ctx != nullptr, "code without a context");
  QuasiCode C;
  C.kind_ = kind;
  const std::size_t len =
      kind == CodeKind::Constacyclic ? ctx->n() : 2 * ctx->n();
  for (const auto &w : words)
    if (w.size() != len)
      throw Error(ErrorKind::LengthMismatch,
                  "generator length does not match the ring");
  if (words.empty()) {
    C.basis_ = Rref{Matrix(ctx->spec(), 0, len), {}};
  } else {
    C.basis_ = rref(Matrix::from_rows(ctx->spec(), words));
  }
  C.gens_ = words;
  for (std::size_t r = 0; r < C.basis_.mat.rows(); ++r) {
    const auto shifted = word_shift(ctx, kind, C.basis_.mat.row(r));
    if (!in_row_space(C.basis_, shifted))
      throw Error(ErrorKind::NotShiftClosed,
                  "span is not closed under the shift");
  }
  C.ctx_ = std::move(ctx);
  return C;
}

QuasiCode code_from_pair(const RingElement &a, const RingElement &a2) {
  internal_check(a.ctx() != nullptr && a2.ctx() != nullptr,
                 "ring element without a context");
  if (!a.ctx()->same(*a2.ctx()))
    throw Error(ErrorKind::ContextMismatch,
                "pair elements from different rings");
  const auto &ctx = a.ctx();
  const std::size_t n = ctx->n();
  std::vector<std::vector<Fel>> rows;
  rows.reserve(n);
  RingElement u = a, v = a2;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Fel> row = u.coeffs();
    row.insert(row.end(), v.coeffs().begin(), v.coeffs().end());
    rows.push_back(std::move(row));
    if (i + 1 < n) {
      u = shift(u);
      v = shift(v);
    }
  }
  return QuasiCode::from_words(ctx, CodeKind::TwoQuasi, rows);
}

QuasiCode code_from_pair(const RingElement &a) {
  internal_check(a.ctx() != nullptr, "ring element without a context");
  const auto &ctx = a.ctx();
  const std::size_t n = ctx->n();
  std::vector<std::vector<Fel>> rows;
  rows.reserve(n);
  RingElement u = a;
  for (std::size_t i = 0; i < n; ++i) {
    rows.push_back(u.coeffs());
    if (i + 1 < n)
      u = shift(u);
  }
  return QuasiCode::from_words(ctx, CodeKind::Constacyclic, rows);
}

bool membership(const QuasiCode &C, const std::vector<Fel> &w) {
  if (w.size() != C.length())
    throw Error(ErrorKind::LengthMismatch,
                "word length does not match the code");
  return in_row_space(C.basis(), w);
}

FieldElement galois_inner(const FieldSpecPtr &spec, const std::vector<Fel> &u,
                          const std::vector<Fel> &v, std::uint32_t h) {
  internal_check(spec != nullptr, "inner product without a spec");
  if (u.size() != v.size())
    throw Error(ErrorKind::LengthMismatch,
                "inner product of words of different length");
  Fel acc = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    acc = spec->add(acc, spec->mul(u[i], spec->frobenius(v[i], h)));
  return {spec, acc};
}

QuasiCode galois_dual(const QuasiCode &C, std::uint32_t h) {
  const auto &ctx = C.ctx();
  internal_check(ctx != nullptr, "code without a context");
  const auto &spec = ctx->spec();
  if (h >= spec->ell())
    throw Error(ErrorKind::HOutOfRange,
                "h = " + std::to_string(h) + " outside [0, ell)");
  // <c, w>_h = 0 iff the Euclidean product of c with w^(p^h) vanishes, so
  // the dual is the inverse Frobenius image of the Euclidean kernel.
  const std::uint32_t hinv = (spec->ell() - h) % spec->ell();
  Matrix kern = nullspace(C.basis().mat);
  kern = entrywise_frobenius(kern, hinv);

  const Fel lam_dual = spec->inv(spec->frobenius(ctx->lambda(), hinv));
  RingContextPtr dual_ctx =
      lam_dual == ctx->lambda() ? ctx
                                : RingContext::make(spec, ctx->n(), lam_dual);
  std::vector<std::vector<Fel>> rows;
  rows.reserve(kern.rows());
  for (std::size_t r = 0; r < kern.rows(); ++r)
    rows.push_back(kern.row(r));
  QuasiCode D = QuasiCode::from_words(dual_ctx, C.kind(), rows);
  internal_check(C.dim() + D.dim() == C.length(),
                 "dual dimension does not complement");
  return D;
}

bool is_galois_self_dual(const QuasiCode &C, std::uint32_t h) {
  return galois_dual(C, h) == C;
}

CodeMetrics min_weight(const QuasiCode &C, std::uint64_t budget) {
  const auto r =
      detail::min_weight_engine(C.basis().mat, budget, Rng(kSampleSeed));
  CodeMetrics m;
  m.min_weight = r.min_weight;
  m.exact = r.exact;
  const auto len = static_cast<double>(C.length());
  m.rel_distance = static_cast<double>(r.min_weight) / len;
  m.rate = static_cast<double>(C.dim()) / len;
  return m;
}

std::uint64_t weight_census(const QuasiCode &A, double delta,
                            std::uint64_t budget) {
  const auto &spec = A.ctx()->spec();
  const std::uint64_t total = pow_sat(spec->q(), A.dim());
  if (total > budget)
    throw Error(ErrorKind::TooLargeForExhaustive,
                "census needs q^dim <= budget");
  // Rational thresholds like 1/3 arrive as doubles; the epsilon keeps
  // delta*length == w from flipping to w-1.
  const double thresh = delta * static_cast<double>(A.length()) + 1e-9;
  const ByteTables t = byte_tables(A.basis().mat);
  std::vector<std::uint32_t> dig(t.dim, 0);
  std::vector<Fel> acc(t.cols, 0);
  std::uint64_t count = 0;
  std::size_t w = 0;
  for (std::uint64_t m = 0; m < total;) {
    if (static_cast<double>(w) <= thresh)
      ++count;
    if (++m == total)
      break;
    if (t.precomp) {
      for (std::size_t j = 0;; ++j) {
        const std::uint32_t c = dig[j];
        const Fel *d = &t.inc[(j * t.q + c) * t.cols];
        for (std::size_t e = 0; e < t.cols; ++e) {
          const Fel old = acc[e];
          const Fel nv = spec->add(old, d[e]);
          acc[e] = nv;
          w += static_cast<std::size_t>(nv != 0) -
               static_cast<std::size_t>(old != 0);
        }
        if (c + 1 == t.q) {
          dig[j] = 0;
        } else {
          dig[j] = c + 1;
          break;
        }
      }
    } else {
      for (std::size_t j = 0;; ++j) {
        if (dig[j] + 1 == t.q) {
          dig[j] = 0;
        } else {
          ++dig[j];
          break;
        }
      }
      byte_encode(t, dig, acc);
      w = 0;
      for (Fel v : acc)
        w += v != 0;
    }
  }
  return count;
}

double entropy(std::uint64_t q, double delta) {
  internal_check(q >= 2, "entropy needs an alphabet of size at least 2");
  const double top = 1.0 - 1.0 / static_cast<double>(q);
  if (delta < 0.0 || delta > top + 1e-12)
    throw Error(ErrorKind::DeltaOutOfRange,
                "delta outside [0, 1 - 1/q]");
  if (delta == 0.0)
    return 0.0;
  const double lq = std::log(static_cast<double>(q));
  return delta * std::log(static_cast<double>(q - 1)) / lq -
         delta * std::log(delta) / lq -
         (1.0 - delta) * std::log(1.0 - delta) / lq;
}

namespace {

QuasiCode half_code(const QuasiCode &C, bool right_half, bool kernel_part) {
  internal_check(C.ctx() != nullptr, "code without a context");
  if (C.kind() != CodeKind::TwoQuasi)
    throw Error(ErrorKind::LengthMismatch,
                "block projection needs a two-quasi code");
  const std::size_t n = C.ctx()->n();
  std::vector<std::vector<Fel>> rows;
  if (!kernel_part) {
    // Image of the projection: slice every basis row.
    const std::size_t off = right_half ? n : 0;
    for (std::size_t r = 0; r < C.dim(); ++r) {
      const auto row = C.basis().mat.row(r);
      rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(off),
                        row.begin() + static_cast<std::ptrdiff_t>(off + n));
    }
  } else {
    // Part of C with the *other* half zero.  Reduce with the zeroed half
    // leading so the wanted rows are exactly those with late pivots.
    std::vector<std::vector<Fel>> perm;
    for (std::size_t r = 0; r < C.dim(); ++r) {
      const auto row = C.basis().mat.row(r);
      std::vector<Fel> w(2 * n);
      for (std::size_t i = 0; i < n; ++i) {
        // ker_rho1 keeps right halves of words whose left half vanishes and
        // vice versa; the vanishing half leads so late pivots find it zero.
        w[i] = right_half ? row[n + i] : row[i];
        w[n + i] = right_half ? row[i] : row[n + i];
      }
      perm.push_back(std::move(w));
    }
    if (!perm.empty()) {
      const Rref rr = rref(Matrix::from_rows(C.ctx()->spec(), perm));
      for (std::size_t r = 0; r < rr.mat.rows(); ++r)
        if (rr.pivots[r] >= n) {
          const auto row = rr.mat.row(r);
          rows.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n),
                            row.end());
        }
    }
  }
  return QuasiCode::from_words(C.ctx(), CodeKind::Constacyclic, rows);
}

} // namespace

QuasiCode rho1(const QuasiCode &C) { return half_code(C, false, false); }
QuasiCode rho2(const QuasiCode &C) { return half_code(C, true, false); }
QuasiCode ker_rho1(const QuasiCode &C) { return half_code(C, false, true); }
QuasiCode ker_rho2(const QuasiCode &C) { return half_code(C, true, true); }

} // namespace qcc
