#pragma once

#include <cstddef>
#include <vector>

#include "qcc/matrix.hpp"
#include "qcc/ring.hpp"
#include "qcc/rng.hpp"

namespace qcc {

/// Where a code lives: inside R_lambda (words of length n) or inside
/// R_lambda^2 (words of length 2n, both halves shifted together).
enum class CodeKind { Constacyclic, TwoQuasi };

/// Hamming-metric summary of a code.  rel_distance and the sentinel below
/// keep comparisons total: the zero code reports length+1.
struct CodeMetrics {
  std::size_t min_weight = 0;
  double rel_distance = 0.0; // min_weight / length
  double rate = 0.0;         // dim / length
  bool exact = false;
};

/// Default codeword budget for exhaustive scans; beyond it weight searches
/// fall back to sampling and censuses refuse.
constexpr std::uint64_t kDefaultBudget = 1ull << 22;

/// A linear code over F with the extra shift structure: every code is
/// closed under the (double) lambda-shift, which is what makes it a module
/// over the quotient ring.  The canonical basis is the reduced row echelon
/// form of the generators, so two codes are equal iff their bases match.
/// Immutable after construction.
class QuasiCode {
public:
  QuasiCode() = default;

  /// Span of explicit words (length n or 2n by kind).  The span must be
  /// closed under the shift (NotShiftClosed otherwise); an empty word list
  /// gives the zero code.
  static QuasiCode from_words(RingContextPtr ctx, CodeKind kind,
                              const std::vector<std::vector<Fel>> &words);

  const RingContextPtr &ctx() const { return ctx_; }
  CodeKind kind() const { return kind_; }
  std::size_t length() const;
  std::size_t dim() const { return basis_.mat.rows(); }
  const Rref &basis() const { return basis_; }
  const std::vector<std::vector<Fel>> &gens() const { return gens_; }

  bool operator==(const QuasiCode &o) const;
  bool operator!=(const QuasiCode &o) const { return !(*this == o); }

private:
  RingContextPtr ctx_;
  CodeKind kind_ = CodeKind::Constacyclic;
  std::vector<std::vector<Fel>> gens_;
  Rref basis_;
};

/// One shift step of a word of the given kind: each half of length n is
/// multiplied by X in R_lambda.
std::vector<Fel> word_shift(const RingContextPtr &ctx, CodeKind kind,
                            const std::vector<Fel> &w);

/// The module generated by the pair (a, a2) inside R_lambda^2: the span of
/// the rows of (circulant(a) | circulant(a2)).
QuasiCode code_from_pair(const RingElement &a, const RingElement &a2);

/// The ideal generated by a inside R_lambda.
QuasiCode code_from_pair(const RingElement &a);

bool membership(const QuasiCode &C, const std::vector<Fel> &w);

/// sum_i u_i v_i^(p^h), linear in u and p^h-semilinear in v.
FieldElement galois_inner(const FieldSpecPtr &spec, const std::vector<Fel> &u,
                          const std::vector<Fel> &v, std::uint32_t h);

/// {w : <c, w>_h = 0 for all c in C}.  The Euclidean kernel of the basis is
/// computed once and mapped through the inverse of the p^h power map
/// entrywise.  The result lives over lambda' = lambda^(-p^(ell-h)), the
/// twist under which it is again shift-closed.
QuasiCode galois_dual(const QuasiCode &C, std::uint32_t h);

/// galois_dual(C, h) == C (context and row space both).
bool is_galois_self_dual(const QuasiCode &C, std::uint32_t h);

/// Minimum nonzero Hamming weight.  Exhaustive when q^dim <= budget
/// (exact=true); otherwise an upper bound from `budget` uniformly sampled
/// codewords, reproducible because the sample stream is fixed.  The zero
/// code reports the sentinel length+1 with exact=true.
CodeMetrics min_weight(const QuasiCode &C, std::uint64_t budget = kDefaultBudget);

/// |{c in C : w(c) <= delta * length}|, zero word included.  Exhaustive
/// only: TooLargeForExhaustive when q^dim > budget.
std::uint64_t weight_census(const QuasiCode &A, double delta,
                            std::uint64_t budget = kDefaultBudget);

/// q-ary entropy delta*log_q(q-1) - delta*log_q(delta)
/// - (1-delta)*log_q(1-delta), continuous value 0 at delta=0.
/// Domain [0, 1 - 1/q]; DeltaOutOfRange outside.
double entropy(std::uint64_t q, double delta);

/// Block projections of a two-quasi code: image of a half, and the part of
/// the other half sitting over zero.  All four are constacyclic codes over
/// the same context.
QuasiCode rho1(const QuasiCode &C);
QuasiCode rho2(const QuasiCode &C);
QuasiCode ker_rho1(const QuasiCode &C); // {c2 : (0, c2) in C}
QuasiCode ker_rho2(const QuasiCode &C); // {c1 : (c1, 0) in C}

namespace detail {

/// Weight-scan core shared by min_weight and the self-dual search.  The
/// basis must already be in reduced form (independent rows).  Sampling
/// draws codeword j from rng.split(j), so results do not depend on the
/// thread count; `allow_bitplane` exists so tests can force the generic
/// path and compare engines.
struct EngineResult {
  std::size_t min_weight; // length+1 when no nonzero word was seen
  bool exact;
};
EngineResult min_weight_engine(const Matrix &basis, std::uint64_t budget,
                               const Rng &rng, unsigned threads = 1,
                               bool allow_bitplane = true);

} // namespace detail

} // namespace qcc
