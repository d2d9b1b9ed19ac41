#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcc/codes.hpp"
#include "qcc/rng.hpp"
#include "qcc/semisimple.hpp"

namespace qcc {

/// Which self-duality criterion applies, split on lambda^(1 + p^h).
enum class Regime { LambdaNeq, LambdaEq };

/// Evidence returned by the two criterion checks.  In the neq regime the
/// witness is the scalar alpha with alpha^(1 + p^h) = -1 whose pair code
/// (E_n, alpha E_n) matches; in the eq regime it is the Goursat tuple
/// (a, a2, b, g) whose star products all vanish.
struct SelfDualWitness {
  Regime regime;
  std::optional<FieldElement> alpha;
  std::optional<GoursatDecomposition> tuple;
};

/// Criterion for lambda^(1 + p^h) != 1: C is Galois self-dual iff its row
/// space equals that of (E_n, alpha E_n) for some alpha with
/// alpha^(1 + p^h) = -1.  Tries every such alpha.  WrongRegime when
/// lambda^(1 + p^h) = 1.
std::optional<SelfDualWitness> check_neq_regime(const QuasiCode &C,
                                                std::uint32_t h);

/// Criterion for lambda^(1 + p^h) = 1 over a semisimple ring: decomposes C
/// and tests a a* = a2 a2* = a b* = a* b = a2 b* = a2* b
/// = b b* (1 + g g*) = 0 together with dim C = n.  WrongRegime when
/// lambda^(1 + p^h) != 1, NotSemisimple when gcd(n, q) > 1.
std::optional<SelfDualWitness> check_eq_regime(const QuasiCode &C,
                                               std::uint32_t h);

/// One block of the solution set of g g* = -1.  A star-fixed component
/// contributes the solutions of z^(1 + p^k) = -e inside its field, stored
/// as a geometric progression gen^(e0 + j stride); a swapped pair (i, j)
/// contributes the family z' - (star(z'))^(-1) with z' running over the
/// units of component i.
struct DComponent {
  std::size_t index = 0;   // component index; the smaller one for a pair
  std::size_t partner = 0; // == index when fixed
  bool paired = false;
  std::uint64_t count = 0;
  RingElement gen; // generator of the unit group of component `index`
  std::uint64_t e0 = 0;
  std::uint64_t stride = 0;
};

/// The set D = {g : g g* = -1} of a semisimple ring with lambda = 1,
/// described block by block.  total_count = product of the block sizes and
/// is 0 when some block is empty (then D itself is empty).
struct DSetDescriptor {
  IdempotentBasis basis;
  std::uint32_t h = 0;
  std::vector<DComponent> component_sets;
  std::uint64_t total_count = 0;
};

/// Solves g g* = -1 componentwise.  Requires lambda = 1 (WrongRegime
/// otherwise); every component field it must enumerate is capped at
/// kMaxScanField elements (FieldTooLarge beyond).
DSetDescriptor build_d_set(const IdempotentBasis &basis, std::uint32_t h);

/// Element k of one block, 0 <= k < count.
RingElement d_element(const DSetDescriptor &dset, std::size_t block,
                      std::uint64_t k);

/// Uniform sample from D: one uniform element per block, summed.  The
/// defining equation g g* = -1 is re-verified on every sample.  EmptySet
/// when D is empty.
RingElement sample_d(const DSetDescriptor &dset, std::uint64_t seed);
RingElement sample_d(const DSetDescriptor &dset, Rng &rng);

/// All of D, in odometer order over the blocks.  TooLargeForExhaustive
/// when total_count > budget.
std::vector<RingElement> enumerate_d(const DSetDescriptor &dset,
                                     std::uint64_t budget = kDefaultBudget);

/// |{g in D : (a, b) lies in C_{1,g}}|, which reduces to counting the g in
/// D with a g = b.  Exhaustive over D; TooLargeForExhaustive when D does
/// not fit the budget.
std::uint64_t count_d_ab(const RingElement &a, const RingElement &b,
                         const DSetDescriptor &dset,
                         std::uint64_t budget = kDefaultBudget);

/// Outcome of the randomized self-dual search at one length.
struct SearchRow {
  std::size_t n = 0;
  std::uint64_t trials = 0;
  std::size_t best_min_weight = 0;
  double best_rel_distance = 0.0;
  double frac_below_delta = 0.0;
  bool exact = false; // distances exhaustive (q^n within budget)
  RingElement best_g;
  QuasiCode best_code; // C_{1, best_g}
};

struct SearchReport {
  std::uint32_t h = 0;
  double delta = 0.0;
  std::uint64_t seed = 0;
  std::vector<SearchRow> rows;
  /// Header plus one line per row: n, trials, best_min_weight,
  /// best_rel_distance, frac_below_delta, exact.  Fixed %.6f formatting so
  /// reruns diff cleanly.
  std::string to_csv() const;
};

/// Samples `trials` elements of D for each n in n_list over the cyclic
/// ring (lambda = 1) and measures the codes C_{1,g}.  Every n must be odd
/// and coprime to q.  Distances are exact when q^n <= budget, otherwise
/// sampled upper bounds with exact = false.  The random stream is split
/// per (n, trial), so the report does not depend on the thread count;
/// trials = 0 yields an empty report.
SearchReport search(const FieldSpecPtr &spec, std::uint32_t h,
                    const std::vector<std::size_t> &n_list, double delta,
                    std::uint64_t trials, std::uint64_t seed,
                    std::uint64_t budget = kDefaultBudget,
                    unsigned threads = 1);

} // namespace qcc
