#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qcc/codes.hpp"
#include "qcc/poly.hpp"
#include "qcc/ring.hpp"

namespace qcc {

/// Decomposition data of a semisimple quotient ring: the irreducible
/// factors of X^n - lambda and the matching primitive idempotents, so that
/// the ring is the direct product of the fields (idems[i] * R).  Factors
/// are sorted by (degree, coefficient order); X - 1 leads when it divides,
/// which is always the case for lambda = 1.
struct IdempotentBasis {
  RingContextPtr ctx;
  std::vector<Poly> factors;
  std::vector<RingElement> idems;
  std::vector<std::size_t> dims; // deg factors[i] = dim of component i
};

/// Irreducible factorization of X^n - 1 over the context's field, X - 1
/// first.  Requires gcd(n, q) = 1 (NotSemisimple otherwise).
std::vector<Poly> factor_xn_minus_1(const RingContextPtr &ctx);

/// Primitive idempotents of F[X]/(X^n - 1); the context must have
/// lambda = 1 (WrongRegime otherwise) and be semisimple.  Orthogonality,
/// idempotency and completeness are verified before returning.
IdempotentBasis idempotents(const RingContextPtr &ctx);

/// Same construction for X^n - lambda with any unit lambda; this is what
/// component-wise structure work runs on.
IdempotentBasis ring_idempotents(const RingContextPtr &ctx);

/// Minimum degree among the nontrivial factors of X^n - 1 (X - 1 excluded).
std::size_t mu(const RingContextPtr &ctx);

/// How conjugation permutes the primitive idempotents: indices with
/// star(e_i) = e_i, and pairs (i, j), i < j, swapped with each other.
struct StarPairing {
  std::uint32_t h = 0;
  std::vector<std::size_t> fixed;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
};
StarPairing star_pairing(const IdempotentBasis &basis, std::uint32_t h);

/// Structure data of a submodule C of R^2: C is the direct sum of an ideal
/// in the left block, an ideal in the right block, and the graph
/// {(u, u g) : u in C_b} of multiplication by g.  The index vectors record
/// which component went where (full-plane components land in both a and a2).
struct GoursatDecomposition {
  RingElement a, a2, b, g;
  std::vector<std::size_t> left, right, graph, full;
};

/// Component-by-component classification of a two-quasi code over a
/// semisimple context.  The rebuilt code is verified equal to C before
/// returning.
GoursatDecomposition decompose(const QuasiCode &C);

/// The code C_{a,0} + C_{0,a2} + C_{b,bg} a decomposition describes.
QuasiCode code_from_goursat(const RingContextPtr &ctx,
                            const GoursatDecomposition &dec);

/// Inverse of u inside the field component idems[i] * R, computed by the
/// product of Frobenius conjugates (norm reduction to a base-field
/// scalar).  ZeroElement when u vanishes on the component.
RingElement component_inverse(const IdempotentBasis &basis, std::size_t i,
                              const RingElement &u);

/// u^e in the quotient ring.
RingElement ring_pow(const RingElement &u, std::uint64_t e);

} // namespace qcc
