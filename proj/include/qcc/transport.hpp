#pragma once

#include <cstdint>
#include <vector>

#include "qcc/codes.hpp"
#include "qcc/ring.hpp"

namespace qcc {

/// The coefficient-twist isomorphism a(X) -> a(gamma X) between the cyclic
/// ring (lambda = 1) and the constacyclic ring of the same length, defined
/// whenever gcd(n, t) = 1 for t = ord(lambda).  gamma = lambda^s with
/// n s == -1 (mod t), so gamma^n = lambda^(-1); under the standing
/// hypothesis lambda^(1 + p^h) = 1 the twist also satisfies
/// gamma^(1 + p^h) = 1, which is what makes it preserve the inner product.
struct TransportMap {
  RingContextPtr source; // lambda = 1
  RingContextPtr target;
  std::uint32_t h = 0;
  std::uint64_t s = 0; // least nonnegative solution of n s == -1 (mod t)
  FieldElement gamma;
};

/// Builds the map between two rings over the same field and length.
/// LambdaHypothesisViolated when lambda^(1 + p^h) != 1, NotCoprime when
/// gcd(n, t) > 1.
TransportMap make_transport(const RingContextPtr &source,
                            const RingContextPtr &target, std::uint32_t h);

/// a(X) -> a(gamma X): coefficient i is scaled by gamma^i.  A ring
/// isomorphism source -> target preserving Hamming weight.
RingElement apply(const TransportMap &map, const RingElement &a);

/// The inverse twist, scaling coefficient i by gamma^(-i).
RingElement apply_inverse(const TransportMap &map, const RingElement &b);

/// The twist on a word of length 2n, both halves scaled in step.
std::vector<Fel> apply_pair(const TransportMap &map,
                            const std::vector<Fel> &w);

/// Image of a code under the twist; same kind, target context.  Preserves
/// dimension, weight distribution and Galois self-duality.
QuasiCode transport_code(const TransportMap &map, const QuasiCode &C);

} // namespace qcc
