#pragma once

#include <cstdint>

namespace qcc {

/// Deterministic 64-bit generator with counter-based stream splitting.
///
/// Every random decision in the library flows from one user seed through
/// `split` calls, so a computation fanned out over worker threads draws
/// exactly the same values as a serial run.  `split` depends only on the
/// stream identity (seed plus the chain of tags), never on how many values
/// have been drawn, which is what makes per-task streams schedule-proof.
///
/// The core transform is the splitmix64 finalizer.  std:: distributions are
/// avoided throughout because their outputs are implementation-defined and
/// would break byte-identical reports across toolchains.
class Rng {
public:
  explicit Rng(std::uint64_t seed);

  /// Child stream addressed by `tag`.  Streams with distinct tag chains are
  /// computationally independent.
  Rng split(std::uint64_t tag) const;

  std::uint64_t next();

  /// Uniform draw from [0, bound); bound must be at least 1.
  /// Unbiased (multiply-shift with rejection).
  std::uint32_t below(std::uint32_t bound);

private:
  Rng() = default;
  std::uint64_t base_ = 0;  // stream identity, untouched by draws
  std::uint64_t state_ = 0; // draw position
};

} // namespace qcc
