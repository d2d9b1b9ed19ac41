#include "qcc/rng.hpp"

#include "qcc/errors.hpp"

namespace qcc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

} // namespace

Rng::Rng(std::uint64_t seed) {
  base_ = mix64(seed + kGolden);
  state_ = base_;
}

Rng Rng::split(std::uint64_t tag) const {
  Rng child;
  child.base_ = mix64(base_ ^ (0xD1B54A32D192ED03ull * (tag + 1)));
  child.state_ = child.base_;
  return child;
}

std::uint64_t Rng::next() {
  state_ += kGolden;
  return mix64(state_);
}

std::uint32_t Rng::below(std::uint32_t bound) {
  internal_check(bound >= 1, "Rng::below bound");
  // Lemire's multiply-shift; the rejection loop removes the modulo bias.
  std::uint64_t x = next() >> 32;
  std::uint64_t m = x * bound;
  auto lo = static_cast<std::uint32_t>(m);
  if (lo < bound) {
    std::uint32_t threshold = (0u - bound) % bound;
    while (lo < threshold) {
      x = next() >> 32;
      m = x * bound;
      lo = static_cast<std::uint32_t>(m);
    }
  }
  return static_cast<std::uint32_t>(m >> 32);
}

} // namespace qcc
