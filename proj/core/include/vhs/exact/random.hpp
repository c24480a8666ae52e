#pragma once

#include <cstdint>
#include <random>

#include "vhs/exact/scalar.hpp"

namespace vhs {

/// Deterministic pseudorandom stream for generic choices.
///
/// Built on std::mt19937_64, whose output sequence is fixed by the standard;
/// integers are drawn by reduction modulo the range so results do not depend
/// on the standard library's distribution implementation.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi].
  long next_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  /// Nonzero integer in [-bound, bound].
  long next_nonzero(long bound) {
    long v = 0;
    while (v == 0) v = next_int(-bound, bound);
    return v;
  }

  Scalar next_scalar(long bound) { return Scalar(next_int(-bound, bound)); }

  /// Independent child stream, derived deterministically from this one.
  SeededStream fork() { return SeededStream(next()); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vhs
