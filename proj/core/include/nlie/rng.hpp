#pragma once

#include <cstdint>

#include "nlie/linalg.hpp"

namespace nlie {

/// Deterministic splitmix64 stream; the seed fully determines every draw.
struct SplitMix64 {
  uint64_t state = 0;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t n) { return n ? next() % n : 0; }
};

inline Scalar random_scalar(const FieldSpec& f, SplitMix64& rng, int q_span = 2) {
  if (f.is_prime_field()) return Scalar::from_residue(f, rng.below(f.p()));
  long v = static_cast<long>(rng.below(2 * q_span + 1)) - q_span;
  return Scalar::from_int(f, v);
}

inline Scalar random_nonzero_scalar(const FieldSpec& f, SplitMix64& rng, int q_span = 2) {
  while (true) {
    Scalar s = random_scalar(f, rng, q_span);
    if (!s.is_zero()) return s;
  }
}

inline Mat random_invertible(const FieldSpec& f, size_t d, SplitMix64& rng) {
  while (true) {
    Mat m(f, d, d);
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) m.at(i, j) = random_scalar(f, rng);
    if (is_invertible(m)) return m;
  }
}

/// Product of elementary shears and swaps over Z; det = +-1 so the inverse is
/// integral as well.
inline Mat random_unimodular_integral(size_t d, SplitMix64& rng, size_t steps = 0) {
  FieldSpec f = FieldSpec::Q();
  Mat m = Mat::identity(f, d);
  if (steps == 0) steps = 3 * d;
  for (size_t s = 0; s < steps; ++s) {
    size_t i = rng.below(d), j = rng.below(d);
    if (i == j) {
      for (size_t k = 0; k < d; ++k) std::swap(m.at(i, k), m.at((i + 1) % d, k));
      continue;
    }
    long c = static_cast<long>(rng.below(5)) - 2;
    if (c == 0) c = 1;
    Scalar cs = Scalar::from_int(f, c);
    for (size_t k = 0; k < d; ++k) m.at(i, k) += cs * m.at(j, k);
  }
  return m;
}

}  // namespace nlie
