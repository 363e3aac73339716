#ifndef THETA_RNG_HPP
#define THETA_RNG_HPP

#include <cstdint>

namespace theta {

// splitmix64; pinned here so that seeded runs are byte-identical across
// platforms and standard library versions.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish integer in [lo, hi]; fine for test-case generation.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
  }

  bool coin() { return next() & 1; }

  // Independent stream for a named sub-task.
  Rng fork(uint64_t salt) {
    return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL));
  }

private:
  uint64_t state_;
};

}  // namespace theta

#endif
