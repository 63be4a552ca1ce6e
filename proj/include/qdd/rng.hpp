#pragma once
#include <cstdint>

namespace qdd {

// splitmix64. All randomness in the library flows through this so that a
// fixed seed gives byte-identical results on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound), bound > 0. Plain modulo: bounds here are tiny
  // against 2^64 and cross-platform reproducibility matters more than the
  // vanishing bias.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // independent deterministic substream; shard i of a parallel sweep uses
  // fork(i) so results do not depend on scheduling.
  Rng fork(std::uint64_t stream) const {
    Rng r(state_ ^ (0xa0761d6478bd642fULL * (stream + 1)));
    r.next();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace qdd
