#pragma once

#include <cstdint>

namespace cswitch {

// SplitMix64 (Steele/Lea/Flood splittable generator). Chosen so that shot
// streams can be derived from (root seed, shot index, stream id) without any
// sequential dependence between shots; runs are reproducible across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  static Rng for_shot(uint64_t root_seed, uint64_t shot, uint64_t stream) {
    // Mix the three keys through one splitmix step each.
    uint64_t s = mix(root_seed + 0x9e3779b97f4a7c15ULL * (shot + 1));
    s = mix(s ^ (0xbf58476d1ce4e5b9ULL * (stream + 1)));
    return Rng(s);
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  // Uniform in [0,1).
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound).
  uint64_t next_below(uint64_t bound) {
    // Rejection-free multiply-shift; bias is negligible for small bounds.
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * bound;
    return static_cast<uint64_t>(m >> 64);
  }

  bool next_bool() { return next_u64() >> 63; }

 private:
  static uint64_t mix(uint64_t v) {
    v ^= v >> 30;
    v *= 0xbf58476d1ce4e5b9ULL;
    v ^= v >> 27;
    v *= 0x94d049bb133111ebULL;
    v ^= v >> 31;
    return v;
  }
  uint64_t state_;
};

}  // namespace cswitch
