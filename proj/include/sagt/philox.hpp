#pragma once
// Philox4x32-10 counter-based generator (Salmon et al., "Parallel random
// numbers: as easy as 1, 2, 3", SC'11).
//
// Every random draw in this project is a pure function of a 64-bit seed and
// a 128-bit counter, so simulations are reproducible bit-for-bit regardless
// of thread count or evaluation order.  Counters carry structured indices
// (e.g. codebook bits use (t, f, m, j)), which keeps draws stable when the
// surrounding dimensions change -- useful for common-random-number sweeps.

#include <array>
#include <cstdint>

namespace sagt {

namespace detail {
inline void mulhilo32(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
  const uint64_t prod = static_cast<uint64_t>(a) * b;
  hi = static_cast<uint32_t>(prod >> 32);
  lo = static_cast<uint32_t>(prod);
}
}  // namespace detail

struct Philox4x32 {
  static constexpr uint32_t kMul0 = 0xD2511F53u;
  static constexpr uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<uint32_t, 4> block(std::array<uint32_t, 4> ctr,
                                       std::array<uint32_t, 2> key) {
    for (int round = 0; round < 10; ++round) {
      uint32_t hi0, lo0, hi1, lo1;
      detail::mulhilo32(kMul0, ctr[0], hi0, lo0);
      detail::mulhilo32(kMul1, ctr[2], hi1, lo1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

// Stream purposes.  Tags live in counter word 0 for protocol-level draws and
// are large constants so they cannot collide with the small structured
// indices used by codebook generation.
namespace tag {
constexpr uint32_t kFeedback = 0xFEEDB175u;   // lab's private random bits
constexpr uint32_t kMixer = 0xA15ED00Du;      // mixer sub-bin choices
constexpr uint32_t kErasure = 0xE7A5EE00u;    // eavesdropper erasure mask
constexpr uint32_t kDefective = 0xDEFEC7E0u;  // planted defective subsets
constexpr uint32_t kTrialSeed = 0x7215EEDCu;  // per-trial seed derivation
constexpr uint32_t kAltColumn = 0xA17C0175u;  // column-bin alternates
constexpr uint32_t kMcBlock = 0xB10C5EEDu;    // leakage-estimator codebooks
}  // namespace tag

inline uint32_t rng_u32(uint64_t seed, uint32_t c0, uint32_t c1, uint32_t c2,
                        uint32_t c3) {
  const std::array<uint32_t, 2> key = {static_cast<uint32_t>(seed),
                                       static_cast<uint32_t>(seed >> 32)};
  return Philox4x32::block({c0, c1, c2, c3}, key)[0];
}

inline uint64_t rng_u64(uint64_t seed, uint32_t c0, uint32_t c1, uint32_t c2,
                        uint32_t c3) {
  const std::array<uint32_t, 2> key = {static_cast<uint32_t>(seed),
                                       static_cast<uint32_t>(seed >> 32)};
  const auto out = Philox4x32::block({c0, c1, c2, c3}, key);
  return (static_cast<uint64_t>(out[1]) << 32) | out[0];
}

// Uniform double in [0, 1).
inline double rng_unit(uint64_t seed, uint32_t c0, uint32_t c1, uint32_t c2,
                       uint32_t c3) {
  return rng_u32(seed, c0, c1, c2, c3) * 0x1p-32;
}

// Derives an independent child seed, e.g. one per Monte Carlo trial.
inline uint64_t derive_seed(uint64_t master, uint32_t purpose, uint64_t index) {
  return rng_u64(master, purpose, static_cast<uint32_t>(index),
                 static_cast<uint32_t>(index >> 32), 0);
}

}  // namespace sagt
