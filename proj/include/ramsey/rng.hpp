#pragma once

#include <cstdint>

namespace ramsey {

// Counter-based generator: draw i of stream (seed, stream) is
//   splitmix64_finalize(key + (i + 1) * 0x9e3779b97f4a7c15)
// with key = splitmix64_finalize(seed + splitmix64_finalize(stream + 0x632be59bd9b4e019)).
// This mapping is a compatibility promise: the same seed gives the same graph forever.

using RngSeed = std::uint64_t;

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

constexpr std::uint64_t splitmix64_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t stream_key(RngSeed seed, std::uint64_t stream) {
  return splitmix64_finalize(seed + splitmix64_finalize(stream + 0x632be59bd9b4e019ULL));
}

// Seed of the i-th independent child (trial, sub-run) of a master seed.
constexpr RngSeed derive_seed(RngSeed master, std::uint64_t index) { return stream_key(master, index ^ 0xa0761d6478bd642fULL); }

// Fixed stream indices so that different consumers of one seed never overlap.
enum class Stream : std::uint64_t { Edges = 0, Sampling = 1, Colouring = 2 };

class RngStream {
 public:
  constexpr RngStream(RngSeed seed, std::uint64_t stream) : key_(stream_key(seed, stream)) {}
  constexpr RngStream(RngSeed seed, Stream stream) : RngStream(seed, static_cast<std::uint64_t>(stream)) {}

  constexpr std::uint64_t at(std::uint64_t index) const { return splitmix64_finalize(key_ + (index + 1) * kGoldenGamma); }
  constexpr std::uint64_t next_u64() { return at(counter_++); }
  // Uniform on [0, 2^53).
  constexpr std::uint64_t next_u53() { return next_u64() >> 11; }
  // Uniform on [0, n) by the multiply-shift map; n > 0.
  std::uint64_t next_below(std::uint64_t n) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }
  constexpr std::uint64_t position() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace ramsey
