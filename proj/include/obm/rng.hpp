#pragma once

#include <cstdint>
#include <random>

namespace obm {

// Reproducible within one build: the same (master_seed, stream_id) always
// yields the same draws. Cross-build bit-exactness is not promised because
// standard distributions are implementation-defined.
struct RngSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return splitmix64(splitmix64(a) ^ (b + 0x632be59bd9b4e019ULL + (a << 6) + (a >> 2)));
}

using Engine = std::mt19937_64;

inline Engine make_engine(const RngSpec& spec) {
  return Engine(mix_seed(spec.master_seed, spec.stream_id));
}

// Per-sample engine: sample k of stream s never depends on how samples are
// split across workers.
inline Engine make_engine(const RngSpec& spec, std::uint64_t sample_index) {
  return Engine(mix_seed(mix_seed(spec.master_seed, spec.stream_id), sample_index));
}

}  // namespace obm
