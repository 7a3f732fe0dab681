#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace fogsim {

// Deterministic sub-stream of the global seed. The stream label keeps
// components decoupled: adding draws to one stream never shifts another.
//
// All samplers are implemented on top of raw mt19937_64 output rather than
// <random> distributions, whose results are implementation-defined.
class RngStream {
 public:
  RngStream(uint64_t global_seed, std::string_view stream_id)
      : eng_(derive_seed(global_seed, stream_id)) {}

  uint64_t next_u64() {
    ++draws_;
    return eng_();
  }

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Exponential inter-arrival gap in seconds for a process of `rate` per second.
  double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

  // Uniform in [0, bound) without modulo bias.
  uint64_t uniform_below(uint64_t bound) {
    if (bound == 0) return 0;
    const uint64_t limit = std::numeric_limits<uint64_t>::max() - std::numeric_limits<uint64_t>::max() % bound;
    uint64_t x;
    do {
      x = next_u64();
    } while (x >= limit);
    return x % bound;
  }

  uint64_t uniform_in(uint64_t lo, uint64_t hi) {  // inclusive range
    return lo + uniform_below(hi - lo + 1);
  }

  uint64_t draw_count() const { return draws_; }

  static uint64_t derive_seed(uint64_t global_seed, std::string_view stream_id) {
    uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a over the label
    for (unsigned char c : stream_id) {
      h ^= c;
      h *= 0x100000001b3ull;
    }
    return splitmix64(global_seed ^ splitmix64(h));
  }

  static uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 eng_;
  uint64_t draws_ = 0;
};

}  // namespace fogsim
