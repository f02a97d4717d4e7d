#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>

namespace clara {

// Deterministic random stream used everywhere in the simulator and trainer.
// std::mt19937_64 is the engine; the double/normal/poisson conversions are done
// here by hand because the std::* distributions are not bit-stable across
// standard library implementations, and metrics files must be byte-identical
// for a fixed seed.
class RandomStream {
public:
  RandomStream() : engine_(0) {}
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  void seed(std::uint64_t s) { engine_.seed(s); }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform in (0, 1]; safe as a log() argument.
  double uniform_pos() { return 1.0 - uniform(); }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller without caching the second value, so the stream state is the
  // engine state alone (needed for checkpoint round-trips).
  double normal() {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double exponential(double mean) { return -mean * std::log(uniform_pos()); }

  // Knuth multiplication method; fine for the lambdas used here (<= 100).
  int poisson(double lambda) {
    if (lambda <= 0.0) return 0;
    const double limit = std::exp(-lambda);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform();
    } while (p > limit);
    return k - 1;
  }

  std::string save_state() const {
    std::ostringstream os;
    os << engine_;
    return os.str();
  }

  void load_state(const std::string& s) {
    std::istringstream is(s);
    is >> engine_;
  }

private:
  std::mt19937_64 engine_;
};

namespace detail {
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}
}  // namespace detail

// Seed-derivation rule: hash of (base_seed, purpose, index). Training, action
// noise, and evaluation use distinct purpose strings so their streams never
// collide for the same base seed.
inline std::uint64_t derive_seed(std::uint64_t base, const char* purpose, std::uint64_t index = 0) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a over the purpose tag
  for (const char* p = purpose; *p; ++p) {
    h ^= static_cast<std::uint64_t>(static_cast<unsigned char>(*p));
    h *= 1099511628211ULL;
  }
  h = detail::splitmix64(h ^ detail::splitmix64(base));
  return detail::splitmix64(h ^ detail::splitmix64(index * 0x9e3779b97f4a7c15ULL + 1));
}

}  // namespace clara
