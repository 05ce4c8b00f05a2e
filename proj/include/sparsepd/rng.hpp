#ifndef SPARSEPD_RNG_HPP
#define SPARSEPD_RNG_HPP

#include <cmath>
#include <cstdint>
#include <utility>

namespace sparsepd {

// Counter-based generator: every output is a pure hash of
// (seed, stream, counter), so identical parameters give bit-identical
// streams no matter how work is scheduled across tasks.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t counter_hash(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter) {
  return splitmix64(seed ^ splitmix64(stream ^ splitmix64(counter)));
}

/// Uniform in (0, 1]; 53-bit resolution.
inline double uniform01(std::uint64_t seed, std::uint64_t stream,
                        std::uint64_t counter) {
  return static_cast<double>((counter_hash(seed, stream, counter) >> 11) + 1) *
         0x1.0p-53;
}

/// Two independent standard normals via Box-Muller from counters
/// (2*counter, 2*counter + 1).
inline std::pair<double, double> normal_pair(std::uint64_t seed,
                                             std::uint64_t stream,
                                             std::uint64_t counter) {
  const double u1 = uniform01(seed, stream, 2 * counter);
  const double u2 = uniform01(seed, stream, 2 * counter + 1);
  const double rad = std::sqrt(-2.0 * std::log(u1));
  const double ang = 2.0 * M_PI * u2;
  return {rad * std::cos(ang), rad * std::sin(ang)};
}

/// Sequential standard normals for one (seed, stream) pair.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    auto [a, b] = normal_pair(seed_, stream_, counter_++);
    spare_ = b;
    have_spare_ = true;
    return a;
  }

 private:
  std::uint64_t seed_, stream_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace sparsepd

#endif
