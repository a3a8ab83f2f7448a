#ifndef GAZEDP_RNG_HPP
#define GAZEDP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace gazedp {

// All randomness in the toolkit flows from one user seed. Sub-streams are
// derived by hashing a tag path onto the seed (splitmix64 finalizer), so
// independent work units draw from independent streams and results do not
// depend on execution order or thread count.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed,
                                 std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = splitmix64(seed);
  for (std::uint64_t tag : path) s = splitmix64(s ^ splitmix64(tag));
  return s;
}

// Tags for sub-stream derivation (arbitrary distinct constants).
namespace rngtag {
inline constexpr std::uint64_t subsample = 0x5353414d50ull;   // "SSAMP"
inline constexpr std::uint64_t noise = 0x4e4f495345ull;       // "NOISE"
inline constexpr std::uint64_t balance = 0x42414c414eull;     // "BALAN"
inline constexpr std::uint64_t synth = 0x53594e5448ull;       // "SYNTH"
inline constexpr std::uint64_t experiment = 0x4558504552ull;  // "EXPER"
inline constexpr std::uint64_t sanitize = 0x53414e4954ull;    // "SANIT"
}  // namespace rngtag

/// Deterministic random stream. Draw functions are hand-rolled from the raw
/// engine output so that sequences are reproducible bit-for-bit for a given
/// seed, independent of the standard library's distribution implementations.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : eng_(seed) {}

  /// Uniform on the open interval (0, 1).
  double uniform() {
    return (static_cast<double>(eng_() >> 11) + 0.5) * kInv53;
  }

  /// Exponential with rate lambda (scale 1/lambda); strictly positive.
  double exponential(double rate) { return -std::log(uniform()) / rate; }

  /// Standard normal via Box-Muller; caches the second variate.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  /// Uniform integer in [0, n); n must be >= 1.
  std::uint64_t pick(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(eng_()) * n) >> 64);
  }

  /// +1 or -1 with equal probability.
  double sign() { return (eng_() & 1ull) ? 1.0 : -1.0; }

 private:
  static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  std::mt19937_64 eng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace gazedp

#endif  // GAZEDP_RNG_HPP
