#ifndef SALM_UTIL_HPP
#define SALM_UTIL_HPP

#include <cmath>
#include <cstdint>
#include <istream>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace salm {

// Error taxonomy: configuration/usage problems, I/O and format problems,
// and internal invariant breaches. The CLI maps these to exit codes.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

uint64_t splitmix64(uint64_t x);

// Stable sub-seed derivation so each component (store init, encoder init,
// batch stream, ...) owns an independent deterministic stream.
uint64_t derive_seed(uint64_t base, std::string_view purpose, uint64_t index = 0);

// mt19937_64 wrapper with explicit draw mappings. No std distribution objects
// are kept alive, so the engine state alone is the full RNG state and
// checkpoints can round-trip it exactly.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next_u64() { return eng_(); }

  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Box-Muller, no cached second value.
  double normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  // Unbiased integer in [0, n) via rejection.
  uint64_t below(uint64_t n);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[static_cast<size_t>(below(i))]);
    }
  }

  void save(std::ostream& os) const { os << eng_; }
  void load(std::istream& is) { is >> eng_; }

  bool operator==(const Rng& o) const { return eng_ == o.eng_; }

 private:
  static constexpr double kTwoPi = 6.283185307179586476925286766559;
  std::mt19937_64 eng_;
};

std::string lowercase(std::string_view s);

std::vector<std::string> split_ws(std::string_view line);

}  // namespace salm

#endif  // SALM_UTIL_HPP
