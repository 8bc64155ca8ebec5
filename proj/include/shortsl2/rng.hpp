// Deterministic random sampling for property tests and the randomized rank
// decision. mt19937_64 is used directly with modulo mapping (instead of
// uniform_int_distribution, whose algorithm is implementation-defined) so a
// fixed seed reproduces the same stream on every toolchain.
#ifndef SHORTSL2_RNG_HPP
#define SHORTSL2_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "shortsl2/rational.hpp"

namespace shortsl2 {

inline constexpr std::uint64_t kDefaultSeed = 42;

class Rng {
 public:
  explicit Rng(std::uint64_t seed = kDefaultSeed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  // Uniform-ish integer in [lo, hi], inclusive. The slight modulo bias is
  // irrelevant here; determinism across platforms is what matters.
  long long int_in(long long lo, long long hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(gen_() % span);
  }

  // Random rational with |numerator| <= max_num and 1 <= denominator <= max_den.
  Rational rational(int max_num = 10, int max_den = 10) {
    long long num = int_in(-max_num, max_num);
    long long den = int_in(1, max_den);
    return Rational(num) / Rational(den);
  }

  std::vector<Rational> vec(std::size_t n, int max_num = 10, int max_den = 10) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = rational(max_num, max_den);
    return v;
  }

  // Random integer-coefficient vector (used for generic elements of g^2).
  std::vector<Rational> int_vec(std::size_t n, int max_abs = 10) {
    std::vector<Rational> v(n);
    for (auto& x : v) x = Rational(int_in(-max_abs, max_abs));
    return v;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace shortsl2

#endif  // SHORTSL2_RNG_HPP
