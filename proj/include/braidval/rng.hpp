#pragma once

#include <cstdint>
#include <random>

#include <boost/multiprecision/cpp_int.hpp>

namespace braidval {

using BigInt = boost::multiprecision::cpp_int;

// Seedable random source. Every randomized routine in the library takes one of
// these explicitly; there is no hidden global generator. mt19937_64 is fully
// specified by the standard, so seeded runs are reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  double uniform01() {
    // 53-bit mantissa in [0,1); avoids distribution objects, whose output is
    // implementation-defined.
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t below(std::uint64_t n) {
    // rejection sampling, no modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
      v = eng_();
    } while (v >= limit);
    return v % n;
  }

  // Uniform integer in [0, n), exact for arbitrary-precision n.
  BigInt below_big(const BigInt& n) {
    if (n <= 1) return 0;
    const unsigned bits_needed = static_cast<unsigned>(boost::multiprecision::msb(n)) + 1;
    const unsigned words = (bits_needed + 63) / 64;
    while (true) {
      BigInt v = 0;
      for (unsigned i = 0; i < words; ++i) {
        v <<= 64;
        v |= BigInt(eng_());
      }
      v >>= (words * 64 - bits_needed);
      if (v < n) return v;
    }
  }

  // ±1 with given probability of +1
  int pm_one(double p_plus) { return uniform01() < p_plus ? +1 : -1; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace braidval
