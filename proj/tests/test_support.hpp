#pragma once

// Test-only helpers and independent oracles. Nothing here calls into the
// library code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "ldisj/qcore.hpp"

namespace ldisj::testing {

using Amplitudes = std::vector<std::complex<double>>;

inline Amplitudes random_state(std::mt19937_64& rng, int num_qubits) {
  std::normal_distribution<double> gauss;
  Amplitudes amps(std::size_t{1} << num_qubits);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = {gauss(rng), gauss(rng)};
    norm2 += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm2);
  return amps;
}

inline double max_abs_diff(std::span<const std::complex<double>> a,
                           std::span<const std::complex<double>> b) {
  if (a.size() != b.size()) return INFINITY;
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline std::vector<std::uint8_t> random_bits(std::mt19937_64& rng, std::size_t length) {
  std::bernoulli_distribution coin(0.5);
  std::vector<std::uint8_t> bits(length);
  for (auto& b : bits) b = coin(rng) ? 1 : 0;
  return bits;
}

inline std::vector<GateInstruction> random_tape(std::mt19937_64& rng, int space,
                                                std::size_t length) {
  std::uniform_int_distribution<int> qubit(0, space - 1);
  std::uniform_int_distribution<int> gate(0, 2);
  std::vector<GateInstruction> tape;
  for (std::size_t n = 0; n < length; ++n) {
    tape.push_back({qubit(rng), qubit(rng), static_cast<Gate>(gate(rng))});
  }
  return tape;
}

// Direct polynomial evaluation sum_i bits_i * point^i mod prime by Horner's rule.
inline std::uint64_t horner_fingerprint(std::span<const std::uint8_t> bits, std::uint64_t point,
                                        std::uint64_t prime) {
  std::uint64_t value = 0;
  for (std::size_t n = bits.size(); n-- > 0;) value = (value * point + bits[n]) % prime;
  return value;
}

// Primes below `limit` by the sieve of Eratosthenes.
inline std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit, false);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = 2; n < limit; ++n) {
    if (composite[n]) continue;
    primes.push_back(n);
    for (std::uint64_t m = n * n; m < limit; m += n) composite[m] = true;
  }
  return primes;
}

}  // namespace ldisj::testing
