#include <string>
#include <utility>

#include "ldisj/errors.hpp"
#include "ldisj/qcore.hpp"

namespace ldisj {

namespace {

void check_k(const QuantumRegister& reg, int k) {
  if (k < 1 || reg.num_qubits() != search_register_qubits(k)) {
    throw ShapeError("register of " + std::to_string(reg.num_qubits()) +
                     " qubits does not match k = " + std::to_string(k));
  }
}

std::size_t check_bits(const QuantumRegister& reg, std::span<const std::uint8_t> bits) {
  const std::size_t count = search_index_count(reg);
  if (bits.size() != count) {
    throw ShapeError("bit string of length " + std::to_string(bits.size()) + ", expected " +
                     std::to_string(count));
  }
  return count;
}

void check_index(const QuantumRegister& reg, std::size_t index) {
  if (index >= search_index_count(reg)) {
    throw IndexError("index position " + std::to_string(index) + " out of range");
  }
}

}  // namespace

std::size_t search_index_count(const QuantumRegister& reg) {
  const int index_qubits = reg.num_qubits() - kIndexShift;
  if (index_qubits < 2 || index_qubits % 2 != 0) {
    throw ShapeError("register of " + std::to_string(reg.num_qubits()) +
                     " qubits is not a search register");
  }
  return std::size_t{1} << index_qubits;
}

void negate_nonzero_index(QuantumRegister& reg, int k) {
  check_k(reg, k);
  auto amps = reg.mutable_amplitudes();
  for (std::size_t s = std::size_t{1} << kIndexShift; s < amps.size(); ++s) amps[s] = -amps[s];
}

void hadamard_index(QuantumRegister& reg, int k) {
  check_k(reg, k);
  for (int q = kIndexShift; q < kIndexShift + 2 * k; ++q) reg.hadamard(q);
}

void xor_flag_at(QuantumRegister& reg, std::size_t index) {
  check_index(reg, index);
  auto amps = reg.mutable_amplitudes();
  for (int l = 0; l < 2; ++l) {
    std::swap(amps[search_basis_state(index, 0, l)], amps[search_basis_state(index, 1, l)]);
  }
}

void phase_flag_at(QuantumRegister& reg, std::size_t index) {
  check_index(reg, index);
  auto amps = reg.mutable_amplitudes();
  for (int l = 0; l < 2; ++l) {
    auto& a = amps[search_basis_state(index, 1, l)];
    a = -a;
  }
}

void xor_result_at(QuantumRegister& reg, std::size_t index) {
  check_index(reg, index);
  auto amps = reg.mutable_amplitudes();
  std::swap(amps[search_basis_state(index, 1, 0)], amps[search_basis_state(index, 1, 1)]);
}

void xor_flag(QuantumRegister& reg, std::span<const std::uint8_t> bits) {
  const std::size_t count = check_bits(reg, bits);
  for (std::size_t i = 0; i < count; ++i) {
    if (bits[i]) xor_flag_at(reg, i);
  }
}

void phase_flag(QuantumRegister& reg, std::span<const std::uint8_t> bits) {
  const std::size_t count = check_bits(reg, bits);
  for (std::size_t i = 0; i < count; ++i) {
    if (bits[i]) phase_flag_at(reg, i);
  }
}

void xor_result(QuantumRegister& reg, std::span<const std::uint8_t> bits) {
  const std::size_t count = check_bits(reg, bits);
  for (std::size_t i = 0; i < count; ++i) {
    if (bits[i]) xor_result_at(reg, i);
  }
}

void search_iteration(QuantumRegister& reg, int k, std::span<const std::uint8_t> x,
                      std::span<const std::uint8_t> y, std::span<const std::uint8_t> z) {
  check_k(reg, k);
  xor_flag(reg, x);
  phase_flag(reg, y);
  xor_flag(reg, z);
  hadamard_index(reg, k);
  negate_nonzero_index(reg, k);
  hadamard_index(reg, k);
}

}  // namespace ldisj
