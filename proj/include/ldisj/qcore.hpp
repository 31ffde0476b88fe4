#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ldisj {

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 30;
inline constexpr double kTolerance = 1e-12;

// Gate ids of the tape alphabet: 0 = H, 1 = T (diag(1, e^{i pi/4})), 2 = CNOT.
enum class Gate : int { H = 0, T = 1, CNOT = 2 };

// One tape entry (a, b, c). For CNOT, a is the control and b the target.
// a == b denotes the identity for every gate id.
struct GateInstruction {
  int a = 0;
  int b = 0;
  Gate gate = Gate::H;

  friend bool operator==(const GateInstruction&, const GateInstruction&) = default;
};

struct GateTape {
  std::vector<GateInstruction> instructions;
  int declared_space = 1;

  // Throws IndexError for an index >= declared_space, CapacityError when the
  // tape is longer than 2^declared_space or declared_space is outside [1, kMaxQubits].
  void validate() const;
};

// Parses "a1#b1#c1#...#ar#br#cr": decimal integers, no whitespace, no trailing '#'.
// The empty string is the empty tape.
GateTape parse_tape(std::string_view text, int declared_space);
std::string format_tape(const GateTape& tape);

// Dense state vector. Qubit q is bit q of the basis-state integer (qubit 0 is
// the least significant bit).
class QuantumRegister {
 public:
  // |0...0> on num_qubits qubits.
  explicit QuantumRegister(int num_qubits);

  // Takes ownership of an explicit state; size must be a power of two and the
  // norm must be 1 within kTolerance.
  static QuantumRegister from_amplitudes(std::vector<Amplitude> amplitudes);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }
  const Amplitude& amplitude(std::size_t basis_state) const;
  double norm() const;

  void hadamard(int qubit);
  void t_gate(int qubit);
  void cnot(int control, int target);
  void apply(const GateInstruction& instruction);

  // Probability that measuring `qubit` in the computational basis gives 1.
  double probability_of_one(int qubit) const;

  // Raw access for the structured operators below.
  std::span<Amplitude> mutable_amplitudes() { return amplitudes_; }

 private:
  QuantumRegister(int num_qubits, std::vector<Amplitude> amplitudes);
  void check_qubit(int qubit) const;

  int num_qubits_;
  std::vector<Amplitude> amplitudes_;
};

QuantumRegister init_register(int num_qubits);
void apply_instruction(QuantumRegister& reg, const GateInstruction& instruction);
// Applies the instructions in emission order to |0...0>.
QuantumRegister run_tape(const GateTape& tape);
double measure_qubit_prob(const QuantumRegister& reg, int qubit);

// ---------------------------------------------------------------------------
// Search register for the disjointness procedure.
//
// A register for parameter k has 2k + 2 qubits laid out as |i>|h>|l>:
//   qubit 0          result qubit l (the one measured at the end)
//   qubit 1          flag qubit h
//   qubits 2..2k+1   index i in [0, 2^{2k}), bit b of i on qubit 2 + b
// Bit strings passed below have length 2^{2k}; entry i is 0 or 1.
// ---------------------------------------------------------------------------

inline constexpr int kResultQubit = 0;
inline constexpr int kFlagQubit = 1;
inline constexpr int kIndexShift = 2;

constexpr int search_register_qubits(int k) { return 2 * k + 2; }

constexpr std::size_t search_basis_state(std::size_t index, int flag, int result) {
  return (index << kIndexShift) | (static_cast<std::size_t>(flag) << kFlagQubit) |
         static_cast<std::size_t>(result);
}

// Number of index positions 2^{2k} of a search register; ShapeError if the
// width is not 2k + 2 for some k >= 1.
std::size_t search_index_count(const QuantumRegister& reg);

// |i>|h>|l> -> -|i>|h>|l> for i != 0.
void negate_nonzero_index(QuantumRegister& reg, int k);
// H on each index qubit; flag and result untouched.
void hadamard_index(QuantumRegister& reg, int k);
// |i>|h>|l> -> |i>|h xor bits_i>|l>.
void xor_flag(QuantumRegister& reg, std::span<const std::uint8_t> bits);
// |i>|h>|l> -> (-1)^{h and bits_i} |i>|h>|l>.
void phase_flag(QuantumRegister& reg, std::span<const std::uint8_t> bits);
// |i>|h>|l> -> |i>|h>|l xor (h and bits_i)>.
void xor_result(QuantumRegister& reg, std::span<const std::uint8_t> bits);

// Single-position forms of the three bit-driven operators, for bits_i = 1.
// Applying them for every set bit of a string equals the whole-string form,
// which lets a reader apply the operator while the bits stream past.
void xor_flag_at(QuantumRegister& reg, std::size_t index);
void phase_flag_at(QuantumRegister& reg, std::size_t index);
void xor_result_at(QuantumRegister& reg, std::size_t index);

// One search iteration for a repetition (x, y, z), in application order:
// xor_flag(x), phase_flag(y), xor_flag(z), then the diffusion
// hadamard_index, negate_nonzero_index, hadamard_index.
void search_iteration(QuantumRegister& reg, int k, std::span<const std::uint8_t> x,
                      std::span<const std::uint8_t> y, std::span<const std::uint8_t> z);

}  // namespace ldisj
