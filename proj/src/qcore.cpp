#include "ldisj/qcore.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <utility>

#include "ldisj/errors.hpp"

namespace ldisj {

namespace {

void check_width(int num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw CapacityError("register width " + std::to_string(num_qubits) + " outside [1, " +
                        std::to_string(kMaxQubits) + "]");
  }
}

int parse_field(std::string_view field) {
  int value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last || field.front() == '-' ||
      field.front() == '+') {
    throw FormatError("gate tape field '" + std::string(field) + "' is not a decimal integer");
  }
  return value;
}

}  // namespace

void GateTape::validate() const {
  check_width(declared_space);
  if (instructions.size() > (std::size_t{1} << declared_space)) {
    throw CapacityError("gate tape of length " + std::to_string(instructions.size()) +
                        " exceeds 2^" + std::to_string(declared_space));
  }
  for (const auto& ins : instructions) {
    if (ins.a < 0 || ins.a >= declared_space || ins.b < 0 || ins.b >= declared_space) {
      throw IndexError("gate tape index outside [0, " + std::to_string(declared_space) + ")");
    }
    const int id = static_cast<int>(ins.gate);
    if (id < 0 || id > 2) throw FormatError("gate id " + std::to_string(id) + " not in {0,1,2}");
  }
}

GateTape parse_tape(std::string_view text, int declared_space) {
  GateTape tape;
  tape.declared_space = declared_space;
  if (!text.empty()) {
    std::vector<int> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t hash = text.find('#', start);
      fields.push_back(parse_field(text.substr(start, hash == std::string_view::npos
                                                          ? std::string_view::npos
                                                          : hash - start)));
      if (hash == std::string_view::npos) break;
      start = hash + 1;
    }
    if (fields.size() % 3 != 0) {
      throw FormatError("gate tape has " + std::to_string(fields.size()) +
                        " fields, expected a multiple of 3");
    }
    for (std::size_t f = 0; f < fields.size(); f += 3) {
      if (fields[f + 2] > 2) {
        throw FormatError("gate id " + std::to_string(fields[f + 2]) + " not in {0,1,2}");
      }
      tape.instructions.push_back({fields[f], fields[f + 1], static_cast<Gate>(fields[f + 2])});
    }
  }
  tape.validate();
  return tape;
}

std::string format_tape(const GateTape& tape) {
  std::string out;
  for (const auto& ins : tape.instructions) {
    if (!out.empty()) out += '#';
    out += std::to_string(ins.a) + '#' + std::to_string(ins.b) + '#' +
           std::to_string(static_cast<int>(ins.gate));
  }
  return out;
}

QuantumRegister::QuantumRegister(int num_qubits) : num_qubits_(num_qubits) {
  check_width(num_qubits);
  amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

QuantumRegister::QuantumRegister(int num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {}

QuantumRegister QuantumRegister::from_amplitudes(std::vector<Amplitude> amplitudes) {
  const std::size_t size = amplitudes.size();
  if (size < 2 || (size & (size - 1)) != 0) {
    throw ShapeError("amplitude vector length " + std::to_string(size) +
                     " is not a power of two >= 2");
  }
  int width = 0;
  while ((std::size_t{1} << width) < size) ++width;
  check_width(width);
  QuantumRegister reg(width, std::move(amplitudes));
  if (std::abs(reg.norm() - 1.0) > kTolerance) {
    throw ShapeError("amplitude vector is not normalized");
  }
  return reg;
}

const Amplitude& QuantumRegister::amplitude(std::size_t basis_state) const {
  if (basis_state >= amplitudes_.size()) throw IndexError("basis state out of range");
  return amplitudes_[basis_state];
}

double QuantumRegister::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

void QuantumRegister::check_qubit(int qubit) const {
  if (qubit < 0 || qubit >= num_qubits_) {
    throw IndexError("qubit " + std::to_string(qubit) + " outside [0, " +
                     std::to_string(num_qubits_) + ")");
  }
}

void QuantumRegister::hadamard(int qubit) {
  check_qubit(qubit);
  const std::size_t mask = std::size_t{1} << qubit;
  const double s = std::numbers::sqrt2 / 2.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & mask) continue;
    const Amplitude a0 = amplitudes_[i];
    const Amplitude a1 = amplitudes_[i | mask];
    amplitudes_[i] = s * (a0 + a1);
    amplitudes_[i | mask] = s * (a0 - a1);
  }
}

void QuantumRegister::t_gate(int qubit) {
  check_qubit(qubit);
  const std::size_t mask = std::size_t{1} << qubit;
  const Amplitude phase = std::polar(1.0, std::numbers::pi / 4.0);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & mask) amplitudes_[i] *= phase;
  }
}

void QuantumRegister::cnot(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) return;
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & cmask) && !(i & tmask)) std::swap(amplitudes_[i], amplitudes_[i | tmask]);
  }
}

void QuantumRegister::apply(const GateInstruction& instruction) {
  check_qubit(instruction.a);
  check_qubit(instruction.b);
  if (instruction.a == instruction.b) return;
  switch (instruction.gate) {
    case Gate::H:
      hadamard(instruction.a);
      break;
    case Gate::T:
      t_gate(instruction.a);
      break;
    case Gate::CNOT:
      cnot(instruction.a, instruction.b);
      break;
    default:
      throw FormatError("gate id " + std::to_string(static_cast<int>(instruction.gate)) +
                        " not in {0,1,2}");
  }
}

double QuantumRegister::probability_of_one(int qubit) const {
  check_qubit(qubit);
  const std::size_t mask = std::size_t{1} << qubit;
  double p = 0.0;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if (i & mask) p += std::norm(amplitudes_[i]);
  }
  return p;
}

QuantumRegister init_register(int num_qubits) { return QuantumRegister(num_qubits); }

void apply_instruction(QuantumRegister& reg, const GateInstruction& instruction) {
  reg.apply(instruction);
}

QuantumRegister run_tape(const GateTape& tape) {
  tape.validate();
  QuantumRegister reg(tape.declared_space);
  for (const auto& ins : tape.instructions) reg.apply(ins);
  return reg;
}

double measure_qubit_prob(const QuantumRegister& reg, int qubit) {
  return reg.probability_of_one(qubit);
}

}  // namespace ldisj
