#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ldisj/errors.hpp"
#include "ldisj/recognizer.hpp"

namespace ldisj {

namespace {

double search_angle(int k, std::size_t collisions) {
  const std::size_t positions = block_length(k);
  if (collisions > positions) {
    throw std::invalid_argument(std::to_string(collisions) + " collisions exceed " +
                                std::to_string(positions) + " positions");
  }
  return std::asin(std::sqrt(static_cast<double>(collisions) / static_cast<double>(positions)));
}

int checked_k(int k) {
  if (k < 1 || k > kMaxRecognizerK) {
    throw CapacityError("search procedure for k = " + std::to_string(k) + " not supported");
  }
  return k;
}

}  // namespace

SearchProcedure::SearchProcedure(int k, int iterations)
    : k_(checked_k(k)), iterations_(iterations), register_(search_register_qubits(k_)) {
  if (iterations < 0 || static_cast<std::size_t>(iterations) >= repetition_count(k)) {
    throw std::invalid_argument("iteration count " + std::to_string(iterations) +
                                " outside [0, 2^k - 1]");
  }
  hadamard_index(register_, k_);
  live_cells_ = cells_for_value(repetition_count(k) - 1);
}

void SearchProcedure::on_bit(std::size_t block, std::size_t offset, int bit) {
  if (complete_ || bit == 0) return;
  const std::size_t repetition = repetition_of(block);
  const auto j = static_cast<std::size_t>(iterations_);
  if (repetition < j) {
    if (role_of(block) == BlockRole::Y) {
      phase_flag_at(register_, offset);
    } else {
      xor_flag_at(register_, offset);
    }
  } else if (repetition == j) {
    if (role_of(block) == BlockRole::X) {
      xor_flag_at(register_, offset);
    } else if (role_of(block) == BlockRole::Y) {
      xor_result_at(register_, offset);
    }
  }
}

void SearchProcedure::on_block_end(std::size_t block) {
  if (complete_) return;
  const std::size_t repetition = repetition_of(block);
  const auto j = static_cast<std::size_t>(iterations_);
  if (repetition < j && role_of(block) == BlockRole::Z) {
    hadamard_index(register_, k_);
    negate_nonzero_index(register_, k_);
    hadamard_index(register_, k_);
  } else if (repetition == j && role_of(block) == BlockRole::Y) {
    complete_ = true;
  }
}

double SearchProcedure::one_probability() const {
  if (!complete_) throw StreamError("search procedure has not read its last block");
  return register_.probability_of_one(kResultQubit);
}

double a3_one_probability(TokenStream& stream, int k, int iterations) {
  SearchProcedure search(k, iterations);
  FormatChecker format;
  while (auto token = stream.next()) {
    const BlockEvent event = format.feed(*token);
    if (format.failed()) throw FormatError("search procedure needs a well-formed word");
    if (event.kind == BlockEvent::Kind::HeaderEnd && *format.k() != k) {
      throw FormatError("word header encodes k = " + std::to_string(*format.k()));
    }
    if (event.kind == BlockEvent::Kind::Bit) search.on_bit(event.block, event.offset, event.bit);
    if (event.kind == BlockEvent::Kind::BlockEnd) search.on_block_end(event.block);
  }
  return search.one_probability();
}

int a3_quantum_run(TokenStream& stream, int k, int iterations, std::mt19937_64& rng) {
  const double p_one = a3_one_probability(stream, k, iterations);
  const int measured = std::bernoulli_distribution(std::min(1.0, std::max(0.0, p_one)))(rng);
  return 1 - measured;
}

double a3_exact_output_distribution(const DisjInstance& instance) {
  instance.validate();
  if (instance.k > kMaxExactK) {
    throw CapacityError("exact evaluation supports k <= " + std::to_string(kMaxExactK));
  }
  const std::string word = instance.encode();
  const auto iterations = static_cast<int>(repetition_count(instance.k));
  double total = 0.0;
  for (int j = 0; j < iterations; ++j) {
    TokenStream stream(word);
    total += a3_one_probability(stream, instance.k, j);
  }
  return total / iterations;
}

double search_rejection_closed_form(int k, std::size_t collisions) {
  const double theta = search_angle(k, collisions);
  if (collisions == 0) return 0.0;
  if (collisions == block_length(k)) return 1.0;
  const double m = static_cast<double>(repetition_count(k));
  return 0.5 - std::sin(4.0 * m * theta) / (4.0 * m * std::sin(2.0 * theta));
}

double search_iteration_closed_form(int k, std::size_t collisions, int iterations) {
  const double s = std::sin((2.0 * iterations + 1.0) * search_angle(k, collisions));
  return s * s;
}

}  // namespace ldisj
