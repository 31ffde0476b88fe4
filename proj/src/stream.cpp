#include "ldisj/stream.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ldisj/errors.hpp"

namespace ldisj {

std::optional<Token> token_from_char(char c) {
  switch (c) {
    case '0':
      return Token::Zero;
    case '1':
      return Token::One;
    case '#':
      return Token::Hash;
    default:
      return std::nullopt;
  }
}

std::optional<Token> TokenStream::next() {
  if (cursor_ >= source_.size()) return std::nullopt;
  const auto token = token_from_char(source_[cursor_]);
  if (!token) {
    throw FormatError("character at position " + std::to_string(cursor_) +
                      " is not in {0, 1, #}");
  }
  ++cursor_;
  return token;
}

void check_word(std::string_view word) {
  const auto bad = std::find_if(word.begin(), word.end(),
                                [](char c) { return !token_from_char(c).has_value(); });
  if (bad != word.end()) {
    throw FormatError("character at position " + std::to_string(bad - word.begin()) +
                      " is not in {0, 1, #}");
  }
}

std::string read_word_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open word file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  if (text.empty() || text.back() != '\n') {
    throw FormatError("word file " + path.string() + " is not newline terminated");
  }
  text.pop_back();
  check_word(text);
  return text;
}

void write_word_file(const std::filesystem::path& path, std::string_view word) {
  check_word(word);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write word file " + path.string());
  out << word << '\n';
}

std::size_t cells_for_value(std::uint64_t max_value) {
  // smallest c with 3^c > max_value
  std::size_t cells = 0;
  boost::multiprecision::cpp_int power = 1;
  while (power <= max_value) {
    power *= 3;
    ++cells;
  }
  return cells;
}

void SpaceMeter::charge_cells(std::size_t live_cells) {
  classical_cells_peak = std::max(classical_cells_peak, live_cells);
}

void SpaceMeter::charge_qubits(std::size_t qubits) { qubits_peak = std::max(qubits_peak, qubits); }

void SpaceMeter::charge_component(std::string_view component, std::size_t live_cells) {
  auto it = component_peaks.find(component);
  if (it == component_peaks.end()) {
    component_peaks.emplace(std::string(component), live_cells);
  } else {
    it->second = std::max(it->second, live_cells);
  }
}

std::size_t SpaceMeter::component_peak(std::string_view component) const {
  const auto it = component_peaks.find(component);
  return it == component_peaks.end() ? 0 : it->second;
}

boost::multiprecision::cpp_int config_count_bound(const ConfigBoundParams& params) {
  if (params.n == 0 || params.s == 0 || params.sigma_size == 0 || params.q_size == 0) {
    throw std::invalid_argument("configuration bound parameters must be positive");
  }
  using boost::multiprecision::cpp_int;
  return cpp_int(params.n) * params.s *
         boost::multiprecision::pow(cpp_int(params.sigma_size), static_cast<unsigned>(params.s)) *
         params.q_size;
}

}  // namespace ldisj
