#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace ldisj {

// Input alphabet {0, 1, #}.
enum class Token : char { Zero = '0', One = '1', Hash = '#' };

std::optional<Token> token_from_char(char c);
constexpr bool is_bit(Token t) { return t != Token::Hash; }
constexpr int bit_value(Token t) { return t == Token::One ? 1 : 0; }

// One-way reader over a word. The cursor only moves right; once the end is
// reached every further call returns std::nullopt. Does not own the text.
class TokenStream {
 public:
  explicit TokenStream(std::string_view source) : source_(source) {}

  // Throws FormatError when the next character is not in the alphabet.
  std::optional<Token> next();

  std::size_t position() const { return cursor_; }
  std::size_t size() const { return source_.size(); }
  bool exhausted() const { return cursor_ >= source_.size(); }

 private:
  std::string_view source_;
  std::size_t cursor_ = 0;
};

// Word files hold one line over {0, 1, #}, newline terminated.
std::string read_word_file(const std::filesystem::path& path);
void write_word_file(const std::filesystem::path& path, std::string_view word);
// Throws FormatError if `word` contains a character outside the alphabet.
void check_word(std::string_view word);

// Ternary work cells needed for a counter whose value never exceeds
// max_value: ceil(log3(max_value + 1)).
std::size_t cells_for_value(std::uint64_t max_value);

// Peak space of a run. classical_cells_peak is the simultaneous total over all
// procedures; component peaks break the same charges down by procedure name.
struct SpaceMeter {
  std::size_t classical_cells_peak = 0;
  std::size_t qubits_peak = 0;
  std::size_t input_length = 0;
  std::map<std::string, std::size_t, std::less<>> component_peaks;

  void charge_cells(std::size_t live_cells);
  void charge_qubits(std::size_t qubits);
  void charge_component(std::string_view component, std::size_t live_cells);
  std::size_t component_peak(std::string_view component) const;
};

// Inputs to the configuration-count bound n * s * |Sigma|^s * |Q|.
struct ConfigBoundParams {
  std::uint64_t n = 1;
  std::uint64_t s = 1;
  std::uint64_t sigma_size = 3;
  std::uint64_t q_size = 1;
};

boost::multiprecision::cpp_int config_count_bound(const ConfigBoundParams& params);

}  // namespace ldisj
