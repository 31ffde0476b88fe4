#include <chrono>
#include <ctime>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ldisj/errors.hpp"
#include "ldisj/harness.hpp"

namespace ldisj {

namespace {

struct Range {
  std::size_t low = 0;
  std::size_t high = 0;
};

// "N" or "A-B".
Range parse_range(const std::string& text, const char* flag) {
  auto parse_one = [&](const std::string& part) {
    std::size_t used = 0;
    unsigned long long value = 0;
    try {
      value = std::stoull(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size() || part.front() == '-' || part.front() == '+') {
      throw std::invalid_argument(std::string(flag) + " expects N or A-B, got '" + text + "'");
    }
    return static_cast<std::size_t>(value);
  };
  const auto dash = text.find('-');
  Range range;
  if (dash == std::string::npos) {
    range.low = range.high = parse_one(text);
  } else {
    range.low = parse_one(text.substr(0, dash));
    range.high = parse_one(text.substr(dash + 1));
  }
  if (range.low > range.high) {
    throw std::invalid_argument(std::string(flag) + " range is empty: '" + text + "'");
  }
  return range;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

struct Options {
  std::string k;
  std::string t;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  std::string input;
  std::string out;
  std::string format = "csv";
  std::string recognizer = "both";
  bool timing = false;
};

std::vector<RecognizerKind> selected_recognizers(const Options& opts) {
  if (opts.recognizer == "quantum") return {RecognizerKind::Quantum};
  if (opts.recognizer == "blockwise") return {RecognizerKind::Blockwise};
  return {RecognizerKind::Quantum, RecognizerKind::Blockwise};
}

int single_k(const Options& opts) {
  if (opts.k.empty()) throw std::invalid_argument("--k is required without --input");
  const Range range = parse_range(opts.k, "--k");
  if (range.low != range.high) throw std::invalid_argument("--k must be a single value here");
  if (range.low > static_cast<std::size_t>(kMaxRecognizerK)) {
    throw CapacityError("k = " + std::to_string(range.low) + " exceeds " +
                        std::to_string(kMaxRecognizerK));
  }
  return static_cast<int>(range.low);
}

std::size_t single_t(const Options& opts) {
  if (opts.t.empty()) return 0;
  const Range range = parse_range(opts.t, "--t");
  if (range.low != range.high) throw std::invalid_argument("--t must be a single value here");
  return range.low;
}

// The word named by --input, or a generated instance for --k/--t/--seed.
std::string source_word(const Options& opts) {
  if (!opts.input.empty()) return read_word_file(opts.input);
  return generate_instance(single_k(opts), single_t(opts), opts.seed).encode();
}

void emit(const Options& opts, std::string_view command, std::span<const ReportRow> rows,
          std::ostream& out) {
  const std::string generated = utc_timestamp();
  auto write = [&](std::ostream& stream) {
    if (opts.format == "json") {
      write_json(stream, rows, command, generated);
    } else {
      write_csv(stream, rows, "ldisj " + std::string(command) + " generated " + generated);
    }
  };
  if (opts.out.empty()) {
    write(out);
    return;
  }
  std::ofstream file(opts.out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + opts.out);
  write(file);
  out << "wrote " << rows.size() << " rows to " << opts.out << '\n';
}

int command_gen(const Options& opts, std::ostream& out) {
  const std::string word = generate_instance(single_k(opts), single_t(opts), opts.seed).encode();
  if (opts.out.empty()) {
    out << word << '\n';
  } else {
    write_word_file(opts.out, word);
  }
  return 0;
}

int command_run(const Options& opts, std::ostream& out) {
  const std::string word = source_word(opts);
  std::vector<ReportRow> rows;
  for (const auto kind : selected_recognizers(opts)) {
    TrialTally tally;
    rows.push_back(trial_row(word, kind, opts.trials, opts.seed, &tally, opts.timing));
    const auto percent = [&](std::size_t count) {
      return format_number(100.0 * static_cast<double>(count) / static_cast<double>(tally.trials));
    };
    out << recognizer_name(kind) << ": trials=" << tally.trials << " accept=" << tally.accepted
        << " (" << percent(tally.accepted) << "%)"
        << " reject[A1]=" << tally.rejected_format << " (" << percent(tally.rejected_format)
        << "%)"
        << " reject[A2]=" << tally.rejected_fingerprint << " ("
        << percent(tally.rejected_fingerprint) << "%)"
        << " reject[" << (kind == RecognizerKind::Quantum ? "A3" : "blockwise")
        << "]=" << tally.rejected_decision << " (" << percent(tally.rejected_decision) << "%)\n";
  }
  if (!opts.out.empty()) emit(opts, "run", rows, out);
  return 0;
}

int command_exact(const Options& opts, std::ostream& out) {
  const std::string word = source_word(opts);
  std::vector<ReportRow> rows;
  for (const auto kind : selected_recognizers(opts)) {
    rows.push_back(exact_row(word, kind, opts.timing));
  }
  emit(opts, "exact", rows, out);
  return 0;
}

int command_sweep(const Options& opts, std::ostream& out) {
  const Range k_range = parse_range(opts.k.empty() ? "1" : opts.k, "--k");
  std::vector<int> ks;
  for (std::size_t k = k_range.low; k <= k_range.high; ++k) {
    if (k > static_cast<std::size_t>(kMaxExactK)) {
      throw CapacityError("sweep supports k <= " + std::to_string(kMaxExactK));
    }
    ks.push_back(static_cast<int>(k));
  }
  std::optional<std::size_t> t_low;
  std::optional<std::size_t> t_high;
  if (!opts.t.empty()) {
    const Range t_range = parse_range(opts.t, "--t");
    t_low = t_range.low;
    t_high = t_range.high;
  }
  const auto kinds = selected_recognizers(opts);
  const auto rows = sweep(ks, t_low, t_high, kinds, opts.seed, opts.timing);
  emit(opts, "sweep", rows, out);
  return 0;
}

int command_space(const Options& opts, std::ostream& out) {
  const Range k_range = parse_range(opts.k.empty() ? "1-3" : opts.k, "--k");
  std::vector<ReportRow> rows;
  for (std::size_t k = k_range.low; k <= k_range.high; ++k) {
    if (k < 1 || k > static_cast<std::size_t>(kMaxRecognizerK)) {
      throw CapacityError("space supports k in [1, " + std::to_string(kMaxRecognizerK) + "]");
    }
    const std::string word = generate_instance(static_cast<int>(k), 0, opts.seed).encode();
    for (const auto kind : selected_recognizers(opts)) {
      rows.push_back(trial_row(word, kind, 1, opts.seed, nullptr, opts.timing));
    }
  }
  emit(opts, "space", rows, out);
  return 0;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Streaming disjointness recognizers: quantum search vs classical block scan"};
  app.require_subcommand(1);

  Options opts;
  auto add_common = [&](CLI::App* sub, bool with_input) {
    sub->add_option("--k", opts.k, "k, or a range A-B where accepted");
    sub->add_option("--t", opts.t, "number of collisions t, or a range A-B for sweep");
    sub->add_option("--seed", opts.seed, "seed for generation and trials");
    sub->add_option("--out", opts.out, "output path (stdout when absent)");
    sub->add_option("--format", opts.format, "report format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--timing", opts.timing, "fill the wall_ms column");
    if (with_input) sub->add_option("--input", opts.input, "word file to read");
    sub->add_option("--recognizer", opts.recognizer, "recognizers to run")
        ->check(CLI::IsMember({"quantum", "blockwise", "both"}));
  };

  auto* gen = app.add_subcommand("gen", "write an instance word");
  add_common(gen, false);
  auto* run = app.add_subcommand("run", "sampled recognition, tallies by deciding procedure");
  add_common(run, true);
  run->add_option("--trials", opts.trials, "number of trials")->check(CLI::PositiveNumber);
  auto* exact = app.add_subcommand("exact", "acceptance probability by full enumeration");
  add_common(exact, true);
  auto* sweep_cmd = app.add_subcommand("sweep", "exact probabilities against the closed form");
  add_common(sweep_cmd, false);
  auto* space = app.add_subcommand("space", "peak space of both recognizers per k");
  add_common(space, false);

  std::vector<const char*> argv{"ldisj"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 1;
  }

  try {
    if (gen->parsed()) return command_gen(opts, out);
    if (run->parsed()) return command_run(opts, out);
    if (exact->parsed()) return command_exact(opts, out);
    if (sweep_cmd->parsed()) return command_sweep(opts, out);
    if (space->parsed()) return command_space(opts, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace ldisj
