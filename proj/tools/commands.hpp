#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cellcrystal/cellcrystal.hpp"

namespace cellcrystal::cli {

using nlohmann::json;

/// Thrown for bad flags, malformed elements and unknown names; maps to exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Everything a command may read. Flags and the JSON config file fill the
/// same fields; flags win.
struct JobConfig {
  std::string type;
  std::string word;     // empty: the canonical longest word
  int height = -1;      // -1: command default
  int radius = -1;      // -1: command default
  std::optional<std::int64_t> bound;
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::string suite;
  std::string out;
  std::string element;
  std::string other;
  std::string ops;
  std::string target;
  int box = 6;
  std::string action;
};

/// Resolves type and word; the word defaults to the canonical longest word.
Word resolve_word(const JobConfig& cfg);

/// Accepts "1,3,2", "[1,3,2]" or {"type":..,"word":[..],"coords":[..]}; the
/// object form must agree with `word`.
CellElem parse_element(const std::string& text, const Word& word);

json element_json(const Word& word, const CellElem& x);
json weight_json(const Weight& w);

/// Runs `fn(table)` with a B(∞) table of at least `height`, doubling the
/// height on TableTooSmall.
template <class Fn>
auto with_table(const CellCrystal& crystal, int height, Fn&& fn) {
  constexpr int kMaxHeight = 160;
  for (int h = height;; h *= 2) {
    auto table = std::make_shared<const BinfTable>(BinfTable::generate(crystal, h));
    try {
      return fn(table);
    } catch (const TableTooSmall&) {
      if (h * 2 > kMaxHeight) throw;
    }
  }
}

json cmd_hbasis(const JobConfig& cfg);
json cmd_act(const JobConfig& cfg);
json cmd_braid(const JobConfig& cfg);
json cmd_binf(const JobConfig& cfg);
json cmd_decompose(const JobConfig& cfg);
json cmd_loc(const JobConfig& cfg);
std::string cmd_graph(const JobConfig& cfg);

struct SuiteResult {
  bool passed = false;
  json report;
};

const std::vector<std::string>& suite_names();
/// Throws UsageError for an unknown suite.
SuiteResult cmd_verify(const JobConfig& cfg);

/// The whole command line. Returns the process exit code: 0 success,
/// 1 verification failure or runtime error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cellcrystal::cli
