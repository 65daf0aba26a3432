#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gpgame {

struct SuiteCase {
  std::string name;      // family expression or check label
  std::string rule;      // "achievement", "avoidance", or "-" for non-games
  std::string expected;
  std::string computed;
  std::uint64_t states = 0;
  std::uint64_t ms = 0;

  bool pass() const { return expected == computed; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 1;
  std::vector<SuiteCase> cases;

  bool pass() const;
  std::size_t failures() const;
};

enum class Format { kText, kJson, kCsv };

std::optional<Format> format_from_string(std::string_view s);

std::string render_text(const std::vector<SuiteReport>& reports);
// Header row "suite,case,rule,expected,computed,states,ms"; fields are
// quoted when they contain commas or quotes.
std::string render_csv(const std::vector<SuiteReport>& reports);
std::string render_json(const std::vector<SuiteReport>& reports);

// Inverse of render_json (field-exact round trip).
std::vector<SuiteReport> reports_from_json(const std::string& text);

}  // namespace gpgame
