#include "gpgame/report.hpp"

#include <algorithm>

#include <json.hpp>

#include "gpgame/errors.hpp"

namespace gpgame {

bool SuiteReport::pass() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const SuiteCase& c) { return c.pass(); });
}

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(),
                    [](const SuiteCase& c) { return !c.pass(); }));
}

std::optional<Format> format_from_string(std::string_view s) {
  if (s == "text") return Format::kText;
  if (s == "json") return Format::kJson;
  if (s == "csv") return Format::kCsv;
  return std::nullopt;
}

std::string render_text(const std::vector<SuiteReport>& reports) {
  std::string out;
  std::size_t total = 0;
  std::size_t failed = 0;
  for (const auto& report : reports) {
    out += "suite " + report.suite + " (seed " + std::to_string(report.seed) +
           ")\n";
    std::size_t name_width = 4;
    for (const auto& c : report.cases) {
      name_width = std::max(name_width, c.name.size());
    }
    for (const auto& c : report.cases) {
      out += c.pass() ? "  ok   " : "  FAIL ";
      out += c.name;
      out.append(name_width - c.name.size() + 2, ' ');
      out += c.rule + "  expected=" + c.expected + " computed=" + c.computed +
             " states=" + std::to_string(c.states) + " ms=" +
             std::to_string(c.ms) + "\n";
    }
    total += report.cases.size();
    failed += report.failures();
    out += "  " + std::to_string(report.cases.size() - report.failures()) +
           "/" + std::to_string(report.cases.size()) + " passed\n";
  }
  if (reports.size() > 1) {
    out += "total: " + std::to_string(total - failed) + "/" +
           std::to_string(total) + " passed\n";
  }
  return out;
}

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += "\"\"";
    else quoted.push_back(c);
  }
  quoted += "\"";
  return quoted;
}

}  // namespace

std::string render_csv(const std::vector<SuiteReport>& reports) {
  std::string out = "suite,case,rule,expected,computed,states,ms\n";
  for (const auto& report : reports) {
    for (const auto& c : report.cases) {
      out += csv_field(report.suite) + "," + csv_field(c.name) + "," +
             csv_field(c.rule) + "," + csv_field(c.expected) + "," +
             csv_field(c.computed) + "," + std::to_string(c.states) + "," +
             std::to_string(c.ms) + "\n";
    }
  }
  return out;
}

std::string render_json(const std::vector<SuiteReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& report : reports) {
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : report.cases) {
      cases.push_back({{"case", c.name},
                       {"rule", c.rule},
                       {"expected", c.expected},
                       {"computed", c.computed},
                       {"states", c.states},
                       {"ms", c.ms}});
    }
    out.push_back({{"suite", report.suite},
                   {"seed", report.seed},
                   {"pass", report.pass()},
                   {"cases", std::move(cases)}});
  }
  return out.dump(2) + "\n";
}

std::vector<SuiteReport> reports_from_json(const std::string& text) {
  nlohmann::json parsed;
  try {
    parsed = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("valid report JSON (") + e.what() + ")");
  }
  std::vector<SuiteReport> reports;
  try {
    for (const auto& item : parsed) {
      SuiteReport report;
      report.suite = item.at("suite").get<std::string>();
      report.seed = item.at("seed").get<std::uint64_t>();
      for (const auto& c : item.at("cases")) {
        SuiteCase sc;
        sc.name = c.at("case").get<std::string>();
        sc.rule = c.at("rule").get<std::string>();
        sc.expected = c.at("expected").get<std::string>();
        sc.computed = c.at("computed").get<std::string>();
        sc.states = c.at("states").get<std::uint64_t>();
        sc.ms = c.at("ms").get<std::uint64_t>();
        report.cases.push_back(std::move(sc));
      }
      reports.push_back(std::move(report));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("report fields (") + e.what() + ")");
  }
  return reports;
}

}  // namespace gpgame
