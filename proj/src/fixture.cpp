#include "abundancy/fixture.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace abundancy {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

Fixture read_fixture(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read fixture " + path.string());
  Fixture fx;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string body = line;
    if (auto hash = body.find('#'); hash != std::string::npos) {
      fx.comments.push_back(trim(body.substr(hash + 1)));
      body.erase(hash);
    }
    body = trim(body);
    if (body.empty()) continue;
    try {
      fx.values.push_back(parse_integer(body));
    } catch (const std::invalid_argument&) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": not an integer: '" + body + "'");
    }
  }
  return fx;
}

void write_fixture(const std::filesystem::path& path, const std::vector<Integer>& values,
                   const std::vector<std::string>& header) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write fixture " + path.string());
  for (const auto& h : header) out << "# " << h << '\n';
  for (const auto& v : values) out << v.get_str() << '\n';
}

FixtureReport crosscheck_fixture(const std::vector<Integer>& stream, const Fixture& fixture) {
  FixtureReport report;
  report.compared = std::min(stream.size(), fixture.values.size());
  for (std::size_t i = 0; i < report.compared; ++i) {
    if (stream[i] != fixture.values[i]) {
      report.first_mismatch = Mismatch{i, fixture.values[i], stream[i]};
      return report;
    }
    ++report.matched;
  }
  return report;
}

FixtureReport crosscheck_fixture(const std::vector<Integer>& stream, const std::filesystem::path& path) {
  return crosscheck_fixture(stream, read_fixture(path));
}

}  // namespace abundancy
