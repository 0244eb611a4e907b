#pragma once

// Sequence fixture files: one integer per line, '#' starts a comment, and a
// header comment records the command that generated the file.

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "abundancy/integer.hpp"

namespace abundancy {

struct Fixture {
  std::vector<std::string> comments;
  std::vector<Integer> values;
};

/// Throws std::runtime_error for unreadable files or ill-formed lines.
Fixture read_fixture(const std::filesystem::path& path);

void write_fixture(const std::filesystem::path& path, const std::vector<Integer>& values,
                   const std::vector<std::string>& header);

struct Mismatch {
  std::size_t index = 0;
  Integer expected;
  Integer actual;
};

struct FixtureReport {
  /// Leading entries that agree.
  std::size_t matched = 0;
  /// Entries compared (the shorter of the two prefixes).
  std::size_t compared = 0;
  std::optional<Mismatch> first_mismatch;

  bool ok() const { return !first_mismatch.has_value(); }
};

/// Compares the common prefix of a computed stream and a fixture.
FixtureReport crosscheck_fixture(const std::vector<Integer>& stream, const Fixture& fixture);
FixtureReport crosscheck_fixture(const std::vector<Integer>& stream, const std::filesystem::path& path);

}  // namespace abundancy
