#pragma once

#include <string>

#include "splitcyc/enumerate.hpp"
#include "splitcyc/families.hpp"

namespace splitcyc {

enum class Format { Text, Csv, Json };

/// "text", "csv" or "json". Throws InvalidParameter.
Format parse_format(const std::string& name);

struct SearchReport {
  std::string embedding;
  TypeTable table;
  SearchOptions options;
  double wall_time_ms = 0;
};

inline constexpr int kReportVersion = 1;

/// With `include_run` false the wall time and worker count are left out, so
/// equal inputs give byte-identical output.
std::string render(const SearchReport& report, Format format, bool include_run = true);

std::string render(const FamilyReport& report, Format format);

}  // namespace splitcyc
