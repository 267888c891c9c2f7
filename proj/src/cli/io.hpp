#pragma once

#include <cstdio>
#include <fstream>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "incgauss/cli.hpp"

namespace incgauss::cli::detail {

using Metadata = std::vector<std::pair<std::string, std::string>>;

inline std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string fmt(i64 v) { return std::to_string(v); }

Metadata config_metadata(const RunConfig& cfg);

// CSV with a "# key=value" comment block ahead of the header row.
class CsvWriter {
 public:
  CsvWriter(std::ostream& os, const Metadata& meta, const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& os_;
};

// File stream when path is nonempty, the fallback stream otherwise.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback);
  std::ostream& stream() { return file_ ? *file_ : fallback_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream& fallback_;
};

}  // namespace incgauss::cli::detail
