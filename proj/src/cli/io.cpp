#include "io.hpp"

#include <sstream>

namespace incgauss::cli::detail {

Metadata config_metadata(const RunConfig& cfg) {
  Metadata meta;
  meta.emplace_back("command", to_string(cfg.command));
  if (cfg.q) meta.emplace_back("q", fmt(*cfg.q));
  if (cfg.q_range) meta.emplace_back("q_range", fmt(cfg.q_range->first) + ".." + fmt(cfg.q_range->last));
  meta.emplace_back("weight", cfg.weight);
  meta.emplace_back("domain", cfg.domain);
  meta.emplace_back("trunc", fmt(cfg.trunc.value_or(kDefaultTrunc)));
  if (cfg.samples) meta.emplace_back("samples", std::to_string(*cfg.samples));
  meta.emplace_back("seed", std::to_string(cfg.seed));
  meta.emplace_back("method", cfg.fast ? "fast" : "direct");
  return meta;
}

CsvWriter::CsvWriter(std::ostream& os, const Metadata& meta, const std::vector<std::string>& columns)
    : os_(os) {
  for (const auto& [k, v] : meta) os_ << "# " << k << '=' << v << '\n';
  row(columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) os_ << ',';
    os_ << cells[i];
  }
  os_ << '\n';
}

Output::Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
  if (path.empty() || path == "-") return;
  file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
  if (!*file_) throw std::runtime_error("cannot open output file " + path);
}

}  // namespace incgauss::cli::detail
