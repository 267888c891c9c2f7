#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <json.hpp>

#include "incgauss/cli.hpp"
#include "incgauss/parallel.hpp"
#include "io.hpp"

namespace incgauss::cli {

using detail::CsvWriter;
using detail::fmt;
using detail::Metadata;
using detail::Output;
using json = nlohmann::json;

namespace {

constexpr double kFigureIntervalRight = 0.37796447300922722;  // 1/sqrt(7)

std::vector<i64> modulus_list(const RunConfig& cfg) {
  if (cfg.q_range) {
    std::vector<i64> qs;
    for (i64 q = cfg.q_range->first; q <= cfg.q_range->last; ++q) qs.push_back(q);
    return qs;
  }
  if (cfg.q) return {*cfg.q};
  throw DomainError(ErrorCode::InvalidArgument, "need --q or --q-range");
}

json metadata_json(const Metadata& meta) {
  json j = json::object();
  for (const auto& [k, v] : meta) j[k] = v;
  return j;
}

// Rows are emitted either as CSV or as a JSON object {metadata, rows}.
class TableSink {
 public:
  TableSink(const RunConfig& cfg, std::ostream& os, Metadata meta, std::vector<std::string> columns)
      : format_(cfg.format), os_(os), meta_(std::move(meta)), columns_(std::move(columns)) {
    if (format_ == OutputFormat::Csv) csv_.emplace(os_, meta_, columns_);
  }

  void row(const std::vector<std::string>& cells, const std::vector<json>& values) {
    if (csv_) {
      csv_->row(cells);
      return;
    }
    json r = json::object();
    for (std::size_t i = 0; i < columns_.size(); ++i) r[columns_[i]] = values[i];
    rows_.push_back(std::move(r));
  }

  void finish(const Metadata& extra = {}) {
    if (csv_) return;
    Metadata all = meta_;
    all.insert(all.end(), extra.begin(), extra.end());
    json doc{{"metadata", metadata_json(all)}, {"rows", rows_}};
    os_ << doc.dump(2) << '\n';
  }

 private:
  OutputFormat format_;
  std::ostream& os_;
  Metadata meta_;
  std::vector<std::string> columns_;
  std::optional<CsvWriter> csv_;
  json rows_ = json::array();
};

void write_histogram(const std::string& path, const Metadata& meta, const Histogram& h) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path);
  Metadata m = meta;
  m.emplace_back("total", fmt(static_cast<i64>(h.total)));
  m.emplace_back("underflow", fmt(static_cast<i64>(h.underflow)));
  m.emplace_back("overflow", fmt(static_cast<i64>(h.overflow)));
  CsvWriter w(os, m, {"bin_lo", "bin_hi", "count", "density"});
  for (std::size_t i = 0; i < h.counts.size(); ++i)
    w.row({fmt(h.bin_edges[i]), fmt(h.bin_edges[i + 1]), fmt(static_cast<i64>(h.counts[i])), fmt(h.density[i])});
}

std::pair<double, double> common_range(const std::vector<double>& a, const std::vector<double>& b) {
  double lo = *std::min_element(a.begin(), a.end());
  double hi = *std::max_element(a.begin(), a.end());
  if (!b.empty()) {
    lo = std::min(lo, *std::min_element(b.begin(), b.end()));
    hi = std::max(hi, *std::max_element(b.begin(), b.end()));
  }
  if (!(lo < hi)) hi = lo + 1.0;
  return {lo, std::nextafter(hi, INFINITY)};
}

std::vector<double> shifted(std::vector<double> v, double by) {
  for (auto& x : v) x -= by;
  return v;
}

}  // namespace

FigureSpec figure_spec(const std::string& name) {
  if (name == "fig1") return {"fig1", 5012, LimitVariant::GPlus, kDefaultTrunc, 300'000};
  if (name == "fig2") return {"fig2", 5013, LimitVariant::GFull, kDefaultTrunc, 300'000};
  if (name == "fig3") return {"fig3", 5014, LimitVariant::GMinus, kDefaultTruncMinus, 500'000};
  throw DomainError(ErrorCode::InvalidArgument, "unknown figure '" + name + "' (fig1 | fig2 | fig3)");
}

FigureResult run_figure(const RunConfig& cfg) {
  FigureSpec spec = figure_spec(cfg.figure);
  if (cfg.q) spec.q = *cfg.q;
  if (cfg.q) spec.variant = variant_for_modulus(spec.q);
  if (cfg.trunc) spec.trunc = *cfg.trunc;
  if (cfg.samples) spec.samples = *cfg.samples;
  const i64 coeff_cutoff = coefficient_cutoff(spec.variant, spec.trunc);
  const std::string weight_spec =
      cfg.weight == "const" ? "interval:0," + fmt(kFigureIntervalRight) : cfg.weight;
  const WeightFunction phi = parse_weight(weight_spec, coeff_cutoff);
  const DomainWindow domain = parse_domain(cfg.domain);

  const auto batch = empirical_batch(spec.q, phi, domain, {cfg.fast, cfg.threads});
  const auto values = sample_values(batch);
  const auto emp_re = real_parts(values);
  const auto emp_im = imag_parts(values);

  const auto limit = sample_limit_law(spec.variant, phi, spec.trunc, spec.samples, cfg.seed, cfg.threads);
  // Real and imaginary parts of G_minus share one law; only Im is sampled.
  const bool im_only = spec.variant == LimitVariant::GMinus;
  const auto lim_im = imag_parts(limit);
  const auto lim_re = im_only ? lim_im : real_parts(limit);

  FigureResult result;
  result.total = static_cast<i64>(batch.samples.size());
  result.mean_bin_count = static_cast<double>(result.total) / cfg.bins;
  result.ks_re = ks_distance(emp_re, lim_re);
  result.ks_im = ks_distance(emp_im, lim_im);

  const double center =
      (cfg.center == Centering::PhiHat0 && spec.variant != LimitVariant::GMinus) ? phi.coefficient(0).real() : 0.0;

  namespace fs = std::filesystem;
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  fs::create_directories(dir);
  auto file = [&](const std::string& suffix) {
    const auto p = (dir / (spec.name + "_" + suffix)).string();
    result.files.push_back(p);
    return p;
  };

  Metadata meta{{"figure", spec.name},
                {"q", fmt(spec.q)},
                {"phi_q", fmt(batch.q.phi)},
                {"weight", weight_spec},
                {"domain", cfg.domain},
                {"normalization", to_string(batch.normalization)},
                {"variant", to_string(spec.variant)},
                {"trunc", fmt(spec.trunc)},
                {"samples", std::to_string(spec.samples)},
                {"seed", std::to_string(cfg.seed)},
                {"method", cfg.fast ? "fast" : "direct"},
                {"center", center == 0.0 ? "none" : "phihat0=" + fmt(center)}};

  {
    std::ofstream os(file("samples.csv"), std::ios::binary);
    CsvWriter w(os, meta, {"p", "sigma", "re", "im"});
    for (const auto& s : batch.samples)
      w.row({fmt(s.p), s.sigma.label(), fmt(s.value.real()), fmt(s.value.imag())});
  }
  {
    std::ofstream os(file("limit.csv"), std::ios::binary);
    if (im_only) {
      CsvWriter w(os, meta, {"index", "im"});
      for (std::size_t j = 0; j < limit.size(); ++j) w.row({std::to_string(j), fmt(limit[j].imag())});
    } else {
      CsvWriter w(os, meta, {"index", "re", "im"});
      for (std::size_t j = 0; j < limit.size(); ++j)
        w.row({std::to_string(j), fmt(limit[j].real()), fmt(limit[j].imag())});
    }
  }
  {
    const auto re_c = shifted(emp_re, center);
    const auto lim_re_c = shifted(lim_re, center);
    const auto [lo, hi] = common_range(re_c, lim_re_c);
    write_histogram(file("hist_re.csv"), meta, histogram(re_c, cfg.bins, lo, hi));
    write_histogram(file("limit_hist_re.csv"), meta, histogram(lim_re_c, cfg.bins, lo, hi));
  }
  {
    const auto [lo, hi] = common_range(emp_im, lim_im);
    write_histogram(file("hist_im.csv"), meta, histogram(emp_im, cfg.bins, lo, hi));
    write_histogram(file("limit_hist_im.csv"), meta, histogram(lim_im, cfg.bins, lo, hi));
  }
  {
    json summary = metadata_json(meta);
    summary["total"] = result.total;
    summary["bins"] = cfg.bins;
    summary["mean_bin_count"] = result.mean_bin_count;
    summary["ks_re"] = result.ks_re;
    summary["ks_im"] = result.ks_im;
    summary["limit_component_for_re"] = im_only ? "im" : "re";
    std::ofstream os(file("summary.json"), std::ios::binary);
    os << summary.dump(2) << '\n';
  }
  return result;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  std::vector<std::string> names;
  if (cfg.suite == "all") names = suite_names();
  else names = {cfg.suite};
  bool ok = true;
  for (const auto& name : names) {
    const auto r = run_suite(name, cfg.inject_fault);
    out << r.name << ": " << r.scope << ": " << r.violations.size() << " violations (" << r.checks
        << " checks)\n";
    if (!r.passed()) {
      ok = false;
      const std::size_t shown = std::min<std::size_t>(r.violations.size(), 20);
      for (std::size_t i = 0; i < shown; ++i) out << "  FAIL " << r.violations[i] << '\n';
      if (shown < r.violations.size()) out << "  ... " << r.violations.size() - shown << " more\n";
    }
  }
  return ok ? 0 : 1;
}

int cmd_figure(const RunConfig& cfg, std::ostream& out) {
  const auto r = run_figure(cfg);
  out << cfg.figure << ": total=" << r.total << " mean_bin_count=" << fmt(r.mean_bin_count)
      << " ks_re=" << fmt(r.ks_re) << " ks_im=" << fmt(r.ks_im) << '\n';
  for (const auto& f : r.files) out << "  wrote " << f << '\n';
  return 0;
}

int cmd_moments(const RunConfig& cfg, std::ostream& out_fallback) {
  Output out(cfg.out, out_fallback);
  const i64 trunc = cfg.trunc.value_or(kDefaultTrunc);
  const DomainWindow domain = parse_domain(cfg.domain);
  Metadata meta = detail::config_metadata(cfg);
  meta.emplace_back("grid", fmt(kDefaultMomentGrid));
  TableSink sink(cfg, out.stream(), meta, {"q", "k", "empirical", "limit", "gap"});
  for (i64 q : modulus_list(cfg)) {
    const LimitVariant v = variant_for_modulus(q);
    const WeightFunction phi = parse_weight(cfg.weight, coefficient_cutoff(v, trunc));
    const auto batch = empirical_batch(q, phi, domain, {cfg.fast, cfg.threads});
    for (double k : cfg.k_list) {
      const double limit = limit_moment(v, phi, k, kDefaultMomentGrid, trunc);
      const auto r = moment_from_batch(batch, domain, k, limit);
      sink.row({fmt(q), fmt(k), fmt(r.empirical), fmt(r.limit), fmt(r.relative_gap)},
               {q, k, r.empirical, r.limit, r.relative_gap});
    }
  }
  sink.finish();
  return 0;
}

int cmd_expsum(const RunConfig& cfg, std::ostream& out_fallback) {
  const ExpSumKind kind = parse_expsum_kind(cfg.kind);
  const bool sweep = cfg.q_range.has_value();
  const auto qs = modulus_list(cfg);
  // Validate a single modulus before any output is produced.
  if (!sweep) {
    if (kind == ExpSumKind::TwistedKloosterman && qs[0] % 4 != 0)
      throw DomainError(ErrorCode::BadModulus, "twisted Kloosterman sum needs q = 0 mod 4");
    if (kind == ExpSumKind::Salie && qs[0] % 2 == 0)
      throw DomainError(ErrorCode::BadModulus, "Salie sum needs odd q");
  }
  Output out(cfg.out, out_fallback);
  Metadata meta{{"command", "expsum"}, {"kind", to_string(kind)}, {"m", fmt(cfg.m)}, {"n", fmt(cfg.n)}};
  TableSink sink(cfg, out.stream(), meta, {"q", "m", "n", "re", "im", "abs", "weil_bound", "ratio"});
  for (i64 q : qs) {
    if (kind == ExpSumKind::TwistedKloosterman && q % 4 != 0) continue;
    if (kind == ExpSumKind::Salie && q % 2 == 0) continue;
    const cplx v = UnitTable(analyze_modulus(q)).sum(kind, cfg.m, cfg.n);
    const double bound = weil_bound(cfg.m, cfg.n, q);
    const double ratio = std::abs(v) / bound;
    sink.row({fmt(q), fmt(cfg.m), fmt(cfg.n), fmt(v.real()), fmt(v.imag()), fmt(std::abs(v)), fmt(bound), fmt(ratio)},
             {q, cfg.m, cfg.n, v.real(), v.imag(), std::abs(v), bound, ratio});
  }
  sink.finish();
  return 0;
}

int cmd_equidist(const RunConfig& cfg, std::ostream& out_fallback) {
  const auto qs = modulus_list(cfg);
  struct Row {
    i64 q, t;
    std::string cls;
    cplx v;
  };
  std::vector<Row> rows;
  double max_abs = 0.0;
  for (i64 q : qs) {
    const Modulus mq = analyze_modulus(q);
    const auto filter = parse_sigma(cfg.sigma, mq);
    const UnitTable table(mq);
    std::vector<i64> ts;
    if (cfg.t == "all") ts = table.units();
    else ts = {std::stoll(cfg.t)};
    std::vector<cplx> values(ts.size());
    parallel_chunks(ts.size(), cfg.threads,
                    [&](std::size_t j) { values[j] = table.weyl_statistic(ts[j], cfg.m, cfg.n, filter); });
    for (std::size_t j = 0; j < ts.size(); ++j) {
      rows.push_back({q, ts[j], cfg.sigma, values[j]});
      max_abs = std::max(max_abs, std::abs(values[j]));
    }
  }
  Output out(cfg.out, out_fallback);
  Metadata meta{{"command", "equidist"}, {"m", fmt(cfg.m)}, {"n", fmt(cfg.n)}, {"class", cfg.sigma},
                {"max_abs", fmt(max_abs)}};
  TableSink sink(cfg, out.stream(), meta, {"q", "t", "m", "n", "class", "re", "im", "abs"});
  for (const auto& r : rows)
    sink.row({fmt(r.q), fmt(r.t), fmt(cfg.m), fmt(cfg.n), r.cls, fmt(r.v.real()), fmt(r.v.imag()), fmt(std::abs(r.v))},
             {r.q, r.t, cfg.m, cfg.n, r.cls, r.v.real(), r.v.imag(), std::abs(r.v)});
  sink.finish();
  return 0;
}

int cmd_batch(const RunConfig& cfg, std::ostream& out_fallback) {
  const auto qs = modulus_list(cfg);
  const i64 trunc = cfg.trunc.value_or(kDefaultTrunc);
  const DomainWindow domain = parse_domain(cfg.domain);
  Output out(cfg.out, out_fallback);
  TableSink sink(cfg, out.stream(), detail::config_metadata(cfg), {"q", "p", "sigma", "re", "im"});
  for (i64 q : qs) {
    const WeightFunction phi = parse_weight(cfg.weight, coefficient_cutoff(variant_for_modulus(q), trunc));
    const auto batch = empirical_batch(q, phi, domain, {cfg.fast, cfg.threads});
    for (const auto& s : batch.samples)
      sink.row({fmt(q), fmt(s.p), s.sigma.label(), fmt(s.value.real()), fmt(s.value.imag())},
               {q, s.p, s.sigma.label(), s.value.real(), s.value.imag()});
  }
  sink.finish();
  return 0;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::Verify: return cmd_verify(cfg, out);
      case Command::Figure: return cmd_figure(cfg, out);
      case Command::Moments: return cmd_moments(cfg, out);
      case Command::ExpSum: return cmd_expsum(cfg, out);
      case Command::Equidist: return cmd_equidist(cfg, out);
      case Command::Batch: return cmd_batch(cfg, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Incomplete Gauss sums: evaluation, exponential sums and limit-law experiments"};
  app.require_subcommand(1);
  RunConfig cfg;

  std::string q_range, k_list, center = "none", format = "csv";
  bool direct = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--q", cfg.q, "Modulus");
    sub->add_option("--q-range", q_range, "Inclusive modulus range A..B");
    sub->add_option("--weight", cfg.weight, "const | interval:a,b | fourier:PATH");
    sub->add_option("--domain", cfg.domain, "full | interval:a,b");
    sub->add_option("--trunc", cfg.trunc, "Series truncation K");
    sub->add_option("--samples", cfg.samples, "Limit-law sample count");
    sub->add_option("--seed", cfg.seed, "PRNG seed");
    sub->add_option("--bins", cfg.bins, "Histogram bins");
    sub->add_option("--center", center, "none | phihat0")->check(CLI::IsMember({"none", "phihat0"}));
    sub->add_flag("--fast", cfg.fast, "Functional-equation evaluation");
    sub->add_flag("--direct", direct, "Direct O(q) summation (default)");
    sub->add_option("--out", cfg.out, "Output path (directory for figure)");
    sub->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  };

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", cfg.suite, "closed_form | functional_eq | weil | class_counts | reduction | all");
  verify->add_flag("--inject-fault", cfg.inject_fault, "Perturb one count to exercise the failure path");

  auto* figure = app.add_subcommand("figure", "Reproduce a value-distribution figure");
  figure->add_option("which", cfg.figure, "fig1 | fig2 | fig3")->required();
  add_common(figure);

  auto* moments = app.add_subcommand("moments", "Empirical vs limit moments");
  add_common(moments);
  moments->add_option("--k", k_list, "Comma-separated moment orders");

  auto* expsum = app.add_subcommand("expsum", "Kloosterman, twisted Kloosterman and Salie sums");
  add_common(expsum);
  expsum->add_option("--kind", cfg.kind, "kloosterman | twisted | salie");
  expsum->add_option("--m", cfg.m, "m");
  expsum->add_option("--n", cfg.n, "n");
  expsum->add_option("--sweep-q", q_range, "Inclusive modulus range A..B");

  auto* equidist = app.add_subcommand("equidist", "Weyl statistics over sigma classes");
  add_common(equidist);
  equidist->add_option("--t", cfg.t, "Twist t or 'all'");
  equidist->add_option("--m", cfg.m, "m");
  equidist->add_option("--n", cfg.n, "n");
  equidist->add_option("--class", cfg.sigma, "all | 1 | -1 | i | -i");

  auto* batch = app.add_subcommand("batch", "Normalized samples for every p");
  add_common(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (!q_range.empty()) cfg.q_range = parse_range(q_range);
    if (!k_list.empty()) cfg.k_list = parse_k_list(k_list);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  cfg.center = center == "phihat0" ? Centering::PhiHat0 : Centering::None;
  cfg.format = format == "json" ? OutputFormat::Json : OutputFormat::Csv;
  if (direct) cfg.fast = false;

  if (*verify) cfg.command = Command::Verify;
  else if (*figure) cfg.command = Command::Figure;
  else if (*moments) cfg.command = Command::Moments;
  else if (*expsum) cfg.command = Command::ExpSum;
  else if (*equidist) cfg.command = Command::Equidist;
  else cfg.command = Command::Batch;
  return run(cfg, out, err);
}

}  // namespace incgauss::cli
