#include <cmath>
#include <fstream>
#include <sstream>

#include "incgauss/cli.hpp"

namespace incgauss::cli {

namespace {
DomainError usage(const std::string& what) { return DomainError(ErrorCode::InvalidArgument, what); }

std::pair<double, double> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw usage("expected a,b but got '" + text + "'");
  try {
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw usage("cannot parse numbers in '" + text + "'");
  }
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  const auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
}
}  // namespace

std::string to_string(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Figure: return "figure";
    case Command::Moments: return "moments";
    case Command::ExpSum: return "expsum";
    case Command::Equidist: return "equidist";
    case Command::Batch: return "batch";
  }
  return "?";
}

QRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const i64 q = std::stoll(text);
      return {q, q};
    }
    const QRange r{std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2))};
    if (r.first < 1 || r.last < r.first) throw usage("empty range '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw usage("expected A..B but got '" + text + "'");
  }
}

CoefficientMap read_fourier_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage("cannot read Fourier coefficient file " + path);
  CoefficientMap coeffs;
  std::string line;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    std::stringstream ss(line);
    std::string k, re, im;
    if (!std::getline(ss, k, ',') || !std::getline(ss, re, ',')) throw usage("bad coefficient row '" + line + "'");
    std::getline(ss, im, ',');
    try {
      const i64 idx = std::stoll(k);
      coeffs[idx] += cplx(std::stod(re), im.empty() ? 0.0 : std::stod(im));
    } catch (const std::logic_error&) {
      if (coeffs.empty() && k.find_first_of("0123456789") == std::string::npos) continue;  // header
      throw usage("bad coefficient row '" + line + "'");
    }
  }
  return coeffs;
}

WeightFunction parse_weight(const std::string& spec, i64 coefficient_cutoff) {
  if (spec == "const") return WeightFunction::constant();
  if (spec.rfind("interval:", 0) == 0) {
    const auto [a, b] = parse_pair(spec.substr(9));
    return WeightFunction::indicator(a, b, coefficient_cutoff);
  }
  if (spec.rfind("fourier:", 0) == 0) return WeightFunction::fourier(read_fourier_csv(spec.substr(8)));
  throw usage("unknown weight '" + spec + "' (const | interval:a,b | fourier:PATH)");
}

DomainWindow parse_domain(const std::string& spec) {
  if (spec == "full") return DomainWindow::full();
  if (spec.rfind("interval:", 0) == 0) {
    const auto [a, b] = parse_pair(spec.substr(9));
    return DomainWindow::interval(a, b);
  }
  throw usage("unknown domain '" + spec + "' (full | interval:a,b)");
}

ExpSumKind parse_expsum_kind(const std::string& text) {
  if (text == "kloosterman") return ExpSumKind::Kloosterman;
  if (text == "twisted") return ExpSumKind::TwistedKloosterman;
  if (text == "salie") return ExpSumKind::Salie;
  throw usage("unknown sum kind '" + text + "' (kloosterman | twisted | salie)");
}

std::vector<double> parse_k_list(const std::string& text) {
  std::vector<double> ks;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    double k = 0.0;
    try {
      k = std::stod(item);
    } catch (const std::logic_error&) {
      throw usage("bad moment order '" + item + "'");
    }
    if (!(k >= 0.0)) throw usage("moment order must be nonnegative: " + item);
    ks.push_back(k);
  }
  if (ks.empty()) throw usage("empty moment list");
  return ks;
}

std::optional<SigmaClass> parse_sigma(const std::string& text, const Modulus& q) {
  if (text == "all") return std::nullopt;
  int re = 0, im = 0;
  if (text == "1") re = 1;
  else if (text == "-1") re = -1;
  else if (text == "i") im = 1;
  else if (text == "-i") im = -1;
  else throw usage("unknown class '" + text + "' (all | 1 | -1 | i | -i)");

  if (q.q_mod4 == 0 && !q.is_square) return SigmaClass::quarter(re, im);
  if (im != 0) throw usage("class " + text + " only exists for non-square q = 0 mod 4");
  if (q.q_mod4 == 0) return SigmaClass::mod4(re);
  const bool square = q.q_mod4 == 2 ? is_perfect_square(q.q / 2) : q.is_square;
  if (square) throw usage("q = " + std::to_string(q.q) + " carries no sigma classes");
  return SigmaClass::half(re);
}

i64 coefficient_cutoff(LimitVariant v, i64 trunc) { return v == LimitVariant::GPlus ? 2 * trunc : trunc; }

}  // namespace incgauss::cli
