// SPDX-License-Identifier: Apache-2.0
#include "eds/curve_file.hpp"

#include <algorithm>
#include <fstream>
#include <regex>
#include <sstream>

#include "eds/error.hpp"

namespace eds {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void fail(std::string_view source, int line, const std::string& msg) {
  throw Error(ErrorKind::Parse, std::string(source) + ":" + std::to_string(line) + ": " + msg);
}

const std::regex kInteger(R"([+-]?[0-9]+)");
const std::regex kRational(R"(([+-]?[0-9]+)(/([+-]?[0-9]+))?)");

}  // namespace

int CurveFile::line_of(const std::string& key) const {
  auto it = key_lines.find(key);
  return it == key_lines.end() ? 0 : it->second;
}

CurveFile parse_curve_text(std::string_view text, std::string_view source) {
  CurveFile cf;
  cf.source = std::string(source);
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  std::map<std::string, std::string> values;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail(source, lineno, "expected `key = value`");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    static const char* const known[] = {"name", "a1", "a2", "a3", "a4", "a6", "px", "py", "n_max", "scan_bound_factor"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) fail(source, lineno, "unknown key `" + key + "`");
    if (values.count(key)) fail(source, lineno, "duplicate key `" + key + "`");
    if (value.empty()) fail(source, lineno, "empty value for `" + key + "`");
    values[key] = value;
    cf.key_lines[key] = lineno;
  }

  auto integer = [&](const std::string& key) {
    const auto it = values.find(key);
    if (it == values.end()) fail(source, lineno, "missing key `" + key + "`");
    if (!std::regex_match(it->second, kInteger)) fail(source, cf.line_of(key), "`" + key + "` is not an integer");
    std::string digits = it->second[0] == '+' ? it->second.substr(1) : it->second;
    return mpz_class(digits, 10);
  };
  auto rational = [&](const std::string& key) {
    const auto it = values.find(key);
    if (it == values.end()) fail(source, lineno, "missing key `" + key + "`");
    std::smatch m;
    if (!std::regex_match(it->second, m, kRational)) fail(source, cf.line_of(key), "`" + key + "` is not a rational");
    auto strip_plus = [](std::string s) { return (!s.empty() && s[0] == '+') ? s.substr(1) : s; };
    mpz_class num(strip_plus(m[1].str()), 10);
    mpz_class den = m[3].matched ? mpz_class(strip_plus(m[3].str()), 10) : mpz_class(1);
    if (den == 0) fail(source, cf.line_of(key), "zero denominator in `" + key + "`");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
  };
  auto positive = [&](const std::string& key) -> std::optional<u64> {
    if (!values.count(key)) return std::nullopt;
    const mpz_class v = integer(key);
    if (v <= 0 || !v.fits_ulong_p()) fail(source, cf.line_of(key), "`" + key + "` must be a positive 64-bit integer");
    return v.get_ui();
  };

  cf.a1 = integer("a1");
  cf.a2 = integer("a2");
  cf.a3 = integer("a3");
  cf.a4 = integer("a4");
  cf.a6 = integer("a6");
  cf.px = rational("px");
  cf.py = rational("py");
  cf.n_max = positive("n_max");
  cf.scan_bound_factor = positive("scan_bound_factor");
  if (auto it = values.find("name"); it != values.end()) cf.name = it->second;
  return cf;
}

CurveFile read_curve_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, path.string() + ":0: cannot open curve file");
  std::stringstream buf;
  buf << in.rdbuf();
  CurveFile cf = parse_curve_text(buf.str(), path.string());
  if (cf.name.empty()) cf.name = path.stem().string();
  return cf;
}

LoadedCurve open_curve(CurveFile file) {
  LoadedCurve out;
  std::optional<CurveQ> curve;
  try {
    curve.emplace(file.a1, file.a2, file.a3, file.a4, file.a6);
  } catch (const Error& e) {
    fail(file.source, file.line_of("a6"), e.what());
  }
  try {
    out.sequence = std::make_unique<EdsSequence>(*curve, PointQ::affine(file.px, file.py),
                                                 file.n_max.value_or(EdsSequence::kDefaultIndexCap), file.name);
  } catch (const Error& e) {
    fail(file.source, file.line_of("py"), e.what());
  }
  out.apparition = std::make_unique<ApparitionCache>(
      *out.sequence, file.scan_bound_factor.value_or(ApparitionCache::kDefaultScanBoundFactor));
  out.file = std::move(file);
  return out;
}

LoadedCurve open_curve_file(const std::filesystem::path& path) { return open_curve(read_curve_file(path)); }

}  // namespace eds
