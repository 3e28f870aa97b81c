// SPDX-License-Identifier: Apache-2.0
#include "eds/cache_store.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "eds/error.hpp"

namespace eds {

namespace {

std::string curve_key(const EdsSequence& seq) {
  const CurveQ& c = seq.curve();
  const PointQ& p = seq.base_point();
  std::ostringstream os;
  os << "# curve " << c.a1().get_str() << ' ' << c.a2().get_str() << ' ' << c.a3().get_str() << ' '
     << c.a4().get_str() << ' ' << c.a6().get_str() << ' ' << p.x.get_str() << ' ' << p.y.get_str();
  return os.str();
}

std::string sanitize(const std::string& name) {
  std::string out;
  for (char ch : name) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || (ch >= '0' && ch <= '9') || ch == '-' ||
                    ch == '_';
    out += ok ? ch : '_';
  }
  return out.empty() ? "curve" : out;
}

}  // namespace

std::optional<std::filesystem::path> cache_path_from_env(const std::string& curve_name) {
  const char* dir = std::getenv("EDS_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  return std::filesystem::path(dir) / (sanitize(curve_name) + ".cache");
}

std::size_t load_cache(const std::filesystem::path& path, EdsSequence& seq, ApparitionCache& cache) {
  std::ifstream in(path);
  if (!in) return 0;
  std::string line;
  if (!std::getline(in, line) || line != curve_key(seq)) return 0;
  std::size_t imported = 0;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorKind::Parse, path.string() + ":" + std::to_string(lineno) + ": expected key<TAB>value");
    }
    std::string key = line.substr(0, tab);
    const std::string value = line.substr(tab + 1);
    try {
      if (key.rfind("rank:", 0) == 0) {
        cache.import_rank(std::stoull(key.substr(5)), std::stoull(value));
      } else {
        const u64 n = std::stoull(key);
        if (n == 0 || n > seq.index_cap()) continue;
        seq.import_term(n, mpz_class(value, 10));
      }
    } catch (const std::invalid_argument&) {
      throw Error(ErrorKind::Parse, path.string() + ":" + std::to_string(lineno) + ": malformed entry");
    }
    ++imported;
  }
  return imported;
}

void save_cache(const std::filesystem::path& path, const EdsSequence& seq, const ApparitionCache& cache) {
  std::filesystem::create_directories(path.parent_path());
  // Write then rename so a concurrent reader never sees a torn file.
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write cache file " + tmp.string());
    out << curve_key(seq) << '\n';
    for (const auto& [n, value] : seq.computed_terms()) out << n << '\t' << value.get_str() << '\n';
    for (const auto& [n, r] : cache.cached_ranks()) out << "rank:" << n << '\t' << r << '\n';
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace eds
