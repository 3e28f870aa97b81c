// SPDX-License-Identifier: Apache-2.0
//
// Term/rank persistence under $EDS_CACHE_DIR, one file per curve:
//
//   # curve <a1> <a2> <a3> <a4> <a6> <px> <py>
//   5<TAB>2
//   rank:10<TAB>40
//
// A file whose curve line does not match is ignored and overwritten on save.
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "eds/apparition.hpp"
#include "eds/eds_core.hpp"

namespace eds {

/// $EDS_CACHE_DIR/<name>.cache, or nullopt when the variable is unset or empty.
std::optional<std::filesystem::path> cache_path_from_env(const std::string& curve_name);

/// Returns the number of entries imported; a missing file imports nothing.
std::size_t load_cache(const std::filesystem::path& path, EdsSequence& seq, ApparitionCache& cache);
void save_cache(const std::filesystem::path& path, const EdsSequence& seq, const ApparitionCache& cache);

}  // namespace eds
