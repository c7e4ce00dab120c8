#pragma once

#include <filesystem>
#include <string>

#include "geodlab/geodesics/enumerate.hpp"

namespace geodlab::lab {

/// $GEODLAB_CACHE_DIR if set, else ./.geodlab_cache.
std::filesystem::path cache_dir();

std::filesystem::path table_cache_path(const std::filesystem::path& dir,
                                       const std::string& surface, int max_word_len);

/// 64-bit FNV-1a of a file's bytes as 16 hex digits.
std::string file_hash(const std::filesystem::path& path);

struct CachedTable {
  geodesics::GeodesicTable table;
  std::filesystem::path path;
  std::string hash;
  bool rebuilt = false;
};

/// Loads the cached table for (surface, L) if its header matches the request,
/// otherwise builds and saves it. A file whose header matches but whose body
/// fails verification raises IntegrityError; it is never silently replaced.
CachedTable cache_table(const std::string& surface, int max_word_len,
                        const std::filesystem::path& dir, unsigned workers = 0);

}  // namespace geodlab::lab
