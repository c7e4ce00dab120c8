#include "geodlab/lab/cache.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>

#include "geodlab/error.hpp"
#include "geodlab/geodesics/table_io.hpp"
#include "geodlab/rmt/rng.hpp"

namespace geodlab::lab {

std::filesystem::path cache_dir() {
  if (const char* env = std::getenv("GEODLAB_CACHE_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return ".geodlab_cache";
}

std::filesystem::path table_cache_path(const std::filesystem::path& dir,
                                       const std::string& surface, int max_word_len) {
  return dir / (surface + "_L" + std::to_string(max_word_len) + ".geodtable");
}

std::string file_hash(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IntegrityError("cannot read " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(rmt::tag_hash(bytes)));
  return buf;
}

CachedTable cache_table(const std::string& surface, int max_word_len,
                        const std::filesystem::path& dir, unsigned workers) {
  CachedTable out;
  out.path = table_cache_path(dir, surface, max_word_len);
  if (std::filesystem::exists(out.path)) {
    bool header_matches = false;
    {
      std::ifstream in(out.path);
      try {
        const auto header = geodesics::read_header(in);
        header_matches = header.surface == surface && header.max_word_len == max_word_len;
      } catch (const IntegrityError&) {
        header_matches = false;
      }
    }
    if (header_matches) {
      out.table = geodesics::load_table(out.path);
      out.hash = file_hash(out.path);
      return out;
    }
  }
  out.table = geodesics::enumerate_classes(geodesics::builtin_surface(surface), max_word_len,
                                           workers);
  geodesics::save_table(out.path, out.table);
  out.hash = file_hash(out.path);
  out.rebuilt = true;
  return out;
}

}  // namespace geodlab::lab
