#pragma once

#include <filesystem>
#include <iosfwd>

#include "geodlab/geodesics/enumerate.hpp"

namespace geodlab::geodesics {

struct TableHeader {
  std::string surface;
  int max_word_len = 0;
  double tstar = 0.0;
};

/// GEODTABLE v1 text format: header line, one #meta line, then
/// `word;trace;length;primitive;root;q` per class.
void write_table(std::ostream& out, const GeodesicTable& table);

/// Parses and verifies a table. Every row's length is checked against its
/// trace, 100 rows chosen by a fixed-seed generator are recomputed from the
/// word, and the header is checked against the rows. Any mismatch throws
/// IntegrityError.
GeodesicTable read_table(std::istream& in);

/// Reads only the header line; throws IntegrityError if it is malformed.
TableHeader read_header(std::istream& in);

void save_table(const std::filesystem::path& path, const GeodesicTable& table);
GeodesicTable load_table(const std::filesystem::path& path);

}  // namespace geodlab::geodesics
