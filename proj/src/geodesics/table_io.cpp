#include "geodlab/geodesics/table_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "geodlab/error.hpp"
#include "geodlab/format.hpp"
#include "geodlab/rmt/rng.hpp"

namespace geodlab::geodesics {

namespace {

constexpr std::size_t kSpotChecks = 100;
constexpr double kLengthTolerance = 1e-12;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(s);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

// key=value tokens after a fixed prefix.
std::map<std::string, std::string> parse_pairs(const std::string& line, const std::string& prefix) {
  if (line.rfind(prefix, 0) != 0) throw IntegrityError("expected line starting with '" + prefix + "'");
  std::map<std::string, std::string> kv;
  std::istringstream in(line.substr(prefix.size()));
  std::string tok;
  while (in >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw IntegrityError("malformed token '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

const std::string& field(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw IntegrityError("missing field '" + key + "'");
  return it->second;
}

double to_double(const std::string& s) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw IntegrityError("malformed number '" + s + "'");
  }
  if (pos != s.size()) throw IntegrityError("malformed number '" + s + "'");
  return v;
}

long to_long(const std::string& s) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw IntegrityError("malformed integer '" + s + "'");
  }
  if (pos != s.size()) throw IntegrityError("malformed integer '" + s + "'");
  return v;
}

Int to_int(const std::string& s) {
  try {
    return parse_int(s);
  } catch (const ArgumentError& e) {
    throw IntegrityError(e.what());
  }
}

bool close(double x, double y) { return std::abs(x - y) <= kLengthTolerance * std::abs(y); }

CyclicWord canonical_word(const std::string& text) {
  std::vector<Letter> letters;
  try {
    letters = parse_letters(text);
  } catch (const ArgumentError& e) {
    throw IntegrityError(e.what());
  }
  auto w = reduce_cyclic(letters);
  if (!w || w->to_string() != text) throw IntegrityError("word '" + text + "' is not canonical");
  return *w;
}

}  // namespace

void write_table(std::ostream& out, const GeodesicTable& t) {
  out << "GEODTABLE v1 surface=" << t.model << " maxlen=" << t.max_word_len
      << " tstar=" << fmt15(t.tstar) << '\n';
  out << "#meta classes=" << t.classes.size() << " tstar_trace=" << int_to_string(t.tstar_trace)
      << " tstar_next_length=" << fmt17(t.tstar_next_length)
      << " boundary_excluded=" << t.boundary_excluded
      << " window_increasing=" << (t.window_increasing ? 1 : 0)
      << " parabolic=" << t.parabolic_classes << '\n';
  for (const auto& c : t.classes) {
    out << c.word.to_string() << ';' << int_to_string(c.trace) << ';' << fmt15(c.length) << ';'
        << (c.primitive ? 1 : 0) << ';' << c.root.to_string() << ';' << c.q << '\n';
  }
}

TableHeader read_header(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IntegrityError("empty geodesic table");
  auto kv = parse_pairs(line, "GEODTABLE v1 ");
  return {field(kv, "surface"), static_cast<int>(to_long(field(kv, "maxlen"))),
          to_double(field(kv, "tstar"))};
}

GeodesicTable read_table(std::istream& in) {
  const TableHeader header = read_header(in);
  SurfaceModel model;
  try {
    model = builtin_surface(header.surface);
  } catch (const ArgumentError& e) {
    throw IntegrityError(e.what());
  }

  std::string line;
  if (!std::getline(in, line)) throw IntegrityError("missing #meta line");
  auto meta = parse_pairs(line, "#meta ");

  GeodesicTable t;
  t.model = header.surface;
  t.max_word_len = header.max_word_len;
  t.tstar_trace = to_int(field(meta, "tstar_trace"));
  t.tstar = length_from_trace(t.tstar_trace);
  if (!close(header.tstar, t.tstar)) throw IntegrityError("header tstar disagrees with tstar_trace");
  t.tstar_next_length = to_double(field(meta, "tstar_next_length"));
  t.boundary_excluded = to_long(field(meta, "boundary_excluded"));
  t.window_increasing = to_long(field(meta, "window_increasing")) != 0;
  t.parabolic_classes = to_long(field(meta, "parabolic"));
  const long expected = to_long(field(meta, "classes"));

  std::vector<std::string> words;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split(line, ';');
    if (f.size() != 6) throw IntegrityError("row with " + std::to_string(f.size()) + " fields");
    CyclicWord w = canonical_word(f[0]);
    const Int trace = to_int(f[1]);
    if (trace <= 2 && trace >= -2) throw IntegrityError("non-hyperbolic trace in row " + f[0]);
    GeodesicClass c = make_class(w, trace);
    if (!close(to_double(f[2]), c.length)) throw IntegrityError("length/trace mismatch in row " + f[0]);
    if (to_long(f[3]) != (c.primitive ? 1 : 0) || f[4] != c.root.to_string() ||
        to_long(f[5]) != c.q) {
      throw IntegrityError("primitive root mismatch in row " + f[0]);
    }
    if (static_cast<int>(w.size()) > t.max_word_len) throw IntegrityError("row longer than maxlen");
    if (c.length > t.tstar * (1.0 + kLengthTolerance)) throw IntegrityError("row beyond tstar");
    if (!t.classes.empty()) {
      const auto& prev = t.classes.back();
      const Int pa = prev.trace < 0 ? -prev.trace : prev.trace;
      const Int ca = trace < 0 ? -trace : trace;
      if (pa > ca || (pa == ca && !(prev.word < w))) throw IntegrityError("rows out of order");
    }
    t.classes.push_back(std::move(c));
  }
  if (static_cast<long>(t.classes.size()) != expected) {
    throw IntegrityError("row count " + std::to_string(t.classes.size()) +
                         " does not match header count " + std::to_string(expected));
  }

  // Recompute traces from the words for a fixed pseudo-random subset.
  rmt::Engine engine = rmt::RngStream::for_trial(0, "geodtable_spot_check", 0).engine();
  const std::size_t n = t.classes.size();
  std::vector<std::size_t> picks(n);
  for (std::size_t i = 0; i < n; ++i) picks[i] = i;
  if (n > kSpotChecks) {
    std::shuffle(picks.begin(), picks.end(), engine);
    picks.resize(kSpotChecks);
  }
  for (std::size_t i : picks) {
    const auto& c = t.classes[i];
    if (evaluate_word(model, c.word.letters()).trace() != c.trace) {
      throw IntegrityError("spot check failed: trace of " + c.word.to_string() +
                           " does not match the stored value");
    }
  }
  return t;
}

void save_table(const std::filesystem::path& path, const GeodesicTable& table) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw ArgumentError("cannot write " + tmp);
    write_table(out, table);
  }
  std::filesystem::rename(tmp, path);
}

GeodesicTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IntegrityError("cannot read geodesic table " + path.string());
  return read_table(in);
}

}  // namespace geodlab::geodesics
