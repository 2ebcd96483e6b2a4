#include "prc/registry.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#ifndef PRC_DATA_DIR
#define PRC_DATA_DIR "data"
#endif

namespace prc {

namespace {

const char* const kFamilyNames[] = {"orthogonal", "star-orthogonal", "unitary", "star-unitary",
                                    "symplectic", "real-symplectic", "exceptional"};

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream is(line);
  while (std::getline(is, cell, '\t')) out.push_back(cell);
  if (!line.empty() && line.back() == '\t') out.emplace_back();
  return out;
}

std::string squeeze(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

unsigned parse_flags(const std::string& s) {
  unsigned f = 0;
  if (s == "-" || s.empty()) return f;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok == "equivalent_summands") f |= kEquivalentSummands;
    else if (tok == "print_defect") f |= kPrintDefect;
    else if (tok == "duplicate_row") f |= kDuplicateRow;
    else throw std::runtime_error("registry: unknown flag '" + tok + "'");
  }
  return f;
}

std::string dash_empty(const std::string& s) { return s == "-" ? std::string() : s; }

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return in;
}

}  // namespace

const char* family_name(Family f) { return kFamilyNames[static_cast<int>(f)]; }

Family parse_family(const std::string& s) {
  for (int i = 0; i < 7; ++i)
    if (s == kFamilyNames[i]) return static_cast<Family>(i);
  throw std::invalid_argument("unknown family: " + s);
}

std::string flags_string(unsigned flags) {
  std::string out;
  auto add = [&](const char* name) {
    if (!out.empty()) out += ',';
    out += name;
  };
  if (flags & kEquivalentSummands) add("equivalent_summands");
  if (flags & kPrintDefect) add("print_defect");
  if (flags & kDuplicateRow) add("duplicate_row");
  return out.empty() ? "-" : out;
}

Registry Registry::load(const std::string& path) {
  std::ifstream in = open(path);
  Registry reg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 || line.empty()) continue;  // header
    const auto cells = split_tabs(line);
    if (cells.size() != 10)
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 10 columns, got " +
                               std::to_string(cells.size()));
    TripleEntry e;
    e.label = cells[0];
    e.g = cells[1];
    e.k = cells[2];
    e.h = cells[3];
    e.constraint = cells[4];
    e.family = parse_family(cells[5]);
    e.flags = parse_flags(cells[6]);
    e.table = std::stoi(cells[7]);
    e.note = dash_empty(cells[8]);
    e.printed = cells[9];
    if (e.label.empty()) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": empty label");
    reg.rows_.push_back(std::move(e));
  }
  return reg;
}

const TripleEntry& Registry::lookup(const std::string& label) const {
  const std::string key = squeeze(label);
  for (const auto& e : rows_)
    if (squeeze(e.label) == key) return e;
  throw UnknownLabel(label);
}

std::vector<TripleEntry> Registry::lookup_all(const std::string& label) const {
  const std::string key = squeeze(label);
  return filter([&](const TripleEntry& e) { return squeeze(e.label) == key; });
}

std::vector<TripleEntry> Registry::filter(const std::function<bool(const TripleEntry&)>& pred) const {
  std::vector<TripleEntry> out;
  std::copy_if(rows_.begin(), rows_.end(), std::back_inserter(out), pred);
  return out;
}

std::map<int, int> Registry::table_counts() const {
  std::map<int, int> out;
  for (const auto& e : rows_) ++out[e.table];
  return out;
}

std::map<int, int> load_manifest(const std::string& path) {
  std::ifstream in = open(path);
  std::map<int, int> out;
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split_tabs(line);
    if (cells.size() != 2) throw std::runtime_error(path + ": malformed manifest line: " + line);
    out[std::stoi(cells[0])] = std::stoi(cells[1]);
  }
  return out;
}

std::string default_data_dir() { return PRC_DATA_DIR; }

}  // namespace prc
