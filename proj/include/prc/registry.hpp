#pragma once

// Triples (g, k, h) of noncompact spaces with two isotropy summands, loaded
// from a tab-separated table. Rows are kept as printed, with defect flags.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace prc {

enum class Family { Orthogonal, StarOrthogonal, Unitary, StarUnitary, Symplectic, RealSymplectic, Exceptional };

const char* family_name(Family f);
Family parse_family(const std::string& s);

enum Flag : unsigned {
  kEquivalentSummands = 1u << 0,
  kPrintDefect = 1u << 1,
  kDuplicateRow = 1u << 2,
};

std::string flags_string(unsigned flags);  // "-" when empty

struct TripleEntry {
  std::string label;
  std::string g, k, h;
  std::string constraint;
  Family family = Family::Orthogonal;
  unsigned flags = 0;
  int table = 0;
  std::string note;
  std::string printed;  // the row's source text

  bool has(Flag f) const { return (flags & f) != 0; }
};

class UnknownLabel : public std::out_of_range {
public:
  explicit UnknownLabel(const std::string& label) : std::out_of_range("unknown label: " + label) {}
};

class Registry {
public:
  static Registry load(const std::string& path);

  const std::vector<TripleEntry>& rows() const { return rows_; }

  // First row carrying the label; whitespace in labels is ignored.
  const TripleEntry& lookup(const std::string& label) const;
  std::vector<TripleEntry> lookup_all(const std::string& label) const;

  std::vector<TripleEntry> filter(const std::function<bool(const TripleEntry&)>& pred) const;

  std::map<int, int> table_counts() const;

private:
  std::vector<TripleEntry> rows_;
};

// table -> row count
std::map<int, int> load_manifest(const std::string& path);

// Directory holding classification.tsv and classification_manifest.tsv.
std::string default_data_dir();

}  // namespace prc
