#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nsemi/semigroup.hpp"

namespace nsemi {

struct TableCell {
  Int lewittes = 0;
  Int set_difference = 0;
  friend bool operator==(const TableCell&, const TableCell&) = default;
};

struct TableRow {
  std::vector<Int> gens;
  std::optional<Int> genus;                // table 1 only
  std::map<Int, TableCell> published;      // keyed by q
  std::map<Int, std::string> nqg;          // published ranges, reference only
};

struct ReferenceTable {
  std::vector<Int> q_values;
  std::vector<TableRow> rows;
};

struct ReferenceTables {
  std::map<int, ReferenceTable> tables;  // keyed 1..3
};

struct Discrepancy {
  int table = 0;
  std::vector<Int> gens;
  Int q = 0;
  TableCell published;
  TableCell computed;
  std::string note;
};

ReferenceTables load_reference_tables(const std::string& path);
std::vector<Discrepancy> load_discrepancies(const std::string& path);

// One recomputed cell, classified against the published value and the
// allow-list.
struct CellResult {
  std::vector<Int> gens;
  Int q = 0;
  TableCell computed;
  TableCell published;
  bool match = false;
  bool allowlisted = false;  // mismatch present in the discrepancy file
  std::string note;
};

struct TableCheck {
  int table = 0;
  std::vector<CellResult> cells;
  int mismatches = 0;
  int unexpected = 0;  // mismatches not covered by the allow-list
};

TableCheck check_table(int which, const ReferenceTables& ref,
                       const std::vector<Discrepancy>& allow);

// Genus-8 census versus the union of tables 2 and 3: counts on both sides
// and the rows present on only one side.
struct CensusDelta {
  Int census_count = 0;
  Int listed_count = 0;
  std::vector<std::vector<Int>> missing_from_tables;  // minimal generators
  std::vector<std::vector<Int>> not_in_census;
};

CensusDelta compare_census_with_tables(const ReferenceTables& ref);

// Default data directory baked in at build time; overridable by callers.
std::string default_data_dir();

}  // namespace nsemi
