#include "nsemi/tables.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include <json.hpp>

#include "nsemi/bounds.hpp"
#include "nsemi/enumerate.hpp"
#include "nsemi/errors.hpp"

namespace nsemi {

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open data file: " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

}  // namespace

std::string default_data_dir() {
#ifdef NSEMI_DATA_DIR
  return NSEMI_DATA_DIR;
#else
  return "data";
#endif
}

ReferenceTables load_reference_tables(const std::string& path) {
  const auto j = load_json(path);
  ReferenceTables out;
  for (const auto& [key, tbl] : j.at("tables").items()) {
    ReferenceTable t;
    t.q_values = tbl.at("q").get<std::vector<Int>>();
    for (const auto& row : tbl.at("rows")) {
      TableRow r;
      r.gens = row.at("gens").get<std::vector<Int>>();
      if (row.contains("genus")) r.genus = row.at("genus").get<Int>();
      for (const auto& [qs, cell] : row.at("published").items())
        r.published[std::stoll(qs)] = {cell.at(0).get<Int>(),
                                       cell.at(1).get<Int>()};
      if (row.contains("nqg"))
        for (const auto& [qs, rng] : row.at("nqg").items())
          r.nqg[std::stoll(qs)] = rng.get<std::string>();
      t.rows.push_back(std::move(r));
    }
    out.tables[std::stoi(key)] = std::move(t);
  }
  return out;
}

std::vector<Discrepancy> load_discrepancies(const std::string& path) {
  const auto j = load_json(path);
  std::vector<Discrepancy> out;
  for (const auto& cell : j.at("cells")) {
    Discrepancy d;
    d.table = cell.at("table").get<int>();
    d.gens = cell.at("gens").get<std::vector<Int>>();
    d.q = cell.at("q").get<Int>();
    d.published = {cell.at("published").at(0).get<Int>(),
                   cell.at("published").at(1).get<Int>()};
    d.computed = {cell.at("computed").at(0).get<Int>(),
                  cell.at("computed").at(1).get<Int>()};
    d.note = cell.value("note", "");
    out.push_back(std::move(d));
  }
  return out;
}

TableCheck check_table(int which, const ReferenceTables& ref,
                       const std::vector<Discrepancy>& allow) {
  const auto it = ref.tables.find(which);
  if (it == ref.tables.end())
    throw Error("no such table: " + std::to_string(which));
  TableCheck out;
  out.table = which;
  for (const auto& row : it->second.rows) {
    const auto s = NumericalSemigroup::from_generators(row.gens);
    for (Int q : it->second.q_values) {
      CellResult cr;
      cr.gens = row.gens;
      cr.q = q;
      cr.computed = {lewittes_bound(s, q), geil_matsumoto_bound(s, q)};
      cr.published = row.published.at(q);
      cr.match = cr.computed == cr.published;
      if (!cr.match) {
        ++out.mismatches;
        const auto a = std::find_if(
            allow.begin(), allow.end(), [&](const Discrepancy& d) {
              return d.table == which && d.gens == row.gens && d.q == q &&
                     d.published == cr.published && d.computed == cr.computed;
            });
        if (a != allow.end()) {
          cr.allowlisted = true;
          cr.note = a->note;
        } else {
          ++out.unexpected;
        }
      }
      out.cells.push_back(std::move(cr));
    }
    if (row.genus && s.genus() != *row.genus) {
      CellResult cr;
      cr.gens = row.gens;
      cr.q = 0;
      cr.note = "genus recomputes to " + std::to_string(s.genus()) +
                ", published " + std::to_string(*row.genus);
      ++out.mismatches;
      ++out.unexpected;
      out.cells.push_back(std::move(cr));
    }
  }
  return out;
}

CensusDelta compare_census_with_tables(const ReferenceTables& ref) {
  CensusDelta out;
  std::set<std::vector<Int>> listed;
  for (int which : {2, 3})
    for (const auto& row : ref.tables.at(which).rows)
      listed.insert(NumericalSemigroup::from_generators(row.gens).gaps());
  out.listed_count = static_cast<Int>(listed.size());

  std::set<std::vector<Int>> census;
  GenusStream stream(8);
  while (auto s = stream.next()) {
    census.insert(s->gaps());
    if (!listed.count(s->gaps()))
      out.missing_from_tables.push_back(s->minimal_generators());
  }
  out.census_count = static_cast<Int>(census.size());
  for (int which : {2, 3}) {
    for (const auto& row : ref.tables.at(which).rows) {
      const auto s = NumericalSemigroup::from_generators(row.gens);
      if (!census.count(s.gaps())) out.not_in_census.push_back(row.gens);
    }
  }
  return out;
}

}  // namespace nsemi
