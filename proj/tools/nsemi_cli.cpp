// nsemi: numerical-semigroup place bounds, genus enumeration, telescopic and
// tower diagnostics. See README.md for the command reference.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsemi/bounds.hpp"
#include "nsemi/enumerate.hpp"
#include "nsemi/errors.hpp"
#include "nsemi/tables.hpp"
#include "nsemi/telescopic.hpp"
#include "nsemi/tower.hpp"

namespace {

using nsemi::Int;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitResource = 4;
constexpr int kFormatVersion = 1;

struct Options {
  std::string format = "text";
  std::string out_file;
  std::string data_dir = nsemi::default_data_dir();
};

std::ostream& open_sink(const Options& opt, std::ofstream& file) {
  if (opt.out_file.empty()) return std::cout;
  file.open(opt.out_file);
  if (!file) throw nsemi::Error("cannot open output file: " + opt.out_file);
  return file;
}

std::vector<Int> parse_gens(const std::string& text) {
  std::vector<Int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &pos);
    } catch (const std::exception&) {
      throw nsemi::Error("bad generator '" + item + "'");
    }
    if (pos != item.size()) throw nsemi::Error("bad generator '" + item + "'");
    if (v < 1) throw nsemi::Error("generators must be positive");
    if (!out.empty() && v <= out.back())
      throw nsemi::Error("generators must be strictly ascending, no duplicates");
    out.push_back(v);
  }
  if (out.empty()) throw nsemi::Error("empty generator list");
  return out;
}

bool is_prime_power(Int q) {
  for (Int p = 2; p * p <= q; ++p) {
    if (q % p == 0) {
      while (q % p == 0) q /= p;
      return q == 1;
    }
  }
  return q > 1;  // prime
}

std::string rat(const nsemi::Rational& r) { return nsemi::to_string(r); }

json gens_json(const std::vector<Int>& g) { return json(g); }

void render_scalar_record(const json& record, const Options& opt,
                          std::ostream& os) {
  if (opt.format == "json") {
    os << record.dump(2) << "\n";
    return;
  }
  // text and csv are flat projections of the results object
  const auto& results = record.at("results");
  if (opt.format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : results.items())
      os << k << "," << (v.is_string() ? v.get<std::string>() : v.dump())
         << "\n";
    return;
  }
  os << record.at("command").get<std::string>() << "\n";
  for (const auto& [k, v] : results.items())
    os << "  " << k << " = "
       << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& n : record.value("notes", json::array()))
    os << "  note: " << n.get<std::string>() << "\n";
}

// ---- subcommands -----------------------------------------------------------

int cmd_bound(const Options& opt, const std::string& gens_text, Int q,
              std::optional<Int> n_prime) {
  auto gens = parse_gens(gens_text);
  if (q < 2) throw nsemi::Error("q must be at least 2");
  auto s = nsemi::NumericalSemigroup::from_generators(gens);
  auto rep = nsemi::full_report(s, q, n_prime);

  json record;
  record["format_version"] = kFormatVersion;
  record["command"] = "bound";
  record["input"] = {{"gens", gens_json(gens)}, {"q", q}};
  if (n_prime) record["input"]["n_prime"] = *n_prime;
  json results;
  results["multiplicity"] = s.multiplicity();
  results["genus"] = s.genus();
  results["conductor"] = s.conductor();
  results["lewittes"] = rep.lewittes;
  results["geil_matsumoto"] = rep.geil_matsumoto;
  results["t"] = rep.t_value;
  results["t_bound"] = rep.t_bound;
  if (rep.sharpened) results["sharpened"] = *rep.sharpened;
  results["serre"] = rep.serre;
  results["coincide"] = rep.coincide.coincide;
  results["coincide_reason"] = rep.coincide.reason;
  results["witness"] = json(rep.witness);
  record["results"] = std::move(results);
  json notes = json::array();
  if (!is_prime_power(q))
    notes.push_back("q = " + std::to_string(q) +
                    " is not a prime power; values are combinatorial only");
  record["notes"] = std::move(notes);

  std::ofstream file;
  render_scalar_record(record, opt, open_sink(opt, file));
  return kExitOk;
}

int cmd_table(const Options& opt, int which) {
  auto ref = nsemi::load_reference_tables(opt.data_dir + "/reference_tables.json");
  auto allow =
      nsemi::load_discrepancies(opt.data_dir + "/table_discrepancies.json");
  auto check = nsemi::check_table(which, ref, allow);

  std::ofstream file;
  std::ostream& os = open_sink(opt, file);
  if (opt.format == "json") {
    json record;
    record["format_version"] = kFormatVersion;
    record["command"] = "table";
    record["input"] = {{"which", which}};
    json cells = json::array();
    for (const auto& c : check.cells) {
      json jc;
      jc["gens"] = gens_json(c.gens);
      jc["q"] = c.q;
      jc["computed"] = {c.computed.lewittes, c.computed.set_difference};
      jc["published"] = {c.published.lewittes, c.published.set_difference};
      jc["match"] = c.match;
      jc["allowlisted"] = c.allowlisted;
      if (!c.note.empty()) jc["note"] = c.note;
      cells.push_back(std::move(jc));
    }
    record["results"] = {{"cells", std::move(cells)},
                         {"mismatches", check.mismatches},
                         {"unexpected", check.unexpected}};
    os << record.dump(2) << "\n";
  } else {
    const char sep = opt.format == "csv" ? ',' : ' ';
    if (opt.format == "csv")
      os << "gens,q,computed,published,status\n";
    for (const auto& c : check.cells) {
      std::string gens;
      for (std::size_t i = 0; i < c.gens.size(); ++i)
        gens += (i ? "." : "") + std::to_string(c.gens[i]);
      std::string status =
          c.match ? "ok" : (c.allowlisted ? "known-discrepancy" : "MISMATCH");
      os << gens << sep << c.q << sep << c.computed.lewittes << "/"
         << c.computed.set_difference << sep << c.published.lewittes << "/"
         << c.published.set_difference << sep << status;
      if (!c.note.empty() && opt.format != "csv") os << sep << "(" << c.note << ")";
      os << "\n";
    }
    os << "mismatches: " << check.mismatches
       << " (unexpected: " << check.unexpected << ")\n";
  }
  return check.unexpected == 0 ? kExitOk : kExitMismatch;
}

int cmd_enumerate(const Options& opt, Int genus) {
  nsemi::GenusStream stream(genus);
  std::ofstream file;
  std::ostream& os = open_sink(opt, file);
  if (opt.format == "csv") os << "gens,genus,conductor,gaps\n";
  while (auto s = stream.next()) {
    if (opt.format == "json") {
      json row;
      row["gens"] = gens_json(s->generators());
      row["genus"] = s->genus();
      row["conductor"] = s->conductor();
      row["gaps"] = json(s->gaps());
      os << row.dump() << "\n";
    } else if (opt.format == "csv") {
      auto join = [](const std::vector<Int>& v) {
        std::string out;
        for (std::size_t i = 0; i < v.size(); ++i)
          out += (i ? " " : "") + std::to_string(v[i]);
        return out;
      };
      os << join(s->generators()) << "," << s->genus() << ","
         << s->conductor() << "," << join(s->gaps()) << "\n";
    } else {
      os << "<";
      const auto& g = s->generators();
      for (std::size_t i = 0; i < g.size(); ++i)
        os << (i ? "," : "") << g[i];
      os << ">  genus=" << s->genus() << "  conductor=" << s->conductor()
         << "  gaps={";
      const auto gaps = s->gaps();
      for (std::size_t i = 0; i < gaps.size(); ++i)
        os << (i ? "," : "") << gaps[i];
      os << "}\n";
    }
  }
  return kExitOk;
}

int cmd_exclude(const Options& opt, Int genus, Int q, Int n_target,
                const std::string& method) {
  const auto m = method == "lewittes" ? nsemi::BoundMethod::lewittes
                                      : nsemi::BoundMethod::geil_matsumoto;
  auto excluded = nsemi::excluded_semigroups(genus, q, n_target, m);

  json record;
  record["format_version"] = kFormatVersion;
  record["command"] = "exclude";
  record["input"] = {{"genus", genus}, {"q", q}, {"n_target", n_target},
                     {"method", method}};
  json list = json::array();
  for (const auto& s : excluded) list.push_back(gens_json(s.generators()));
  record["results"] = {{"count", excluded.size()},
                       {"excluded", std::move(list)}};

  std::ofstream file;
  std::ostream& os = open_sink(opt, file);
  if (opt.format == "json") {
    os << record.dump(2) << "\n";
  } else {
    for (const auto& s : excluded) {
      os << "<";
      const auto& g = s.generators();
      for (std::size_t i = 0; i < g.size(); ++i)
        os << (i ? "," : "") << g[i];
      os << ">\n";
    }
    os << "count: " << excluded.size() << "\n";
  }
  return kExitOk;
}

int cmd_tower(const Options& opt, Int q, Int i_max) {
  auto asym = nsemi::tower_asymptotics(q, i_max);
  json record;
  record["format_version"] = kFormatVersion;
  record["command"] = "tower";
  record["input"] = {{"q", q}, {"i_max", i_max}};
  json levels = json::array();
  for (const auto& lvl : asym.levels) {
    json jl;
    jl["i"] = lvl.i;
    jl["c"] = lvl.c;
    jl["genus"] = lvl.semigroup.genus();
    jl["genus_formula"] = lvl.genus_formula;
    jl["lambda1"] = lvl.lambda1;
    if (lvl.lambda2) jl["lambda2"] = *lvl.lambda2;
    jl["ratio"] = lvl.ratio ? rat(*lvl.ratio) : "undefined";
    jl["coincidence_condition"] = lvl.coincidence_condition;
    levels.push_back(std::move(jl));
  }
  record["results"] = {{"corollary_floor", rat(asym.corollary_floor)},
                       {"limit", rat(asym.limit)},
                       {"levels", std::move(levels)}};

  std::ofstream file;
  std::ostream& os = open_sink(opt, file);
  if (opt.format == "json") {
    os << record.dump(2) << "\n";
  } else {
    os << "tower over field of " << q * q << " elements; ratio floor "
       << rat(asym.corollary_floor) << ", limit " << rat(asym.limit) << "\n";
    for (const auto& lvl : asym.levels)
      os << "  i=" << lvl.i << " c=" << lvl.c
         << " genus=" << lvl.semigroup.genus() << " lambda1=" << lvl.lambda1
         << " ratio=" << (lvl.ratio ? rat(*lvl.ratio) : "undefined")
         << (lvl.coincidence_condition ? "  [bounds coincide]" : "") << "\n";
  }
  return kExitOk;
}

int cmd_telescopic(const Options& opt, const std::string& gens_text,
                   std::optional<Int> element) {
  auto gens = parse_gens(gens_text);
  auto a = nsemi::analyze_telescopic(gens);
  json record;
  record["format_version"] = kFormatVersion;
  record["command"] = "telescopic";
  record["input"] = {{"gens", gens_json(gens)}};
  json results;
  results["telescopic"] = a.telescopic;
  results["d_chain"] = json(a.d);
  if (a.closed_form_genus) {
    results["closed_form_genus"] = *a.closed_form_genus;
    auto s = nsemi::NumericalSemigroup::from_generators(gens);
    results["gap_count_genus"] = s.genus();
    results["conductor"] = s.conductor();
  }
  if (!a.telescopic) results["failed_index"] = a.failed_index;
  if (element) {
    auto x = nsemi::telescopic_representation(gens, *element);
    results["element"] = *element;
    results["coefficients"] = json(x);
  }
  record["results"] = std::move(results);

  std::ofstream file;
  render_scalar_record(record, opt, open_sink(opt, file));
  return kExitOk;
}

int cmd_nqg(const Options& opt, Int g, Int q, bool printed_ihara) {
  if (g < 0 || q < 2) throw nsemi::Error("need g >= 0 and q >= 2");
  json record;
  record["format_version"] = kFormatVersion;
  record["command"] = "nqg";
  record["input"] = {{"g", g}, {"q", q}};
  json results;
  const auto prop = nsemi::proposition_nq(g, q);
  results["multiplicity_based"] = rat(prop);
  results["multiplicity_based_floor"] = nsemi::floor_rational(prop);
  results["serre"] = nsemi::serre_upper(g, q);
  results["ihara"] = nsemi::ihara_bound(g, q, printed_ihara);
  if (q == 2) results["oesterle"] = rat(nsemi::oesterle_q2(g));
  record["results"] = std::move(results);
  json notes = json::array();
  if (printed_ihara)
    notes.push_back("ihara uses the printed-variant radicand (8g+1)g^2");
  if (!is_prime_power(q))
    notes.push_back("q = " + std::to_string(q) +
                    " is not a prime power; values are combinatorial only");
  record["notes"] = std::move(notes);

  std::ofstream file;
  render_scalar_record(record, opt, open_sink(opt, file));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical-semigroup bounds on rational places"};
  app.require_subcommand(1);

  Options opt;
  Int max_bits = 0;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", opt.out_file, "write output to FILE");
  app.add_option("--max-bits", max_bits,
                 "membership bit-set budget (default 2^28)");
  app.add_option("--data-dir", opt.data_dir, "reference data directory")
      ->capture_default_str();

  std::string gens_text, method = "geil-matsumoto";
  Int q = 2, genus = 0, n_target = 1, i_max = 1, g = 0;
  std::optional<Int> n_prime, element;
  int which = 1;
  bool printed_ihara = false;

  auto* bound = app.add_subcommand("bound", "place bounds for one semigroup");
  bound->add_option("--gens", gens_text, "generators, comma separated")
      ->required();
  bound->add_option("--q", q, "field size")->required();
  Int n_prime_raw = -1;
  bound->add_option("--n-prime", n_prime_raw,
                    "a-priori place-count bound for the sharpened variant");

  auto* table = app.add_subcommand("table", "recompute a reference table");
  table->add_option("--which", which, "table number")->required()
      ->check(CLI::Range(1, 3));

  auto* enumerate = app.add_subcommand("enumerate",
                                       "all semigroups of a given genus");
  enumerate->add_option("--genus", genus, "target genus")->required();

  auto* exclude = app.add_subcommand(
      "exclude", "genus-g semigroups ruled out for a place count");
  exclude->add_option("--genus", genus, "genus")->required();
  exclude->add_option("--q", q, "field size")->required();
  exclude->add_option("--n", n_target, "target number of rational places")
      ->required();
  exclude->add_option("--method", method, "bound to apply")
      ->check(CLI::IsMember({"lewittes", "geil-matsumoto"}))
      ->capture_default_str();

  auto* tower = app.add_subcommand("tower", "recursive-tower level reports");
  tower->add_option("--q", q, "tower parameter (field has q^2 elements)")
      ->required();
  tower->add_option("--i-max", i_max, "last level")->required();

  auto* telescopic =
      app.add_subcommand("telescopic", "telescopic analysis of a chain");
  telescopic->add_option("--gens", gens_text, "generators, comma separated")
      ->required();
  Int element_raw = -1;
  telescopic->add_option("--element", element_raw,
                         "element to represent in the telescopic basis");

  auto* nqg = app.add_subcommand("nqg", "genus-only upper bounds");
  nqg->add_option("--g", g, "genus")->required();
  nqg->add_option("--q", q, "field size")->required();
  nqg->add_flag("--printed-ihara", printed_ihara,
                "use the printed-variant ihara radicand");

  // global flags remain usable after the verb
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  if (max_bits > 0) nsemi::set_bit_budget(max_bits);
  if (bound->count("--n-prime")) n_prime = n_prime_raw;
  if (telescopic->count("--element")) element = element_raw;

  try {
    if (bound->parsed()) return cmd_bound(opt, gens_text, q, n_prime);
    if (table->parsed()) return cmd_table(opt, which);
    if (enumerate->parsed()) return cmd_enumerate(opt, genus);
    if (exclude->parsed())
      return cmd_exclude(opt, genus, q, n_target, method);
    if (tower->parsed()) return cmd_tower(opt, q, i_max);
    if (telescopic->parsed()) return cmd_telescopic(opt, gens_text, element);
    if (nqg->parsed()) return cmd_nqg(opt, g, q, printed_ihara);
  } catch (const nsemi::MemoryGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const nsemi::GenusCapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const nsemi::OracleCapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const nsemi::Error& e) {
    if (opt.format == "json") {
      json err{{"format_version", kFormatVersion}, {"error", e.what()}};
      std::cout << err.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
