// sphorb: command-line front end for lattice, Weyl group and orbit-table
// computations. Output is deterministic; errors are reported as
// {"error": {"kind": ..., "message": ...}} on stdout with exit status 1.

#include "spherical/catalog.hpp"
#include "spherical/io.hpp"
#include "spherical/lattice.hpp"
#include "spherical/orbit_action.hpp"
#include "spherical/quadratic_forms.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace {

using spherical::io::json;
namespace sp = spherical;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exit status for a braid-check failure under --strict.
constexpr int kBraidFailure = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

sp::BigInt parse_integer(const std::string& text) {
  return sp::io::integer_from_json(json(text), "'" + text + "'");
}

// "1,2;3,4" -> [[1,2],[3,4]]
sp::IntegerMatrix parse_inline_matrix(const std::string& text) {
  std::vector<std::vector<sp::BigInt>> rows;
  std::stringstream rs(text);
  std::string row;
  while (std::getline(rs, row, ';')) {
    std::vector<sp::BigInt> values;
    std::stringstream cs(row);
    std::string cell;
    while (std::getline(cs, cell, ',')) {
      cell.erase(0, cell.find_first_not_of(' '));
      cell.erase(cell.find_last_not_of(' ') + 1);
      values.push_back(parse_integer(cell));
    }
    rows.push_back(std::move(values));
  }
  if (rows.empty()) throw UsageError("empty matrix");
  sp::IntegerMatrix m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows[0].size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows[0].size()) throw UsageError("matrix rows have different lengths");
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
    }
  }
  return m;
}

struct MatrixInput {
  std::string path;
  std::string entries;

  void add_to(CLI::App* app) {
    auto* input = app->add_option("--input", path, "Matrix JSON file, or - for stdin");
    auto* inline_opt = app->add_option("--entries", entries, "Inline matrix, rows separated by ';'");
    input->excludes(inline_opt);
  }

  sp::IntegerMatrix load() const {
    if (!entries.empty()) return parse_inline_matrix(entries);
    if (path.empty()) throw UsageError("one of --input or --entries is required");
    json j = sp::io::parse_json(read_input(path));
    if (j.is_object() && j.contains("matrix")) j = j.at("matrix");
    return sp::io::matrix_from_json(j);
  }
};

std::string join(const std::vector<sp::BigInt>& xs, const char* sep = " ") {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += sep;
    out += xs[k].str();
  }
  return out;
}

std::string matrix_text(const sp::IntegerMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index k = 0; k < m.cols(); ++k) {
      if (k) out += ' ';
      out += m(i, k).str();
    }
    out += '\n';
  }
  return out;
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

// Shared selection of a reflection table: a catalog example, the quadratic
// forms table, or a JSON document.
struct TableSource {
  std::string example;
  std::size_t n = 0;
  std::size_t r = 0;
  std::string cartan;
  std::string table_path;

  void add_to(CLI::App* app, bool positional_example) {
    CLI::Option* ex = positional_example
                          ? app->add_option("name", example, "Example name")
                          : app->add_option("--example", example, "Example name");
    app->add_option("--n", n, "Size parameter");
    app->add_option("--r", r, "Rank (quadratic_forms)");
    app->add_option("--cartan", cartan, "Cartan label such as A2, B3, G2 or A1xA1");
    if (!positional_example) {
      auto* t = app->add_option("--table", table_path, "Reflection table JSON file, or - for stdin");
      t->excludes(ex);
    }
  }

  static std::string canonical(const std::string& name) {
    if (name == "torus") return "torus_counterexample";
    if (name == "g2") return "g2_case";
    return name;
  }

  struct Loaded {
    std::string name;
    std::optional<sp::SphericalDatum> datum;
    sp::ReflectionTable table;
  };

  Loaded load() const {
    if (!table_path.empty()) {
      json j = sp::io::parse_json(read_input(table_path));
      std::optional<sp::SphericalDatum> datum;
      if (j.is_object() && j.contains("table")) {
        if (j.contains("datum")) datum = sp::io::datum_from_json(j.at("datum"), "/datum");
        return {j.value("name", std::string("table")), datum, sp::io::table_from_json(j.at("table"), "/table")};
      }
      return {"table", std::nullopt, sp::io::table_from_json(j)};
    }
    if (example.empty()) throw UsageError("one of --example or --table is required");
    const std::string name = canonical(example);
    if (name == "quadratic_forms") {
      if (n == 0) throw UsageError("quadratic_forms needs --n >= 1");
      if (r > n) throw UsageError("--r must not exceed --n");
      std::optional<sp::SphericalDatum> datum;
      if (r > 0) datum = sp::quadratic::quadratic_forms_datum(n, r);
      return {name, datum, sp::quadratic::build_table(n, r)};
    }
    sp::catalog::ExampleSpec request{name, n == 0 ? 2 : n, std::nullopt};
    if (!cartan.empty()) request.cartan = sp::CartanSpec::parse(cartan);
    if (name == "torus_counterexample" && !request.cartan) {
      throw UsageError("torus_counterexample needs --cartan");
    }
    auto ex = sp::catalog::build_example(request);
    return {ex.name, std::move(ex.datum), std::move(ex.table)};
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Real Borel orbits of spherical varieties: lattices, Weyl groups and reflection tables"};
  app.name("sphorb");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  // snf
  auto* snf = app.add_subcommand("snf", "Smith normal form u*M*v = diag(d)");
  MatrixInput snf_in;
  snf_in.add_to(snf);
  std::string snf_format = "json";
  snf->add_option("--format", snf_format)->check(CLI::IsMember({"text", "json"}));

  // divisors
  auto* div = app.add_subcommand("divisors", "Elementary divisors of a full-rank sublattice basis");
  MatrixInput div_in;
  div_in.add_to(div);
  std::string div_format = "json";
  div->add_option("--format", div_format)->check(CLI::IsMember({"text", "json"}));

  // count-open
  auto* count = app.add_subcommand("count-open", "Number 2^p of open real Borel orbits");
  std::vector<std::string> count_divisors;
  std::string count_path;
  auto* count_list =
      count->add_option("--divisors", count_divisors, "Comma-separated divisors")->delimiter(',');
  count->add_option("--input", count_path, "JSON divisor list (or divisors output), - for stdin")
      ->excludes(count_list);
  std::string count_format = "text";
  count->add_option("--format", count_format)->check(CLI::IsMember({"text", "json"}));

  // patterns
  auto* pat = app.add_subcommand("patterns", "Enumerate (signed) patterns of rank r in n variables");
  std::size_t pat_n = 0;
  std::size_t pat_r = 0;
  bool pat_complex = false;
  pat->add_option("--n", pat_n)->required();
  pat->add_option("--r", pat_r)->required();
  pat->add_flag("--complex", pat_complex, "Unsigned patterns");
  std::string pat_format = "text";
  pat->add_option("--format", pat_format)->check(CLI::IsMember({"text", "json"}));

  // sylvester
  auto* syl = app.add_subcommand("sylvester", "Real group orbit classes of open signed patterns");
  std::size_t syl_n = 0;
  std::size_t syl_r = 0;
  syl->add_option("--n", syl_n)->required();
  syl->add_option("--r", syl_r)->required();
  std::string syl_format = "text";
  syl->add_option("--format", syl_format)->check(CLI::IsMember({"text", "json"}));

  // braid-check
  auto* braid = app.add_subcommand("braid-check", "Check braid relations of the reflection operators");
  TableSource braid_src;
  braid_src.add_to(braid, false);
  std::string braid_domain = "all";
  std::vector<std::size_t> braid_roots;
  bool strict = false;
  braid->add_option("--domain", braid_domain, "all or open")->check(CLI::IsMember({"all", "open"}));
  braid->add_option("--roots", braid_roots, "Comma-separated simple roots")->delimiter(',');
  braid->add_flag("--strict", strict, "Exit with status 2 when a relation fails");
  std::string braid_format = "json";
  braid->add_option("--format", braid_format)->check(CLI::IsMember({"text", "json"}));

  // orbits
  auto* orb = app.add_subcommand("orbits", "Orbit classes on the open orbits");
  TableSource orb_src;
  orb_src.add_to(orb, false);
  std::vector<std::size_t> orb_gens;
  orb->add_option("--generators", orb_gens,
                  "Simple roots generating the group; default joins T/N-type moves")
      ->delimiter(',');
  std::string orb_format = "json";
  orb->add_option("--format", orb_format)->check(CLI::IsMember({"text", "json", "dot"}));

  // example
  auto* ex = app.add_subcommand("example", "Build a catalog example");
  TableSource ex_src;
  ex_src.add_to(ex, true);
  ex->get_option("name")->required();
  std::string ex_emit = "json";
  ex->add_option("--emit,--format", ex_emit)->check(CLI::IsMember({"text", "json", "dot"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (*snf) {
    const auto d = sp::smith_normal_form(snf_in.load());
    if (snf_format == "json") {
      print_json(sp::io::snf_to_json(d));
    } else {
      std::cout << "d: " << join(d.d) << "\nu:\n" << matrix_text(d.u) << "v:\n" << matrix_text(d.v);
    }
    return 0;
  }

  if (*div) {
    const auto d = sp::elementary_divisors(div_in.load());
    if (div_format == "json") {
      print_json(json{{"divisors", sp::io::divisors_to_json(d)},
                      {"index", sp::io::integer_to_json(sp::saturation_index(div_in.load()))}});
    } else {
      std::cout << join(d) << '\n';
    }
    return 0;
  }

  if (*count) {
    sp::DivisorList d;
    if (!count_path.empty()) {
      json j = sp::io::parse_json(read_input(count_path));
      if (j.is_object() && j.contains("divisors")) j = j.at("divisors");
      d = sp::io::divisors_from_json(j);
    } else if (!count_divisors.empty()) {
      for (const auto& s : count_divisors) d.push_back(parse_integer(s));
    } else {
      throw UsageError("one of --divisors or --input is required");
    }
    const auto open = sp::count_open_real_orbits(d);
    if (count_format == "json") {
      print_json(json{{"divisors", sp::io::divisors_to_json(d)},
                      {"open_real_orbits", open},
                      {"sign_coordinates", sp::sign_coordinates(d)}});
    } else {
      std::cout << open << '\n';
    }
    return 0;
  }

  if (*pat) {
    const auto patterns = sp::quadratic::enumerate_patterns(pat_n, pat_r, !pat_complex);
    if (pat_format == "json") {
      json list = json::array();
      for (const auto& p : patterns) {
        list.push_back(json{{"pattern", p.to_string()},
                            {"open", sp::quadratic::is_open_pattern(p)},
                            {"max_rank", sp::quadratic::is_maximal_rank(p)}});
      }
      print_json(json{{"n", pat_n}, {"r", pat_r}, {"signed", !pat_complex}, {"patterns", list}});
    } else {
      for (const auto& p : patterns) std::cout << p.to_string() << '\n';
    }
    return 0;
  }

  if (*syl) {
    if (syl_n == 0 || syl_r > syl_n) throw UsageError("need 1 <= n and r <= n");
    const auto classes = sp::quadratic::sylvester_classes(syl_n, syl_r);
    if (syl_format == "json") {
      print_json(json{{"n", syl_n}, {"r", syl_r}, {"classes", sp::io::sylvester_to_json(classes)}});
    } else {
      for (const auto& c : classes) {
        std::cout << "(" << c.plus << "," << c.minus << "):";
        for (const auto& m : c.members) std::cout << ' ' << m;
        std::cout << '\n';
      }
    }
    return 0;
  }

  if (*braid) {
    const auto loaded = braid_src.load();
    std::optional<std::set<std::string>> domain;
    if (braid_domain == "open") domain = sp::open_orbits(loaded.table);
    std::optional<sp::RootSet> roots;
    if (!braid_roots.empty()) roots = sp::RootSet(braid_roots.begin(), braid_roots.end());
    const auto report = sp::check_braid(loaded.table, domain, roots);
    if (braid_format == "json") {
      print_json(sp::io::braid_to_json(report));
    } else {
      for (const auto& p : report.pairs) {
        std::cout << "(" << p.i << "," << p.j << ") m=" << p.m << ": "
                  << (p.holds ? "holds" : "fails, witness " + *p.witness) << '\n';
      }
      std::cout << (report.holds() ? "all relations hold" : "braid relations fail") << '\n';
    }
    return strict && !report.holds() ? kBraidFailure : 0;
  }

  if (*orb) {
    const auto loaded = orb_src.load();
    if (orb_format == "dot") {
      std::cout << sp::io::to_dot(loaded.table, loaded.name);
      return 0;
    }
    const auto opens = sp::open_orbits(loaded.table);
    const sp::Partition classes =
        orb_gens.empty()
            ? sp::real_group_orbit_classes(loaded.table)
            : sp::subgroup_orbits(loaded.table, sp::RootSet(orb_gens.begin(), orb_gens.end()), opens);
    if (orb_format == "json") {
      print_json(json{{"open_orbits", opens}, {"classes", sp::io::partition_to_json(classes)}});
    } else {
      for (const auto& c : classes) {
        for (std::size_t k = 0; k < c.size(); ++k) std::cout << (k ? " " : "") << c[k];
        std::cout << '\n';
      }
    }
    return 0;
  }

  if (*ex) {
    const auto loaded = ex_src.load();
    if (ex_emit == "dot") {
      std::cout << sp::io::to_dot(loaded.table, loaded.name);
    } else if (ex_emit == "json") {
      json out{{"name", loaded.name}, {"table", sp::io::table_to_json(loaded.table)}};
      if (loaded.datum) out["datum"] = sp::io::datum_to_json(*loaded.datum);
      print_json(out);
    } else {
      std::cout << loaded.name << ": " << loaded.table.size() << " orbits, "
                << sp::open_orbits(loaded.table).size() << " open, Cartan "
                << loaded.table.cartan().label() << '\n';
      for (const auto& s : loaded.table.spans()) {
        if (s.type == sp::EdgeType::P) continue;
        std::cout << "s" << s.root << " " << sp::to_string(s.type) << ":";
        for (const auto& o : s.open) std::cout << ' ' << o;
        std::cout << " |";
        for (const auto& o : s.lower) std::cout << ' ' << o;
        std::cout << '\n';
      }
      if (loaded.datum) {
        std::cout << "elementary divisors: "
                  << join(sp::elementary_divisors(loaded.datum->weight_sublattice)) << '\n';
      }
    }
    return 0;
  }
  return 0;
}

void print_error(const std::string& kind, const std::string& message) {
  std::cout << json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const UsageError& e) {
    print_error("usage", e.what());
  } catch (const spherical::io::SchemaError& e) {
    print_error("schema", e.what());
  } catch (const InputError& e) {
    print_error("input", e.what());
  } catch (const std::invalid_argument& e) {
    print_error("invalid_argument", e.what());
  } catch (const std::exception& e) {
    print_error("internal", e.what());
  }
  return 1;
}
