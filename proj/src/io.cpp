#include "spherical/io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace spherical::io {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t k) { return where + "/" + std::to_string(k); }

const json& field(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where, "missing field '" + key + "'");
  return *it;
}

std::size_t size_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw SchemaError(where, "expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

bool bool_from_json(const json& j, const std::string& where) {
  if (!j.is_boolean()) throw SchemaError(where, "expected a boolean");
  return j.get<bool>();
}

std::string string_from_json(const json& j, const std::string& where) {
  if (!j.is_string()) throw SchemaError(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> names_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of orbit ids");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(string_from_json(j[k], at(where, k)));
  return out;
}

IntegerVector vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of integers");
  IntegerVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    v(static_cast<Eigen::Index>(k)) = integer_from_json(j[k], at(where, k));
  }
  return v;
}

json vector_to_json(const IntegerVector& v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(integer_to_json(v(k)));
  return out;
}

}  // namespace

json integer_to_json(const BigInt& x) {
  static const BigInt lo(std::numeric_limits<long long>::min());
  static const BigInt hi(std::numeric_limits<long long>::max());
  if (x >= lo && x <= hi) return json(x.convert_to<long long>());
  return json(x.str());
}

BigInt integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(j.get<unsigned long long>());
    return BigInt(j.get<long long>());
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const std::size_t start = !s.empty() && s[0] == '-' ? 1 : 0;
    if (s.size() == start ||
        !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                     [](unsigned char c) { return std::isdigit(c); })) {
      throw SchemaError(where, "'" + s + "' is not a decimal integer");
    }
    return BigInt(s);
  }
  throw SchemaError(where, "expected an integer");
}

json matrix_to_json(const IntegerMatrix& m) {
  json entries = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(integer_to_json(m(i, k)));
    entries.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

IntegerMatrix matrix_from_json(const json& j, const std::string& where) {
  const json* entries = &j;
  std::optional<std::size_t> rows;
  std::optional<std::size_t> cols;
  std::string entries_where = where;
  if (j.is_object()) {
    entries = &field(j, "entries", where);
    entries_where = at(where, "entries");
    rows = size_from_json(field(j, "rows", where), at(where, "rows"));
    cols = size_from_json(field(j, "cols", where), at(where, "cols"));
  }
  if (!entries->is_array()) throw SchemaError(entries_where, "expected an array of rows");
  const std::size_t r = entries->size();
  if (rows && *rows != r) {
    throw SchemaError(where, "rows = " + std::to_string(*rows) + " but " + std::to_string(r) +
                                 " rows given");
  }
  std::size_t c = cols.value_or(r == 0 ? 0 : (*entries)[0].is_array() ? (*entries)[0].size() : 0);
  IntegerMatrix m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  for (std::size_t i = 0; i < r; ++i) {
    const json& row = (*entries)[i];
    const std::string row_where = at(entries_where, i);
    if (!row.is_array()) throw SchemaError(row_where, "expected an array of integers");
    if (row.size() != c) {
      throw SchemaError(row_where, "row has " + std::to_string(row.size()) + " entries, expected " +
                                       std::to_string(c));
    }
    for (std::size_t k = 0; k < c; ++k) {
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          integer_from_json(row[k], at(row_where, k));
    }
  }
  return m;
}

json divisors_to_json(const DivisorList& d) {
  json out = json::array();
  for (const auto& x : d) out.push_back(integer_to_json(x));
  return out;
}

DivisorList divisors_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where, "expected an array of integers");
  DivisorList out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(integer_from_json(j[k], at(where, k)));
  return out;
}

json snf_to_json(const SnfDecomposition<BigInt>& snf) {
  return json{{"d", divisors_to_json(snf.d)},
              {"u", matrix_to_json(snf.u)},
              {"v", matrix_to_json(snf.v)}};
}

json cartan_to_json(const CartanSpec& c) {
  if (c.family()) {
    return json{{"type", std::string(1, c.family()->first)}, {"rank", c.family()->second}};
  }
  json rows = json::array();
  for (Eigen::Index i = 0; i < c.matrix().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < c.matrix().cols(); ++k) row.push_back(c.matrix()(i, k));
    rows.push_back(std::move(row));
  }
  return json{{"cartan", std::move(rows)}};
}

CartanSpec cartan_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where, "expected a Cartan object");
  try {
    if (j.contains("cartan")) {
      const IntegerMatrix m = matrix_from_json(j.at("cartan"), at(where, "cartan"));
      Matrix<int> a(m.rows(), m.cols());
      for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
          if (m(i, k) < -3 || m(i, k) > 2) {
            throw SchemaError(at(where, "cartan"), "Cartan entries must lie in -3..2");
          }
          a(i, k) = m(i, k).convert_to<int>();
        }
      }
      return CartanSpec::from_matrix(a);
    }
    const std::string type = string_from_json(field(j, "type", where), at(where, "type"));
    if (j.contains("rank")) {
      if (type.size() != 1) throw SchemaError(at(where, "type"), "expected a single family letter");
      return CartanSpec::of_type(type[0], size_from_json(j.at("rank"), at(where, "rank")));
    }
    return CartanSpec::parse(type);
  } catch (const SchemaError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SchemaError(where, e.what());
  }
}

json datum_to_json(const SphericalDatum& d) {
  json out = cartan_to_json(d.cartan);
  json roots = json::array();
  for (const auto& g : d.spherical_roots) roots.push_back(vector_to_json(g));
  out["spherical_roots"] = std::move(roots);
  out["weight_sublattice"] = matrix_to_json(d.weight_sublattice);
  return out;
}

SphericalDatum datum_from_json(const json& j, const std::string& where) {
  SphericalDatum d;
  d.cartan = cartan_from_json(j, where);
  const json& roots = field(j, "spherical_roots", where);
  if (!roots.is_array()) throw SchemaError(at(where, "spherical_roots"), "expected an array");
  for (std::size_t k = 0; k < roots.size(); ++k) {
    d.spherical_roots.push_back(vector_from_json(roots[k], at(at(where, "spherical_roots"), k)));
  }
  d.weight_sublattice = matrix_from_json(field(j, "weight_sublattice", where),
                                         at(where, "weight_sublattice"));
  try {
    d.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(where, e.what());
  }
  return d;
}

json table_to_json(const ReflectionTable& t) {
  json orbits = json::array();
  for (auto k : t.name_order()) {
    const Orbit& o = t.orbits()[k];
    json entry{{"id", o.name}, {"open", o.is_open}, {"max_rank", o.is_max_rank}};
    if (o.dimension) entry["dimension"] = *o.dimension;
    orbits.push_back(std::move(entry));
  }
  json spans = json::array();
  for (const Span& s : t.spans()) {
    spans.push_back(json{{"root", s.root},
                         {"type", std::string(to_string(s.type))},
                         {"open", s.open},
                         {"lower", s.lower}});
  }
  return json{{"orbits", std::move(orbits)},
              {"cartan", cartan_to_json(t.cartan())},
              {"spans", std::move(spans)}};
}

ReflectionTable table_from_json(const json& j, const std::string& where) {
  const json& orbits_json = field(j, "orbits", where);
  const std::string orbits_where = at(where, "orbits");
  if (!orbits_json.is_array()) throw SchemaError(orbits_where, "expected an array");
  std::vector<Orbit> orbits;
  for (std::size_t k = 0; k < orbits_json.size(); ++k) {
    const json& o = orbits_json[k];
    const std::string ow = at(orbits_where, k);
    Orbit orbit;
    orbit.name = string_from_json(field(o, "id", ow), at(ow, "id"));
    orbit.is_open = bool_from_json(field(o, "open", ow), at(ow, "open"));
    orbit.is_max_rank = o.contains("max_rank") ? bool_from_json(o.at("max_rank"), at(ow, "max_rank"))
                                               : orbit.is_open;
    if (o.contains("dimension")) {
      if (!o.at("dimension").is_number_integer()) {
        throw SchemaError(at(ow, "dimension"), "expected an integer");
      }
      orbit.dimension = o.at("dimension").get<int>();
    }
    orbits.push_back(std::move(orbit));
  }
  const CartanSpec cartan = cartan_from_json(field(j, "cartan", where), at(where, "cartan"));

  const json& spans_json = field(j, "spans", where);
  const std::string spans_where = at(where, "spans");
  if (!spans_json.is_array()) throw SchemaError(spans_where, "expected an array");
  std::vector<Span> spans;
  for (std::size_t k = 0; k < spans_json.size(); ++k) {
    const json& s = spans_json[k];
    const std::string sw = at(spans_where, k);
    Span span;
    span.root = size_from_json(field(s, "root", sw), at(sw, "root"));
    try {
      span.type = parse_edge_type(string_from_json(field(s, "type", sw), at(sw, "type")));
    } catch (const SchemaError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw SchemaError(at(sw, "type"), e.what());
    }
    span.open = names_from_json(field(s, "open", sw), at(sw, "open"));
    span.lower = s.contains("lower") ? names_from_json(s.at("lower"), at(sw, "lower"))
                                     : std::vector<std::string>{};
    spans.push_back(std::move(span));
  }
  try {
    return ReflectionTable::with_trivial_spans(std::move(orbits), cartan, std::move(spans));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(where, e.what());
  }
}

json braid_to_json(const BraidReport& r) {
  json pairs = json::array();
  for (const auto& p : r.pairs) {
    pairs.push_back(json{{"i", p.i},
                         {"j", p.j},
                         {"m", p.m},
                         {"holds", p.holds},
                         {"witness", p.witness ? json(*p.witness) : json(nullptr)}});
  }
  return json{{"holds", r.holds()}, {"pairs", std::move(pairs)}};
}

json partition_to_json(const Partition& p) {
  json out = json::array();
  for (const auto& cls : p) out.push_back(cls);
  return out;
}

json sylvester_to_json(const std::vector<quadratic::InertiaClass>& classes) {
  json out = json::array();
  for (const auto& c : classes) {
    out.push_back(json{{"plus", c.plus}, {"minus", c.minus}, {"members", c.members}});
  }
  return out;
}

std::string to_dot(const ReflectionTable& t, std::string_view graph_name) {
  auto quote = [](std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "graph " << quote(graph_name) << " {\n";
  for (auto k : t.name_order()) {
    const Orbit& o = t.orbits()[k];
    os << "  " << quote(o.name);
    if (o.is_open) os << " [shape=doublecircle]";
    os << ";\n";
  }
  for (std::size_t r = 1; r <= t.cartan().rank(); ++r) {
    const Permutation& p = t.permutation(r);
    for (auto k : t.name_order()) {
      const std::size_t image = p[k];
      if (image == k || t.orbits()[image].name < t.orbits()[k].name) continue;
      os << "  " << quote(t.orbits()[k].name) << " -- " << quote(t.orbits()[image].name)
         << " [label=\"s" << r << ":" << to_string(t.span_of(r, k).type) << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace spherical::io
