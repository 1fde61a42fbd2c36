#pragma once

// JSON and Graphviz serialization. Integers that do not fit in 64 bits are
// written as decimal strings; readers accept both forms.

#include "spherical/integer.hpp"
#include "spherical/lattice.hpp"
#include "spherical/orbit_action.hpp"
#include "spherical/quadratic_forms.hpp"
#include "spherical/root_system.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace spherical::io {

using nlohmann::json;

/// Malformed or invalid input document. `where` is a JSON-pointer-like path.
class SchemaError : public std::invalid_argument {
 public:
  SchemaError(std::string where, const std::string& message)
      : std::invalid_argument(where.empty() ? message : where + ": " + message),
        where_(std::move(where)) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

json integer_to_json(const BigInt& x);
BigInt integer_from_json(const json& j, const std::string& where = "");

/// {"rows": r, "cols": n, "entries": [[...], ...]}
json matrix_to_json(const IntegerMatrix& m);
/// Also accepts a bare array of rows.
IntegerMatrix matrix_from_json(const json& j, const std::string& where = "");

json divisors_to_json(const DivisorList& d);
DivisorList divisors_from_json(const json& j, const std::string& where = "");

/// {"d": [...], "u": matrix, "v": matrix}
json snf_to_json(const SnfDecomposition<BigInt>& snf);

/// {"type": "B", "rank": 4}, or {"cartan": [[...]]} for other matrices.
/// Readers also accept {"type": "A1xA1"}.
json cartan_to_json(const CartanSpec& c);
CartanSpec cartan_from_json(const json& j, const std::string& where = "");

/// Cartan fields plus "spherical_roots" and "weight_sublattice".
json datum_to_json(const SphericalDatum& d);
SphericalDatum datum_from_json(const json& j, const std::string& where = "");

json table_to_json(const ReflectionTable& t);
/// Orbits missing from every span of some root get a trivial P span.
ReflectionTable table_from_json(const json& j, const std::string& where = "");

/// {"holds": bool, "pairs": [{"i","j","m","holds","witness"}]}
json braid_to_json(const BraidReport& r);

json partition_to_json(const Partition& p);

json sylvester_to_json(const std::vector<quadratic::InertiaClass>& classes);

/// Undirected graph, nodes in name order, open orbits doubled; one edge per
/// swapped pair and root labeled "s{i}:{type}", fixed points omitted.
std::string to_dot(const ReflectionTable& t, std::string_view graph_name = "orbits");

/// Parses text, reporting syntax errors as SchemaError.
json parse_json(std::string_view text);

}  // namespace spherical::io
