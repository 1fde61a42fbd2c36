#include "spherical/catalog.hpp"

#include "spherical/lattice.hpp"

#include <stdexcept>

namespace spherical::catalog {

namespace {

void require_pairs_size(std::size_t n, const char* what) {
  if (n < 2) {
    throw std::invalid_argument(std::string(what) + ": n must be at least 2, got " +
                                std::to_string(n));
  }
}

// Simple-root coordinates of gamma_i in B_n.
IntegerVector gamma(std::size_t n, std::size_t i) {
  IntegerVector v = simple_root(n, i);
  if (i < n) v(static_cast<Eigen::Index>(i)) = 1;
  return v;
}

Orbit make_orbit(std::string name, bool open, int dimension) {
  return Orbit{std::move(name), open, open, dimension};
}

// Common part of both pair spaces: U-spans O <-> O_i for i < n and the
// T1-span of root i+1 on O_i, for every copy of O. When `n_is_n1` is set the
// span of root n on O_{n-1} is N1 instead of T1.
void add_pair_orbits(std::size_t n, std::size_t primes, bool n_is_n1, std::vector<Orbit>& orbits,
                     std::vector<Span>& spans) {
  const int dim = pairs_dimension(n);
  const std::string top = orbit_name(primes);
  orbits.push_back(make_orbit(top, true, dim));
  for (std::size_t i = 1; i < n; ++i) {
    const std::string oi = orbit_name(primes, i);
    orbits.push_back(make_orbit(oi, false, dim - 1));
    spans.push_back(Span{i, EdgeType::U, {top}, {oi}});
    if (n_is_n1 && i + 1 == n) {
      orbits.push_back(make_orbit(oi + "^0", false, dim - 2));
      spans.push_back(Span{i + 1, EdgeType::N1, {oi}, {oi + "^0"}});
    } else {
      orbits.push_back(make_orbit(oi + "^+", false, dim - 2));
      orbits.push_back(make_orbit(oi + "^-", false, dim - 2));
      spans.push_back(Span{i + 1, EdgeType::T1, {oi}, {oi + "^+", oi + "^-"}});
    }
  }
}

}  // namespace

std::string orbit_name(std::size_t primes, std::size_t index) {
  std::string name = "O" + std::string(primes, '\'');
  if (index > 0) name += "_" + std::to_string(index);
  return name;
}

int pairs_dimension(std::size_t n) { return static_cast<int>(n * n + n); }

IntegerMatrix spin_character_lattice(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  IntegerMatrix a = IntegerMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i + 1 < m; ++i) a(i, i) = 2;
  for (Eigen::Index j = 0; j < m; ++j) a(m - 1, j) = 1;
  return a;
}

std::pair<SphericalDatum, ReflectionTable> build_ordered_pairs(std::size_t n) {
  require_pairs_size(n, "build_ordered_pairs");
  const auto m = static_cast<Eigen::Index>(n);

  SphericalDatum datum;
  datum.cartan = CartanSpec::of_type('B', n);
  for (std::size_t i = 1; i <= n; ++i) datum.spherical_roots.push_back(gamma(n, i));
  const IntegerMatrix xi = IntegerMatrix::Identity(m, m) * BigInt(2);
  datum.weight_sublattice = coordinates_in_basis(xi, spin_character_lattice(n));
  datum.validate();

  std::vector<Orbit> orbits;
  std::vector<Span> spans;
  for (std::size_t primes : {0, 1}) add_pair_orbits(n, primes, false, orbits, spans);
  const std::string lower = orbit_name(0, n);
  orbits.push_back(make_orbit(lower + "^+", false, pairs_dimension(n) - 1));
  orbits.push_back(make_orbit(lower + "^-", false, pairs_dimension(n) - 1));
  spans.push_back(Span{n, EdgeType::T2, {orbit_name(0), orbit_name(1)}, {lower + "^+", lower + "^-"}});

  ReflectionTable table =
      ReflectionTable::with_trivial_spans(std::move(orbits), datum.cartan, std::move(spans));
  return {std::move(datum), std::move(table)};
}

std::pair<SphericalDatum, ReflectionTable> build_unordered_pairs(std::size_t n) {
  require_pairs_size(n, "build_unordered_pairs");
  const auto m = static_cast<Eigen::Index>(n);

  SphericalDatum datum;
  datum.cartan = CartanSpec::of_type('B', n);
  for (std::size_t i = 1; i < n; ++i) datum.spherical_roots.push_back(gamma(n, i));
  datum.spherical_roots.push_back(simple_root(n, n, 2));
  // 2 gamma_i = 2(eps_i - eps_{i+2}), 2 gamma_{n-1} = 2 eps_{n-1},
  // 2 (2 gamma_n) = 4 eps_n, in the basis eps scaled by 2.
  IntegerMatrix xi = IntegerMatrix::Zero(m, m);
  for (Eigen::Index i = 0; i + 2 < m; ++i) {
    xi(i, i) = 2;
    xi(i, i + 2) = -2;
  }
  xi(m - 2, m - 2) = 2;
  xi(m - 1, m - 1) = 4;
  datum.weight_sublattice = coordinates_in_basis(xi, spin_character_lattice(n));
  datum.validate();

  const bool four_open = n % 4 == 0 || n % 4 == 3;
  std::vector<Orbit> orbits;
  std::vector<Span> spans;
  const std::vector<std::size_t> copies =
      four_open ? std::vector<std::size_t>{0, 1, 2, 3} : std::vector<std::size_t>{0, 2};
  for (std::size_t primes : copies) add_pair_orbits(n, primes, true, orbits, spans);
  for (std::size_t primes : {0, 2}) {
    const std::string lower = orbit_name(primes, n);
    orbits.push_back(make_orbit(lower, false, pairs_dimension(n) - 1));
    if (four_open) {
      spans.push_back(Span{n, EdgeType::N2, {orbit_name(primes), orbit_name(primes + 1)}, {lower}});
    } else {
      spans.push_back(Span{n, EdgeType::N1, {orbit_name(primes)}, {lower}});
    }
  }

  ReflectionTable table =
      ReflectionTable::with_trivial_spans(std::move(orbits), datum.cartan, std::move(spans));
  return {std::move(datum), std::move(table)};
}

ReflectionTable build_torus_counterexample(const CartanSpec& cartan) {
  const std::size_t l = cartan.rank();
  if (l == 0 || l > 16) {
    throw std::invalid_argument("build_torus_counterexample: rank must lie in 1..16, got " +
                                std::to_string(l));
  }
  std::vector<Orbit> orbits;
  for (std::size_t bits = 0; bits < (std::size_t{1} << l); ++bits) {
    std::string signs;
    for (std::size_t k = 0; k < l; ++k) signs += (bits >> (l - 1 - k)) & 1 ? '-' : '+';
    orbits.push_back(Orbit{signs, true, true, std::nullopt});
  }
  const std::size_t open_count = orbits.size();
  std::vector<Span> spans;
  for (std::size_t i = 1; i <= l; ++i) {
    for (std::size_t k = 0; k < open_count; ++k) {
      const std::string plus = orbits[k].name;
      if (plus[i - 1] != '+') continue;
      std::string minus = plus;
      minus[i - 1] = '-';
      std::string base = plus;
      base[i - 1] = '0';
      orbits.push_back(Orbit{base + "^a", false, false, std::nullopt});
      orbits.push_back(Orbit{base + "^b", false, false, std::nullopt});
      spans.push_back(Span{i, EdgeType::T2, {plus, minus}, {base + "^a", base + "^b"}});
    }
  }
  return ReflectionTable::with_trivial_spans(std::move(orbits), cartan, std::move(spans));
}

SphericalDatum torus_datum(const CartanSpec& cartan) {
  const std::size_t l = cartan.rank();
  SphericalDatum datum;
  datum.cartan = cartan;
  for (std::size_t i = 1; i <= l; ++i) datum.spherical_roots.push_back(simple_root(l, i));
  const auto m = static_cast<Eigen::Index>(l);
  datum.weight_sublattice = IntegerMatrix::Identity(m, m) * BigInt(2);
  datum.validate();
  return datum;
}

ReflectionTable build_g2_case() { return build_torus_counterexample(CartanSpec::of_type('G', 2)); }

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{"ordered_pairs", "unordered_pairs",
                                              "torus_counterexample", "g2_case"};
  return names;
}

Example build_example(const ExampleSpec& request) {
  if (request.name == "ordered_pairs") {
    auto [datum, table] = build_ordered_pairs(request.n);
    return Example{request.name, std::move(datum), std::move(table)};
  }
  if (request.name == "unordered_pairs") {
    auto [datum, table] = build_unordered_pairs(request.n);
    return Example{request.name, std::move(datum), std::move(table)};
  }
  if (request.name == "torus_counterexample") {
    if (!request.cartan) throw std::invalid_argument("torus_counterexample needs a Cartan type");
    return Example{request.name, torus_datum(*request.cartan), build_torus_counterexample(*request.cartan)};
  }
  if (request.name == "g2_case") {
    const CartanSpec g2 = CartanSpec::of_type('G', 2);
    return Example{request.name, torus_datum(g2), build_g2_case()};
  }
  throw std::invalid_argument("unknown example '" + request.name + "'");
}

}  // namespace spherical::catalog
