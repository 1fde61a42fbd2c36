#pragma once

// Worked examples: pairs of transversal maximal isotropic subspaces for
// SO_{2n+1} (ordered and unordered), the torus-stabilizer counterexample and
// its rank-two G2 specialization.

#include "spherical/orbit_action.hpp"
#include "spherical/root_system.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spherical::catalog {

/// Orbit name "O" with `primes` apostrophes, subscripted by `index` when
/// nonzero: orbit_name(1, 3) == "O'_3".
std::string orbit_name(std::size_t primes, std::size_t index = 0);

/// Dimension of the space of transversal pairs in SO_{2n+1}/GL_n.
int pairs_dimension(std::size_t n);

/// Character lattice of the maximal torus of Spin_{2n+1} in the basis
/// 2 eps_1, ..., 2 eps_n (rows 2e_1, ..., 2e_{n-1}, (1, ..., 1)).
IntegerMatrix spin_character_lattice(std::size_t n);

/// Sigma_X = {gamma_1, ..., gamma_n}, gamma_i = alpha_i + alpha_{i+1},
/// gamma_n = alpha_n; Xi(X) = <eps_1, ..., eps_n>.
std::pair<SphericalDatum, ReflectionTable> build_ordered_pairs(std::size_t n);

/// Sigma_X = {gamma_1, ..., gamma_{n-1}, 2 gamma_n}. Four open orbits for
/// n = 0, 3 mod 4, two (O = O', O'' = O''') for n = 1, 2 mod 4.
std::pair<SphericalDatum, ReflectionTable> build_unordered_pairs(std::size_t n);

/// Open orbits are the l-tuples of signs; s_i flips the i-th sign and every
/// span is of type T2.
ReflectionTable build_torus_counterexample(const CartanSpec& cartan);
/// Sigma_X = all simple roots, weight lattice 2 Z^l.
SphericalDatum torus_datum(const CartanSpec& cartan);

ReflectionTable build_g2_case();

struct ExampleSpec {
  std::string name;
  std::size_t n = 2;
  std::optional<CartanSpec> cartan;
};

struct Example {
  std::string name;
  SphericalDatum datum;
  ReflectionTable table;
};

/// "ordered_pairs", "unordered_pairs", "torus_counterexample", "g2_case".
const std::vector<std::string>& example_names();

/// Dispatches on request.name. The torus example needs request.cartan.
Example build_example(const ExampleSpec& request);

}  // namespace spherical::catalog
