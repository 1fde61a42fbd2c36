#pragma once

#include "spherical/integer.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace spherical {

/// Indices of simple roots are 1-based throughout, matching Dynkin labels.
using RootIndex = std::size_t;
using RootSet = std::set<RootIndex>;

/// Cartan matrix with entries a_ij = <alpha_i^vee, alpha_j>, so that
/// s_i(alpha_j) = alpha_j - a_ij alpha_i.
///
/// Constructed either from a Killing-Cartan label (A_n, B_n, C_n, D_n, G_2,
/// or a product such as "A1xA1") or from an explicit matrix, which is checked
/// for the finite-type sign and product conditions.
class CartanSpec {
 public:
  CartanSpec() = default;

  static CartanSpec of_type(char family, std::size_t rank);
  /// Parses "A2", "B4", "G2", "A1xA1", "A2xB3".
  static CartanSpec parse(std::string_view label);
  static CartanSpec from_matrix(const Matrix<int>& a);

  std::size_t rank() const { return static_cast<std::size_t>(a_.rows()); }
  const Matrix<int>& matrix() const { return a_; }
  int entry(RootIndex i, RootIndex j) const;

  /// Single-family label ("B4") when built from one; empty otherwise.
  const std::optional<std::pair<char, std::size_t>>& family() const { return family_; }
  /// Human-readable label: the family label, product label, or "custom".
  const std::string& label() const { return label_; }

  /// Squared lengths of the simple roots up to a positive factor per
  /// connected component, normalized to coprime positive integers.
  const std::vector<long long>& root_lengths() const { return lengths_; }

  bool adjacent(RootIndex i, RootIndex j) const { return i != j && entry(i, j) != 0; }
  bool same_length(RootIndex i, RootIndex j) const;
  void check_index(RootIndex i) const;

  bool operator==(const CartanSpec& other) const { return a_ == other.a_; }

 private:
  explicit CartanSpec(Matrix<int> a, std::string label,
                      std::optional<std::pair<char, std::size_t>> family);
  void compute_lengths();

  Matrix<int> a_;
  std::string label_ = "custom";
  std::optional<std::pair<char, std::size_t>> family_;
  std::vector<long long> lengths_;
};

/// m_ij of the Coxeter presentation: 2, 3, 4, 6 for a_ij a_ji = 0, 1, 2, 3.
int coxeter_exponent(const CartanSpec& cartan, RootIndex i, RootIndex j);

/// Simple reflection s_i on simple-root coordinates (column vectors).
IntegerMatrix reflection_matrix(const CartanSpec& cartan, RootIndex i);

/// Multiplicative order of a square integer matrix, or nullopt when it
/// exceeds `limit`.
std::optional<int> matrix_order(const IntegerMatrix& m, int limit = 64);

/// Combinatorial data of a spherical homogeneous space: the spherical roots
/// in simple-root coordinates and a basis of the weight lattice written in
/// coordinates of the character lattice of the maximal torus.
struct SphericalDatum {
  CartanSpec cartan;
  std::vector<IntegerVector> spherical_roots;
  IntegerMatrix weight_sublattice;

  /// Throws std::invalid_argument on dimension mismatch, dependent spherical
  /// roots, or a rank-deficient weight lattice basis.
  void validate() const;
};

/// Roots i with alpha_i or 2 alpha_i among the spherical roots; the simple
/// reflections generating the very little Weyl group.
RootSet very_little_generators(const SphericalDatum& datum);

/// True when two generators of the very little Weyl group are joined in the
/// Dynkin diagram and have the same length.
bool has_adjacent_equal_length_simple_spherical_roots(const SphericalDatum& datum);

/// Simple root alpha_i as an integer vector of length `rank`.
IntegerVector simple_root(std::size_t rank, RootIndex i, long long multiple = 1);

}  // namespace spherical
