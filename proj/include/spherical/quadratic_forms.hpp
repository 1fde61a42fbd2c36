#pragma once

// Borel orbits on quadratic forms of rank r in n variables under GL_n,
// encoded as (signed) patterns: a sign or a dot at isolated positions, arcs
// joining pairs of positions that carry an off-diagonal coefficient, and
// zeros elsewhere.

#include "spherical/orbit_action.hpp"
#include "spherical/root_system.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spherical::quadratic {

enum class Entry : char { Zero, Plus, Minus, Dot };

struct SignedPattern {
  std::vector<Entry> entries;
  /// 1-based position pairs (j, k) with j < k, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> arcs;

  std::size_t size() const { return entries.size(); }
  /// Number of active (nonzero) positions.
  std::size_t rank() const;
  Entry at(std::size_t position) const { return entries.at(position - 1); }
  bool has_arc(std::size_t j, std::size_t k) const;
  /// Partner of an arc endpoint, or 0.
  std::size_t partner(std::size_t position) const;

  /// Signed mode: isolated actives carry signs. Complex mode: all actives
  /// are dots. Throws std::invalid_argument on a malformed pattern.
  void validate(bool signed_mode) const;

  /// "+-0•• [4,5]": one character per entry, then the arcs.
  std::string to_string() const;
  static SignedPattern parse(std::string_view text);

  friend bool operator==(const SignedPattern&, const SignedPattern&) = default;
};

/// All patterns with r active positions, sorted by their text form.
std::vector<SignedPattern> enumerate_patterns(std::size_t n, std::size_t r, bool signed_mode);

/// Closed-form pattern count C(n,r) * sum_k C(r,2k) (2k-1)!! * (2^(r-2k) if signed).
unsigned long long pattern_count(std::size_t n, std::size_t r, bool signed_mode);

bool is_maximal_rank(const SignedPattern& p);

/// Open B-orbit: signs (or dots) at positions 1..r, zeros after.
bool is_open_pattern(const SignedPattern& p);

struct EdgeClass {
  EdgeType type;
  /// Position of the orbit in its span: true for the open slot.
  bool open;
};

/// Type of alpha_i = e_i - e_{i+1} with respect to the pattern, read from
/// the entries at positions i and i+1. Patterns whose actives are dots get
/// complex types (N in place of N0/N2).
EdgeClass classify_edge(const SignedPattern& p, std::size_t i);

/// Swaps positions i and i+1 and relabels the arcs.
SignedPattern apply_transposition(const SignedPattern& p, std::size_t i);

CartanSpec gl_cartan(std::size_t n);

/// Reflection table over all signed patterns, roots alpha_1..alpha_{n-1}.
ReflectionTable build_table(std::size_t n, std::size_t r);
/// Same over the unsigned (complex) patterns with complex edge types.
ReflectionTable build_complex_table(std::size_t n, std::size_t r);

/// Forgets the signs of a signed pattern.
SignedPattern complexify(const SignedPattern& p);

struct InertiaClass {
  std::size_t plus = 0;
  std::size_t minus = 0;
  std::vector<std::string> members;
};

/// Real group orbit classes of open patterns labeled by inertia indices,
/// ordered by decreasing number of pluses.
std::vector<InertiaClass> sylvester_classes(std::size_t n, std::size_t r);

/// Spherical roots 2 alpha_1, ..., 2 alpha_r (those that exist in A_{n-1})
/// and weight lattice spanned by 2 omega_1, ..., 2 omega_r in the basis
/// eps_1, ..., eps_n.
SphericalDatum quadratic_forms_datum(std::size_t n, std::size_t r);

}  // namespace spherical::quadratic
