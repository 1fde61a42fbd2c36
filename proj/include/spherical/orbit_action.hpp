#pragma once

// Reflection operators on finite sets of (real) Borel orbits. A table lists,
// for every simple root, a partition of the orbit set into minimal parabolic
// spans, each tagged with its edge type. The simple reflection acts span by
// span according to the type.

#include "spherical/root_system.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace spherical {

enum class EdgeType { P, U, T, N, T0, T1, T2, N0, N1, N2 };

std::string_view to_string(EdgeType type);
EdgeType parse_edge_type(std::string_view text);

/// Collapses T0/T1/T2 to T and N0/N1/N2 to N; other types are unchanged.
EdgeType complex_type(EdgeType type);
bool is_complex_only(EdgeType type);
/// T- or N-family, real or complex.
bool is_tn_family(EdgeType type);

struct SlotShape {
  std::size_t open;
  std::size_t lower;
};
SlotShape slot_shape(EdgeType type);

struct Orbit {
  std::string name;
  bool is_open = false;
  bool is_max_rank = false;
  std::optional<int> dimension;
};

struct Span {
  RootIndex root = 0;
  EdgeType type = EdgeType::P;
  std::vector<std::string> open;
  std::vector<std::string> lower;
};

/// Images of orbit indices (positions in ReflectionTable::orbits()).
using Permutation = std::vector<std::size_t>;

/// Classes of a partition, each sorted by name; classes ordered by their
/// least member.
using Partition = std::vector<std::vector<std::string>>;

class ReflectionTable {
 public:
  /// Strict constructor: every orbit must appear in exactly one span of
  /// every root. Throws std::invalid_argument on any violation.
  ReflectionTable(std::vector<Orbit> orbits, CartanSpec cartan, std::vector<Span> spans);

  /// Orbits missing from the spans of some root are placed in singleton
  /// spans of type P for that root.
  static ReflectionTable with_trivial_spans(std::vector<Orbit> orbits, CartanSpec cartan,
                                            std::vector<Span> spans);

  const std::vector<Orbit>& orbits() const { return orbits_; }
  const CartanSpec& cartan() const { return cartan_; }
  /// Canonical order: by root, then by least member name.
  const std::vector<Span>& spans() const { return spans_; }

  std::size_t size() const { return orbits_.size(); }
  bool contains(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;
  const Orbit& orbit(std::string_view name) const { return orbits_[index_of(name)]; }

  const Span& span_of(RootIndex root, std::size_t orbit_index) const;
  const Span& span_of(RootIndex root, std::string_view name) const {
    return span_of(root, index_of(name));
  }
  /// Orbit indices sorted by name.
  const std::vector<std::size_t>& name_order() const { return name_order_; }

  const Permutation& permutation(RootIndex root) const;
  std::string_view image(RootIndex root, std::string_view name) const;

 private:
  std::vector<Orbit> orbits_;
  CartanSpec cartan_;
  std::vector<Span> spans_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::size_t> name_order_;
  std::vector<std::vector<std::size_t>> span_index_;  // [root - 1][orbit] -> span
  std::vector<Permutation> permutations_;             // [root - 1]
};

/// The involution induced by simple root i.
Permutation reflection_permutation(const ReflectionTable& table, RootIndex i);

/// Applies a word of simple reflections, rightmost letter first.
std::size_t apply_word(const ReflectionTable& table, const std::vector<RootIndex>& word,
                       std::size_t orbit_index);

struct BraidPair {
  RootIndex i = 0;
  RootIndex j = 0;
  int m = 2;
  bool holds = true;
  /// Least (by name) orbit moved by (s_i s_j)^m when the relation fails.
  std::optional<std::string> witness;
};

struct BraidReport {
  std::vector<BraidPair> pairs;

  bool holds() const;
  const BraidPair* first_failure() const;
  const BraidPair* find(RootIndex i, RootIndex j) const;
};

/// Checks (s_i s_j)^{m_ij} = id for every pair of `roots` (all simple roots
/// by default) on `restrict_to` (all orbits by default). The restriction must
/// be stable under every reflection considered.
BraidReport check_braid(const ReflectionTable& table,
                        const std::optional<std::set<std::string>>& restrict_to = std::nullopt,
                        const std::optional<RootSet>& roots = std::nullopt);

/// Orbits of the group generated by the given reflections on `domain`.
Partition subgroup_orbits(const ReflectionTable& table, const RootSet& generators,
                          const std::set<std::string>& domain);

/// Classes of open orbits joined by reflections of T- or N-family type with
/// respect to the orbit; one class per real group orbit.
Partition real_group_orbit_classes(const ReflectionTable& table);

std::set<std::string> open_orbits(const ReflectionTable& table);
std::set<std::string> all_orbits(const ReflectionTable& table);

struct TypeCensus {
  /// Number of spans of each type, per root.
  std::map<RootIndex, std::map<EdgeType, std::size_t>> spans_by_type;
  /// Types of the spans that contain a maximal-rank orbit, per root.
  std::map<RootIndex, std::set<EdgeType>> max_rank_types;
  /// Some span containing a maximal-rank orbit is of type T2.
  bool t2_on_max_rank = false;
};

TypeCensus type_census(const ReflectionTable& table);

struct ProjectedMove {
  EdgeType type;
  std::string image;
};

/// Merges orbits with equal labels and collapses real types to complex ones.
/// Result: label -> root -> (complex type, image label). Throws
/// std::logic_error when the reflections or the collapsed types do not
/// descend to the labels.
std::map<std::string, std::map<RootIndex, ProjectedMove>> complex_projection(
    const ReflectionTable& table, const std::function<std::string(const Orbit&)>& label);

}  // namespace spherical
