#include "spherical/orbit_action.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace spherical {

std::string_view to_string(EdgeType type) {
  switch (type) {
    case EdgeType::P: return "P";
    case EdgeType::U: return "U";
    case EdgeType::T: return "T";
    case EdgeType::N: return "N";
    case EdgeType::T0: return "T0";
    case EdgeType::T1: return "T1";
    case EdgeType::T2: return "T2";
    case EdgeType::N0: return "N0";
    case EdgeType::N1: return "N1";
    case EdgeType::N2: return "N2";
  }
  return "?";
}

EdgeType parse_edge_type(std::string_view text) {
  static constexpr EdgeType all[] = {EdgeType::P,  EdgeType::U,  EdgeType::T,  EdgeType::N,
                                     EdgeType::T0, EdgeType::T1, EdgeType::T2, EdgeType::N0,
                                     EdgeType::N1, EdgeType::N2};
  for (auto t : all) {
    if (to_string(t) == text) return t;
  }
  throw std::invalid_argument("unknown edge type '" + std::string(text) + "'");
}

EdgeType complex_type(EdgeType type) {
  switch (type) {
    case EdgeType::T0:
    case EdgeType::T1:
    case EdgeType::T2: return EdgeType::T;
    case EdgeType::N0:
    case EdgeType::N1:
    case EdgeType::N2: return EdgeType::N;
    default: return type;
  }
}

bool is_complex_only(EdgeType type) { return type == EdgeType::T || type == EdgeType::N; }

bool is_tn_family(EdgeType type) {
  const EdgeType c = complex_type(type);
  return c == EdgeType::T || c == EdgeType::N;
}

SlotShape slot_shape(EdgeType type) {
  switch (type) {
    case EdgeType::P: return {1, 0};
    case EdgeType::U: return {1, 1};
    case EdgeType::T: return {1, 2};
    case EdgeType::N: return {1, 1};
    case EdgeType::T0: return {1, 0};
    case EdgeType::T1: return {1, 2};
    case EdgeType::T2: return {2, 2};
    case EdgeType::N0: return {1, 0};
    case EdgeType::N1: return {1, 1};
    case EdgeType::N2: return {2, 1};
  }
  return {0, 0};
}

namespace {

std::string describe(const Span& s) {
  return "span of root " + std::to_string(s.root) + " (" + std::string(to_string(s.type)) + ")";
}

}  // namespace

ReflectionTable::ReflectionTable(std::vector<Orbit> orbits, CartanSpec cartan,
                                 std::vector<Span> spans)
    : orbits_(std::move(orbits)), cartan_(std::move(cartan)), spans_(std::move(spans)) {
  for (std::size_t k = 0; k < orbits_.size(); ++k) {
    const Orbit& o = orbits_[k];
    if (o.name.empty()) throw std::invalid_argument("orbit names must be nonempty");
    if (o.is_open && !o.is_max_rank) {
      throw std::invalid_argument("orbit '" + o.name + "' is open but not of maximal rank");
    }
    if (!index_.emplace(o.name, k).second) {
      throw std::invalid_argument("duplicate orbit name '" + o.name + "'");
    }
  }
  name_order_.resize(orbits_.size());
  std::iota(name_order_.begin(), name_order_.end(), std::size_t{0});
  std::sort(name_order_.begin(), name_order_.end(),
            [&](std::size_t a, std::size_t b) { return orbits_[a].name < orbits_[b].name; });

  std::vector<std::size_t> name_rank(orbits_.size());
  for (std::size_t k = 0; k < name_order_.size(); ++k) name_rank[name_order_[k]] = k;

  // Member indices per span, open slot first.
  const std::size_t l = cartan_.rank();
  std::vector<std::vector<std::size_t>> members(spans_.size());
  std::vector<std::size_t> least(spans_.size());
  for (std::size_t k = 0; k < spans_.size(); ++k) {
    Span& s = spans_[k];
    if (s.root < 1 || s.root > l) {
      throw std::invalid_argument("span root " + std::to_string(s.root) + " out of range 1.." +
                                  std::to_string(l));
    }
    const SlotShape shape = slot_shape(s.type);
    if (s.open.size() != shape.open || s.lower.size() != shape.lower) {
      throw std::invalid_argument(describe(s) + " needs " + std::to_string(shape.open) +
                                  " open and " + std::to_string(shape.lower) +
                                  " lower orbits, got " + std::to_string(s.open.size()) + " and " +
                                  std::to_string(s.lower.size()));
    }
    std::sort(s.open.begin(), s.open.end());
    std::sort(s.lower.begin(), s.lower.end());
    auto& ids = members[k];
    for (const auto* slot : {&s.open, &s.lower}) {
      for (const auto& name : *slot) {
        const auto it = index_.find(name);
        if (it == index_.end()) {
          throw std::invalid_argument(describe(s) + " refers to unknown orbit '" + name + "'");
        }
        ids.push_back(it->second);
      }
    }
    for (std::size_t a = 0; a < ids.size(); ++a) {
      for (std::size_t b = a + 1; b < ids.size(); ++b) {
        if (ids[a] == ids[b]) throw std::invalid_argument(describe(s) + " lists an orbit twice");
      }
    }
    for (std::size_t u = 0; u < s.open.size(); ++u) {
      const auto& dim_up = orbits_[ids[u]].dimension;
      for (std::size_t d = s.open.size(); d < ids.size(); ++d) {
        const auto& dim_down = orbits_[ids[d]].dimension;
        if (dim_up && dim_down && *dim_down + 1 != *dim_up) {
          throw std::invalid_argument(describe(s) + ": lower orbit '" + orbits_[ids[d]].name +
                                      "' is not of codimension 1 in '" + s.open[u] + "'");
        }
      }
    }
    least[k] = name_rank[ids[0]];
    for (std::size_t id : ids) least[k] = std::min(least[k], name_rank[id]);
  }

  std::vector<std::size_t> order(spans_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (spans_[a].root != spans_[b].root) return spans_[a].root < spans_[b].root;
    return least[a] < least[b];
  });
  {
    std::vector<Span> sorted;
    std::vector<std::vector<std::size_t>> sorted_members;
    sorted.reserve(spans_.size());
    sorted_members.reserve(spans_.size());
    for (std::size_t k : order) {
      sorted.push_back(std::move(spans_[k]));
      sorted_members.push_back(std::move(members[k]));
    }
    spans_ = std::move(sorted);
    members = std::move(sorted_members);
  }

  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  span_index_.assign(l, std::vector<std::size_t>(orbits_.size(), unset));
  for (std::size_t k = 0; k < spans_.size(); ++k) {
    const Span& s = spans_[k];
    for (std::size_t id : members[k]) {
      auto& cell = span_index_[s.root - 1][id];
      if (cell != unset) {
        throw std::invalid_argument("orbit '" + orbits_[id].name + "' lies in two spans of root " +
                                    std::to_string(s.root));
      }
      cell = k;
    }
  }
  for (std::size_t r = 0; r < l; ++r) {
    for (std::size_t o = 0; o < orbits_.size(); ++o) {
      if (span_index_[r][o] == unset) {
        throw std::invalid_argument("orbit '" + orbits_[o].name + "' lies in no span of root " +
                                    std::to_string(r + 1));
      }
    }
  }

  permutations_.resize(l);
  for (std::size_t r = 0; r < l; ++r) {
    Permutation& p = permutations_[r];
    p.resize(orbits_.size());
    std::iota(p.begin(), p.end(), std::size_t{0});
  }
  // Members are stored open slot first, each slot sorted.
  auto swap_pair = [](Permutation& p, std::size_t a, std::size_t b) {
    p[a] = b;
    p[b] = a;
  };
  for (std::size_t k = 0; k < spans_.size(); ++k) {
    const Span& s = spans_[k];
    const auto& ids = members[k];
    Permutation& p = permutations_[s.root - 1];
    switch (s.type) {
      case EdgeType::U: swap_pair(p, ids[0], ids[1]); break;
      case EdgeType::T:
      case EdgeType::T1: swap_pair(p, ids[1], ids[2]); break;
      case EdgeType::T2:
        swap_pair(p, ids[0], ids[1]);
        swap_pair(p, ids[2], ids[3]);
        break;
      case EdgeType::N2: swap_pair(p, ids[0], ids[1]); break;
      default: break;  // P, N, T0, N0, N1 fix every member
    }
  }
}

ReflectionTable ReflectionTable::with_trivial_spans(std::vector<Orbit> orbits, CartanSpec cartan,
                                                    std::vector<Span> spans) {
  const std::size_t l = cartan.rank();
  std::vector<std::set<std::string>> covered(l);
  for (const auto& s : spans) {
    if (s.root < 1 || s.root > l) continue;  // reported by the strict constructor
    covered[s.root - 1].insert(s.open.begin(), s.open.end());
    covered[s.root - 1].insert(s.lower.begin(), s.lower.end());
  }
  for (std::size_t r = 0; r < l; ++r) {
    for (const auto& o : orbits) {
      if (!covered[r].count(o.name)) spans.push_back(Span{r + 1, EdgeType::P, {o.name}, {}});
    }
  }
  return ReflectionTable(std::move(orbits), std::move(cartan), std::move(spans));
}

bool ReflectionTable::contains(std::string_view name) const {
  return index_.find(std::string(name)) != index_.end();
}

std::size_t ReflectionTable::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw std::invalid_argument("unknown orbit '" + std::string(name) + "'");
  return it->second;
}

const Span& ReflectionTable::span_of(RootIndex root, std::size_t orbit_index) const {
  cartan_.check_index(root);
  return spans_[span_index_[root - 1].at(orbit_index)];
}

const Permutation& ReflectionTable::permutation(RootIndex root) const {
  cartan_.check_index(root);
  return permutations_[root - 1];
}

std::string_view ReflectionTable::image(RootIndex root, std::string_view name) const {
  return orbits_[permutation(root)[index_of(name)]].name;
}

Permutation reflection_permutation(const ReflectionTable& table, RootIndex i) {
  return table.permutation(i);
}

std::size_t apply_word(const ReflectionTable& table, const std::vector<RootIndex>& word,
                       std::size_t orbit_index) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    orbit_index = table.permutation(*it)[orbit_index];
  }
  return orbit_index;
}

bool BraidReport::holds() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const BraidPair& p) { return p.holds; });
}

const BraidPair* BraidReport::first_failure() const {
  for (const auto& p : pairs) {
    if (!p.holds) return &p;
  }
  return nullptr;
}

const BraidPair* BraidReport::find(RootIndex i, RootIndex j) const {
  if (i > j) std::swap(i, j);
  for (const auto& p : pairs) {
    if (p.i == i && p.j == j) return &p;
  }
  return nullptr;
}

namespace {

std::vector<std::size_t> resolve_domain(const ReflectionTable& table,
                                        const std::set<std::string>& names) {
  std::vector<std::size_t> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(table.index_of(n));  // std::set: name order
  return out;
}

void require_invariant(const ReflectionTable& table, const RootSet& roots,
                       const std::vector<std::size_t>& domain) {
  std::vector<char> member(table.size(), 0);
  for (auto k : domain) member[k] = 1;
  for (auto r : roots) {
    const Permutation& p = table.permutation(r);
    for (auto k : domain) {
      if (!member[p[k]]) {
        throw std::invalid_argument("orbit subset is not stable under s" + std::to_string(r) +
                                    ": '" + table.orbits()[k].name + "' maps to '" +
                                    table.orbits()[p[k]].name + "'");
      }
    }
  }
}

RootSet all_roots(const ReflectionTable& table) {
  RootSet out;
  for (std::size_t r = 1; r <= table.cartan().rank(); ++r) out.insert(r);
  return out;
}

Partition partition_from_roots(const ReflectionTable& table, std::vector<std::size_t> parent,
                               const std::vector<std::size_t>& domain) {
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::map<std::string, std::vector<std::string>> by_least;
  std::map<std::size_t, std::string> least_of_root;
  for (auto k : domain) {  // domain is in name order
    const std::size_t root = find(k);
    auto [it, inserted] = least_of_root.emplace(root, table.orbits()[k].name);
    by_least[it->second].push_back(table.orbits()[k].name);
  }
  Partition out;
  out.reserve(by_least.size());
  for (auto& [least, members] : by_least) out.push_back(std::move(members));
  return out;
}

}  // namespace

BraidReport check_braid(const ReflectionTable& table,
                        const std::optional<std::set<std::string>>& restrict_to,
                        const std::optional<RootSet>& roots) {
  const RootSet gens = roots ? *roots : all_roots(table);
  for (auto r : gens) table.cartan().check_index(r);
  std::vector<std::size_t> domain;
  if (restrict_to) {
    domain = resolve_domain(table, *restrict_to);
  } else {
    domain = table.name_order();
  }
  require_invariant(table, gens, domain);

  BraidReport report;
  for (auto i : gens) {
    for (auto j : gens) {
      if (j <= i) continue;
      BraidPair pair{i, j, coxeter_exponent(table.cartan(), i, j), true, std::nullopt};
      const Permutation& si = table.permutation(i);
      const Permutation& sj = table.permutation(j);
      for (auto x : domain) {
        std::size_t y = x;
        for (int k = 0; k < pair.m; ++k) y = si[sj[y]];
        if (y != x) {
          pair.holds = false;
          pair.witness = table.orbits()[x].name;
          break;
        }
      }
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

Partition subgroup_orbits(const ReflectionTable& table, const RootSet& generators,
                          const std::set<std::string>& domain) {
  const std::vector<std::size_t> members = resolve_domain(table, domain);
  require_invariant(table, generators, members);
  std::vector<std::size_t> parent(table.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto r : generators) {
    const Permutation& p = table.permutation(r);
    for (auto k : members) {
      const std::size_t a = find(k);
      const std::size_t b = find(p[k]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  return partition_from_roots(table, std::move(parent), members);
}

Partition real_group_orbit_classes(const ReflectionTable& table) {
  const std::set<std::string> opens = open_orbits(table);
  const std::vector<std::size_t> members = resolve_domain(table, opens);
  std::vector<std::size_t> parent(table.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t r = 1; r <= table.cartan().rank(); ++r) {
    const Permutation& p = table.permutation(r);
    for (auto k : members) {
      if (!is_tn_family(table.span_of(r, k).type)) continue;
      const std::size_t image = p[k];
      if (!table.orbits()[image].is_open) {
        throw std::logic_error("reflection s" + std::to_string(r) + " of type " +
                               std::string(to_string(table.span_of(r, k).type)) +
                               " maps open orbit '" + table.orbits()[k].name +
                               "' outside the open orbits");
      }
      const std::size_t a = find(k);
      const std::size_t b = find(image);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  return partition_from_roots(table, std::move(parent), members);
}

std::set<std::string> open_orbits(const ReflectionTable& table) {
  std::set<std::string> out;
  for (const auto& o : table.orbits()) {
    if (o.is_open) out.insert(o.name);
  }
  return out;
}

std::set<std::string> all_orbits(const ReflectionTable& table) {
  std::set<std::string> out;
  for (const auto& o : table.orbits()) out.insert(o.name);
  return out;
}

TypeCensus type_census(const ReflectionTable& table) {
  TypeCensus census;
  for (std::size_t r = 1; r <= table.cartan().rank(); ++r) {
    census.spans_by_type[r];
    census.max_rank_types[r];
  }
  for (const Span& s : table.spans()) {
    ++census.spans_by_type[s.root][s.type];
    bool touches_max_rank = false;
    for (const auto* slot : {&s.open, &s.lower}) {
      for (const auto& name : *slot) touches_max_rank |= table.orbit(name).is_max_rank;
    }
    if (touches_max_rank) {
      census.max_rank_types[s.root].insert(s.type);
      if (s.type == EdgeType::T2) census.t2_on_max_rank = true;
    }
  }
  return census;
}

std::map<std::string, std::map<RootIndex, ProjectedMove>> complex_projection(
    const ReflectionTable& table, const std::function<std::string(const Orbit&)>& label) {
  std::vector<std::string> labels;
  labels.reserve(table.size());
  for (const auto& o : table.orbits()) labels.push_back(label(o));

  std::map<std::string, std::map<RootIndex, ProjectedMove>> out;
  for (std::size_t k = 0; k < table.size(); ++k) {
    auto& moves = out[labels[k]];
    for (std::size_t r = 1; r <= table.cartan().rank(); ++r) {
      const ProjectedMove move{complex_type(table.span_of(r, k).type),
                               labels[table.permutation(r)[k]]};
      auto [it, inserted] = moves.emplace(r, move);
      if (!inserted && (it->second.type != move.type || it->second.image != move.image)) {
        throw std::logic_error("s" + std::to_string(r) + " does not descend to label '" +
                               labels[k] + "'");
      }
    }
  }
  return out;
}

}  // namespace spherical
