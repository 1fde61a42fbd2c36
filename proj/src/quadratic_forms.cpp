#include "spherical/quadratic_forms.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <stdexcept>
#include <unordered_map>

namespace spherical::quadratic {

namespace {

constexpr std::string_view kDot = "\xE2\x80\xA2";  // U+2022 BULLET

bool is_sign(Entry e) { return e == Entry::Plus || e == Entry::Minus; }

}  // namespace

std::size_t SignedPattern::rank() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](Entry e) { return e != Entry::Zero; }));
}

bool SignedPattern::has_arc(std::size_t j, std::size_t k) const {
  if (j > k) std::swap(j, k);
  return std::find(arcs.begin(), arcs.end(), std::pair{j, k}) != arcs.end();
}

std::size_t SignedPattern::partner(std::size_t position) const {
  for (const auto& [j, k] : arcs) {
    if (j == position) return k;
    if (k == position) return j;
  }
  return 0;
}

void SignedPattern::validate(bool signed_mode) const {
  const std::size_t n = entries.size();
  if (n == 0) throw std::invalid_argument("pattern must have at least one position");
  std::vector<int> used(n + 1, 0);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const auto [j, k] = arcs[a];
    if (j < 1 || k > n || j >= k) {
      throw std::invalid_argument("arc [" + std::to_string(j) + "," + std::to_string(k) +
                                  "] is not an increasing pair of positions in 1.." +
                                  std::to_string(n));
    }
    if (a > 0 && !(arcs[a - 1] < arcs[a])) throw std::invalid_argument("arcs must be sorted");
    if (used[j]++ || used[k]++) throw std::invalid_argument("arcs must be pairwise disjoint");
    if (entries[j - 1] != Entry::Dot || entries[k - 1] != Entry::Dot) {
      throw std::invalid_argument("arc endpoints must be dots");
    }
  }
  for (std::size_t pos = 1; pos <= n; ++pos) {
    const Entry e = entries[pos - 1];
    if (used[pos] || e == Entry::Zero) continue;
    if (signed_mode && e == Entry::Dot) {
      throw std::invalid_argument("signed pattern has an unpaired dot at position " +
                                  std::to_string(pos));
    }
    if (!signed_mode && is_sign(e)) {
      throw std::invalid_argument("complex pattern carries a sign at position " +
                                  std::to_string(pos));
    }
  }
}

std::string SignedPattern::to_string() const {
  std::string out;
  for (Entry e : entries) {
    switch (e) {
      case Entry::Zero: out += '0'; break;
      case Entry::Plus: out += '+'; break;
      case Entry::Minus: out += '-'; break;
      case Entry::Dot: out += kDot; break;
    }
  }
  for (const auto& [j, k] : arcs) {
    out += " [" + std::to_string(j) + "," + std::to_string(k) + "]";
  }
  return out;
}

SignedPattern SignedPattern::parse(std::string_view text) {
  SignedPattern p;
  std::size_t pos = 0;
  while (pos < text.size() && text[pos] != ' ' && text[pos] != '[') {
    if (text.substr(pos, kDot.size()) == kDot) {
      p.entries.push_back(Entry::Dot);
      pos += kDot.size();
      continue;
    }
    switch (text[pos]) {
      case '0': p.entries.push_back(Entry::Zero); break;
      case '+': p.entries.push_back(Entry::Plus); break;
      case '-': p.entries.push_back(Entry::Minus); break;
      case '.':
      case '*': p.entries.push_back(Entry::Dot); break;
      default:
        throw std::invalid_argument("unexpected character in pattern '" + std::string(text) + "'");
    }
    ++pos;
  }
  auto read_number = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("malformed arc in pattern '" + std::string(text) + "'");
    return static_cast<std::size_t>(std::stoul(std::string(text.substr(start, pos - start))));
  };
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      continue;
    }
    if (text[pos] != '[') throw std::invalid_argument("malformed arc in pattern '" + std::string(text) + "'");
    ++pos;
    const std::size_t j = read_number();
    if (pos >= text.size() || text[pos] != ',') {
      throw std::invalid_argument("malformed arc in pattern '" + std::string(text) + "'");
    }
    ++pos;
    const std::size_t k = read_number();
    if (pos >= text.size() || text[pos] != ']') {
      throw std::invalid_argument("malformed arc in pattern '" + std::string(text) + "'");
    }
    ++pos;
    p.arcs.emplace_back(std::min(j, k), std::max(j, k));
  }
  std::sort(p.arcs.begin(), p.arcs.end());
  return p;
}

std::vector<SignedPattern> enumerate_patterns(std::size_t n, std::size_t r, bool signed_mode) {
  if (n == 0) throw std::invalid_argument("enumerate_patterns: n must be at least 1");
  if (r > n) {
    throw std::invalid_argument("enumerate_patterns: rank " + std::to_string(r) +
                                " exceeds the number of variables " + std::to_string(n));
  }
  std::vector<SignedPattern> out;
  std::vector<std::size_t> support;

  // Pair off or sign the chosen support positions, smallest free one first.
  std::function<void(SignedPattern&, std::vector<bool>&)> assign = [&](SignedPattern& p,
                                                                       std::vector<bool>& done) {
    std::size_t first = support.size();
    for (std::size_t a = 0; a < support.size(); ++a) {
      if (!done[a]) {
        first = a;
        break;
      }
    }
    if (first == support.size()) {
      SignedPattern q = p;
      std::sort(q.arcs.begin(), q.arcs.end());
      out.push_back(std::move(q));
      return;
    }
    const std::size_t pos = support[first];
    done[first] = true;
    if (signed_mode) {
      for (Entry e : {Entry::Plus, Entry::Minus}) {
        p.entries[pos - 1] = e;
        assign(p, done);
      }
    } else {
      p.entries[pos - 1] = Entry::Dot;
      assign(p, done);
    }
    for (std::size_t b = first + 1; b < support.size(); ++b) {
      if (done[b]) continue;
      done[b] = true;
      p.entries[pos - 1] = Entry::Dot;
      p.entries[support[b] - 1] = Entry::Dot;
      p.arcs.emplace_back(pos, support[b]);
      assign(p, done);
      p.arcs.pop_back();
      p.entries[support[b] - 1] = Entry::Zero;
      done[b] = false;
    }
    p.entries[pos - 1] = Entry::Zero;
    done[first] = false;
  };

  std::function<void(std::size_t)> choose = [&](std::size_t next) {
    if (support.size() == r) {
      SignedPattern p;
      p.entries.assign(n, Entry::Zero);
      std::vector<bool> done(r, false);
      assign(p, done);
      return;
    }
    for (std::size_t pos = next; pos <= n; ++pos) {
      if (n - pos + 1 < r - support.size()) break;
      support.push_back(pos);
      choose(pos + 1);
      support.pop_back();
    }
  };
  choose(1);

  std::vector<std::pair<std::string, std::size_t>> keys;
  keys.reserve(out.size());
  for (std::size_t k = 0; k < out.size(); ++k) keys.emplace_back(out[k].to_string(), k);
  std::sort(keys.begin(), keys.end());
  std::vector<SignedPattern> sorted;
  sorted.reserve(out.size());
  for (const auto& [key, k] : keys) sorted.push_back(std::move(out[k]));
  return sorted;
}

unsigned long long pattern_count(std::size_t n, std::size_t r, bool signed_mode) {
  auto binomial = [](std::size_t a, std::size_t b) {
    if (b > a) return 0ULL;
    unsigned long long c = 1;
    for (std::size_t k = 1; k <= b; ++k) c = c * (a - b + k) / k;
    return c;
  };
  unsigned long long sum = 0;
  for (std::size_t k = 0; 2 * k <= r; ++k) {
    unsigned long long double_factorial = 1;
    for (std::size_t m = 2 * k - 1; k > 0 && m >= 1; m -= 2) {
      double_factorial *= m;
      if (m == 1) break;
    }
    unsigned long long term = binomial(r, 2 * k) * double_factorial;
    if (signed_mode) term <<= (r - 2 * k);
    sum += term;
  }
  return binomial(n, r) * sum;
}

bool is_maximal_rank(const SignedPattern& p) { return p.arcs.empty(); }

bool is_open_pattern(const SignedPattern& p) {
  if (!p.arcs.empty()) return false;
  const std::size_t r = p.rank();
  for (std::size_t pos = 1; pos <= p.size(); ++pos) {
    if ((p.at(pos) != Entry::Zero) != (pos <= r)) return false;
  }
  return true;
}

namespace {

// rho(k, m): rank of the upper-left k x m block of the canonical form's
// matrix, which is a partial permutation matrix. Stored row-major with
// stride n + 1.
std::vector<int> rank_profile(const SignedPattern& p) {
  const std::size_t n = p.size();
  const std::size_t w = n + 1;
  std::vector<int> cells(w * w, 0);
  for (std::size_t pos = 1; pos <= n; ++pos) {
    if (p.at(pos) == Entry::Zero) continue;
    const std::size_t other = p.partner(pos);
    cells[pos * w + (other == 0 ? pos : other)] = 1;
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t m = 1; m <= n; ++m) {
      cells[k * w + m] += cells[(k - 1) * w + m] + cells[k * w + m - 1] - cells[(k - 1) * w + m - 1];
    }
  }
  return cells;
}

// The open orbit of a U-span has the larger rank profile.
bool dominates(const SignedPattern& p, const SignedPattern& q) {
  const auto a = rank_profile(p);
  const auto b = rank_profile(q);
  bool ge = true;
  bool le = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    ge &= a[k] >= b[k];
    le &= a[k] <= b[k];
  }
  if (ge == le) {
    throw std::logic_error("patterns '" + p.to_string() + "' and '" + q.to_string() +
                           "' have incomparable or equal rank profiles");
  }
  return ge;
}

}  // namespace

EdgeClass classify_edge(const SignedPattern& p, std::size_t i) {
  const std::size_t n = p.size();
  if (i < 1 || i >= n) {
    throw std::invalid_argument("classify_edge: position " + std::to_string(i) +
                                " out of range 1.." + std::to_string(n == 0 ? 0 : n - 1));
  }
  const Entry a = p.at(i);
  const Entry b = p.at(i + 1);
  const bool a_isolated = a != Entry::Zero && p.partner(i) == 0;
  const bool b_isolated = b != Entry::Zero && p.partner(i + 1) == 0;
  if (a_isolated && b_isolated) {
    if (a == Entry::Dot || b == Entry::Dot) return {EdgeType::N, true};
    return {a == b ? EdgeType::N0 : EdgeType::N2, true};
  }
  if (p.has_arc(i, i + 1)) {
    // A pattern made only of arcs belongs to both models; it is read as
    // signed unless it has an isolated dot.
    bool has_isolated_dot = false;
    for (std::size_t pos = 1; pos <= n; ++pos) {
      has_isolated_dot |= p.at(pos) == Entry::Dot && p.partner(pos) == 0;
    }
    return {has_isolated_dot ? EdgeType::N : EdgeType::N2, false};
  }
  if (a == Entry::Zero && b == Entry::Zero) return {EdgeType::P, true};
  return {EdgeType::U, dominates(p, apply_transposition(p, i))};
}

SignedPattern apply_transposition(const SignedPattern& p, std::size_t i) {
  if (i < 1 || i >= p.size()) {
    throw std::invalid_argument("apply_transposition: position " + std::to_string(i) +
                                " out of range");
  }
  SignedPattern q = p;
  std::swap(q.entries[i - 1], q.entries[i]);
  auto relabel = [i](std::size_t pos) { return pos == i ? i + 1 : pos == i + 1 ? i : pos; };
  for (auto& [j, k] : q.arcs) {
    j = relabel(j);
    k = relabel(k);
    if (j > k) std::swap(j, k);
  }
  std::sort(q.arcs.begin(), q.arcs.end());
  return q;
}

SignedPattern complexify(const SignedPattern& p) {
  SignedPattern q = p;
  for (auto& e : q.entries) {
    if (is_sign(e)) e = Entry::Dot;
  }
  return q;
}

CartanSpec gl_cartan(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gl_cartan: n must be at least 1");
  if (n == 1) return CartanSpec::from_matrix(Matrix<int>(0, 0));
  return CartanSpec::of_type('A', n - 1);
}

namespace {

ReflectionTable pattern_table(std::size_t n, std::size_t r, bool signed_mode) {
  const auto patterns = enumerate_patterns(n, r, signed_mode);
  std::vector<Orbit> orbits;
  std::unordered_map<std::string, std::size_t> index;
  orbits.reserve(patterns.size());
  index.reserve(patterns.size());
  for (const auto& p : patterns) {
    index.emplace(p.to_string(), orbits.size());
    orbits.push_back(Orbit{p.to_string(), is_open_pattern(p), is_maximal_rank(p), std::nullopt});
  }
  auto lookup = [&](const SignedPattern& q) -> std::size_t { return index.at(q.to_string()); };

  std::vector<Span> spans;
  std::vector<char> placed(patterns.size());
  for (std::size_t i = 1; i < n; ++i) {
    std::fill(placed.begin(), placed.end(), 0);
    for (std::size_t k = 0; k < patterns.size(); ++k) {
      if (placed[k]) continue;
      const SignedPattern& p = patterns[k];
      const std::string& name = orbits[k].name;
      const EdgeClass cls = classify_edge(p, i);
      switch (cls.type) {
        case EdgeType::P:
        case EdgeType::N0:
          spans.push_back(Span{i, cls.type, {name}, {}});
          placed[k] = 1;
          break;
        case EdgeType::U: {
          const std::size_t image = lookup(apply_transposition(p, i));
          const std::string& other = orbits[image].name;
          spans.push_back(cls.open ? Span{i, EdgeType::U, {name}, {other}}
                                   : Span{i, EdgeType::U, {other}, {name}});
          placed[k] = placed[image] = 1;
          break;
        }
        case EdgeType::N:
        case EdgeType::N2: {
          if (!cls.open) break;  // placed together with its open partners
          SignedPattern closed = p;
          closed.entries[i - 1] = Entry::Dot;
          closed.entries[i] = Entry::Dot;
          closed.arcs.emplace_back(i, i + 1);
          std::sort(closed.arcs.begin(), closed.arcs.end());
          const std::size_t lower = lookup(closed);
          if (cls.type == EdgeType::N) {
            spans.push_back(Span{i, EdgeType::N, {name}, {orbits[lower].name}});
          } else {
            const std::size_t image = lookup(apply_transposition(p, i));
            spans.push_back(Span{i, EdgeType::N2, {name, orbits[image].name}, {orbits[lower].name}});
            placed[image] = 1;
          }
          placed[k] = placed[lower] = 1;
          break;
        }
        default:
          throw std::logic_error("unexpected edge type for a pattern");
      }
    }
  }
  return ReflectionTable(std::move(orbits), gl_cartan(n), std::move(spans));
}

}  // namespace

ReflectionTable build_table(std::size_t n, std::size_t r) { return pattern_table(n, r, true); }

ReflectionTable build_complex_table(std::size_t n, std::size_t r) {
  return pattern_table(n, r, false);
}

std::vector<InertiaClass> sylvester_classes(std::size_t n, std::size_t r) {
  const ReflectionTable table = build_table(n, r);
  std::vector<InertiaClass> out;
  for (auto& members : real_group_orbit_classes(table)) {
    InertiaClass cls;
    bool first = true;
    for (const auto& name : members) {
      const SignedPattern p = SignedPattern::parse(name);
      const auto plus = static_cast<std::size_t>(std::count(p.entries.begin(), p.entries.end(), Entry::Plus));
      const auto minus = static_cast<std::size_t>(std::count(p.entries.begin(), p.entries.end(), Entry::Minus));
      if (first) {
        cls.plus = plus;
        cls.minus = minus;
        first = false;
      } else if (cls.plus != plus || cls.minus != minus) {
        throw std::logic_error("orbit class mixes inertia indices");
      }
    }
    cls.members = std::move(members);
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(),
            [](const InertiaClass& a, const InertiaClass& b) { return a.plus > b.plus; });
  return out;
}

SphericalDatum quadratic_forms_datum(std::size_t n, std::size_t r) {
  if (r == 0 || r > n) {
    throw std::invalid_argument("quadratic_forms_datum: need 1 <= r <= n");
  }
  SphericalDatum datum;
  datum.cartan = gl_cartan(n);
  const std::size_t l = datum.cartan.rank();
  for (std::size_t k = 1; k <= std::min(r, l); ++k) {
    datum.spherical_roots.push_back(simple_root(l, k, 2));
  }
  datum.weight_sublattice = IntegerMatrix::Zero(static_cast<Eigen::Index>(r),
                                                static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t j = 0; j <= k; ++j) {
      datum.weight_sublattice(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j)) = 2;
    }
  }
  return datum;
}

}  // namespace spherical::quadratic
