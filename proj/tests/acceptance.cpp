// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include "oracles.hpp"
#include "spherical/catalog.hpp"
#include "spherical/lattice.hpp"
#include "spherical/quadratic_forms.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>

using namespace spherical;

namespace {

constexpr double kSylvesterSeconds = 1.0;
constexpr double kFullActionSeconds = 5.0;
constexpr double kSnfSeconds = 10.0;
constexpr int kSnfTrials = 500;
constexpr int kSnfMaxSize = 6;
constexpr int kSnfEntryBound = 20;
constexpr unsigned kSnfSeed = 424242;

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string timing(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

// 1. Sylvester classes for r <= n <= 8.
Outcome sylvester() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<quadratic::InertiaClass>> computed;
  for (std::size_t n = 1; n <= 8; ++n) {
    for (std::size_t r = 0; r <= n; ++r) computed[{n, r}] = quadratic::sylvester_classes(n, r);
  }
  const double elapsed = seconds_since(start);

  for (const auto& [key, classes] : computed) {
    const auto [n, r] = key;
    const std::string at = "(n,r)=(" + std::to_string(n) + "," + std::to_string(r) + ")";
    if (classes.size() != r + 1) out.fail(at + ": " + std::to_string(classes.size()) + " classes");
    // Independent grouping of the open patterns (sign tuples, then zeros).
    std::map<std::size_t, std::vector<std::string>> by_plus;
    for (std::size_t bits = 0; bits < (std::size_t{1} << r); ++bits) {
      std::string s;
      std::size_t plus = 0;
      for (std::size_t k = 0; k < r; ++k) {
        const bool minus = (bits >> k) & 1;
        s += minus ? '-' : '+';
        plus += !minus;
      }
      s += std::string(n - r, '0');
      by_plus[plus].push_back(s);
    }
    for (auto& [plus, members] : by_plus) std::sort(members.begin(), members.end());
    Partition from_table = real_group_orbit_classes(quadratic::build_table(n, r));
    Partition from_classes;
    for (const auto& c : classes) {
      if (c.plus + c.minus != r) out.fail(at + ": label does not sum to r");
      if (by_plus[c.plus] != c.members) out.fail(at + ": class (" + std::to_string(c.plus) + "," +
                                                 std::to_string(c.minus) + ") differs from inertia grouping");
      from_classes.push_back(c.members);
    }
    std::sort(from_classes.begin(), from_classes.end());
    if (from_classes != from_table) out.fail(at + ": partition differs from real_group_orbit_classes");
  }
  if (elapsed >= kSylvesterSeconds) out.fail("took " + timing(elapsed));
  out.detail = out.ok ? "r <= n <= 8, " + timing(elapsed) : out.detail;
  return out;
}

// 2. Full Weyl group action on all patterns, r <= n <= 6.
Outcome full_action() {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  std::size_t pairs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t r = 0; r <= n; ++r) {
      const auto report = check_braid(quadratic::build_table(n, r));
      pairs += report.pairs.size();
      if (!report.holds()) {
        const auto* f = report.first_failure();
        out.fail("(n,r)=(" + std::to_string(n) + "," + std::to_string(r) + ") pair (" + std::to_string(f->i) +
                 "," + std::to_string(f->j) + ") witness " + *f->witness);
      }
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kFullActionSeconds) out.fail("took " + timing(elapsed));
  if (out.ok) out.detail = std::to_string(pairs) + " relations, " + timing(elapsed);
  return out;
}

// 3. Torus counterexample fails exactly on adjacent equal-length pairs (m = 3).
Outcome counterexample() {
  Outcome out;
  std::size_t checked = 0;
  for (const char* label : {"A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "D5", "G2", "A1xA1", "A2xB2",
                            "G2xA1"}) {
    const CartanSpec c = CartanSpec::parse(label);
    const auto table = catalog::build_torus_counterexample(c);
    const auto full = check_braid(table);
    const auto open = check_braid(table, open_orbits(table));
    for (std::size_t i = 1; i <= c.rank(); ++i) {
      for (std::size_t j = i + 1; j <= c.rank(); ++j) {
        const int m = coxeter_exponent(c, i, j);
        const bool should_fail = m == 3 && c.adjacent(i, j) && c.same_length(i, j);
        for (const BraidReport* r : {&full, &open}) {
          const BraidPair* p = r->find(i, j);
          if (!p || p->m != m || p->holds == should_fail) {
            out.fail(std::string(label) + " pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
          }
          ++checked;
        }
      }
    }
  }
  const bool a2_fails = !check_braid(catalog::build_torus_counterexample(CartanSpec::of_type('A', 2))).holds();
  const bool g2_holds = check_braid(catalog::build_g2_case()).holds();
  if (!a2_fails) out.fail("A2 does not fail");
  if (!g2_holds) out.fail("G2 does not hold");
  if (out.ok) out.detail = std::to_string(checked) + " pair checks; A2 fails, G2 holds";
  return out;
}

// 4. Divisors of the unordered-pairs weight lattice.
Outcome unordered_divisors() {
  Outcome out;
  for (std::size_t n = 3; n <= 10; ++n) {
    const auto datum = catalog::build_unordered_pairs(n).first;
    DivisorList d = elementary_divisors(datum.weight_sublattice);
    std::reverse(d.begin(), d.end());  // largest first
    const bool four = n % 4 == 0 || n % 4 == 3;
    DivisorList expected(n, BigInt(1));
    expected[0] = four ? 2 : 4;
    if (four) expected[1] = 2;
    BigInt product = 1;
    for (const auto& x : d) product *= x;
    const std::string at = "n=" + std::to_string(n);
    if (d != expected) out.fail(at + ": divisors " + [&] {
      std::string s;
      for (const auto& x : d) s += x.str() + " ";
      return s;
    }());
    if (product != 4) out.fail(at + ": product " + product.str());
    if (count_open_real_orbits(d) != (four ? 4U : 2U)) out.fail(at + ": open orbit count");
  }
  if (out.ok) out.detail = "n = 3..10";
  return out;
}

// 5. Ordered-pairs diagram.
Outcome ordered_diagram() {
  Outcome out;
  for (std::size_t n = 2; n <= 6; ++n) {
    const auto t = catalog::build_ordered_pairs(n).second;
    const std::string at = "n=" + std::to_string(n);
    if (t.image(n, "O") != "O'") out.fail(at + ": s_n(O) != O'");
    for (std::size_t i = 1; i < n; ++i) {
      const std::string oi = catalog::orbit_name(0, i);
      if (t.image(i, "O") != oi) out.fail(at + ": s_i(O) != O_i");
      if (t.image(i + 1, oi) != oi) out.fail(at + ": s_{i+1}(O_i) != O_i");
      for (const char* top : {"O", "O'"}) {
        const std::size_t x = t.index_of(top);
        if (apply_word(t, {i, i + 1, i}, x) != x) out.fail(at + ": composite moves " + top);
      }
    }
    if (real_group_orbit_classes(t).size() != 1) out.fail(at + ": more than one class");
  }
  if (out.ok) out.detail = "n = 2..6";
  return out;
}

// 6. Two real group orbits on unordered pairs.
Outcome unordered_classes() {
  Outcome out;
  for (std::size_t n = 2; n <= 12; ++n) {
    const auto classes = real_group_orbit_classes(catalog::build_unordered_pairs(n).second);
    if (classes.size() != 2) out.fail("n=" + std::to_string(n) + ": " + std::to_string(classes.size()) + " classes");
  }
  if (out.ok) out.detail = "n = 2..12";
  return out;
}

// 7. Random SNF property suite.
Outcome snf_properties() {
  Outcome out;
  std::mt19937 rng(kSnfSeed);
  std::uniform_int_distribution<int> size(1, kSnfMaxSize);
  std::uniform_int_distribution<int> entry(-kSnfEntryBound, kSnfEntryBound);
  const auto start = std::chrono::steady_clock::now();
  for (int trial = 0; trial < kSnfTrials; ++trial) {
    const int r = size(rng);
    const int c = size(rng);
    IntegerMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
      for (int k = 0; k < c; ++k) m(i, k) = entry(rng);
    }
    const auto snf = smith_normal_form(m);
    const std::string at = "trial " + std::to_string(trial);
    if (snf.u * m * snf.v != snf.diagonal()) out.fail(at + ": u M v != diag(d)");
    if (abs(oracle::determinant(snf.u)) != 1 || abs(oracle::determinant(snf.v)) != 1) out.fail(at + ": not unimodular");
    BigInt product = 1;
    for (std::size_t k = 0; k < snf.d.size(); ++k) {
      if (snf.d[k] < 0) out.fail(at + ": negative divisor");
      if (k + 1 < snf.d.size() && !(snf.d[k] == 0 ? snf.d[k + 1] == 0 : snf.d[k + 1] % snf.d[k] == 0)) {
        out.fail(at + ": divisibility chain broken");
      }
      product *= snf.d[k];
      if (product != oracle::gcd_of_minors(m, k + 1)) out.fail(at + ": gcd-of-minors mismatch");
    }
  }
  const double elapsed = seconds_since(start);
  if (elapsed >= kSnfSeconds) out.fail("took " + timing(elapsed));
  if (out.ok) out.detail = std::to_string(kSnfTrials) + " matrices, " + timing(elapsed);
  return out;
}

// 8. Involutions everywhere; 2^r open patterns.
Outcome involutions() {
  Outcome out;
  std::size_t tables = 0;
  auto check = [&](const ReflectionTable& t, const std::string& what) {
    ++tables;
    for (std::size_t r = 1; r <= t.cartan().rank(); ++r) {
      const Permutation& p = t.permutation(r);
      for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[p[k]] != k) {
          out.fail(what + ": s" + std::to_string(r) + " is not an involution");
          return;
        }
      }
    }
  };
  for (std::size_t n = 1; n <= 7; ++n) {
    for (std::size_t r = 0; r <= n; ++r) {
      const auto t = quadratic::build_table(n, r);
      const std::string at = "quadratic (" + std::to_string(n) + "," + std::to_string(r) + ")";
      check(t, at);
      check(quadratic::build_complex_table(n, r), "complex " + at);
      const std::uint64_t expected = count_open_real_orbits(DivisorList(r, BigInt(2)));
      if (open_orbits(t).size() != (std::size_t{1} << r) || expected != (std::uint64_t{1} << r)) {
        out.fail(at + ": open pattern count");
      }
    }
  }
  for (std::size_t n = 2; n <= 10; ++n) {
    check(catalog::build_ordered_pairs(n).second, "ordered_pairs " + std::to_string(n));
    check(catalog::build_unordered_pairs(n).second, "unordered_pairs " + std::to_string(n));
  }
  for (const char* label : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "A1xA1"}) {
    check(catalog::build_torus_counterexample(CartanSpec::parse(label)), std::string("torus ") + label);
  }
  check(catalog::build_g2_case(), "g2_case");
  if (out.ok) out.detail = std::to_string(tables) + " tables";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"1 Sylvester classes equal inertia classes", sylvester},
      {"2 full Weyl group action on all patterns", full_action},
      {"3 torus counterexample braid failures", counterexample},
      {"4 unordered-pairs elementary divisors", unordered_divisors},
      {"5 ordered-pairs orbit diagram", ordered_diagram},
      {"6 two real orbits on unordered pairs", unordered_classes},
      {"7 Smith normal form property suite", snf_properties},
      {"8 involutions and 2^r open patterns", involutions},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s  criterion %s: %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
    failures += !o.ok;
  }
  return failures;
}
