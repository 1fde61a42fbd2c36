#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spherical/catalog.hpp"
#include "spherical/lattice.hpp"

using namespace spherical;
using namespace spherical::catalog;

namespace {

std::string image(const ReflectionTable& t, RootIndex i, const std::string& name) {
  return std::string(t.image(i, name));
}

bool involutions(const ReflectionTable& t) {
  for (std::size_t r = 1; r <= t.cartan().rank(); ++r) {
    const Permutation& p = t.permutation(r);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (p[p[k]] != k) return false;
    }
  }
  return true;
}

// Braid check on the open orbits for the very little Weyl group.
bool open_braid_holds(const SphericalDatum& d, const ReflectionTable& t) {
  return check_braid(t, open_orbits(t), very_little_generators(d)).holds();
}

}  // namespace

TEST_CASE("ordered pairs") {
  for (std::size_t n = 2; n <= 6; ++n) {
    CAPTURE(n);
    const auto [datum, t] = build_ordered_pairs(n);
    CHECK(very_little_generators(datum) == RootSet{n});
    CHECK(open_orbits(t) == std::set<std::string>{"O", "O'"});
    CHECK(subgroup_orbits(t, {n}, {"O", "O'"}) == Partition{{"O", "O'"}});
    CHECK(real_group_orbit_classes(t) == Partition{{"O", "O'"}});
    CHECK(image(t, n, "O") == "O'");
    for (std::size_t i = 1; i < n; ++i) {
      const std::string oi = orbit_name(0, i);
      CHECK(image(t, i, "O") == oi);
      CHECK(image(t, i, "O'") == orbit_name(1, i));
      CHECK(image(t, i + 1, oi) == oi);
      CHECK(t.span_of(i + 1, oi).type == EdgeType::T1);
      for (const char* top : {"O", "O'"}) {
        const std::size_t x = t.index_of(top);
        CHECK(apply_word(t, {i, i + 1, i}, x) == x);
      }
    }
    const auto d = elementary_divisors(datum.weight_sublattice);
    CHECK(count_open_real_orbits(d) == open_orbits(t).size());
    CHECK(saturation_index(datum.weight_sublattice) == 2);
    CHECK(involutions(t));
    CHECK(open_braid_holds(datum, t) != has_adjacent_equal_length_simple_spherical_roots(datum));
  }
  CHECK_THROWS_AS(build_ordered_pairs(1), std::invalid_argument);
}

TEST_CASE("unordered pairs") {
  for (std::size_t n = 2; n <= 10; ++n) {
    CAPTURE(n);
    const auto [datum, t] = build_unordered_pairs(n);
    const auto d = elementary_divisors(datum.weight_sublattice);
    CHECK(saturation_index(datum.weight_sublattice) == 4);
    const bool four = n % 4 == 0 || n % 4 == 3;
    CHECK(count_open_real_orbits(d) == (four ? 4U : 2U));
    CHECK(open_orbits(t).size() == count_open_real_orbits(d));
    CHECK(real_group_orbit_classes(t).size() == 2);
    CHECK(very_little_generators(datum) == RootSet{n});
    CHECK(involutions(t));
    CHECK(open_braid_holds(datum, t) != has_adjacent_equal_length_simple_spherical_roots(datum));
    CHECK(t.span_of(n, orbit_name(0, n - 1)).type == EdgeType::N1);
    CHECK(t.span_of(n, "O").type == (four ? EdgeType::N2 : EdgeType::N1));
  }
  const auto [d4, t4] = build_unordered_pairs(4);
  CHECK(real_group_orbit_classes(t4) == Partition{{"O", "O'"}, {"O''", "O'''"}});
  CHECK(elementary_divisors(d4.weight_sublattice) == to_divisors({1, 1, 2, 2}));
  CHECK(elementary_divisors(build_unordered_pairs(5).first.weight_sublattice) == to_divisors({1, 1, 1, 1, 4}));
}

TEST_CASE("torus counterexample") {
  const auto a2 = build_torus_counterexample(CartanSpec::of_type('A', 2));
  const auto report = check_braid(a2);
  CHECK_FALSE(report.holds());
  REQUIRE(report.find(1, 2) != nullptr);
  CHECK(report.find(1, 2)->m == 3);
  CHECK_FALSE(report.find(1, 2)->holds);
  CHECK(check_braid(build_torus_counterexample(CartanSpec::parse("A1xA1"))).holds());
  CHECK(check_braid(build_torus_counterexample(CartanSpec::of_type('B', 2))).holds());

  const auto a3 = build_torus_counterexample(CartanSpec::of_type('A', 3));
  const auto r3 = check_braid(a3);
  CHECK_FALSE(r3.find(1, 2)->holds);
  CHECK_FALSE(r3.find(2, 3)->holds);
  CHECK(r3.find(1, 3)->holds);
  CHECK(open_orbits(a3).size() == 8);
  for (const auto& s : a3.spans()) {
    if (s.type != EdgeType::P) CHECK(s.type == EdgeType::T2);
  }
  CHECK(type_census(a3).t2_on_max_rank);
}

TEST_CASE("G2 case") {
  const auto t = build_g2_case();
  const auto report = check_braid(t);
  CHECK(report.holds());
  CHECK(report.pairs.at(0).m == 6);
  CHECK(subgroup_orbits(t, {1, 2}, open_orbits(t)) == Partition{{"++", "+-", "-+", "--"}});
  for (const auto& o : open_orbits(t)) {
    for (std::size_t i = 1; i <= 2; ++i) {
      const std::string img = image(t, i, o);
      std::size_t changed = 0;
      for (std::size_t k = 0; k < 2; ++k) changed += img[k] != o[k];
      CHECK(changed == 1);
      CHECK(img[i - 1] != o[i - 1]);
    }
  }
  const auto d = torus_datum(CartanSpec::of_type('G', 2));
  CHECK(open_braid_holds(d, t));
  CHECK_FALSE(has_adjacent_equal_length_simple_spherical_roots(d));
}

TEST_CASE("catalog braid behavior matches the equal-length hypothesis") {
  for (const char* label : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "A1xA1", "A1xA2"}) {
    CAPTURE(label);
    const auto cartan = CartanSpec::parse(label);
    const auto d = torus_datum(cartan);
    const auto t = build_torus_counterexample(cartan);
    CHECK(involutions(t));
    CHECK(open_braid_holds(d, t) != has_adjacent_equal_length_simple_spherical_roots(d));
  }
}

TEST_CASE("example dispatch") {
  CHECK(build_example({"ordered_pairs", 3, std::nullopt}).table.cartan().label() == "B3");
  CHECK(build_example({"g2_case", 2, std::nullopt}).table.size() == 4 + 8);
  CHECK_THROWS_AS(build_example({"torus_counterexample", 2, std::nullopt}), std::invalid_argument);
  CHECK_THROWS_AS(build_example({"spheres", 2, std::nullopt}), std::invalid_argument);
  CHECK(example_names().size() == 4);
}
