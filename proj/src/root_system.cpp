#include "spherical/root_system.hpp"

#include "spherical/lattice.hpp"

#include <boost/rational.hpp>

#include <cctype>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace spherical {

namespace {

Matrix<int> family_matrix(char family, std::size_t rank) {
  const auto n = static_cast<Eigen::Index>(rank);
  Matrix<int> a = Matrix<int>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&](Eigen::Index i, Eigen::Index j) {
    a(i, j) = -1;
    a(j, i) = -1;
  };
  switch (family) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
      for (Eigen::Index i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      // alpha_n short: <alpha_n^vee, alpha_{n-1}> = -2.
      if (rank < 2) throw std::invalid_argument("type B needs rank >= 2");
      for (Eigen::Index i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;
      break;
    case 'C':
      if (rank < 2) throw std::invalid_argument("type C needs rank >= 2");
      for (Eigen::Index i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;
      break;
    case 'D':
      if (rank < 2) throw std::invalid_argument("type D needs rank >= 2");
      if (rank == 2) break;  // D2 = A1 x A1
      for (Eigen::Index i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'G':
      if (rank != 2) throw std::invalid_argument("type G exists only in rank 2");
      // alpha_1 short, alpha_2 long.
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
    default:
      throw std::invalid_argument(std::string("unsupported root system family '") + family + "'");
  }
  return a;
}

Matrix<int> block_diagonal(const Matrix<int>& x, const Matrix<int>& y) {
  Matrix<int> out = Matrix<int>::Zero(x.rows() + y.rows(), x.cols() + y.cols());
  out.topLeftCorner(x.rows(), x.cols()) = x;
  out.bottomRightCorner(y.rows(), y.cols()) = y;
  return out;
}

}  // namespace

CartanSpec::CartanSpec(Matrix<int> a, std::string label,
                       std::optional<std::pair<char, std::size_t>> family)
    : a_(std::move(a)), label_(std::move(label)), family_(family) {
  compute_lengths();
}

CartanSpec CartanSpec::of_type(char family, std::size_t rank) {
  family = static_cast<char>(std::toupper(static_cast<unsigned char>(family)));
  return CartanSpec(family_matrix(family, rank), family + std::to_string(rank),
                    std::pair{family, rank});
}

CartanSpec CartanSpec::parse(std::string_view label) {
  std::vector<std::pair<char, std::size_t>> parts;
  std::size_t pos = 0;
  while (pos < label.size()) {
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(label[pos])));
    std::size_t end = pos + 1;
    while (end < label.size() && std::isdigit(static_cast<unsigned char>(label[end]))) ++end;
    if (end == pos + 1) {
      throw std::invalid_argument("cannot parse Cartan label '" + std::string(label) + "'");
    }
    parts.emplace_back(family, std::stoul(std::string(label.substr(pos + 1, end - pos - 1))));
    pos = end;
    if (pos < label.size()) {
      if (label[pos] != 'x' && label[pos] != 'X') {
        throw std::invalid_argument("cannot parse Cartan label '" + std::string(label) + "'");
      }
      ++pos;
      if (pos == label.size()) {
        throw std::invalid_argument("cannot parse Cartan label '" + std::string(label) + "'");
      }
    }
  }
  if (parts.empty()) throw std::invalid_argument("empty Cartan label");
  if (parts.size() == 1) return of_type(parts[0].first, parts[0].second);

  Matrix<int> a(0, 0);
  std::string text;
  for (const auto& [family, rank] : parts) {
    a = block_diagonal(a, family_matrix(family, rank));
    if (!text.empty()) text += 'x';
    text += family + std::to_string(rank);
  }
  return CartanSpec(std::move(a), std::move(text), std::nullopt);
}

CartanSpec CartanSpec::from_matrix(const Matrix<int>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("Cartan matrix must be square");
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 2) throw std::invalid_argument("Cartan matrix must have 2 on the diagonal");
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (i == j) continue;
      if (a(i, j) > 0) throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
      if ((a(i, j) == 0) != (a(j, i) == 0)) {
        throw std::invalid_argument("Cartan matrix must satisfy a_ij = 0 iff a_ji = 0");
      }
      const int product = a(i, j) * a(j, i);
      if (product > 3) {
        throw std::invalid_argument("Cartan matrix entry products a_ij*a_ji must lie in {0,1,2,3}");
      }
    }
  }
  return CartanSpec(a, "custom", std::nullopt);
}

void CartanSpec::compute_lengths() {
  using Q = boost::rational<long long>;
  const std::size_t n = rank();
  std::vector<std::optional<Q>> len(n);
  for (std::size_t start = 0; start < n; ++start) {
    if (len[start]) continue;
    std::vector<std::size_t> component;
    std::queue<std::size_t> todo;
    len[start] = Q(1);
    todo.push(start);
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop();
      component.push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        const int aij = a_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        const int aji = a_(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i));
        if (i == j || aij == 0) continue;
        // a_ij |alpha_i|^2 = a_ji |alpha_j|^2
        const Q expected = *len[i] * Q(aij, aji);
        if (!len[j]) {
          len[j] = expected;
          todo.push(j);
        } else if (*len[j] != expected) {
          throw std::invalid_argument("Cartan matrix is not symmetrizable");
        }
      }
    }
    long long denominators = 1;
    for (auto i : component) denominators = std::lcm(denominators, len[i]->denominator());
    long long common = 0;
    for (auto i : component) {
      *len[i] *= denominators;
      common = std::gcd(common, len[i]->numerator());
    }
    for (auto i : component) *len[i] /= common;
  }
  lengths_.clear();
  for (const auto& l : len) lengths_.push_back(l->numerator());
}

void CartanSpec::check_index(RootIndex i) const {
  if (i < 1 || i > rank()) {
    throw std::invalid_argument("root index " + std::to_string(i) + " out of range 1.." +
                                std::to_string(rank()));
  }
}

int CartanSpec::entry(RootIndex i, RootIndex j) const {
  check_index(i);
  check_index(j);
  return a_(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1));
}

bool CartanSpec::same_length(RootIndex i, RootIndex j) const {
  check_index(i);
  check_index(j);
  return lengths_[i - 1] == lengths_[j - 1];
}

int coxeter_exponent(const CartanSpec& cartan, RootIndex i, RootIndex j) {
  if (i == j) throw std::invalid_argument("coxeter_exponent: indices must differ");
  switch (cartan.entry(i, j) * cartan.entry(j, i)) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::logic_error("coxeter_exponent: invalid Cartan entry product");
  }
}

IntegerMatrix reflection_matrix(const CartanSpec& cartan, RootIndex i) {
  cartan.check_index(i);
  const auto n = static_cast<Eigen::Index>(cartan.rank());
  const auto row = static_cast<Eigen::Index>(i - 1);
  IntegerMatrix s = IntegerMatrix::Identity(n, n);
  for (Eigen::Index j = 0; j < n; ++j) s(row, j) -= cartan.matrix()(row, j);
  return s;
}

std::optional<int> matrix_order(const IntegerMatrix& m, int limit) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix_order: matrix must be square");
  const IntegerMatrix identity = IntegerMatrix::Identity(m.rows(), m.cols());
  IntegerMatrix power = m;
  for (int k = 1; k <= limit; ++k) {
    if (power == identity) return k;
    power = (power * m).eval();
  }
  return std::nullopt;
}

IntegerVector simple_root(std::size_t rank, RootIndex i, long long multiple) {
  if (i < 1 || i > rank) throw std::invalid_argument("simple_root: index out of range");
  IntegerVector v = IntegerVector::Zero(static_cast<Eigen::Index>(rank));
  v(static_cast<Eigen::Index>(i - 1)) = multiple;
  return v;
}

void SphericalDatum::validate() const {
  const auto l = static_cast<Eigen::Index>(cartan.rank());
  if (!spherical_roots.empty()) {
    IntegerMatrix roots(static_cast<Eigen::Index>(spherical_roots.size()), l);
    for (std::size_t k = 0; k < spherical_roots.size(); ++k) {
      if (spherical_roots[k].size() != l) {
        throw std::invalid_argument("spherical root " + std::to_string(k + 1) + " has length " +
                                    std::to_string(spherical_roots[k].size()) + ", expected " +
                                    std::to_string(l));
      }
      roots.row(static_cast<Eigen::Index>(k)) = spherical_roots[k].transpose();
    }
    if (l == 0 || integer_rank(roots) != spherical_roots.size()) {
      throw std::invalid_argument("spherical roots are not linearly independent");
    }
  }
  if (weight_sublattice.rows() == 0 || weight_sublattice.cols() == 0) {
    throw std::invalid_argument("weight lattice basis is empty");
  }
  if (integer_rank(weight_sublattice) != static_cast<std::size_t>(weight_sublattice.rows())) {
    throw std::invalid_argument("weight lattice basis is not of full row rank");
  }
}

RootSet very_little_generators(const SphericalDatum& datum) {
  RootSet out;
  const std::size_t l = datum.cartan.rank();
  for (const auto& gamma : datum.spherical_roots) {
    if (static_cast<std::size_t>(gamma.size()) != l) continue;
    std::optional<std::size_t> support;
    bool single = true;
    for (Eigen::Index k = 0; k < gamma.size(); ++k) {
      if (gamma(k) == 0) continue;
      if (support) {
        single = false;
        break;
      }
      support = static_cast<std::size_t>(k);
    }
    if (!single || !support) continue;
    const BigInt& c = gamma(static_cast<Eigen::Index>(*support));
    if (c == 1 || c == 2) out.insert(*support + 1);
  }
  return out;
}

bool has_adjacent_equal_length_simple_spherical_roots(const SphericalDatum& datum) {
  const RootSet gens = very_little_generators(datum);
  for (auto i : gens) {
    for (auto j : gens) {
      if (i < j && datum.cartan.adjacent(i, j) && datum.cartan.same_length(i, j)) return true;
    }
  }
  return false;
}

}  // namespace spherical
