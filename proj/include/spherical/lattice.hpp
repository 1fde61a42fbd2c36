#pragma once

// Exact lattice computations: Smith normal form of integer matrices, the
// elementary divisors of a sublattice inclusion, and the sign-tuple count of
// open real Borel orbits that those divisors determine.

#include "spherical/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spherical {

/// u * m * v == diagonal(d), with u and v unimodular and d a divisibility
/// chain of nonnegative entries (trailing zeros past the rank).
template <typename Scalar>
struct SnfDecomposition {
  std::vector<Scalar> d;
  Matrix<Scalar> u;
  Matrix<Scalar> v;

  Matrix<Scalar> diagonal() const {
    Matrix<Scalar> out = Matrix<Scalar>::Zero(u.rows(), v.cols());
    for (std::size_t k = 0; k < d.size(); ++k) {
      out(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = d[k];
    }
    return out;
  }

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& x : d) r += (x != 0) ? 1 : 0;
    return r;
  }
};

namespace detail {

template <typename Scalar>
Scalar magnitude(const Scalar& x) {
  using std::abs;
  return abs(x);
}

template <typename Scalar>
std::optional<std::pair<Eigen::Index, Eigen::Index>> smallest_nonzero(const Matrix<Scalar>& a,
                                                                      Eigen::Index from) {
  std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
  Scalar best_abs{};
  for (Eigen::Index i = from; i < a.rows(); ++i) {
    for (Eigen::Index j = from; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Scalar m = magnitude(a(i, j));
      if (!best || m < best_abs) {
        best = std::pair{i, j};
        best_abs = m;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Smith normal form with smallest-magnitude pivoting. Row operations are
/// accumulated in u, column operations in v; negative pivots are flipped
/// through u.
template <typename Derived>
SnfDecomposition<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() == 0 || m.cols() == 0) {
    throw std::invalid_argument("smith_normal_form: empty matrix");
  }
  Matrix<Scalar> a = m;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Matrix<Scalar> u = Matrix<Scalar>::Identity(rows, rows);
  Matrix<Scalar> v = Matrix<Scalar>::Identity(cols, cols);
  const Eigen::Index diag = std::min(rows, cols);

  for (Eigen::Index t = 0; t < diag; ++t) {
    for (;;) {
      auto pivot = detail::smallest_nonzero(a, t);
      if (!pivot) break;
      auto [pi, pj] = *pivot;
      if (pi != t) {
        a.row(t).swap(a.row(pi));
        u.row(t).swap(u.row(pi));
      }
      if (pj != t) {
        a.col(t).swap(a.col(pj));
        v.col(t).swap(v.col(pj));
      }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        const Scalar q = a(i, t) / a(t, t);
        if (q != 0) {
          a.row(i) -= q * a.row(t);
          u.row(i) -= q * u.row(t);
        }
        if (a(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        const Scalar q = a(t, j) / a(t, t);
        if (q != 0) {
          a.col(j) -= q * a.col(t);
          v.col(j) -= q * v.col(t);
        }
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole remaining block.
      bool divides = true;
      for (Eigen::Index i = t + 1; i < rows && divides; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (a(i, j) % a(t, t) != 0) {
            a.row(t) += a.row(i);
            u.row(t) += u.row(i);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (a(t, t) < 0) {
      a.row(t) = -a.row(t);
      u.row(t) = -u.row(t);
    }
  }

  SnfDecomposition<Scalar> out;
  out.d.reserve(static_cast<std::size_t>(diag));
  for (Eigen::Index k = 0; k < diag; ++k) out.d.push_back(a(k, k));
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

/// Rank over the rationals.
template <typename Derived>
std::size_t integer_rank(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return smith_normal_form(m).rank();
}

/// Elementary divisors of the inclusion of the row span of `basis` into the
/// ambient lattice Z^cols, in divisibility order.
template <typename Derived>
std::vector<typename Derived::Scalar> elementary_divisors(const Eigen::MatrixBase<Derived>& basis) {
  if (basis.rows() == 0 || basis.cols() == 0) {
    throw std::invalid_argument("elementary_divisors: empty sublattice basis");
  }
  if (basis.rows() > basis.cols()) {
    throw std::invalid_argument("elementary_divisors: " + std::to_string(basis.rows()) +
                                " generators cannot be independent in rank " +
                                std::to_string(basis.cols()));
  }
  auto snf = smith_normal_form(basis);
  const std::size_t rank = snf.rank();
  if (rank != static_cast<std::size_t>(basis.rows())) {
    throw std::invalid_argument("elementary_divisors: sublattice basis is rank deficient (rank " +
                                std::to_string(rank) + " < " + std::to_string(basis.rows()) +
                                " rows)");
  }
  return snf.d;
}

/// Index of the row span in its saturation: the product of the divisors.
template <typename Derived>
typename Derived::Scalar saturation_index(const Eigen::MatrixBase<Derived>& basis) {
  typename Derived::Scalar product = 1;
  for (const auto& m : elementary_divisors(basis)) product *= m;
  return product;
}

/// Coordinates of the rows of `sub` in the lattice basis given by the rows
/// of `basis` (square, full rank). Throws if some row of `sub` is not an
/// integral combination of the basis.
template <typename DerivedS, typename DerivedB>
Matrix<typename DerivedS::Scalar> coordinates_in_basis(const Eigen::MatrixBase<DerivedS>& sub,
                                                       const Eigen::MatrixBase<DerivedB>& basis) {
  using Scalar = typename DerivedS::Scalar;
  if (basis.rows() != basis.cols() || sub.cols() != basis.cols()) {
    throw std::invalid_argument("coordinates_in_basis: shape mismatch");
  }
  auto snf = smith_normal_form(basis);
  if (snf.rank() != static_cast<std::size_t>(basis.rows())) {
    throw std::invalid_argument("coordinates_in_basis: basis is singular");
  }
  // basis^{-1} = v * diag(d)^{-1} * u
  Matrix<Scalar> sv = sub * snf.v;
  for (Eigen::Index k = 0; k < sv.cols(); ++k) {
    const Scalar& dk = snf.d[static_cast<std::size_t>(k)];
    for (Eigen::Index i = 0; i < sv.rows(); ++i) {
      if (sv(i, k) % dk != 0) {
        throw std::invalid_argument("coordinates_in_basis: row " + std::to_string(i) +
                                    " does not lie in the lattice");
      }
      sv(i, k) /= dk;
    }
  }
  return sv * snf.u;
}

/// Number of T(R)-orbits on the real slice: 2^p with p the count of even m_i.
template <typename Scalar>
std::uint64_t count_open_real_orbits(const std::vector<Scalar>& divisors) {
  std::size_t p = 0;
  for (const auto& m : divisors) {
    if (m < 1) throw std::invalid_argument("count_open_real_orbits: divisors must be >= 1");
    if (m % 2 == 0) ++p;
  }
  if (p >= 64) throw std::overflow_error("count_open_real_orbits: 2^p exceeds 64 bits");
  return std::uint64_t{1} << p;
}

/// 1-based positions of the even divisors; the signs of these coordinates
/// label the open real orbits.
template <typename Scalar>
std::vector<std::size_t> sign_coordinates(const std::vector<Scalar>& divisors) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (divisors[i] < 1) throw std::invalid_argument("sign_coordinates: divisors must be >= 1");
    if (divisors[i] % 2 == 0) out.push_back(i + 1);
  }
  return out;
}

}  // namespace spherical
