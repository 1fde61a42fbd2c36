#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace spherical {

// Expression templates are switched off so that the scalar composes with
// Eigen's own expression machinery.
using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Exact integer matrix: rows are lattice vectors in ambient coordinates.
using IntegerMatrix = Matrix<BigInt>;
using IntegerVector = Vector<BigInt>;

/// Ordered list of elementary divisors m_1 | m_2 | ... | m_r.
using DivisorList = std::vector<BigInt>;

inline IntegerMatrix to_integer_matrix(const std::vector<std::vector<long long>>& rows) {
  const auto r = static_cast<Eigen::Index>(rows.size());
  const auto c = r == 0 ? Eigen::Index{0} : static_cast<Eigen::Index>(rows.front().size());
  IntegerMatrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != c)
      throw std::invalid_argument("ragged matrix rows");
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rows[i].at(j);
  }
  return m;
}

inline DivisorList to_divisors(const std::vector<long long>& values) {
  return {values.begin(), values.end()};
}

}  // namespace spherical
