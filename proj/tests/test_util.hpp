#ifndef QUQUAT_TESTS_TEST_UTIL_HPP_
#define QUQUAT_TESTS_TEST_UTIL_HPP_

#include <initializer_list>
#include <tuple>

#include "ququat/types.hpp"

namespace ququat::test {

inline RVector vec(std::initializer_list<double> xs) {
  RVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

inline RMatrix diag(std::initializer_list<double> xs) { return vec(xs).asDiagonal(); }

/// Sum of coefficient * |ket)(bra|.
inline RMatrix dyads(int dim, std::initializer_list<std::tuple<double, int, int>> terms) {
  RMatrix m = RMatrix::Zero(dim, dim);
  for (const auto& [c, ket, bra] : terms) m(ket, bra) += c;
  return m;
}

template <typename A, typename B>
double diff(const A& a, const B& b) {
  return max_abs(a - b);
}

}  // namespace ququat::test

#endif  // QUQUAT_TESTS_TEST_UTIL_HPP_
