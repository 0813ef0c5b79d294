#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gsv/duplicial.hpp"
#include "gsv/verdict.hpp"

namespace gsv {

using BigInt = boost::multiprecision::cpp_int;

/// Exact integer matrix of the alternating-sum boundary; rows are indexed by
/// (n-1)-simplices, columns by n-simplices.
struct BoundaryMatrix {
  int level = 0;
  long long rows = 0, cols = 0;
  std::vector<BigInt> a;  // row-major

  BigInt& at(long long r, long long c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  const BigInt& at(long long r, long long c) const {
    return a[static_cast<std::size_t>(r) * cols + c];
  }
};

/// Boundary of the (unnormalised) chain complex of the bar simplicial set.
/// `column_perm` optionally renumbers the n-simplices (used to confirm the
/// homology is enumeration-order independent).
BoundaryMatrix boundary_matrix(const BarComplex& bar, int level,
                               const std::vector<long long>* column_perm = nullptr,
                               const std::vector<long long>* row_perm = nullptr);

/// d(n) o d(n+1) = 0 for all computed levels.
Verdict check_boundary_squares_to_zero(const BarComplex& bar, int level_cap);

/// Nontrivial diagonal entries of the Smith normal form, each dividing the
/// next; the rank is the count.
std::vector<BigInt> smith_divisors(BoundaryMatrix m);

struct HomologyGroup {
  int level = 0;
  long long betti = 0;
  std::vector<long long> torsion;  // divisors > 1, ascending divisibility
};

/// H_0 .. H_{level_cap-1} of the complex (needs boundaries up to level_cap).
std::vector<HomologyGroup> homology_groups(const BarComplex& bar, int level_cap);

/// Same, with a deterministic reshuffling of every simplex enumeration.
std::vector<HomologyGroup> homology_groups_permuted(const BarComplex& bar, int level_cap);

}  // namespace gsv
