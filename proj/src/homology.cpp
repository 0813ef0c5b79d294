#include "gsv/homology.hpp"

#include <algorithm>
#include <map>

#include "gsv/error.hpp"
#include "gsv/scan.hpp"

namespace gsv {

BoundaryMatrix boundary_matrix(const BarComplex& bar, int level,
                               const std::vector<long long>* column_perm,
                               const std::vector<long long>* row_perm) {
  if (level < 1) fail(Errc::ConfigInvalid, "boundary level must be >= 1");
  BoundaryMatrix m;
  m.level = level;
  m.rows = bar.level_size(level - 1);
  m.cols = bar.level_size(level);
  m.a.assign(static_cast<std::size_t>(m.rows) * m.cols, 0);
  for (long long c = 0; c < m.cols; ++c) {
    const long long col = column_perm ? (*column_perm)[c] : c;
    for (int i = 0; i <= level; ++i) {
      long long r = bar.face(level, i, c);
      if (row_perm) r = (*row_perm)[r];
      m.at(r, col) += (i % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

Verdict check_boundary_squares_to_zero(const BarComplex& bar, int level_cap) {
  // Column-wise through the faces: each column of the boundary has one entry
  // per face, so the composite is a small signed sum per simplex.
  std::uint64_t checks = 0;
  for (int level = 1; level < level_cap; ++level) {
    const long long cols = bar.level_size(level + 1);
    for (long long c = 0; c < cols; ++c) {
      std::map<long long, long long> acc;
      for (int i = 0; i <= level + 1; ++i) {
        const long long r = bar.face(level + 1, i, c);
        const int si = i % 2 == 0 ? 1 : -1;
        for (int j = 0; j <= level; ++j) {
          const long long rr = bar.face(level, j, r);
          acc[rr] += si * (j % 2 == 0 ? 1 : -1);
        }
      }
      ++checks;
      for (const auto& [row, v] : acc)
        if (v != 0)
          return Verdict::bad(Witness{"boundary o boundary = 0",
                                      "levels " + std::to_string(level) + "," +
                                          std::to_string(level + 1),
                                      "(" + std::to_string(row) + "," + std::to_string(c) + ")",
                                      std::to_string(v), "0"},
                              checks);
    }
  }
  return Verdict::ok(checks);
}

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

std::vector<HomologyGroup> groups_from_divisors(const BarComplex& bar, int level_cap,
                                                const std::vector<std::vector<BigInt>>& divisors) {
  std::vector<HomologyGroup> out;
  for (int n = 0; n < level_cap; ++n) {
    const long long dim = bar.level_size(n);
    const long long rank_dn = n == 0 ? 0 : static_cast<long long>(divisors[n].size());
    const long long rank_dn1 = static_cast<long long>(divisors[n + 1].size());
    HomologyGroup h;
    h.level = n;
    h.betti = dim - rank_dn - rank_dn1;
    for (const BigInt& d : divisors[n + 1])
      if (d > 1) h.torsion.push_back(d.convert_to<long long>());
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace

std::vector<BigInt> smith_divisors(BoundaryMatrix m) {
  const long long rows = m.rows, cols = m.cols;
  std::vector<BigInt> divisors;
  long long s = 0;
  while (s < rows && s < cols) {
    // Pivot: minimal nonzero absolute value in the remaining block.
    long long pr = -1, pc = -1;
    BigInt best = 0;
    for (long long r = s; r < rows; ++r)
      for (long long c = s; c < cols; ++c) {
        const BigInt v = abs_big(m.at(r, c));
        if (v != 0 && (pr < 0 || v < best)) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // remaining block is zero
    if (pr != s)
      for (long long c = 0; c < cols; ++c) std::swap(m.at(s, c), m.at(pr, c));
    if (pc != s)
      for (long long r = 0; r < rows; ++r) std::swap(m.at(r, s), m.at(r, pc));

    bool clean = false;
    while (!clean) {
      clean = true;
      for (long long r = s + 1; r < rows; ++r) {
        if (m.at(r, s) == 0) continue;
        const BigInt q = m.at(r, s) / m.at(s, s);
        for (long long c = s; c < cols; ++c) m.at(r, c) -= q * m.at(s, c);
        if (m.at(r, s) != 0) {  // remainder becomes the smaller pivot
          for (long long c = 0; c < cols; ++c) std::swap(m.at(s, c), m.at(r, c));
          clean = false;
        }
      }
      for (long long c = s + 1; c < cols; ++c) {
        if (m.at(s, c) == 0) continue;
        const BigInt q = m.at(s, c) / m.at(s, s);
        for (long long r = s; r < rows; ++r) m.at(r, c) -= q * m.at(r, s);
        if (m.at(s, c) != 0) {
          for (long long r = 0; r < rows; ++r) std::swap(m.at(r, s), m.at(r, c));
          clean = false;
        }
      }
    }
    divisors.push_back(abs_big(m.at(s, s)));
    ++s;
  }

  // Enforce the divisibility chain: diag(a, b) ~ diag(gcd, lcm).
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < divisors.size(); ++i) {
      if (divisors[i + 1] % divisors[i] != 0) {
        const BigInt g = boost::multiprecision::gcd(divisors[i], divisors[i + 1]);
        const BigInt l = divisors[i] / g * divisors[i + 1];
        divisors[i] = g;
        divisors[i + 1] = l;
        changed = true;
      }
    }
  }
  return divisors;
}

std::vector<HomologyGroup> homology_groups(const BarComplex& bar, int level_cap) {
  std::vector<std::vector<BigInt>> divisors(level_cap + 1);
  for (int level = 1; level <= level_cap; ++level)
    divisors[level] = smith_divisors(boundary_matrix(bar, level));
  return groups_from_divisors(bar, level_cap, divisors);
}

std::vector<HomologyGroup> homology_groups_permuted(const BarComplex& bar, int level_cap) {
  // Deterministic reshuffle: reverse the enumeration order at every level.
  std::vector<std::vector<long long>> perms(level_cap + 1);
  for (int level = 0; level <= level_cap; ++level) {
    const long long size = bar.level_size(level);
    perms[level].resize(size);
    for (long long i = 0; i < size; ++i) perms[level][i] = size - 1 - i;
  }
  std::vector<std::vector<BigInt>> divisors(level_cap + 1);
  for (int level = 1; level <= level_cap; ++level)
    divisors[level] =
        smith_divisors(boundary_matrix(bar, level, &perms[level], &perms[level - 1]));
  return groups_from_divisors(bar, level_cap, divisors);
}

}  // namespace gsv
