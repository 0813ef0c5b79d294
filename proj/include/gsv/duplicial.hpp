#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsv/coeff.hpp"
#include "gsv/gset.hpp"

namespace gsv {

/// The bar simplicial set in normal form: a level-n simplex is n group
/// elements plus a point of N, the image of [*, 1, x1, ..., xn, w] under the
/// identification that forgets the leading coordinate. Encoding is
/// chain-major (x1 most significant), point minor.
struct BarComplex {
  GroupPtr group;
  GSet n;

  long long level_size(int level) const;
  std::vector<int> decode_chain(int level, long long s) const;  // length level
  int decode_point(long long s) const;
  long long encode(const std::vector<int>& chain, int point) const;
  std::string show(int level, long long s) const;

  /// d0 drops x1; middle faces merge adjacent entries; the last face pushes
  /// xn into the point. Degeneracy i inserts the identity at slot i.
  long long face(int level, int i, long long s) const;
  long long degeneracy(int level, int i, long long s) const;
};

/// The five standard simplicial identity families, exhaustively to level_cap.
Verdict check_simplicial_identities(const BarComplex& bar, int level_cap);

/// The duplicial operator attached to a coefficient config. alpha(w) is the
/// inverse of h(f(w)).
struct DuplicialOp {
  BarComplex bar;
  CoefficientConfig cfg;
  std::vector<int> alpha;  // per point of N

  /// Normal form: (x1..xn, w) -> (alpha(w) (x1...xn)^-1, x1..x_{n-1}, xn w).
  /// Level 0 is the composite's instantiation w -> alpha(w) w, which is the
  /// identity exactly when alpha lands in stabilizers.
  long long t_closed(int level, long long s) const;

  /// Staged evaluation on a lifted representative with leading element
  /// `lift`: rho on the innermost factor, the distributive law moved across
  /// the chain, then the orbit-level lambda, then normalisation.
  long long t_composite(int level, long long s, int lift = Group::identity) const;
};

DuplicialOp make_duplicial(const CoefficientConfig& cfg);

/// t_closed == t_composite on the canonical lift, every simplex to level_cap.
Verdict oracle_equivalence(const DuplicialOp& op, int level_cap);

/// The composite's output class is independent of the chosen representative.
Verdict representative_independence(const DuplicialOp& op, int level_cap);

/// d_i t = t d_{i-1} (1<=i<=n), d_0 t = d_n, s_i t = t s_{i-1} (1<=i<=n),
/// s_0 t = t^2 s_n, exhaustively to level_cap.
Verdict check_duplicial_identities(const DuplicialOp& op, int level_cap);

struct CyclicityResult {
  Verdict brute;                 // t^(n+1) = id for 1 <= n <= level_cap
  Verdict stabilizer_condition;  // alpha(w) fixes w
  Verdict crossed_condition;     // alpha(gw) = g alpha(w) g^-1
  bool criterion = false;        // both conditions
  bool agree = false;            // brute verdict == criterion verdict
  std::optional<CrossedGSet> induced;  // (N, alpha) when the criterion holds
};

CyclicityResult cyclicity(const DuplicialOp& op, int level_cap);

}  // namespace gsv
