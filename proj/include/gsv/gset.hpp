#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsv/fingroup.hpp"
#include "gsv/verdict.hpp"

namespace gsv {

/// A finite left G-set: an action table over a shared Group. Values are
/// immutable after construction and safe to copy and share.
struct GSet {
  GroupPtr group;
  int size = 0;
  std::vector<int> act;  // group->order x size, row-major
  std::string name;

  int apply(int g, int x) const { return act[static_cast<std::size_t>(g) * size + x]; }
};

/// Validates act(1,x)=x and act(g,act(h,x))=act(gh,x); throws NotAnAction.
GSet gset_from_table(GroupPtr group, const std::vector<std::vector<int>>& act,
                     std::string name = "table");

GSet regular_gset(GroupPtr group);        // left translation on the elements
GSet conj_gset(GroupPtr group);           // conjugation on the elements
GSet trivial_gset(GroupPtr group, int k); // k fixed points
GSet point_gset(GroupPtr group);          // trivial_gset(group, 1)

/// Diagonal action on pairs; pair (l,x) is encoded as l*|X|+x. Every module
/// relies on this encoding.
GSet s_product(const GSet& l, const GSet& x);

/// Free action on the new left coordinate; pair (g,x) encoded as g*|X|+x.
GSet t_product(const GSet& x);

inline int pair_encode(int left, int right, int right_size) { return left * right_size + right; }
inline std::pair<int, int> pair_decode(int p, int right_size) {
  return {p / right_size, p % right_size};
}

bool same_group(const GSet& a, const GSet& b);

/// Pointwise map check: m(gx) = g m(x) for all g, x.
bool is_equivariant(const GSet& dom, const GSet& cod, const std::vector<int>& map);
Verdict equivariance_verdict(const GSet& dom, const GSet& cod, const std::vector<int>& map,
                             const std::string& label);

inline constexpr std::uint64_t kDefaultSearchBound = 1u << 22;

/// Complete list of equivariant maps dom -> cod, in lexicographic order of
/// their tables. Searches per orbit: a representative may map to any point
/// whose stabilizer contains the representative's, then the action closes the
/// choice. Throws SizeBoundExceeded when the candidate space exceeds `bound`.
std::vector<std::vector<int>> enumerate_equivariant_maps(
    const GSet& dom, const GSet& cod, std::uint64_t bound = kDefaultSearchBound);

struct OrbitSet {
  std::vector<int> rep;        // point -> minimal point in its orbit
  std::vector<int> cls;        // point -> dense orbit id (by increasing rep)
  std::vector<int> class_rep;  // dense orbit id -> representative point
  int count = 0;
};

OrbitSet orbits(const GSet& x);

std::vector<int> stabilizer(const GSet& x, int point);

/// A G-set with a compatibility map into the group: alpha(gx) = g alpha(x) g^-1.
struct CrossedGSet {
  GSet base;
  std::vector<int> alpha;
};

/// Throws NotCrossed with a witness (g, x) when the axiom fails.
CrossedGSet crossed_from(GSet base, std::vector<int> alpha);

/// All valid alpha tables, by independent choice on each orbit representative
/// among values fixed by the representative's stabilizer (under conjugation).
std::vector<std::vector<int>> enumerate_crossed_structures(const GSet& x);

struct BraidedProduct {
  CrossedGSet product;         // base = s_product, alpha(x,y) = alpha_X(x) * alpha_Y(y)
  std::vector<int> braiding;   // sigma: X x Y -> Y x X, (x,y) -> (y, alpha_Y(y) . x)
  Verdict braiding_equivariant;
  Verdict braiding_bijective;
  Verdict braiding_alpha_compat;  // alpha_{YxX} o sigma = alpha_{XxY}; reported, not assumed
};

BraidedProduct crossed_monoidal(const CrossedGSet& x, const CrossedGSet& y);

}  // namespace gsv
