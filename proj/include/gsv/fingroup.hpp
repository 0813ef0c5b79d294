#pragma once

#include <memory>
#include <string>
#include <vector>

namespace gsv {

/// A finite group as dense index tables. Element 0 is always the identity.
struct Group {
  int order = 0;
  std::vector<int> mul_table;  // order x order, row-major
  std::vector<int> inv_table;
  std::string name;

  static constexpr int identity = 0;

  int mul(int a, int b) const { return mul_table[static_cast<std::size_t>(a) * order + b]; }
  int inv(int a) const { return inv_table[a]; }
  bool abelian() const;
};

using GroupPtr = std::shared_ptr<const Group>;

inline constexpr int kDefaultOrderBound = 24;

/// Validates a raw Cayley table (associativity, identity, inverses) and
/// relabels so the identity sits at index 0. Throws NotAssociative / NoIdentity
/// / NoInverse with the offending elements.
GroupPtr group_from_table(const std::vector<std::vector<int>>& table, std::string name = "table");

GroupPtr cyclic_group(int n, int order_bound = kDefaultOrderBound);
/// Symmetries of the regular n-gon acting on its vertices; order 2n.
/// Elements 0..n-1 are the rotations v -> v+k, elements n..2n-1 the
/// reflections v -> k-v.
GroupPtr dihedral_group(int n, int order_bound = kDefaultOrderBound);
/// Permutations of {0..n-1} in lexicographic order; composition (ab)(x)=a(b(x)).
GroupPtr symmetric_group(int n, int order_bound = kDefaultOrderBound);
/// Direct product; element (a,b) has index a*|B|+b.
GroupPtr product_group(const GroupPtr& a, const GroupPtr& b, int order_bound = kDefaultOrderBound);

/// Elements commuting with everything, by exhaustive scan.
std::vector<int> center(const Group& g);

/// Subgroup generated by all commutators, by closure.
std::vector<int> commutator_subgroup(const Group& g);

int element_order(const Group& g, int a);

/// Invariant factors d1 | d2 | ... of the abelianisation G/[G,G]
/// (trivial factors omitted; empty means the abelianisation is trivial).
std::vector<long long> abelian_invariants(const Group& g);

}  // namespace gsv
