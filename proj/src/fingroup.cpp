#include "gsv/fingroup.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "gsv/error.hpp"
#include "gsv/scan.hpp"

namespace gsv {

bool Group::abelian() const {
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < a; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

namespace {

GroupPtr finish_group(int n, std::vector<int> mul, std::string name) {
  // Identity and inverse data are recomputed from scratch; callers guarantee a
  // well-formed table or want the validation errors.
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mul[static_cast<std::size_t>(cand) * n + x] == x &&
           mul[static_cast<std::size_t>(x) * n + cand] == x;
    if (ok) {
      e = cand;
      break;
    }
  }
  if (e < 0) fail(Errc::NoIdentity, "no two-sided identity in table '" + name + "'");

  // Relabel so the identity is element 0 (swap 0 <-> e).
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::swap(perm[0], perm[e]);  // perm is its own inverse
  std::vector<int> relabelled(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      relabelled[static_cast<std::size_t>(a) * n + b] =
          perm[mul[static_cast<std::size_t>(perm[a]) * n + perm[b]]];
  mul = std::move(relabelled);

  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (mul[static_cast<std::size_t>(a) * n + b] == 0 &&
          mul[static_cast<std::size_t>(b) * n + a] == 0) {
        inv[a] = b;
        break;
      }
    }
    if (inv[a] < 0) fail(Errc::NoInverse, "element " + std::to_string(a) + " has no inverse");
  }

  const std::size_t nn = static_cast<std::size_t>(n);
  const std::size_t triples = nn * nn * nn;
  auto assoc_at = [&](std::size_t t) {
    const int c = static_cast<int>(t % nn);
    const int b = static_cast<int>((t / nn) % nn);
    const int a = static_cast<int>(t / (nn * nn));
    return mul[static_cast<std::size_t>(mul[static_cast<std::size_t>(a) * n + b]) * n + c] ==
           mul[static_cast<std::size_t>(a) * n + mul[static_cast<std::size_t>(b) * n + c]];
  };
  const std::size_t bad = scan::first_fail(triples, assoc_at);
  if (bad != scan::npos) {
    const int c = static_cast<int>(bad % nn);
    const int b = static_cast<int>((bad / nn) % nn);
    const int a = static_cast<int>(bad / (nn * nn));
    fail(Errc::NotAssociative, "witness (" + std::to_string(a) + "," + std::to_string(b) + "," +
                                   std::to_string(c) + ") in table '" + name + "'");
  }

  auto g = std::make_shared<Group>();
  g->order = n;
  g->mul_table = std::move(mul);
  g->inv_table = std::move(inv);
  g->name = std::move(name);
  return g;
}

void check_order_bound(long long order, int bound, const std::string& what) {
  if (order > bound)
    fail(Errc::OrderBoundExceeded,
         what + " has order " + std::to_string(order) + " > bound " + std::to_string(bound));
}

GroupPtr group_from_permutations(const std::vector<std::vector<int>>& perms, std::string name) {
  const int n = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[perms[i]] = i;
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  const std::size_t deg = perms.front().size();
  std::vector<int> comp(deg);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (std::size_t v = 0; v < deg; ++v) comp[v] = perms[a][perms[b][v]];
      auto it = index.find(comp);
      if (it == index.end()) fail(Errc::ConfigInvalid, "permutation set not closed");
      mul[static_cast<std::size_t>(a) * n + b] = it->second;
    }
  }
  return finish_group(n, std::move(mul), std::move(name));
}

}  // namespace

GroupPtr group_from_table(const std::vector<std::vector<int>>& table, std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0) fail(Errc::ConfigInvalid, "empty multiplication table");
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      fail(Errc::ConfigInvalid, "row " + std::to_string(a) + " is not length " + std::to_string(n));
    for (int b = 0; b < n; ++b) {
      const int v = table[a][b];
      if (v < 0 || v >= n)
        fail(Errc::IndexOutOfRange, "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") = " + std::to_string(v));
      mul[static_cast<std::size_t>(a) * n + b] = v;
    }
  }
  return finish_group(n, std::move(mul), std::move(name));
}

GroupPtr cyclic_group(int n, int order_bound) {
  if (n < 1) fail(Errc::ConfigInvalid, "cyclic order must be >= 1");
  check_order_bound(n, order_bound, "cyclic " + std::to_string(n));
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return finish_group(n, std::move(mul), "C" + std::to_string(n));
}

GroupPtr dihedral_group(int n, int order_bound) {
  if (n < 1) fail(Errc::ConfigInvalid, "dihedral parameter must be >= 1");
  check_order_bound(2LL * n, order_bound, "dihedral " + std::to_string(n));
  std::vector<std::vector<int>> perms;
  perms.reserve(2 * static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {  // rotations v -> v+k
    std::vector<int> p(n);
    for (int v = 0; v < n; ++v) p[v] = (v + k) % n;
    perms.push_back(std::move(p));
  }
  for (int k = 0; k < n; ++k) {  // reflections v -> k-v
    std::vector<int> p(n);
    for (int v = 0; v < n; ++v) p[v] = ((k - v) % n + n) % n;
    perms.push_back(std::move(p));
  }
  return group_from_permutations(perms, "D" + std::to_string(n));
}

GroupPtr symmetric_group(int n, int order_bound) {
  if (n < 1) fail(Errc::ConfigInvalid, "symmetric parameter must be >= 1");
  long long order = 1;
  for (int k = 2; k <= n; ++k) order *= k;
  check_order_bound(order, order_bound, "symmetric " + std::to_string(n));
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  perms.reserve(static_cast<std::size_t>(order));
  do {
    perms.push_back(base);
  } while (std::next_permutation(base.begin(), base.end()));
  return group_from_permutations(perms, "S" + std::to_string(n));
}

GroupPtr product_group(const GroupPtr& a, const GroupPtr& b, int order_bound) {
  const long long order = static_cast<long long>(a->order) * b->order;
  check_order_bound(order, order_bound, a->name + "x" + b->name);
  const int n = static_cast<int>(order);
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const int xa = x / b->order, xb = x % b->order;
    for (int y = 0; y < n; ++y) {
      const int ya = y / b->order, yb = y % b->order;
      mul[static_cast<std::size_t>(x) * n + y] = a->mul(xa, ya) * b->order + b->mul(xb, yb);
    }
  }
  return finish_group(n, std::move(mul), a->name + "x" + b->name);
}

std::vector<int> center(const Group& g) {
  std::vector<int> out;
  for (int z = 0; z < g.order; ++z) {
    bool central = true;
    for (int x = 0; x < g.order && central; ++x) central = g.mul(z, x) == g.mul(x, z);
    if (central) out.push_back(z);
  }
  return out;
}

std::vector<int> commutator_subgroup(const Group& g) {
  std::set<int> members = {Group::identity};
  std::vector<int> todo;
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) {
      const int c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (members.insert(c).second) todo.push_back(c);
    }
  while (!todo.empty()) {
    const int x = todo.back();
    todo.pop_back();
    for (int y : std::vector<int>(members.begin(), members.end())) {
      for (int p : {g.mul(x, y), g.mul(y, x)})
        if (members.insert(p).second) todo.push_back(p);
    }
  }
  return {members.begin(), members.end()};
}

int element_order(const Group& g, int a) {
  int k = 1, x = a;
  while (x != Group::identity) {
    x = g.mul(x, a);
    ++k;
  }
  return k;
}

namespace {

// Multiplication table of the quotient of `g` by the normal subgroup `sub`,
// with cosets labelled by their minimal member.
std::vector<std::vector<int>> quotient_table(const std::vector<std::vector<int>>& mul,
                                             const std::vector<int>& sub) {
  const int n = static_cast<int>(mul.size());
  std::vector<int> coset_rep(n, -1);
  for (int x = 0; x < n; ++x) {
    int rep = x;
    for (int k : sub) rep = std::min(rep, mul[x][k]);
    coset_rep[x] = rep;
  }
  std::vector<int> reps;
  for (int x = 0; x < n; ++x)
    if (coset_rep[x] == x) reps.push_back(x);
  std::vector<int> dense(n, -1);
  for (std::size_t i = 0; i < reps.size(); ++i) dense[reps[i]] = static_cast<int>(i);

  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> out(q, std::vector<int>(q));
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) out[i][j] = dense[coset_rep[mul[reps[i]][reps[j]]]];
  return out;
}

}  // namespace

std::vector<long long> abelian_invariants(const Group& g) {
  std::vector<std::vector<int>> mul(g.order, std::vector<int>(g.order));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) mul[a][b] = g.mul(a, b);
  std::vector<std::vector<int>> q = quotient_table(mul, commutator_subgroup(g));

  // Repeatedly split off a cyclic subgroup of maximal order; in a finite
  // abelian group such a subgroup is a direct summand, so the quotient carries
  // the remaining invariant factors.
  std::vector<long long> factors;
  while (q.size() > 1) {
    const int n = static_cast<int>(q.size());
    auto order_of = [&](int a) {
      int k = 1, x = a;
      while (x != 0) {
        x = q[x][a];
        ++k;
      }
      return k;
    };
    int best = 0, best_ord = 1;
    for (int a = 0; a < n; ++a) {
      const int o = order_of(a);
      if (o > best_ord) {
        best = a;
        best_ord = o;
      }
    }
    factors.push_back(best_ord);
    std::vector<int> cyc;
    int x = 0;
    do {
      cyc.push_back(x);
      x = q[x][best];
    } while (x != 0);
    q = quotient_table(q, cyc);
  }
  std::reverse(factors.begin(), factors.end());  // ascending divisibility order
  return factors;
}

}  // namespace gsv
