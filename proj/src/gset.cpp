#include "gsv/gset.hpp"

#include <algorithm>
#include <numeric>

#include "gsv/error.hpp"
#include "gsv/scan.hpp"

namespace gsv {

namespace {

GSet make_gset(GroupPtr group, int size, std::vector<int> act, std::string name) {
  GSet s;
  s.group = std::move(group);
  s.size = size;
  s.act = std::move(act);
  s.name = std::move(name);
  return s;
}

void validate_action(const GSet& s) {
  const Group& g = *s.group;
  for (int x = 0; x < s.size; ++x)
    if (s.apply(Group::identity, x) != x)
      fail(Errc::NotAnAction, "act(1," + std::to_string(x) + ") != " + std::to_string(x) +
                                  " in '" + s.name + "'");
  const std::size_t total =
      static_cast<std::size_t>(g.order) * g.order * static_cast<std::size_t>(s.size);
  const std::size_t bad = scan::first_fail(total, [&](std::size_t t) {
    const int x = static_cast<int>(t % s.size);
    const int h = static_cast<int>((t / s.size) % g.order);
    const int a = static_cast<int>(t / (static_cast<std::size_t>(s.size) * g.order));
    return s.apply(a, s.apply(h, x)) == s.apply(g.mul(a, h), x);
  });
  if (bad != scan::npos) {
    const int x = static_cast<int>(bad % s.size);
    const int h = static_cast<int>((bad / s.size) % g.order);
    const int a = static_cast<int>(bad / (static_cast<std::size_t>(s.size) * g.order));
    fail(Errc::NotAnAction, "witness (g=" + std::to_string(a) + ", h=" + std::to_string(h) +
                                ", x=" + std::to_string(x) + ") in '" + s.name + "'");
  }
}

}  // namespace

GSet gset_from_table(GroupPtr group, const std::vector<std::vector<int>>& act, std::string name) {
  const int order = group->order;
  if (static_cast<int>(act.size()) != order)
    fail(Errc::ConfigInvalid, "action table must have one row per group element");
  const int size = act.empty() ? 0 : static_cast<int>(act.front().size());
  std::vector<int> flat(static_cast<std::size_t>(order) * size);
  for (int g = 0; g < order; ++g) {
    if (static_cast<int>(act[g].size()) != size)
      fail(Errc::ConfigInvalid, "ragged action table row " + std::to_string(g));
    for (int x = 0; x < size; ++x) {
      const int v = act[g][x];
      if (v < 0 || v >= size)
        fail(Errc::IndexOutOfRange, "action entry out of range at (" + std::to_string(g) + "," +
                                        std::to_string(x) + ")");
      flat[static_cast<std::size_t>(g) * size + x] = v;
    }
  }
  GSet s = make_gset(std::move(group), size, std::move(flat), std::move(name));
  validate_action(s);
  return s;
}

GSet regular_gset(GroupPtr group) {
  const int n = group->order;
  std::vector<int> act(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) act[static_cast<std::size_t>(g) * n + x] = group->mul(g, x);
  return make_gset(std::move(group), n, std::move(act), "regular");
}

GSet conj_gset(GroupPtr group) {
  const int n = group->order;
  std::vector<int> act(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x)
      act[static_cast<std::size_t>(g) * n + x] = group->mul(group->mul(g, x), group->inv(g));
  return make_gset(std::move(group), n, std::move(act), "conj");
}

GSet trivial_gset(GroupPtr group, int k) {
  if (k < 0) fail(Errc::ConfigInvalid, "trivial G-set size must be >= 0");
  std::vector<int> act(static_cast<std::size_t>(group->order) * k);
  for (int g = 0; g < group->order; ++g)
    for (int x = 0; x < k; ++x) act[static_cast<std::size_t>(g) * k + x] = x;
  return make_gset(std::move(group), k, std::move(act), "trivial" + std::to_string(k));
}

GSet point_gset(GroupPtr group) {
  GSet s = trivial_gset(std::move(group), 1);
  s.name = "point";
  return s;
}

bool same_group(const GSet& a, const GSet& b) {
  return a.group == b.group ||
         (a.group && b.group && a.group->order == b.group->order &&
          a.group->mul_table == b.group->mul_table);
}

GSet s_product(const GSet& l, const GSet& x) {
  if (!same_group(l, x)) fail(Errc::ConfigInvalid, "s_product: factors over different groups");
  const int order = l.group->order;
  const int size = l.size * x.size;
  std::vector<int> act(static_cast<std::size_t>(order) * size);
  for (int g = 0; g < order; ++g)
    for (int a = 0; a < l.size; ++a)
      for (int b = 0; b < x.size; ++b)
        act[static_cast<std::size_t>(g) * size + pair_encode(a, b, x.size)] =
            pair_encode(l.apply(g, a), x.apply(g, b), x.size);
  return make_gset(l.group, size, std::move(act), "(" + l.name + " x " + x.name + ")");
}

GSet t_product(const GSet& x) {
  const int order = x.group->order;
  const int size = order * x.size;
  std::vector<int> act(static_cast<std::size_t>(order) * size);
  for (int g = 0; g < order; ++g)
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < x.size; ++b)
        act[static_cast<std::size_t>(g) * size + pair_encode(a, b, x.size)] =
            pair_encode(x.group->mul(g, a), b, x.size);
  return make_gset(x.group, size, std::move(act), "(G ~x " + x.name + ")");
}

bool is_equivariant(const GSet& dom, const GSet& cod, const std::vector<int>& map) {
  if (static_cast<int>(map.size()) != dom.size) return false;
  for (int v : map)
    if (v < 0 || v >= cod.size) return false;
  const int order = dom.group->order;
  for (int g = 0; g < order; ++g)
    for (int x = 0; x < dom.size; ++x)
      if (map[dom.apply(g, x)] != cod.apply(g, map[x])) return false;
  return true;
}

Verdict equivariance_verdict(const GSet& dom, const GSet& cod, const std::vector<int>& map,
                             const std::string& label) {
  if (static_cast<int>(map.size()) != dom.size)
    fail(Errc::ConfigInvalid, label + ": map length != domain size");
  const int order = dom.group->order;
  const std::size_t total = static_cast<std::size_t>(order) * dom.size;
  const std::size_t bad = scan::first_fail(total, [&](std::size_t t) {
    const int x = static_cast<int>(t % dom.size);
    const int g = static_cast<int>(t / dom.size);
    return map[dom.apply(g, x)] == cod.apply(g, map[x]);
  });
  if (bad == scan::npos) return Verdict::ok(total);
  const int x = static_cast<int>(bad % dom.size);
  const int g = static_cast<int>(bad / dom.size);
  return Verdict::bad(Witness{label, dom.name + " -> " + cod.name,
                              "(g=" + std::to_string(g) + ", x=" + std::to_string(x) + ")",
                              std::to_string(map[dom.apply(g, x)]),
                              std::to_string(cod.apply(g, map[x]))},
                      total);
}

OrbitSet orbits(const GSet& x) {
  OrbitSet o;
  o.rep.assign(x.size, -1);
  const int order = x.group->order;
  for (int p = 0; p < x.size; ++p) {
    int rep = p;
    for (int g = 0; g < order; ++g) rep = std::min(rep, x.apply(g, p));
    o.rep[p] = rep;
  }
  o.cls.assign(x.size, -1);
  for (int p = 0; p < x.size; ++p) {
    if (o.rep[p] == p) {
      o.cls[p] = o.count++;
      o.class_rep.push_back(p);
    }
  }
  for (int p = 0; p < x.size; ++p) o.cls[p] = o.cls[o.rep[p]];
  return o;
}

std::vector<int> stabilizer(const GSet& x, int point) {
  if (point < 0 || point >= x.size) fail(Errc::IndexOutOfRange, "stabilizer point out of range");
  std::vector<int> out;
  for (int g = 0; g < x.group->order; ++g)
    if (x.apply(g, point) == point) out.push_back(g);
  return out;
}

std::vector<std::vector<int>> enumerate_equivariant_maps(const GSet& dom, const GSet& cod,
                                                         std::uint64_t bound) {
  if (!same_group(dom, cod)) fail(Errc::ConfigInvalid, "hom-set over different groups");
  const Group& g = *dom.group;
  const OrbitSet orb = orbits(dom);

  // Transporter: for each point, a group element carrying its representative to it.
  std::vector<int> carry(dom.size, -1);
  for (int p = 0; p < dom.size; ++p)
    for (int a = 0; a < g.order; ++a)
      if (dom.apply(a, orb.rep[p]) == p) {
        carry[p] = a;
        break;
      }

  // Candidate images per representative: points whose stabilizer contains the
  // representative's stabilizer.
  std::vector<std::vector<int>> cands(orb.count);
  std::uint64_t space = 1;
  for (int c = 0; c < orb.count; ++c) {
    const int r = orb.class_rep[c];
    const std::vector<int> st = stabilizer(dom, r);
    for (int y = 0; y < cod.size; ++y) {
      bool ok = true;
      for (int s : st)
        if (cod.apply(s, y) != y) {
          ok = false;
          break;
        }
      if (ok) cands[c].push_back(y);
    }
    space *= std::max<std::uint64_t>(1, cands[c].size());
    if (space > bound)
      fail(Errc::SizeBoundExceeded, "equivariant-map search space exceeds bound " +
                                        std::to_string(bound) + " for " + dom.name + " -> " +
                                        cod.name);
    if (cands[c].empty()) return {};
  }

  std::vector<std::vector<int>> out;
  std::vector<int> choice(orb.count, 0);
  std::vector<int> map(dom.size);
  while (true) {
    for (int p = 0; p < dom.size; ++p)
      map[p] = cod.apply(carry[p], cands[orb.cls[p]][choice[orb.cls[p]]]);
    if (!is_equivariant(dom, cod, map))
      fail(Errc::NotEquivariant, "internal: closure produced a non-equivariant map");
    out.push_back(map);
    int k = orb.count - 1;
    while (k >= 0 && ++choice[k] == static_cast<int>(cands[k].size())) choice[k--] = 0;
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

CrossedGSet crossed_from(GSet base, std::vector<int> alpha) {
  if (static_cast<int>(alpha.size()) != base.size)
    fail(Errc::ConfigInvalid, "alpha length != G-set size");
  const Group& g = *base.group;
  for (int v : alpha)
    if (v < 0 || v >= g.order) fail(Errc::IndexOutOfRange, "alpha value out of range");
  for (int a = 0; a < g.order; ++a)
    for (int x = 0; x < base.size; ++x)
      if (alpha[base.apply(a, x)] != g.mul(g.mul(a, alpha[x]), g.inv(a)))
        fail(Errc::NotCrossed,
             "witness (g=" + std::to_string(a) + ", x=" + std::to_string(x) + ")");
  return CrossedGSet{std::move(base), std::move(alpha)};
}

std::vector<std::vector<int>> enumerate_crossed_structures(const GSet& x) {
  const Group& g = *x.group;
  const OrbitSet orb = orbits(x);
  std::vector<int> carry(x.size, -1);
  for (int p = 0; p < x.size; ++p)
    for (int a = 0; a < g.order; ++a)
      if (x.apply(a, orb.rep[p]) == p) {
        carry[p] = a;
        break;
      }

  std::vector<std::vector<int>> cands(orb.count);
  for (int c = 0; c < orb.count; ++c) {
    const std::vector<int> st = stabilizer(x, orb.class_rep[c]);
    for (int v = 0; v < g.order; ++v) {
      bool ok = true;
      for (int s : st)
        if (g.mul(g.mul(s, v), g.inv(s)) != v) {
          ok = false;
          break;
        }
      if (ok) cands[c].push_back(v);
    }
    if (cands[c].empty()) return {};
  }

  std::vector<std::vector<int>> out;
  std::vector<int> choice(orb.count, 0);
  while (true) {
    std::vector<int> alpha(x.size);
    for (int p = 0; p < x.size; ++p) {
      const int v = cands[orb.cls[p]][choice[orb.cls[p]]];
      alpha[p] = g.mul(g.mul(carry[p], v), g.inv(carry[p]));
    }
    bool consistent = true;  // global re-check; per-orbit choice may still clash
    for (int a = 0; a < g.order && consistent; ++a)
      for (int p = 0; p < x.size && consistent; ++p)
        consistent = alpha[x.apply(a, p)] == g.mul(g.mul(a, alpha[p]), g.inv(a));
    if (consistent) out.push_back(std::move(alpha));
    int k = orb.count - 1;
    while (k >= 0 && ++choice[k] == static_cast<int>(cands[k].size())) choice[k--] = 0;
    if (k < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

BraidedProduct crossed_monoidal(const CrossedGSet& x, const CrossedGSet& y) {
  if (!same_group(x.base, y.base)) fail(Errc::ConfigInvalid, "crossed product over different groups");
  const Group& g = *x.base.group;

  GSet base = s_product(x.base, y.base);
  std::vector<int> alpha(base.size);
  for (int a = 0; a < x.base.size; ++a)
    for (int b = 0; b < y.base.size; ++b)
      alpha[pair_encode(a, b, y.base.size)] = g.mul(x.alpha[a], y.alpha[b]);
  CrossedGSet product = crossed_from(std::move(base), std::move(alpha));

  GSet swapped = s_product(y.base, x.base);
  std::vector<int> sigma(product.base.size);
  for (int a = 0; a < x.base.size; ++a)
    for (int b = 0; b < y.base.size; ++b)
      sigma[pair_encode(a, b, y.base.size)] =
          pair_encode(b, x.base.apply(y.alpha[b], a), x.base.size);

  BraidedProduct out{std::move(product), sigma, {}, {}, {}};
  out.braiding_equivariant = equivariance_verdict(out.product.base, swapped, sigma, "braiding");

  std::vector<char> hit(sigma.size(), 0);
  Verdict bij = Verdict::ok(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (hit[sigma[i]]) {
      bij = Verdict::bad(Witness{"braiding bijective", out.product.base.name,
                                 std::to_string(i), std::to_string(sigma[i]), "already hit"},
                         sigma.size());
      break;
    }
    hit[sigma[i]] = 1;
  }
  out.braiding_bijective = bij;

  std::vector<int> alpha_swapped(swapped.size);
  for (int b = 0; b < y.base.size; ++b)
    for (int a = 0; a < x.base.size; ++a)
      alpha_swapped[pair_encode(b, a, x.base.size)] = g.mul(y.alpha[b], x.alpha[a]);
  Verdict compat = Verdict::ok(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (alpha_swapped[sigma[i]] != out.product.alpha[i]) {
      compat = Verdict::bad(Witness{"alpha o sigma = alpha", out.product.base.name,
                                    std::to_string(i), std::to_string(alpha_swapped[sigma[i]]),
                                    std::to_string(out.product.alpha[i])},
                            sigma.size());
      break;
    }
  }
  out.braiding_alpha_compat = compat;
  return out;
}

}  // namespace gsv
