#include "gsv/duplicial.hpp"

#include <algorithm>

#include "gsv/error.hpp"
#include "gsv/scan.hpp"

namespace gsv {

long long BarComplex::level_size(int level) const {
  long long s = n.size;
  for (int i = 0; i < level; ++i) s *= group->order;
  return s;
}

std::vector<int> BarComplex::decode_chain(int level, long long s) const {
  std::vector<int> chain(level);
  long long rest = s / n.size;
  for (int i = level - 1; i >= 0; --i) {
    chain[i] = static_cast<int>(rest % group->order);
    rest /= group->order;
  }
  return chain;
}

int BarComplex::decode_point(long long s) const { return static_cast<int>(s % n.size); }

long long BarComplex::encode(const std::vector<int>& chain, int point) const {
  long long s = 0;
  for (int x : chain) s = s * group->order + x;
  return s * n.size + point;
}

std::string BarComplex::show(int level, long long s) const {
  const std::vector<int> chain = decode_chain(level, s);
  std::string out = "(";
  for (int x : chain) out += std::to_string(x) + ", ";
  out += "w=" + std::to_string(decode_point(s)) + ")";
  return out;
}

long long BarComplex::face(int level, int i, long long s) const {
  if (level < 1 || i < 0 || i > level) fail(Errc::IndexOutOfRange, "face index");
  std::vector<int> chain = decode_chain(level, s);
  int point = decode_point(s);
  if (i == 0) {
    chain.erase(chain.begin());
  } else if (i < level) {
    chain[i - 1] = group->mul(chain[i - 1], chain[i]);
    chain.erase(chain.begin() + i);
  } else {
    point = n.apply(chain.back(), point);
    chain.pop_back();
  }
  return encode(chain, point);
}

long long BarComplex::degeneracy(int level, int i, long long s) const {
  if (i < 0 || i > level) fail(Errc::IndexOutOfRange, "degeneracy index");
  std::vector<int> chain = decode_chain(level, s);
  chain.insert(chain.begin() + i, Group::identity);
  return encode(chain, decode_point(s));
}

Verdict check_simplicial_identities(const BarComplex& bar, int level_cap) {
  std::uint64_t checks = 0;
  for (int lvl = 0; lvl <= level_cap; ++lvl) {
    const long long size = bar.level_size(lvl);
    for (long long s = 0; s < size; ++s) {
      // d_i d_j = d_{j-1} d_i for i < j.
      for (int j = 1; j <= lvl; ++j)
        for (int i = 0; i < j && lvl >= 2; ++i) {
          ++checks;
          if (bar.face(lvl - 1, i, bar.face(lvl, j, s)) !=
              bar.face(lvl - 1, j - 1, bar.face(lvl, i, s)))
            return Verdict::bad(Witness{"d_i d_j = d_{j-1} d_i", "level " + std::to_string(lvl),
                                        bar.show(lvl, s) + " i=" + std::to_string(i) +
                                            " j=" + std::to_string(j),
                                        "", ""},
                                checks);
        }
      // s_i s_j = s_{j+1} s_i for i <= j.
      for (int j = 0; j <= lvl; ++j)
        for (int i = 0; i <= j; ++i) {
          ++checks;
          if (bar.degeneracy(lvl + 1, i, bar.degeneracy(lvl, j, s)) !=
              bar.degeneracy(lvl + 1, j + 1, bar.degeneracy(lvl, i, s)))
            return Verdict::bad(Witness{"s_i s_j = s_{j+1} s_i", "level " + std::to_string(lvl),
                                        bar.show(lvl, s) + " i=" + std::to_string(i) +
                                            " j=" + std::to_string(j),
                                        "", ""},
                                checks);
        }
      // d_i s_j: below, at, and above the diagonal.
      for (int j = 0; j <= lvl; ++j) {
        const long long sj = bar.degeneracy(lvl, j, s);
        for (int i = 0; i <= lvl + 1; ++i) {
          ++checks;
          long long lhs = bar.face(lvl + 1, i, sj);
          long long rhs;
          if (i < j) {
            rhs = bar.degeneracy(lvl - 1, j - 1, bar.face(lvl, i, s));
          } else if (i == j || i == j + 1) {
            rhs = s;
          } else {
            rhs = bar.degeneracy(lvl - 1, j, bar.face(lvl, i - 1, s));
          }
          if (lhs != rhs)
            return Verdict::bad(Witness{"d_i s_j identities", "level " + std::to_string(lvl),
                                        bar.show(lvl, s) + " i=" + std::to_string(i) +
                                            " j=" + std::to_string(j),
                                        std::to_string(lhs), std::to_string(rhs)},
                                checks);
        }
      }
    }
  }
  return Verdict::ok(checks);
}

DuplicialOp make_duplicial(const CoefficientConfig& cfg) {
  DuplicialOp op;
  op.bar = BarComplex{cfg.l.group, cfg.n};
  op.cfg = cfg;
  op.alpha.resize(cfg.n.size);
  const Group& g = *cfg.l.group;
  for (int w = 0; w < cfg.n.size; ++w) op.alpha[w] = g.inv(cfg.h[cfg.f[w]]);
  return op;
}

long long DuplicialOp::t_closed(int level, long long s) const {
  const Group& g = *bar.group;
  const std::vector<int> chain = bar.decode_chain(level, s);
  const int w = bar.decode_point(s);
  if (level == 0) return bar.encode({}, bar.n.apply(alpha[w], w));
  int prod = Group::identity;
  for (int x : chain) prod = g.mul(prod, x);
  std::vector<int> out(level);
  out[0] = g.mul(alpha[w], g.inv(prod));
  for (int i = 1; i < level; ++i) out[i] = chain[i - 1];
  return bar.encode(out, bar.n.apply(chain.back(), w));
}

long long DuplicialOp::t_composite(int level, long long s, int lift) const {
  const Group& g = *bar.group;
  const std::vector<int> chain = bar.decode_chain(level, s);
  const int w = bar.decode_point(s);
  // Representative (g1, ..., g_{n+1}, w) with g1 = lift.
  std::vector<int> rep(level + 1);
  rep[0] = lift;
  for (int i = 0; i < level; ++i) rep[i + 1] = chain[i];

  // Innermost factor through rho: (g_{n+1}, w) -> (g_{n+1} f(w), g_{n+1} w).
  const int last = rep[level];
  int l0 = cfg.l.apply(last, cfg.f[w]);
  const int w1 = bar.n.apply(last, w);

  // The distributive law moves the new left coordinate across the chain,
  // acting with g_n, then g_{n-1}, ..., then g_1.
  for (int i = level - 1; i >= 0; --i) l0 = cfg.l.apply(rep[i], l0);

  // Orbit-level lambda: [u, z] -> [h(u), h(u)^-1 . z]; the class forgets the
  // leading coordinate, so h(u)^-1 lands on g_1 (or on the point at level 0).
  const int hu = cfg.h[l0];
  if (level == 0) return bar.encode({}, bar.n.apply(g.inv(hu), w1));
  std::vector<int> out(level);
  out[0] = g.mul(g.inv(hu), rep[0]);
  for (int i = 1; i < level; ++i) out[i] = rep[i];
  return bar.encode(out, w1);
}

Verdict oracle_equivalence(const DuplicialOp& op, int level_cap) {
  std::uint64_t checks = 0;
  for (int lvl = 0; lvl <= level_cap; ++lvl) {
    const long long size = op.bar.level_size(lvl);
    const std::size_t bad = scan::first_fail(static_cast<std::size_t>(size), [&](std::size_t s) {
      return op.t_closed(lvl, static_cast<long long>(s)) ==
             op.t_composite(lvl, static_cast<long long>(s));
    });
    checks += static_cast<std::uint64_t>(size);
    if (bad != scan::npos) {
      const long long s = static_cast<long long>(bad);
      return Verdict::bad(Witness{"t closed = t composite", "level " + std::to_string(lvl),
                                  op.bar.show(lvl, s),
                                  op.bar.show(lvl, op.t_closed(lvl, s)),
                                  op.bar.show(lvl, op.t_composite(lvl, s))},
                          checks);
    }
  }
  return Verdict::ok(checks);
}

Verdict representative_independence(const DuplicialOp& op, int level_cap) {
  const int order = op.bar.group->order;
  std::uint64_t checks = 0;
  for (int lvl = 0; lvl <= level_cap; ++lvl) {
    const long long size = op.bar.level_size(lvl);
    const std::size_t bad = scan::first_fail(static_cast<std::size_t>(size), [&](std::size_t s) {
      const long long canonical = op.t_composite(lvl, static_cast<long long>(s));
      for (int a = 1; a < order; ++a)
        if (op.t_composite(lvl, static_cast<long long>(s), a) != canonical) return false;
      return true;
    });
    checks += static_cast<std::uint64_t>(size) * order;
    if (bad != scan::npos) {
      const long long s = static_cast<long long>(bad);
      int a_bad = 1;
      for (int a = 1; a < order; ++a)
        if (op.t_composite(lvl, s, a) != op.t_composite(lvl, s)) {
          a_bad = a;
          break;
        }
      return Verdict::bad(Witness{"t representative independent", "level " + std::to_string(lvl),
                                  op.bar.show(lvl, s) + " lift=" + std::to_string(a_bad),
                                  op.bar.show(lvl, op.t_composite(lvl, s)),
                                  op.bar.show(lvl, op.t_composite(lvl, s, a_bad))},
                          checks);
    }
  }
  return Verdict::ok(checks);
}

Verdict check_duplicial_identities(const DuplicialOp& op, int level_cap) {
  const BarComplex& bar = op.bar;
  std::uint64_t checks = 0;
  for (int lvl = 0; lvl <= level_cap; ++lvl) {
    const long long size = bar.level_size(lvl);
    for (long long s = 0; s < size; ++s) {
      const long long ts = op.t_closed(lvl, s);
      // d_i t = t d_{i-1} for 1 <= i <= n.
      for (int i = 1; i <= lvl; ++i) {
        ++checks;
        if (bar.face(lvl, i, ts) != op.t_closed(lvl - 1, bar.face(lvl, i - 1, s)))
          return Verdict::bad(
              Witness{"d_i t = t d_{i-1}", "level " + std::to_string(lvl),
                      bar.show(lvl, s) + " i=" + std::to_string(i),
                      bar.show(lvl - 1, bar.face(lvl, i, ts)),
                      bar.show(lvl - 1, op.t_closed(lvl - 1, bar.face(lvl, i - 1, s)))},
              checks);
      }
      // d_0 t = d_n.
      if (lvl >= 1) {
        ++checks;
        if (bar.face(lvl, 0, ts) != bar.face(lvl, lvl, s))
          return Verdict::bad(Witness{"d_0 t = d_n", "level " + std::to_string(lvl),
                                      bar.show(lvl, s), bar.show(lvl - 1, bar.face(lvl, 0, ts)),
                                      bar.show(lvl - 1, bar.face(lvl, lvl, s))},
                              checks);
      }
      // s_i t = t s_{i-1} for 1 <= i <= n.
      for (int i = 1; i <= lvl; ++i) {
        ++checks;
        if (bar.degeneracy(lvl, i, ts) != op.t_closed(lvl + 1, bar.degeneracy(lvl, i - 1, s)))
          return Verdict::bad(
              Witness{"s_i t = t s_{i-1}", "level " + std::to_string(lvl),
                      bar.show(lvl, s) + " i=" + std::to_string(i),
                      bar.show(lvl + 1, bar.degeneracy(lvl, i, ts)),
                      bar.show(lvl + 1, op.t_closed(lvl + 1, bar.degeneracy(lvl, i - 1, s)))},
              checks);
      }
      // s_0 t = t^2 s_n.
      {
        ++checks;
        const long long lhs = bar.degeneracy(lvl, 0, ts);
        const long long rhs =
            op.t_closed(lvl + 1, op.t_closed(lvl + 1, bar.degeneracy(lvl, lvl, s)));
        if (lhs != rhs)
          return Verdict::bad(Witness{"s_0 t = t^2 s_n", "level " + std::to_string(lvl),
                                      bar.show(lvl, s), bar.show(lvl + 1, lhs),
                                      bar.show(lvl + 1, rhs)},
                              checks);
      }
    }
  }
  return Verdict::ok(checks);
}

CyclicityResult cyclicity(const DuplicialOp& op, int level_cap) {
  CyclicityResult out;
  const BarComplex& bar = op.bar;
  const Group& g = *bar.group;

  std::uint64_t checks = 0;
  out.brute = Verdict::ok(0);
  for (int lvl = 1; lvl <= level_cap && out.brute.pass; ++lvl) {
    const long long size = bar.level_size(lvl);
    const std::size_t bad = scan::first_fail(static_cast<std::size_t>(size), [&](std::size_t s) {
      long long cur = static_cast<long long>(s);
      for (int k = 0; k <= lvl; ++k) cur = op.t_closed(lvl, cur);
      return cur == static_cast<long long>(s);
    });
    checks += static_cast<std::uint64_t>(size);
    if (bad != scan::npos) {
      long long cur = static_cast<long long>(bad);
      for (int k = 0; k <= lvl; ++k) cur = op.t_closed(lvl, cur);
      out.brute = Verdict::bad(Witness{"t^(n+1) = id", "level " + std::to_string(lvl),
                                       bar.show(lvl, static_cast<long long>(bad)),
                                       bar.show(lvl, cur),
                                       bar.show(lvl, static_cast<long long>(bad))},
                               checks);
    }
  }
  if (out.brute.pass) out.brute.checks = checks;

  {
    const std::size_t bad = scan::first_fail(static_cast<std::size_t>(bar.n.size), [&](std::size_t w) {
      return bar.n.apply(op.alpha[w], static_cast<int>(w)) == static_cast<int>(w);
    });
    out.stabilizer_condition =
        bad == scan::npos
            ? Verdict::ok(bar.n.size)
            : Verdict::bad(Witness{"alpha(w) in Stab(w)", bar.n.name, "w=" + std::to_string(bad),
                                   std::to_string(bar.n.apply(op.alpha[bad], static_cast<int>(bad))),
                                   std::to_string(bad)},
                           bar.n.size);
  }
  {
    const std::size_t total = static_cast<std::size_t>(g.order) * bar.n.size;
    const std::size_t bad = scan::first_fail(total, [&](std::size_t t) {
      const int w = static_cast<int>(t % bar.n.size);
      const int a = static_cast<int>(t / bar.n.size);
      return op.alpha[bar.n.apply(a, w)] == g.mul(g.mul(a, op.alpha[w]), g.inv(a));
    });
    if (bad == scan::npos) {
      out.crossed_condition = Verdict::ok(total);
    } else {
      const int w = static_cast<int>(bad % bar.n.size);
      const int a = static_cast<int>(bad / bar.n.size);
      out.crossed_condition = Verdict::bad(
          Witness{"alpha(gw) = g alpha(w) g^-1", bar.n.name,
                  "(g=" + std::to_string(a) + ", w=" + std::to_string(w) + ")",
                  std::to_string(op.alpha[bar.n.apply(a, w)]),
                  std::to_string(g.mul(g.mul(a, op.alpha[w]), g.inv(a)))},
          total);
    }
  }
  out.criterion = out.stabilizer_condition.pass && out.crossed_condition.pass;
  out.agree = out.brute.pass == out.criterion;
  if (out.criterion) out.induced = crossed_from(bar.n, op.alpha);
  return out;
}

}  // namespace gsv
