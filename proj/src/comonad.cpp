#include "gsv/comonad.hpp"

#include <algorithm>

#include "gsv/error.hpp"
#include "gsv/scan.hpp"

namespace gsv {

FunctorExpr FunctorExpr::compose(const FunctorExpr& inner) const {
  FunctorExpr out = *this;
  out.steps.insert(out.steps.end(), inner.steps.begin(), inner.steps.end());
  return out;
}

GSet FunctorExpr::apply(const GSet& x) const {
  GSet cur = x;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it)
    cur = it->is_s ? s_product(it->l, cur) : t_product(cur);
  return cur;
}

std::vector<int> FunctorExpr::lift(const GSet& dom, const GSet& cod,
                                   const std::vector<int>& m) const {
  if (static_cast<int>(m.size()) != dom.size)
    fail(Errc::IncompatibleFunctors, "lift: table does not match domain");
  std::vector<int> cur = m;
  int dom_size = dom.size;
  int cod_size = cod.size;
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const int left = it->is_s ? it->l.size : dom.group->order;
    std::vector<int> next(static_cast<std::size_t>(left) * dom_size);
    for (int a = 0; a < left; ++a)
      for (int p = 0; p < dom_size; ++p)
        next[pair_encode(a, p, dom_size)] = pair_encode(a, cur[p], cod_size);
    cur = std::move(next);
    dom_size *= left;
    cod_size *= left;
  }
  return cur;
}

std::string FunctorExpr::show() const {
  if (steps.empty()) return "Id";
  std::string out;
  for (const auto& st : steps) out += st.is_s ? "S" : "T";
  return out;
}

std::string show_point(const FunctorExpr& expr, const GSet& x, int p) {
  // Unwind outermost-first: each step splits off its left coordinate.
  std::vector<int> sizes;  // left-factor sizes, outermost first
  int inner = x.size;
  std::vector<int> lefts;
  for (const auto& st : expr.steps) lefts.push_back(st.is_s ? st.l.size : x.group->order);
  // Total size factorises as lefts[0] * ... * lefts[k-1] * |x|.
  std::string out = "(";
  int rest = p;
  int tail = x.size;
  for (std::size_t i = 0; i < lefts.size(); ++i) {
    int block = tail;
    for (std::size_t j = i + 1; j < lefts.size(); ++j) block *= lefts[j];
    out += std::to_string(rest / block) + ", ";
    rest %= block;
  }
  (void)sizes;
  (void)inner;
  out += std::to_string(rest) + ")";
  return out;
}

ProbeUniverse ProbeUniverse::standard(const GroupPtr& g, std::size_t hom_cap,
                                      std::uint64_t search_bound) {
  ProbeUniverse u;
  u.objects.push_back(regular_gset(g));
  u.objects.push_back(conj_gset(g));
  u.objects.push_back(trivial_gset(g, 2));
  u.objects.push_back(point_gset(g));
  for (int i = 0; i < static_cast<int>(u.objects.size()); ++i) {
    for (int j = 0; j < static_cast<int>(u.objects.size()); ++j) {
      auto maps = enumerate_equivariant_maps(u.objects[i], u.objects[j], search_bound);
      if (maps.size() > hom_cap) maps.resize(hom_cap);
      for (auto& m : maps) u.morphisms.push_back(Mor{i, j, std::move(m)});
    }
  }
  return u;
}

namespace {

std::vector<int> compose_tables(const std::vector<int>& first, const std::vector<int>& then) {
  std::vector<int> out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

Verdict compare_tables(const std::vector<int>& lhs, const std::vector<int>& rhs,
                       const std::string& law, const std::string& object,
                       const FunctorExpr& dom_expr, const GSet& dom_base) {
  if (lhs.size() != rhs.size())
    fail(Errc::ChainTypeMismatch, law + " at " + object + ": side sizes disagree");
  const std::size_t bad = scan::first_fail(lhs.size(), [&](std::size_t i) { return lhs[i] == rhs[i]; });
  if (bad == scan::npos) return Verdict::ok(lhs.size());
  return Verdict::bad(Witness{law, object, show_point(dom_expr, dom_base, static_cast<int>(bad)),
                              std::to_string(lhs[bad]), std::to_string(rhs[bad])},
                      lhs.size());
}

}  // namespace

Verdict check_naturality(const NatTransform& n, const ProbeUniverse& u) {
  std::uint64_t checks = 0;
  for (const auto& mor : u.morphisms) {
    const GSet& x = u.objects[mor.src];
    const GSet& y = u.objects[mor.dst];
    const std::vector<int> src_m = n.src.lift(x, y, mor.table);
    const std::vector<int> dst_m = n.dst.lift(x, y, mor.table);
    const std::vector<int> at_x = n.at(x);
    const std::vector<int> at_y = n.at(y);
    Verdict v = compare_tables(compose_tables(src_m, at_y), compose_tables(at_x, dst_m),
                               n.name + " naturality", x.name + " -> " + y.name, n.src, x);
    if (!v.pass) return v;
    checks += v.checks;
  }
  return Verdict::ok(checks);
}

Comonad build_S(GSet l) {
  Comonad c;
  c.name = "S(" + l.name + ")";
  c.f = FunctorExpr::s(l);
  GSet lc = l;
  c.delta = [lc](const GSet& x) {
    // (l, n) -> (l, l, n)
    const int size = lc.size * x.size;
    std::vector<int> out(size);
    for (int a = 0; a < lc.size; ++a)
      for (int n = 0; n < x.size; ++n)
        out[pair_encode(a, n, x.size)] =
            pair_encode(a, pair_encode(a, n, x.size), lc.size * x.size);
    return out;
  };
  c.epsilon = [lc](const GSet& x) {
    // (l, n) -> n
    std::vector<int> out(static_cast<std::size_t>(lc.size) * x.size);
    for (int a = 0; a < lc.size; ++a)
      for (int n = 0; n < x.size; ++n) out[pair_encode(a, n, x.size)] = n;
    return out;
  };
  return c;
}

Comonad build_T(const GroupPtr& g) {
  Comonad c;
  c.name = "T";
  c.f = FunctorExpr::t();
  const int order = g->order;
  c.delta = [order](const GSet& x) {
    // (g, n) -> (g, 1, n)
    std::vector<int> out(static_cast<std::size_t>(order) * x.size);
    for (int a = 0; a < order; ++a)
      for (int n = 0; n < x.size; ++n)
        out[pair_encode(a, n, x.size)] =
            pair_encode(a, pair_encode(Group::identity, n, x.size), order * x.size);
    return out;
  };
  c.epsilon = [](const GSet& x) {
    // (g, n) -> gn
    const int order = x.group->order;
    std::vector<int> out(static_cast<std::size_t>(order) * x.size);
    for (int a = 0; a < order; ++a)
      for (int n = 0; n < x.size; ++n) out[pair_encode(a, n, x.size)] = x.apply(a, n);
    return out;
  };
  return c;
}

LawReport check_comonad_laws(const Comonad& c, const ProbeUniverse& u) {
  LawReport report;
  const FunctorExpr& f = c.f;
  for (const GSet& x : u.objects) {
    const GSet fx = f.apply(x);
    const GSet ffx = f.apply(fx);
    const GSet fffx = f.apply(ffx);
    const std::vector<int> d_x = c.delta(x);
    const std::vector<int> d_fx = c.delta(fx);
    const std::vector<int> e_x = c.epsilon(x);
    const std::vector<int> e_fx = c.epsilon(fx);

    report.add("delta equivariant @" + x.name, equivariance_verdict(fx, ffx, d_x, c.name + " delta"));
    report.add("epsilon equivariant @" + x.name, equivariance_verdict(fx, x, e_x, c.name + " epsilon"));

    const std::vector<int> f_dx = f.lift(fx, ffx, d_x);
    (void)fffx;
    report.add("coassociativity @" + x.name,
               compare_tables(compose_tables(d_x, d_fx), compose_tables(d_x, f_dx),
                              c.name + " coassociativity", x.name, f, x));

    std::vector<int> ident(fx.size);
    for (int i = 0; i < fx.size; ++i) ident[i] = i;
    report.add("counit (epsilon F) @" + x.name,
               compare_tables(compose_tables(d_x, e_fx), ident, c.name + " counit eF", x.name, f, x));
    const std::vector<int> f_ex = f.lift(fx, x, e_x);
    report.add("counit (F epsilon) @" + x.name,
               compare_tables(compose_tables(d_x, f_ex), ident, c.name + " counit Fe", x.name, f, x));
  }

  const FunctorExpr ff = f.compose(f);
  report.add("delta natural",
             check_naturality({c.name + " delta", f, ff, c.delta}, u));
  report.add("epsilon natural",
             check_naturality({c.name + " epsilon", f, FunctorExpr::identity(), c.epsilon}, u));
  return report;
}

std::vector<int> theta_component(const GSet& n, const GSet& l, const std::vector<int>& rho) {
  const GSet fn = t_product(n);
  const GSet sn = s_product(l, n);
  Verdict eq = equivariance_verdict(fn, sn, rho, "theta input");
  if (!eq.pass)
    fail(Errc::NotEquivariant, "theta: input " + eq.witness->input + " lhs=" + eq.witness->lhs +
                                   " rhs=" + eq.witness->rhs);
  std::vector<int> out(n.size);
  for (int p = 0; p < n.size; ++p) out[p] = rho[pair_encode(Group::identity, p, n.size)];
  return out;
}

std::vector<int> xi_component(const GSet& n, const GSet& l, const std::vector<int>& rho_bar) {
  if (static_cast<int>(rho_bar.size()) != n.size)
    fail(Errc::ConfigInvalid, "xi: table length != |N|");
  const GSet sn = s_product(l, n);
  const int order = n.group->order;
  std::vector<int> out(static_cast<std::size_t>(order) * n.size);
  for (int a = 0; a < order; ++a)
    for (int p = 0; p < n.size; ++p)
      out[pair_encode(a, p, n.size)] = sn.apply(a, rho_bar[p]);
  return out;
}

std::vector<int> chi_component(const GSet& l, const GSet& x) {
  const int order = l.group->order;
  std::vector<int> out(static_cast<std::size_t>(order) * l.size * x.size);
  for (int g = 0; g < order; ++g)
    for (int a = 0; a < l.size; ++a)
      for (int p = 0; p < x.size; ++p)
        out[pair_encode(g, pair_encode(a, p, x.size), l.size * x.size)] =
            pair_encode(l.apply(g, a), pair_encode(g, p, x.size), order * x.size);
  return out;
}

std::vector<int> chi_inverse_component(const GSet& l, const GSet& x) {
  const int order = l.group->order;
  const Group& grp = *l.group;
  std::vector<int> out(static_cast<std::size_t>(order) * l.size * x.size);
  for (int a = 0; a < l.size; ++a)
    for (int g = 0; g < order; ++g)
      for (int p = 0; p < x.size; ++p)
        out[pair_encode(a, pair_encode(g, p, x.size), order * x.size)] =
            pair_encode(g, pair_encode(l.apply(grp.inv(g), a), p, x.size), l.size * x.size);
  return out;
}

LawReport verify_chi(const GSet& l, const ProbeUniverse& u) {
  LawReport report;
  const FunctorExpr ts = FunctorExpr::t().compose(FunctorExpr::s(l));
  const FunctorExpr st = FunctorExpr::s(l).compose(FunctorExpr::t());
  for (const GSet& x : u.objects) {
    const GSet tsx = ts.apply(x);
    const GSet stx = st.apply(x);
    const std::vector<int> fwd = chi_component(l, x);
    const std::vector<int> bwd = chi_inverse_component(l, x);
    std::vector<int> id_ts(tsx.size), id_st(stx.size);
    for (int i = 0; i < tsx.size; ++i) id_ts[i] = i;
    for (int i = 0; i < stx.size; ++i) id_st[i] = i;
    report.add("chi~ o chi = id @" + x.name,
               compare_tables(compose_tables(fwd, bwd), id_ts, "chi~ o chi", x.name, ts, x));
    report.add("chi o chi~ = id @" + x.name,
               compare_tables(compose_tables(bwd, fwd), id_st, "chi o chi~", x.name, st, x));
    report.add("chi equivariant @" + x.name, equivariance_verdict(tsx, stx, fwd, "chi"));
    report.add("chi~ equivariant @" + x.name, equivariance_verdict(stx, tsx, bwd, "chi~"));
  }
  report.add("chi natural",
             check_naturality({"chi", ts, st, [&l](const GSet& x) { return chi_component(l, x); }}, u));
  report.add("chi~ natural",
             check_naturality({"chi~", st, ts,
                               [&l](const GSet& x) { return chi_inverse_component(l, x); }},
                              u));
  return report;
}

LawReport check_distributive_law(const GSet& l, const Component& cand, const ProbeUniverse& u) {
  LawReport report;
  const Comonad s = build_S(l);
  const Comonad t = build_T(l.group);
  const FunctorExpr se = FunctorExpr::s(l);
  const FunctorExpr te = FunctorExpr::t();
  const FunctorExpr st = se.compose(te);

  for (const GSet& x : u.objects) {
    const GSet tx = t_product(x);
    const GSet sx = s_product(l, x);
    const GSet stx = s_product(l, tx);
    const GSet tsx = t_product(sx);
    const GSet ttx = t_product(tx);
    const GSet ssx = s_product(l, sx);

    const std::vector<int> cand_x = cand(x);
    if (cand_x.size() != static_cast<std::size_t>(stx.size))
      fail(Errc::ChainTypeMismatch, "candidate component has wrong size at " + x.name);

    // Comultiplication compatibility with T:
    //   T chi~ o chi~_{TX} o S delta~ = delta~_{SX} o chi~.
    {
      const std::vector<int> s_dt = se.lift(tx, ttx, t.delta(x));       // S T X -> S T T X
      const std::vector<int> cand_tx = cand(tx);                        // S T (T X) -> T S (T X)
      const std::vector<int> t_cand = te.lift(stx, tsx, cand_x);        // T S T X -> T T S X
      const std::vector<int> lhs = compose_tables(compose_tables(s_dt, cand_tx), t_cand);
      const std::vector<int> rhs = compose_tables(cand_x, t.delta(sx));
      report.add("comultiplication (T) @" + x.name,
                 compare_tables(lhs, rhs, "distributive law: T comultiplication", x.name, st, x));
    }
    // Counit compatibility with T: epsilon~_{SX} o chi~ = S epsilon~.
    {
      const std::vector<int> lhs = compose_tables(cand_x, t.epsilon(sx));
      const std::vector<int> rhs = se.lift(tx, x, t.epsilon(x));
      report.add("counit (T) @" + x.name,
                 compare_tables(lhs, rhs, "distributive law: T counit", x.name, st, x));
    }
    // Comultiplication compatibility with S:
    //   chi~_{SX} o S chi~ o delta_{TX} = T delta o chi~.
    {
      const std::vector<int> s_cand = se.lift(stx, tsx, cand_x);  // S S T X -> S T S X
      const std::vector<int> cand_sx = cand(sx);                  // S T (S X) -> T S (S X)
      const std::vector<int> lhs =
          compose_tables(compose_tables(s.delta(tx), s_cand), cand_sx);
      const std::vector<int> rhs = compose_tables(cand_x, te.lift(sx, ssx, s.delta(x)));
      report.add("comultiplication (S) @" + x.name,
                 compare_tables(lhs, rhs, "distributive law: S comultiplication", x.name, st, x));
    }
    // Counit compatibility with S: T epsilon o chi~ = epsilon_{TX}.
    {
      const std::vector<int> lhs = compose_tables(cand_x, te.lift(sx, x, s.epsilon(x)));
      const std::vector<int> rhs = s.epsilon(tx);
      report.add("counit (S) @" + x.name,
                 compare_tables(lhs, rhs, "distributive law: S counit", x.name, st, x));
    }
  }

  const FunctorExpr ts = te.compose(se);
  report.add("candidate natural", check_naturality({"distributive candidate", st, ts, cand}, u));
  return report;
}

Verdict derive_law_components(const GSet& l, const Component& cand, const ProbeUniverse& u) {
  // The counit diagrams force beta = g, xi = x and then beta . alpha = l gives
  // alpha = g^-1 l; compare the candidate against that form pointwise.
  const Group& grp = *l.group;
  std::uint64_t checks = 0;
  for (const GSet& x : u.objects) {
    const std::vector<int> cand_x = cand(x);
    const int order = grp.order;
    const std::size_t total = static_cast<std::size_t>(l.size) * order * x.size;
    auto expected = [&](std::size_t i) {
      const int p = static_cast<int>(i % x.size);
      const int g = static_cast<int>((i / x.size) % order);
      const int a = static_cast<int>(i / (static_cast<std::size_t>(x.size) * order));
      return pair_encode(g, pair_encode(l.apply(grp.inv(g), a), p, x.size), l.size * x.size);
    };
    const std::size_t bad =
        scan::first_fail(total, [&](std::size_t i) { return cand_x[i] == expected(i); });
    checks += total;
    if (bad != scan::npos) {
      const FunctorExpr st = FunctorExpr::s(l).compose(FunctorExpr::t());
      return Verdict::bad(Witness{"forced components (g, g^-1 l, x)", x.name,
                                  show_point(st, x, static_cast<int>(bad)),
                                  std::to_string(cand_x[bad]), std::to_string(expected(bad))},
                          checks);
    }
  }
  return Verdict::ok(checks);
}

std::vector<int> mate_fu_component(const GSet& l, const Component& omega, const GSet& w) {
  const GSet fw = t_product(w);
  const GSet sfw = s_product(l, fw);
  const std::vector<int> omega_fw = omega(fw);
  if (omega_fw.size() != static_cast<std::size_t>(sfw.size))
    fail(Errc::IncompatibleFunctors, "mate: omega component must be square on L x (G ~x W)");
  const int order = w.group->order;
  std::vector<int> out(static_cast<std::size_t>(order) * l.size * w.size);
  for (int g = 0; g < order; ++g)
    for (int a = 0; a < l.size; ++a)
      for (int p = 0; p < w.size; ++p) {
        // F C eta, then omega at F W, then the counit action on S F W.
        const int after_eta = pair_encode(a, pair_encode(Group::identity, p, w.size), fw.size);
        const int after_omega = omega_fw[after_eta];
        out[pair_encode(g, pair_encode(a, p, w.size), l.size * w.size)] =
            sfw.apply(g, after_omega);
      }
  return out;
}

}  // namespace gsv
