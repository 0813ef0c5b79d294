#include "gsv/coeff.hpp"

#include <algorithm>

#include "gsv/error.hpp"
#include "gsv/scan.hpp"

namespace gsv {

const char* codomain_action_name(CodomainAction a) {
  switch (a) {
    case CodomainAction::translation: return "translation";
    case CodomainAction::conjugation: return "conjugation";
    case CodomainAction::trivial: return "trivial";
  }
  return "?";
}

GSet codomain_gset(const GroupPtr& g, CodomainAction a) {
  switch (a) {
    case CodomainAction::translation: return regular_gset(g);
    case CodomainAction::conjugation: return conj_gset(g);
    case CodomainAction::trivial: {
      GSet s = trivial_gset(g, g->order);
      s.name = "G(trivial)";
      return s;
    }
  }
  fail(Errc::ConfigInvalid, "unknown codomain action");
}

CoefficientConfig make_config(GSet l, GSet n, std::vector<int> h, CodomainAction h_action,
                              std::vector<int> f, int a_bar, std::string name) {
  if (!same_group(l, n)) fail(Errc::ConfigInvalid, "config: L and N over different groups");
  const GroupPtr& g = l.group;
  if (a_bar < 0 || a_bar >= g->order) fail(Errc::IndexOutOfRange, "a_bar out of range");
  if (static_cast<int>(h.size()) != l.size) fail(Errc::ConfigInvalid, "h length != |L|");
  if (static_cast<int>(f.size()) != n.size) fail(Errc::ConfigInvalid, "f length != |N|");
  for (int v : h)
    if (v < 0 || v >= g->order) fail(Errc::IndexOutOfRange, "h value out of range");
  for (int v : f)
    if (v < 0 || v >= l.size) fail(Errc::IndexOutOfRange, "f value out of range");

  const GSet cod = codomain_gset(g, h_action);
  Verdict hv = equivariance_verdict(l, cod, h, "h");
  if (!hv.pass)
    fail(Errc::EquivarianceDeclarationFailed,
         "h declared " + std::string(codomain_action_name(h_action)) + "-equivariant fails at " +
             hv.witness->input + ": " + hv.witness->lhs + " != " + hv.witness->rhs);
  Verdict fv = equivariance_verdict(n, l, f, "f");
  if (!fv.pass)
    fail(Errc::NotEquivariant, "f fails equivariance at " + fv.witness->input + ": " +
                                   fv.witness->lhs + " != " + fv.witness->rhs);

  CoefficientConfig cfg;
  cfg.l = std::move(l);
  cfg.n = std::move(n);
  cfg.h = std::move(h);
  cfg.h_action = h_action;
  cfg.f = std::move(f);
  cfg.a_bar = a_bar;
  cfg.name = name.empty() ? "config" : std::move(name);
  return cfg;
}

bool h_translation_equivariant(const CoefficientConfig& cfg) {
  const GSet cod = codomain_gset(cfg.l.group, CodomainAction::translation);
  return is_equivariant(cfg.l, cod, cfg.h);
}

std::vector<std::vector<int>> enumerate_h(const GSet& l, CodomainAction a, std::uint64_t bound) {
  return enumerate_equivariant_maps(l, codomain_gset(l.group, a), bound);
}

std::vector<int> rho_component(const CoefficientConfig& cfg) {
  const Group& g = *cfg.n.group;
  const GSet sn = s_product(cfg.l, cfg.n);
  std::vector<int> out(static_cast<std::size_t>(g.order) * cfg.n.size);
  for (int a = 0; a < g.order; ++a)
    for (int p = 0; p < cfg.n.size; ++p)
      out[pair_encode(a, p, cfg.n.size)] =
          pair_encode(cfg.l.apply(a, cfg.f[p]), cfg.n.apply(a, p), cfg.n.size);
  Verdict eq = equivariance_verdict(t_product(cfg.n), sn, out, "rho");
  if (!eq.pass) fail(Errc::NotEquivariant, "rho fails equivariance at " + eq.witness->input);
  return out;
}

std::vector<int> lambda_tilde_table(const CoefficientConfig& cfg, const GSet& z) {
  const Group& g = *cfg.l.group;
  std::vector<int> out(static_cast<std::size_t>(cfg.l.size) * z.size);
  for (int b = 0; b < cfg.l.size; ++b)
    for (int p = 0; p < z.size; ++p)
      out[pair_encode(b, p, z.size)] =
          pair_encode(cfg.h[b], z.apply(g.inv(cfg.h[b]), p), z.size);
  return out;
}

Verdict lambda_tilde_equivariant(const CoefficientConfig& cfg, const GSet& z) {
  return equivariance_verdict(s_product(cfg.l, z), t_product(z), lambda_tilde_table(cfg, z),
                              "lambda~");
}

namespace {

// Orbit-level map induced by a point map, with well-definedness verified over
// every point of the source.
OrbitMap induce_orbit_map(const GSet& src, const GSet& dst, const std::vector<int>& tbl,
                          const std::string& label) {
  const OrbitSet os = orbits(src);
  const OrbitSet od = orbits(dst);
  OrbitMap m;
  m.table.assign(os.count, -1);
  for (int c = 0; c < os.count; ++c) m.table[c] = od.cls[tbl[os.class_rep[c]]];
  const std::size_t bad = scan::first_fail(static_cast<std::size_t>(src.size), [&](std::size_t p) {
    return od.cls[tbl[p]] == m.table[os.cls[p]];
  });
  if (bad == scan::npos) {
    m.well_defined = Verdict::ok(src.size);
  } else {
    m.well_defined = Verdict::bad(
        Witness{label + " well defined on orbits", src.name, "point " + std::to_string(bad),
                std::to_string(od.cls[tbl[bad]]),
                std::to_string(m.table[os.cls[bad]])},
        src.size);
  }
  return m;
}

std::vector<int> compose_tables(const std::vector<int>& first, const std::vector<int>& then) {
  std::vector<int> out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = then[first[i]];
  return out;
}

Verdict compare_tables(const std::vector<int>& lhs, const std::vector<int>& rhs,
                       const std::string& law, const std::string& object) {
  if (lhs.size() != rhs.size())
    fail(Errc::ChainTypeMismatch, law + " at " + object + ": side sizes disagree");
  const std::size_t bad =
      scan::first_fail(lhs.size(), [&](std::size_t i) { return lhs[i] == rhs[i]; });
  if (bad == scan::npos) return Verdict::ok(lhs.size());
  return Verdict::bad(Witness{law, object, "index " + std::to_string(bad),
                              std::to_string(lhs[bad]), std::to_string(rhs[bad])},
                      lhs.size());
}

}  // namespace

OrbitMap lambda_orbit_map(const CoefficientConfig& cfg, const GSet& z) {
  return induce_orbit_map(s_product(cfg.l, z), t_product(z), lambda_tilde_table(cfg, z),
                          "lambda");
}

std::vector<int> nabla_table(const CoefficientConfig& cfg, const SCoalgebra& c) {
  const Group& g = *c.carrier.group;
  std::vector<int> out(c.carrier.size);
  for (int x = 0; x < c.carrier.size; ++x) {
    const int hb = cfg.h[c.beta1[x]];
    out[x] = pair_encode(hb, c.carrier.apply(g.inv(hb), x), c.carrier.size);
  }
  return out;
}

LawReport check_nabla(const CoefficientConfig& cfg, const SCoalgebra& c) {
  LawReport report;
  const Group& g = *c.carrier.group;
  const std::vector<int> nab = nabla_table(cfg, c);
  const SCoalgebra qc = q_object(c);

  report.add("nabla equivariant @" + c.name,
             equivariance_verdict(c.carrier, qc.carrier, nab, "nabla"));
  report.add("nabla coalgebra morphism @" + c.name, is_coalgebra_morphism(c, qc, nab));

  // Coalgebra structure over Q: epsilon^Q o nabla = id and
  // Delta^Q o nabla = (G ~x nabla) o nabla.
  report.add("epsilon^Q o nabla = id @" + c.name,
             compare_tables(compose_tables(nab, q_epsilon(c)),
                            [&] {
                              std::vector<int> id(c.carrier.size);
                              for (int i = 0; i < c.carrier.size; ++i) id[i] = i;
                              return id;
                            }(),
                            "epsilon^Q o nabla", c.name));
  {
    const std::vector<int> lhs = compose_tables(nab, q_delta(c));
    std::vector<int> t_nab(static_cast<std::size_t>(g.order) * c.carrier.size);
    for (int a = 0; a < g.order; ++a)
      for (int x = 0; x < c.carrier.size; ++x)
        t_nab[pair_encode(a, x, c.carrier.size)] =
            pair_encode(a, nab[x], g.order * c.carrier.size);
    const std::vector<int> rhs = compose_tables(nab, t_nab);
    report.add("Delta^Q o nabla = (G ~x nabla) o nabla @" + c.name,
               compare_tables(lhs, rhs, "Delta^Q o nabla", c.name));
  }

  // Orbit-level push-forward.
  const OrbitMap m = induce_orbit_map(c.carrier, qc.carrier, nab, "orbit nabla");
  report.add("orbit nabla well defined @" + c.name, m.well_defined);
  {
    const OrbitMap meps = induce_orbit_map(qc.carrier, c.carrier, q_epsilon(c), "orbit epsilon^Q");
    report.add("orbit epsilon^Q well defined @" + c.name, meps.well_defined);
    std::vector<int> ident(orbits(c.carrier).count);
    for (std::size_t i = 0; i < ident.size(); ++i) ident[i] = static_cast<int>(i);
    report.add("orbit counit @" + c.name,
               compare_tables(compose_tables(m.table, meps.table), ident, "orbit counit", c.name));
  }
  {
    const GSet ttx = t_product(qc.carrier);
    const OrbitMap mdelta = induce_orbit_map(qc.carrier, ttx, q_delta(c), "orbit Delta^Q");
    std::vector<int> t_nab(static_cast<std::size_t>(g.order) * c.carrier.size);
    for (int a = 0; a < g.order; ++a)
      for (int x = 0; x < c.carrier.size; ++x)
        t_nab[pair_encode(a, x, c.carrier.size)] =
            pair_encode(a, nab[x], g.order * c.carrier.size);
    const OrbitMap mtnab = induce_orbit_map(qc.carrier, ttx, t_nab, "orbit G ~x nabla");
    report.add("orbit comultiplication @" + c.name,
               compare_tables(compose_tables(m.table, mdelta.table),
                              compose_tables(m.table, mtnab.table), "orbit comultiplication",
                              c.name));
  }
  return report;
}

LawReport check_correspondence(const CoefficientConfig& cfg, const ProbeUniverse& u,
                               const CoalgProbe& probe) {
  LawReport report;
  const Group& g = *cfg.l.group;

  // Forward: from lambda, rebuild the orbit-level nabla at every probe
  // coalgebra through unit, lambda at the carrier, and the inverse mate
  // (twist pinned to the identity, where the mate is invertible laxly).
  for (const SCoalgebra& c : probe.objects) {
    const GSet& x = c.carrier;
    const GSet sx = s_product(cfg.l, x);
    const GSet tx = t_product(x);

    std::vector<int> unit(x.size);
    for (int p = 0; p < x.size; ++p) unit[p] = c.coaction(p);
    const OrbitMap s1 = induce_orbit_map(x, sx, unit, "orbit unit");
    const OrbitMap s2 = lambda_orbit_map(cfg, x);
    const std::vector<int> gam = gamma_tilde_closed(g, Group::identity, x.size);
    const OrbitMap s3 = induce_orbit_map(tx, tx, gam, "orbit mate inverse");

    report.add("forward chain stage 1 well defined @" + c.name, s1.well_defined);
    report.add("forward chain stage 2 well defined @" + c.name, s2.well_defined);

    const std::vector<int> chain = compose_tables(compose_tables(s1.table, s2.table), s3.table);
    const OrbitMap direct = induce_orbit_map(x, tx, nabla_table(cfg, c), "orbit nabla");
    report.add("forward chain = orbit nabla @" + c.name,
               compare_tables(chain, direct.table, "forward chain", c.name));
  }

  // Backward: from nabla at the cofree objects, rebuild lambda at every probe
  // object through nabla, the mate, and T applied to the comonad counit.
  for (const GSet& x : u.objects) {
    const SCoalgebra fx = cofree_coalgebra(cfg.l, x);
    const GSet& sx = fx.carrier;
    const GSet tsx = t_product(sx);
    const GSet tx = t_product(x);

    const OrbitMap s1 = induce_orbit_map(sx, tsx, nabla_table(cfg, fx), "orbit nabla at cofree");
    const std::vector<int> lam = lambda_tilde_closed(g, Group::identity, sx.size);
    const OrbitMap s2 = induce_orbit_map(tsx, tsx, lam, "orbit mate");
    std::vector<int> t_eps(tsx.size);
    for (int a = 0; a < g.order; ++a)
      for (int p = 0; p < sx.size; ++p)
        t_eps[pair_encode(a, p, sx.size)] = pair_encode(a, p % x.size, x.size);
    const OrbitMap s3 = induce_orbit_map(tsx, tx, t_eps, "orbit T epsilon");

    report.add("backward chain stage 1 well defined @" + x.name, s1.well_defined);
    report.add("backward chain stage 3 well defined @" + x.name, s3.well_defined);

    const std::vector<int> chain = compose_tables(compose_tables(s1.table, s2.table), s3.table);
    const OrbitMap direct = lambda_orbit_map(cfg, x);
    report.add("backward chain = orbit lambda @" + x.name,
               compare_tables(chain, direct.table, "backward chain", x.name));
    report.add("orbit lambda well defined @" + x.name, direct.well_defined);
  }
  return report;
}

}  // namespace gsv
