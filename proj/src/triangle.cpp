#include "gsv/triangle.hpp"

#include <algorithm>

#include "gsv/error.hpp"
#include "gsv/scan.hpp"

namespace gsv {

namespace {

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
  return Verdict::bad(Witness{law, object, "point " + std::to_string(bad),
                              std::to_string(lhs[bad]), std::to_string(rhs[bad])},
                      lhs.size());
}

}  // namespace

PlainFamily constant_family(const GSet& l, int l0) {
  if (l0 < 0 || l0 >= l.size) fail(Errc::IndexOutOfRange, "constant family value out of range");
  return [l0](const GSet& x) { return std::vector<int>(x.size, l0); };
}

std::vector<int> phi_component(const GSet& l, const GSet& x, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != x.size)
    fail(Errc::ConfigInvalid, "phi: f length != object size");
  const Group& g = *l.group;
  std::vector<int> out(static_cast<std::size_t>(g.order) * x.size);
  for (int a = 0; a < g.order; ++a)
    for (int p = 0; p < x.size; ++p)
      out[pair_encode(a, p, x.size)] =
          pair_encode(l.apply(a, f[p]), x.apply(a, p), x.size);
  return out;
}

LawReport check_comonad_morphism(const GSet& l, const PlainFamily& f_at, const ProbeUniverse& u) {
  LawReport report;
  const Comonad s = build_S(l);
  const Comonad t = build_T(l.group);
  const FunctorExpr se = FunctorExpr::s(l);
  const FunctorExpr te = FunctorExpr::t();
  for (const GSet& x : u.objects) {
    const GSet tx = t_product(x);
    const GSet sx = s_product(l, x);
    const std::vector<int> phi_x = phi_component(l, x, f_at(x));
    const std::vector<int> phi_tx = phi_component(l, tx, f_at(tx));

    report.add("phi equivariant @" + x.name, equivariance_verdict(tx, sx, phi_x, "phi"));
    // Counit: epsilon o phi = epsilon~.
    report.add("phi counit @" + x.name,
               compare_tables(compose_tables(phi_x, s.epsilon(x)), t.epsilon(x), "phi counit",
                              x.name));
    // Comultiplication: Delta o phi = (L x phi) o phi_{TX} o delta~.
    {
      const std::vector<int> lhs = compose_tables(phi_x, s.delta(x));
      const std::vector<int> rhs = compose_tables(
          compose_tables(t.delta(x), phi_tx), se.lift(tx, sx, phi_x));
      report.add("phi comultiplication @" + x.name,
                 compare_tables(lhs, rhs, "phi comultiplication", x.name));
    }
  }
  // Naturality of the family over probe morphisms.
  std::uint64_t checks = 0;
  for (const auto& mor : u.morphisms) {
    const GSet& x = u.objects[mor.src];
    const GSet& y = u.objects[mor.dst];
    const std::vector<int> tm = te.lift(x, y, mor.table);
    const std::vector<int> sm = se.lift(x, y, mor.table);
    const std::vector<int> phi_x = phi_component(l, x, f_at(x));
    const std::vector<int> phi_y = phi_component(l, y, f_at(y));
    Verdict v = compare_tables(compose_tables(tm, phi_y), compose_tables(phi_x, sm),
                               "phi natural", x.name + " -> " + y.name);
    if (!v.pass) {
      report.add("phi natural", v);
      return report;
    }
    checks += v.checks;
  }
  report.add("phi natural", Verdict::ok(checks));
  return report;
}

PhiClassification classify_phi(const GSet& l, const GSet& x, const std::vector<int>& cand) {
  const Group& g = *l.group;
  if (cand.size() != static_cast<std::size_t>(g.order) * x.size)
    fail(Errc::ConfigInvalid, "classify_phi: candidate has wrong size");
  PhiClassification out;
  out.f.resize(x.size);
  for (int p = 0; p < x.size; ++p)
    out.f[p] = pair_decode(cand[pair_encode(Group::identity, p, x.size)], x.size).first;
  const std::vector<int> forced = phi_component(l, x, out.f);
  out.forced = compare_tables(cand, forced, "phi forced form (g f(x), gx)", x.name);
  return out;
}

SCoalgebra comparison_k(const GSet& l, const GroupPtr& g, int y_points,
                        const std::vector<int>& f_y) {
  if (static_cast<int>(f_y.size()) != y_points)
    fail(Errc::ConfigInvalid, "comparison: f length != |Y|");
  const GSet y = trivial_gset(g, y_points);
  GSet carrier = t_product(y);
  std::vector<int> beta1(carrier.size);
  for (int a = 0; a < g->order; ++a)
    for (int p = 0; p < y_points; ++p)
      beta1[pair_encode(a, p, y_points)] = l.apply(a, f_y[p]);
  return coalgebra_from_beta1(std::move(carrier), l, std::move(beta1),
                              "K(" + std::to_string(y_points) + "pt)");
}

std::vector<int> equalizer_d(const SCoalgebra& c, const std::vector<int>& f_x) {
  if (static_cast<int>(f_x.size()) != c.carrier.size)
    fail(Errc::ConfigInvalid, "equalizer: f length != carrier size");
  std::vector<int> out;
  for (int p = 0; p < c.carrier.size; ++p)
    if (f_x[p] == c.beta1[p]) out.push_back(p);
  return out;
}

std::vector<int> pi_map(const SCoalgebra& ky, const SCoalgebra& c, int y_points,
                        const std::vector<int>& f_x, const std::vector<int>& h) {
  Verdict mor = is_coalgebra_morphism(ky, c, h);
  if (!mor.pass)
    fail(Errc::NotCoalgebraMorphism,
         "pi input at " + mor.witness->input + " (" + mor.witness->law + ")");
  std::vector<int> out(y_points);
  for (int p = 0; p < y_points; ++p) {
    const int v = h[pair_encode(Group::identity, p, y_points)];
    if (f_x[v] != c.beta1[v])
      fail(Errc::NotWellDefined,
           "pi image " + std::to_string(v) + " escapes the equalizer at y=" + std::to_string(p));
    out[p] = v;
  }
  return out;
}

std::vector<int> theta_map(const SCoalgebra& c, int y_points, const std::vector<int>& q) {
  if (static_cast<int>(q.size()) != y_points)
    fail(Errc::ConfigInvalid, "theta: map length != |Y|");
  const Group& g = *c.carrier.group;
  std::vector<int> out(static_cast<std::size_t>(g.order) * y_points);
  for (int a = 0; a < g.order; ++a)
    for (int p = 0; p < y_points; ++p)
      out[pair_encode(a, p, y_points)] = c.carrier.apply(a, q[p]);
  return out;
}

}  // namespace gsv
