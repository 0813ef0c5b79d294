#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "gsv/error.hpp"
#include "gsv/triangle.hpp"

using namespace gsv;

namespace {

std::uint64_t pow_u(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST_CASE("phi has the displayed form and constant fixed-point families are comonad morphisms") {
  const GroupPtr s3 = symmetric_group(3);
  const ProbeUniverse u = ProbeUniverse::standard(s3);
  const GSet l = conj_gset(s3);
  // The identity element is the unique conj fixed point of S3.
  const LawReport r = check_comonad_morphism(l, constant_family(l, 0), u);
  CHECK(r.pass());

  const GSet x = regular_gset(s3);
  const std::vector<int> phi = phi_component(l, x, std::vector<int>(x.size, 0));
  for (int g = 0; g < 6; ++g)
    for (int p = 0; p < 6; ++p)
      CHECK(phi[pair_encode(g, p, 6)] ==
            pair_encode(l.apply(g, 0), x.apply(g, p), 6));
}

TEST_CASE("constant families over the trivial coefficient object always work") {
  const GroupPtr c3 = cyclic_group(3);
  const ProbeUniverse u = ProbeUniverse::standard(c3);
  const GSet l = trivial_gset(c3, 2);
  for (int l0 = 0; l0 < l.size; ++l0)
    CHECK(check_comonad_morphism(l, constant_family(l, l0), u).pass());
}

TEST_CASE("classification extracts f and confirms the forced shape") {
  const GroupPtr c2 = cyclic_group(2);
  const GSet l = conj_gset(c2);
  const GSet x = regular_gset(c2);
  const std::vector<int> f = {1, 1};
  const std::vector<int> phi = phi_component(l, x, f);
  const PhiClassification cls = classify_phi(l, x, phi);
  CHECK(cls.f == f);
  CHECK(cls.forced.pass);

  // Second coordinate x instead of gx: counit compatibility rules it out.
  std::vector<int> bad(phi.size());
  for (int g = 0; g < 2; ++g)
    for (int p = 0; p < 2; ++p)
      bad[pair_encode(g, p, 2)] = pair_encode(l.apply(g, f[p]), p, 2);
  const PhiClassification badcls = classify_phi(l, x, bad);
  CHECK_FALSE(badcls.forced.pass);
  // The counit diagram itself fails: epsilon o phi != epsilon~.
  const Comonad s = build_S(l);
  const Comonad t = build_T(c2);
  const std::vector<int> eps = s.epsilon(x);
  bool counit_broken = false;
  const std::vector<int> te = t.epsilon(x);
  for (std::size_t i = 0; i < bad.size(); ++i)
    if (eps[bad[i]] != te[i]) counit_broken = true;
  CHECK(counit_broken);
}

TEST_CASE("every equivariant counit-compatible candidate has the classified form") {
  const GroupPtr c2 = cyclic_group(2);
  const GSet l = conj_gset(c2);
  const Comonad s = build_S(l);
  const Comonad t = build_T(c2);
  for (const GSet& x : {regular_gset(c2), trivial_gset(c2, 2), point_gset(c2)}) {
    const GSet tx = t_product(x);
    const GSet sx = s_product(l, x);
    const std::vector<int> eps = s.epsilon(x);
    const std::vector<int> te = t.epsilon(x);
    for (const auto& cand : enumerate_equivariant_maps(tx, sx)) {
      bool counit_ok = true;
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (eps[cand[i]] != te[i]) counit_ok = false;
      if (!counit_ok) continue;
      CHECK(classify_phi(l, x, cand).forced.pass);
    }
  }
}

TEST_CASE("comparison objects") {
  const GroupPtr c2 = cyclic_group(2);
  const GSet l = regular_gset(c2);
  const std::vector<int> f = {0, 1};
  const SCoalgebra ky = comparison_k(l, c2, 2, f);
  // u(g, y) = (g f(y), g, y): the carrier is the free object on Y.
  const GSet ty = t_product(trivial_gset(c2, 2));
  CHECK(ky.carrier.size == ty.size);
  CHECK(ky.carrier.act == ty.act);
  for (int g = 0; g < 2; ++g)
    for (int y = 0; y < 2; ++y)
      CHECK(ky.beta1[pair_encode(g, y, 2)] == l.apply(g, f[y]));
  // beta1 is equivariant for any plain f (construction would throw otherwise).
  for (const std::vector<int>& anyf : {std::vector<int>{1, 1}, std::vector<int>{1, 0}})
    CHECK_NOTHROW(comparison_k(l, c2, 2, anyf));
}

TEST_CASE("equalizer contents") {
  const GroupPtr c2 = cyclic_group(2);
  const GSet l = regular_gset(c2);
  const GSet x = regular_gset(c2);
  std::vector<int> id(x.size);
  std::iota(id.begin(), id.end(), 0);
  const SCoalgebra c = coalgebra_from_beta1(x, l, id);
  CHECK(equalizer_d(c, id) == std::vector<int>{0, 1});          // f = beta1
  CHECK(equalizer_d(c, {0, 0}) == std::vector<int>{0});          // f constant identity
  CHECK(equalizer_d(c, {1, 0}) == std::vector<int>{});           // nowhere equal
}

TEST_CASE("pi and theta are mutually inverse and pi lands in the equalizer") {
  const GroupPtr c2 = cyclic_group(2);
  for (const GSet& l : {regular_gset(c2), conj_gset(c2)}) {
    std::vector<SCoalgebra> cs;
    for (const GSet& x : {regular_gset(c2), conj_gset(c2), point_gset(c2)}) {
      for (const auto& c : enumerate_coalgebras(x, l)) cs.push_back(c);
      cs.push_back(cofree_coalgebra(l, x));
    }
    for (int l0 = 0; l0 < l.size; ++l0) {
      for (int ypts = 0; ypts <= 3; ++ypts) {
        const std::vector<int> f_y(ypts, l0);
        const SCoalgebra ky = comparison_k(l, c2, ypts, f_y);
        for (const SCoalgebra& c : cs) {
          const std::vector<int> f_x(c.carrier.size, l0);
          const std::vector<int> d = equalizer_d(c, f_x);
          const auto homs = enumerate_coalgebra_morphisms(ky, c);
          CHECK(homs.size() == pow_u(d.size(), ypts));

          // Theta of every plain map into D, then Pi back.
          std::vector<std::size_t> idx(ypts, 0);
          if (!d.empty() || ypts == 0) {
            while (true) {
              std::vector<int> q(ypts);
              for (int i = 0; i < ypts; ++i) q[i] = d[idx[i]];
              const std::vector<int> h = theta_map(c, ypts, q);
              CHECK(is_coalgebra_morphism(ky, c, h).pass);
              CHECK(pi_map(ky, c, ypts, f_x, h) == q);
              int k = ypts - 1;
              while (k >= 0 && ++idx[k] == d.size()) idx[k--] = 0;
              if (k < 0) break;
            }
          }
          // Pi of every coalgebra morphism, then Theta back.
          for (const auto& h : homs) {
            const std::vector<int> q = pi_map(ky, c, ypts, f_x, h);
            for (int y = 0; y < ypts; ++y) CHECK(f_x[q[y]] == c.beta1[q[y]]);
            CHECK(theta_map(c, ypts, q) == h);
          }
        }
      }
    }
  }
}

TEST_CASE("pi rejects maps that are not coalgebra morphisms") {
  const GroupPtr c2 = cyclic_group(2);
  const GSet l = regular_gset(c2);
  const SCoalgebra ky = comparison_k(l, c2, 1, {0});
  std::vector<int> id(l.size);
  std::iota(id.begin(), id.end(), 0);
  const SCoalgebra c = coalgebra_from_beta1(regular_gset(c2), l, id);
  // Constant map is not equivariant here.
  const std::vector<int> bad(ky.carrier.size, 0);
  CHECK_THROWS_AS(pi_map(ky, c, 1, std::vector<int>(c.carrier.size, 0), bad), Error);
}

TEST_CASE("unit and counit of the comparison adjunction are not bijections") {
  // Over conj(C2) every group element fixes the constant value, which blows
  // up the equalizer of K(Y) and collapses the free carrier of K(D(c)).
  const GroupPtr c2 = cyclic_group(2);
  const GSet l = conj_gset(c2);

  // Unit side: D(K(Y)) = Stab(l0) x Y strictly contains the image of
  // y -> (1, y) when the stabilizer is the whole group.
  const std::vector<int> f_y = {0, 0};
  const SCoalgebra ky = comparison_k(l, c2, 2, f_y);
  const std::vector<int> f_ky(ky.carrier.size, 0);
  const std::vector<int> dky = equalizer_d(ky, f_ky);
  CHECK(dky.size() == 4);  // the unit Y -> D(K(Y)) misses half of it

  // Counit side: K(D(c)) -> c, (g, d) -> g d collapses on a fixed point.
  const SCoalgebra c = coalgebra_from_beta1(point_gset(c2), l, {0});
  const std::vector<int> f_c = {0};
  const std::vector<int> d = equalizer_d(c, f_c);
  CHECK(d.size() == 1);
  const SCoalgebra kd = comparison_k(l, c2, 1, {0});
  std::vector<int> counit(kd.carrier.size);
  for (int g = 0; g < 2; ++g) counit[pair_encode(g, 0, 1)] = c.carrier.apply(g, d[0]);
  CHECK(is_coalgebra_morphism(kd, c, counit).pass);
  CHECK(counit[0] == counit[1]);  // two points land on the single fixed point
}
