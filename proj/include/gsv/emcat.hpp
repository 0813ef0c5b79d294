#pragma once

#include <string>
#include <vector>

#include "gsv/comonad.hpp"
#include "gsv/gset.hpp"
#include "gsv/verdict.hpp"

namespace gsv {

/// A coalgebra over S_L, determined by an equivariant beta1 : X -> L; the
/// coaction is x -> (beta1(x), x) in L x X.
struct SCoalgebra {
  GSet carrier;
  GSet l;
  std::vector<int> beta1;
  std::string name;

  int coaction(int x) const { return pair_encode(beta1[x], x, carrier.size); }
};

/// Throws NotEquivariant when beta1 fails equivariance.
SCoalgebra coalgebra_from_beta1(GSet x, GSet l, std::vector<int> beta1, std::string name = "");

/// The coaction equations (automatic for this form; verified anyway).
Verdict coalgebra_laws(const SCoalgebra& c);

std::vector<SCoalgebra> enumerate_coalgebras(const GSet& x, const GSet& l,
                                             std::uint64_t bound = kDefaultSearchBound);

/// Full check of S h o beta = alpha o h plus equivariance of h.
Verdict is_coalgebra_morphism(const SCoalgebra& src, const SCoalgebra& dst,
                              const std::vector<int>& h);

std::vector<std::vector<int>> enumerate_coalgebra_morphisms(
    const SCoalgebra& src, const SCoalgebra& dst, std::uint64_t bound = kDefaultSearchBound);

/// Cofree coalgebra (S X, Delta): carrier L x X with beta1(l, x) = l.
SCoalgebra cofree_coalgebra(const GSet& l, const GSet& x);

/// Hom bijection of the forgetful/cofree adjunction: xi(f)(y) = epsilon(f(y))
/// for a coalgebra morphism f : Y -> S X; theta(h) = S h o coaction for a
/// plain equivariant h : Y -> X.
std::vector<int> adjunction_xi(const SCoalgebra& y, const GSet& x, const std::vector<int>& f_hat);
std::vector<int> adjunction_theta(const SCoalgebra& y, const GSet& x, const std::vector<int>& h);

/// Probe family in the coalgebra category: every enumerated structure on every
/// G-set probe plus the cofree objects, with coalgebra morphisms between the
/// small ones.
struct CoalgProbe {
  struct Mor {
    int src = 0, dst = 0;
    std::vector<int> table;
  };
  std::vector<SCoalgebra> objects;
  std::vector<Mor> morphisms;

  static CoalgProbe standard(const GSet& l, const ProbeUniverse& u, std::size_t hom_cap = 16,
                             std::uint64_t search_bound = kDefaultSearchBound);
};

/// Q(X, beta) = (G ~x X, (g,x) -> (g beta1(x), g, x)); its comultiplication and
/// counit are the T components on carriers.
SCoalgebra q_object(const SCoalgebra& c);
std::vector<int> q_morphism(const SCoalgebra& src, const std::vector<int>& h);
std::vector<int> q_delta(const SCoalgebra& c);    // G ~x X -> G ~x G ~x X, (g,x) -> (g,1,x)
std::vector<int> q_epsilon(const SCoalgebra& c);  // G ~x X -> X, (g,x) -> gx

/// (i) each Q object is a valid coalgebra, (ii) delta/epsilon are coalgebra
/// morphisms, (iii) comonad laws and naturality over the coalgebra probes.
LawReport check_q_comonad(const GSet& l, const CoalgProbe& probe);

/// Twisted lift isomorphism (g,l,x) -> (gl, g a, x) and its inverse
/// (l,g,x) -> (g a^-1, a g^-1 l, x), for a fixed group element a.
std::vector<int> omega_component(const GSet& l, int a_bar, const GSet& x);
std::vector<int> gamma_component(const GSet& l, int a_bar, const GSet& x);

/// Mutual inverses, equivariance, and coalgebra-morphism property of both
/// directions between (G ~x L x X, chi o G ~x Delta) and (L x G ~x X, Delta).
LawReport check_omega_gamma(const GSet& l, int a_bar, const ProbeUniverse& u);

/// Comultiplication square and counit triangle for the cofree-side pairing
/// with omega; passes exactly when a_bar is the identity.
LawReport lax_iso_check(const GSet& l, int a_bar, const ProbeUniverse& u);

/// Same criterion for the forgetful-side pairing with the mate.
LawReport colax_check(const GSet& l, int a_bar, const CoalgProbe& probe);

/// Mate of omega under the forgetful/cofree adjunction, evaluated as the
/// three-arrow composite at a coalgebra; closed forms (g,x) -> (g a, x) and
/// (g,x) -> (g a^-1, x).
std::vector<int> lambda_tilde_composite(const GSet& l, int a_bar, const SCoalgebra& c);
std::vector<int> lambda_tilde_closed(const Group& g, int a_bar, int carrier_size);
std::vector<int> gamma_tilde_closed(const Group& g, int a_bar, int carrier_size);

/// composite == closed form, mutual inverses, naturality over the probes.
LawReport check_mate_lambda(const GSet& l, int a_bar, const CoalgProbe& probe);

}  // namespace gsv
