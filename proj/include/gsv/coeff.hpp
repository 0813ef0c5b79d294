#pragma once

#include <string>
#include <vector>

#include "gsv/comonad.hpp"
#include "gsv/emcat.hpp"
#include "gsv/gset.hpp"

namespace gsv {

/// Action carried by the group itself when it is the codomain of h. The
/// declaration is explicit; nothing is inferred from h.
enum class CodomainAction { translation, conjugation, trivial };

const char* codomain_action_name(CodomainAction a);

/// The G-set structure on the group's own element set under the declaration.
GSet codomain_gset(const GroupPtr& g, CodomainAction a);

/// Coefficient data: h maps L into the group (under a declared action),
/// f maps N into L, and a_bar is the twist used by the lift isomorphism.
struct CoefficientConfig {
  GSet l;
  GSet n;
  std::vector<int> h;  // per point of L, a group element
  CodomainAction h_action = CodomainAction::translation;
  std::vector<int> f;  // per point of N, a point of L
  int a_bar = 0;
  std::string name;
};

/// Validates h against its declared codomain action
/// (EquivarianceDeclarationFailed) and f against the actions of N and L
/// (NotEquivariant).
CoefficientConfig make_config(GSet l, GSet n, std::vector<int> h, CodomainAction h_action,
                              std::vector<int> f, int a_bar = 0, std::string name = "");

/// Whether h is equivariant into the translation action; the chain
/// constructions below are well defined exactly on such h.
bool h_translation_equivariant(const CoefficientConfig& cfg);

/// All h equivariant for the given declaration, i.e. Hom(L, G_declared).
std::vector<std::vector<int>> enumerate_h(const GSet& l, CodomainAction a,
                                          std::uint64_t bound = kDefaultSearchBound);

/// rho : T N -> S N from f, via the Hom bijection applied to n -> (f(n), n):
/// rho(g, n) = (g f(n), g n). Equivariance is verified on construction.
std::vector<int> rho_component(const CoefficientConfig& cfg);

/// lambda~ : L x Z -> G ~x Z, (b, z) -> (h(b), h(b)^-1 z), at any object Z.
std::vector<int> lambda_tilde_table(const CoefficientConfig& cfg, const GSet& z);
Verdict lambda_tilde_equivariant(const CoefficientConfig& cfg, const GSet& z);

/// Orbit-level map (L x Z)/G -> (G ~x Z)/G induced by lambda~, with the
/// well-definedness re-verified by exhaustion over whole orbits.
struct OrbitMap {
  std::vector<int> table;  // orbit class of L x Z -> orbit class of G ~x Z
  Verdict well_defined;
};
OrbitMap lambda_orbit_map(const CoefficientConfig& cfg, const GSet& z);

/// nabla at a coalgebra: x -> (h(beta1 x), h(beta1 x)^-1 x) in G ~x X.
std::vector<int> nabla_table(const CoefficientConfig& cfg, const SCoalgebra& c);

/// (1) coalgebra morphism into Q(X,beta), (2) the two coalgebra equations over
/// Q, (3) the orbit-level push-forward laws.
LawReport check_nabla(const CoefficientConfig& cfg, const SCoalgebra& c);

/// The two chains of the correspondence (twist pinned to the identity):
/// forward rebuilds nabla at every probe coalgebra from lambda, backward
/// rebuilds lambda at every probe object from nabla; both are compared
/// pointwise against the direct constructions, which makes the round trips
/// identities.
LawReport check_correspondence(const CoefficientConfig& cfg, const ProbeUniverse& u,
                               const CoalgProbe& probe);

}  // namespace gsv
