#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gsv/gset.hpp"
#include "gsv/verdict.hpp"

namespace gsv {

/// A composite of the two basic endofunctors on G-sets:
///   S_L : X -> L x X   (diagonal action),
///   T   : X -> G ~x X  (translation on the new left coordinate).
/// steps[0] is the outermost factor, so {T, S_L} applied to X is G ~x (L x X).
struct FunctorExpr {
  struct Step {
    bool is_s = false;
    GSet l;  // only meaningful when is_s
  };
  std::vector<Step> steps;

  static FunctorExpr identity() { return {}; }
  static FunctorExpr s(GSet l) { return FunctorExpr{{Step{true, std::move(l)}}}; }
  static FunctorExpr t() { return FunctorExpr{{Step{false, {}}}}; }

  /// this o inner (apply inner first).
  FunctorExpr compose(const FunctorExpr& inner) const;

  GSet apply(const GSet& x) const;

  /// Functor action on a morphism table m : dom -> cod.
  std::vector<int> lift(const GSet& dom, const GSet& cod, const std::vector<int>& m) const;

  std::string show() const;
};

/// Decodes a point of expr(x) into a readable nested tuple.
std::string show_point(const FunctorExpr& expr, const GSet& x, int p);

/// Finite stand-in for "for all G-sets": a family of objects and equivariant
/// maps between them over which every naturality statement is checked.
struct ProbeUniverse {
  struct Mor {
    int src = 0, dst = 0;
    std::vector<int> table;
  };
  std::vector<GSet> objects;
  std::vector<Mor> morphisms;

  /// regular, conj, trivial(2), point, plus all equivariant maps between them
  /// (at most hom_cap per ordered pair, in lexicographic order).
  static ProbeUniverse standard(const GroupPtr& g, std::size_t hom_cap = 32,
                                std::uint64_t search_bound = kDefaultSearchBound);
};

/// Per-object component of a natural transformation, materialised as a table.
using Component = std::function<std::vector<int>(const GSet&)>;

struct NatTransform {
  std::string name;
  FunctorExpr src, dst;
  Component at;
};

Verdict check_naturality(const NatTransform& n, const ProbeUniverse& u);

/// A comonad given by one basic functor step with component builders, so test
/// code can also assemble deliberately broken variants.
struct Comonad {
  std::string name;
  FunctorExpr f;
  Component delta;    // F X -> F F X
  Component epsilon;  // F X -> X
};

Comonad build_S(GSet l);
Comonad build_T(const GroupPtr& g);

/// Coassociativity, both counit laws, naturality of delta and epsilon, and
/// equivariance of the components, over the whole probe universe.
LawReport check_comonad_laws(const Comonad& c, const ProbeUniverse& u);

/// theta: an equivariant rho : G ~x N -> L x N restricted to the identity
/// coordinate; xi(rho_bar)(a, n) = a . rho_bar(n) is its inverse.
std::vector<int> theta_component(const GSet& n, const GSet& l, const std::vector<int>& rho);
std::vector<int> xi_component(const GSet& n, const GSet& l, const std::vector<int>& rho_bar);

/// chi : G ~x (L x X) -> L x (G ~x X), (g,l,x) -> (gl, g, x) and its inverse
/// (l,g,x) -> (g, g^-1 l, x). Both components are equivariant bijections.
std::vector<int> chi_component(const GSet& l, const GSet& x);
std::vector<int> chi_inverse_component(const GSet& l, const GSet& x);

/// Mutual inverse plus equivariance of both chi components at every probe.
LawReport verify_chi(const GSet& l, const ProbeUniverse& u);

/// The four compatibility diagrams (two with the comultiplications, two with
/// the counits) plus naturality, for a candidate L x (G ~x X) -> G ~x (L x X).
LawReport check_distributive_law(const GSet& l, const Component& cand, const ProbeUniverse& u);

/// Applies the counit-diagram argument pointwise: a candidate passing both
/// counit diagrams is forced to (l,g,x) -> (g, g^-1 l, x). Reports whether the
/// candidate equals that form everywhere.
Verdict derive_law_components(const GSet& l, const Component& cand, const ProbeUniverse& u);

/// Mate under the free/forgetful adjunction: from a lift isomorphism
/// omega_X : L x X -> L x X (component over the underlying set) produce the
/// transformation G ~x (L x W) -> L x (G ~x W) at a plain-set carrier W.
/// omega = identity yields chi. Throws IncompatibleFunctors on shape mismatch.
std::vector<int> mate_fu_component(const GSet& l, const Component& omega, const GSet& w);

}  // namespace gsv
