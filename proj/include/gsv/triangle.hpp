#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gsv/comonad.hpp"
#include "gsv/emcat.hpp"

namespace gsv {

/// Assigns to each object a plain set map into L; constant families are the
/// ones that are natural against every probe morphism.
using PlainFamily = std::function<std::vector<int>(const GSet&)>;

PlainFamily constant_family(const GSet& l, int l0);

/// phi_X(g, x) = (g f(x), gx) as a table G ~x X -> L x X.
std::vector<int> phi_component(const GSet& l, const GSet& x, const std::vector<int>& f);

/// Comultiplication and counit compatibility of the family plus naturality
/// over the probe morphisms. The single-object diagrams tie f at X to f at
/// G ~x X, so the whole family is checked, not one component.
LawReport check_comonad_morphism(const GSet& l, const PlainFamily& f_at, const ProbeUniverse& u);

struct PhiClassification {
  std::vector<int> f;  // extracted from candidate(1, x)
  Verdict forced;      // candidate == (g f(x), gx) everywhere
};

/// Recovers f from the identity coordinate and confirms the candidate has the
/// forced shape (second coordinate gx comes from counit compatibility).
PhiClassification classify_phi(const GSet& l, const GSet& x, const std::vector<int>& cand);

/// Comparison object K(Y) for a plain finite set: carrier G ~x Y with
/// beta1(g, y) = g f(y). `y_points` is the number of points of Y.
SCoalgebra comparison_k(const GSet& l, const GroupPtr& g, int y_points,
                        const std::vector<int>& f_y);

/// Equalizer D(X, beta) = { x : f(x) = beta1(x) }, as a sorted point list.
std::vector<int> equalizer_d(const SCoalgebra& c, const std::vector<int>& f_x);

/// Pi(h)(y) = h(1, y) for a coalgebra morphism h : K(Y) -> c; throws
/// NotCoalgebraMorphism when h is not one. Values are carrier points of c,
/// each verified to satisfy the equalizer equation for f_x.
std::vector<int> pi_map(const SCoalgebra& ky, const SCoalgebra& c, int y_points,
                        const std::vector<int>& f_x, const std::vector<int>& h);

/// Theta(q)(g, y) = g q(y) for a plain map q : Y -> D(c) (values are carrier
/// points of c inside the equalizer).
std::vector<int> theta_map(const SCoalgebra& c, int y_points, const std::vector<int>& q);

}  // namespace gsv
