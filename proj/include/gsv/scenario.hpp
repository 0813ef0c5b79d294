#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsv/coeff.hpp"
#include "gsv/fingroup.hpp"
#include "gsv/gset.hpp"

namespace gsv {

/// A declarative run description. Sections: [group], [gsets], [coefficients]
/// (optional), [run]. See the README for the grammar.
struct Scenario {
  GroupPtr group;
  std::string group_desc;
  std::vector<std::pair<std::string, GSet>> gsets;  // in declaration order
  std::optional<CoefficientConfig> coefficients;
  std::string l_name, n_name;
  std::vector<std::string> suites;  // expanded, dependency order
  int cap = 3;

  const GSet* find_gset(const std::string& name) const;
};

/// Parses and fully validates a scenario; throws ParseError (with the line
/// number), UnresolvedReference, EquivarianceDeclarationFailed, or the group
/// and G-set construction errors.
Scenario parse_scenario(const std::string& text);

Scenario load_scenario_file(const std::string& path);

const std::vector<std::string>& all_suites();

}  // namespace gsv
