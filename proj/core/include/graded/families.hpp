#pragma once

#include <string>
#include <vector>

#include "graded/lattice.hpp"

namespace graded {

struct NamedSubmodule {
  std::string name;
  SubLattice lattice;
};

/// A module together with the submodules a search or law run looks at.
struct Instance {
  std::string family;
  std::string id;
  ModulePtr module;
  /// Candidate submodules in grid order (lexicographic in the parameters).
  std::vector<NamedSubmodule> submodules;
};

/// Parameter overrides for the built-in grids; zero keeps the default.
struct GridOptions {
  Int n_max = 0;      // upper end of the modulus range
  Int entry_max = 0;  // bound on generator entries for lattice families
};

struct FamilyInfo {
  std::string name;
  std::string description;
};

/// The built-in families, in the order the default suites run them.
const std::vector<FamilyInfo>& families();

/// Instances of one family in lexicographic parameter order. Unknown names
/// throw std::invalid_argument.
std::vector<Instance> family_instances(const std::string& name, const GridOptions& opts = {});

}  // namespace graded
