#pragma once

#include <string>
#include <vector>

namespace grmod {

struct GoldenCheck {
  std::string claim;
  bool expected = true;
  bool actual = true;
  std::string witness;  // witness or method of the computed verdict, for display

  bool ok() const { return expected == actual; }
};

struct GoldenRow {
  std::string id;       // short descriptive key
  std::string setting;  // ring, module and submodule in words
  std::vector<GoldenCheck> checks;
  std::string note;

  bool ok() const;
};

/// The documented worked examples: each row rebuilds its module and
/// submodule from presets and recomputes every stated conclusion.
std::vector<GoldenRow> golden_examples();

}  // namespace grmod
