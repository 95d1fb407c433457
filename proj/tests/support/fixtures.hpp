#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "graded/families.hpp"
#include "grmod/instance_file.hpp"

namespace fixtures {

inline std::filesystem::path dir() { return GRADED_FIXTURE_DIR; }

inline std::string path(const std::string& name) { return (dir() / name).string(); }

inline grmod::InstanceFile load(const std::string& name) { return grmod::load_instance(path(name)); }

/// Every shipped instance file except the deliberately broken one, sorted.
inline std::vector<grmod::InstanceFile> files() {
  std::vector<std::filesystem::path> paths;
  for (const auto& e : std::filesystem::directory_iterator(dir()))
    if (e.path().extension() == ".ini" && e.path().stem() != "broken_fixture") paths.push_back(e.path());
  std::sort(paths.begin(), paths.end());
  std::vector<grmod::InstanceFile> out;
  for (const auto& p : paths) out.push_back(grmod::load_instance(p.string()));
  return out;
}

/// Instance files followed by every default family grid.
inline std::vector<graded::Instance> all_instances() {
  std::vector<graded::Instance> out;
  for (auto& f : files()) out.push_back(f.instance);
  for (const auto& fam : graded::families())
    for (auto& inst : graded::family_instances(fam.name)) out.push_back(std::move(inst));
  return out;
}

}  // namespace fixtures
