#pragma once

#include <stdexcept>
#include <string>

#include "graded/lattice.hpp"

namespace graded {

/// Raised by GradedHom::make; `law` is one of "ring", "shape", "modulus",
/// "linearity", "degree", and `index` is the offending source basis index.
class HomError : public std::invalid_argument {
 public:
  HomError(std::string law, std::size_t index, const std::string& detail);
  const std::string& law() const { return law_; }
  std::size_t index() const { return index_; }

 private:
  std::string law_;
  std::size_t index_;
};

/// Degree-preserving R-linear map between two graded modules over the same
/// ring. Stored as one image row per source basis vector (the transpose of
/// the usual column convention), so lattice maps are plain row products.
class GradedHom {
 public:
  static GradedHom make(ModulePtr source, ModulePtr target, Mat images);
  static GradedHom identity(ModulePtr m);

  const ModulePtr& source() const { return source_; }
  const ModulePtr& target() const { return target_; }
  const Mat& images() const { return images_; }

  Element operator()(const Element& x) const;

 private:
  GradedHom(ModulePtr s, ModulePtr t, Mat images)
      : source_(std::move(s)), target_(std::move(t)), images_(std::move(images)) {}
  ModulePtr source_, target_;
  Mat images_;
};

SubLattice kernel(const GradedHom& f);
SubLattice image(const GradedHom& f);
/// f^{-1}(K) for K a submodule of the target.
SubLattice preimage(const GradedHom& f, const SubLattice& k);
/// f(L) for L a submodule of the source.
SubLattice pushforward(const GradedHom& f, const SubLattice& l);

bool is_injective(const GradedHom& f);
bool is_surjective(const GradedHom& f);

/// The natural map M -> M/K of a quotient presentation.
GradedHom projection(const QuotientPresentation& q);

/// A graded submodule L presented as a graded module in its own right,
/// together with the inclusion L -> M.
struct SubmoduleModule {
  ModulePtr module;
  GradedHom inclusion;
  /// Coordinates in `module` of an element of the ambient lying in L.
  Element coordinates(const Element& x) const;

  std::vector<AbelianPresentation> blocks;  // one per degree of the ambient
  std::vector<Degree> degrees;
};

/// Requires L graded.
SubmoduleModule as_module(const SubLattice& l);

}  // namespace graded
