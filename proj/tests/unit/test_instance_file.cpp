#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "graded/lattice.hpp"
#include "graded/presets.hpp"
#include "grmod/instance_file.hpp"

using namespace graded;
using grmod::InstanceFileError;
using grmod::parse_instance_text;

namespace {

const char* kMinimal = R"(
[group]
order = 2
[ring]
preset = integers
[module]
preset = coordinatewise-scalar
axes = (4,0) (4,1)
)";

std::size_t error_line(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const InstanceFileError& e) {
    return e.line();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return 0;
}

}  // namespace

TEST(InstanceFile, MinimalInstance) {
  auto f = parse_instance_text(kMinimal);
  EXPECT_EQ(f.instance.module->cardinality(), 16);
  EXPECT_TRUE(f.instance.submodules.empty());
  EXPECT_TRUE(f.axioms_checked);
}

TEST(InstanceFile, SubmoduleInterpretations) {
  auto f = parse_instance_text(std::string(kMinimal) + R"(
[submodule A]
interpretation = m-times-M
generator = 2
[submodule B]
generator = 2 0
generator = 0 1   # trailing comment
)");
  ASSERT_EQ(f.instance.submodules.size(), 2u);
  const ModulePtr& m = f.instance.module;
  EXPECT_EQ(f.instance.submodules[0].name, "A");
  EXPECT_EQ(f.instance.submodules[0].lattice, multiple_of_module(Element({2}), m));
  EXPECT_EQ(f.instance.submodules[1].lattice, span({Element({2, 0}), Element({0, 1})}, m));
}

TEST(InstanceFile, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("[group]\norder = 2\nbogus = 1\n"), 3u);
  EXPECT_EQ(error_line("[grop]\n"), 1u);
  EXPECT_EQ(error_line("order = 2\n"), 1u);
  EXPECT_EQ(error_line("[group]\norder = two\n"), 2u);
  EXPECT_EQ(error_line(std::string(kMinimal) + "[submodule A]\ngenerator = 1\n"), 10u);
  EXPECT_EQ(error_line(std::string(kMinimal) + "[submodule A]\ninterpretation = cyclic\ngenerator = 1 0\n"), 10u);
  EXPECT_EQ(error_line(std::string(kMinimal) + "[submodule A]\n[submodule A]\n"), 10u);
}

TEST(InstanceFile, MissingSections) {
  EXPECT_THROW(parse_instance_text("[group]\norder = 2\n"), InstanceFileError);
  EXPECT_THROW(parse_instance_text("[group]\norder = 2\n[ring]\npreset = integers\n"), InstanceFileError);
}

TEST(InstanceFile, UnknownPresetsAndKeys) {
  EXPECT_THROW(parse_instance_text("[group]\norder = 2\n[ring]\npreset = reals\n[module]\npreset = regular\n"),
               InstanceFileError);
  EXPECT_THROW(parse_instance_text("[group]\norder = 2\n[ring]\npreset = integers\ncolour = red\n[module]\n"
                                   "preset = regular\n"),
               InstanceFileError);
  EXPECT_THROW(parse_instance_text("[group]\norder = 3\n[ring]\npreset = gaussian\nmodulus = 0\n[module]\n"
                                   "preset = regular\n"),
               InstanceFileError);
}

TEST(InstanceFile, AxiomFailuresAreReported) {
  const char* bad = R"(
[group]
order = 2
[ring]
preset = integers
[module]
axes = (5,0)
act 0 0 = 2
)";
  EXPECT_THROW(parse_instance_text(bad), AxiomError);
  auto f = parse_instance_text(std::string(bad) + "[instance]\nverify-axioms = false\n");
  EXPECT_FALSE(f.axioms_checked);
  EXPECT_FALSE(verify_axioms(*f.instance.module).empty());
}

TEST(InstanceFile, ExplicitTablesMatchPresets) {
  auto f = fixtures::load("z6x3_ring.ini");
  RingPtr preset = truncated_polynomial_ring(6, 3, GradeGroup::cyclic(3));
  EXPECT_TRUE(*f.instance.module->ring() == *preset);
  EXPECT_TRUE(*f.instance.module == *regular_module(preset));
}

TEST(InstanceFile, EveryShippedFixtureLoads) {
  auto files = fixtures::files();
  EXPECT_GE(files.size(), 13u);
  for (const auto& f : files) {
    EXPECT_TRUE(f.axioms_checked) << f.origin;
    EXPECT_FALSE(f.name.empty()) << f.origin;
    EXPECT_FALSE(f.instance.submodules.empty()) << f.origin;
    for (const auto& s : f.instance.submodules) EXPECT_TRUE(is_graded(s.lattice).graded || f.name == "gaussian_ring");
  }
  auto broken = fixtures::load("broken_fixture.ini");
  EXPECT_FALSE(broken.axioms_checked);
  EXPECT_THROW(grmod::load_instance(fixtures::path("missing.ini")), InstanceFileError);
}
