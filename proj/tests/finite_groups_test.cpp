#include <gtest/gtest.h>

#include <map>

#include "wildrep/finite_groups.hpp"
#include "wildrep/sqrt_neg2.hpp"

using namespace wildrep;

namespace {

const SqrtNeg2Number r2 = SqrtNeg2Number::root();

struct Expected {
  std::vector<std::string> labels;
  std::vector<std::size_t> sizes;
  std::vector<SqrtNeg2Number> values;
};

const std::map<std::string, Expected>& expected_tables() {
  static const std::map<std::string, Expected> t = {
      {"Q8", {{"1", "2", "4A", "4B", "4C"}, {1, 1, 2, 2, 2}, {2, -2, 0, 0, 0}}},
      {"SL2F3", {{"1", "2", "3A", "3B", "4", "6A", "6B"}, {1, 1, 4, 4, 6, 4, 4}, {2, -2, -1, -1, 0, 1, 1}}},
      {"SD16", {{"1", "2A", "2B", "4A", "4B", "8A", "8B"}, {1, 1, 4, 2, 4, 2, 2}, {2, -2, 0, 0, 0, r2, -r2}}},
      {"GL2F3",
       {{"1", "2A", "2B", "3", "4", "6", "8A", "8B"}, {1, 1, 12, 8, 6, 8, 6, 6}, {2, -2, 0, -1, 0, 1, r2, -r2}}},
  };
  return t;
}

}  // namespace

TEST(SqrtNeg2, Arithmetic) {
  EXPECT_EQ(r2 * r2, SqrtNeg2Number(-2));
  EXPECT_EQ(r2.pow(4), SqrtNeg2Number(4));
  EXPECT_EQ(r2.pow(3), SqrtNeg2Number(0, -2));
  EXPECT_EQ(r2.norm(), mpq_class(2));
  EXPECT_EQ(r2.conj(), -r2);
  EXPECT_EQ(r2.to_string(), "sqrt(-2)");
  EXPECT_EQ(SqrtNeg2Number(-2).to_string(), "-2");
  EXPECT_TRUE(congruent(SqrtNeg2Number(4), SqrtNeg2Number(1), 3));
  EXPECT_FALSE(congruent(r2, -r2, 3));
}

TEST(MatF3, Generators) {
  EXPECT_EQ(mats::phi().order(), 2);
  EXPECT_EQ(mats::sigma().order(), 4);
  EXPECT_EQ(mats::a().order(), 8);
  EXPECT_EQ(mats::tau().order(), 3);
  EXPECT_EQ(mats::a().trace(), 1);
  EXPECT_EQ(mats::sigma().det(), 1);
  EXPECT_EQ(mats::phi().det(), 2);
  EXPECT_TRUE(verify_presentation_sd16(mats::a(), mats::phi()));
}

TEST(Groups, OrdersAndNames) {
  const std::map<std::string, std::size_t> order = {{"Q8", 8}, {"SL2F3", 24}, {"SD16", 16}, {"GL2F3", 48}};
  for (const auto& [name, n] : order) {
    const MatrixGroupF3 g = standard_group(name);
    EXPECT_EQ(g.size(), n) << name;
    EXPECT_EQ(g.name(), name);
    EXPECT_FALSE(g.is_abelian());
  }
  EXPECT_EQ(standard_group("Q8").involutions(), 1);
  EXPECT_EQ(standard_group("SD16").exponent(), 8);
  EXPECT_EQ(standard_group("SL2F3").exponent(), 12);
}

TEST(Groups, ClassesMatchFrozenLabelsAndSizes) {
  for (const auto& [name, exp] : expected_tables()) {
    const auto classes = standard_group(name).conjugacy_classes();
    ASSERT_EQ(classes.size(), exp.labels.size()) << name;
    std::size_t total = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      EXPECT_EQ(classes[i].label, exp.labels[i]) << name;
      EXPECT_EQ(classes[i].size(), exp.sizes[i]) << name << " " << exp.labels[i];
      total += classes[i].size();
    }
    EXPECT_EQ(total, standard_group(name).size());
  }
}

TEST(Groups, EightAContainsPhiSigma) {
  for (const char* name : {"SD16", "GL2F3"}) {
    const auto classes = standard_group(name).conjugacy_classes();
    for (const auto& c : classes) {
      if (c.label == "8A") {
        EXPECT_TRUE(c.contains(mats::a())) << name;
      }
    }
  }
}

TEST(CharacterTables, FrozenValues) {
  for (const auto& [name, exp] : expected_tables()) {
    const CharacterTable t = psi_table(name);
    ASSERT_EQ(t.classes.size(), exp.values.size());
    for (std::size_t i = 0; i < exp.values.size(); ++i) EXPECT_EQ(t.at(exp.labels[i]).value, exp.values[i]) << name;
    EXPECT_TRUE(check_orthogonality(t)) << name;
    EXPECT_TRUE(is_faithful(t)) << name;
    EXPECT_EQ(t.degree(), SqrtNeg2Number(2));
  }
}

TEST(CharacterTables, DualSwapsOrderEight) {
  for (const char* name : {"SD16", "GL2F3"}) {
    const CharacterTable p = psi_table(name, Orientation::Standard);
    const CharacterTable d = psi_table(name, Orientation::Dual);
    EXPECT_EQ(d.at("8A").value, p.at("8B").value);
    EXPECT_EQ(d.at("8B").value, p.at("8A").value);
    EXPECT_EQ(d.at("2B").value, p.at("2B").value);
    EXPECT_FALSE(same_values(p, d));
  }
}

TEST(CharacterTables, RestrictionToInertia) {
  EXPECT_TRUE(same_values(restrict_to_inertia(psi_table("SD16")), psi_table("Q8")));
  EXPECT_TRUE(same_values(restrict_to_inertia(psi_table("GL2F3")), psi_table("SL2F3")));
}

TEST(CharacterTables, CorruptedTableFailsOrthogonality) {
  CharacterTable t = psi_table("SD16");
  t.at("2A").value = SqrtNeg2Number(2);
  EXPECT_FALSE(check_orthogonality(t));
}
