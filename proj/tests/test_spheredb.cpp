#include "cohom/error.hpp"
#include "cohom/spheredb.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace cohom;

namespace {

// dim K and dim of the sphere K/H
std::pair<std::size_t, std::size_t> expected_dims(Family f, std::size_t n) {
  const std::size_t m = n + 1;
  switch (f) {
  case Family::SO:
  case Family::Spin:
    return {m * n / 2, n};
  case Family::U:
  case Family::U_k:
    return {m * m, 2 * n + 1};
  case Family::SU:
    return {m * m - 1, 2 * n + 1};
  case Family::Sp:
    return {m * (2 * m + 1), 4 * n + 3};
  case Family::SpSp1:
  case Family::SpSp1_ineff:
    return {m * (2 * m + 1) + 3, 4 * n + 3};
  case Family::SpU1:
  case Family::SpU1_k:
    return {m * (2 * m + 1) + 1, 4 * n + 3};
  case Family::G2:
    return {14, 6};
  case Family::Spin7:
    return {21, 7};
  case Family::Spin9:
    return {36, 15};
  }
  return {0, 0};
}

TEST(SphereDb, FamiliesAreListed) {
  EXPECT_EQ(families().size(), 13u);
  for (const auto& fi : families())
    EXPECT_EQ(family_from_name(fi.name), fi.family);
  EXPECT_THROW((void)family_from_name("SO(3)"), Error);
}

TEST(SphereDb, DimensionsAndValidity) {
  for (const auto& fi : families())
    for (int n = 1; n <= (fi.uses_n ? 2 : 1); ++n)
      for (int k = 1; k <= (fi.uses_k ? 2 : 1); ++k) {
        SphereAction sa = get_action(fi.family, n, k);
        auto [dk, sphere] = expected_dims(fi.family, static_cast<std::size_t>(n));
        EXPECT_EQ(sa.diagram.k.size(), dk) << fi.name << " n=" << n;
        EXPECT_EQ(sa.diagram.p.size(), sphere) << fi.name << " n=" << n;
        EXPECT_EQ(sa.diagram.slice.dim, sphere + 1) << fi.name << " n=" << n;
        EXPECT_TRUE(sa.diagram.m.empty());
        GroupDiagram d = sa.diagram;
        ValidationReport r = validate(d);
        for (const auto& c : r.checks)
          EXPECT_TRUE(c.passed) << fi.name << " n=" << n << " k=" << k << ": " << c.name << ": "
                                << c.witness;
      }
}

TEST(SphereDb, ParameterBounds) {
  EXPECT_THROW((void)get_action(Family::SO, 0), Error);
  EXPECT_THROW((void)get_action(Family::SO, kMaxSphereN + 1), Error);
  EXPECT_THROW((void)get_action(Family::U_k, 1, 0), Error);
}

TEST(SphereDb, UnitGenerators) {
  for (Family f : {Family::SO, Family::Spin}) {
    SphereAction sa = get_action(f, 3);
    const auto& d = sa.diagram;
    const std::size_t x = d.p_generators.at(0);
    EXPECT_EQ(d.q(unit(d.dim(), x), unit(d.dim(), x)), AlgNum(1)) << family_info(f).name;
  }
}

bool agrees(const SphereAction& sa) {
  for (std::size_t i = 0; i < sa.expected.size(); ++i)
    if (sa.expected[i].a != sa.computed[i].a || sa.expected[i].dprime != sa.computed[i].dprime)
      return false;
  return true;
}

TEST(SphereDb, StatedSplittingsReproduced) {
  for (Family f : {Family::SO, Family::Spin, Family::U, Family::U_k, Family::SU, Family::Sp})
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 2; ++k)
        EXPECT_TRUE(agrees(get_action(f, n, k))) << family_info(f).name << " n=" << n;
  EXPECT_TRUE(agrees(get_action(Family::G2)));
  EXPECT_TRUE(agrees(get_action(Family::Spin9)));
}

TEST(SphereDb, ConcreteValues) {
  auto first = [](Family f, int n, int k, std::size_t g = 0) {
    return get_action(f, n, k).computed.at(g);
  };
  EXPECT_EQ(first(Family::SO, 3, 1).a, 1);
  EXPECT_EQ(first(Family::Spin, 3, 1).a, 2);
  auto uk = first(Family::U_k, 2, 3, 1);
  EXPECT_EQ(uk.a, 4);
  EXPECT_EQ(uk.dprime, (std::vector<long>{3, 3}));
  EXPECT_EQ(first(Family::SU, 3, 1, 1).a, 3);
  EXPECT_EQ(first(Family::SpSp1, 2, 1, 1).a, 2);
  auto g2 = first(Family::G2, 1, 1);
  EXPECT_EQ(g2.a, 2);
  EXPECT_EQ(g2.dprime, (std::vector<long>{1, 1}));
  EXPECT_EQ(g2.fixed_dim, 1u);
  auto spin9 = get_action(Family::Spin9).computed;
  EXPECT_EQ(spin9.at(0).a, 2);
  EXPECT_EQ(spin9.at(1).a, 1);
  EXPECT_EQ(spin9.at(1).dprime, std::vector<long>(7, 1));
}

// Quaternionic families whose F1 circle also turns the quaternionic lines of
// the slice, and Spin(7)/G2 whose generator acts with speed 3 on e1.
TEST(SphereDb, KnownDeviationsFromStatedValues) {
  auto spsp1 = get_action(Family::SpSp1, 2).computed.at(1);
  EXPECT_EQ(spsp1.a, 2);
  EXPECT_EQ(spsp1.dprime, std::vector<long>(4, 1));
  auto spu1 = get_action(Family::SpU1_k, 1, 3).computed.at(1);
  EXPECT_EQ(spu1.a, 4);
  EXPECT_EQ(spu1.dprime, (std::vector<long>{2, 3, 3}));
  auto spin7 = get_action(Family::Spin7);
  EXPECT_EQ(spin7.expected.at(0).a, 1);
  EXPECT_EQ(spin7.computed.at(0).a, 3);
  EXPECT_EQ(spin7.computed.at(0).dprime, (std::vector<long>{1, 1, 1}));
}

} // namespace
