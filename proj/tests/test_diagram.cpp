#include "cohom/diagram.hpp"
#include "cohom/document.hpp"
#include "cohom/error.hpp"
#include "support.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

using namespace cohom;
using json = nlohmann::ordered_json;

namespace {

json fixture_json(const std::string& name) {
  return json::parse(read_file(test_support::fixture(name)));
}

const ValidationCheck* find_check(const ValidationReport& r, const std::string& prefix) {
  for (const auto& c : r.checks)
    if (c.name.rfind(prefix, 0) == 0)
      return &c;
  return nullptr;
}

class Fixtures : public ::testing::TestWithParam<const char*> {};

TEST_P(Fixtures, ValidateCleanly) {
  GroupDiagram d = load_document(test_support::fixture(GetParam()));
  ValidationReport r = validate(d);
  EXPECT_TRUE(r.ok()) << r.first_failure();
  for (const auto& c : r.checks)
    EXPECT_TRUE(c.passed) << c.name << ": " << c.witness;
}

TEST_P(Fixtures, DocumentRoundTrip) {
  GroupDiagram d = load_document(test_support::fixture(GetParam()));
  std::string once = dump_document(d);
  GroupDiagram back = parse_document(once);
  EXPECT_EQ(dump_document(back), once);
  EXPECT_EQ(back.g.names, d.g.names);
  EXPECT_EQ(back.k, d.k);
  EXPECT_EQ(back.m, d.m);
}

INSTANTIATE_TEST_SUITE_P(Diagram, Fixtures,
                         ::testing::Values("berger.json", "su3_u2.json", "kervaire.json",
                                           "example4_n2.json"));

TEST(Diagram, NonInvariantComplementIsFatal) {
  json j = fixture_json("berger.json");
  // tilt V1 towards k: breaks k ⊥ m and [k, m] ⊆ m
  j["g_basis"][3]["matrix"][0][1] = "1/5*sqrt(5)+1";
  j["g_basis"][3]["matrix"][1][0] = "-1/5*sqrt(5)-1";
  GroupDiagram d = parse_document(j.dump());
  ValidationReport r = validate(d);
  EXPECT_FALSE(r.ok());
  const ValidationCheck* c = find_check(r, "[k, m]");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_THROW(require_valid(d), Error);
}

TEST(Diagram, BrokenSliceHomomorphism) {
  json j = fixture_json("berger.json");
  j["slice"]["rho"]["K3"] = json::array({json::array({"0", "0", "0"}), json::array({"0", "0", "-1"}),
                                         json::array({"0", "1", "0"})});
  GroupDiagram d = parse_document(j.dump());
  ValidationReport r = validate(d);
  const ValidationCheck* c = find_check(r, "ρ is a homomorphism");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  EXPECT_FALSE(r.ok());
}

TEST(Diagram, PartitionMismatch) {
  json j = fixture_json("berger.json");
  j["m"].erase(0);
  GroupDiagram d = parse_document(j.dump());
  EXPECT_FALSE(validate(d).ok());
}

TEST(Diagram, SchemaErrors) {
  auto kind_of = [](const std::string& text) {
    try {
      (void)parse_document(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  EXPECT_EQ(kind_of("{"), ErrorKind::Parse);
  EXPECT_EQ(kind_of("[]"), ErrorKind::Parse);
  json j = fixture_json("berger.json");
  j.erase("slice");
  EXPECT_EQ(kind_of(j.dump()), ErrorKind::Parse);
  j = fixture_json("berger.json");
  j["p"] = json::array({"K9"});
  EXPECT_EQ(kind_of(j.dump()), ErrorKind::Parse);
}

TEST(Diagram, ActionFieldAndInverse) {
  GroupDiagram d = load_document(test_support::fixture("berger.json"));
  require_valid(d);
  const std::size_t k2 = d.g.index_of("K2");
  Vec x = unit(d.dim(), k2);
  Vec v = d.iota(x);
  EXPECT_TRUE(dot(v, d.slice.e1).is_zero());
  EXPECT_EQ(d.iota_inverse(v), x);
  // the Weyl element reverses the circle H and fixes K2
  Mat ad = d.ad_group(*d.weyl);
  EXPECT_EQ(ad * unit(d.dim(), 0), AlgNum(-1) * unit(d.dim(), 0));
  EXPECT_EQ(ad * x, x);
}

} // namespace
