#include "cohom/error.hpp"
#include "cohom/scalarparse.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace cohom;

namespace {

AlgNum rt(std::uint64_t n) { return AlgNum::sqrt(n); }

TEST(ScalarParse, Basics) {
  EXPECT_EQ(parse_scalar("sqrt(3)/sqrt(10)"), AlgNum(1, 10) * rt(30));
  EXPECT_EQ(parse_scalar("-1/2"), AlgNum(-1, 2));
  EXPECT_EQ(parse_scalar("2*sqrt(5)"), AlgNum(2) * rt(5));
  EXPECT_EQ(parse_scalar("  0 "), AlgNum());
  EXPECT_EQ(parse_scalar("(1+sqrt(2))*(1+sqrt(2))"), AlgNum(3) + AlgNum(2) * rt(2));
}

TEST(ScalarParse, Precedence) {
  EXPECT_EQ(parse_scalar("1+2*sqrt(2)"), AlgNum(1) + AlgNum(2) * rt(2));
  EXPECT_EQ(parse_scalar("1-2-3"), AlgNum(-4));
  EXPECT_EQ(parse_scalar("12/2/3"), AlgNum(2));
  EXPECT_EQ(parse_scalar("-2*-2"), AlgNum(4));
  EXPECT_EQ(parse_scalar("2*3+4"), AlgNum(10));
}

TEST(ScalarParse, CanonicalFormat) {
  EXPECT_EQ(format_scalar(AlgNum(1, 10) * rt(30)), "1/10*sqrt(30)");
  EXPECT_EQ(format_scalar(AlgNum(-1, 2)), "-1/2");
  EXPECT_EQ(format_scalar(AlgNum()), "0");
  EXPECT_EQ(format_scalar(rt(3) + AlgNum(1) - rt(2)), "1 - sqrt(2) + sqrt(3)");
}

TEST(ScalarParse, RoundTrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 1000; ++i) {
    AlgNum x = test_support::random_algnum(rng, 4);
    ASSERT_EQ(parse_scalar(format_scalar(x)), x) << format_scalar(x);
  }
}

void expect_parse_error(const std::string& text, ErrorKind kind = ErrorKind::Parse) {
  try {
    (void)parse_scalar(text);
    ADD_FAILURE() << "accepted \"" << text << "\"";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << text << ": " << e.what();
    if (kind == ErrorKind::Parse) {
      EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos) << e.what();
    }
  }
}

TEST(ScalarParse, Rejects) {
  expect_parse_error("");
  expect_parse_error("1.5");
  expect_parse_error("sqrt(-1)");
  expect_parse_error("sin(1)");
  expect_parse_error("2^2");
  expect_parse_error("1+");
  expect_parse_error("(1");
  expect_parse_error("sqrt(1/2)");
  expect_parse_error("1/0", ErrorKind::Arithmetic);
}

} // namespace
