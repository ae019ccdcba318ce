#include "cohom/error.hpp"
#include "cohom/pipeline.hpp"
#include "cohom/report.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace cohom;

namespace {

class Reports : public ::testing::TestWithParam<const char*> {};

Report report(const char* name, Mode mode = Mode::Metric) {
  PipelineOptions opt;
  opt.mode = mode;
  opt.trace = true;
  return analyze_file(test_support::fixture(name), opt).report;
}

TEST_P(Reports, JsonRoundTrip) {
  for (Mode mode : {Mode::Metric, Mode::Tensor}) {
    Report r = report(GetParam(), mode);
    std::string json = render_json(r);
    Report back = parse_report_json(json);
    EXPECT_EQ(render_json(back), json);
    EXPECT_EQ(render_text(back), render_text(r));
    EXPECT_EQ(render_latex(back), render_latex(r));
  }
}

TEST_P(Reports, ByteDeterministic) {
  EXPECT_EQ(render_json(report(GetParam())), render_json(report(GetParam())));
  EXPECT_EQ(render_text(report(GetParam())), render_text(report(GetParam())));
}

TEST_P(Reports, LatexIsWellFormed) {
  EXPECT_EQ(latex_lint(render_latex(report(GetParam()))), "");
  EXPECT_EQ(latex_lint(render_latex(report(GetParam(), Mode::Tensor))), "");
}

INSTANTIATE_TEST_SUITE_P(Fixtures, Reports,
                         ::testing::Values("berger.json", "su3_u2.json", "kervaire.json",
                                           "example4_n2.json"));

TEST(Report, LintCatchesMistakes) {
  EXPECT_NE(latex_lint("\\frac{1}{2"), "");
  EXPECT_NE(latex_lint("$x$"), "");
  EXPECT_NE(latex_lint("\\begin{align*} x"), "");
  EXPECT_NE(latex_lint("\\[ x"), "");
  EXPECT_NE(latex_lint("\\foo{x}"), "");
  EXPECT_EQ(latex_lint("\\[ \\frac{1}{2}\\,t^{2} \\]"), "");
}

TEST(Report, ParseRejectsBadInput) {
  EXPECT_THROW((void)parse_report_json("{"), Error);
  EXPECT_THROW((void)parse_report_json("{\"report_version\": 99}"), Error);
}

TEST(Report, ConstraintText) {
  ReportConstraint c;
  c.row = {"1", "0", "-1/2"};
  c.exponent = "4";
  c.offset = {"0", "0", "1"};  // b·u − offset
  EXPECT_EQ(constraint_text(c, {"B1", "B2", "B3"}), "B1 - 1/2*B3 - t^2 in t^4*even");
  c.identically_zero = true;
  c.exponent = "1/2";
  EXPECT_NE(constraint_text(c, {"B1", "B2", "B3"}).find("== 0"), std::string::npos);
}

TEST(Report, BergerSolvedText) {
  Report r = report("berger.json");
  EXPECT_EQ(r.r(), 7u);
  EXPECT_EQ(solved_text(r, 0), "t^2 + t^4*phi3");
  EXPECT_EQ(r.closure_failures, 0u);
}

} // namespace
