#pragma once

#include "cohom/solver.hpp"

#include <string>
#include <vector>

namespace cohom {

/// Scalars travel as canonical scalar-grammar strings so every rendering,
/// and the JSON round trip, is exact.
using ScalarList = std::vector<std::string>;

struct ReportUnknown {
  std::string label;
  std::vector<std::string> entries;  // "<V4,V4> = 1"
};

struct ReportGenerator {
  std::string name;
  long a = 0;
  std::vector<long> m_speeds;      // d_i on the planes of m
  std::size_t m_fixed = 0;         // dim ℓ₀
  std::vector<long> slice_speeds;  // d′_j on the slice planes
  std::size_t slice_fixed = 0;     // dim ℓ′₀
};

struct ReportConstraint {
  ScalarList row;
  bool identically_zero = false;
  std::string exponent;  // rational, e.g. "4" or "1/2"
  ScalarList offset;     // coefficients of t^0, t^1, ...
  std::string generator, cell, pair;
};

struct ReportRelation {
  struct Term {
    std::size_t retained = 0;
    std::string coeff;
    long t_power = 0;
  };
  std::size_t dependent = 0;
  std::vector<Term> terms;
};

struct ReportRow {
  ScalarList b;
  long e = 0;
  ScalarList particular;
};

struct ReportDirection {
  ScalarList w;
  long e = 0;
};

struct Report {
  int version = 1;
  std::string source;
  std::string mode;  // "metric" | "tensor"
  std::vector<ReportUnknown> unknowns;
  std::vector<ReportGenerator> generators;
  std::vector<ReportConstraint> constraints;
  std::vector<ReportRelation> relations;
  std::vector<ReportRow> rows;
  std::vector<ReportDirection> directions;
  std::size_t closure_failures = 0;
  std::vector<std::string> diagnostics;
  std::vector<std::string> trace;

  std::size_t r() const { return unknowns.size(); }
  std::vector<std::string> labels() const;
};

ScalarList to_scalars(const Vec& v);
ScalarList to_scalars(const Poly& p);
Vec vec_from_scalars(const ScalarList& s);
Poly poly_from_scalars(const ScalarList& s);

/// "B1 - t^2 in t^4*even" / "B3 == 0".
std::string constraint_text(const ReportConstraint& c, const std::vector<std::string>& labels);
/// Right-hand side of the solved form for unknown j, e.g. "t^2 + t^4*phi1".
std::string solved_text(const Report& r, std::size_t j);

std::string render_text(const Report& r);
std::string render_latex(const Report& r);
std::string render_json(const Report& r);
/// Inverse of render_json; throws Parse on schema errors.
Report parse_report_json(const std::string& json_text);

/// Minimal math-display grammar check: balanced braces and $ delimiters,
/// known macros only. Returns "" when clean, otherwise the first problem.
std::string latex_lint(const std::string& latex);

} // namespace cohom
