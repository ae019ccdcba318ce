#pragma once

#include "cohom/constraints.hpp"

#include <string>
#include <vector>

namespace cohom {

/// A free direction of the solution module: φ(t²)·t^e·w.
struct Direction {
  Vec w;
  long e = 0;
};

/// One canonical condition: b·u − particular ∈ t^e·(even functions).
struct CanonicalRow {
  Vec b;
  long e = 0;
  Poly particular;
};

/**
 * Rank-r normal form. rows[k] is dual to directions[k] (b_k·w_m = δ_km), and
 * the solved metric is u(t) = Σ_m (rows[m].particular(t) + t^{e_m} φ_m(t²)) w_m.
 */
struct CanonicalSystem {
  std::size_t r = 0;
  std::vector<CanonicalRow> rows;
  std::vector<Direction> directions;

  /// Particular solution u_p(t) = Σ_m rows[m].particular(t)·w_m, per unknown.
  std::vector<Poly> particular_solution() const;
  /// Largest order that matters for membership checks.
  long max_order() const;
};

/// ψ_dep = Σ coeff · t^{power} · ψ_retained (indices refer to the input constraint list).
struct PhiRelation {
  struct Term {
    std::size_t retained;
    AlgNum coeff;
    long t_power;
  };
  std::size_t dependent;
  std::vector<Term> terms;
};

struct SolveResult {
  CanonicalSystem system;
  std::vector<PhiRelation> relations;
  std::vector<std::string> diagnostics;
};

/// Forbidden-order subspace W_n = span{ b_k : n < p_k or n − p_k odd }.
std::vector<Vec> forbidden_rows(const std::vector<Constraint>& cs, long n);

/// dim ann(W_n) for n = 0..max_order, the module's Taylor flag signature.
std::vector<std::size_t> annihilator_dims(const std::vector<Constraint>& cs, std::size_t r,
                                          long max_order);

SolveResult canonicalize(const std::vector<Constraint>& cs, std::size_t r);

/// The canonical rows re-expressed as constraints (for idempotence checks).
std::vector<Constraint> as_constraints(const CanonicalSystem& sys);

struct ClosureFailure {
  std::size_t constraint;
  std::string reason;
};

/// Generic re-substitution: every φ coefficient up to the relevant order.
std::vector<ClosureFailure> verify_closure(const CanonicalSystem& sys,
                                           const std::vector<Constraint>& cs);

/// Membership of an explicit polynomial in t^p·even (exactly, all coefficients).
bool in_class(const Poly& f, long p);

/// u(t) for explicit φ_m(s) polynomials (s = t²).
std::vector<Poly> evaluate_solution(const CanonicalSystem& sys, const std::vector<Poly>& phi);

/// Constraint indices violated by an explicit u(t).
std::vector<std::size_t> check_explicit(const std::vector<Poly>& u, const std::vector<Constraint>& cs);

/// True when both systems describe the same solution module.
bool same_module(const CanonicalSystem& a, const CanonicalSystem& b);

} // namespace cohom
