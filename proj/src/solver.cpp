#include "cohom/solver.hpp"
#include "cohom/error.hpp"

#include <algorithm>
#include <numeric>

namespace cohom {
namespace {

bool forbidden(long n, long p) { return n < p || ((n - p) % 2 != 0); }

Poly dot_poly(const Vec& b, const std::vector<Poly>& u) {
  Poly out;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!b[i].is_zero())
      out += b[i] * u[i];
  return out;
}

long max_exponent(const std::vector<Constraint>& cs) {
  long p = 0;
  for (const auto& c : cs)
    if (c.kind == ConstraintKind::Membership)
      p = std::max(p, c.order());
  return p;
}

// Remove the terms of f that already lie in t^e·even.
Poly reduce_mod_class(const Poly& f, long e) {
  Poly out;
  for (std::size_t n = 0; n < f.coeffs().size(); ++n)
    if (forbidden(static_cast<long>(n), e))
      out += Poly::monomial(f.coeff(n), n);
  return out;
}

std::size_t span_rank(const std::vector<Vec>& vs, std::size_t width) {
  return rref(vs, width).rank();
}

} // namespace

bool in_class(const Poly& f, long p) {
  for (std::size_t n = 0; n < f.coeffs().size(); ++n)
    if (!f.coeff(n).is_zero() && forbidden(static_cast<long>(n), p))
      return false;
  return true;
}

std::vector<Poly> CanonicalSystem::particular_solution() const {
  std::vector<Poly> u(r);
  for (std::size_t m = 0; m < rows.size(); ++m) {
    if (rows[m].particular.is_zero())
      continue;
    for (std::size_t i = 0; i < r; ++i)
      if (!directions[m].w[i].is_zero())
        u[i] += directions[m].w[i] * rows[m].particular;
  }
  return u;
}

long CanonicalSystem::max_order() const {
  long p = 0;
  for (const auto& row : rows)
    p = std::max({p, row.e, row.particular.degree()});
  return p;
}

std::vector<Vec> forbidden_rows(const std::vector<Constraint>& cs, long n) {
  std::vector<Vec> out;
  for (const auto& c : cs)
    if (c.kind == ConstraintKind::Membership && forbidden(n, c.order()))
      out.push_back(c.row);
  return out;
}

std::vector<std::size_t> annihilator_dims(const std::vector<Constraint>& cs, std::size_t r,
                                          long max_order) {
  std::vector<std::size_t> dims;
  for (long n = 0; n <= max_order; ++n)
    dims.push_back(kernel(forbidden_rows(cs, n), r).size());
  return dims;
}

SolveResult canonicalize(const std::vector<Constraint>& cs, std::size_t r) {
  SolveResult res;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (cs[k].row.size() != r)
      throw Error(ErrorKind::Internal, "constraint row length differs from r");
    if (cs[k].kind == ConstraintKind::IdenticallyZero)
      throw Error(ErrorKind::IdenticallyZero,
                  "condition " + std::to_string(k + 1) + " (" + cs[k].prov.cell + ", " +
                      cs[k].prov.pair + ") demands an identically vanishing combination");
  }

  // parity consistency: span(even rows) ∩ span(odd rows) = 0, and together they span ℝ^r
  std::vector<Vec> even, odd, all;
  for (const auto& c : cs) {
    (c.order() % 2 == 0 ? even : odd).push_back(c.row);
    all.push_back(c.row);
  }
  std::size_t re = span_rank(even, r), ro = span_rank(odd, r), ra = span_rank(all, r);
  if (re + ro != ra)
    throw Error(ErrorKind::Rank, "parity conflict: a functional is forced to be both even and odd "
                                 "(even rank " + std::to_string(re) + ", odd rank " +
                                     std::to_string(ro) + ", joint rank " + std::to_string(ra) + ")");
  if (ra != r)
    throw Error(ErrorKind::Rank, "solution module rank ≠ r: conditions constrain only " +
                                     std::to_string(ra) + " of " + std::to_string(r) +
                                     " functionals");

  // walk the flag per parity
  const long pmax = max_exponent(cs);
  std::vector<Direction> dirs;
  for (long parity = 0; parity < 2; ++parity) {
    SpanBasis chosen(r);
    for (long n = parity; n <= pmax + 1; n += 2)
      for (const auto& v : kernel(forbidden_rows(cs, n), r))
        if (chosen.add(v))
          dirs.push_back({v, n});
  }
  if (dirs.size() != r)
    throw Error(ErrorKind::Rank, "solution module rank ≠ r: found " + std::to_string(dirs.size()) +
                                     " free directions for r = " + std::to_string(r));
  std::stable_sort(dirs.begin(), dirs.end(),
                   [](const Direction& a, const Direction& b) { return a.e < b.e; });

  std::vector<Vec> cols;
  for (const auto& d : dirs)
    cols.push_back(d.w);
  Mat winv;
  try {
    winv = inverse(Mat::from_columns(cols, r));
  } catch (const Error&) {
    throw Error(ErrorKind::Rank, "free directions are linearly dependent");
  }

  CanonicalSystem& sys = res.system;
  sys.r = r;
  for (std::size_t k = 0; k < r; ++k) {
    Vec b = winv.row(k);
    AlgNum lead = b[leading_index(b)];
    sys.rows.push_back({lead.inv() * b, dirs[k].e, Poly()});
    sys.directions.push_back({lead * dirs[k].w, dirs[k].e});
  }

  // particular solution from the offsets, order by order
  long maxdeg = -1;
  for (const auto& c : cs)
    maxdeg = std::max(maxdeg, c.offset.degree());
  std::vector<Poly> up(r);
  for (long n = 0; n <= maxdeg; ++n) {
    std::vector<Vec> rows;
    Vec rhs;
    for (const auto& c : cs)
      if (forbidden(n, c.order())) {
        rows.push_back(c.row);
        rhs.push_back(c.offset.coeff(n));
      }
    if (rows.empty() || is_zero(rhs))
      continue;
    auto x = solve(Mat::from_rows(rows), rhs);
    if (!x)
      throw Error(ErrorKind::Rank, "inhomogeneous conditions are inconsistent at order " +
                                       std::to_string(n));
    for (std::size_t i = 0; i < r; ++i)
      up[i] += Poly::monomial((*x)[i], n);
  }
  for (auto& row : sys.rows)
    row.particular = reduce_mod_class(dot_poly(row.b, up), row.e);

  // relations among the input even functions
  std::vector<std::size_t> order(cs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    long pa = cs[a].order(), pb = cs[b].order();
    if (pa != pb)
      return pa > pb;
    return (pa % 2 == 0) && (pb % 2 != 0);
  });
  SpanBasis retained_span[2] = {SpanBasis(r), SpanBasis(r)};
  std::vector<std::size_t> retained[2];
  for (auto k : order) {
    int par = static_cast<int>(cs[k].order() % 2);
    auto coords = retained_span[par].coordinates(cs[k].row);
    if (!coords) {
      retained_span[par].add(cs[k].row);
      retained[par].push_back(k);
      continue;
    }
    PhiRelation rel{k, {}};
    for (std::size_t j = 0; j < coords->size(); ++j)
      if (!(*coords)[j].is_zero()) {
        std::size_t rk = retained[par][j];
        rel.terms.push_back({rk, (*coords)[j], cs[rk].order() - cs[k].order()});
      }
    res.relations.push_back(std::move(rel));
  }

  res.diagnostics.push_back("max condition exponent " + std::to_string(pmax) + "; " +
                            std::to_string(cs.size()) + " conditions, " +
                            std::to_string(res.relations.size()) + " dependent");
  return res;
}

std::vector<Constraint> as_constraints(const CanonicalSystem& sys) {
  std::vector<Constraint> out;
  for (std::size_t k = 0; k < sys.rows.size(); ++k) {
    Constraint c;
    c.row = sys.rows[k].b;
    c.exponent = sys.rows[k].e;
    c.offset = sys.rows[k].particular;
    c.prov = {"", "canonical", "row " + std::to_string(k + 1)};
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ClosureFailure> verify_closure(const CanonicalSystem& sys,
                                           const std::vector<Constraint>& cs) {
  std::vector<ClosureFailure> fails;
  long horizon = std::max(sys.max_order(), max_exponent(cs));
  for (const auto& c : cs)
    horizon = std::max(horizon, c.offset.degree());
  horizon += 2;
  const std::vector<Poly> up = sys.particular_solution();
  for (std::size_t k = 0; k < cs.size(); ++k) {
    const Constraint& c = cs[k];
    if (c.kind == ConstraintKind::IdenticallyZero) {
      fails.push_back({k, "identically-zero demand cannot be verified by membership"});
      continue;
    }
    const long p = c.order();
    Poly base = dot_poly(c.row, up) - c.offset;
    if (!in_class(base, p)) {
      fails.push_back({k, "particular part " + base.str() + " not in t^" + std::to_string(p) +
                              "*even"});
      continue;
    }
    // placeholder φ_m(s) = Σ_j c_{m,j} s^j: each coefficient contributes independently
    for (std::size_t m = 0; m < sys.directions.size(); ++m) {
      AlgNum coef = dot(c.row, sys.directions[m].w);
      if (coef.is_zero())
        continue;
      bool bad = false;
      for (long j = 0; sys.directions[m].e + 2 * j <= horizon && !bad; ++j) {
        Poly term = Poly::monomial(coef, static_cast<std::size_t>(sys.directions[m].e + 2 * j));
        if (!in_class(term, p)) {
          fails.push_back({k, "phi" + std::to_string(m + 1) + " enters at order " +
                                  std::to_string(sys.directions[m].e + 2 * j) +
                                  ", not in t^" + std::to_string(p) + "*even"});
          bad = true;
        }
      }
      if (bad)
        break;
    }
  }
  return fails;
}

std::vector<Poly> evaluate_solution(const CanonicalSystem& sys, const std::vector<Poly>& phi) {
  if (phi.size() != sys.r)
    throw Error(ErrorKind::Usage, "expected " + std::to_string(sys.r) + " phi polynomials, got " +
                                      std::to_string(phi.size()));
  std::vector<Poly> u = sys.particular_solution();
  for (std::size_t m = 0; m < sys.r; ++m) {
    Poly f = phi[m].in_t_squared().shift(static_cast<std::size_t>(sys.directions[m].e));
    for (std::size_t i = 0; i < sys.r; ++i)
      if (!sys.directions[m].w[i].is_zero())
        u[i] += sys.directions[m].w[i] * f;
  }
  return u;
}

std::vector<std::size_t> check_explicit(const std::vector<Poly>& u,
                                        const std::vector<Constraint>& cs) {
  std::vector<std::size_t> bad;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    Poly f = dot_poly(cs[k].row, u) - cs[k].offset;
    bool ok = cs[k].kind == ConstraintKind::IdenticallyZero ? f.is_zero() : in_class(f, cs[k].order());
    if (!ok)
      bad.push_back(k);
  }
  return bad;
}

bool same_module(const CanonicalSystem& a, const CanonicalSystem& b) {
  if (a.r != b.r)
    return false;
  const std::size_t r = a.r;
  long top = std::max(a.max_order(), b.max_order()) + 2;
  for (long n = 0; n <= top; ++n) {
    std::vector<Vec> va, vb, both;
    for (const auto& d : a.directions)
      if (d.e <= n && (n - d.e) % 2 == 0)
        va.push_back(d.w);
    for (const auto& d : b.directions)
      if (d.e <= n && (n - d.e) % 2 == 0)
        vb.push_back(d.w);
    both = va;
    both.insert(both.end(), vb.begin(), vb.end());
    std::size_t ra = span_rank(va, r), rb = span_rank(vb, r);
    if (ra != rb || span_rank(both, r) != ra)
      return false;
  }
  std::vector<Poly> ua = a.particular_solution(), ub = b.particular_solution();
  std::vector<Poly> diff(r);
  for (std::size_t i = 0; i < r; ++i)
    diff[i] = ua[i] - ub[i];
  for (const auto& row : b.rows)
    if (!in_class(dot_poly(row.b, diff), row.e))
      return false;
  return true;
}

} // namespace cohom
