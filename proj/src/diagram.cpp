#include "cohom/diagram.hpp"
#include "cohom/error.hpp"

#include <algorithm>
#include <set>

namespace cohom {

Vec GroupDiagram::coords(const Mat& x) const {
  if (!span)
    throw Error(ErrorKind::Internal, "diagram used before validation");
  auto c = span->coordinates(x.flat());
  if (!c)
    throw Error(ErrorKind::Invariant, "matrix lies outside the span of g");
  return *c;
}

const Mat& GroupDiagram::rho_of(std::size_t gi) const {
  for (std::size_t i = 0; i < k.size(); ++i)
    if (k[i] == gi)
      return slice.rho[i];
  throw Error(ErrorKind::Invariant, "element " + g.names.at(gi) + " is not in k");
}

Mat GroupDiagram::rho(const Vec& gcoords) const {
  Mat out(slice.dim, slice.dim);
  std::set<std::size_t> kset(k.begin(), k.end());
  for (std::size_t i = 0; i < gcoords.size(); ++i) {
    if (gcoords[i].is_zero())
      continue;
    if (!kset.count(i))
      throw Error(ErrorKind::Invariant, "ρ applied to an element outside k");
    out += gcoords[i] * rho_of(i);
  }
  return out;
}

Vec GroupDiagram::iota(const Vec& gcoords) const { return rho(gcoords) * slice.e1; }

Vec GroupDiagram::iota_inverse(const Vec& v) const {
  if (!dot(v, slice.e1).is_zero())
    throw Error(ErrorKind::Invariant, "ι⁻¹ requested for a vector with nonzero e₁-component");
  std::vector<Vec> cols;
  for (auto pi : p)
    cols.push_back(iota(unit(dim(), pi)));
  auto x = solve(Mat::from_columns(cols, slice.dim), v);
  if (!x)
    throw Error(ErrorKind::Invariant, "vector is not in the image of ι");
  Vec out(dim());
  for (std::size_t j = 0; j < p.size(); ++j)
    out[p[j]] = (*x)[j];
  return out;
}

AlgNum GroupDiagram::q(const Vec& x, const Vec& y) const { return dot(x, gram * y); }

Mat GroupDiagram::ad_group(const Mat& gamma) const {
  Mat ginv = inverse(gamma);
  Mat a(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec c = coords(gamma * g.elements[j] * ginv);
    for (std::size_t i = 0; i < dim(); ++i)
      a(i, j) = c[i];
  }
  return a;
}

bool ValidationReport::ok() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const ValidationCheck& c) { return c.fatal && !c.passed; });
}

std::string ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (c.fatal && !c.passed)
      return c.name + ": " + c.witness;
  return "";
}

namespace {

class Checker {
public:
  explicit Checker(ValidationReport& r) : r_(r) {}
  void pass(const std::string& name, bool fatal = true) { r_.checks.push_back({name, true, fatal, ""}); }
  void fail(const std::string& name, const std::string& witness, bool fatal = true) {
    r_.checks.push_back({name, false, fatal, witness});
  }
  void check(const std::string& name, const std::string& witness, bool fatal = true) {
    if (witness.empty())
      pass(name, fatal);
    else
      fail(name, witness, fatal);
  }

private:
  ValidationReport& r_;
};

// First basis element of `src` x `dst`-bracket whose coordinates leave `allowed`.
std::string bracket_witness(const GroupDiagram& d, const std::vector<std::size_t>& a,
                            const std::vector<std::size_t>& b,
                            const std::vector<std::size_t>& allowed) {
  std::vector<bool> ok(d.dim(), false);
  for (auto i : allowed)
    ok[i] = true;
  for (auto i : a)
    for (auto j : b) {
      const Vec& c = d.sc(i, j);
      for (std::size_t t = 0; t < d.dim(); ++t)
        if (!c[t].is_zero() && !ok[t])
          return "[" + d.g.names[i] + ", " + d.g.names[j] + "] has component " + c[t].str() +
                 " along " + d.g.names[t];
    }
  return "";
}

std::string orth_witness(const GroupDiagram& d, const std::vector<std::size_t>& a,
                         const std::vector<std::size_t>& b) {
  for (auto i : a)
    for (auto j : b)
      if (!d.gram(i, j).is_zero())
        return "Q(" + d.g.names[i] + ", " + d.g.names[j] + ") = " + d.gram(i, j).str();
  return "";
}

// Does the coordinate matrix A map span(idx) into span(idx)?
std::string preserves_witness(const GroupDiagram& d, const Mat& a,
                              const std::vector<std::size_t>& idx, const std::string& what) {
  std::vector<bool> ok(d.dim(), false);
  for (auto i : idx)
    ok[i] = true;
  for (auto j : idx)
    for (std::size_t i = 0; i < d.dim(); ++i)
      if (!ok[i] && !a(i, j).is_zero())
        return "image of " + d.g.names[j] + " leaves " + what + " (component along " +
               d.g.names[i] + ")";
  return "";
}

} // namespace

ValidationReport validate(GroupDiagram& d) {
  ValidationReport rep;
  Checker c(rep);
  const std::size_t n = d.dim();

  try {
    d.sc = validate_basis(d.g);
    c.pass("basis closure, antisymmetry, Jacobi");
  } catch (const Error& e) {
    c.fail("basis closure, antisymmetry, Jacobi", e.what());
    return rep;
  }
  d.span.emplace(d.g.elements[0].flat().size());
  for (const auto& e : d.g.elements)
    d.span->add(e.flat());
  d.gram = q_gram(d.g);

  // partitions
  {
    std::string w;
    auto in_range = [&](const std::vector<std::size_t>& v) {
      for (auto i : v)
        if (i >= n)
          return false;
      return true;
    };
    std::multiset<std::size_t> km(d.k.begin(), d.k.end());
    km.insert(d.m.begin(), d.m.end());
    std::multiset<std::size_t> hp(d.h.begin(), d.h.end());
    hp.insert(d.p.begin(), d.p.end());
    std::multiset<std::size_t> all, kk(d.k.begin(), d.k.end());
    for (std::size_t i = 0; i < n; ++i)
      all.insert(i);
    if (!in_range(d.k) || !in_range(d.h) || !in_range(d.m) || !in_range(d.p))
      w = "index out of range";
    else if (km != all)
      w = "k and m do not partition the basis of g";
    else if (hp != kk)
      w = "h and p do not partition the basis of k";
    c.check("g = k ⊕ m and k = h ⊕ p as index partitions", w);
    if (!w.empty())
      return rep;
  }

  c.check("k ⊥_Q m", orth_witness(d, d.k, d.m));
  // With a user-calibrated Q the complement p need not be Q-orthogonal to h
  // (e.g. when ρ scales a central factor); only Ad_H-invariance is required.
  c.check("h ⊥_Q p", orth_witness(d, d.h, d.p), false);
  c.check("Q is ad-invariant", check_q_invariance(d.sc, d.gram), false);

  c.check("k is a subalgebra", bracket_witness(d, d.k, d.k, d.k));
  c.check("h is a subalgebra", bracket_witness(d, d.h, d.h, d.h));
  c.check("[h, p] ⊆ p", bracket_witness(d, d.h, d.p, d.p));
  c.check("[h, m] ⊆ m", bracket_witness(d, d.h, d.m, d.m));
  c.check("[k, m] ⊆ m", bracket_witness(d, d.k, d.m, d.m));

  // slice representation
  {
    std::string w;
    if (d.slice.rho.size() != d.k.size())
      w = "ρ must be given for every element of k";
    for (std::size_t i = 0; w.empty() && i < d.slice.rho.size(); ++i) {
      const Mat& r = d.slice.rho[i];
      if (r.rows() != d.slice.dim || r.cols() != d.slice.dim)
        w = "ρ(" + d.g.names[d.k[i]] + ") has the wrong size";
      else if (!(r.transpose() == -r))
        w = "ρ(" + d.g.names[d.k[i]] + ") is not skew-symmetric";
    }
    if (w.empty() && d.slice.e1.size() != d.slice.dim)
      w = "e1 has the wrong length";
    c.check("slice representation shape and skewness", w);
    if (!w.empty())
      return rep;
  }
  {
    std::string w;
    for (std::size_t i = 0; w.empty() && i < d.k.size(); ++i)
      for (std::size_t j = i + 1; w.empty() && j < d.k.size(); ++j) {
        Mat lhs = d.rho(d.sc(d.k[i], d.k[j]));
        Mat rhs = bracket(d.slice.rho[i], d.slice.rho[j]);
        if (!(lhs == rhs))
          w = "ρ([" + d.g.names[d.k[i]] + ", " + d.g.names[d.k[j]] + "]) ≠ [ρ, ρ]";
      }
    c.check("ρ is a homomorphism", w);
  }
  {
    std::string w;
    if (!dot(d.slice.e1, d.slice.e1).is_one())
      w = "|e1|² = " + dot(d.slice.e1, d.slice.e1).str();
    for (auto hi : d.h)
      if (w.empty() && !is_zero(d.rho_of(hi) * d.slice.e1))
        w = "ρ(" + d.g.names[hi] + ") e1 ≠ 0";
    c.check("e1 is a unit vector fixed by h", w);
  }
  {
    std::string w;
    SpanBasis img(d.slice.dim);
    for (auto pi : d.p) {
      Vec v = d.iota(unit(n, pi));
      if (!img.add(v)) {
        w = "ι(" + d.g.names[pi] + ") is dependent on earlier action fields";
        break;
      }
    }
    if (w.empty() && d.p.size() + 1 != d.slice.dim)
      w = "dim p = " + std::to_string(d.p.size()) + " but dim e1^⊥ = " +
          std::to_string(d.slice.dim - 1);
    c.check("ι: p → e1^⊥ is a bijection", w);
  }
  {
    std::string w;
    std::set<std::size_t> pset(d.p.begin(), d.p.end());
    if (d.p_generators.empty())
      w = "no p generators given";
    for (auto gi : d.p_generators)
      if (!pset.count(gi))
        w = d.g.names.at(gi) + " is not in p";
    c.check("p generators lie in p", w);
  }
  for (std::size_t i = 0; i < d.h_discrete.size(); ++i) {
    std::string name = "discrete element " + std::to_string(i + 1) + " preserves h, p, m";
    try {
      Mat a = d.ad_group(d.h_discrete[i]);
      std::string w = preserves_witness(d, a, d.h, "h");
      if (w.empty())
        w = preserves_witness(d, a, d.p, "p");
      if (w.empty())
        w = preserves_witness(d, a, d.m, "m");
      c.check(name, w);
    } catch (const Error& e) {
      c.fail(name, e.what());
    }
  }
  if (d.weyl) {
    std::string name = "Weyl element preserves h, p, m";
    try {
      Mat a = d.ad_group(*d.weyl);
      std::string w = preserves_witness(d, a, d.h, "h");
      if (w.empty())
        w = preserves_witness(d, a, d.p, "p");
      if (w.empty())
        w = preserves_witness(d, a, d.m, "m");
      c.check(name, w, false);
    } catch (const Error& e) {
      c.fail(name, e.what(), false);
    }
  }
  return rep;
}

void require_valid(GroupDiagram& d) {
  ValidationReport r = validate(d);
  if (!r.ok())
    throw Error(ErrorKind::Invariant, "invalid diagram: " + r.first_failure());
}

} // namespace cohom
