#include "cohom/lsplit.hpp"
#include "cohom/error.hpp"

#include <cmath>
#include <random>

namespace cohom {
namespace {

AlgNum bilinear(const Mat& g, const Vec& a, const Vec& b) { return dot(a, g * b); }

// Basis of { v ∈ span(basis) : gram(v, w) = 0 for w in ws }.
std::vector<Vec> orth_within(const std::vector<Vec>& basis, const std::vector<Vec>& ws,
                             const Mat& gram) {
  std::vector<Vec> eqs;
  for (const auto& w : ws) {
    Vec gw = gram * w;
    Vec row(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      row[i] = dot(basis[i], gw);
    eqs.push_back(std::move(row));
  }
  std::vector<Vec> out;
  for (const auto& c : kernel(eqs, basis.size())) {
    Vec v(basis[0].size());
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!c[i].is_zero())
        v = v + c[i] * basis[i];
    out.push_back(std::move(v));
  }
  return rref(out, basis[0].size()).rows;
}

} // namespace

ModuleSplit split_module(const Mat& m, const Mat& gram, const SplitOptions& opt) {
  const std::size_t n = m.rows();
  ModuleSplit out;
  if (n == 0)
    return out;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    rows.push_back(m.row(i));
  out.fixed = kernel(rows, n);

  std::mt19937_64 rng(opt.seed.value_or(0));
  std::uniform_int_distribution<int> coef(-3, 3);

  double frob = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double x = m(i, j).to_float();
      frob += x * x;
    }
  const long bound = static_cast<long>(std::ceil(std::sqrt(frob))) + 1;
  const Mat m2 = m * m;

  std::size_t covered = out.fixed.size();
  for (long d = 1; d <= bound && covered < n; ++d) {
    Mat op = m2;
    for (std::size_t i = 0; i < n; ++i)
      op(i, i) += AlgNum(d * d);
    std::vector<Vec> oprows;
    for (std::size_t i = 0; i < n; ++i)
      oprows.push_back(op.row(i));
    std::vector<Vec> space = kernel(oprows, n);
    if (space.size() % 2)
      throw Error(ErrorKind::Invariant, "odd-dimensional isotypic space for speed " +
                                            std::to_string(d));
    covered += space.size();
    const AlgNum dinv(1, d);
    while (!space.empty()) {
      Vec y1 = space[0];
      if (opt.seed && space.size() > 2) {
        do {
          y1 = Vec(n);
          for (const auto& s : space)
            y1 = y1 + AlgNum(coef(rng)) * s;
        } while (is_zero(y1));
      }
      Vec y2 = dinv * (m * y1);
      AlgNum n1 = bilinear(gram, y1, y1), n2 = bilinear(gram, y2, y2);
      if (n1.is_zero())
        throw Error(ErrorKind::Invariant, "inner product is degenerate on the module");
      if (n1 != n2 || !bilinear(gram, y1, y2).is_zero())
        throw Error(ErrorKind::Invariant, "action is not skew for the module inner product");
      space = space.size() == 2 ? std::vector<Vec>{} : orth_within(space, {y1, y2}, gram);
      out.planes.push_back({std::move(y1), std::move(y2), d});
    }
  }
  if (covered != n)
    throw Error(ErrorKind::Invariant,
                "generator does not integrate to a closed circle with integer speeds");
  return out;
}

long compute_a(const GroupDiagram& d, std::size_t generator) {
  const Mat& r = d.rho_of(generator);
  const Vec& e1 = d.slice.e1;
  Vec v = r * e1;
  if (!dot(v, e1).is_zero() || is_zero(v))
    throw Error(ErrorKind::Invariant, "ρ(" + d.g.names[generator] + ")e1 must be a nonzero vector ⊥ e1");
  Vec w = r * v;
  AlgNum c = -dot(w, e1);
  if (!is_zero(w + c * e1))
    throw Error(ErrorKind::Invariant, "ρ(" + d.g.names[generator] + ")²e1 is not parallel to e1");
  if (!c.is_rational())
    throw Error(ErrorKind::Invariant, "a² = " + c.str() + " is not an integer square");
  Rational q = c.to_rational();
  if (q.get_den() != 1 || q <= 0)
    throw Error(ErrorKind::Invariant, "a² = " + c.str() + " is not a positive integer");
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), q.get_num().get_mpz_t());
  if (root * root != q.get_num())
    throw Error(ErrorKind::Invariant, "a² = " + c.str() + " is not a perfect square");
  return root.get_si();
}

LDecomposition decompose(const GroupDiagram& d, std::size_t generator, const SplitOptions& opt) {
  LDecomposition out;
  out.generator = generator;
  out.a = compute_a(d, generator);
  const Mat& r = d.rho_of(generator);
  out.x_slice = r * d.slice.e1;

  // m: ad_X in the m-basis
  const std::size_t nm = d.m.size();
  Mat mx(nm, nm), gm(nm, nm);
  for (std::size_t j = 0; j < nm; ++j) {
    const Vec& c = d.sc(generator, d.m[j]);
    for (std::size_t i = 0; i < nm; ++i) {
      mx(i, j) = c[d.m[i]];
      gm(i, j) = d.gram(d.m[i], d.m[j]);
    }
  }
  ModuleSplit ms = split_module(mx, gm, opt);
  auto lift = [&](const Vec& v) {
    Vec g(d.dim());
    for (std::size_t i = 0; i < nm; ++i)
      g[d.m[i]] = v[i];
    return g;
  };
  for (const auto& f : ms.fixed)
    out.m_fixed.push_back(lift(f));
  for (const auto& pl : ms.planes)
    out.m_planes.push_back({lift(pl.y1), lift(pl.y2), pl.speed});

  // slice: complement of ℓ′₋₁ = span{e1, ρ(X)e1}
  const std::size_t dim = d.slice.dim;
  std::vector<Vec> comp = kernel({d.slice.e1, out.x_slice}, dim);
  if (!comp.empty()) {
    SpanBasis sb(dim);
    for (const auto& c : comp)
      sb.add(c);
    const std::size_t q = comp.size();
    Mat mw(q, q), gw(q, q);
    for (std::size_t j = 0; j < q; ++j) {
      auto c = sb.coordinates(r * comp[j]);
      if (!c)
        throw Error(ErrorKind::Invariant, "slice complement of ℓ′₋₁ is not ρ(X)-invariant");
      for (std::size_t i = 0; i < q; ++i) {
        mw(i, j) = (*c)[i];
        gw(i, j) = dot(comp[i], comp[j]);
      }
    }
    ModuleSplit ss = split_module(mw, gw, opt);
    auto to_v = [&](const Vec& c) {
      Vec v(dim);
      for (std::size_t i = 0; i < q; ++i)
        if (!c[i].is_zero())
          v = v + c[i] * comp[i];
      return v;
    };
    for (const auto& f : ss.fixed)
      out.slice_fixed.push_back(to_v(f));
    for (const auto& pl : ss.planes)
      out.slice_planes.push_back({to_v(pl.y1), to_v(pl.y2), pl.speed});
  }
  return out;
}

} // namespace cohom
