#include "cohom/liealg.hpp"
#include "cohom/error.hpp"

namespace cohom {

Mat bracket(const Mat& a, const Mat& b) {
  if (!a.square() || a.rows() != b.rows() || !b.square())
    throw Error(ErrorKind::Invariant, "bracket of matrices with mismatched shapes");
  return a * b - b * a;
}

std::size_t LieBasis::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name)
      return i;
  throw Error(ErrorKind::Parse, "unknown basis element '" + name + "'");
}

Vec StructureConstants::bracket(const Vec& x, const Vec& y) const {
  Vec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero() || i == j)
        continue;
      AlgNum c = x[i] * y[j];
      const Vec& t = (*this)(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (!t[k].is_zero())
          out[k] += c * t[k];
    }
  }
  return out;
}

Mat combine(const std::vector<Mat>& elements, const Vec& coeffs) {
  Mat out(elements.at(0).rows(), elements.at(0).cols());
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (!coeffs[i].is_zero())
      out += coeffs[i] * elements[i];
  return out;
}

StructureConstants validate_basis(const LieBasis& basis) {
  const std::size_t n = basis.size();
  if (n == 0)
    throw Error(ErrorKind::Invariant, "empty Lie basis");
  for (const auto& e : basis.elements)
    if (!e.square() || e.rows() != basis.elements[0].rows())
      throw Error(ErrorKind::Invariant, "basis matrices must be square and of equal size");

  SpanBasis span(basis.elements[0].flat().size());
  for (std::size_t i = 0; i < n; ++i)
    if (!span.add(basis.elements[i].flat()))
      throw Error(ErrorKind::Invariant,
                  "basis element " + basis.names[i] + " is linearly dependent on earlier ones");

  StructureConstants sc;
  sc.n = n;
  sc.table.assign(n * n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Mat b = bracket(basis.elements[i], basis.elements[j]);
      auto c = span.coordinates(b.flat());
      if (!c)
        throw Error(ErrorKind::Invariant, "basis not closed: [" + basis.names[i] + ", " +
                                              basis.names[j] + "] leaves the span");
      sc.table[i * n + j] = *c;
      sc.table[j * n + i] = Vec(n);
      for (std::size_t k = 0; k < n; ++k)
        sc.table[j * n + i][k] = -(*c)[k];
    }
  }
  // Jacobi: [X_i,[X_j,X_k]] + cyclic = 0
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec s = sc.bracket(unit(n, i), sc(j, k)) + sc.bracket(unit(n, j), sc(k, i)) +
                sc.bracket(unit(n, k), sc(i, j));
        if (!is_zero(s))
          throw Error(ErrorKind::Invariant, "Jacobi identity fails on (" + basis.names[i] +
                                                ", " + basis.names[j] + ", " + basis.names[k] +
                                                ")");
      }
  return sc;
}

AlgNum q_form(const LieBasis& basis, const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() ||
      (!basis.elements.empty() && a.rows() != basis.elements[0].rows()))
    throw Error(ErrorKind::Invariant, "shape mismatch in Q");
  // trace(AB) without forming AB
  AlgNum t;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !b(k, i).is_zero())
        t += a(i, k) * b(k, i);
  return basis.q_scale * t;
}

Mat q_gram(const LieBasis& basis) {
  std::size_t n = basis.size();
  Mat g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      g(i, j) = q_form(basis, basis.elements[i], basis.elements[j]);
      g(j, i) = g(i, j);
    }
  return g;
}

Mat ad_matrix(const Mat& x, const std::vector<Mat>& module) {
  const std::size_t n = module.size();
  Mat m(n, n);
  if (n == 0)
    return m;
  SpanBasis span(module[0].flat().size());
  for (const auto& y : module)
    if (!span.add(y.flat()))
      throw Error(ErrorKind::Invariant, "module basis is linearly dependent");
  for (std::size_t j = 0; j < n; ++j) {
    auto c = span.coordinates(bracket(x, module[j]).flat());
    if (!c)
      throw Error(ErrorKind::Invariant,
                  "module is not invariant: bracket with element " + std::to_string(j) +
                      " leaves its span");
    for (std::size_t i = 0; i < n; ++i)
      m(i, j) = (*c)[i];
  }
  return m;
}

std::string check_q_invariance(const StructureConstants& sc, const Mat& gram) {
  const std::size_t n = sc.n;
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        AlgNum s;
        const Vec &za = sc(z, a), &zb = sc(z, b);
        for (std::size_t k = 0; k < n; ++k) {
          if (!za[k].is_zero() && !gram(k, b).is_zero())
            s += za[k] * gram(k, b);
          if (!zb[k].is_zero() && !gram(k, a).is_zero())
            s += zb[k] * gram(k, a);
        }
        if (!s.is_zero())
          return "Q([X" + std::to_string(z) + ",X" + std::to_string(a) + "],X" +
                 std::to_string(b) + ") + Q(X" + std::to_string(a) + ",[X" + std::to_string(z) +
                 ",X" + std::to_string(b) + "]) = " + s.str();
      }
  return "";
}

} // namespace cohom
