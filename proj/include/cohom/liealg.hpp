#pragma once

#include "cohom/linalg.hpp"

#include <string>
#include <vector>

namespace cohom {

/// [A, B] = AB - BA.
Mat bracket(const Mat& a, const Mat& b);

struct LieBasis {
  std::vector<std::string> names;
  std::vector<Mat> elements;
  AlgNum q_scale = AlgNum(-1, 2);

  std::size_t size() const { return elements.size(); }
  std::size_t index_of(const std::string& name) const;  // throws if absent
};

/// c[i][j][k] with [X_i, X_j] = sum_k c[i][j][k] X_k.
struct StructureConstants {
  std::size_t n = 0;
  std::vector<Vec> table;  // table[i*n + j] = coordinates of [X_i, X_j]

  const Vec& operator()(std::size_t i, std::size_t j) const { return table[i * n + j]; }
  /// Coordinates of [x, y] for coordinate vectors x, y.
  Vec bracket(const Vec& x, const Vec& y) const;
};

/// Expands all brackets in the basis; throws on dependence, non-closure,
/// or failure of antisymmetry / Jacobi.
StructureConstants validate_basis(const LieBasis& basis);

/// Q(A, B) = q_scale * trace(AB).
AlgNum q_form(const LieBasis& basis, const Mat& a, const Mat& b);

/// Gram matrix of Q on the basis.
Mat q_gram(const LieBasis& basis);

/// Matrix of Y -> [X, Y] in the given module basis; throws if a bracket leaves the span.
Mat ad_matrix(const Mat& x, const std::vector<Mat>& module);

/// Returns a description of the first triple where Q fails ad-invariance, or "".
std::string check_q_invariance(const StructureConstants& sc, const Mat& gram);

/// Linear combination sum c_i * elements[i].
Mat combine(const std::vector<Mat>& elements, const Vec& coeffs);

} // namespace cohom
