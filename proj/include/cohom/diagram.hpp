#pragma once

#include "cohom/liealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cohom {

enum class Mode { Metric, Tensor };

struct SliceRep {
  std::size_t dim = 0;
  std::vector<Mat> rho;  // parallel to GroupDiagram::k
  Vec e1;
};

/**
 * Matrix presentation of H ⊂ K ⊂ G with slice representation.
 *
 * All index lists refer to positions in g. After validate() succeeds the
 * structure constants, Q-Gram matrix and coordinate span are cached.
 */
struct GroupDiagram {
  LieBasis g;
  std::vector<std::size_t> k, h, m, p;
  std::vector<Mat> h_discrete;
  SliceRep slice;
  std::vector<std::size_t> p_generators;
  std::optional<Mat> weyl;
  Mode mode = Mode::Metric;

  // derived
  StructureConstants sc;
  Mat gram;
  std::optional<SpanBasis> span;

  std::size_t dim() const { return g.size(); }
  /// Coordinates of a matrix in g; throws if outside the span.
  Vec coords(const Mat& x) const;
  /// ρ of an element of k given by g-coordinates.
  Mat rho(const Vec& gcoords) const;
  /// ρ of the k-basis element at g-index i.
  const Mat& rho_of(std::size_t gi) const;
  /// Action field at c(1): ι(Z) = ρ(Z) e₁.
  Vec iota(const Vec& gcoords) const;
  /// Inverse of ι on e₁^⊥, returned as g-coordinates supported on p.
  Vec iota_inverse(const Vec& v) const;
  /// Q on g-coordinate vectors.
  AlgNum q(const Vec& x, const Vec& y) const;
  /// Matrix of Ad(γ) on g-coordinates.
  Mat ad_group(const Mat& gamma) const;
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  bool fatal = true;
  std::string witness;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool ok() const;
  std::string first_failure() const;
};

/// Runs every structural check; fills the derived caches on `d`.
ValidationReport validate(GroupDiagram& d);

/// validate() and throw an Invariant error naming the first fatal failure.
void require_valid(GroupDiagram& d);

} // namespace cohom
