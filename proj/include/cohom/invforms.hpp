#pragma once

#include "cohom/diagram.hpp"

#include <string>
#include <vector>

namespace cohom {

/**
 * Basis of Ad_H-invariant symmetric bilinear forms on n = p ⊕ m.
 *
 * Coordinates on n follow p then m (g-index order within each). In tensor
 * mode a radial slot (the normal direction ċ) is appended last.
 */
struct FormBasis {
  Mode mode = Mode::Metric;
  std::vector<std::size_t> n_index;  // g-index of each n coordinate
  std::vector<std::string> coord_names;
  std::vector<Mat> forms;
  std::vector<std::string> labels;

  std::size_t r() const { return forms.size(); }
  std::size_t n_dim() const { return n_index.size(); }
  /// Width of the coordinate space the forms act on.
  std::size_t width() const { return n_dim() + (mode == Mode::Tensor ? 1 : 0); }
  /// Index of the radial slot (tensor mode only).
  std::size_t radial() const { return n_dim(); }

  /// Extended n-coordinates of an element given in g-coordinates (h-part must vanish).
  Vec from_g(const Vec& gcoords) const;
  Vec radial_vector() const;
  /// Row (B_1(a,b), ..., B_r(a,b)).
  Vec evaluate(const Vec& a, const Vec& b) const;
  /// Human-readable nonzero entries of form m, e.g. "<V4,V4> = 1".
  std::vector<std::string> describe(std::size_t m) const;
};

FormBasis invariant_forms(const GroupDiagram& d, Mode mode);

} // namespace cohom
