#pragma once

#include "cohom/diagram.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cohom {

/// Oriented plane on which the circle acts as R(speed·θ): X·y1 = speed·y2, X·y2 = −speed·y1.
struct TwoPlane {
  Vec y1, y2;
  long speed = 0;
};

struct ModuleSplit {
  std::vector<Vec> fixed;
  std::vector<TwoPlane> planes;
};

struct SplitOptions {
  /// When set, planes inside isotypic spaces of dimension > 2 are chosen
  /// from random integer combinations instead of the first basis vector.
  std::optional<std::uint64_t> seed;
};

/**
 * Split a module under the action matrix `m` (columns = images of basis
 * vectors) into the kernel and integer-speed planes, orthogonal for `gram`.
 * Vectors are in module coordinates.
 */
ModuleSplit split_module(const Mat& m, const Mat& gram, const SplitOptions& opt = {});

/// a with ρ(X)²e₁ = −a²e₁.
long compute_a(const GroupDiagram& d, std::size_t generator);

struct LDecomposition {
  std::size_t generator = 0;  // g-index of X
  long a = 0;
  Vec x_slice;                // ι(X) = ρ(X)e₁, so ℓ′₋₁ = span{e₁, x_slice}
  std::vector<Vec> m_fixed;   // g-coordinates
  std::vector<TwoPlane> m_planes;
  std::vector<Vec> slice_fixed;  // V-coordinates
  std::vector<TwoPlane> slice_planes;
};

LDecomposition decompose(const GroupDiagram& d, std::size_t generator,
                         const SplitOptions& opt = {});

} // namespace cohom
