#pragma once

#include "cohom/diagram.hpp"

#include <string>
#include <vector>

namespace cohom {

enum class Family {
  SO, Spin, U, U_k, SU, Sp, SpSp1, SpSp1_ineff, SpU1, SpU1_k, G2, Spin7, Spin9
};

struct FamilyInfo {
  Family family;
  std::string name;   // CLI name, e.g. "U_k"
  std::string label;  // e.g. "U(n+1)/U(n)_k"
  bool uses_n = false;
  bool uses_k = false;
};

const std::vector<FamilyInfo>& families();
const FamilyInfo& family_info(Family f);
/// Throws Usage for unknown names.
Family family_from_name(const std::string& name);

/// Stated data for one chosen generator X: the integer a and the speeds d′.
struct ExpectedSplit {
  std::string generator;
  long a = 0;
  std::vector<long> dprime;  // sorted
  std::size_t fixed_dim = 0; // dim ℓ′₀
};

/**
 * One transitive action K on the unit sphere of V, presented as a diagram
 * fragment with g = k and m = 0. `expected` records the integers stated for
 * each generator; `computed` is filled by lsplit when the action is built.
 */
struct SphereAction {
  Family family = Family::SO;
  int n = 0;
  int k = 0;
  GroupDiagram diagram;
  std::vector<ExpectedSplit> expected;
  std::vector<ExpectedSplit> computed;
};

constexpr int kMaxSphereN = 6;
constexpr int kMaxSphereK = 6;

/// Builds and validates the action; throws Usage for parameters out of range.
SphereAction get_action(Family family, int n = 1, int k = 1);

} // namespace cohom
