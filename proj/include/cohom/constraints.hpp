#pragma once

#include "cohom/invforms.hpp"
#include "cohom/lsplit.hpp"
#include "cohom/poly.hpp"

#include <string>
#include <vector>

namespace cohom {

enum class ConstraintKind { Membership, IdenticallyZero };

struct Provenance {
  std::string generator;  // name of X
  std::string cell;       // table cell, e.g. "m:plane" or "pm:l'0 x l0"
  std::string pair;       // which vectors, e.g. "l1 x l1: g11-g22"
};

/**
 * row·u(t) − offset(t) ∈ t^exponent · (even functions), or, for
 * IdenticallyZero, row·u ≡ 0 (a fractional exponent on a nonzero row).
 */
struct Constraint {
  Vec row;
  ConstraintKind kind = ConstraintKind::Membership;
  Rational exponent = 0;
  Poly offset;
  Provenance prov;

  bool integral() const { return exponent.get_den() == 1; }
  long order() const { return exponent.get_num().get_si(); }
};

/// Audit log: one line per table cell consulted (including dropped rows).
using Trace = std::vector<std::string>;

std::vector<Constraint> p_part_conditions(const GroupDiagram& d, const LDecomposition& ld,
                                          const FormBasis& fb, Trace* trace = nullptr);
/// Conditions from the Ad_H-fixed part of p when it has dimension ≥ 2.
std::vector<Constraint> p0_conditions(const GroupDiagram& d, const FormBasis& fb,
                                      Trace* trace = nullptr);
std::vector<Constraint> mm_conditions(const GroupDiagram& d, const LDecomposition& ld,
                                      const FormBasis& fb, Trace* trace = nullptr);
std::vector<Constraint> pm_conditions(const GroupDiagram& d, const LDecomposition& ld,
                                      const FormBasis& fb, Trace* trace = nullptr);

/// Symmetric 2-tensor variant; `fb` must carry the radial slot.
std::vector<Constraint> tensor_conditions(const GroupDiagram& d,
                                          const std::vector<LDecomposition>& lds,
                                          const FormBasis& fb, Trace* trace = nullptr);

/// All conditions for the given decompositions, in the mode of `fb`.
std::vector<Constraint> all_conditions(const GroupDiagram& d,
                                       const std::vector<LDecomposition>& lds,
                                       const FormBasis& fb, Trace* trace = nullptr);

/// "B1 + 15*B4" style rendering of a functional.
std::string format_functional(const Vec& row, const std::vector<std::string>& labels);
std::string format_exponent(const Rational& e);

} // namespace cohom
