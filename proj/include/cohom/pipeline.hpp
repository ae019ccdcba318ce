#pragma once

#include "cohom/report.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cohom {

struct PipelineOptions {
  std::optional<Mode> mode;  // overrides the document's mode
  bool trace = false;
  /// Randomizes plane choices inside isotypic spaces (results must not change).
  std::optional<std::uint64_t> seed;
};

/// Every intermediate of one singular-orbit analysis.
struct Analysis {
  GroupDiagram diagram;
  FormBasis forms;
  std::vector<LDecomposition> decompositions;
  std::vector<Constraint> constraints;
  SolveResult solved;
  Trace trace;
  Report report;
};

/// invariant forms → circle splittings → conditions → canonical system → report.
Analysis analyze(GroupDiagram d, const PipelineOptions& opt = {}, const std::string& source = "");
Analysis analyze_file(const std::string& path, const PipelineOptions& opt = {});

/// Parity check of the canonical rows against a supplied Weyl element; empty
/// when the diagram has none.
std::vector<std::string> weyl_parity(const GroupDiagram& d, const FormBasis& fb,
                                     const CanonicalSystem& sys);

} // namespace cohom
