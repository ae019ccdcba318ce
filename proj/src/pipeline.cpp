#include "cohom/pipeline.hpp"
#include "cohom/document.hpp"
#include "cohom/error.hpp"
#include "cohom/scalarparse.hpp"

#include <fmt/format.h>

namespace cohom {
namespace {

Report make_report(const Analysis& an, const std::vector<std::string>& warnings,
                   const std::string& source) {
  const FormBasis& fb = an.forms;
  Report r;
  r.source = source;
  r.mode = fb.mode == Mode::Tensor ? "tensor" : "metric";
  for (std::size_t m = 0; m < fb.r(); ++m)
    r.unknowns.push_back({fb.labels[m], fb.describe(m)});
  for (const auto& ld : an.decompositions) {
    ReportGenerator g;
    g.name = an.diagram.g.names[ld.generator];
    g.a = ld.a;
    for (const auto& pl : ld.m_planes)
      g.m_speeds.push_back(pl.speed);
    g.m_fixed = ld.m_fixed.size();
    for (const auto& pl : ld.slice_planes)
      g.slice_speeds.push_back(pl.speed);
    g.slice_fixed = ld.slice_fixed.size();
    r.generators.push_back(std::move(g));
  }
  for (const auto& c : an.constraints)
    r.constraints.push_back({to_scalars(c.row), c.kind == ConstraintKind::IdenticallyZero,
                             c.exponent.get_str(), to_scalars(c.offset), c.prov.generator,
                             c.prov.cell, c.prov.pair});
  for (const auto& rel : an.solved.relations) {
    ReportRelation out;
    out.dependent = rel.dependent;
    for (const auto& t : rel.terms)
      out.terms.push_back({t.retained, format_scalar(t.coeff), t.t_power});
    r.relations.push_back(std::move(out));
  }
  const CanonicalSystem& sys = an.solved.system;
  for (const auto& row : sys.rows)
    r.rows.push_back({to_scalars(row.b), row.e, to_scalars(row.particular)});
  for (const auto& dir : sys.directions)
    r.directions.push_back({to_scalars(dir.w), dir.e});
  auto failures = verify_closure(sys, an.constraints);
  r.closure_failures = failures.size();
  r.diagnostics = warnings;
  for (const auto& d : an.solved.diagnostics)
    r.diagnostics.push_back(d);
  for (const auto& f : failures)
    r.diagnostics.push_back(fmt::format("closure failure in condition [{}]: {}", f.constraint + 1,
                                        f.reason));
  for (const auto& w : weyl_parity(an.diagram, fb, sys))
    r.diagnostics.push_back(w);
  r.trace = an.trace;
  return r;
}

} // namespace

std::vector<std::string> weyl_parity(const GroupDiagram& d, const FormBasis& fb,
                                     const CanonicalSystem& sys) {
  if (!d.weyl)
    return {};
  const Mat ad = d.ad_group(*d.weyl);
  const std::size_t w = fb.width(), nn = fb.n_dim();
  Mat wn(w, w);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j)
      wn(i, j) = ad(fb.n_index[i], fb.n_index[j]);
  for (auto hi : d.h)
    for (std::size_t j = 0; j < nn; ++j)
      if (!ad(hi, fb.n_index[j]).is_zero())
        return {"weyl parity: skipped, Ad(w) does not preserve p + m"};
  if (fb.mode == Mode::Tensor)
    wn(fb.radial(), fb.radial()) = AlgNum(-1);

  SpanBasis span(w * w);
  for (const auto& f : fb.forms)
    span.add(f.flat());
  Mat omega(fb.r(), fb.r());
  for (std::size_t m = 0; m < fb.r(); ++m) {
    auto c = span.coordinates((wn.transpose() * fb.forms[m] * wn).flat());
    if (!c)
      return {"weyl parity: skipped, pullback by w leaves the invariant forms"};
    for (std::size_t i = 0; i < fb.r(); ++i)
      omega(i, m) = (*c)[i];
  }
  std::size_t fixed = 0, anti = 0, mixed = 0;
  std::vector<std::string> out;
  for (std::size_t k = 0; k < sys.rows.size(); ++k) {
    const Vec& b = sys.rows[k].b;
    Vec bo(fb.r());
    for (std::size_t j = 0; j < fb.r(); ++j)
      for (std::size_t i = 0; i < fb.r(); ++i)
        if (!b[i].is_zero() && !omega(i, j).is_zero())
          bo[j] += b[i] * omega(i, j);
    int parity;
    if (bo == b) {
      parity = 0;
      ++fixed;
    } else if (bo == AlgNum(-1) * b) {
      parity = 1;
      ++anti;
    } else {
      ++mixed;
      continue;
    }
    if (((sys.rows[k].e % 2) + 2) % 2 != parity)
      out.push_back(fmt::format("weyl parity CONFLICT: canonical row ({}) is {} under w but has "
                                "exponent {}",
                                k + 1, parity ? "anti-fixed" : "fixed", sys.rows[k].e));
  }
  out.insert(out.begin(), fmt::format("weyl parity: {} fixed, {} anti-fixed, {} mixed canonical "
                                      "rows; {}",
                                      fixed, anti, mixed,
                                      out.empty() ? "consistent" : "conflicts below"));
  return out;
}

Analysis analyze(GroupDiagram d, const PipelineOptions& opt, const std::string& source) {
  if (opt.mode)
    d.mode = *opt.mode;
  ValidationReport vr = validate(d);
  if (!vr.ok())
    throw Error(ErrorKind::Invariant, "invalid diagram: " + vr.first_failure());
  std::vector<std::string> warnings;
  for (const auto& c : vr.checks)
    if (!c.passed)
      warnings.push_back("warning: " + c.name + ": " + c.witness);

  Analysis an;
  an.diagram = std::move(d);
  an.forms = invariant_forms(an.diagram, an.diagram.mode);
  SplitOptions so;
  so.seed = opt.seed;
  for (auto gi : an.diagram.p_generators)
    an.decompositions.push_back(decompose(an.diagram, gi, so));
  an.constraints = all_conditions(an.diagram, an.decompositions, an.forms,
                                  opt.trace ? &an.trace : nullptr);
  an.solved = canonicalize(an.constraints, an.forms.r());
  an.report = make_report(an, warnings, source);
  return an;
}

Analysis analyze_file(const std::string& path, const PipelineOptions& opt) {
  return analyze(load_document(path), opt, path);
}

} // namespace cohom
