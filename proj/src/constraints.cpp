#include "cohom/constraints.hpp"
#include "cohom/error.hpp"

#include <cstdlib>

namespace cohom {

std::string format_exponent(const Rational& e) { return e.get_str(); }

std::string format_functional(const Vec& row, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].is_zero())
      continue;
    std::string c = row[i].str();
    bool compound = row[i].terms().size() > 1;
    bool neg = !compound && c[0] == '-';
    if (neg)
      c = c.substr(1);
    if (compound)
      c = "(" + c + ")";
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    out += (c == "1" ? "" : c + "*") + labels[i];
  }
  return out.empty() ? "0" : out;
}

namespace {

class Builder {
public:
  Builder(const GroupDiagram& d, const FormBasis& fb, Trace* trace, std::string gen)
      : d_(d), fb_(fb), trace_(trace), gen_(std::move(gen)) {}

  bool tensor() const { return fb_.mode == Mode::Tensor; }

  Vec from_m(const Vec& gcoords) const { return fb_.from_g(gcoords); }
  Vec from_slice(const Vec& v) const { return fb_.from_g(d_.iota_inverse(v)); }
  Vec from_index(std::size_t gi) const { return fb_.from_g(unit(d_.dim(), gi)); }
  Vec ev(const Vec& a, const Vec& b) const { return fb_.evaluate(a, b); }

  void emit(const Vec& row, const Rational& exponent, const std::string& cell,
            const std::string& pair, const Poly& offset = Poly()) {
    Rational e = exponent;
    e.canonicalize();
    std::string where = "gen=" + gen_ + " cell=" + cell + " pair=" + pair;
    if (is_zero(row) && offset.is_zero()) {
      log(where + " exp=" + e.get_str() + " : zero row, dropped");
      return;
    }
    Constraint c;
    c.row = row;
    c.exponent = e;
    c.offset = offset;
    c.prov = {gen_, cell, pair};
    c.kind = e.get_den() == 1 ? ConstraintKind::Membership : ConstraintKind::IdenticallyZero;
    log(where + " : " + format_functional(row, fb_.labels) +
        (offset.is_zero() ? "" : " - (" + offset.str() + ")") +
        (c.kind == ConstraintKind::Membership ? " in t^" + e.get_str() + "*even"
                                              : " == 0 (fractional exponent " + e.get_str() + ")"));
    out.push_back(std::move(c));
  }

  void log(const std::string& s) {
    if (trace_)
      trace_->push_back(s);
  }

  std::vector<Constraint> out;

private:
  const GroupDiagram& d_;
  const FormBasis& fb_;
  Trace* trace_;
  std::string gen_;
};

Rational ratio(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string plane_name(std::size_t i, long d) {
  return "l" + std::to_string(i + 1) + "(d=" + std::to_string(d) + ")";
}
std::string slice_plane_name(std::size_t i, long d) {
  return "l'" + std::to_string(i + 1) + "(d'=" + std::to_string(d) + ")";
}

// Four rows for a pair of oriented planes: (h11+h22, h12-h21) at `diff`, (h11-h22, h12+h21) at `sum`.
void plane_pair(Builder& b, const Vec& a1, const Vec& a2, const Vec& c1, const Vec& c2,
                const Rational& diff, const Rational& sum, const std::string& cell,
                const std::string& pair) {
  Vec h11 = b.ev(a1, c1), h12 = b.ev(a1, c2), h21 = b.ev(a2, c1), h22 = b.ev(a2, c2);
  b.emit(h11 + h22, diff, cell, pair + ": h11+h22");
  b.emit(h12 - h21, diff, cell, pair + ": h12-h21");
  b.emit(h11 - h22, sum, cell, pair + ": h11-h22");
  b.emit(h12 + h21, sum, cell, pair + ": h12+h21");
}

std::vector<Vec> p0_basis(const GroupDiagram& d) {
  const std::size_t np = d.p.size();
  std::vector<Vec> eqs;
  auto add_map = [&](auto image) {
    // image(j) = g-coordinates of T(p_j); require Σ c_j image(j) = 0
    std::vector<Vec> cols;
    for (std::size_t j = 0; j < np; ++j)
      cols.push_back(image(j));
    for (std::size_t i = 0; i < d.dim(); ++i) {
      Vec row(np);
      for (std::size_t j = 0; j < np; ++j)
        row[j] = cols[j][i];
      if (!is_zero(row))
        eqs.push_back(std::move(row));
    }
  };
  for (auto hi : d.h)
    add_map([&](std::size_t j) { return d.sc(hi, d.p[j]); });
  for (const auto& gamma : d.h_discrete) {
    Mat a = d.ad_group(gamma);
    add_map([&](std::size_t j) { return a.col(d.p[j]) - unit(d.dim(), d.p[j]); });
  }
  std::vector<Vec> out;
  for (const auto& c : kernel(eqs, np)) {
    Vec g(d.dim());
    for (std::size_t j = 0; j < np; ++j)
      g[d.p[j]] = c[j];
    out.push_back(std::move(g));
  }
  return out;
}

} // namespace

std::vector<Constraint> p_part_conditions(const GroupDiagram& d, const LDecomposition& ld,
                                          const FormBasis& fb, Trace* trace) {
  Builder b(d, fb, trace, d.g.names[ld.generator]);
  Vec x = b.from_index(ld.generator);
  AlgNum a2(ld.a * ld.a);
  if (!b.tensor()) {
    b.emit(b.ev(x, x), 4, "p:X", "<X,X> = a^2 t^2 + t^4 phi", Poly::monomial(a2, 2));
  } else {
    Vec r = fb.radial_vector();
    b.emit(b.ev(x, x), 2, "D:p", "<X,X> = t^2 psi3");
    b.emit(b.ev(x, x) - a2 * b.ev(r, r), 4, "D:po", "<X,X> - a^2<R,R>: psi3(0) = psi1(0)");
  }
  return b.out;
}

std::vector<Constraint> p0_conditions(const GroupDiagram& d, const FormBasis& fb, Trace* trace) {
  Builder b(d, fb, trace, "p0");
  std::vector<Vec> basis = p0_basis(d);
  if (basis.size() < 2) {
    b.log("gen=p0 cell=p:p0 : Ad_H-fixed part of p has dimension " +
          std::to_string(basis.size()) + ", no conditions");
    return b.out;
  }
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      Vec zi = fb.from_g(basis[i]), zj = fb.from_g(basis[j]);
      AlgNum g0 = dot(d.iota(basis[i]), d.iota(basis[j]));
      std::string pair = "Z" + std::to_string(i + 1) + ",Z" + std::to_string(j + 1);
      if (!b.tensor())
        b.emit(b.ev(zi, zj), 4, "p:p0", pair, Poly::monomial(g0, 2));
      else
        b.emit(b.ev(zi, zj) - g0 * b.ev(fb.radial_vector(), fb.radial_vector()), 4, "D:p0", pair);
    }
  return b.out;
}

std::vector<Constraint> mm_conditions(const GroupDiagram& d, const LDecomposition& ld,
                                      const FormBasis& fb, Trace* trace) {
  Builder b(d, fb, trace, d.g.names[ld.generator]);
  const long a = ld.a;
  std::vector<Vec> f;
  for (const auto& v : ld.m_fixed)
    f.push_back(b.from_m(v));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i; j < f.size(); ++j)
      b.emit(b.ev(f[i], f[j]), 0, "B:l0 x l0",
             "l0." + std::to_string(i + 1) + ",l0." + std::to_string(j + 1));
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < ld.m_planes.size(); ++j) {
      const auto& pl = ld.m_planes[j];
      std::string pair = "l0." + std::to_string(i + 1) + "," + plane_name(j, pl.speed);
      b.emit(b.ev(f[i], b.from_m(pl.y1)), ratio(pl.speed, a), "B:l0 x lj", pair + ":Y1");
      b.emit(b.ev(f[i], b.from_m(pl.y2)), ratio(pl.speed, a), "B:l0 x lj", pair + ":Y2");
    }
  for (std::size_t j = 0; j < ld.m_planes.size(); ++j) {
    const auto& pl = ld.m_planes[j];
    Vec y1 = b.from_m(pl.y1), y2 = b.from_m(pl.y2);
    Vec g11 = b.ev(y1, y1), g22 = b.ev(y2, y2), g12 = b.ev(y1, y2);
    std::string pair = plane_name(j, pl.speed);
    b.emit(g11 + g22, 0, "B:lj x lj", pair + ": g11+g22");
    b.emit(g11 - g22, ratio(2 * pl.speed, a), "B:lj x lj", pair + ": g11-g22");
    b.emit(g12, ratio(2 * pl.speed, a), "B:lj x lj", pair + ": g12");
  }
  for (std::size_t i = 0; i < ld.m_planes.size(); ++i)
    for (std::size_t j = i + 1; j < ld.m_planes.size(); ++j) {
      const auto& p1 = ld.m_planes[i];
      const auto& p2 = ld.m_planes[j];
      plane_pair(b, b.from_m(p1.y1), b.from_m(p1.y2), b.from_m(p2.y1), b.from_m(p2.y2),
                 ratio(std::labs(p1.speed - p2.speed), a), ratio(p1.speed + p2.speed, a),
                 "B:li x lj", plane_name(i, p1.speed) + "," + plane_name(j, p2.speed));
    }
  return b.out;
}

std::vector<Constraint> pm_conditions(const GroupDiagram& d, const LDecomposition& ld,
                                      const FormBasis& fb, Trace* trace) {
  Builder b(d, fb, trace, d.g.names[ld.generator]);
  const long a = ld.a;
  const bool t = b.tensor();
  const std::string pre = t ? "D:" : "C:";
  Vec x = b.from_index(ld.generator);
  std::vector<Vec> f;
  for (const auto& v : ld.m_fixed)
    f.push_back(b.from_m(v));

  // ℓ′₋₁ = {ċ, X}
  for (std::size_t i = 0; i < f.size(); ++i) {
    std::string pair = "X,l0." + std::to_string(i + 1);
    b.emit(b.ev(x, f[i]), 2, pre + "l'-1 x l0", pair);
    if (t)
      b.emit(b.ev(fb.radial_vector(), f[i]), 2, pre + "l'-1 x l0", "R," + pair.substr(2));
  }
  for (std::size_t j = 0; j < ld.m_planes.size(); ++j) {
    const auto& pl = ld.m_planes[j];
    Vec y1 = b.from_m(pl.y1), y2 = b.from_m(pl.y2);
    std::string pair = plane_name(j, pl.speed);
    Rational e = ratio(pl.speed, a);
    if (!t) {
      b.emit(b.ev(x, y1), e + 2, pre + "l'-1 x lj", "X," + pair + ":Y1");
      b.emit(b.ev(x, y2), e + 2, pre + "l'-1 x lj", "X," + pair + ":Y2");
    } else {
      Vec r = fb.radial_vector();
      Vec xh = AlgNum(1, a) * x;
      Vec r1 = b.ev(r, y1), r2 = b.ev(r, y2), x1 = b.ev(xh, y1), x2 = b.ev(xh, y2);
      b.emit(r1 + x2, e, pre + "l'-1 x lj", pair + ": <R,Y1>+<X/a,Y2>");
      b.emit(r1 - x2, e + 2, pre + "l'-1 x lj", pair + ": <R,Y1>-<X/a,Y2>");
      b.emit(r2 - x1, e, pre + "l'-1 x lj", pair + ": <R,Y2>-<X/a,Y1>");
      b.emit(r2 + x1, e + 2, pre + "l'-1 x lj", pair + ": <R,Y2>+<X/a,Y1>");
    }
  }
  // ℓ′₀
  for (std::size_t s = 0; s < ld.slice_fixed.size(); ++s) {
    Vec z = b.from_slice(ld.slice_fixed[s]);
    std::string zn = "l'0." + std::to_string(s + 1);
    for (std::size_t i = 0; i < f.size(); ++i)
      b.emit(b.ev(z, f[i]), t ? 1 : 3, pre + "l'0 x l0", zn + ",l0." + std::to_string(i + 1));
    for (std::size_t j = 0; j < ld.m_planes.size(); ++j) {
      const auto& pl = ld.m_planes[j];
      std::string pair = zn + "," + plane_name(j, pl.speed);
      Rational e = ratio(pl.speed, a) + 1;
      b.emit(b.ev(z, b.from_m(pl.y1)), e, pre + "l'0 x lj", pair + ":Y1");
      b.emit(b.ev(z, b.from_m(pl.y2)), e, pre + "l'0 x lj", pair + ":Y2");
    }
  }
  // ℓ′ᵢ
  for (std::size_t s = 0; s < ld.slice_planes.size(); ++s) {
    const auto& sp = ld.slice_planes[s];
    Vec z1 = b.from_slice(sp.y1), z2 = b.from_slice(sp.y2);
    std::string zn = slice_plane_name(s, sp.speed);
    for (std::size_t i = 0; i < f.size(); ++i) {
      std::string pair = zn + ",l0." + std::to_string(i + 1);
      Rational e = ratio(sp.speed, a) + 1;
      b.emit(b.ev(z1, f[i]), e, pre + "l'i x l0", pair + ":Z1");
      b.emit(b.ev(z2, f[i]), e, pre + "l'i x l0", pair + ":Z2");
    }
    for (std::size_t j = 0; j < ld.m_planes.size(); ++j) {
      const auto& pl = ld.m_planes[j];
      long bb = (!t && sp.speed == pl.speed) ? 3 : 1;
      plane_pair(b, z1, z2, b.from_m(pl.y1), b.from_m(pl.y2),
                 ratio(std::labs(sp.speed - pl.speed), a) + bb, ratio(sp.speed + pl.speed, a) + 1,
                 pre + "l'i x lj", zn + "," + plane_name(j, pl.speed));
    }
  }
  return b.out;
}

std::vector<Constraint> tensor_conditions(const GroupDiagram& d,
                                          const std::vector<LDecomposition>& lds,
                                          const FormBasis& fb, Trace* trace) {
  if (fb.mode != Mode::Tensor)
    throw Error(ErrorKind::Internal, "tensor conditions need a tensor-mode form basis");
  return all_conditions(d, lds, fb, trace);
}

std::vector<Constraint> all_conditions(const GroupDiagram& d,
                                       const std::vector<LDecomposition>& lds,
                                       const FormBasis& fb, Trace* trace) {
  std::vector<Constraint> out;
  auto append = [&](std::vector<Constraint> v) {
    for (auto& c : v)
      out.push_back(std::move(c));
  };
  if (fb.mode == Mode::Tensor) {
    // slice-direction rows shared by all generators
    Builder b(d, fb, trace, "slice");
    Vec r = fb.radial_vector();
    b.emit(b.ev(r, r), 2, "D:RR", "<R,R> = t^2 psi1");
    for (auto pi : d.p)
      b.emit(b.ev(r, b.from_index(pi)), 2, "D:R x p", "<R," + d.g.names[pi] + "> = t^2 psi2");
    append(std::move(b.out));
  }
  for (const auto& ld : lds) {
    append(p_part_conditions(d, ld, fb, trace));
    append(mm_conditions(d, ld, fb, trace));
    append(pm_conditions(d, ld, fb, trace));
  }
  append(p0_conditions(d, fb, trace));
  return out;
}

} // namespace cohom
