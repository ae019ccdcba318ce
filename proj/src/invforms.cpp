#include "cohom/invforms.hpp"
#include "cohom/error.hpp"

namespace cohom {

Vec FormBasis::from_g(const Vec& gcoords) const {
  Vec out(width());
  std::vector<bool> used(gcoords.size(), false);
  for (std::size_t i = 0; i < n_index.size(); ++i) {
    out[i] = gcoords[n_index[i]];
    used[n_index[i]] = true;
  }
  for (std::size_t i = 0; i < gcoords.size(); ++i)
    if (!used[i] && !gcoords[i].is_zero())
      throw Error(ErrorKind::Invariant, "vector has a component outside n");
  return out;
}

Vec FormBasis::radial_vector() const {
  if (mode != Mode::Tensor)
    throw Error(ErrorKind::Internal, "radial direction exists only in tensor mode");
  return unit(width(), radial());
}

Vec FormBasis::evaluate(const Vec& a, const Vec& b) const {
  if (a.size() != width() || b.size() != width())
    throw Error(ErrorKind::Invariant, "evaluate: vector outside the form domain");
  Vec row(r());
  for (std::size_t m = 0; m < r(); ++m) {
    const Mat& f = forms[m];
    AlgNum s;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero())
        continue;
      for (std::size_t j = 0; j < b.size(); ++j)
        if (!b[j].is_zero() && !f(i, j).is_zero())
          s += a[i] * f(i, j) * b[j];
    }
    row[m] = s;
  }
  return row;
}

std::vector<std::string> FormBasis::describe(std::size_t m) const {
  std::vector<std::string> out;
  const Mat& f = forms[m];
  for (std::size_t i = 0; i < width(); ++i)
    for (std::size_t j = i; j < width(); ++j)
      if (!f(i, j).is_zero())
        out.push_back("<" + coord_names[i] + "," + coord_names[j] + "> = " + f(i, j).str());
  return out;
}

namespace {

struct SymIndex {
  std::size_t w;
  std::size_t operator()(std::size_t i, std::size_t j) const {
    if (i > j)
      std::swap(i, j);
    return i * w - i * (i - 1) / 2 + (j - i);
  }
  std::size_t count() const { return w * (w + 1) / 2; }
};

} // namespace

FormBasis invariant_forms(const GroupDiagram& d, Mode mode) {
  FormBasis fb;
  fb.mode = mode;
  fb.n_index = d.p;
  fb.n_index.insert(fb.n_index.end(), d.m.begin(), d.m.end());
  for (auto i : fb.n_index)
    fb.coord_names.push_back(d.g.names[i]);
  if (mode == Mode::Tensor)
    fb.coord_names.push_back("dc");
  const std::size_t w = fb.width(), nn = fb.n_dim();
  SymIndex idx{w};

  // Operators on the form domain: ad_Z for Z in h (infinitesimal) and Ad(γ).
  auto restrict = [&](const Mat& on_g, bool group) {
    Mat a(w, w);
    for (std::size_t j = 0; j < nn; ++j)
      for (std::size_t i = 0; i < nn; ++i)
        a(i, j) = on_g(fb.n_index[i], fb.n_index[j]);
    if (mode == Mode::Tensor && group)
      a(nn, nn) = AlgNum(1);
    return a;
  };

  std::vector<Vec> eqs;
  for (auto hi : d.h) {
    Mat adg(d.dim(), d.dim());
    for (std::size_t j = 0; j < d.dim(); ++j)
      for (std::size_t i = 0; i < d.dim(); ++i)
        adg(i, j) = d.sc(hi, j)[i];
    Mat a = restrict(adg, false);
    // (AᵀB + BA)_{ij} = Σ_k A_ki B_kj + B_ik A_kj
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = i; j < w; ++j) {
        Vec row(idx.count());
        for (std::size_t k = 0; k < w; ++k) {
          if (!a(k, i).is_zero())
            row[idx(k, j)] += a(k, i);
          if (!a(k, j).is_zero())
            row[idx(i, k)] += a(k, j);
        }
        if (!is_zero(row))
          eqs.push_back(std::move(row));
      }
  }
  for (const auto& gamma : d.h_discrete) {
    Mat gm = restrict(d.ad_group(gamma), true);
    // (GᵀBG − B)_{ij} = Σ_{k,l} G_ki B_kl G_lj − B_ij
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = i; j < w; ++j) {
        Vec row(idx.count());
        for (std::size_t k = 0; k < w; ++k) {
          if (gm(k, i).is_zero())
            continue;
          for (std::size_t l = 0; l < w; ++l)
            if (!gm(l, j).is_zero())
              row[idx(k, l)] += gm(k, i) * gm(l, j);
        }
        row[idx(i, j)] -= AlgNum(1);
        if (!is_zero(row))
          eqs.push_back(std::move(row));
      }
  }

  std::vector<Vec> sol = kernel(eqs, idx.count());
  if (sol.empty())
    throw Error(ErrorKind::Invariant, "no Ad_H-invariant symmetric forms exist on n");
  for (std::size_t m = 0; m < sol.size(); ++m) {
    Mat f(w, w);
    for (std::size_t i = 0; i < w; ++i)
      for (std::size_t j = i; j < w; ++j) {
        f(i, j) = sol[m][idx(i, j)];
        f(j, i) = f(i, j);
      }
    fb.forms.push_back(std::move(f));
    fb.labels.push_back("B" + std::to_string(m + 1));
  }
  return fb;
}

} // namespace cohom
