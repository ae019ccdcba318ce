#include "cohom/spheredb.hpp"
#include "cohom/error.hpp"
#include "cohom/lsplit.hpp"

#include <algorithm>
#include <array>
#include <fmt/format.h>

namespace cohom {
namespace {

using Quat = std::array<long, 4>;  // a + b i + c j + d k

constexpr Quat kOne{1, 0, 0, 0}, kI{0, 1, 0, 0}, kJ{0, 0, 1, 0}, kK{0, 0, 0, 1};
const std::array<Quat, 3> kImag{kI, kJ, kK};
const char* const kImagName[3] = {"i", "j", "k"};

Quat qmul(const Quat& x, const Quat& y) {
  return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3],
          x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1],
          x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

Quat qconj(const Quat& x) { return {x[0], -x[1], -x[2], -x[3]}; }

// 4x4 matrix of v -> q v (left) or v -> v q (right) on basis 1, i, j, k.
Mat quat_mult(const Quat& q, bool left) {
  Mat m(4, 4);
  for (std::size_t c = 0; c < 4; ++c) {
    Quat b{};
    b[c] = 1;
    Quat r = left ? qmul(q, b) : qmul(b, q);
    for (std::size_t i = 0; i < 4; ++i)
      m(i, c) = AlgNum(r[i]);
  }
  return m;
}

Mat elementary(std::size_t n, std::size_t i, std::size_t j) {
  Mat m(n, n);
  m(i, j) = AlgNum(1);
  m(j, i) = AlgNum(-1);
  return m;
}

void put_block(Mat& dst, std::size_t r0, std::size_t c0, const Mat& b, const AlgNum& s = 1) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!b(i, j).is_zero())
        dst(r0 + i, c0 + j) += s * b(i, j);
}

Mat block_diag(const Mat& a, const Mat& b) {
  Mat m(a.rows() + b.rows(), a.cols() + b.cols());
  put_block(m, 0, 0, a);
  put_block(m, a.rows(), a.cols(), b);
  return m;
}

const Mat& rot2() {
  static const Mat j = elementary(2, 1, 0);  // [[0,-1],[1,0]]
  return j;
}

// Complex N x N matrix with a single entry pattern, realified with
// interleaved (Re, Im) coordinates.
struct CEntry {
  std::size_t r, s;
  long re, im;
};

Mat realify_c(std::size_t n, const std::vector<CEntry>& entries) {
  Mat m(2 * n, 2 * n);
  for (const auto& e : entries) {
    m(2 * e.r, 2 * e.s) += AlgNum(e.re);
    m(2 * e.r, 2 * e.s + 1) += AlgNum(-e.im);
    m(2 * e.r + 1, 2 * e.s) += AlgNum(e.im);
    m(2 * e.r + 1, 2 * e.s + 1) += AlgNum(e.re);
  }
  return m;
}

struct QEntry {
  std::size_t r, s;
  Quat q;
};

// Quaternionic N x N matrix acting on column vectors by left multiplication.
Mat realify_q(std::size_t n, const std::vector<QEntry>& entries) {
  Mat m(4 * n, 4 * n);
  for (const auto& e : entries)
    put_block(m, 4 * e.r, 4 * e.s, quat_mult(e.q, true));
  return m;
}

// v -> v q on every quaternionic coordinate.
Mat right_mult(std::size_t n, const Quat& q) {
  Mat m(4 * n, 4 * n);
  const Mat b = quat_mult(q, false);
  for (std::size_t r = 0; r < n; ++r)
    put_block(m, 4 * r, 4 * r, b);
  return m;
}

struct Builder {
  std::vector<std::string> names;
  std::vector<Mat> elems, rhos;
  std::vector<std::size_t> h, p;

  void add(bool in_h, std::string name, Mat g, Mat rho) {
    (in_h ? h : p).push_back(names.size());
    names.push_back(std::move(name));
    elems.push_back(std::move(g));
    rhos.push_back(std::move(rho));
  }
  void add(bool in_h, std::string name, const Mat& g) { add(in_h, std::move(name), g, g); }

  GroupDiagram finish(const AlgNum& q_scale, const std::vector<std::string>& generators) const {
    GroupDiagram d;
    d.g.names = names;
    d.g.elements = elems;
    d.g.q_scale = q_scale;
    d.h = h;
    d.p = p;
    d.k = h;
    d.k.insert(d.k.end(), p.begin(), p.end());
    std::sort(d.k.begin(), d.k.end());
    for (auto i : d.k)
      d.slice.rho.push_back(rhos[i]);
    d.slice.dim = rhos.front().rows();
    d.slice.e1 = unit(d.slice.dim, 0);
    for (const auto& gname : generators)
      d.p_generators.push_back(d.g.index_of(gname));
    return d;
  }
};

ExpectedSplit stated(std::string gen, long a, std::vector<long> dprime, std::size_t fixed) {
  std::sort(dprime.begin(), dprime.end());
  return {std::move(gen), a, std::move(dprime), fixed};
}

std::vector<long> repeat(long d, std::size_t times) { return std::vector<long>(times, d); }

std::string ename(const char* prefix, std::size_t i, std::size_t j) {
  return fmt::format("{}E{}{}", prefix, i + 1, j + 1);
}

// ---------------------------------------------------------------- 1, 1′

void build_orthogonal(SphereAction& sa, bool spin) {
  const std::size_t n = static_cast<std::size_t>(sa.n), N = n + 1;
  Builder b;
  const AlgNum s = spin ? AlgNum(2) : AlgNum(1);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      b.add(i > 0, fmt::format("{}{}{}", spin ? "S" : "E", i + 1, j + 1), s * elementary(N, i, j));
  const std::string gen = spin ? "S12" : "E12";
  sa.diagram = b.finish(spin ? AlgNum(-1, 8) : AlgNum(-1, 2), {gen});
  sa.expected = {stated(gen, spin ? 2 : 1, {}, n - 1)};
}

// ---------------------------------------------------------------- 2, 2′, 3

// u(N) acting on C^N by A -> A + k tr(A); special = restrict to su(N).
void build_unitary(SphereAction& sa, long k, bool special) {
  const std::size_t n = static_cast<std::size_t>(sa.n), N = n + 1;
  const AlgNum center = k > 0 ? AlgNum::sqrt(static_cast<std::uint64_t>(k)) : AlgNum(0);
  Builder b;
  // diag entries given as integer multiples of i
  auto add_diag = [&](bool in_h, const std::string& name, const std::vector<long>& x) {
    std::vector<CEntry> es;
    long tr = 0;
    for (std::size_t r = 0; r < N; ++r)
      if (x[r] != 0) {
        es.push_back({r, r, 0, x[r]});
        tr += x[r];
      }
    Mat a = realify_c(N, es);
    Mat rho = a;
    if (k > 0 && tr != 0)
      for (std::size_t r = 0; r < N; ++r)
        put_block(rho, 2 * r, 2 * r, rot2(), AlgNum(k * tr));
    if (k > 0) {
      Mat extra(2, 2);
      put_block(extra, 0, 0, rot2(), center * AlgNum(tr));
      b.add(in_h, name, block_diag(a, extra), rho);
    } else {
      b.add(in_h, name, a, rho);
    }
  };
  auto add_off = [&](bool in_h, const std::string& name, std::vector<CEntry> es) {
    Mat a = realify_c(N, es);
    if (k > 0)
      b.add(in_h, name, block_diag(a, Mat(2, 2)), a);
    else
      b.add(in_h, name, a);
  };
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t s = r + 1; s < N; ++s) {
      add_off(r > 0, ename("", r, s), {{r, s, 1, 0}, {s, r, -1, 0}});
      add_off(r > 0, ename("i", r, s), {{r, s, 0, 1}, {s, r, 0, 1}});
    }
  std::vector<long> x(N, 0);
  if (special) {
    for (std::size_t r = 1; r + 1 < N; ++r) {
      std::fill(x.begin(), x.end(), 0);
      x[r] = 1;
      x[r + 1] = -1;
      add_diag(true, fmt::format("iD{}{}", r + 1, r + 2), x);
    }
    std::fill(x.begin(), x.end(), -1);
    x[0] = static_cast<long>(n);
    add_diag(false, "F", x);
  } else if (k == 0) {
    for (std::size_t r = 1; r < N; ++r) {
      std::fill(x.begin(), x.end(), 0);
      x[r] = 1;
      add_diag(true, fmt::format("iD{}", r + 1), x);
    }
    std::fill(x.begin(), x.end(), 0);
    x[0] = 1;
    add_diag(false, "F", x);
  } else {
    // h ∩ diag = su(n) ⊕ S¹_k with S¹_k = diag(nk, -(k+1), ..., -(k+1))i
    for (std::size_t r = 1; r + 1 < N; ++r) {
      std::fill(x.begin(), x.end(), 0);
      x[r] = 1;
      x[r + 1] = -1;
      add_diag(true, fmt::format("iD{}{}", r + 1, r + 2), x);
    }
    std::fill(x.begin(), x.end(), -(k + 1));
    x[0] = static_cast<long>(n) * k;
    add_diag(true, "S1k", x);
    std::fill(x.begin(), x.end(), 0);
    x[0] = 1;
    add_diag(false, "F", x);
  }
  sa.diagram = b.finish(AlgNum(-1, 4), {"E12", "F"});
  const std::size_t fixed_e12 = 2 * n - 2;
  if (special)
    sa.expected = {stated("E12", 1, {1}, fixed_e12), stated("F", static_cast<long>(n), repeat(1, n), 0)};
  else if (k == 0)
    sa.expected = {stated("E12", 1, {1}, fixed_e12), stated("F", 1, {}, 2 * n)};
  else
    sa.expected = {stated("E12", 1, {1}, fixed_e12), stated("F", k + 1, repeat(k, n), 0)};
}

// ---------------------------------------------------------------- 4, 5, 5′, 6, 6′

enum class QuatExtra { None, Sp1, U1 };

void build_symplectic(SphereAction& sa, QuatExtra extra, long k) {
  const std::size_t n = static_cast<std::size_t>(sa.n), N = n + 1;
  const std::size_t V = 4 * N;
  Builder b;
  auto lift = [&](const Mat& a, const Mat& tail, const Mat& tail_rho) {
    // g element and ρ for (A, tail)
    if (extra == QuatExtra::None)
      return std::make_pair(a, a);
    return std::make_pair(block_diag(a, tail), Mat(a + tail_rho));
  };
  const std::size_t tail_dim = extra == QuatExtra::Sp1 ? 4 : extra == QuatExtra::U1 ? 2 : 0;
  const Mat zero_tail(tail_dim, tail_dim), zero_rho(V, V);
  auto add_plain = [&](bool in_h, const std::string& name, const std::vector<QEntry>& es) {
    auto [g, rho] = lift(realify_q(N, es), zero_tail, zero_rho);
    b.add(in_h, name, g, rho);
  };
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t s = r + 1; s < N; ++s) {
      add_plain(r > 0, ename("", r, s), {{r, s, kOne}, {s, r, {-1, 0, 0, 0}}});
      for (int q = 0; q < 3; ++q)
        add_plain(r > 0, ename(kImagName[q], r, s), {{r, s, kImag[q]}, {s, r, kImag[q]}});
    }
  for (std::size_t r = 1; r < N; ++r)
    for (int q = 0; q < 3; ++q)
      add_plain(true, fmt::format("{}D{}", kImagName[q], r + 1), {{r, r, kImag[q]}});

  std::vector<ExpectedSplit> expected{stated("E12", 1, {1, 1, 1}, 4 * n - 4)};
  std::vector<std::string> gens{"E12"};
  switch (extra) {
  case QuatExtra::None:
    for (int q = 0; q < 3; ++q) {
      std::string name = fmt::format("F{}", q + 1);
      add_plain(false, name, {{0, 0, kImag[q]}});
      gens.push_back(name);
      expected.push_back(stated(name, 1, {1}, 4 * n));
    }
    break;
  case QuatExtra::Sp1:
    // (A, q) acts as v -> A v - v q; Δsp(1) = (sD1, s), complement (sD1, -s)
    for (int sign : {1, -1})
      for (int q = 0; q < 3; ++q) {
        Mat a = realify_q(N, {{0, 0, kImag[q]}});
        Mat tail = AlgNum(sign) * quat_mult(kImag[q], true);
        Mat rho = AlgNum(-sign) * right_mult(N, kImag[q]);
        auto [g, r] = lift(a, tail, rho);
        b.add(sign > 0, fmt::format("{}{}", sign > 0 ? "H" : "F", q + 1), g, r);
      }
    gens.push_back("F1");
    expected.push_back(stated("F1", 2, {}, 4 * n + 2));
    break;
  case QuatExtra::U1: {
    // (A, w) acts as v -> A v - k w v i; the u(1) block is weighted so that
    // Q(u, u) = k Q(iD1, iD1), which makes F1 = (iD1, -1) orthogonal to h.
    const AlgNum s = AlgNum::sqrt(static_cast<std::uint64_t>(2 * k));
    const Mat ri = right_mult(N, kI);
    auto add_u = [&](bool in_h, const std::string& name, long adiag, long w) {
      Mat a = realify_q(N, {{0, 0, {0, adiag, 0, 0}}});
      Mat tail = AlgNum(w) * s * rot2();
      Mat rho = AlgNum(-k * w) * ri;
      auto [g, r] = lift(a, tail, rho);
      b.add(in_h, name, g, r);
    };
    add_u(true, "H1", k, 1);
    add_u(false, "F1", 1, -1);
    add_plain(false, "F2", {{0, 0, kJ}});
    add_plain(false, "F3", {{0, 0, kK}});
    gens.push_back("F1");
    gens.push_back("F2");
    if (k == 1)
      expected.push_back(stated("F1", 2, {}, 4 * n + 2));
    else
      expected.push_back(stated("F1", k + 1, {k - 1}, 4 * n));
    expected.push_back(stated("F2", 1, {1}, 4 * n));
    break;
  }
  }
  sa.diagram = b.finish(AlgNum(-1, 8), gens);
  sa.expected = std::move(expected);
}

// ---------------------------------------------------------------- 7

void build_g2(SphereAction& sa) {
  // Upper triangle of the general element of g2 ⊂ so(7) in the parameters
  // x1..x6, y1..y6, α1, α2 (indices 0..13 below).
  enum { X1, X2, X3, X4, X5, X6, Y1, Y2, Y3, Y4, Y5, Y6, A1, A2, NP };
  struct Slot {
    std::size_t i, j;
    std::vector<std::pair<int, long>> terms;
  };
  const std::vector<Slot> slots{
      {1, 2, {{X1, 1}, {X2, 1}}}, {1, 3, {{Y1, 1}, {Y2, 1}}}, {1, 4, {{X3, 1}, {X4, 1}}},
      {1, 5, {{Y3, 1}, {Y4, 1}}}, {1, 6, {{X5, 1}, {X6, 1}}}, {1, 7, {{Y5, 1}, {Y6, 1}}},
      {2, 3, {{A1, 1}}},          {2, 4, {{Y5, -1}}},         {2, 5, {{X5, 1}}},
      {2, 6, {{Y3, -1}}},         {2, 7, {{X3, 1}}},          {3, 4, {{X6, 1}}},
      {3, 5, {{Y6, 1}}},          {3, 6, {{X4, -1}}},         {3, 7, {{Y4, -1}}},
      {4, 5, {{A2, 1}}},          {4, 6, {{Y1, 1}}},          {4, 7, {{X1, -1}}},
      {5, 6, {{X2, 1}}},          {5, 7, {{Y2, 1}}},          {6, 7, {{A1, 1}, {A2, 1}}},
  };
  auto element = [&](const std::vector<std::pair<int, long>>& params) {
    Mat m(7, 7);
    for (const auto& sl : slots)
      for (const auto& [pi, c] : sl.terms)
        for (const auto& [qi, v] : params)
          if (pi == qi)
            m = m + AlgNum(c * v) * elementary(7, sl.i - 1, sl.j - 1);
    return m;
  };
  Builder b;
  b.add(true, "A1", element({{A1, 1}}));
  b.add(true, "A2", element({{A2, 1}}));
  const std::pair<int, const char*> pairs[] = {{X1, "X1"}, {Y1, "Y1"}, {X3, "X3"},
                                                {Y3, "Y3"}, {X5, "X5"}, {Y5, "Y5"}};
  for (const auto& [lo, name] : pairs)
    b.add(true, fmt::format("H{}", name), element({{lo, 1}, {lo + 1, -1}}));
  for (const auto& [lo, name] : pairs)
    b.add(false, name, element({{lo, 1}, {lo + 1, 1}}));
  sa.diagram = b.finish(AlgNum(-1, 2), {"X1"});
  sa.expected = {stated("X1", 2, {1, 1}, 1)};
}

// ---------------------------------------------------------------- 8

using Oct = std::array<long, 8>;

// Cayley–Dickson: (a, b)(c, d) = (ac - d̄ b, d a + b c̄) on basis 1, i, j, k, ℓ, iℓ, jℓ, kℓ.
Oct omul(const Oct& x, const Oct& y) {
  Quat a{x[0], x[1], x[2], x[3]}, bq{x[4], x[5], x[6], x[7]};
  Quat c{y[0], y[1], y[2], y[3]}, d{y[4], y[5], y[6], y[7]};
  Quat l = qmul(a, c), l2 = qmul(qconj(d), bq);
  Quat r = qmul(d, a), r2 = qmul(bq, qconj(c));
  Oct o{};
  for (int i = 0; i < 4; ++i) {
    o[i] = l[i] - l2[i];
    o[4 + i] = r[i] + r2[i];
  }
  return o;
}

Mat oct_left(std::size_t a) {
  Mat m(8, 8);
  Oct ea{};
  ea[a] = 1;
  for (std::size_t c = 0; c < 8; ++c) {
    Oct eb{};
    eb[c] = 1;
    Oct r = omul(ea, eb);
    for (std::size_t i = 0; i < 8; ++i)
      m(i, c) = AlgNum(r[i]);
  }
  return m;
}

// Splits span(elements) into the stabilizer of e1 and its Q-orthogonal complement.
std::pair<std::vector<Mat>, std::vector<Mat>> stabilizer_split(const std::vector<Mat>& elems,
                                                               const AlgNum& q_scale) {
  const std::size_t n = elems.size(), dim = elems.front().rows();
  const Vec e1 = unit(dim, 0);
  std::vector<Vec> eqs(dim, Vec(n));
  for (std::size_t c = 0; c < n; ++c) {
    Vec v = elems[c] * e1;
    for (std::size_t i = 0; i < dim; ++i)
      eqs[i][c] = v[i];
  }
  std::vector<Mat> hs;
  std::vector<Vec> hcoords = kernel(eqs, n);
  for (const auto& c : hcoords)
    hs.push_back(combine(elems, c));
  std::vector<Vec> orth;
  for (const auto& hm : hs) {
    Vec row(n);
    for (std::size_t c = 0; c < n; ++c)
      row[c] = q_scale * (hm * elems[c]).trace();
    orth.push_back(std::move(row));
  }
  std::vector<Mat> ps;
  for (const auto& c : kernel(orth, n))
    ps.push_back(combine(elems, c));
  return {hs, ps};
}

// p basis element Z with ρ(Z)e1 = scale · e_{r+1}, for r = 1 .. dim-1.
std::vector<Mat> p_by_action(const std::vector<Mat>& ps, const AlgNum& scale) {
  const std::size_t dim = ps.front().rows(), n = ps.size();
  Mat iota(dim, n);
  for (std::size_t c = 0; c < n; ++c) {
    Vec v = ps[c] * unit(dim, 0);
    for (std::size_t i = 0; i < dim; ++i)
      iota(i, c) = v[i];
  }
  std::vector<Mat> out;
  for (std::size_t r = 1; r < dim; ++r) {
    auto c = solve(iota, scale * unit(dim, r));
    if (!c)
      throw Error(ErrorKind::Internal, "action fields do not span e1^⊥");
    out.push_back(combine(ps, *c));
  }
  return out;
}

void build_spin7(SphereAction& sa) {
  std::vector<Mat> elems;
  for (std::size_t a = 1; a < 8; ++a)
    for (std::size_t c = a + 1; c < 8; ++c)
      elems.push_back(oct_left(a) * oct_left(c));
  const AlgNum qs(-1, 2);
  auto [hs, ps] = stabilizer_split(elems, qs);
  Builder b;
  for (std::size_t i = 0; i < hs.size(); ++i)
    b.add(true, fmt::format("G{}", i + 1), hs[i]);
  // X = 3 ι⁻¹(e_r) generates a closed circle (speeds 3, 1, 1, 1)
  auto xs = p_by_action(ps, AlgNum(3));
  for (std::size_t r = 0; r < xs.size(); ++r)
    b.add(false, fmt::format("X{}", r + 2), xs[r]);
  sa.diagram = b.finish(qs, {"X2"});
  sa.expected = {stated("X2", 1, {1}, 4)};
}

// ---------------------------------------------------------------- 9

struct Entry16 {
  long c;
  std::size_t i, j;
};

Mat so16(const std::vector<Entry16>& es) {
  Mat m(16, 16);
  for (const auto& e : es)
    m = m + AlgNum(e.c) * elementary(16, e.i - 1, e.j - 1);
  return m;
}

void build_spin9(SphereAction& sa) {
  const std::vector<std::vector<Entry16>> z{
      {{2, 1, 2}, {1, 9, 10}, {1, 11, 12}, {1, 13, 14}, {-1, 15, 16}},
      {{2, 1, 3}, {1, 9, 11}, {-1, 10, 12}, {1, 13, 15}, {1, 14, 16}},
      {{2, 1, 4}, {1, 9, 12}, {1, 10, 11}, {1, 13, 16}, {-1, 14, 15}},
      {{2, 1, 5}, {1, 9, 13}, {-1, 10, 14}, {-1, 11, 15}, {-1, 12, 16}},
      {{2, 1, 6}, {1, 9, 14}, {1, 10, 13}, {-1, 11, 16}, {1, 12, 15}},
      {{2, 1, 7}, {1, 9, 15}, {1, 10, 16}, {1, 11, 13}, {-1, 12, 14}},
      {{2, 1, 8}, {1, 9, 16}, {-1, 10, 15}, {1, 11, 14}, {1, 12, 13}},
  };
  // 2·S_{r9}; the half-scaled matrices rotate at speed 1/2
  const std::vector<std::vector<Entry16>> s{
      {{1, 1, 9}, {1, 2, 10}, {1, 3, 11}, {1, 4, 12}, {1, 5, 13}, {1, 6, 14}, {1, 7, 15}, {1, 8, 16}},
      {{1, 1, 10}, {-1, 2, 9}, {-1, 3, 12}, {1, 4, 11}, {-1, 5, 14}, {1, 6, 13}, {1, 7, 16}, {-1, 8, 15}},
      {{1, 1, 11}, {1, 2, 12}, {-1, 3, 9}, {-1, 4, 10}, {-1, 5, 15}, {-1, 6, 16}, {1, 7, 13}, {1, 8, 14}},
      {{1, 1, 12}, {-1, 2, 11}, {1, 3, 10}, {-1, 4, 9}, {-1, 5, 16}, {1, 6, 15}, {-1, 7, 14}, {1, 8, 13}},
      {{1, 1, 13}, {1, 2, 14}, {1, 3, 15}, {1, 4, 16}, {-1, 5, 9}, {-1, 6, 10}, {-1, 7, 11}, {-1, 8, 12}},
      {{1, 1, 14}, {-1, 2, 13}, {1, 3, 16}, {-1, 4, 15}, {1, 5, 10}, {-1, 6, 9}, {1, 7, 12}, {-1, 8, 11}},
      {{1, 1, 15}, {-1, 2, 16}, {-1, 3, 13}, {1, 4, 14}, {1, 5, 11}, {-1, 6, 12}, {-1, 7, 9}, {1, 8, 10}},
      {{1, 1, 16}, {1, 2, 15}, {-1, 3, 14}, {-1, 4, 13}, {1, 5, 12}, {1, 6, 11}, {-1, 7, 10}, {-1, 8, 9}},
  };
  std::vector<Mat> ps;
  std::vector<std::string> pnames;
  for (std::size_t i = 0; i < z.size(); ++i) {
    ps.push_back(so16(z[i]));
    pnames.push_back(fmt::format("Z{}", i + 2));
  }
  for (std::size_t i = 0; i < s.size(); ++i) {
    ps.push_back(so16(s[i]));
    pnames.push_back(fmt::format("S{}9", i + 1));
  }
  // spin(9) is generated by p: close the span under brackets
  SpanBasis span(256);
  std::vector<Mat> all;
  for (const auto& m : ps)
    if (span.add(m.flat()))
      all.push_back(m);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Mat c = bracket(all[i], all[j]);
      if (span.add(c.flat()))
        all.push_back(std::move(c));
      if (all.size() > 36)
        throw Error(ErrorKind::Internal, "spin(9) data does not close in dimension 36");
    }
  std::vector<Mat> hs = stabilizer_split(all, AlgNum(-1, 2)).first;
  Builder b;
  for (std::size_t i = 0; i < hs.size(); ++i)
    b.add(true, fmt::format("H{}", i + 1), hs[i]);
  for (std::size_t i = 0; i < ps.size(); ++i)
    b.add(false, pnames[i], ps[i]);
  sa.diagram = b.finish(AlgNum(-1, 2), {"Z2", "S19"});
  sa.expected = {stated("Z2", 2, {1, 1, 1, 1}, 6), stated("S19", 1, repeat(1, 7), 0)};
}

const std::vector<FamilyInfo> kFamilies{
    {Family::SO, "SO", "SO(n+1)/SO(n)", true, false},
    {Family::Spin, "Spin", "Spin(n+1)/Spin(n)", true, false},
    {Family::U, "U", "U(n+1)/U(n)", true, false},
    {Family::U_k, "U_k", "U(n+1)/U(n)_k", true, true},
    {Family::SU, "SU", "SU(n+1)/SU(n)", true, false},
    {Family::Sp, "Sp", "Sp(n+1)/Sp(n)", true, false},
    {Family::SpSp1, "SpSp1", "Sp(n+1)·Sp(1)/Sp(n)·ΔSp(1)", true, false},
    {Family::SpSp1_ineff, "SpSp1_ineff", "Sp(n+1)×Sp(1)/Sp(n)×ΔSp(1)", true, false},
    {Family::SpU1, "SpU1", "Sp(n+1)·U(1)/Sp(n)·ΔU(1)", true, false},
    {Family::SpU1_k, "SpU1_k", "Sp(n+1)×U(1)/Sp(n)·ΔU(1)_k", true, true},
    {Family::G2, "G2", "G2/SU(3)", false, false},
    {Family::Spin7, "Spin7", "Spin(7)/G2", false, false},
    {Family::Spin9, "Spin9", "Spin(9)/Spin(7)", false, false},
};

} // namespace

const std::vector<FamilyInfo>& families() { return kFamilies; }

const FamilyInfo& family_info(Family f) {
  for (const auto& fi : kFamilies)
    if (fi.family == f)
      return fi;
  throw Error(ErrorKind::Internal, "unknown family");
}

Family family_from_name(const std::string& name) {
  for (const auto& fi : kFamilies)
    if (fi.name == name)
      return fi.family;
  throw Error(ErrorKind::Usage, "unknown sphere family '" + name + "'");
}

SphereAction get_action(Family family, int n, int k) {
  const FamilyInfo& fi = family_info(family);
  if (fi.uses_n && (n < 1 || n > kMaxSphereN))
    throw Error(ErrorKind::Usage, fmt::format("{}: n must be in 1..{}", fi.name, kMaxSphereN));
  if (fi.uses_k && (k < 1 || k > kMaxSphereK))
    throw Error(ErrorKind::Usage, fmt::format("{}: k must be in 1..{}", fi.name, kMaxSphereK));
  SphereAction sa;
  sa.family = family;
  sa.n = fi.uses_n ? n : 0;
  sa.k = fi.uses_k ? k : 0;
  switch (family) {
  case Family::SO: build_orthogonal(sa, false); break;
  case Family::Spin: build_orthogonal(sa, true); break;
  case Family::U: build_unitary(sa, 0, false); break;
  case Family::U_k: build_unitary(sa, k, false); break;
  case Family::SU: build_unitary(sa, 0, true); break;
  case Family::Sp: build_symplectic(sa, QuatExtra::None, 0); break;
  case Family::SpSp1:
  case Family::SpSp1_ineff: build_symplectic(sa, QuatExtra::Sp1, 0); break;
  case Family::SpU1: build_symplectic(sa, QuatExtra::U1, 1); break;
  case Family::SpU1_k: build_symplectic(sa, QuatExtra::U1, k); break;
  case Family::G2: build_g2(sa); break;
  case Family::Spin7: build_spin7(sa); break;
  case Family::Spin9: build_spin9(sa); break;
  }
  require_valid(sa.diagram);
  for (auto gi : sa.diagram.p_generators) {
    LDecomposition ld = decompose(sa.diagram, gi);
    std::vector<long> ds;
    for (const auto& pl : ld.slice_planes)
      ds.push_back(pl.speed);
    sa.computed.push_back(stated(sa.diagram.g.names[gi], ld.a, ds, ld.slice_fixed.size()));
  }
  return sa;
}

} // namespace cohom
