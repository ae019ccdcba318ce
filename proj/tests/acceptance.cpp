// Acceptance harness: one PASS/FAIL line per criterion; exits nonzero if any fails.

#include "cohom/cli.hpp"
#include "cohom/document.hpp"
#include "cohom/error.hpp"
#include "cohom/pipeline.hpp"
#include "cohom/scalarparse.hpp"
#include "cohom/spheredb.hpp"
#include "support.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include <unistd.h>

using namespace cohom;
using test_support::fixture;

namespace {

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("violated: " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

const std::vector<const char*> kFixtures = {"berger.json", "su3_u2.json", "kervaire.json",
                                            "example4_n2.json"};

std::size_t unknown(const Report& r, const std::vector<std::string>& entries) {
  for (std::size_t i = 0; i < r.unknowns.size(); ++i)
    if (r.unknowns[i].entries == entries)
      return i;
  throw std::runtime_error("no unknown with entries " + fmt::format("{}", entries));
}

Constraint cond(std::size_t r, std::vector<std::pair<std::size_t, long>> terms, long e,
                Poly offset = {}) {
  Constraint c;
  c.row = Vec(r);
  for (auto [i, v] : terms)
    c.row[i] = AlgNum(v);
  c.exponent = e;
  c.offset = std::move(offset);
  return c;
}

Poly t_pow(std::size_t k, long c = 1) { return Poly::monomial(AlgNum(c), k); }

bool same_rows(const CanonicalSystem& a, const CanonicalSystem& b) {
  if (a.rows.size() != b.rows.size())
    return false;
  for (std::size_t k = 0; k < a.rows.size(); ++k)
    if (a.rows[k].b != b.rows[k].b || a.rows[k].e != b.rows[k].e ||
        a.rows[k].particular != b.rows[k].particular)
      return false;
  return true;
}

// The single direction touching unknown i, if it touches nothing else.
std::optional<long> isolated(const CanonicalSystem& sys, std::size_t i) {
  std::optional<long> e;
  for (const auto& d : sys.directions) {
    if (d.w[i].is_zero())
      continue;
    if (e)
      return std::nullopt;
    for (std::size_t j = 0; j < d.w.size(); ++j)
      if (j != i && !d.w[j].is_zero())
        return std::nullopt;
    e = d.e;
  }
  return e;
}

// ------------------------------------------------------------------ 1

Verdict berger_end_to_end() {
  Verdict v;
  Analysis an = analyze_file(fixture("berger.json"));
  const Report& rep = an.report;
  const CanonicalSystem& sys = an.solved.system;
  v.check(rep.r() == 7, fmt::format("r = {} (want 7)", rep.r()));

  const std::size_t f = unknown(rep, {"<K2,K2> = 1", "<K3,K3> = 1"});
  const std::size_t h11 = unknown(rep, {"<K2,V2> = 1", "<K3,V3> = 1"});
  const std::size_t h12 = unknown(rep, {"<K2,V3> = 1", "<K3,V2> = -1"});
  const std::vector<std::size_t> g = {unknown(rep, {"<V1,V1> = 1"}),
                                      unknown(rep, {"<V2,V2> = 1", "<V3,V3> = 1"}),
                                      unknown(rep, {"<V4,V4> = 1", "<V5,V5> = 1"}),
                                      unknown(rep, {"<V6,V6> = 1", "<V7,V7> = 1"})};
  auto in_g = [&](std::size_t i) { return std::find(g.begin(), g.end(), i) != g.end(); };
  auto classify = [&](const Vec& w) {
    bool inside = true, touches = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i].is_zero())
        continue;
      if (in_g(i))
        touches = true;
      else
        inside = false;
    }
    return std::make_pair(touches, inside);
  };

  std::vector<long> m_exps;
  for (const auto& row : sys.rows) {
    auto [touches, inside] = classify(row.b);
    v.check(!touches || inside, "a canonical row mixes the m-block with other unknowns");
    if (touches && inside)
      m_exps.push_back(row.e);
  }
  std::sort(m_exps.begin(), m_exps.end());
  v.check(m_exps == std::vector<long>{0, 2, 4, 6},
          fmt::format("m-block exponents {} (want [0, 2, 4, 6])", m_exps));
  v.note(fmt::format("m-block canonical exponents {}", m_exps));

  // solved table: g = A diag(t^e) phi (computed) versus g = P diag(t^e') psi (published)
  std::vector<const Direction*> dirs;
  for (const auto& d : sys.directions) {
    auto [touches, inside] = classify(d.w);
    v.check(!touches || inside, "a free direction mixes the m-block with other unknowns");
    if (touches && inside)
      dirs.push_back(&d);
  }
  const std::vector<std::vector<std::string>> ref = {{"1/32", "3/16", "3/16", "-1/32"},
                                                       {"1/32", "1/16", "0", "1/32"},
                                                       {"1/32", "-5/16", "-5/16", "-1/32"},
                                                       {"1/32", "-15/16", "0", "1/32"}};
  const std::vector<long> ref_e = {0, 2, 4, 6};
  if (dirs.size() == 4) {
    Mat a(4, 4), p(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        a(i, j) = dirs[j]->w[g[i]];
        p(i, j) = parse_scalar(ref[i][j]);
      }
    try {
      Mat n = inverse(a) * p;  // phi = D^-1 N D' psi
      bool consistent = true;
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t j = 0; j < 4; ++j)
          if (!n(k, j).is_zero()) {
            long gap = ref_e[j] - dirs[k]->e;
            consistent = consistent && gap >= 0 && gap % 2 == 0;
          }
      std::vector<Vec> rows;
      for (std::size_t k = 0; k < 4; ++k)
        rows.push_back(n.row(k));
      const bool invertible = rref(rows, 4).rank() == 4;
      v.check(consistent, "rebasis has negative or odd t-powers");
      v.check(invertible, "rebasis is singular");
      v.check(a * n == p, "rebasis does not reproduce the table");
      std::string shown;
      for (std::size_t k = 0; k < 4; ++k) {
        shown += k ? "; " : "";
        for (std::size_t j = 0; j < 4; ++j)
          shown += (j ? ", " : "") + format_scalar(n(k, j));
      }
      v.note("phi rebasis (upper triangular, exact): [" + shown + "]");
    } catch (const Error& e) {
      v.check(false, std::string("solved m-block is singular: ") + e.what());
    }
  } else {
    v.check(false, fmt::format("{} m-block directions (want 4)", dirs.size()));
  }

  const auto up = sys.particular_solution();
  auto ef = isolated(sys, f), e11 = isolated(sys, h11), e12 = isolated(sys, h12);
  v.check(ef == 4 && up[f] == t_pow(2), "f is not t^2 + t^4 phi");
  v.check(e11 == 4 && up[h11].is_zero(), "h11 is not in t^4 even");
  v.check(e12 == 5 && up[h12].is_zero(), "h12 is not in t^5 even");
  v.check(rep.closure_failures == 0, "closure failures");
  v.note(fmt::format("f = {}, h11 = {}, h12 = {}", solved_text(rep, f), solved_text(rep, h11),
                     solved_text(rep, h12)));
  return v;
}

// ------------------------------------------------------------------ 2, 3

Verdict compare_with(const char* file, std::size_t r_want,
                     const std::function<std::vector<Constraint>(const Report&)>& expected) {
  Verdict v;
  Analysis an = analyze_file(fixture(file));
  v.check(an.report.r() == r_want, fmt::format("r = {} (want {})", an.report.r(), r_want));
  if (an.report.r() != r_want)
    return v;
  CanonicalSystem want = canonicalize(expected(an.report), r_want).system;
  v.check(same_module(want, an.solved.system) && same_module(an.solved.system, want),
          "solution module differs from the stated conditions");
  v.check(same_rows(want, an.solved.system), "canonical rows differ from the stated conditions'");
  std::string rows;
  for (std::size_t k = 0; k < an.report.rows.size(); ++k) {
    ReportConstraint c;
    c.row = an.report.rows[k].b;
    c.exponent = std::to_string(an.report.rows[k].e);
    c.offset = an.report.rows[k].particular;
    rows += (k ? "; " : "") + constraint_text(c, an.report.labels());
  }
  v.note("canonical: " + rows);
  return v;
}

Verdict example_two() {
  return compare_with("su3_u2.json", 3, [](const Report& rep) {
    std::size_t f1 = unknown(rep, {"<E23,E23> = 1", "<iE23,iE23> = 1"});
    std::size_t f2 = unknown(rep, {"<E12,E12> = 1", "<iE12,iE12> = 1"});
    std::size_t f3 = unknown(rep, {"<E13,E13> = 1", "<iE13,iE13> = 1"});
    return std::vector<Constraint>{cond(3, {{f1, 1}}, 4, t_pow(2, 4)),
                                   cond(3, {{f2, 1}, {f3, 1}}, 0),
                                   cond(3, {{f2, 1}, {f3, -1}}, 1)};
  });
}

Verdict example_one() {
  return compare_with("kervaire.json", 6, [](const Report& rep) {
    std::size_t f1 = unknown(rep, {"<X1,X1> = 1"}), f2 = unknown(rep, {"<X2,X2> = 1"}),
                f3 = unknown(rep, {"<X3,X3> = 1"}), g = unknown(rep, {"<Y,Y> = 1"}),
                h1 = unknown(rep, {"<X1,Y> = 1"}), h2 = unknown(rep, {"<X2,X3> = 1"});
    return std::vector<Constraint>{
        cond(6, {{f1, 1}, {f3, 1}}, 0), cond(6, {{f1, 1}, {f3, -1}}, 4), cond(6, {{g, 1}}, 0),
        cond(6, {{f2, 1}}, 4, t_pow(2)), cond(6, {{h1, 1}}, 2), cond(6, {{h2, 1}}, 4)};
  });
}

// ------------------------------------------------------------------ 4

Verdict example_four() {
  Verdict v;
  Analysis an = analyze_file(fixture("example4_n2.json"));
  const LDecomposition& ld = an.decompositions.at(0);
  std::vector<std::string> exps;
  std::vector<long> speeds;
  for (const auto& pl : ld.m_planes) {
    speeds.push_back(pl.speed);
    Rational e(2 * pl.speed, ld.a);
    e.canonicalize();
    exps.push_back(e.get_str());
  }
  std::sort(speeds.begin(), speeds.end());
  std::sort(exps.begin(), exps.end());
  const std::vector<std::string> want = {"1", "2", "3", "4", "5", "6"};
  v.check(exps == want, fmt::format("multiset of 2d/a over m-planes is {} (want {})", exps, want));

  // representation-theory prediction for n = 2: weights 4n - 2i with multiplicity i
  // (i = 1..2n-2) and weight 2 with multiplicity 2n-2
  const int n = 2;
  std::vector<long> predicted;
  for (int i = 1; i <= 2 * n - 2; ++i)
    predicted.insert(predicted.end(), i, 4 * n - 2 * i);
  predicted.insert(predicted.end(), 2 * n - 2, 2);
  std::sort(predicted.begin(), predicted.end());
  v.note(fmt::format("a = {}; m-plane speeds {} (Clebsch-Gordan prediction {}: {})", ld.a, speeds,
                     predicted, speeds == predicted ? "match" : "MISMATCH"));
  std::set<long> realized;
  for (const auto& row : an.solved.system.rows)
    realized.insert(row.e);
  v.note(fmt::format("t-exponents realized by the canonical system: {}", realized));
  return v;
}

// ------------------------------------------------------------------ 5

std::string split_str(const ExpectedSplit& s) {
  return fmt::format("a={} d'={{{}}}", s.a, fmt::join(s.dprime, ","));
}

Verdict sphere_database() {
  Verdict v;
  std::size_t total = 0, agree = 0;
  std::map<std::string, std::vector<std::string>> bad;
  for (const auto& fi : families())
    for (int n = 1; n <= (fi.uses_n ? 3 : 1); ++n)
      for (int k = 1; k <= (fi.uses_k ? 3 : 1); ++k) {
        SphereAction sa = get_action(fi.family, n, k);
        for (std::size_t i = 0; i < sa.expected.size(); ++i) {
          ++total;
          const auto &e = sa.expected[i], &c = sa.computed[i];
          if (e.a == c.a && e.dprime == c.dprime) {
            ++agree;
            continue;
          }
          std::string where = fi.name;
          if (fi.uses_n)
            where += fmt::format(" n={}", n);
          if (fi.uses_k)
            where += fmt::format(" k={}", k);
          bad[fi.name].push_back(fmt::format("{} {}: stated {} computed {}", where, e.generator,
                                             split_str(e), split_str(c)));
        }
      }
  v.check(agree == total, fmt::format("{} of {} generator splittings agree", agree, total));
  v.note(fmt::format("{} of {} generator splittings agree", agree, total));
  for (const auto& [family, lines] : bad)
    v.note(fmt::format("{} ({} cases), e.g. {}", family, lines.size(), lines.front()));
  return v;
}

// ------------------------------------------------------------------ 6

int run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  return cli::run(args, out, err);
}

Verdict property_suite() {
  Verdict v;
  std::mt19937_64 rng(20241015);
  for (const char* file : kFixtures) {
    Analysis base = analyze_file(fixture(file));
    const CanonicalSystem& sys = base.solved.system;

    // (i) idempotence and byte determinism
    v.check(same_rows(canonicalize(as_constraints(sys), sys.r).system, sys),
            std::string(file) + ": canonical form is not idempotent");
    v.check(render_json(analyze_file(fixture(file)).report) == render_json(base.report),
            std::string(file) + ": report is not byte-deterministic");

    // (ii) 25 randomized isotypic splittings
    std::size_t stable = 0;
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      PipelineOptions opt;
      opt.seed = seed;
      Analysis an = analyze_file(fixture(file), opt);
      stable += same_rows(an.solved.system, sys) && an.report.closure_failures == 0;
    }
    v.check(stable == 25, fmt::format("{}: {} of 25 seeded splittings agree", file, stable));

    // (iii) 100 random φ assignments
    std::size_t ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Poly> phi;
      for (std::size_t m = 0; m < sys.r; ++m) {
        Poly p;
        for (std::size_t i = 0; i < 4; ++i)
          p += Poly::monomial(test_support::random_algnum(rng, 1), i);
        phi.push_back(p);
      }
      ok += check_explicit(evaluate_solution(sys, phi), base.constraints).empty();
    }
    v.check(ok == 100 && verify_closure(sys, base.constraints).empty(),
            fmt::format("{}: {} of 100 random phi assignments satisfy every condition", file, ok));
  }
  v.note("idempotence, byte determinism, 25 seeded splittings and 100 random phi on 4 diagrams");

  // (iv) negative controls
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / fmt::format("cohom-acceptance-{}", ::getpid());
  fs::create_directories(dir);
  using json = nlohmann::ordered_json;
  json tilted = json::parse(read_file(fixture("berger.json")));
  tilted["g_basis"][3]["matrix"][0][1] = "1/5*sqrt(5)+1";
  tilted["g_basis"][3]["matrix"][1][0] = "-1/5*sqrt(5)-1";
  std::ofstream(dir / "tilted.json") << tilted.dump();
  json phi = json::parse(R"({"phi": [["1"], ["0","2"], ["1"], ["0"], ["3"], ["0"], ["1","1"]]})");
  std::ofstream(dir / "phi.json") << phi.dump();
  phi["perturb"] = json::array({{{"unknown", "B4"}, {"t_poly", {"0", "1"}}}});
  std::ofstream(dir / "phi_corrupt.json") << phi.dump();
  const int c_valid = run_cli({"verify", fixture("berger.json"), (dir / "phi.json").string()});
  const int c_metric =
      run_cli({"verify", fixture("berger.json"), (dir / "phi_corrupt.json").string()});
  const int c_m = run_cli({"solve", (dir / "tilted.json").string()});
  const int c_mv = run_cli({"validate", (dir / "tilted.json").string()});
  fs::remove_all(dir);
  v.check(c_valid == 0, fmt::format("valid metric verifies with exit {}", c_valid));
  v.check(c_metric == 6, fmt::format("corrupted metric exits {} (want 6)", c_metric));
  v.check(c_m == 3 && c_mv == 3,
          fmt::format("non-invariant m exits {}/{} (want 3)", c_m, c_mv));
  v.note(fmt::format("negative controls: corrupted metric -> {}, non-invariant m -> {}", c_metric,
                     c_m));

  // (v) field axioms
  std::size_t passed = 0;
  for (int i = 0; i < 10000; ++i) {
    AlgNum x = test_support::random_algnum(rng), y = test_support::random_algnum(rng),
           z = test_support::random_algnum(rng), w = test_support::random_nonzero(rng);
    passed += (x + y) + z == x + (y + z) && (x * y) * z == x * (y * z) && x + y == y + x &&
              x * y == y * x && x * (y + z) == x * y + x * z && (w * w.inv()).is_one();
  }
  v.check(passed == 10000, fmt::format("{} of 10000 field-axiom samples hold", passed));
  v.note(fmt::format("{} of 10000 field-axiom samples hold", passed));
  return v;
}

// ------------------------------------------------------------------ 7

Verdict tensor_mode() {
  Verdict v;
  auto report = [](Mode mode) {
    PipelineOptions opt;
    opt.mode = mode;
    return parse_report_json(render_json(analyze_file(fixture("berger.json"), opt).report));
  };
  const Report metric = report(Mode::Metric), tensor = report(Mode::Tensor);

  // metric unknown -> tensor unknown with the same entries
  std::vector<std::size_t> to_tensor;
  for (const auto& u : metric.unknowns)
    to_tensor.push_back(unknown(tensor, u.entries));
  std::size_t radial_pair = tensor.r();
  for (std::size_t i = 0; i < tensor.r(); ++i)
    if (std::find(to_tensor.begin(), to_tensor.end(), i) == to_tensor.end() &&
        tensor.unknowns[i].entries.front().find("dc") != std::string::npos &&
        tensor.unknowns[i].entries.front().rfind("<dc,dc>", 0) != 0)
      radial_pair = i;

  auto key = [](const ReportConstraint& c, const ScalarList& row) {
    return fmt::format("{}|{}|{}|{}", c.cell, c.exponent, fmt::join(row, ","),
                       fmt::join(c.offset, ","));
  };
  auto translate = [&](const ScalarList& row) {
    ScalarList out(tensor.r(), "0");
    for (std::size_t i = 0; i < row.size(); ++i)
      out[to_tensor[i]] = row[i];
    return out;
  };
  auto nonzero = [](const ScalarList& row) {
    return std::count_if(row.begin(), row.end(), [](const std::string& s) { return s != "0"; });
  };

  std::multiset<std::string> mb, tb;
  for (const auto& c : metric.constraints)
    if (c.cell.rfind("B:", 0) == 0)
      mb.insert(key(c, translate(c.row)));
  for (const auto& c : tensor.constraints)
    if (c.cell.rfind("B:", 0) == 0)
      tb.insert(key(c, c.row));
  v.check(!mb.empty() && mb == tb, "m x m conditions differ between the modes");
  v.note(fmt::format("{} m x m conditions identical in both modes", mb.size()));

  const std::size_t h12 = to_tensor.at(unknown(metric, {"<K2,V3> = 1", "<K3,V2> = -1"}));
  std::string m_exp, t_exp;
  for (const auto& c : metric.constraints)
    if (c.cell == "C:l'0 x l0")
      m_exp = c.exponent;
  for (const auto& c : tensor.constraints)
    if (c.cell == "D:l'0 x l0") {
      t_exp = c.exponent;
      v.check(c.row[h12] != "0" && nonzero(c.row) == 1, "l'0 x l0 row is not a multiple of h12");
    }
  v.check(m_exp == "3" && t_exp == "1",
          fmt::format("l'0 x l0 exponent: metric {} tensor {} (want 3 vs 1)", m_exp, t_exp));

  std::size_t mixed = 0, metric_mixed = 0;
  for (const auto& c : tensor.constraints)
    if (c.cell == "D:l'-1 x lj" && nonzero(c.row) >= 2 && radial_pair < tensor.r() &&
        c.row[radial_pair] != "0")
      ++mixed;
  for (const auto& c : metric.constraints)
    if (c.cell.find("l'-1 x lj") != std::string::npos && nonzero(c.row) >= 2)
      ++metric_mixed;
  v.check(mixed > 0 && metric_mixed == 0,
          fmt::format("mixed l'-1 x lj rows: tensor {} metric {}", mixed, metric_mixed));

  std::size_t po_t = 0, po_m = 0;
  for (const auto& c : tensor.constraints)
    po_t += c.cell == "D:po";
  for (const auto& c : metric.constraints)
    po_m += c.cell.find("po") != std::string::npos;
  v.check(po_t == 1 && po_m == 0, fmt::format("coupling row: tensor {} metric {}", po_t, po_m));
  v.note(fmt::format("l'0 x l0 exponent {} -> {}; {} mixed l'-1 x lj rows; {} coupling row; r {} "
                     "-> {}",
                     m_exp, t_exp, mixed, po_t, metric.r(), tensor.r()));
  return v;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    Verdict (*run)();
  };
  const Criterion criteria[] = {
      {1, "Berger space end-to-end", berger_end_to_end},
      {2, "SU(3)/U(2) disk bundle", example_two},
      {3, "Kervaire sphere half-diagram", example_one},
      {4, "SU(2) in SU(4) exponents", example_four},
      {5, "transitive sphere actions", sphere_database},
      {6, "property suite", property_suite},
      {7, "tensor versus metric", tensor_mode},
  };
  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.check(false, std::string("exception: ") + e.what());
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && v.pass;
    std::cout << fmt::format("criterion {}: {} - {} ({:.2f}s)\n", c.id, v.pass ? "PASS" : "FAIL",
                             c.title, secs);
    for (const auto& n : v.notes)
      std::cout << "    " << n << "\n";
  }
  return all ? 0 : 1;
}
