#include "cohom/cli.hpp"
#include "cohom/document.hpp"
#include "cohom/error.hpp"
#include "cohom/pipeline.hpp"
#include "cohom/scalarparse.hpp"
#include "cohom/spheredb.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <ostream>
#include <thread>

namespace cohom::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Outcome {
  std::string out, err;
  int code = 0;
};

Outcome guarded(const std::function<std::string()>& body, const std::string& context) {
  Outcome o;
  try {
    o.out = body();
  } catch (const Error& e) {
    o.code = exit_code(e.kind());
    o.err = "error: " + context + e.what() + "\n";
  } catch (const std::exception& e) {
    o.code = 1;
    o.err = "internal error: " + context + e.what() + "\n";
  }
  return o;
}

// ---------------------------------------------------------------- validate

std::string cmd_validate(const std::string& path, int* code) {
  GroupDiagram d = load_document(path);
  ValidationReport vr = validate(d);
  std::string out;
  for (const auto& c : vr.checks) {
    const char* tag = c.passed ? "PASS" : (c.fatal ? "FAIL" : "WARN");
    out += fmt::format("{} {}{}\n", tag, c.name, c.passed ? "" : ": " + c.witness);
  }
  out += vr.ok() ? "diagram is valid\n" : "diagram is invalid\n";
  *code = vr.ok() ? 0 : exit_code(ErrorKind::Invariant);
  return out;
}

// ---------------------------------------------------------------- solve

std::string render(const Report& r, const std::string& format) {
  if (format == "latex")
    return render_latex(r);
  if (format == "json")
    return render_json(r);
  return render_text(r);
}

std::vector<Outcome> solve_all(const std::vector<std::string>& paths, const PipelineOptions& opt,
                               const std::string& format, unsigned threads) {
  std::vector<Outcome> results(paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < paths.size();)
      results[i] = guarded([&] { return render(analyze_file(paths[i], opt).report, format); },
                           paths[i] + ": ");
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(paths.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool)
    t.join();
  return results;
}

// ---------------------------------------------------------------- verify

std::string cmd_verify(const std::string& path, const std::string& phi_path,
                       const PipelineOptions& opt) {
  Analysis an = analyze_file(path, opt);
  ordered_json j;
  try {
    j = ordered_json::parse(read_file(phi_path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, "phi file: " + std::string(e.what()));
  }
  if (!j.is_object() || !j.contains("phi") || !j["phi"].is_array())
    throw Error(ErrorKind::Parse, "phi file: expected {\"phi\": [[coefficients in s = t^2], ...]}");
  auto poly_of = [](const ordered_json& arr, const std::string& what) {
    if (!arr.is_array())
      throw Error(ErrorKind::Parse, "phi file: " + what + " must be an array of scalar strings");
    Poly p;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      if (!arr[i].is_string())
        throw Error(ErrorKind::Parse, "phi file: " + what + " entries must be strings");
      p += Poly::monomial(parse_scalar(arr[i].get<std::string>()), i);
    }
    return p;
  };
  std::vector<Poly> phi;
  for (std::size_t m = 0; m < j["phi"].size(); ++m)
    phi.push_back(poly_of(j["phi"][m], fmt::format("phi[{}]", m)));
  std::vector<Poly> u = evaluate_solution(an.solved.system, phi);
  const auto labels = an.report.labels();
  if (j.contains("perturb"))
    for (const auto& p : j["perturb"]) {
      if (!p.is_object() || !p.contains("unknown") || !p.contains("t_poly"))
        throw Error(ErrorKind::Parse, "phi file: perturb entries need \"unknown\" and \"t_poly\"");
      auto it = std::find(labels.begin(), labels.end(), p["unknown"].get<std::string>());
      if (it == labels.end())
        throw Error(ErrorKind::Parse, "phi file: unknown label " + p["unknown"].dump());
      u[static_cast<std::size_t>(it - labels.begin())] += poly_of(p["t_poly"], "t_poly");
    }
  std::string out;
  for (std::size_t k = 0; k < u.size(); ++k)
    out += fmt::format("{} = {}\n", labels[k], u[k].str());
  auto bad = check_explicit(u, an.constraints);
  if (!bad.empty()) {
    std::string msg = fmt::format("{} of {} conditions violated:", bad.size(), an.constraints.size());
    for (auto i : bad)
      msg += fmt::format("\n  [{}] {}", i + 1, constraint_text(an.report.constraints[i], labels));
    throw Error(ErrorKind::Verify, "verification failed\n" + out + msg);
  }
  out += fmt::format("all {} conditions satisfied\n", an.constraints.size());
  return out;
}

// ---------------------------------------------------------------- db

std::string split_summary(const ExpectedSplit& s) {
  std::string d;
  for (std::size_t i = 0; i < s.dprime.size(); ++i)
    d += (i ? "," : "") + std::to_string(s.dprime[i]);
  return fmt::format("{}: a={} d'={{{}}}", s.generator, s.a, d);
}

std::string cmd_db_list() {
  std::string out = "family        action                         params  generators at n=2, k=2 "
                    "(stated | computed)\n";
  for (const auto& fi : families()) {
    SphereAction sa = get_action(fi.family, 2, 2);
    std::string params = fi.uses_n ? (fi.uses_k ? "n, k" : "n") : "-";
    std::string gens;
    for (std::size_t i = 0; i < sa.expected.size(); ++i) {
      const auto &e = sa.expected[i], &c = sa.computed[i];
      bool same = e.a == c.a && e.dprime == c.dprime;
      gens += (i ? "; " : "") + split_summary(e) +
              (same ? "" : " | " + split_summary(c).substr(c.generator.size() + 2));
    }
    out += fmt::format("{:<13} {:<30} {:<7} {}\n", fi.name, fi.label, params, gens);
  }
  out += fmt::format("{} families\n", families().size());
  return out;
}

std::string cmd_db_dump(const std::string& name, int n, int k) {
  const Family f = family_from_name(name);
  SphereAction sa = get_action(f, n, k);
  ordered_json doc = ordered_json::parse(dump_document(sa.diagram));
  auto splits = [](const std::vector<ExpectedSplit>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : v)
      arr.push_back({{"generator", s.generator}, {"a", s.a}, {"dprime", s.dprime},
                     {"fixed_dim", s.fixed_dim}});
    return arr;
  };
  const FamilyInfo& fi = family_info(f);
  ordered_json meta = {{"family", fi.name}, {"action", fi.label}};
  if (fi.uses_n)
    meta["n"] = n;
  if (fi.uses_k)
    meta["k"] = k;
  meta["stated"] = splits(sa.expected);
  meta["computed"] = splits(sa.computed);
  doc["sphere"] = meta;
  return doc.dump(1) + "\n";
}

// "n=2" style positional parameters
void apply_params(const std::vector<std::string>& extra, int* n, int* k) {
  for (const auto& p : extra) {
    auto eq = p.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::Usage, "unexpected argument '" + p + "'");
    std::string key = p.substr(0, eq), val = p.substr(eq + 1);
    int v = 0;
    try {
      std::size_t used = 0;
      v = std::stoi(val, &used);
      if (used != val.size())
        throw std::invalid_argument(val);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Usage, "parameter '" + p + "' is not an integer");
    }
    if (key == "n")
      *n = v;
    else if (key == "k")
      *k = v;
    else
      throw Error(ErrorKind::Usage, "unknown parameter '" + key + "'");
  }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Smoothness conditions for cohomogeneity one metrics", "cohom"};
  app.require_subcommand(1);

  auto* validate_cmd = app.add_subcommand("validate", "Check a diagram document");
  std::string validate_path;
  validate_cmd->add_option("path", validate_path, "diagram document (JSON)")->required();

  auto* solve_cmd = app.add_subcommand("solve", "Derive and solve the smoothness conditions");
  std::vector<std::string> solve_paths;
  std::string format = "text";
  bool trace = false, tensor = false;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  solve_cmd->add_option("paths", solve_paths, "diagram documents")->required();
  solve_cmd->add_option("--format", format, "text | latex | json")
      ->check(CLI::IsMember({"text", "latex", "json"}));
  solve_cmd->add_flag("--trace", trace, "append the per-cell audit log");
  solve_cmd->add_flag("--tensor", tensor, "symmetric 2-tensor conditions");
  solve_cmd->add_option("--threads", threads, "process files in parallel")
      ->check(CLI::Range(1u, 256u));
  auto* seed_opt =
      solve_cmd->add_option("--seed", seed, "randomize plane choices in isotypic spaces");

  auto* verify_cmd = app.add_subcommand("verify", "Check an explicit solution exactly");
  std::string verify_path, phi_path;
  bool verify_tensor = false;
  verify_cmd->add_option("path", verify_path, "diagram document")->required();
  verify_cmd->add_option("phi", phi_path, "JSON file with the phi_m polynomials")->required();
  verify_cmd->add_flag("--tensor", verify_tensor, "symmetric 2-tensor conditions");

  auto* db_cmd = app.add_subcommand("db", "Transitive sphere actions");
  db_cmd->require_subcommand(1);
  auto* db_list = db_cmd->add_subcommand("list", "List the families");
  auto* db_dump = db_cmd->add_subcommand("dump", "Emit a family as a diagram fragment");
  std::string family;
  std::vector<std::string> params;
  int n_opt = 1, k_opt = 1;
  db_dump->add_option("family", family, "family name (see db list)")->required();
  db_dump->add_option("params", params, "n=<int> k=<int>");
  db_dump->add_option("--n", n_opt, "parameter n");
  db_dump->add_option("--k", k_opt, "parameter k");

  std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 expects reversed order
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : exit_code(ErrorKind::Usage);
  }

  auto finish = [&](const Outcome& o) {
    out << o.out;
    err << o.err;
    return o.code;
  };

  if (*validate_cmd) {
    int code = 0;
    Outcome o = guarded([&] { return cmd_validate(validate_path, &code); }, validate_path + ": ");
    if (o.code == 0)
      o.code = code;
    return finish(o);
  }
  if (*solve_cmd) {
    PipelineOptions opt;
    opt.trace = trace;
    if (*seed_opt)
      opt.seed = seed;
    if (tensor)
      opt.mode = Mode::Tensor;
    int code = 0;
    for (const auto& o : solve_all(solve_paths, opt, format, threads)) {
      int c = finish(o);
      if (code == 0)
        code = c;
    }
    return code;
  }
  if (*verify_cmd) {
    PipelineOptions opt;
    if (verify_tensor)
      opt.mode = Mode::Tensor;
    return finish(guarded([&] { return cmd_verify(verify_path, phi_path, opt); }, ""));
  }
  if (*db_list)
    return finish(guarded(cmd_db_list, ""));
  return finish(guarded(
      [&] {
        int n = n_opt, k = k_opt;
        apply_params(params, &n, &k);
        return cmd_db_dump(family, n, k);
      },
      ""));
}

} // namespace cohom::cli
