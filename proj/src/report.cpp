#include "cohom/report.hpp"
#include "cohom/error.hpp"
#include "cohom/scalarparse.hpp"

#include <json.hpp>

#include <cctype>
#include <set>
#include <sstream>

namespace cohom {
namespace {

using ordered_json = nlohmann::ordered_json;

struct Atom {
  AlgNum c;
  std::string text, latex;  // empty atom = constant term
};

std::string num_latex(const AlgNum& x, bool* negative) {
  // x has a single term here
  const auto& [d, q] = x.terms().front();
  *negative = sgn(q) < 0;
  Rational a = abs(q);
  std::string out;
  if (a.get_den() != 1)
    out = "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  else if (a != 1 || d == 1)
    out = a.get_num().get_str();
  if (d != 1)
    out += "\\sqrt{" + std::to_string(d) + "}";
  return out;
}

std::string scalar_latex(const AlgNum& x) {
  if (x.is_zero())
    return "0";
  std::string out;
  for (const auto& t : x.terms()) {
    bool neg = false;
    std::string s = num_latex(AlgNum::from_terms({t}), &neg);
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    out += s;
  }
  return out;
}

// Sum of coefficient·atom, in the order given.
std::string combo(const std::vector<Atom>& atoms, bool latex) {
  std::string out;
  for (const auto& a : atoms) {
    if (a.c.is_zero())
      continue;
    const std::string& atom = latex ? a.latex : a.text;
    bool compound = a.c.terms().size() > 1;
    bool neg = false;
    std::string c;
    if (latex) {
      c = compound ? "\\left(" + scalar_latex(a.c) + "\\right)"
                   : num_latex(a.c, &neg);
    } else {
      c = a.c.str();
      neg = !compound && c[0] == '-';
      if (neg)
        c = c.substr(1);
      if (compound)
        c = "(" + c + ")";
    }
    out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (atom.empty())
      out += c;
    else if (c == "1")
      out += atom;
    else
      out += c + (latex ? "\\," : "*") + atom;
  }
  return out.empty() ? "0" : out;
}

std::string tpow_text(long k) {
  return k == 0 ? "" : k == 1 ? "t" : "t^" + std::to_string(k);
}
std::string tpow_latex(long k) {
  return k == 0 ? "" : k == 1 ? "t" : "t^{" + std::to_string(k) + "}";
}

std::string label_latex(const std::string& label) {
  // B12 -> B_{12}
  std::size_t i = 0;
  while (i < label.size() && !std::isdigit(static_cast<unsigned char>(label[i])))
    ++i;
  if (i == 0 || i == label.size())
    return "\\mathrm{" + label + "}";
  return label.substr(0, i) + "_{" + label.substr(i) + "}";
}

void push_functional(std::vector<Atom>& atoms, const ScalarList& row,
                     const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < row.size(); ++i)
    atoms.push_back({parse_scalar(row[i]), labels[i], label_latex(labels[i])});
}

void push_poly(std::vector<Atom>& atoms, const ScalarList& p, const AlgNum& sign) {
  for (std::size_t i = 0; i < p.size(); ++i)
    atoms.push_back({sign * parse_scalar(p[i]), tpow_text(static_cast<long>(i)),
                     tpow_latex(static_cast<long>(i))});
}

std::vector<Atom> solved_atoms(const Report& r, std::size_t j) {
  std::vector<Atom> atoms;
  // particular part: Σ_m particular_m(t)·w_m[j]
  Poly part;
  for (std::size_t m = 0; m < r.rows.size(); ++m)
    part += parse_scalar(r.directions[m].w[j]) * poly_from_scalars(r.rows[m].particular);
  push_poly(atoms, to_scalars(part), AlgNum(1));
  for (std::size_t m = 0; m < r.directions.size(); ++m) {
    const long e = r.directions[m].e;
    std::string t = tpow_text(e), tl = tpow_latex(e);
    std::string phi = "phi" + std::to_string(m + 1);
    std::string phil = "\\phi_{" + std::to_string(m + 1) + "}(t^2)";
    atoms.push_back({parse_scalar(r.directions[m].w[j]), t.empty() ? phi : t + "*" + phi,
                     tl.empty() ? phil : tl + "\\," + phil});
  }
  return atoms;
}

std::string constraint_latex(const ReportConstraint& c, const std::vector<std::string>& labels) {
  std::vector<Atom> atoms;
  push_functional(atoms, c.row, labels);
  push_poly(atoms, c.offset, AlgNum(-1));
  if (c.identically_zero)
    return combo(atoms, true) + " \\equiv 0";
  return combo(atoms, true) + " \\in t^{" + c.exponent + "}\\,\\mathrm{even}";
}

std::string relation_text(const ReportRelation& rel, bool latex) {
  std::vector<Atom> atoms;
  for (const auto& t : rel.terms) {
    std::string idx = std::to_string(t.retained + 1);
    std::string tp = tpow_text(t.t_power), tl = tpow_latex(t.t_power);
    atoms.push_back({parse_scalar(t.coeff), tp.empty() ? "psi" + idx : tp + "*psi" + idx,
                     tl.empty() ? "\\psi_{" + idx + "}" : tl + "\\,\\psi_{" + idx + "}"});
  }
  std::string dep = std::to_string(rel.dependent + 1);
  return (latex ? "\\psi_{" + dep + "}" : "psi" + dep) + " = " + combo(atoms, latex);
}

std::string speeds(const std::vector<long>& v) {
  if (v.empty())
    return "-";
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? ", " : "") + std::to_string(v[i]);
  return s;
}

ordered_json scalars_json(const ScalarList& s) { return ordered_json(s); }

ScalarList scalars_from(const ordered_json& j, const char* what) {
  if (!j.is_array())
    throw Error(ErrorKind::Parse, std::string("report: ") + what + " must be an array");
  ScalarList out;
  for (const auto& x : j) {
    if (!x.is_string())
      throw Error(ErrorKind::Parse, std::string("report: ") + what + " entries must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

const ordered_json& at(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorKind::Parse, std::string("report: missing key '") + key + "'");
  return j.at(key);
}

} // namespace

std::vector<std::string> Report::labels() const {
  std::vector<std::string> out;
  for (const auto& u : unknowns)
    out.push_back(u.label);
  return out;
}

ScalarList to_scalars(const Vec& v) {
  ScalarList out;
  for (const auto& x : v)
    out.push_back(format_scalar(x));
  return out;
}

ScalarList to_scalars(const Poly& p) {
  ScalarList out;
  for (const auto& x : p.coeffs())
    out.push_back(format_scalar(x));
  return out;
}

Vec vec_from_scalars(const ScalarList& s) {
  Vec v;
  for (const auto& x : s)
    v.push_back(parse_scalar(x));
  return v;
}

Poly poly_from_scalars(const ScalarList& s) {
  Poly p;
  for (std::size_t i = 0; i < s.size(); ++i)
    p += Poly::monomial(parse_scalar(s[i]), i);
  return p;
}

std::string constraint_text(const ReportConstraint& c, const std::vector<std::string>& labels) {
  std::vector<Atom> atoms;
  push_functional(atoms, c.row, labels);
  push_poly(atoms, c.offset, AlgNum(-1));
  if (c.identically_zero)
    return combo(atoms, false) + " == 0 (fractional exponent " + c.exponent + ")";
  return combo(atoms, false) + " in t^" + c.exponent + "*even";
}

std::string solved_text(const Report& r, std::size_t j) {
  return combo(solved_atoms(r, j), false);
}

std::string render_text(const Report& r) {
  std::ostringstream o;
  const auto labels = r.labels();
  o << "report (mode: " << r.mode << ")";
  if (!r.source.empty())
    o << " for " << r.source;
  o << "\n\nunknowns (r = " << r.r() << "):\n";
  for (const auto& u : r.unknowns) {
    o << "  " << u.label << ":";
    for (std::size_t i = 0; i < u.entries.size(); ++i)
      o << (i ? ", " : " ") << u.entries[i];
    o << "\n";
  }
  o << "\ngenerators:\n";
  for (const auto& g : r.generators)
    o << "  " << g.name << ": a = " << g.a << "; m: d = " << speeds(g.m_speeds)
      << " (dim l0 = " << g.m_fixed << "); slice: d' = " << speeds(g.slice_speeds)
      << " (dim l'0 = " << g.slice_fixed << ")\n";
  o << "\nconditions (" << r.constraints.size() << "):\n";
  for (std::size_t i = 0; i < r.constraints.size(); ++i) {
    const auto& c = r.constraints[i];
    o << "  [" << i + 1 << "] " << constraint_text(c, labels) << "    (" << c.generator << ", "
      << c.cell << ", " << c.pair << ")\n";
  }
  if (!r.relations.empty()) {
    o << "\nrelations between the even functions psi_i of the conditions:\n";
    for (const auto& rel : r.relations)
      o << "  " << relation_text(rel, false) << "\n";
  }
  o << "\ncanonical system:\n";
  for (std::size_t m = 0; m < r.rows.size(); ++m) {
    ReportConstraint c{r.rows[m].b, false, std::to_string(r.rows[m].e), r.rows[m].particular,
                       "", "", ""};
    o << "  (" << m + 1 << ") " << constraint_text(c, labels) << "\n";
  }
  o << "\nsolution (phi_m = phi_m(t^2) arbitrary smooth):\n";
  for (std::size_t j = 0; j < r.r(); ++j)
    o << "  " << labels[j] << " = " << solved_text(r, j) << "\n";
  o << "\nclosure check: " << (r.closure_failures == 0 ? "ok" : "FAILED") << " ("
    << r.closure_failures << " failures)\n";
  if (!r.diagnostics.empty()) {
    o << "\ndiagnostics:\n";
    for (const auto& d : r.diagnostics)
      o << "  " << d << "\n";
  }
  if (!r.trace.empty()) {
    o << "\ntrace:\n";
    for (const auto& t : r.trace)
      o << "  " << t << "\n";
  }
  return o.str();
}

std::string render_latex(const Report& r) {
  std::ostringstream o;
  const auto labels = r.labels();
  o << "% unknowns: ";
  for (std::size_t j = 0; j < r.r(); ++j)
    o << (j ? ", " : "") << labels[j];
  o << " (mode: " << r.mode << ")\n";
  o << "\\[ r = " << r.r() << " \\]\n";
  o << "\\begin{align*}\n";
  for (std::size_t i = 0; i < r.constraints.size(); ++i)
    o << "  &" << constraint_latex(r.constraints[i], labels)
      << (i + 1 < r.constraints.size() ? " \\\\\n" : "\n");
  o << "\\end{align*}\n";
  if (!r.relations.empty()) {
    o << "\\begin{align*}\n";
    for (std::size_t i = 0; i < r.relations.size(); ++i)
      o << "  &" << relation_text(r.relations[i], true)
        << (i + 1 < r.relations.size() ? " \\\\\n" : "\n");
    o << "\\end{align*}\n";
  }
  o << "\\begin{align*}\n";
  for (std::size_t j = 0; j < r.r(); ++j)
    o << "  " << label_latex(labels[j]) << " &= " << combo(solved_atoms(r, j), true)
      << (j + 1 < r.r() ? " \\\\\n" : "\n");
  o << "\\end{align*}\n";
  return o.str();
}

std::string render_json(const Report& r) {
  ordered_json j;
  j["report_version"] = r.version;
  j["source"] = r.source;
  j["mode"] = r.mode;
  j["r"] = r.r();
  const auto labels = r.labels();
  ordered_json us = ordered_json::array();
  for (const auto& u : r.unknowns)
    us.push_back({{"label", u.label}, {"entries", u.entries}});
  j["unknowns"] = us;
  ordered_json gs = ordered_json::array();
  for (const auto& g : r.generators)
    gs.push_back({{"name", g.name}, {"a", g.a}, {"m_speeds", g.m_speeds}, {"m_fixed", g.m_fixed},
                  {"slice_speeds", g.slice_speeds}, {"slice_fixed", g.slice_fixed}});
  j["generators"] = gs;
  ordered_json cs = ordered_json::array();
  for (const auto& c : r.constraints)
    cs.push_back({{"row", scalars_json(c.row)},
                  {"identically_zero", c.identically_zero},
                  {"exponent", c.exponent},
                  {"offset", scalars_json(c.offset)},
                  {"generator", c.generator},
                  {"cell", c.cell},
                  {"pair", c.pair},
                  {"text", constraint_text(c, labels)}});
  j["constraints"] = cs;
  ordered_json rs = ordered_json::array();
  for (const auto& rel : r.relations) {
    ordered_json ts = ordered_json::array();
    for (const auto& t : rel.terms)
      ts.push_back({{"retained", t.retained}, {"coeff", t.coeff}, {"t_power", t.t_power}});
    rs.push_back({{"dependent", rel.dependent}, {"terms", ts}});
  }
  j["relations"] = rs;
  ordered_json rows = ordered_json::array(), dirs = ordered_json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"b", scalars_json(row.b)}, {"e", row.e},
                    {"particular", scalars_json(row.particular)}});
  for (const auto& d : r.directions)
    dirs.push_back({{"w", scalars_json(d.w)}, {"e", d.e}});
  j["canonical"] = {{"rows", rows}, {"directions", dirs}};
  ordered_json solved = ordered_json::array();
  for (std::size_t k = 0; k < r.r(); ++k)
    solved.push_back(labels[k] + " = " + solved_text(r, k));
  j["solved"] = solved;
  j["closure_failures"] = r.closure_failures;
  j["diagnostics"] = r.diagnostics;
  j["trace"] = r.trace;
  return j.dump(1) + "\n";
}

Report parse_report_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("report: ") + e.what());
  }
  Report r;
  try {
    r.version = at(j, "report_version").get<int>();
    if (r.version != 1)
      throw Error(ErrorKind::Parse, "report: unsupported report_version");
    r.source = at(j, "source").get<std::string>();
    r.mode = at(j, "mode").get<std::string>();
    for (const auto& u : at(j, "unknowns"))
      r.unknowns.push_back({at(u, "label").get<std::string>(),
                            at(u, "entries").get<std::vector<std::string>>()});
    for (const auto& g : at(j, "generators"))
      r.generators.push_back({at(g, "name").get<std::string>(), at(g, "a").get<long>(),
                              at(g, "m_speeds").get<std::vector<long>>(),
                              at(g, "m_fixed").get<std::size_t>(),
                              at(g, "slice_speeds").get<std::vector<long>>(),
                              at(g, "slice_fixed").get<std::size_t>()});
    for (const auto& c : at(j, "constraints"))
      r.constraints.push_back({scalars_from(at(c, "row"), "row"),
                               at(c, "identically_zero").get<bool>(),
                               at(c, "exponent").get<std::string>(),
                               scalars_from(at(c, "offset"), "offset"),
                               at(c, "generator").get<std::string>(),
                               at(c, "cell").get<std::string>(),
                               at(c, "pair").get<std::string>()});
    for (const auto& rel : at(j, "relations")) {
      ReportRelation out;
      out.dependent = at(rel, "dependent").get<std::size_t>();
      for (const auto& t : at(rel, "terms"))
        out.terms.push_back({at(t, "retained").get<std::size_t>(),
                             at(t, "coeff").get<std::string>(), at(t, "t_power").get<long>()});
      r.relations.push_back(std::move(out));
    }
    const auto& can = at(j, "canonical");
    for (const auto& row : at(can, "rows"))
      r.rows.push_back({scalars_from(at(row, "b"), "b"), at(row, "e").get<long>(),
                        scalars_from(at(row, "particular"), "particular")});
    for (const auto& d : at(can, "directions"))
      r.directions.push_back({scalars_from(at(d, "w"), "w"), at(d, "e").get<long>()});
    r.closure_failures = at(j, "closure_failures").get<std::size_t>();
    r.diagnostics = at(j, "diagnostics").get<std::vector<std::string>>();
    r.trace = at(j, "trace").get<std::vector<std::string>>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("report: ") + e.what());
  }
  if (r.rows.size() != r.directions.size())
    throw Error(ErrorKind::Parse, "report: canonical rows and directions differ in number");
  return r;
}

std::string latex_lint(const std::string& s) {
  static const std::set<std::string> known{
      "frac", "sqrt", "phi", "psi", "in", "mathrm", "equiv", "left", "right",
      "begin", "end", "langle", "rangle", "cdot", "quad", ",", "\\", "[", "]"};
  static const std::set<std::string> envs{"align*"};
  int depth = 0;
  bool display = false;
  std::vector<std::string> env_stack;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '%') {
      while (i < s.size() && s[i] != '\n')
        ++i;
      continue;
    }
    if (c == '{')
      ++depth;
    else if (c == '}') {
      if (--depth < 0)
        return "unbalanced '}' at byte " + std::to_string(i);
    } else if (c == '$')
      return "inline '$' not allowed at byte " + std::to_string(i);
    else if (c == '\\') {
      std::size_t j = i + 1;
      std::string name;
      if (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j]))) {
        while (j < s.size() && std::isalpha(static_cast<unsigned char>(s[j])))
          name += s[j++];
      } else if (j < s.size()) {
        name = std::string(1, s[j++]);
      }
      if (!known.count(name))
        return "unknown macro \\" + name + " at byte " + std::to_string(i);
      if (name == "[" || name == "]") {
        if ((name == "[") == display)
          return "mismatched display delimiter at byte " + std::to_string(i);
        display = !display;
      }
      if (name == "begin" || name == "end") {
        std::size_t open = s.find('{', j), close = s.find('}', j);
        if (open != j || close == std::string::npos)
          return "malformed \\" + name + " at byte " + std::to_string(i);
        std::string env = s.substr(open + 1, close - open - 1);
        if (!envs.count(env))
          return "unknown environment " + env;
        if (name == "begin")
          env_stack.push_back(env);
        else if (env_stack.empty() || env_stack.back() != env)
          return "unmatched \\end{" + env + "}";
        else
          env_stack.pop_back();
        j = close + 1;
      }
      i = j - 1;
    }
  }
  if (depth != 0)
    return "unbalanced braces at end of input";
  if (display)
    return "unterminated display";
  if (!env_stack.empty())
    return "unterminated environment " + env_stack.back();
  return "";
}

} // namespace cohom
