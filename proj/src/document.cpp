#include "cohom/document.hpp"
#include "cohom/error.hpp"
#include "cohom/scalarparse.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cohom {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::Usage, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace {

[[noreturn]] void schema(const std::string& msg) { throw Error(ErrorKind::Parse, "schema: " + msg); }

const json& field(const json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key))
    schema(ctx + " is missing \"" + key + "\"");
  return j.at(key);
}

AlgNum scalar(const json& j, const std::string& ctx) {
  if (j.is_number_integer())
    return AlgNum(j.get<long>());
  if (!j.is_string())
    schema(ctx + ": scalars must be strings in the scalar grammar");
  try {
    return parse_scalar(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, ctx + ": " + e.what());
  }
}

Mat matrix(const json& j, const std::string& ctx) {
  if (!j.is_array() || j.empty())
    schema(ctx + " must be a non-empty array of rows");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array())
      schema(ctx + " row " + std::to_string(i) + " is not an array");
    Vec r;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      r.push_back(scalar(j[i][k], ctx + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    if (!rows.empty() && r.size() != rows[0].size())
      schema(ctx + " has ragged rows");
    rows.push_back(std::move(r));
  }
  return Mat::from_rows(rows);
}

std::vector<std::size_t> names(const json& j, const LieBasis& b, const std::string& ctx) {
  if (!j.is_array())
    schema(ctx + " must be an array of names");
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    if (!e.is_string())
      schema(ctx + " entries must be strings");
    try {
      out.push_back(b.index_of(e.get<std::string>()));
    } catch (const Error&) {
      schema(ctx + " refers to unknown element \"" + e.get<std::string>() + "\"");
    }
  }
  return out;
}


ordered_json matrix_out(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json r = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.push_back(format_scalar(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

} // namespace

GroupDiagram parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, std::string("JSON: ") + e.what());
  }
  if (!doc.is_object())
    schema("document must be an object");

  GroupDiagram d;
  if (doc.contains("q_scale"))
    d.g.q_scale = scalar(doc["q_scale"], "q_scale");
  const json& gb = field(doc, "g_basis", "document");
  if (!gb.is_array() || gb.empty())
    schema("g_basis must be a non-empty array");
  for (std::size_t i = 0; i < gb.size(); ++i) {
    const json& e = gb[i];
    const json& nm = field(e, "name", "g_basis[" + std::to_string(i) + "]");
    if (!nm.is_string())
      schema("g_basis names must be strings");
    std::string name = nm.get<std::string>();
    for (const auto& prev : d.g.names)
      if (prev == name)
        schema("duplicate basis name \"" + name + "\"");
    d.g.names.push_back(name);
    d.g.elements.push_back(matrix(field(e, "matrix", name), name));
  }
  d.k = names(field(doc, "k", "document"), d.g, "k");
  d.h = doc.contains("h") ? names(doc["h"], d.g, "h") : std::vector<std::size_t>{};
  d.m = names(field(doc, "m", "document"), d.g, "m");
  d.p = names(field(doc, "p", "document"), d.g, "p");
  d.p_generators = names(field(doc, "p_generators", "document"), d.g, "p_generators");
  if (doc.contains("h_discrete")) {
    const json& hd = doc["h_discrete"];
    if (!hd.is_array())
      schema("h_discrete must be an array of matrices");
    for (std::size_t i = 0; i < hd.size(); ++i)
      d.h_discrete.push_back(matrix(hd[i], "h_discrete[" + std::to_string(i) + "]"));
  }
  if (doc.contains("weyl"))
    d.weyl = matrix(doc["weyl"], "weyl");

  const json& sl = field(doc, "slice", "document");
  const json& dim = field(sl, "dim", "slice");
  if (!dim.is_number_integer() || dim.get<long>() < 2)
    schema("slice.dim must be an integer ≥ 2");
  d.slice.dim = dim.get<std::size_t>();
  const json& rho = field(sl, "rho", "slice");
  if (!rho.is_object())
    schema("slice.rho must map k-names to matrices");
  for (auto ki : d.k) {
    const std::string& nm = d.g.names[ki];
    if (!rho.contains(nm))
      schema("slice.rho is missing \"" + nm + "\"");
    d.slice.rho.push_back(matrix(rho[nm], "rho." + nm));
  }
  for (auto it = rho.begin(); it != rho.end(); ++it) {
    bool known = false;
    for (auto ki : d.k)
      known = known || d.g.names[ki] == it.key();
    if (!known)
      schema("slice.rho names \"" + it.key() + "\" which is not in k");
  }
  const json& e1 = field(sl, "e1", "slice");
  if (!e1.is_array())
    schema("slice.e1 must be an array");
  for (std::size_t i = 0; i < e1.size(); ++i)
    d.slice.e1.push_back(scalar(e1[i], "e1[" + std::to_string(i) + "]"));

  if (doc.contains("mode")) {
    std::string mode = doc["mode"].is_string() ? doc["mode"].get<std::string>() : "";
    if (mode == "metric")
      d.mode = Mode::Metric;
    else if (mode == "tensor")
      d.mode = Mode::Tensor;
    else
      schema("mode must be \"metric\" or \"tensor\"");
  }
  return d;
}

GroupDiagram load_document(const std::string& path) { return parse_document(read_file(path)); }

std::string dump_document(const GroupDiagram& d) {
  ordered_json doc;
  auto name_list = [&](const std::vector<std::size_t>& idx) {
    ordered_json a = ordered_json::array();
    for (auto i : idx)
      a.push_back(d.g.names[i]);
    return a;
  };
  ordered_json gb = ordered_json::array();
  for (std::size_t i = 0; i < d.g.size(); ++i)
    gb.push_back(ordered_json{{"name", d.g.names[i]}, {"matrix", matrix_out(d.g.elements[i])}});
  doc["q_scale"] = format_scalar(d.g.q_scale);
  doc["g_basis"] = gb;
  doc["k"] = name_list(d.k);
  doc["h"] = name_list(d.h);
  ordered_json hd = ordered_json::array();
  for (const auto& m : d.h_discrete)
    hd.push_back(matrix_out(m));
  doc["h_discrete"] = hd;
  doc["m"] = name_list(d.m);
  doc["p"] = name_list(d.p);
  ordered_json rho = ordered_json::object();
  for (std::size_t i = 0; i < d.k.size(); ++i)
    rho[d.g.names[d.k[i]]] = matrix_out(d.slice.rho[i]);
  ordered_json e1 = ordered_json::array();
  for (const auto& x : d.slice.e1)
    e1.push_back(format_scalar(x));
  doc["slice"] = ordered_json{{"dim", d.slice.dim}, {"rho", rho}, {"e1", e1}};
  doc["p_generators"] = name_list(d.p_generators);
  if (d.weyl)
    doc["weyl"] = matrix_out(*d.weyl);
  doc["mode"] = d.mode == Mode::Metric ? "metric" : "tensor";
  return doc.dump(1) + "\n";
}

} // namespace cohom
