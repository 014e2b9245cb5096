#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qpath/cospan.hpp"
#include "qpath/error.hpp"
#include "qpath/graph.hpp"
#include "qpath/matrix.hpp"
#include "qpath/pathsolve.hpp"
#include "qpath/qnet.hpp"
#include "qpath/quantale.hpp"

namespace qpath::io {

using json = nlohmann::ordered_json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw semantic_error("cannot write '" + path + "'");
  out << content;
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// nlohmann reports byte offsets; turn them into line/column for messages.
inline json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw parse_error(where + ":" + std::to_string(line) + ":" +
                          std::to_string(col) + ": " + e.what(),
                      line, col);
  }
}

inline json load_json_file(const std::string& path) {
  return parse_json(read_file(path), path);
}

// ---- weight literals ------------------------------------------------------

inline json value_to_json(const TropicalQuantale&, double v) {
  if (v == kInf) return json("inf");
  return json(v);
}
inline json value_to_json(const CapacityQuantale&, double v) {
  if (v == kInf) return json("inf");
  return json(v);
}
inline json value_to_json(const ViterbiQuantale&, double v) { return json(v); }
inline json value_to_json(const BooleanQuantale&, bool v) { return json(v); }
inline json value_to_json(const LanguageQuantale&,
                          const LanguageQuantale::value_type& v) {
  json arr = json::array();
  for (const auto& w : v) arr.push_back(w);
  return arr;
}

namespace detail {
inline double number_or_inf(const json& j, const std::string& what) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInf;
    throw parse_error(what + ": expected a number or \"inf\"");
  }
  if (!j.is_number()) throw parse_error(what + ": expected a number");
  return j.get<double>();
}
}  // namespace detail

inline double value_from_json(const TropicalQuantale& q, const json& j) {
  double v = detail::number_or_inf(j, "tropical weight");
  if (!q.valid(v)) throw semantic_error("tropical weight out of range");
  return v;
}
inline double value_from_json(const CapacityQuantale& q, const json& j) {
  double v = detail::number_or_inf(j, "capacity weight");
  if (!q.valid(v)) throw semantic_error("capacity weight out of range");
  return v;
}
inline double value_from_json(const ViterbiQuantale& q, const json& j) {
  if (!j.is_number()) throw parse_error("viterbi weight: expected a number");
  double v = j.get<double>();
  if (!q.valid(v)) throw semantic_error("viterbi weight must lie in [0,1]");
  return v;
}
inline bool value_from_json(const BooleanQuantale&, const json& j) {
  if (!j.is_boolean()) throw parse_error("boolean weight: expected true/false");
  return j.get<bool>();
}
inline LanguageQuantale::value_type value_from_json(const LanguageQuantale& q,
                                                    const json& j) {
  if (!j.is_array()) throw parse_error("language weight: expected a word array");
  LanguageQuantale::value_type v;
  for (const auto& w : j) {
    if (!w.is_string()) throw parse_error("language word must be a string");
    v.insert(LanguageQuantale::normalize_word(w.get<std::string>()));
  }
  if (!q.valid(v))
    throw semantic_error("language weight uses symbols outside " + q.tag());
  return v;
}

template <Quantale Q>
std::string format_value(const Q& q, const typename Q::value_type& v) {
  (void)q;
  if constexpr (std::is_same_v<Q, BooleanQuantale>) {
    return v ? "T" : "F";
  } else if constexpr (std::is_same_v<Q, LanguageQuantale>) {
    std::string out = "{";
    bool first = true;
    for (const auto& w : v) {
      if (!first) out += ",";
      first = false;
      out += w.empty() ? "ε" : w;
    }
    return out + "}";
  } else {
    if (v == kInf) return "inf";
    return json(v).dump();
  }
}

// ---- vertex sets and legs --------------------------------------------------

inline json labels_to_json(const VertexSet& v) {
  json arr = json::array();
  for (const auto& l : v.labels()) arr.push_back(l);
  return arr;
}
inline VertexSet labels_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw parse_error(what + ": expected a label array");
  std::vector<std::string> labels;
  for (const auto& l : j) {
    if (!l.is_string()) throw parse_error(what + ": labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  return VertexSet(std::move(labels));
}

inline json leg_to_json(const FiniteFunction& f) {
  json obj = json::object();
  for (std::size_t i = 0; i < f.domain().size(); ++i)
    obj[f.domain().label(i)] = f.codomain().label(f.apply_index(i));
  return obj;
}
inline FiniteFunction leg_from_json(const json& j, const VertexSet& domain,
                                    const VertexSet& codomain,
                                    const std::string& what) {
  if (!j.is_object()) throw parse_error(what + ": expected an object");
  std::map<std::string, std::string> m;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw parse_error(what + ": values must be labels");
    m[k] = v.get<std::string>();
  }
  return FiniteFunction(domain, codomain, m);
}

// ---- matrices --------------------------------------------------------------

template <Quantale Q>
json matrix_to_json(const RMatrix<Q>& m) {
  json j = json::object();
  j["quantale"] = m.quantale().tag();
  if (m.is_square()) {
    j["vertices"] = labels_to_json(m.rows());
  } else {
    j["rows"] = labels_to_json(m.rows());
    j["cols"] = labels_to_json(m.cols());
  }
  json entries = json::array();
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.n_cols(); ++k)
      row.push_back(value_to_json(m.quantale(), m.at(i, k)));
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

template <Quantale Q>
RMatrix<Q> matrix_from_json_as(const Q& q, const json& j) {
  VertexSet rows, cols;
  if (j.contains("vertices")) {
    rows = labels_from_json(j.at("vertices"), "vertices");
    cols = rows;
  } else if (j.contains("rows") && j.contains("cols")) {
    rows = labels_from_json(j.at("rows"), "rows");
    cols = labels_from_json(j.at("cols"), "cols");
  } else {
    throw parse_error("matrix: expected \"vertices\" or \"rows\"/\"cols\"");
  }
  if (!j.contains("entries") || !j.at("entries").is_array())
    throw parse_error("matrix: missing \"entries\" array");
  const json& entries = j.at("entries");
  if (entries.size() != rows.size())
    throw semantic_error("matrix: entry rows do not match the vertex count");
  RMatrix<Q> m(q, rows, cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!entries[i].is_array() || entries[i].size() != cols.size())
      throw semantic_error("matrix: row " + std::to_string(i) +
                           " has the wrong width");
    for (std::size_t k = 0; k < cols.size(); ++k)
      m.set(i, k, value_from_json(q, entries[i][k]));
  }
  return m;
}

using AnyMatrix =
    std::variant<RMatrix<TropicalQuantale>, RMatrix<CapacityQuantale>,
                 RMatrix<ViterbiQuantale>, RMatrix<BooleanQuantale>,
                 RMatrix<LanguageQuantale>>;

inline AnyQuantale quantale_of_json(const json& j) {
  if (!j.contains("quantale") || !j.at("quantale").is_string())
    throw parse_error("missing \"quantale\" tag");
  return parse_quantale_tag(j.at("quantale").get<std::string>());
}

inline AnyMatrix matrix_from_json(const json& j) {
  return std::visit(
      [&](const auto& q) -> AnyMatrix { return matrix_from_json_as(q, j); },
      quantale_of_json(j));
}

// ---- open matrices ---------------------------------------------------------

template <Quantale Q>
json open_matrix_to_json(const OpenMatrix<Q>& m) {
  json j = matrix_to_json(m.mat);
  j["inputs"] = labels_to_json(m.input);
  j["outputs"] = labels_to_json(m.output);
  j["leg_in"] = leg_to_json(m.leg_in);
  j["leg_out"] = leg_to_json(m.leg_out);
  return j;
}

template <Quantale Q>
OpenMatrix<Q> open_matrix_from_json_as(const Q& q, const json& j) {
  RMatrix<Q> mat = matrix_from_json_as(q, j);
  if (!mat.is_square()) throw semantic_error("open matrix: apex must be square");
  VertexSet input = labels_from_json(j.value("inputs", json::array()), "inputs");
  VertexSet output =
      labels_from_json(j.value("outputs", json::array()), "outputs");
  FiniteFunction leg_in =
      j.contains("leg_in")
          ? leg_from_json(j.at("leg_in"), input, mat.rows(), "leg_in")
          : FiniteFunction::inclusion(input, mat.rows());
  FiniteFunction leg_out =
      j.contains("leg_out")
          ? leg_from_json(j.at("leg_out"), output, mat.rows(), "leg_out")
          : FiniteFunction::inclusion(output, mat.rows());
  return make_open(std::move(input), std::move(output), std::move(leg_in),
                   std::move(leg_out), std::move(mat));
}

using AnyOpenMatrix =
    std::variant<OpenMatrix<TropicalQuantale>, OpenMatrix<CapacityQuantale>,
                 OpenMatrix<ViterbiQuantale>, OpenMatrix<BooleanQuantale>,
                 OpenMatrix<LanguageQuantale>>;

inline AnyOpenMatrix open_matrix_from_json(const json& j) {
  return std::visit(
      [&](const auto& q) -> AnyOpenMatrix {
        return open_matrix_from_json_as(q, j);
      },
      quantale_of_json(j));
}

// ---- expressions -----------------------------------------------------------

struct ExprSpec {
  enum class Op { leaf, compose, tensor };
  Op op = Op::leaf;
  std::string path;  // leaf only
  std::unique_ptr<ExprSpec> left, right;
};

inline ExprSpec expr_spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("op"))
    throw parse_error("expression: expected an object with \"op\"");
  std::string op = j.at("op").get<std::string>();
  ExprSpec spec;
  if (op == "leaf") {
    spec.op = ExprSpec::Op::leaf;
    if (!j.contains("path"))
      throw parse_error("expression: leaf needs a \"path\"");
    spec.path = j.at("path").get<std::string>();
    return spec;
  }
  if (op == "compose")
    spec.op = ExprSpec::Op::compose;
  else if (op == "tensor")
    spec.op = ExprSpec::Op::tensor;
  else
    throw parse_error("expression: unknown op '" + op + "'");
  if (!j.contains("left") || !j.contains("right"))
    throw parse_error("expression: '" + op + "' needs \"left\" and \"right\"");
  spec.left = std::make_unique<ExprSpec>(expr_spec_from_json(j.at("left")));
  spec.right = std::make_unique<ExprSpec>(expr_spec_from_json(j.at("right")));
  return spec;
}

inline const std::string& first_leaf_path(const ExprSpec& spec) {
  return spec.op == ExprSpec::Op::leaf ? spec.path
                                       : first_leaf_path(*spec.left);
}

template <Quantale Q>
CompositionExpr<Q> build_expr(const ExprSpec& spec,
                              const std::filesystem::path& base) {
  if (spec.op == ExprSpec::Op::leaf) {
    std::filesystem::path p(spec.path);
    if (p.is_relative()) p = base / p;
    json j = load_json_file(p.string());
    AnyOpenMatrix any = open_matrix_from_json(j);
    auto* typed = std::get_if<OpenMatrix<Q>>(&any);
    if (!typed)
      throw instance_error("expression leaves use different quantale "
                           "instances ('" + spec.path + "')");
    return CompositionExpr<Q>::leaf(std::move(*typed));
  }
  auto left = build_expr<Q>(*spec.left, base);
  auto right = build_expr<Q>(*spec.right, base);
  return spec.op == ExprSpec::Op::compose
             ? CompositionExpr<Q>::compose(std::move(left), std::move(right))
             : CompositionExpr<Q>::tensor(std::move(left), std::move(right));
}

// ---- graphs ----------------------------------------------------------------

inline json graph_to_json(const Graph& g) {
  json j = json::object();
  j["vertices"] = labels_to_json(g.vertices());
  json edges = json::array();
  for (const auto& e : g.edges())
    edges.push_back(json::array({e.id, e.src, e.tgt}));
  j["edges"] = std::move(edges);
  return j;
}

inline json open_graph_to_json(const OpenGraph& g) {
  json j = graph_to_json(g.graph);
  j["inputs"] = labels_to_json(g.input);
  j["outputs"] = labels_to_json(g.output);
  j["leg_in"] = leg_to_json(g.leg_in);
  j["leg_out"] = leg_to_json(g.leg_out);
  return j;
}

inline Graph graph_from_json(const json& j) {
  VertexSet vertices = labels_from_json(j.at("vertices"), "vertices");
  std::vector<Edge> edges;
  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 3)
      throw parse_error("graph edge: expected [id, src, tgt]");
    edges.push_back(Edge{e[0].get<std::string>(), e[1].get<std::string>(),
                         e[2].get<std::string>()});
  }
  return Graph(std::move(vertices), std::move(edges));
}

inline OpenGraph open_graph_from_json(const json& j) {
  Graph g = graph_from_json(j);
  VertexSet input = labels_from_json(j.value("inputs", json::array()), "inputs");
  VertexSet output =
      labels_from_json(j.value("outputs", json::array()), "outputs");
  FiniteFunction leg_in =
      j.contains("leg_in")
          ? leg_from_json(j.at("leg_in"), input, g.vertices(), "leg_in")
          : FiniteFunction::inclusion(input, g.vertices());
  FiniteFunction leg_out =
      j.contains("leg_out")
          ? leg_from_json(j.at("leg_out"), output, g.vertices(), "leg_out")
          : FiniteFunction::inclusion(output, g.vertices());
  OpenGraph out{std::move(input), std::move(output), std::move(leg_in),
                std::move(leg_out), std::move(g)};
  out.validate();
  return out;
}

inline json path_table_to_json(const PathTable& t) {
  json j = json::object();
  j["rows"] = labels_to_json(t.rows());
  j["cols"] = labels_to_json(t.cols());
  j["bound"] = t.bound();
  json cells = json::array();
  for (std::size_t i = 0; i < t.rows().size(); ++i)
    for (std::size_t k = 0; k < t.cols().size(); ++k) {
      if (t.at(i, k).empty()) continue;
      json cell = json::object();
      cell["from"] = t.rows().label(i);
      cell["to"] = t.cols().label(k);
      json paths = json::array();
      for (const auto& p : t.at(i, k)) {
        json pj = json::object();
        pj["start"] = p.start;
        pj["edges"] = p.edge_ids;
        paths.push_back(std::move(pj));
      }
      cell["paths"] = std::move(paths);
      cells.push_back(std::move(cell));
    }
  j["cells"] = std::move(cells);
  return j;
}

// ---- nets ------------------------------------------------------------------

inline json marking_to_json(const Marking& m) {
  json j = json::object();
  for (const auto& [p, c] : m.coeffs()) j[p] = c;
  return j;
}
inline Marking marking_from_json(const json& j) {
  if (!j.is_object()) throw parse_error("marking: expected an object");
  Marking m;
  for (const auto& [p, c] : j.items()) {
    if (!c.is_number_integer())
      throw parse_error("marking: coefficients must be integers");
    m.set(p, c.get<std::int64_t>());
  }
  return m;
}

inline json net_to_json(const QNet& net) {
  json j = json::object();
  j["kind"] = net.kind.to_string();
  j["places"] = labels_to_json(net.places);
  json ts = json::array();
  for (const auto& t : net.transitions) {
    json tj = json::object();
    tj["id"] = t.id;
    tj["src"] = marking_to_json(t.src);
    tj["tgt"] = marking_to_json(t.tgt);
    ts.push_back(std::move(tj));
  }
  j["transitions"] = std::move(ts);
  return j;
}

inline json open_net_to_json(const OpenNet& n) {
  json j = net_to_json(n.net);
  j["inputs"] = labels_to_json(n.input);
  j["outputs"] = labels_to_json(n.output);
  j["leg_in"] = leg_to_json(n.leg_in);
  j["leg_out"] = leg_to_json(n.leg_out);
  return j;
}

inline QNet net_from_json(const json& j) {
  if (!j.contains("kind")) throw parse_error("net: missing \"kind\"");
  ResourceKind kind = ResourceKind::parse(j.at("kind").get<std::string>());
  VertexSet places = labels_from_json(j.at("places"), "places");
  std::vector<Transition> transitions;
  for (const auto& t : j.value("transitions", json::array())) {
    transitions.push_back(Transition{t.at("id").get<std::string>(),
                                     marking_from_json(t.at("src")),
                                     marking_from_json(t.at("tgt"))});
  }
  QNet net{kind, std::move(places), std::move(transitions)};
  net.validate();
  return net;
}

inline PreNet prenet_from_json(const json& j) {
  VertexSet places = labels_from_json(j.at("places"), "places");
  std::vector<PreNetTransition> transitions;
  for (const auto& t : j.value("transitions", json::array())) {
    PreNetTransition pt;
    pt.id = t.at("id").get<std::string>();
    for (const auto& p : t.at("src")) pt.src.push_back(p.get<std::string>());
    for (const auto& p : t.at("tgt")) pt.tgt.push_back(p.get<std::string>());
    transitions.push_back(std::move(pt));
  }
  return PreNet{std::move(places), std::move(transitions)};
}

inline bool json_is_prenet(const json& j) {
  return j.contains("kind") && j.at("kind").is_string() &&
         j.at("kind").get<std::string>() == "prenet";
}

inline OpenNet open_net_from_json(const json& j) {
  QNet net = net_from_json(j);
  VertexSet input = labels_from_json(j.value("inputs", json::array()), "inputs");
  VertexSet output =
      labels_from_json(j.value("outputs", json::array()), "outputs");
  FiniteFunction leg_in =
      j.contains("leg_in")
          ? leg_from_json(j.at("leg_in"), input, net.places, "leg_in")
          : FiniteFunction::inclusion(input, net.places);
  FiniteFunction leg_out =
      j.contains("leg_out")
          ? leg_from_json(j.at("leg_out"), output, net.places, "leg_out")
          : FiniteFunction::inclusion(output, net.places);
  OpenNet out{std::move(input), std::move(output), std::move(leg_in),
              std::move(leg_out), std::move(net)};
  out.validate();
  return out;
}

inline json relation_to_json(const BoundaryRelation& rel) {
  json j = json::object();
  j["inputs"] = labels_to_json(rel.input);
  j["outputs"] = labels_to_json(rel.output);
  j["cap"] = rel.in_cap;
  j["out_cap"] = rel.out_cap;
  j["depth"] = rel.depth;
  json entries = json::array();
  for (const auto& e : rel.entries) {
    json ej = json::object();
    ej["from"] = marking_to_json(e.from);
    ej["to"] = marking_to_json(e.to);
    ej["count"] = e.total();
    ej["by_length"] = e.count_by_length;
    entries.push_back(std::move(ej));
  }
  j["relation"] = std::move(entries);
  return j;
}

// ---- DOT -------------------------------------------------------------------

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <Quantale Q>
std::string matrix_to_dot(const RMatrix<Q>& m) {
  const Q& q = m.quantale();
  std::string out = "digraph {\n";
  for (const auto& v : m.rows().labels())
    out += "  " + dot_quote(v) + ";\n";
  for (std::size_t i = 0; i < m.n_rows(); ++i)
    for (std::size_t j = 0; j < m.n_cols(); ++j) {
      if (q.eq(m.at(i, j), q.bottom())) continue;
      out += "  " + dot_quote(m.rows().label(i)) + " -> " +
             dot_quote(m.cols().label(j)) + " [label=" +
             dot_quote(format_value(q, m.at(i, j))) + "];\n";
    }
  out += "}\n";
  return out;
}

inline std::string graph_to_dot(const Graph& g) {
  std::string out = "digraph {\n";
  for (const auto& v : g.vertices().labels())
    out += "  " + dot_quote(v) + ";\n";
  for (const auto& e : g.edges())
    out += "  " + dot_quote(e.src) + " -> " + dot_quote(e.tgt) +
           " [label=" + dot_quote(e.id) + "];\n";
  out += "}\n";
  return out;
}

// Minimal DOT reader: node and edge statements only, one per line.
inline Graph graph_from_dot(const std::string& text) {
  std::vector<std::string> vertices;
  std::vector<Edge> edges;
  auto trim = [](std::string s) {
    const char* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    auto e = s.find_last_not_of(ws);
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  auto unquote = [&trim](std::string s) {
    s = trim(std::move(s));
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
      return s.substr(1, s.size() - 2);
    return s;
  };
  auto add_vertex = [&](const std::string& v) {
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end())
      vertices.push_back(v);
  };
  std::istringstream in(text);
  std::string line;
  std::size_t next_edge = 0;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty() || line[0] == '#' || line.rfind("//", 0) == 0) continue;
    if (line.find('{') != std::string::npos ||
        line.find('}') != std::string::npos)
      continue;
    if (!line.empty() && line.back() == ';') line.pop_back();
    std::string label;
    auto attr = line.find('[');
    if (attr != std::string::npos) {
      std::string attrs = line.substr(attr);
      line = trim(line.substr(0, attr));
      auto lab = attrs.find("label=");
      if (lab != std::string::npos) {
        std::string rest = attrs.substr(lab + 6);
        auto end = rest.find_first_of(",]");
        label = unquote(rest.substr(0, end));
      }
    }
    auto arrow = line.find("->");
    if (arrow == std::string::npos) {
      std::string v = unquote(line);
      if (!v.empty()) add_vertex(v);
      continue;
    }
    std::string src = unquote(line.substr(0, arrow));
    std::string tgt = unquote(line.substr(arrow + 2));
    add_vertex(src);
    add_vertex(tgt);
    std::string id = label.empty() ? "e" + std::to_string(next_edge) : label;
    ++next_edge;
    edges.push_back(Edge{id, src, tgt});
  }
  return Graph(VertexSet(std::move(vertices)), std::move(edges));
}

// ---- human-readable tables --------------------------------------------------

template <Quantale Q>
std::string matrix_to_table(const RMatrix<Q>& m) {
  const Q& q = m.quantale();
  std::vector<std::vector<std::string>> cells(m.n_rows() + 1);
  cells[0].push_back("");
  for (const auto& c : m.cols().labels()) cells[0].push_back(c);
  for (std::size_t i = 0; i < m.n_rows(); ++i) {
    cells[i + 1].push_back(m.rows().label(i));
    for (std::size_t j = 0; j < m.n_cols(); ++j)
      cells[i + 1].push_back(format_value(q, m.at(i, j)));
  }
  std::vector<std::size_t> widths(m.n_cols() + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c)
      widths[c] = std::max(widths[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += std::string(widths[c] - row[c].size(), ' ') + row[c];
      out += c + 1 == row.size() ? "" : "  ";
    }
    out += "\n";
  }
  return out;
}

}  // namespace qpath::io
