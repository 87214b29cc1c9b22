#ifndef PTRANS_IO_HPP
#define PTRANS_IO_HPP

#include <algorithm>
#include <cctype>
#include <fstream>
#include <initializer_list>
#include <map>
#include <memory>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "bundle.hpp"
#include "group.hpp"
#include "scheme.hpp"
#include "simplicial.hpp"
#include "sweep.hpp"

namespace ptrans {

using json = nlohmann::json;

/// Malformed input text; line and column are 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ": " + what
                                : what),
        line_(line),
        column_(column)
  {
  }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates a structural invariant (closure, purity).
class ValidationError : public std::runtime_error {
 public:
  ValidationError(const std::string& what, std::vector<Diagnostic> diagnostics)
      : std::runtime_error(what), diagnostics_(std::move(diagnostics))
  {
  }
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

inline std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::ios_base::failure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline json parse_json(std::string_view text)
{
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos)
      msg = msg.substr(p);
    throw ParseError(msg, line, column);
  }
}

inline void only_keys(const json& j, std::initializer_list<const char*> allowed, const char* what)
{
  if (!j.is_object())
    throw ParseError(std::string(what) + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* a : allowed)
      ok = ok || key == a;
    if (!ok)
      throw ParseError(std::string(what) + ": unknown key '" + key + "'");
  }
}

inline std::string as_string(const json& j, const std::string& what)
{
  if (!j.is_string())
    throw ParseError(what + " must be a string");
  return j.get<std::string>();
}

inline std::vector<VertexId> as_vertex_list(const json& j, std::size_t arity, const std::string& what)
{
  if (!j.is_array() || (arity && j.size() != arity))
    throw ParseError(what + " must be an array of " + std::to_string(arity) + " vertex names");
  std::vector<VertexId> out;
  for (const auto& v : j)
    out.push_back(as_string(v, what + " entry"));
  return out;
}

}  // namespace detail

/// Reads a complex file without checking closure or purity.
///   {"vertices": [...], "triangles": [[a,b,c],...], "edges": [[a,b],...], "pure_dim2": bool}
inline SimplicialComplex parse_complex(std::string_view text)
{
  const json j = detail::parse_json(text);
  detail::only_keys(j, {"vertices", "triangles", "edges", "pure_dim2"}, "complex");
  if (!j.contains("vertices"))
    throw ParseError("complex: missing key 'vertices'");
  std::vector<VertexId> vertices = detail::as_vertex_list(j.at("vertices"), 0, "vertices");
  std::vector<Triangle> triangles;
  if (j.contains("triangles")) {
    if (!j.at("triangles").is_array())
      throw ParseError("triangles must be an array");
    for (const auto& t : j.at("triangles")) {
      auto vs = detail::as_vertex_list(t, 3, "triangle");
      triangles.push_back({vs[0], vs[1], vs[2]});
    }
  }
  std::vector<Edge> edges;
  if (j.contains("edges")) {
    if (!j.at("edges").is_array())
      throw ParseError("edges must be an array");
    for (const auto& e : j.at("edges")) {
      auto vs = detail::as_vertex_list(e, 2, "edge");
      edges.push_back({vs[0], vs[1]});
    }
  }
  bool pure = false;
  if (j.contains("pure_dim2")) {
    if (!j.at("pure_dim2").is_boolean())
      throw ParseError("pure_dim2 must be a boolean");
    pure = j.at("pure_dim2").get<bool>();
  }
  try {
    return SimplicialComplex(vertices, triangles, edges, pure);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// parse_complex plus validation; closure (and purity when declared) must hold.
inline SimplicialComplex load_complex(std::string_view text)
{
  SimplicialComplex k = parse_complex(text);
  auto diags = validate_complex(k, k.pure_dim2());
  if (!diags.empty()) {
    std::string msg = diags.front().rule + " violation: " + diags.front().message;
    throw ValidationError(msg, std::move(diags));
  }
  return k;
}

inline json complex_to_json(const SimplicialComplex& k)
{
  json j;
  j["vertices"] = json::array();
  for (const auto& v : k.vertices())
    j["vertices"].push_back(v);
  j["triangles"] = json::array();
  for (const auto& t : k.triangles())
    j["triangles"].push_back({t[0], t[1], t[2]});
  if (!k.declared_edges().empty()) {
    j["edges"] = json::array();
    for (const auto& [a, b] : k.declared_edges())
      j["edges"].push_back({a, b});
  }
  j["pure_dim2"] = k.pure_dim2();
  return j;
}

/// {"free": [names]}, {"cyclic": n}, {"symmetric": n}, {"dihedral": n},
/// {"product": [descriptors]} or a bare array of descriptors (product).
inline Group parse_group(const json& j)
{
  try {
    if (j.is_array()) {
      std::vector<Group> factors;
      for (const auto& f : j)
        factors.push_back(parse_group(f));
      return Group::product(std::move(factors));
    }
    if (!j.is_object() || j.size() != 1)
      throw ParseError("group descriptor must be an object with exactly one key");
    const std::string key = j.begin().key();
    const json& value = j.begin().value();
    auto need_int = [&]() {
      if (!value.is_number_integer())
        throw ParseError("group descriptor '" + key + "' needs an integer");
      return value.get<std::int64_t>();
    };
    if (key == "free") {
      std::vector<std::string> gens;
      if (!value.is_array())
        throw ParseError("free group descriptor needs an array of generator names");
      for (const auto& g : value)
        gens.push_back(detail::as_string(g, "generator"));
      return Group::free(gens);
    }
    if (key == "cyclic")
      return Group::cyclic(need_int());
    if (key == "symmetric")
      return Group::symmetric(need_int());
    if (key == "dihedral")
      return Group::dihedral(need_int());
    if (key == "product")
      return parse_group(value.is_array() ? value : json::array());
    throw ParseError("unknown group backend '" + key + "'");
  } catch (const GroupError& e) {
    throw ParseError(e.what());
  }
}

inline Group parse_group(std::string_view text) { return parse_group(detail::parse_json(text)); }

inline json group_to_json(const Group& g)
{
  switch (g.kind()) {
    case Group::Kind::free: return {{"free", g.free_generators()}};
    case Group::Kind::cyclic: return {{"cyclic", g.n()}};
    case Group::Kind::symmetric: return {{"symmetric", g.n()}};
    case Group::Kind::dihedral: return {{"dihedral", g.n()}};
    case Group::Kind::product: {
      json arr = json::array();
      for (const auto& f : g.factors())
        arr.push_back(group_to_json(f));
      return {{"product", arr}};
    }
  }
  return {};
}

/// Element text, or for products optionally an array of factor texts.
inline Element parse_element(const json& j, const Group& g)
{
  if (j.is_array() && g.kind() == Group::Kind::product) {
    if (j.size() != g.factors().size())
      throw ParseError("product element needs " + std::to_string(g.factors().size()) + " entries");
    std::vector<Element> parts;
    for (std::size_t i = 0; i < j.size(); ++i)
      parts.push_back(parse_element(j[i], g.factors()[i]));
    return {parts};
  }
  if (j.is_number_integer())
    return g.parse(std::to_string(j.get<std::int64_t>()));
  return g.parse(detail::as_string(j, "element"));
}

inline json path_to_json(const EdgePath& p)
{
  json arr = json::array();
  for (const auto& s : p.steps())
    arr.push_back({s.from, s.to});
  return arr;
}

inline EdgePath path_from_json(const json& j)
{
  if (!j.is_array() || j.empty())
    throw ParseError("path must be a nonempty array of [from, to] pairs");
  std::vector<Step> steps;
  for (const auto& s : j) {
    auto vs = detail::as_vertex_list(s, 2, "path step");
    steps.push_back({vs[0], vs[1]});
  }
  try {
    return EdgePath(std::move(steps));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

/// Vertex sequence "a,b,d,a" (commas or whitespace); a single vertex is the identity.
inline EdgePath parse_vertex_sequence(std::string_view text)
{
  std::vector<VertexId> vs;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty())
        vs.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty())
    vs.push_back(cur);
  if (vs.empty())
    throw ParseError("empty vertex sequence");
  return EdgePath::through(std::span<const VertexId>(vs));
}

/// {"group": descriptor, "edges": {"a>b": elem, ...}, "cells": {...},
///  "cell_relations": [[lhs, rhs, "equal"|"inverse"], ...]}
///
/// extra_generators extend a free group before any value is parsed.
inline Connection2 load_connection(std::string_view text,
                                   std::shared_ptr<const SimplicialComplex> complex,
                                   const std::vector<std::string>& extra_generators = {})
{
  const json j = detail::parse_json(text);
  detail::only_keys(j, {"group", "edges", "cells", "cell_relations"}, "connection");
  if (!j.contains("group"))
    throw ParseError("connection: missing key 'group'");
  Group g = parse_group(j.at("group"));
  if (!extra_generators.empty())
    g = g.with_generators(extra_generators);

  try {
    std::map<OrderedEdge, Element> values;
    if (j.contains("edges")) {
      if (!j.at("edges").is_object())
        throw ParseError("connection 'edges' must be an object");
      for (const auto& [key, value] : j.at("edges").items()) {
        auto gt = key.find('>');
        if (gt == std::string::npos || gt == 0 || gt + 1 == key.size())
          throw ParseError("edge key '" + key + "' must look like \"a>b\"");
        OrderedEdge e{key.substr(0, gt), key.substr(gt + 1)};
        if (!values.emplace(e, parse_element(value, g)).second)
          throw ParseError("edge " + key + " given twice");
      }
    }
    Connection1 base(g, complex, std::move(values));

    std::map<std::string, Element> cells;
    if (j.contains("cells")) {
      if (!j.at("cells").is_object())
        throw ParseError("connection 'cells' must be an object");
      for (const auto& [key, value] : j.at("cells").items())
        cells.emplace(key, parse_element(value, g));
    }
    std::vector<CellRelation> relations;
    if (j.contains("cell_relations")) {
      for (const auto& r : j.at("cell_relations")) {
        if (!r.is_array() || r.size() != 3)
          throw ParseError("cell relation must be [lhs, rhs, \"equal\"|\"inverse\"]");
        std::string kind = detail::as_string(r[2], "relation kind");
        if (kind != "equal" && kind != "inverse")
          throw ParseError("unknown relation kind '" + kind + "'");
        relations.push_back({detail::as_string(r[0], "relation lhs"),
                             detail::as_string(r[1], "relation rhs"),
                             kind == "inverse" ? CellRelation::Kind::inverse
                                               : CellRelation::Kind::equal});
      }
    }
    return Connection2(std::move(base), cells, std::move(relations));
  } catch (const GroupError& e) {
    throw ParseError(e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

inline json connection_to_json(const Connection2& c)
{
  const Group& g = c.group();
  json j;
  j["group"] = group_to_json(g);
  j["edges"] = json::object();
  for (const auto& [e, v] : c.base().stored())
    j["edges"][e.first + ">" + e.second] = g.format(v);
  j["cells"] = json::object();
  for (const auto& [name, v] : c.cells())
    j["cells"][name] = g.format(v);
  if (!c.relations().empty()) {
    j["cell_relations"] = json::array();
    for (const auto& r : c.relations())
      j["cell_relations"].push_back(
          {r.lhs, r.rhs, r.kind == CellRelation::Kind::inverse ? "inverse" : "equal"});
  }
  return j;
}

inline json step_to_json(const HomotopyStep& m)
{
  json j;
  j["move"] = to_string(m.move);
  if (m.move == MoveKind::x1_insert)
    j["vertex"] = m.cell.at(0);
  else if (!m.cell.empty())
    j["cell"] = join_cell_name(m.cell);
  j["position"] = m.position;
  return j;
}

inline HomotopyStep step_from_json(const json& j)
{
  detail::only_keys(j, {"move", "cell", "vertex", "position"}, "scheme step");
  if (!j.contains("move") || !j.contains("position"))
    throw ParseError("scheme step needs 'move' and 'position'");
  HomotopyStep m;
  try {
    m.move = parse_move_kind(detail::as_string(j.at("move"), "move"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  if (!j.at("position").is_number_unsigned())
    throw ParseError("position must be a nonnegative integer");
  m.position = j.at("position").get<std::size_t>();
  if (j.contains("cell"))
    m.cell = split_cell_name(detail::as_string(j.at("cell"), "cell"));
  if (j.contains("vertex"))
    m.cell = {detail::as_string(j.at("vertex"), "vertex")};
  return m;
}

inline json scheme_to_json(const SweepScheme& s)
{
  json j;
  j["start"] = path_to_json(s.start);
  j["steps"] = json::array();
  for (const auto& m : s.steps)
    j["steps"].push_back(step_to_json(m));
  return j;
}

/// {"start": [[a,c],[c,b]], "steps": [{"move": "alpha_merge", "cell": "a.c.b", "position": 0}, ...]}
inline SweepScheme parse_scheme(std::string_view text)
{
  const json j = detail::parse_json(text);
  detail::only_keys(j, {"start", "steps"}, "scheme");
  if (!j.contains("start"))
    throw ParseError("scheme: missing key 'start'");
  SweepScheme s{path_from_json(j.at("start")), {}};
  if (j.contains("steps")) {
    if (!j.at("steps").is_array())
      throw ParseError("scheme 'steps' must be an array");
    for (const auto& m : j.at("steps"))
      s.steps.push_back(step_from_json(m));
  }
  return s;
}

inline json section_to_json(const Section& s, const Group& g)
{
  json letters = json::array();
  for (const auto& l : s.letters)
    letters.push_back(g.format(l));
  return {{"path", path_to_json(s.path)}, {"letters", letters}};
}

inline Section section_from_json(const json& j, const Group& g)
{
  detail::only_keys(j, {"path", "letters"}, "section");
  std::vector<Element> letters;
  for (const auto& l : j.at("letters"))
    letters.push_back(parse_element(l, g));
  return Section(path_from_json(j.at("path")), std::move(letters));
}

inline json gauge_to_json(const GaugeTransform& n, const Group& g)
{
  json j = json::object();
  for (const auto& [v, x] : n)
    j[v] = g.format(x);
  return j;
}

inline json defects_to_json(const DefectReport& r, const Group& g)
{
  json defects = json::array();
  for (const auto& d : r.defects)
    defects.push_back(g.format(d));
  return {{"path", path_to_json(r.path)}, {"defects", defects}, {"gauge", gauge_to_json(r.gauge_used, g)}};
}

/// {"trace": [{"path": ..., "letters": ...}, ...], "scheme": ..., "notes": [...]}
inline json trace_to_json(const SweepTrace& t, const Group& g)
{
  json arr = json::array();
  for (const auto& s : t.sections)
    arr.push_back(section_to_json(s, g));
  json j{{"trace", arr}, {"scheme", scheme_to_json(t.scheme)}};
  if (!t.notes.empty())
    j["notes"] = t.notes;
  return j;
}

inline std::vector<Section> trace_sections_from_json(const json& j, const Group& g)
{
  std::vector<Section> out;
  for (const auto& s : j.at("trace"))
    out.push_back(section_from_json(s, g));
  return out;
}

}  // namespace ptrans

#endif  // PTRANS_IO_HPP
