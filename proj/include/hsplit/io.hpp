#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hsplit/apps.hpp"

namespace hsplit {

namespace io_detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

struct Line {
  std::size_t number;
  std::string key;                // text before the first ':' or the first token
  std::vector<std::string> rest;  // remaining tokens
};

// Non-empty, non-comment lines. A leading `key:` is split off; lines
// without a colon use their first token as the key.
inline std::vector<Line> lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream is(text);
  std::size_t n = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++n;
    auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos || raw[first] == '#') continue;
    auto ts = tokens(raw);
    Line l{n, ts[0], {ts.begin() + 1, ts.end()}};
    if (l.key.size() > 1 && l.key.back() == ':') l.key.pop_back();
    out.push_back(std::move(l));
  }
  return out;
}

[[noreturn]] inline void fail(const Line& l, const std::string& why) {
  throw InputError("line " + std::to_string(l.number) + ": " + why);
}

inline bool is_separator(const std::string& s) { return s == "|" || s == "/" || s == ";" || s == "->"; }

inline void check_labels(const std::vector<std::string>& names) {
  for (const auto& s : names)
    if (is_separator(s) || s.find(':') != std::string::npos || s[0] == '#')
      throw InputError("vertex label '" + s + "' is reserved");
}

// Splits tokens on a separator token.
inline std::vector<std::vector<std::string>> split(const std::vector<std::string>& ts, const std::string& sep) {
  std::vector<std::vector<std::string>> out(1);
  for (const auto& t : ts) {
    if (t == sep) out.emplace_back();
    else out.back().push_back(t);
  }
  return out;
}

inline Weight weight_token(const Line& l, const std::string& t) {
  try {
    return parse_weight(t);
  } catch (const InputError&) {
    fail(l, "bad weight '" + t + "'");
  }
}

inline VertexSet edge_of(const Line& l, const Hypergraph& h, const std::vector<std::string>& names) {
  if (names.empty()) fail(l, "empty hyperedge");
  VertexSet e;
  try {
    e = h.vertex_set(names);
  } catch (const InputError& ex) {
    fail(l, ex.what());
  }
  if (e.size() != names.size()) fail(l, "repeated vertex in hyperedge");
  return e;
}

inline std::string join(const Hypergraph& h, const VertexSet& e) {
  std::string out;
  for (Vertex v : e) {
    if (!out.empty()) out += ' ';
    out += h.label(v);
  }
  return out;
}

inline std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& s : names) {
    if (!out.empty()) out += ' ';
    out += s;
  }
  return out;
}

inline Hypergraph header(const std::vector<Line>& ls, std::size_t& i) {
  if (ls.empty() || ls[0].key != "vertices") throw InputError("expected a 'vertices:' line first");
  check_labels(ls[0].rest);
  i = 1;
  return Hypergraph(ls[0].rest);
}

inline Weight json_weight(const nlohmann::json& j) {
  if (j.is_number_unsigned() || j.is_number_integer()) {
    if (j.get<long long>() < 0) throw InputError("negative weight");
    return Weight(j.get<long long>());
  }
  if (j.is_string()) return parse_weight(j.get<std::string>());
  throw InputError("weight must be an integer or a decimal string");
}

}  // namespace io_detail

inline nlohmann::json weight_json(const Weight& w) {
  if (fits_int64(w)) return static_cast<long long>(w);
  return w.str();
}

inline nlohmann::json weight_json(const ExtInt& w) {
  if (!w.finite()) return w.str();
  return weight_json(w.value());
}

// ---- hypergraphs ----

inline Hypergraph parse_hypergraph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad JSON: ") + ex.what());
  }
  try {
    std::vector<std::string> names = j.at("vertices").get<std::vector<std::string>>();
    io_detail::check_labels(names);
    Hypergraph h(names);
    for (const auto& e : j.at("edges")) {
      auto vs = e.at("vs").get<std::vector<std::string>>();
      VertexSet s = h.vertex_set(vs);
      if (s.empty() || s.size() != vs.size()) throw InputError("bad hyperedge in JSON");
      h.add(s, io_detail::json_weight(e.at("w")));
    }
    return h;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("bad hypergraph JSON: ") + ex.what());
  }
}

inline Hypergraph parse_hypergraph(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_hypergraph_json(text);
  auto ls = io_detail::lines(text);
  std::size_t i;
  Hypergraph h = io_detail::header(ls, i);
  for (; i < ls.size(); ++i) {
    const auto& l = ls[i];
    if (l.key != "edge") io_detail::fail(l, "expected 'edge:'");
    if (l.rest.empty()) io_detail::fail(l, "missing weight");
    Weight w = io_detail::weight_token(l, l.rest[0]);
    h.add(io_detail::edge_of(l, h, {l.rest.begin() + 1, l.rest.end()}), w);
  }
  return h;
}

inline std::string format_hypergraph(const Hypergraph& h) {
  std::string out = "vertices:";
  for (const auto& s : h.labels()) out += " " + s;
  out += "\n";
  for (const auto& [e, w] : h.edges()) out += "edge: " + w.str() + " " + io_detail::join(h, e) + "\n";
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- requirements ----

inline RequirementFunction parse_requirements(const std::string& text, const Hypergraph& h) {
  RequirementFunction r(h.num_vertices());
  for (const auto& l : io_detail::lines(text)) {
    if (l.key != "req" || l.rest.size() != 3) io_detail::fail(l, "expected 'req: <u> <v> <value>'");
    auto e = io_detail::edge_of(l, h, {l.rest[0], l.rest[1]});
    if (e.size() != 2) io_detail::fail(l, "requirement needs two distinct vertices");
    r.set(e[0], e[1], io_detail::weight_token(l, l.rest[2]));
  }
  return r;
}

// ---- splitting-off scripts ----

inline std::string format_split_script(const SplitOffScript& s, const Hypergraph& g) {
  std::string out = "vertex: " + g.label(s.vertex) + "\n";
  for (const auto& op : s.ops) {
    if (op.kind == SplitOp::Kind::hmerge)
      out += "hmerge " + op.alpha.str() + " | " + io_detail::join(g, op.e) + " | " + io_detail::join(g, op.f) + "\n";
    else
      out += "htrim " + op.alpha.str() + " | " + io_detail::join(g, op.e) + "\n";
  }
  return out;
}

inline SplitOffScript parse_split_script(const std::string& text, const Hypergraph& g) {
  auto ls = io_detail::lines(text);
  if (ls.empty() || ls[0].key != "vertex" || ls[0].rest.size() != 1)
    throw InputError("expected a 'vertex: <label>' line first");
  SplitOffScript s;
  try {
    s.vertex = g.vertex(ls[0].rest[0]);
  } catch (const InputError& ex) {
    io_detail::fail(ls[0], ex.what());
  }
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto& l = ls[i];
    auto parts = io_detail::split(l.rest, "|");
    SplitOp op;
    if (l.key == "hmerge" && parts.size() == 3) op.kind = SplitOp::Kind::hmerge;
    else if (l.key == "htrim" && parts.size() == 2) op.kind = SplitOp::Kind::htrim;
    else io_detail::fail(l, "expected 'hmerge <a> | <e> | <f>' or 'htrim <a> | <e>'");
    if (parts[0].size() != 1) io_detail::fail(l, "expected one amount");
    op.alpha = io_detail::weight_token(l, parts[0][0]);
    op.e = io_detail::edge_of(l, g, parts[1]);
    if (op.kind == SplitOp::Kind::hmerge) op.f = io_detail::edge_of(l, g, parts[2]);
    s.ops.push_back(std::move(op));
  }
  return s;
}

// ---- orientations ----

// `head: <v> [<count>] | <e...>`; the count defaults to 1 and lines for the
// same hyperedge accumulate.
inline std::string format_orientation(const OrientedHypergraph& oh) {
  const Hypergraph& g = oh.graph;
  std::string out = "vertices:";
  for (const auto& s : g.labels()) out += " " + s;
  out += "\n";
  for (const auto& [e, hs] : oh.heads)
    for (const auto& [h, c] : hs) {
      out += "head: " + g.label(h);
      if (c != 1) out += " " + c.str();
      out += " | " + io_detail::join(g, e) + "\n";
    }
  return out;
}

inline OrientedHypergraph parse_orientation(const std::string& text) {
  auto ls = io_detail::lines(text);
  std::size_t i;
  OrientedHypergraph oh{io_detail::header(ls, i), {}};
  for (; i < ls.size(); ++i) {
    const auto& l = ls[i];
    auto parts = io_detail::split(l.rest, "|");
    if (l.key != "head" || parts.size() != 2 || parts[0].empty() || parts[0].size() > 2)
      io_detail::fail(l, "expected 'head: <v> [<count>] | <e...>'");
    VertexSet e = io_detail::edge_of(l, oh.graph, parts[1]);
    VertexSet hv = io_detail::edge_of(l, oh.graph, {parts[0][0]});
    Weight c = parts[0].size() == 2 ? io_detail::weight_token(l, parts[0][1]) : Weight(1);
    if (c == 0) io_detail::fail(l, "zero head count");
    if (!e.contains(hv.front())) io_detail::fail(l, "head outside its hyperedge");
    oh.graph.add(e, c);
    oh.heads[e][hv.front()] += c;
  }
  oh.validate();
  return oh;
}

// ---- pinching scripts ----

inline std::string format_pinching(const PinchingScript& s) {
  std::string out = "start: " + s.start + "\n";
  for (const auto& st : s.steps) {
    if (st.kind == PinchStep::Kind::add) {
      out += "add: " + st.count.str() + " " + io_detail::join(st.edge) + "\n";
      continue;
    }
    const auto& op = st.pinch;
    out += "pinch: k=" + std::to_string(op.k) + " p=" + std::to_string(op.parts.size()) + " s=" + op.s;
    for (const auto& part : op.parts) {
      out += " ; " + io_detail::join(part.edge) + " ->";
      for (std::size_t j = 0; j < part.pieces.size(); ++j) out += (j ? " / " : " ") + io_detail::join(part.pieces[j]);
    }
    out += "\n";
  }
  return out;
}

inline PinchingScript parse_pinching(const std::string& text) {
  auto ls = io_detail::lines(text);
  if (ls.empty() || ls[0].key != "start" || ls[0].rest.size() != 1)
    throw InputError("expected a 'start: <label>' line first");
  PinchingScript s;
  s.start = ls[0].rest[0];
  io_detail::check_labels({s.start});
  auto number = [](const io_detail::Line& l, const std::string& t, const std::string& key) -> long long {
    if (t.rfind(key + "=", 0) != 0) io_detail::fail(l, "expected '" + key + "='");
    std::string v = t.substr(key.size() + 1);
    if (v.empty() || v.size() > 18 || v.find_first_not_of("0123456789") != std::string::npos)
      io_detail::fail(l, "bad number in '" + t + "'");
    return std::stoll(v);
  };
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto& l = ls[i];
    PinchStep st;
    if (l.key == "add") {
      if (l.rest.size() < 2) io_detail::fail(l, "expected 'add: <w> <e...>'");
      st.kind = PinchStep::Kind::add;
      st.count = io_detail::weight_token(l, l.rest[0]);
      st.edge = {l.rest.begin() + 1, l.rest.end()};
    } else if (l.key == "pinch") {
      auto groups = io_detail::split(l.rest, ";");
      if (groups[0].size() != 3) io_detail::fail(l, "expected 'pinch: k=<k> p=<p> s=<label>'");
      st.kind = PinchStep::Kind::pinch;
      st.pinch.k = number(l, groups[0][0], "k");
      long long p = number(l, groups[0][1], "p");
      if (groups[0][2].rfind("s=", 0) != 0 || groups[0][2].size() < 3) io_detail::fail(l, "expected 's=<label>'");
      st.pinch.s = groups[0][2].substr(2);
      io_detail::check_labels({st.pinch.s});
      for (std::size_t g = 1; g < groups.size(); ++g) {
        auto arrow = io_detail::split(groups[g], "->");
        if (arrow.size() != 2 || arrow[0].empty()) io_detail::fail(l, "expected '<e> -> <f> / <f> ...'");
        PinchPart part{arrow[0], io_detail::split(arrow[1], "/")};
        st.pinch.parts.push_back(std::move(part));
      }
      if (static_cast<long long>(st.pinch.parts.size()) != p) io_detail::fail(l, "p differs from the part count");
    } else {
      io_detail::fail(l, "expected 'add:' or 'pinch:'");
    }
    s.steps.push_back(std::move(st));
  }
  return s;
}

// ---- cover results ----

inline nlohmann::json set_json(const Hypergraph& g, const VertexSet& e) {
  auto j = nlohmann::json::array();
  for (Vertex v : e) j.push_back(g.label(v));
  return j;
}

inline nlohmann::json edges_json(const Hypergraph& g, const EdgeMap& m) {
  auto j = nlohmann::json::array();
  for (const auto& [e, w] : m) j.push_back({{"w", weight_json(w)}, {"vs", set_json(g, e)}});
  return j;
}

// `g` supplies the labels.
inline nlohmann::json cover_result_json(const CoverResult& r, const Hypergraph& g) {
  nlohmann::json j;
  j["edges"] = edges_json(g, r.edges);
  j["carved"] = edges_json(g, r.carved);
  auto tr = nlohmann::json::array();
  for (const auto& t : r.trace.entries) {
    if (t.kind == TraceEntry::Kind::merge)
      tr.push_back({{"kind", "merge"}, {"e", set_json(g, t.e)}, {"f", set_json(g, t.f)}, {"alpha", weight_json(t.alpha)}});
    else
      tr.push_back({{"kind", "reduce"}, {"e", set_json(g, t.e)}, {"alpha", weight_json(t.alpha)}});
  }
  j["trace"] = tr;
  auto st = nlohmann::json::array();
  for (const auto& s : r.steps)
    st.push_back({{"e", set_json(g, s.e)},
                  {"f", set_json(g, s.f)},
                  {"betaM", weight_json(s.beta_m)},
                  {"alphaM", weight_json(s.alpha_m)},
                  {"betaR", weight_json(s.beta_r)},
                  {"alphaR", weight_json(s.alpha_r)},
                  {"Z", set_json(g, s.z)}});
  j["steps"] = st;
  j["depth"] = r.depth;
  return j;
}

}  // namespace hsplit
