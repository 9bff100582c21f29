#include "crossdrop/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "crossdrop/errors.hpp"

namespace crossdrop {

namespace {

void normalize_rotation(std::vector<Dart>& rotation) {
  if (rotation.empty()) return;
  auto smallest = std::min_element(rotation.begin(), rotation.end());
  std::rotate(rotation.begin(), smallest, rotation.end());
}

}  // namespace

SignedPlaneGraph::SignedPlaneGraph(std::string name, std::vector<PlaneVertex> vertices,
                                   std::vector<PlaneEdge> edges,
                                   std::vector<std::string> dart_names)
    : name_(std::move(name)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      dart_names_(std::move(dart_names)) {
  if (vertices_.empty()) throw DomainError("a graph needs at least one vertex");
  std::sort(edges_.begin(), edges_.end(),
            [](const PlaneEdge& a, const PlaneEdge& b) { return a.id < b.id; });
  EdgeId max_id = -1;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].id < 0) throw DomainError("negative edge id");
    if (i > 0 && edges_[i - 1].id == edges_[i].id)
      throw DomainError("duplicate edge id " + std::to_string(edges_[i].id));
    max_id = edges_[i].id;
  }
  const std::size_t dart_space = 2 * static_cast<std::size_t>(max_id + 1);
  dart_vertex_.assign(dart_space, -1);
  dart_slot_.assign(dart_space, -1);

  auto edge_exists = [&](EdgeId id) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const PlaneEdge& e, EdgeId x) { return e.id < x; });
    return it != edges_.end() && it->id == id;
  };

  for (int v = 0; v < vertex_count(); ++v) {
    PlaneVertex& vertex = vertices_[v];
    if (vertex.name.empty()) vertex.name = "v" + std::to_string(v);
    normalize_rotation(vertex.rotation);
    for (int slot = 0; slot < static_cast<int>(vertex.rotation.size()); ++slot) {
      const Dart d = vertex.rotation[slot];
      if (d < 0 || static_cast<std::size_t>(d) >= dart_space || !edge_exists(edge_of(d)))
        throw DomainError("vertex " + vertex.name + " lists dart " + std::to_string(d) +
                          " of no edge");
      if (dart_vertex_[d] >= 0)
        throw DomainError("dart " + std::to_string(d) + " appears twice in the rotations");
      dart_vertex_[d] = v;
      dart_slot_[d] = slot;
    }
  }

  std::vector<GraphEdge> abstract_edges;
  abstract_edges.reserve(edges_.size());
  for (PlaneEdge& e : edges_) {
    const Dart d0 = first_dart(e.id);
    if (dart_vertex_[d0] < 0 || dart_vertex_[d0 + 1] < 0)
      throw DomainError("edge " + std::to_string(e.id) + " is missing from the rotations");
    if (e.name.empty()) e.name = "e" + std::to_string(e.id);
    abstract_edges.push_back({e.id, dart_vertex_[d0], dart_vertex_[d0 + 1], e.sign});
  }
  abstract_ = SignedGraph(vertex_count(), std::move(abstract_edges));

  dart_names_.resize(dart_space);
  for (std::size_t d = 0; d < dart_space; ++d) {
    if (dart_names_[d].empty()) dart_names_[d] = "h" + std::to_string(d);
  }

  // Euler check per component.
  const std::vector<int> label = component_labels(abstract_);
  const int components = *std::max_element(label.begin(), label.end()) + 1;
  std::vector<int> euler(components, 0);
  for (int v = 0; v < vertex_count(); ++v) euler[label[v]] += 1;
  for (const GraphEdge& e : abstract_.edges()) euler[label[e.u]] -= 1;
  for (const Face& f : faces(*this)) {
    const int v = f.isolated_vertex >= 0 ? f.isolated_vertex : vertex_of(f.darts.front());
    euler[label[v]] += 1;
  }
  for (int c = 0; c < components; ++c) {
    if (euler[c] != 2)
      throw DomainError("rotation system is not planar (component " + std::to_string(c) +
                        " has Euler characteristic " + std::to_string(euler[c]) + ")");
  }
}

const PlaneEdge& SignedPlaneGraph::edge(EdgeId id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const PlaneEdge& e, EdgeId x) { return e.id < x; });
  if (it == edges_.end() || it->id != id)
    throw DomainError("unknown edge id " + std::to_string(id));
  return *it;
}

EdgeId SignedPlaneGraph::edge_id(std::string_view edge_name) const {
  for (const PlaneEdge& e : edges_) {
    if (e.name == edge_name) return e.id;
  }
  throw DomainError("unknown edge '" + std::string(edge_name) + "'");
}

int SignedPlaneGraph::vertex_index(std::string_view vertex_name) const {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertices_[v].name == vertex_name) return v;
  }
  throw DomainError("unknown vertex '" + std::string(vertex_name) + "'");
}

int SignedPlaneGraph::vertex_of(Dart d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= dart_vertex_.size() || dart_vertex_[d] < 0)
    throw DomainError("unknown dart " + std::to_string(d));
  return dart_vertex_[d];
}

Dart SignedPlaneGraph::next_ccw(Dart d) const {
  const auto& rot = vertices_[vertex_of(d)].rotation;
  return rot[(dart_slot_[d] + 1) % rot.size()];
}

Dart SignedPlaneGraph::prev_ccw(Dart d) const {
  const auto& rot = vertices_[vertex_of(d)].rotation;
  return rot[(dart_slot_[d] + rot.size() - 1) % rot.size()];
}

const std::string& SignedPlaneGraph::dart_name(Dart d) const {
  vertex_of(d);
  return dart_names_[d];
}

SignedPlaneGraph SignedPlaneGraph::with_sign(EdgeId id, Sign sign) const {
  edge(id);
  std::vector<PlaneEdge> edges = edges_;
  for (PlaneEdge& e : edges) {
    if (e.id == id) e.sign = sign;
  }
  return SignedPlaneGraph(name_, vertices_, std::move(edges), dart_names_);
}

SignedPlaneGraph SignedPlaneGraph::renamed(std::string name) const {
  SignedPlaneGraph out = *this;
  out.name_ = std::move(name);
  return out;
}

std::string SignedPlaneGraph::to_text() const {
  std::ostringstream out;
  out << "graph " << (name_.empty() ? "unnamed" : name_) << '\n';
  for (const PlaneVertex& v : vertices_) {
    out << "vertex " << v.name << ':';
    for (Dart d : v.rotation) out << ' ' << dart_names_[d];
    out << '\n';
  }
  for (const PlaneEdge& e : edges_) {
    out << "edge " << e.name << ' ' << sign_char(e.sign) << " : "
        << dart_names_[first_dart(e.id)] << ' ' << dart_names_[first_dart(e.id) + 1] << '\n';
  }
  return out.str();
}

// --- parsing ---------------------------------------------------------------

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::string spaced;
  spaced.reserve(line.size() + 4);
  for (char c : line) {
    if (c == ':') {
      spaced += " : ";
    } else {
      spaced += c;
    }
  }
  std::istringstream in(spaced);
  std::vector<std::string> tokens;
  for (std::string t; in >> t;) tokens.push_back(t);
  return tokens;
}

}  // namespace

SignedPlaneGraph parse_graph(std::string_view text) {
  struct VertexLine {
    std::string name;
    std::vector<std::string> hids;
    int line;
  };
  struct EdgeLine {
    std::string name;
    Sign sign;
    std::string h0, h1;
    int line;
  };
  std::string graph_name;
  std::vector<VertexLine> vertex_lines;
  std::vector<EdgeLine> edge_lines;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::vector<std::string> tok = tokenize(raw);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    if (tok[0] == "graph") {
      if (tok.size() != 2) throw ParseError(line_no, "expected 'graph <name>'");
      if (!graph_name.empty()) throw ParseError(line_no, "duplicate graph line");
      graph_name = tok[1];
    } else if (tok[0] == "vertex") {
      if (tok.size() < 3 || tok[2] != ":" || tok[1] == ":")
        throw ParseError(line_no, "expected 'vertex <vid>: <hid> ...'");
      for (const VertexLine& v : vertex_lines) {
        if (v.name == tok[1]) throw ParseError(line_no, "duplicate vertex id '" + tok[1] + "'");
      }
      VertexLine v{tok[1], {tok.begin() + 3, tok.end()}, line_no};
      for (const std::string& h : v.hids) {
        if (h == ":") throw ParseError(line_no, "unexpected ':'");
      }
      vertex_lines.push_back(std::move(v));
    } else if (tok[0] == "edge") {
      if (tok.size() != 6 || tok[3] != ":")
        throw ParseError(line_no, "expected 'edge <eid> <+|-> : <hid> <hid>'");
      Sign sign;
      if (tok[2] == "+") {
        sign = Sign::kPositive;
      } else if (tok[2] == "-") {
        sign = Sign::kNegative;
      } else {
        throw ParseError(line_no, "unknown sign token '" + tok[2] + "'");
      }
      for (const EdgeLine& e : edge_lines) {
        if (e.name == tok[1]) throw ParseError(line_no, "duplicate edge id '" + tok[1] + "'");
      }
      if (tok[4] == tok[5])
        throw ParseError(line_no, "edge '" + tok[1] + "' uses half-edge '" + tok[4] + "' twice");
      edge_lines.push_back({tok[1], sign, tok[4], tok[5], line_no});
    } else {
      throw ParseError(line_no, "unknown record '" + tok[0] + "'");
    }
    if (end == text.size()) break;
  }

  if (vertex_lines.empty()) throw ParseError(0, "graph has no vertices");

  std::map<std::string, Dart> dart_of;
  std::vector<std::string> dart_names(2 * edge_lines.size());
  std::vector<PlaneEdge> edges;
  for (std::size_t i = 0; i < edge_lines.size(); ++i) {
    const EdgeLine& e = edge_lines[i];
    const EdgeId id = static_cast<EdgeId>(i);
    for (int end = 0; end < 2; ++end) {
      const std::string& h = end == 0 ? e.h0 : e.h1;
      if (!dart_of.emplace(h, first_dart(id) + end).second)
        throw ParseError(e.line, "half-edge '" + h + "' belongs to two edges");
      dart_names[first_dart(id) + end] = h;
    }
    edges.push_back({id, e.name, e.sign});
  }

  std::set<std::string> in_rotation;
  for (const VertexLine& v : vertex_lines) in_rotation.insert(v.hids.begin(), v.hids.end());
  for (const EdgeLine& e : edge_lines) {
    for (const std::string& h : {e.h0, e.h1}) {
      if (!in_rotation.count(h))
        throw ParseError(e.line, "edge '" + e.name + "' references half-edge '" + h +
                                     "' missing from every rotation");
    }
  }

  std::map<std::string, int> seen_at;
  std::vector<PlaneVertex> vertices;
  for (const VertexLine& v : vertex_lines) {
    PlaneVertex pv{v.name, {}};
    for (const std::string& h : v.hids) {
      auto it = dart_of.find(h);
      if (it == dart_of.end())
        throw ParseError(v.line, "half-edge '" + h + "' is not used by any edge");
      if (!seen_at.emplace(h, v.line).second)
        throw ParseError(v.line, "half-edge '" + h + "' appears in more than one rotation slot");
      pv.rotation.push_back(it->second);
    }
    vertices.push_back(std::move(pv));
  }

  try {
    return SignedPlaneGraph(graph_name, std::move(vertices), std::move(edges),
                            std::move(dart_names));
  } catch (const DomainError& err) {
    throw ParseError(0, err.what());
  }
}

// --- embedded operations ---------------------------------------------------

SignedPlaneGraph delete_edge(const SignedPlaneGraph& g, EdgeId e) {
  g.edge(e);
  std::vector<PlaneVertex> vertices = g.vertices();
  for (PlaneVertex& v : vertices) {
    std::erase_if(v.rotation, [&](Dart d) { return edge_of(d) == e; });
  }
  std::vector<PlaneEdge> edges;
  for (const PlaneEdge& pe : g.edges()) {
    if (pe.id != e) edges.push_back(pe);
  }
  std::vector<std::string> names;
  for (const PlaneEdge& pe : edges) {
    names.resize(std::max<std::size_t>(names.size(), first_dart(pe.id) + 2));
    names[first_dart(pe.id)] = g.dart_name(first_dart(pe.id));
    names[first_dart(pe.id) + 1] = g.dart_name(first_dart(pe.id) + 1);
  }
  return SignedPlaneGraph(g.name(), std::move(vertices), std::move(edges), std::move(names));
}

SignedPlaneGraph contract_edge(const SignedPlaneGraph& g, EdgeId e) {
  g.edge(e);
  const Dart hu = first_dart(e);
  const Dart hv = hu + 1;
  const int u = g.vertex_of(hu);
  const int v = g.vertex_of(hv);
  if (u == v) throw DomainError("cannot contract loop '" + g.edge(e).name + "'");

  auto after = [&](Dart h) {
    std::vector<Dart> out;
    for (Dart d = g.next_ccw(h); d != h; d = g.next_ccw(d)) out.push_back(d);
    return out;
  };
  std::vector<Dart> merged = after(hu);
  const std::vector<Dart> tail = after(hv);
  merged.insert(merged.end(), tail.begin(), tail.end());

  const int keep = std::min(u, v);
  const int gone = std::max(u, v);
  std::vector<PlaneVertex> vertices;
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (x == gone) continue;
    if (x == keep) {
      vertices.push_back({g.vertices()[keep].name, merged});
    } else {
      vertices.push_back(g.vertices()[x]);
    }
  }
  std::vector<PlaneEdge> edges;
  std::vector<std::string> names;
  for (const PlaneEdge& pe : g.edges()) {
    if (pe.id == e) continue;
    edges.push_back(pe);
    names.resize(std::max<std::size_t>(names.size(), first_dart(pe.id) + 2));
    names[first_dart(pe.id)] = g.dart_name(first_dart(pe.id));
    names[first_dart(pe.id) + 1] = g.dart_name(first_dart(pe.id) + 1);
  }
  return SignedPlaneGraph(g.name(), std::move(vertices), std::move(edges), std::move(names));
}

std::vector<Face> faces(const SignedPlaneGraph& g) {
  std::vector<Face> out;
  std::vector<bool> visited;
  for (const PlaneEdge& e : g.edges()) {
    visited.resize(std::max<std::size_t>(visited.size(), first_dart(e.id) + 2), false);
  }
  for (const PlaneEdge& e : g.edges()) {
    for (Dart start : {first_dart(e.id), first_dart(e.id) + 1}) {
      if (visited[start]) continue;
      Face f;
      Dart d = start;
      do {
        visited[d] = true;
        f.darts.push_back(d);
        d = g.next_ccw(twin(d));
      } while (d != start);
      out.push_back(std::move(f));
    }
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.vertices()[v].rotation.empty()) out.push_back({{}, v});
  }
  return out;
}

SignedPlaneGraph dual(const SignedPlaneGraph& g) {
  std::vector<PlaneVertex> vertices;
  int index = 0;
  for (const Face& f : faces(g)) {
    PlaneVertex pv{"f" + std::to_string(index++), {}};
    // The walk circles the face clockwise; the dual rotation runs the other way.
    pv.rotation.assign(f.darts.rbegin(), f.darts.rend());
    vertices.push_back(std::move(pv));
  }
  std::vector<PlaneEdge> edges;
  std::vector<std::string> names;
  for (const PlaneEdge& pe : g.edges()) {
    edges.push_back({pe.id, pe.name, opposite(pe.sign)});
    names.resize(std::max<std::size_t>(names.size(), first_dart(pe.id) + 2));
    names[first_dart(pe.id)] = g.dart_name(first_dart(pe.id));
    names[first_dart(pe.id) + 1] = g.dart_name(first_dart(pe.id) + 1);
  }
  const std::string name = g.name().empty() ? "dual" : g.name() + "_dual";
  return SignedPlaneGraph(name, std::move(vertices), std::move(edges), std::move(names));
}

SignedPlaneGraph draw_plane_graph(std::string name,
                                  const std::vector<std::pair<double, double>>& points,
                                  const std::vector<DrawnEdge>& edges) {
  const int n = static_cast<int>(points.size());
  std::vector<std::vector<std::pair<double, Dart>>> around(n);
  std::vector<PlaneEdge> plane_edges;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    const DrawnEdge& e = edges[i];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw DomainError("drawn edge endpoint out of range");
    if (e.u == e.v) throw DomainError("draw_plane_graph does not draw loops");
    auto angle = [&](int from, int to, double offset) {
      const double a = std::atan2(points[to].second - points[from].second,
                                  points[to].first - points[from].first) + offset;
      const double turn = 2 * std::numbers::pi;
      return std::fmod(std::fmod(a, turn) + turn, turn);
    };
    around[e.u].push_back({angle(e.u, e.v, e.bend), first_dart(i)});
    around[e.v].push_back({angle(e.v, e.u, -e.bend), first_dart(i) + 1});
    plane_edges.push_back({i, "e" + std::to_string(i + 1), e.sign});
  }
  std::vector<PlaneVertex> vertices;
  for (int v = 0; v < n; ++v) {
    std::sort(around[v].begin(), around[v].end());
    PlaneVertex pv{"v" + std::to_string(v + 1), {}};
    for (const auto& [a, d] : around[v]) pv.rotation.push_back(d);
    vertices.push_back(std::move(pv));
  }
  return SignedPlaneGraph(std::move(name), std::move(vertices), std::move(plane_edges));
}

}  // namespace crossdrop
