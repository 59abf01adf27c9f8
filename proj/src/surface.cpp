#include "fukaya/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fukaya {

size_t GradedRibbonGraph::position(int h) const {
  const RibbonVertex& v = vertices[half_edges[h].vertex];
  for (size_t i = 0; i < v.half_edges.size(); ++i)
    if (v.half_edges[i] == h) return i;
  throw Error("surface: half-edge not found at its vertex");
}

int GradedRibbonGraph::next_half_edge(int h) const {
  const RibbonVertex& v = vertices[half_edges[h].vertex];
  size_t i = position(h);
  return v.half_edges[(i + 1) % v.half_edges.size()];
}

int GradedRibbonGraph::prev_half_edge(int h) const {
  const RibbonVertex& v = vertices[half_edges[h].vertex];
  size_t i = position(h);
  return v.half_edges[(i + v.half_edges.size() - 1) % v.half_edges.size()];
}

bool GradedRibbonGraph::corner_is_gap(int h) const {
  const RibbonVertex& v = vertices[half_edges[h].vertex];
  return v.gaps.count(position(h)) > 0;
}

int GradedRibbonGraph::partner(int h) const {
  const RibbonEdge& e = edges[half_edges[h].edge];
  if (e.halves.size() < 2) return -1;
  return e.halves[0] == h ? e.halves[1] : e.halves[0];
}

int edge_by_id(const GradedRibbonGraph& g, const std::string& id) {
  for (size_t i = 0; i < g.edges.size(); ++i)
    if (g.edges[i].id == id) return static_cast<int>(i);
  throw Error("surface: no edge with id '" + id + "'");
}

ValidationReport validate(const GradedRibbonGraph& g) {
  ValidationReport rep;
  auto bad = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

  if (g.edges.empty()) bad("graph has no edges");

  // half-edge / edge consistency
  std::vector<int> owner(g.half_edges.size(), -1);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const RibbonEdge& ed = g.edges[e];
    if (ed.halves.empty() || ed.halves.size() > 2) {
      bad("edge '" + ed.id + "' must have one or two half-edges");
      continue;
    }
    if (ed.boundary != (ed.halves.size() == 1))
      bad("edge '" + ed.id + "' boundary flag inconsistent with number of half-edges");
    for (int h : ed.halves) {
      if (h < 0 || h >= static_cast<int>(g.half_edges.size())) {
        bad("edge '" + ed.id + "' references unknown half-edge");
        continue;
      }
      if (owner[h] != -1) bad("half-edge shared by two edges");
      owner[h] = static_cast<int>(e);
      if (g.half_edges[h].edge != static_cast<int>(e))
        bad("half-edge back-reference broken for edge '" + ed.id + "'");
    }
  }
  for (size_t h = 0; h < g.half_edges.size(); ++h)
    if (owner[h] == -1) bad("half-edge belongs to no edge");

  // vertex incidence: every attached half-edge at exactly one vertex, once
  std::vector<int> seen(g.half_edges.size(), 0);
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const RibbonVertex& vx = g.vertices[v];
    if (vx.half_edges.empty()) bad("vertex with empty half-edge list");
    for (int h : vx.half_edges) {
      if (h < 0 || h >= static_cast<int>(g.half_edges.size())) {
        bad("vertex references unknown half-edge");
        continue;
      }
      ++seen[h];
      if (g.half_edges[h].vertex != static_cast<int>(v))
        bad("half-edge/vertex back-reference broken");
    }
    for (size_t i : vx.gaps)
      if (i >= vx.half_edges.size()) bad("gap position out of range");
    if (vx.unmarked_circles < 0) bad("negative unmarked circle count");
  }
  for (size_t h = 0; h < g.half_edges.size(); ++h) {
    bool attached = g.half_edges[h].vertex >= 0;
    if (attached && seen[h] != 1) bad("attached half-edge not listed exactly once at its vertex");
    if (!attached && seen[h] != 0) bad("free half-edge listed at a vertex");
    if (!attached) {
      const RibbonEdge& ed = g.edges[g.half_edges[h].edge];
      // free ends are implicit: the edge simply lists one half; a stored
      // half-edge with vertex -1 is rejected to keep a single convention.
      bad("edge '" + ed.id + "' stores an explicit free half-edge; boundary arcs list one half-edge only");
    }
  }

  // grading condition: sum of d(h) over the corners of each face = val - 2
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const RibbonVertex& vx = g.vertices[v];
    long sum = 0;
    for (int h : vx.half_edges) {
      if (h < 0 || h >= static_cast<int>(g.half_edges.size())) continue;
      sum += g.half_edges[h].degree;
    }
    long want = static_cast<long>(vx.half_edges.size()) - 2;
    if (sum != want) {
      std::ostringstream os;
      os << "grading sum violated at vertex " << v << ": sum d(h) = " << sum
         << ", valence - 2 = " << want;
      bad(os.str());
    }
  }

  // each connected component must contain at least one edge: components are
  // induced by edges, so this amounts to no isolated vertices
  for (size_t v = 0; v < g.vertices.size(); ++v)
    if (g.vertices[v].half_edges.empty()) bad("isolated vertex (component without edges)");

  return rep;
}

SurfaceInvariants invariants(const GradedRibbonGraph& g) {
  ValidationReport rep = validate(g);
  if (!rep.ok()) throw Error("surface: invalid graph: " + rep.violations.front());

  // darts: attached half-edges plus one virtual dart per free end
  int n_half = static_cast<int>(g.half_edges.size());
  int n_free = 0;
  std::vector<int> free_dart_of_edge(g.edges.size(), -1);
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (g.edges[e].halves.size() == 1) free_dart_of_edge[e] = n_half + n_free++;
  int n_darts = n_half + n_free;

  // alpha: swap the darts of an edge (free darts bounce via identity alpha)
  std::vector<int> alpha(n_darts);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    const RibbonEdge& ed = g.edges[e];
    if (ed.halves.size() == 2) {
      alpha[ed.halves[0]] = ed.halves[1];
      alpha[ed.halves[1]] = ed.halves[0];
    } else {
      alpha[ed.halves[0]] = free_dart_of_edge[e];
      alpha[free_dart_of_edge[e]] = ed.halves[0];
    }
  }
  // sigma: rotation at the vertex; free darts are fixed points
  std::vector<int> sigma(n_darts);
  for (int d = 0; d < n_darts; ++d) sigma[d] = d;
  for (const RibbonVertex& vx : g.vertices) {
    size_t k = vx.half_edges.size();
    for (size_t i = 0; i < k; ++i) sigma[vx.half_edges[i]] = vx.half_edges[(i + 1) % k];
  }

  // boundary walks = orbits of sigma∘alpha
  std::vector<bool> used(n_darts, false);
  int walks = 0;
  for (int d = 0; d < n_darts; ++d) {
    if (used[d]) continue;
    ++walks;
    int cur = d;
    while (!used[cur]) {
      used[cur] = true;
      cur = sigma[alpha[cur]];
    }
  }

  int circles = 0;
  for (const RibbonVertex& vx : g.vertices) circles += vx.unmarked_circles;

  SurfaceInvariants inv;
  int V = static_cast<int>(g.vertices.size());
  int E = static_cast<int>(g.edges.size());
  // chi of the closed surface: cap all boundary components of the thickening
  inv.euler_char = V + n_free - E + walks;
  inv.genus = (2 - inv.euler_char) / 2;
  inv.num_boundary_components = walks + circles;
  inv.num_faces = walks + circles;
  return inv;
}

bool is_full_formal(const GradedRibbonGraph& g) {
  if (!validate(g).ok()) throw Error("surface: invalid graph");
  for (const RibbonVertex& vx : g.vertices)
    if (vx.gaps.size() != 1 || vx.unmarked_circles != 0) return false;
  return true;
}

GradedRibbonGraph localize_boundary_arc(const GradedRibbonGraph& g, int edge) {
  if (edge < 0 || edge >= static_cast<int>(g.edges.size()))
    throw Error("surface: edge index out of range");
  if (!g.edges[edge].boundary) throw Error("surface: localization requires a boundary arc");

  int h = g.edges[edge].halves[0];
  int v = g.half_edges[h].vertex;
  size_t pos = g.position(h);
  const RibbonVertex& vx = g.vertices[v];
  size_t k = vx.half_edges.size();

  GradedRibbonGraph out;
  out.vertices = g.vertices;
  // rebuild edges / half-edges with the localized edge removed
  std::vector<int> he_map(g.half_edges.size(), -1);
  for (size_t i = 0; i < g.half_edges.size(); ++i) {
    if (static_cast<int>(i) == h) continue;
    he_map[i] = static_cast<int>(out.half_edges.size());
    out.half_edges.push_back(g.half_edges[i]);
  }
  std::vector<int> edge_map(g.edges.size(), -1);
  for (size_t e = 0; e < g.edges.size(); ++e) {
    if (static_cast<int>(e) == static_cast<size_t>(edge)) continue;
    edge_map[e] = static_cast<int>(out.edges.size());
    out.edges.push_back(g.edges[e]);
    for (int& hh : out.edges.back().halves) hh = he_map[hh];
  }
  for (HalfEdge& he : out.half_edges) he.edge = edge_map[he.edge];

  // rebuild the vertex: drop h, merge the two adjacent corners
  RibbonVertex& nv = out.vertices[v];
  nv.half_edges.clear();
  nv.gaps.clear();
  if (k == 1) {
    // the polygon had a single arc side; the vertex disappears
    // (its unmarked circles would be stranded -- reject that case)
    if (g.vertices[v].unmarked_circles > 0)
      throw Error("surface: cannot localize the only arc of a face with unmarked circles");
    std::vector<RibbonVertex> vs;
    for (size_t i = 0; i < out.vertices.size(); ++i) {
      if (static_cast<int>(i) == v) continue;
      RibbonVertex copy = out.vertices[i];
      for (int& hh : copy.half_edges) hh = he_map[hh];
      vs.push_back(copy);
    }
    out.vertices = vs;
    for (HalfEdge& he : out.half_edges)
      if (he.vertex > v) --he.vertex;
    return out;
  }

  size_t prev = (pos + k - 1) % k;
  bool prev_gap = g.vertices[v].gaps.count(prev) > 0;
  bool this_gap = g.vertices[v].gaps.count(pos) > 0;
  int d_prev = g.half_edges[g.vertices[v].half_edges[prev]].degree;
  int d_this = g.half_edges[h].degree;

  for (size_t i = 0; i < k; ++i) {
    if (i == pos) continue;
    nv.half_edges.push_back(he_map[g.vertices[v].half_edges[i]]);
  }
  // degree of the merged corner: composition through the null arc drops one
  int merged_degree = d_prev + d_this - 1;
  // fix degrees / gaps with new positions
  for (size_t i = 0, ni = 0; i < k; ++i) {
    if (i == pos) continue;
    bool gap_here = g.vertices[v].gaps.count(i) > 0;
    int deg_here = g.half_edges[g.vertices[v].half_edges[i]].degree;
    if (i == prev) {
      gap_here = prev_gap || this_gap;
      deg_here = merged_degree;
    }
    int nh = nv.half_edges[ni];
    out.half_edges[nh].degree = deg_here;
    if (gap_here) nv.gaps.insert(ni);
    ++ni;
  }

  // remap other vertices' half-edge references
  for (size_t i = 0; i < out.vertices.size(); ++i) {
    if (static_cast<int>(i) == v) continue;
    for (int& hh : out.vertices[i].half_edges) hh = he_map[hh];
  }
  return out;
}

namespace {

std::string encode_from(const GradedRibbonGraph& g, int start_vertex, size_t rotation) {
  // deterministic BFS labeling starting at (start_vertex, rotation)
  std::map<int, int> vlabel, elabel;
  std::vector<std::pair<int, size_t>> queue;  // (vertex, rotation to use)
  vlabel[start_vertex] = 0;
  queue.emplace_back(start_vertex, rotation);
  std::ostringstream os;
  int next_v = 1, next_e = 0;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    auto [v, rot] = queue[qi];
    const RibbonVertex& vx = g.vertices[v];
    size_t k = vx.half_edges.size();
    os << "V" << vlabel[v] << "(" << vx.unmarked_circles << ";";
    for (size_t i = 0; i < k; ++i) {
      size_t p = (rot + i) % k;
      int h = vx.half_edges[p];
      int e = g.half_edges[h].edge;
      if (!elabel.count(e)) elabel[e] = next_e++;
      os << "e" << elabel[e] << (g.edges[e].boundary ? "b" : "i") << "d"
         << g.half_edges[h].degree << (vx.gaps.count(p) ? "|" : ",");
      int ph = g.partner(h);
      if (ph >= 0) {
        int w = g.half_edges[ph].vertex;
        if (!vlabel.count(w)) {
          vlabel[w] = next_v++;
          queue.emplace_back(w, g.position(ph));
        }
        os << "->V" << vlabel[w] << "@";
      } else {
        os << "->free@";
      }
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

std::string canonical_form(const GradedRibbonGraph& g) {
  // component decomposition by edges
  std::vector<int> comp(g.vertices.size(), -1);
  int ncomp = 0;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    if (comp[v] != -1) continue;
    int c = ncomp++;
    std::vector<int> stack{static_cast<int>(v)};
    while (!stack.empty()) {
      int cur = stack.back();
      stack.pop_back();
      if (comp[cur] != -1) continue;
      comp[cur] = c;
      for (int h : g.vertices[cur].half_edges) {
        int ph = g.partner(h);
        if (ph >= 0 && comp[g.half_edges[ph].vertex] == -1)
          stack.push_back(g.half_edges[ph].vertex);
      }
    }
  }
  std::vector<std::string> comp_codes(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    std::string best;
    for (size_t v = 0; v < g.vertices.size(); ++v) {
      if (comp[v] != c) continue;
      for (size_t r = 0; r < g.vertices[v].half_edges.size(); ++r) {
        std::string code = encode_from(g, static_cast<int>(v), r);
        if (best.empty() || code < best) best = code;
      }
    }
    comp_codes[c] = best;
  }
  std::sort(comp_codes.begin(), comp_codes.end());
  std::string result;
  for (const std::string& s : comp_codes) result += s + "#";
  return result;
}

bool isomorphic(const GradedRibbonGraph& a, const GradedRibbonGraph& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace fukaya
