#pragma once

#include "fukaya/field.hpp"

#include <set>
#include <string>
#include <vector>

namespace fukaya {

// Graded ribbon graph dual to a system of arcs on a graded marked surface.
//
// Vertices are the polygons cut out by the arcs.  Each vertex carries the
// list of incident half-edges in the cyclic order induced by the polygon
// boundary.  The corner from half_edges[i] to half_edges[i+1] is either an
// open stretch of marked boundary (it then carries a basis morphism of the
// arc category, of degree deg(half_edges[i])) or a gap: a stretch passing
// through unmarked boundary, which blocks composition.  A vertex with no
// gaps is an internal polygon and produces a disk sequence downstream.
//
// An arc that bounds a strip along the unmarked boundary (a boundary arc)
// has only one half-edge attached to a vertex; the other end is free.
struct HalfEdge {
  int edge = -1;    // owning edge
  int vertex = -1;  // -1 when this end is free (boundary-arc strip side)
  int degree = 0;   // d(h): degree of the corner starting at this half-edge
};

struct RibbonVertex {
  std::vector<int> half_edges;  // cyclic order
  std::set<size_t> gaps;        // i in gaps: corner half_edges[i] -> next is a gap
  int unmarked_circles = 0;     // unmarked boundary circles inside this face
};

struct RibbonEdge {
  std::string id;
  std::vector<int> halves;  // one (boundary arc) or two half-edge indices
  bool boundary = false;
};

struct GradedRibbonGraph {
  std::vector<RibbonVertex> vertices;
  std::vector<RibbonEdge> edges;
  std::vector<HalfEdge> half_edges;

  int valence(int v) const { return static_cast<int>(vertices[v].half_edges.size()); }
  bool vertex_is_internal(int v) const {
    return vertices[v].gaps.empty() && vertices[v].unmarked_circles == 0;
  }
  // position of h in its vertex order
  size_t position(int h) const;
  int next_half_edge(int h) const;  // successor in the cyclic order at the vertex
  int prev_half_edge(int h) const;
  bool corner_is_gap(int h) const;  // corner starting at h
  int edge_of(int h) const { return half_edges[h].edge; }
  // the other half-edge of the same edge, or -1 for boundary arcs
  int partner(int h) const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct SurfaceInvariants {
  int num_faces = 0;
  int num_boundary_components = 0;
  int euler_char = 0;  // of the closed surface obtained by capping boundaries
  int genus = 0;
};

ValidationReport validate(const GradedRibbonGraph& g);
SurfaceInvariants invariants(const GradedRibbonGraph& g);
bool is_full_formal(const GradedRibbonGraph& g);
GradedRibbonGraph localize_boundary_arc(const GradedRibbonGraph& g, int edge);
int edge_by_id(const GradedRibbonGraph& g, const std::string& id);

// Canonical encoding up to isomorphism of labeled structures (relabeling of
// vertices, edges and half-edges; rotation of cyclic orders).
std::string canonical_form(const GradedRibbonGraph& g);
bool isomorphic(const GradedRibbonGraph& a, const GradedRibbonGraph& b);

}  // namespace fukaya
