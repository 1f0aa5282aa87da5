#pragma once

/// @file generators.hpp
/// @brief Standard triangulations: sphere families, cones, joins, suspensions,
/// and two minimal surfaces.
///
/// Relabeling is deterministic: whenever two complexes are combined, the
/// second one's vertices are shifted past the first one's largest label.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "evenchi/simplicial.hpp"

namespace evenchi {

/// Boundary of the (d+1)-simplex on {0..d+1}: an S^d with f_n = C(d+2, n+1).
inline SimplicialComplex simplex_boundary(int d) {
  if (d < 0) throw std::invalid_argument("simplex_boundary: d must be non-negative");
  std::vector<Face> facets;
  for (int skip = 0; skip <= d + 1; ++skip) {
    std::vector<VertexId> f;
    for (int v = 0; v <= d + 1; ++v)
      if (v != skip) f.push_back(static_cast<VertexId>(v));
    facets.emplace_back(std::move(f));
  }
  return SimplicialComplex(std::move(facets));
}

/// The full d-simplex on {0..d}.
inline SimplicialComplex simplex(int d) {
  if (d < 0) throw std::invalid_argument("simplex: d must be non-negative");
  std::vector<VertexId> f;
  for (int v = 0; v <= d; ++v) f.push_back(static_cast<VertexId>(v));
  return SimplicialComplex({Face(std::move(f))});
}

/// Boundary of the (d+1)-dimensional cross-polytope. Antipodal pairs are
/// (2i, 2i+1); facets pick one vertex from each pair. f_n = 2^{n+1} C(d+1, n+1).
inline SimplicialComplex cross_polytope_boundary(int d) {
  if (d < 0) throw std::invalid_argument("cross_polytope_boundary: d must be non-negative");
  if (d + 1 > 20) throw std::invalid_argument("cross_polytope_boundary: d too large");
  const unsigned pairs = static_cast<unsigned>(d) + 1;
  std::vector<Face> facets;
  for (std::uint32_t choice = 0; choice < (1U << pairs); ++choice) {
    std::vector<VertexId> f;
    for (unsigned i = 0; i < pairs; ++i) f.push_back(2 * i + ((choice >> i) & 1U));
    facets.emplace_back(std::move(f));
  }
  return SimplicialComplex(std::move(facets));
}

/// A fresh apex max_vertex()+1 added to every facet.
inline SimplicialComplex cone(const SimplicialComplex& c) {
  if (c.empty()) return SimplicialComplex({Face(std::vector<VertexId>{0})});
  const VertexId apex = c.max_vertex() + 1;
  std::vector<Face> facets;
  for (const auto& f : c.facets()) {
    std::vector<VertexId> v(f.vertices().begin(), f.vertices().end());
    v.push_back(apex);
    facets.emplace_back(std::move(v));
  }
  return SimplicialComplex(std::move(facets));
}

/// Facets are unions of one facet from each side; b is shifted past a's
/// largest label so the vertex sets are disjoint.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("join: both complexes must be nonempty");
  const VertexId offset = a.max_vertex() + 1;
  std::vector<Face> facets;
  for (const auto& fa : a.facets()) {
    for (const auto& fb : b.facets()) {
      std::vector<VertexId> v(fa.vertices().begin(), fa.vertices().end());
      for (VertexId w : fb.vertices()) v.push_back(w + offset);
      facets.emplace_back(std::move(v));
    }
  }
  return SimplicialComplex(std::move(facets));
}

/// Join with the two-point sphere S^0.
inline SimplicialComplex suspension(const SimplicialComplex& c) { return join(c, simplex_boundary(0)); }

/// Moebius' 7-vertex torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex torus_7() {
  std::vector<std::vector<VertexId>> facets;
  for (VertexId i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_facets(facets);
}

namespace detail {

/// True iff the graph given by @p edges is one cycle through all of @p verts.
inline bool is_single_cycle(const std::vector<VertexId>& verts, const std::vector<Face>& edges) {
  if (verts.size() < 3 || edges.size() != verts.size()) return false;
  std::map<VertexId, std::vector<VertexId>> adj;
  for (const auto& e : edges) {
    adj[e.vertices()[0]].push_back(e.vertices()[1]);
    adj[e.vertices()[1]].push_back(e.vertices()[0]);
  }
  for (VertexId v : verts)
    if (adj[v].size() != 2) return false;
  VertexId prev = verts.front();
  VertexId cur = adj[prev][0];
  std::size_t steps = 1;
  while (cur != verts.front()) {
    const auto& nb = adj[cur];
    VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (++steps > verts.size()) return false;
  }
  return steps == verts.size();
}

}  // namespace detail

/// True iff every vertex link is a single cycle: the 2-manifold test used by
/// the surface generators.
inline bool vertex_links_are_cycles(const SimplicialComplex& c) {
  if (c.dimension() != 2 || !is_pure(c)) return false;
  for (const auto& v : c.faces(0)) {
    const SimplicialComplex lk = link(c, v);
    if (!detail::is_single_cycle(lk.vertices(), lk.faces(1))) return false;
  }
  return true;
}

/// Antipodal quotient of the icosahedron: 6 vertices, 10 triangles, complete
/// 1-skeleton, every vertex link a 5-cycle.
inline SimplicialComplex projective_plane_6() {
  static const std::vector<std::vector<VertexId>> kFacets = {
      {0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
      {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3},
  };
  SimplicialComplex rp2 = SimplicialComplex::from_facets(kFacets);
  if (rp2.num_faces(0) != 6 || rp2.num_faces(1) != 15 || rp2.num_faces(2) != 10 ||
      !vertex_links_are_cycles(rp2)) {
    throw std::logic_error("projective_plane_6: embedded facet data failed its self-check");
  }
  return rp2;
}

/// Two triangles sharing the single vertex 0: the pinch point makes it fail
/// the link condition.
inline SimplicialComplex bowtie() { return SimplicialComplex::from_facets({{0, 1, 2}, {0, 3, 4}}); }

}  // namespace evenchi
