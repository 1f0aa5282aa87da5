#pragma once

/// @file simplicial.hpp
/// @brief Finite abstract simplicial complexes stored by their facets.
///
/// A complex is immutable. The constructor computes the full face set once,
/// grouped by dimension and sorted, so every query after that is a pure read
/// and iteration order is deterministic. The empty face is never stored.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace evenchi {

using VertexId = std::uint64_t;

/// A nonempty, strictly increasing vertex list.
class Face {
 public:
  explicit Face(std::vector<VertexId> vertices) : v_(std::move(vertices)) {
    if (v_.empty()) throw std::invalid_argument("face must have at least one vertex");
    for (std::size_t i = 1; i < v_.size(); ++i)
      if (v_[i - 1] >= v_[i]) throw std::invalid_argument("face vertices must be strictly increasing");
  }

  /// Sorts; rejects empty input and repeated vertices.
  static Face from_unsorted(std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
      throw std::invalid_argument("face has a repeated vertex");
    return Face(std::move(vertices));
  }

  int dimension() const { return static_cast<int>(v_.size()) - 1; }
  std::size_t size() const { return v_.size(); }
  std::span<const VertexId> vertices() const { return v_; }

  bool contains(VertexId v) const { return std::binary_search(v_.begin(), v_.end(), v); }
  bool is_subset_of(const Face& other) const {
    return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
  }

  std::string str() const {
    std::string out = "{";
    for (std::size_t i = 0; i < v_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(v_[i]);
    }
    return out + "}";
  }

  /// Lower dimension first, then lexicographic.
  friend std::strong_ordering operator<=>(const Face& a, const Face& b) {
    if (auto c = a.v_.size() <=> b.v_.size(); c != 0) return c;
    return a.v_ <=> b.v_;
  }
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<VertexId> v_;
};

/// Face counts f_0..f_d of a nonempty complex; f_d > 0.
class FVector {
 public:
  explicit FVector(std::vector<std::uint64_t> counts) : counts_(std::move(counts)) {
    if (counts_.empty()) throw std::invalid_argument("f-vector must have at least f_0");
    if (counts_.back() == 0) throw std::invalid_argument("f-vector top entry f_d must be positive");
  }

  int dimension() const { return static_cast<int>(counts_.size()) - 1; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }

  /// f_n; zero for n outside 0..d.
  std::uint64_t operator[](int n) const {
    if (n < 0 || n > dimension()) return 0;
    return counts_[static_cast<std::size_t>(n)];
  }

  friend bool operator==(const FVector&, const FVector&) = default;

 private:
  std::vector<std::uint64_t> counts_;
};

class SimplicialComplex {
 public:
  /// Largest facet size accepted by subset enumeration.
  static constexpr std::size_t kMaxFacetSize = 24;

  /// The empty complex (only the empty face).
  SimplicialComplex() = default;

  /// Builds the complex generated by @p generators. Duplicates and faces
  /// dominated by another generator are dropped. An empty list yields the
  /// empty complex.
  explicit SimplicialComplex(std::vector<Face> generators) {
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    // Larger faces come last, so a face is dominated only by something after it.
    for (std::size_t i = 0; i < generators.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = i + 1; j < generators.size() && !dominated; ++j)
        dominated = generators[j].size() > generators[i].size() && generators[i].is_subset_of(generators[j]);
      if (!dominated) facets_.push_back(generators[i]);
    }
    enumerate_faces();
  }

  /// Validated entry point for raw vertex lists.
  static SimplicialComplex from_facets(const std::vector<std::vector<VertexId>>& facets) {
    if (facets.empty()) throw std::invalid_argument("complex needs at least one facet");
    std::vector<Face> faces;
    faces.reserve(facets.size());
    for (const auto& f : facets) faces.push_back(Face::from_unsorted(f));
    return SimplicialComplex(std::move(faces));
  }

  bool empty() const { return facets_.empty(); }
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Face>& facets() const { return facets_; }

  /// All faces of dimension @p n in sorted order; empty outside 0..dim.
  const std::vector<Face>& faces(int n) const {
    static const std::vector<Face> kNone;
    if (n < 0 || n > dimension()) return kNone;
    return by_dim_[static_cast<std::size_t>(n)];
  }

  std::size_t num_faces(int n) const { return faces(n).size(); }

  bool contains(const Face& f) const {
    const auto& level = faces(f.dimension());
    return std::binary_search(level.begin(), level.end(), f);
  }

  std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    for (const auto& f : faces(0)) out.push_back(f.vertices()[0]);
    return out;
  }

  /// Largest vertex label; throws on the empty complex.
  VertexId max_vertex() const {
    if (empty()) throw std::logic_error("empty complex has no vertices");
    return faces(0).back().vertices()[0];
  }

  std::vector<std::vector<VertexId>> facet_lists() const {
    std::vector<std::vector<VertexId>> out;
    for (const auto& f : facets_) out.emplace_back(f.vertices().begin(), f.vertices().end());
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

 private:
  void enumerate_faces() {
    std::size_t top = 0;
    for (const auto& f : facets_) {
      if (f.size() > kMaxFacetSize)
        throw std::invalid_argument("facet " + f.str() + " is too large for face enumeration");
      top = std::max(top, f.size());
    }
    by_dim_.assign(top, {});
    for (const auto& f : facets_) {
      const auto verts = f.vertices();
      const std::uint32_t n = static_cast<std::uint32_t>(verts.size());
      for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        std::vector<VertexId> sub;
        for (std::uint32_t i = 0; i < n; ++i)
          if (mask & (1U << i)) sub.push_back(verts[i]);
        by_dim_[sub.size() - 1].emplace_back(std::move(sub));
      }
    }
    for (auto& level : by_dim_) {
      std::sort(level.begin(), level.end());
      level.erase(std::unique(level.begin(), level.end()), level.end());
    }
  }

  std::vector<Face> facets_;
  std::vector<std::vector<Face>> by_dim_;
};

/// Throws on the empty complex, which has no f_d > 0.
inline FVector f_vector(const SimplicialComplex& c) {
  if (c.empty()) throw std::invalid_argument("f-vector of the empty complex is undefined");
  std::vector<std::uint64_t> counts;
  for (int n = 0; n <= c.dimension(); ++n) counts.push_back(c.num_faces(n));
  return FVector(std::move(counts));
}

/// sum (-1)^n f_n; 0 for the empty complex.
inline std::int64_t euler_classical(const SimplicialComplex& c) {
  std::int64_t chi = 0;
  for (int n = 0; n <= c.dimension(); ++n) {
    auto count = static_cast<std::int64_t>(c.num_faces(n));
    chi += (n % 2 == 0) ? count : -count;
  }
  return chi;
}

inline bool is_pure(const SimplicialComplex& c) {
  const int d = c.dimension();
  return std::all_of(c.facets().begin(), c.facets().end(),
                     [d](const Face& f) { return f.dimension() == d; });
}

/// lk(sigma) = { tau : tau and sigma disjoint, tau u sigma in C }, obtained from
/// the facets containing sigma. The link of a facet is the empty complex.
inline SimplicialComplex link(const SimplicialComplex& c, const Face& sigma) {
  if (!c.contains(sigma)) throw std::invalid_argument("face " + sigma.str() + " is not in the complex");
  std::vector<Face> pieces;
  for (const auto& f : c.facets()) {
    if (!sigma.is_subset_of(f)) continue;
    std::vector<VertexId> rest;
    for (VertexId v : f.vertices())
      if (!sigma.contains(v)) rest.push_back(v);
    if (!rest.empty()) pieces.emplace_back(std::move(rest));
  }
  return SimplicialComplex(std::move(pieces));
}

/// Downward closure of the (d-1)-faces lying in exactly one facet.
inline SimplicialComplex boundary(const SimplicialComplex& c) {
  if (c.empty() || !is_pure(c)) throw std::invalid_argument("boundary requires a nonempty pure complex");
  const int d = c.dimension();
  if (d < 1) throw std::invalid_argument("boundary requires dimension at least 1");
  std::map<Face, int> incidence;
  for (const auto& f : c.facets()) {
    const auto verts = f.vertices();
    for (std::size_t skip = 0; skip < verts.size(); ++skip) {
      std::vector<VertexId> ridge;
      for (std::size_t i = 0; i < verts.size(); ++i)
        if (i != skip) ridge.push_back(verts[i]);
      ++incidence[Face(std::move(ridge))];
    }
  }
  std::vector<Face> ridges;
  for (auto& [ridge, count] : incidence)
    if (count == 1) ridges.push_back(ridge);
  return SimplicialComplex(std::move(ridges));
}

/// Two copies of @p m glued along its boundary. The second copy relabels
/// every non-boundary vertex to a fresh id above max_vertex(), in ascending
/// order. Every face spanned by boundary vertices must itself be a boundary
/// face. Otherwise the two copies would share it and
/// f_n(double) = 2 f_n(M) - f_n(dM) would fail.
inline SimplicialComplex double_along_boundary(const SimplicialComplex& m) {
  const SimplicialComplex bd = boundary(m);
  if (bd.empty()) throw std::invalid_argument("double requires a nonempty boundary; the complex is closed");
  const std::vector<VertexId> bverts = bd.vertices();
  auto on_boundary = [&](VertexId v) { return std::binary_search(bverts.begin(), bverts.end(), v); };

  for (int n = 0; n <= m.dimension(); ++n) {
    for (const auto& f : m.faces(n)) {
      const auto verts = f.vertices();
      if (std::all_of(verts.begin(), verts.end(), on_boundary) && !bd.contains(f)) {
        throw std::invalid_argument("cannot form the double: face " + f.str() +
                                    " has all its vertices on the boundary but is not a boundary face; "
                                    "subdivide first (e.g. cone or stellar subdivision)");
      }
    }
  }

  std::map<VertexId, VertexId> fresh;
  VertexId next = m.max_vertex() + 1;
  for (VertexId v : m.vertices())
    if (!on_boundary(v)) fresh.emplace(v, next++);

  std::vector<Face> facets = m.facets();
  for (const auto& f : m.facets()) {
    std::vector<VertexId> copy;
    for (VertexId v : f.vertices()) {
      auto it = fresh.find(v);
      copy.push_back(it == fresh.end() ? v : it->second);
    }
    facets.push_back(Face::from_unsorted(std::move(copy)));
  }
  return SimplicialComplex(std::move(facets));
}

}  // namespace evenchi
