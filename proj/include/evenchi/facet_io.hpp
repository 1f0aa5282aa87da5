#pragma once

/// @file facet_io.hpp
/// @brief Plain-text facet lists.
///
/// One facet per line as whitespace-separated non-negative integer vertex ids.
/// '#' starts a comment that runs to end of line; blank lines are ignored.

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "evenchi/simplicial.hpp"

namespace evenchi {

class FacetParseError : public std::runtime_error {
 public:
  FacetParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

inline std::vector<std::vector<VertexId>> parse_facets(std::istream& in) {
  std::vector<std::vector<VertexId>> facets;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<VertexId> facet;
    std::string tok;
    while (tokens >> tok) {
      VertexId v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw FacetParseError(lineno, "'" + tok + "' is not a non-negative integer vertex id");
      facet.push_back(v);
    }
    if (facet.empty()) continue;
    std::vector<VertexId> sorted = facet;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw FacetParseError(lineno, "facet repeats a vertex");
    facets.push_back(std::move(facet));
  }
  if (facets.empty()) throw FacetParseError(lineno, "no facets found");
  return facets;
}

inline SimplicialComplex read_complex(std::istream& in) {
  return SimplicialComplex::from_facets(parse_facets(in));
}

inline void write_facets(std::ostream& out, const SimplicialComplex& c) {
  for (const auto& f : c.facets()) {
    const auto verts = f.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) out << (i ? " " : "") << verts[i];
    out << '\n';
  }
}

}  // namespace evenchi
