#pragma once

// Feynman-graph expansion of t(u): symmetric non-negative integer matrices
// with zero diagonal and prescribed row sums, one row per generator
// occurrence of the monomial.

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qftalg/hopf.hpp"
#include "qftalg/scalar.hpp"

namespace qftalg {

struct DegreeSequence {
  std::vector<PointId> points;
  std::vector<unsigned> degrees;

  /// One slot per generator occurrence, in canonical order. φ⁰ factors of a
  /// B-monomial become degree-0 vertices.
  static DegreeSequence from_monomial(const Monomial& m);
  std::size_t size() const { return degrees.size(); }
};

struct AdjacencyTerm {
  std::size_t order = 0;         // p
  std::vector<unsigned> matrix;  // p×p, row-major
  Rational weight;               // ∏ nᵢ! / ∏_{i<j} m_ij!
  PropPoly scalar;               // weight · ∏_{i<j} D(xᵢ,xⱼ)^{m_ij}

  unsigned at(std::size_t i, std::size_t j) const { return matrix[i * order + j]; }
};

/// All admissible matrices in row-major lexicographic order. The first row
/// is enumerated up front and the remaining rows are filled in parallel.
std::vector<AdjacencyTerm> enumerate_adjacency(const DegreeSequence& d);
/// Single-threaded reference with the same output.
std::vector<AdjacencyTerm> enumerate_adjacency_serial(const DegreeSequence& d);

/// Connectivity of the graph with an edge wherever m_ij > 0. A single vertex
/// is connected; the empty graph is not.
bool is_connected(const AdjacencyTerm& term);

PropPoly t_via_graphs(const Monomial& m);
/// t_c(1) = 0.
PropPoly t_connected_via_graphs(const Monomial& m);

enum class GraphFormat { Dot, Json };
/// "dot" or "json"; throws UnsupportedFormat otherwise.
GraphFormat parse_graph_format(std::string_view name);

std::string export_graphs(const Monomial& m, bool connected_only, GraphFormat format);

}  // namespace qftalg
