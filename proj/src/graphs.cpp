#include "qftalg/graphs.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include <omp.h>

#include <json.hpp>

#include "qftalg/errors.hpp"

namespace qftalg {

DegreeSequence DegreeSequence::from_monomial(const Monomial& m) {
  DegreeSequence d;
  for (const auto& g : m.occurrences()) {
    d.points.push_back(g.point);
    d.degrees.push_back(g.power);
  }
  return d;
}

namespace {

struct Cell {
  std::size_t i;
  std::size_t j;
};

// Backtracking over the upper triangle in row-major order. Each cell takes
// values in [lo, hi] where hi = min(rᵢ, rⱼ) and lo is the least value that
// still lets the rest of row i reach its residual.
class Enumerator {
 public:
  explicit Enumerator(const DegreeSequence& d) : d_(d), p_(d.size()) {
    for (std::size_t i = 0; i < p_; ++i) {
      for (std::size_t j = i + 1; j < p_; ++j) cells_.push_back({i, j});
    }
  }

  struct State {
    std::vector<unsigned> residual;
    std::vector<unsigned> upper;  // one entry per cell, filled up to `next`
  };

  State initial() const { return {d_.degrees, {}}; }
  std::size_t cell_count() const { return cells_.size(); }
  // Cells in row 0.
  std::size_t first_row_cells() const { return p_ == 0 ? 0 : p_ - 1; }

  // Enumerates completions from state (whose `upper` holds the first
  // upper.size() cells) until `stop` cells are filled; calls emit(state).
  template <class Emit>
  void run(State& s, std::size_t stop, Emit&& emit) const {
    const std::size_t next = s.upper.size();
    if (next == stop) {
      emit(s);
      return;
    }
    const auto [i, j] = cells_[next];
    unsigned capacity = 0;
    for (std::size_t k = j + 1; k < p_; ++k) capacity += s.residual[k];
    const unsigned ri = s.residual[i];
    const unsigned hi = std::min(ri, s.residual[j]);
    const unsigned lo = ri > capacity ? ri - capacity : 0;
    for (unsigned v = lo; v <= hi; ++v) {
      s.residual[i] -= v;
      s.residual[j] -= v;
      s.upper.push_back(v);
      run(s, stop, emit);
      s.upper.pop_back();
      s.residual[i] += v;
      s.residual[j] += v;
    }
  }

  bool complete(const State& s) const {
    return std::all_of(s.residual.begin(), s.residual.end(), [](unsigned r) { return r == 0; });
  }

  AdjacencyTerm make_term(const State& s) const {
    AdjacencyTerm t;
    t.order = p_;
    t.matrix.assign(p_ * p_, 0);
    Integer numerator = 1;
    Integer denominator = 1;
    for (unsigned n : d_.degrees) numerator *= factorial(n);
    SymbolPowers symbols;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      const unsigned v = s.upper[c];
      t.matrix[cells_[c].i * p_ + cells_[c].j] = v;
      t.matrix[cells_[c].j * p_ + cells_[c].i] = v;
      if (v == 0) continue;
      denominator *= factorial(v);
      symbols = multiply_symbols(
          symbols, SymbolPowers{{PropSymbol::feynman(d_.points[cells_[c].i], d_.points[cells_[c].j]), v}});
    }
    for (std::size_t i = 0; i < p_; ++i) {
      unsigned row = 0;
      for (std::size_t j = 0; j < p_; ++j) row += t.matrix[i * p_ + j];
      if (row != d_.degrees[i] || t.matrix[i * p_ + i] != 0) {
        throw std::logic_error("enumerate_adjacency produced a matrix violating its margins");
      }
    }
    t.weight = Rational(numerator, denominator);
    t.weight.canonicalize();
    t.scalar = PropPoly::from_terms({{symbols, t.weight}});
    return t;
  }

 private:
  const DegreeSequence& d_;
  std::size_t p_;
  std::vector<Cell> cells_;
};

bool parity_obstructed(const DegreeSequence& d) {
  unsigned long total = std::accumulate(d.degrees.begin(), d.degrees.end(), 0ul);
  return total % 2 != 0;
}

}  // namespace

std::vector<AdjacencyTerm> enumerate_adjacency_serial(const DegreeSequence& d) {
  std::vector<AdjacencyTerm> out;
  if (parity_obstructed(d)) return out;
  Enumerator e(d);
  auto s = e.initial();
  e.run(s, e.cell_count(), [&](const Enumerator::State& done) {
    if (e.complete(done)) out.push_back(e.make_term(done));
  });
  return out;
}

std::vector<AdjacencyTerm> enumerate_adjacency(const DegreeSequence& d) {
  if (d.size() < 3 || parity_obstructed(d)) return enumerate_adjacency_serial(d);
  Enumerator e(d);

  std::vector<Enumerator::State> prefixes;
  auto s = e.initial();
  e.run(s, e.first_row_cells(), [&](const Enumerator::State& prefix) { prefixes.push_back(prefix); });

  std::vector<std::vector<AdjacencyTerm>> partial(prefixes.size());
  const auto count = static_cast<std::ptrdiff_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    auto state = prefixes[static_cast<std::size_t>(k)];
    auto& sink = partial[static_cast<std::size_t>(k)];
    e.run(state, e.cell_count(), [&](const Enumerator::State& done) {
      if (e.complete(done)) sink.push_back(e.make_term(done));
    });
  }

  std::vector<AdjacencyTerm> out;
  for (auto& part : partial) {
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

bool is_connected(const AdjacencyTerm& term) {
  const std::size_t p = term.order;
  if (p == 0) return false;
  std::vector<bool> seen(p, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < p; ++j) {
      if (!seen[j] && term.at(i, j) > 0) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == p;
}

PropPoly t_via_graphs(const Monomial& m) {
  if (m.is_unit()) return PropPoly(1);
  PropPoly total;
  for (const auto& term : enumerate_adjacency(DegreeSequence::from_monomial(m))) total += term.scalar;
  return total;
}

PropPoly t_connected_via_graphs(const Monomial& m) {
  PropPoly total;
  if (m.is_unit()) return total;
  for (const auto& term : enumerate_adjacency(DegreeSequence::from_monomial(m))) {
    if (is_connected(term)) total += term.scalar;
  }
  return total;
}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "dot") return GraphFormat::Dot;
  if (name == "json") return GraphFormat::Json;
  throw UnsupportedFormat("unsupported graph format '" + std::string(name) + "' (expected dot or json)");
}

namespace {

std::string dot_vertex(const DegreeSequence& d, std::size_t i) {
  return "\"" + std::to_string(i + 1) + ":phi^" + std::to_string(d.degrees[i]) + "_" + d.points[i].label() + "\"";
}

std::string to_dot(const DegreeSequence& d, const std::vector<AdjacencyTerm>& terms) {
  std::ostringstream os;
  os << "// one vertex per generator occurrence\n";
  std::size_t k = 0;
  for (const auto& t : terms) {
    ++k;
    os << "graph G_" << k << " {\n";
    os << "  label=\"weight " << to_fraction_string(t.weight) << "\";\n";
    os << "  connected=\"" << (is_connected(t) ? "true" : "false") << "\";\n";
    for (std::size_t i = 0; i < t.order; ++i) os << "  " << dot_vertex(d, i) << ";\n";
    for (std::size_t i = 0; i < t.order; ++i) {
      for (std::size_t j = i + 1; j < t.order; ++j) {
        for (unsigned e = 0; e < t.at(i, j); ++e) {
          os << "  " << dot_vertex(d, i) << " -- " << dot_vertex(d, j);
          if (d.points[i] == d.points[j]) os << " [self_point=true]";
          os << ";\n";
        }
      }
    }
    os << "}\n";
  }
  return os.str();
}

std::string to_json(const DegreeSequence& d, const std::vector<AdjacencyTerm>& terms) {
  using json = nlohmann::ordered_json;
  json graphs = json::array();
  for (const auto& t : terms) {
    json vertices = json::array();
    for (std::size_t i = 0; i < t.order; ++i) {
      vertices.push_back({{"index", i + 1}, {"point", d.points[i].label()}, {"power", d.degrees[i]}});
    }
    json edges = json::array();
    for (std::size_t i = 0; i < t.order; ++i) {
      for (std::size_t j = i + 1; j < t.order; ++j) {
        if (t.at(i, j) == 0) continue;
        json edge = {{"i", i + 1}, {"j", j + 1}, {"mult", t.at(i, j)}};
        if (d.points[i] == d.points[j]) edge["self_point"] = true;
        edges.push_back(std::move(edge));
      }
    }
    graphs.push_back({{"vertices", std::move(vertices)},
                      {"edges", std::move(edges)},
                      {"weight", to_fraction_string(t.weight)},
                      {"connected", is_connected(t)}});
  }
  json doc = {{"graphs", std::move(graphs)}, {"vertex_model", "generator-occurrence"}};
  return doc.dump(2) + "\n";
}

}  // namespace

std::string export_graphs(const Monomial& m, bool connected_only, GraphFormat format) {
  DegreeSequence d = DegreeSequence::from_monomial(m);
  std::vector<AdjacencyTerm> terms;
  for (auto& t : enumerate_adjacency(d)) {
    if (!connected_only || is_connected(t)) terms.push_back(std::move(t));
  }
  switch (format) {
    case GraphFormat::Dot:
      return to_dot(d, terms);
    case GraphFormat::Json:
      return to_json(d, terms);
  }
  throw UnsupportedFormat("unsupported graph format");
}

}  // namespace qftalg
