#pragma once

#include <optional>
#include <string>
#include <vector>

#include "modpovm/povm.hpp"

namespace modpovm {

struct Block {
  std::vector<size_t> pts;  // sorted indices into IncidenceStructure::points
  CycloNum trace;           // trace attained by `ordering`
  int sign = 0;             // +1 / -1 when the operator product is +I / -I, else 0
  std::vector<size_t> ordering;             // cyclic order (point indices) that hit a target
  std::vector<CycloNum> ordering_traces;    // every cyclic ordering, first element fixed
};

struct IncidenceStructure {
  DimFactorization dims;
  std::vector<PauliOp> points;
  std::vector<Block> blocks;

  std::vector<std::vector<size_t> > point_blocks() const;
  // Components of the point-block incidence graph, as block index lists.
  std::vector<std::vector<size_t> > components() const;
  // Sub-structure on the given blocks, points re-indexed.
  IncidenceStructure restrict_to(const std::vector<size_t>& block_ids) const;
};

// Size-k subsets of the orbit whose cyclic product trace lies in targets.
IncidenceStructure tuple_lines(const Orbit& orbit, int k, const std::vector<CycloNum>& targets,
                               bool require_pm_identity);

// Sign of the product of displacement operators: +1 for +I, -1 for -I, else 0.
int pm_identity_sign(const DimFactorization& dims, const std::vector<PauliOp>& ops);

struct Graph {
  size_t n = 0;
  std::vector<std::pair<size_t, size_t> > edges;
  std::vector<std::vector<size_t> > adjacency() const;
  std::vector<std::vector<size_t> > components() const;
  Graph induced(const std::vector<size_t>& vertices) const;
  std::string to_dot(const std::string& name, const std::vector<std::string>& labels = {}) const;
};

Graph intersection_graph(const IncidenceStructure& s, int shared);
bool is_petersen(const Graph& g);

enum class GeometryKind {
  HESSE,
  GQ22,
  MERMIN_SQUARE,
  GRID_3x3,
  PAPPUS,
  PETERSEN_DECOMP,
  BORROMEAN_PAIR,
  UNRECOGNIZED
};

std::string to_string(GeometryKind k);

struct GeometryLabel {
  GeometryKind kind = GeometryKind::UNRECOGNIZED;
  size_t copies = 0;
  // Shared-point count whose intersection graph split into Petersen copies.
  int petersen_shared = 0;
  std::string text() const;
};

GeometryLabel recognize(const IncidenceStructure& s);

// Exact isomorphism of incidence structures given as block lists on
// points 0..n-1.
bool isomorphic(size_t na, const std::vector<std::vector<size_t> >& a, size_t nb,
                const std::vector<std::vector<size_t> >& b);

// Built-in templates.
std::vector<std::vector<size_t> > hesse_template();
std::vector<std::vector<size_t> > gq22_template();
std::vector<std::vector<size_t> > grid_template();
std::vector<std::vector<size_t> > pappus_template();
std::vector<std::vector<size_t> > borromean_template();

// Direct check of the GQ(2,2) axioms.
bool gq22_axioms(size_t npts, const std::vector<std::vector<size_t> >& blocks);

struct MerminSquare {
  IncidenceStructure grid;  // rows are blocks 0..2, columns 3..5
  std::vector<std::vector<size_t> > cells;  // cells[r][c] = point index in grid
  int minus_lines() const;
};

std::optional<MerminSquare> mermin_square(const IncidenceStructure& s);

// Joint eigenbases (rank-1 projectors) of the operators on each line.
std::vector<std::vector<CycloMatrix> > line_contexts(const MerminSquare& m);
// Every complete orthogonal basis among the given rays.
std::vector<std::vector<CycloMatrix> > complete_contexts(const std::vector<CycloMatrix>& rays);
bool ks_noncolorable(const std::vector<std::vector<CycloMatrix> >& contexts);

}  // namespace modpovm
