#pragma once

#include <vector>

#include "cellkit/hecke.hpp"

namespace cellkit {

enum class CellSide { Left, Right, TwoSided };

// Preorders and cells of a based algebra, on basis positions 0..size-1.
struct CellDecomposition {
  int size = 0;
  // leq[a][b] != 0 iff a <= b
  std::vector<std::vector<char>> left_leq, right_leq, two_sided_leq;
  // Each block sorted, blocks ordered by their smallest member.
  std::vector<std::vector<int>> left_cells, right_cells, two_sided_cells;

  const std::vector<std::vector<int>>& cells(CellSide side) const;
  bool leq(CellSide side, int a, int b) const;
  int cell_of(CellSide side, int a) const;
};

// left_edges[b] lists every b' that occurs with non-zero coefficient in some
// product c b; right_edges[b] the same for b c.  Preorders are the transitive
// closures.
CellDecomposition cells_from_relations(
    int size, const std::vector<std::vector<int>>& left_edges,
    const std::vector<std::vector<int>>& right_edges);

// Sorted blocks of positions with equal key.
std::vector<std::vector<int>> blocks_from_keys(const std::vector<long>& keys);

enum class CellMethod {
  // every product C'_c C'_b (needs the full structure table)
  FullBasis,
  // products with C'_g for the algebra generators g only; the transitive
  // closure is the same since the C'_g generate the algebra
  Generators,
};

struct HeckeCells {
  std::vector<int> elements;  // group indices; cell data uses positions here
  CellDecomposition cells;
};

// Cells of the whole algebra.
HeckeCells hecke_cells(HeckeAlgebra& h, CellMethod method = CellMethod::FullBasis);
// Cells of the subalgebra spanned by C'_w for w in W_{D_d}.
HeckeCells hecke_cells_type_D(HeckeAlgebra& h,
                              CellMethod method = CellMethod::FullBasis);
// Simple reflections of W_{D_d} inside B_d: s_0 s_1 s_0, s_1, ..., s_{d-1}.
std::vector<int> d_generators(const WeylGroupB& g);

}  // namespace cellkit
