#include "cellkit/cells.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "cellkit/error.hpp"

namespace cellkit {

const std::vector<std::vector<int>>& CellDecomposition::cells(CellSide side) const {
  switch (side) {
    case CellSide::Left: return left_cells;
    case CellSide::Right: return right_cells;
    default: return two_sided_cells;
  }
}

bool CellDecomposition::leq(CellSide side, int a, int b) const {
  switch (side) {
    case CellSide::Left: return left_leq[a][b];
    case CellSide::Right: return right_leq[a][b];
    default: return two_sided_leq[a][b];
  }
}

int CellDecomposition::cell_of(CellSide side, int a) const {
  const auto& blocks = cells(side);
  for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
    if (std::binary_search(blocks[i].begin(), blocks[i].end(), a)) return i;
  return -1;
}

namespace {

std::vector<std::vector<char>> reachability(
    int n, const std::vector<std::vector<int>>& edges) {
  // leq[a][b]: a is reached from b
  std::vector<std::vector<char>> leq(n, std::vector<char>(n, 0));
  for (int b = 0; b < n; ++b) {
    std::deque<int> todo{b};
    leq[b][b] = 1;
    while (!todo.empty()) {
      int x = todo.front();
      todo.pop_front();
      for (int y : edges[x])
        if (!leq[y][b]) {
          leq[y][b] = 1;
          todo.push_back(y);
        }
    }
  }
  return leq;
}

std::vector<std::vector<int>> equivalence_blocks(
    const std::vector<std::vector<char>>& leq) {
  const int n = static_cast<int>(leq.size());
  std::vector<int> block(n, -1);
  std::vector<std::vector<int>> blocks;
  for (int a = 0; a < n; ++a) {
    if (block[a] >= 0) continue;
    block[a] = static_cast<int>(blocks.size());
    blocks.push_back({a});
    for (int b = a + 1; b < n; ++b)
      if (block[b] < 0 && leq[a][b] && leq[b][a]) {
        block[b] = block[a];
        blocks.back().push_back(b);
      }
  }
  return blocks;
}

}  // namespace

CellDecomposition cells_from_relations(
    int size, const std::vector<std::vector<int>>& left_edges,
    const std::vector<std::vector<int>>& right_edges) {
  CellDecomposition c;
  c.size = size;
  std::vector<std::vector<int>> both(size);
  for (int b = 0; b < size; ++b) {
    both[b] = left_edges[b];
    both[b].insert(both[b].end(), right_edges[b].begin(), right_edges[b].end());
  }
  c.left_leq = reachability(size, left_edges);
  c.right_leq = reachability(size, right_edges);
  c.two_sided_leq = reachability(size, both);
  c.left_cells = equivalence_blocks(c.left_leq);
  c.right_cells = equivalence_blocks(c.right_leq);
  c.two_sided_cells = equivalence_blocks(c.two_sided_leq);
  return c;
}

std::vector<std::vector<int>> blocks_from_keys(const std::vector<long>& keys) {
  std::map<long, std::vector<int>> by_key;
  for (int i = 0; i < static_cast<int>(keys.size()); ++i) by_key[keys[i]].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& [k, v] : by_key) blocks.push_back(v);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

std::vector<int> d_generators(const WeylGroupB& g) {
  std::vector<int> gens;
  const int d = g.rank();
  if (d >= 2) gens.push_back(g.index(from_word(d, {0, 1, 0})));
  for (int s = 1; s < d; ++s) gens.push_back(g.index(SignedPermutation::simple(d, s)));
  return gens;
}

namespace {

HeckeCells cells_on(HeckeAlgebra& h, const std::vector<int>& elements,
                    const std::vector<int>& generators, CellMethod method) {
  const int n = static_cast<int>(elements.size());
  std::vector<int> pos(h.size(), -1);
  for (int i = 0; i < n; ++i) pos[elements[i]] = i;
  std::vector<std::vector<int>> left(n), right(n);
  auto record = [&](std::vector<int>& edges, const SparseTerms& terms) {
    for (const auto& [z, p] : terms) {
      if (pos[z] < 0)
        throw Error(ErrorCode::ConventionFailure,
                    "product left the span of the chosen basis elements");
      edges.push_back(pos[z]);
    }
  };
  if (method == CellMethod::FullBasis) h.build_structure_table();
  for (int i = 0; i < n; ++i) {
    int b = elements[i];
    if (method == CellMethod::FullBasis) {
      for (int c : elements) {
        record(left[i], h.structure(c, b));
        record(right[i], h.structure(b, c));
      }
    } else {
      for (int g : generators) {
        record(left[i], h.product_in_kl_basis(g, b));
        record(right[i], h.product_in_kl_basis(b, g));
      }
    }
    for (auto* e : {&left[i], &right[i]}) {
      std::sort(e->begin(), e->end());
      e->erase(std::unique(e->begin(), e->end()), e->end());
    }
  }
  return {elements, cells_from_relations(n, left, right)};
}

}  // namespace

HeckeCells hecke_cells(HeckeAlgebra& h, CellMethod method) {
  std::vector<int> all(h.size());
  for (int w = 0; w < h.size(); ++w) all[w] = w;
  std::vector<int> gens;
  for (int s = 0; s < h.group().rank(); ++s)
    gens.push_back(h.group().index(SignedPermutation::simple(h.group().rank(), s)));
  return cells_on(h, all, gens, method);
}

HeckeCells hecke_cells_type_D(HeckeAlgebra& h, CellMethod method) {
  return cells_on(h, h.group().d_elements(), d_generators(h.group()), method);
}

}  // namespace cellkit
