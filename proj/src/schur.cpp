#include "cellkit/schur.hpp"

#include <algorithm>
#include <set>

#include "cellkit/error.hpp"

namespace cellkit {

MatrixKind matrix_kind(SchurKind kind) {
  return kind == SchurKind::J ? MatrixKind::J : MatrixKind::I;
}

WeightFunction weights_of(SchurKind kind) {
  return kind == SchurKind::ITilde ? WeightFunction::ell_a()
                                   : WeightFunction::equal();
}

const char* kind_name(SchurKind kind) {
  switch (kind) {
    case SchurKind::J: return "j";
    case SchurKind::I: return "i";
    case SchurKind::ITilde: return "i-tilde";
  }
  return "";
}

SchurKind parse_schur_kind(const std::string& text) {
  if (text == "j") return SchurKind::J;
  if (text == "i") return SchurKind::I;
  if (text == "i-tilde") return SchurKind::ITilde;
  throw Error(ErrorCode::Parse, "unknown kind: " + text);
}

std::vector<int> parabolic_subgroup(const WeylGroupB& g, const Composition& lambda,
                                    MatrixKind kind) {
  if (composition_rank(lambda, kind) != g.rank())
    throw Error(ErrorCode::RankMismatch, "composition of the wrong rank");
  std::vector<int> gens;
  for (int s : parabolic_generators(lambda, kind))
    gens.push_back(g.index(SignedPermutation::simple(g.rank(), s)));
  return g.generated_subgroup(gens);
}

std::vector<DoubleCoset> double_coset_data(const WeylGroupB& g,
                                           const Composition& lambda,
                                           const Composition& mu,
                                           MatrixKind kind) {
  const auto left = parabolic_subgroup(g, lambda, kind);
  const auto right = parabolic_subgroup(g, mu, kind);
  std::vector<char> seen(g.size(), 0);
  std::vector<DoubleCoset> out;
  for (int w = 0; w < g.size(); ++w) {
    if (seen[w]) continue;
    std::set<int> orbit;
    for (int a : left)
      for (int b : right) orbit.insert(g.multiply(g.multiply(a, w), b));
    DoubleCoset c;
    c.elements.assign(orbit.begin(), orbit.end());
    for (int x : c.elements) {
      seen[x] = 1;
      if (c.shortest < 0 || g.length(x) < g.length(c.shortest)) c.shortest = x;
      if (c.longest < 0 || g.length(x) > g.length(c.longest)) c.longest = x;
    }
    c.matrix = matrix_of_triple(lambda, g.element(w), mu, kind);
    out.push_back(std::move(c));
  }
  return out;
}

LaurentPoly pi_J(const HeckeAlgebra& h, const std::vector<int>& subgroup) {
  LaurentPoly sum;
  int top = 0;
  for (int w : subgroup) {
    sum += LaurentPoly::monomial(1, 2 * h.weighted_length(w));
    top = std::max(top, h.weighted_length(w));
  }
  return sum.shifted(-top);
}

SchurOracle::SchurOracle(int n, int d, SchurKind kind, int max_rank)
    : n_(n), d_(d), kind_(kind) {
  const MatrixKind mk = matrix_kind(kind);
  basis_ = enumerate_Pi(n, d, mk);
  hecke_ = std::make_unique<HeckeAlgebra>(d, weights_of(kind), max_rank);
  const auto& g = hecke_->group();
  std::map<CosetMatrix, int> longest_of;
  const auto comps = enumerate_compositions(n, d, mk);
  for (const auto& lambda : comps) {
    pi_[lambda] = pi_J(*hecke_, parabolic_subgroup(g, lambda, mk));
    for (const auto& mu : comps)
      for (const auto& c : double_coset_data(g, lambda, mu, mk))
        longest_of[c.matrix] = c.longest;
  }
  for (int a = 0; a < static_cast<int>(basis_.size()); ++a) {
    auto it = longest_of.find(basis_[a]);
    if (it == longest_of.end())
      throw Error(ErrorCode::ConventionFailure,
                  "matrix " + to_string(basis_[a]) + " has no double coset");
    w_plus_.push_back(it->second);
    by_coset_[{ro(basis_[a]), co(basis_[a]), it->second}] = a;
  }
}

int SchurOracle::index(const CosetMatrix& a) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), a);
  if (it == basis_.end() || !(*it == a))
    throw Error(ErrorCode::InvalidArgument, "matrix not in the basis");
  return static_cast<int>(it - basis_.begin());
}

std::vector<std::pair<int, LaurentPoly>> SchurOracle::product(int a, int b) {
  std::vector<std::pair<int, LaurentPoly>> out;
  const Composition mu = co(basis_[a]);
  if (mu != ro(basis_[b])) return out;
  const Composition lambda = ro(basis_[a]), nu = co(basis_[b]);
  const LaurentPoly& pi = pi_.at(mu);
  for (const auto& [z, h] : hecke_->structure(w_plus_[a], w_plus_[b])) {
    auto q = h.divide_exact(pi);
    if (!q)
      throw Error(ErrorCode::DivisionNotExact,
                  "structure constant " + h.to_string() + " not divisible by " +
                      pi.to_string());
    auto it = by_coset_.find({lambda, nu, z});
    if (it == by_coset_.end())
      throw Error(ErrorCode::ConventionFailure,
                  "product term outside the longest double coset elements");
    out.emplace_back(it->second, *q);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

LaurentPoly SchurOracle::structure_constant(int a, int b, int c) {
  for (const auto& [k, p] : product(a, b))
    if (k == c) return p;
  return {};
}

CellDecomposition SchurOracle::cells() {
  const int n = static_cast<int>(basis_.size());
  std::vector<std::vector<int>> left(n), right(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& [c, p] : product(a, b)) {
        left[b].push_back(c);
        right[a].push_back(c);
      }
  for (auto* edges : {&left, &right})
    for (auto& e : *edges) {
      std::sort(e.begin(), e.end());
      e.erase(std::unique(e.begin(), e.end()), e.end());
    }
  return cells_from_relations(n, left, right);
}

CellBlocks blocks_of(const CellDecomposition& c) {
  return {c.left_cells, c.right_cells, c.two_sided_cells};
}

namespace {

template <typename Key>
std::vector<std::vector<int>> group_by(const std::vector<Key>& keys) {
  std::map<Key, std::vector<int>> m;
  for (int i = 0; i < static_cast<int>(keys.size()); ++i) m[keys[i]].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& [k, v] : m) blocks.push_back(v);
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

}  // namespace

CellBlocks predicted_schur_cells(SchurOracle& s, const HeckeCells& hecke) {
  std::vector<int> pos(s.hecke().size(), -1);
  for (int i = 0; i < static_cast<int>(hecke.elements.size()); ++i)
    pos[hecke.elements[i]] = i;
  using Key = std::pair<Composition, int>;
  std::vector<Key> left, right;
  std::vector<int> two;
  for (int a = 0; a < static_cast<int>(s.basis().size()); ++a) {
    int w = pos[s.w_plus(a)];
    left.push_back({co(s.basis()[a]), hecke.cells.cell_of(CellSide::Left, w)});
    right.push_back({ro(s.basis()[a]), hecke.cells.cell_of(CellSide::Right, w)});
    two.push_back(hecke.cells.cell_of(CellSide::TwoSided, w));
  }
  return {group_by(left), group_by(right), group_by(two)};
}

std::vector<LeftCellCount> left_cell_count_via_R(SchurOracle& s) {
  if (s.kind() == SchurKind::ITilde)
    throw Error(ErrorCode::KindMismatch, "left_cell_count_via_R needs kind j or i");
  const MatrixKind mk = matrix_kind(s.kind());
  HeckeAlgebra& h = s.hecke();
  const auto& g = h.group();
  const HeckeCells hc = hecke_cells(h);
  const auto comps = enumerate_compositions(s.n(), s.d(), mk);
  const CellDecomposition sc = s.cells();

  std::vector<LeftCellCount> rows;
  for (const auto& block : hc.cells.two_sided_cells) {
    LeftCellCount row;
    row.special = special_partition_of(
        pt_shape(g.element(hc.elements[block.front()]), embed_kind(mk)), mk);
    std::set<int> left_ids;
    for (int w : block) left_ids.insert(hc.cells.cell_of(CellSide::Left, w));
    row.hecke_left_cells = static_cast<int>(left_ids.size());
    for (int id : left_ids) {
      const auto descent = g.right_descents(hc.elements[hc.cells.left_cells[id].front()]);
      for (const auto& lambda : comps) {
        const auto gens = parabolic_generators(lambda, mk);
        if (std::includes(descent.begin(), descent.end(), gens.begin(), gens.end()))
          ++row.count_via_R;
      }
    }
    const int cell = hc.cells.cell_of(CellSide::TwoSided, block.front());
    for (const auto& lc : sc.left_cells) {
      int w = s.w_plus(lc.front());
      if (hc.cells.cell_of(CellSide::TwoSided, w) == cell) ++row.schur_left_cells;
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    return x.special > y.special;
  });
  return rows;
}

}  // namespace cellkit
