#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "cellkit/cells.hpp"
#include "cellkit/coset_matrices.hpp"
#include "cellkit/hecke.hpp"

namespace cellkit {

// J and I use equal parameters; ITilde uses the I matrices with the weight
// L(s_0) = 0.
enum class SchurKind { J, I, ITilde };

MatrixKind matrix_kind(SchurKind kind);
WeightFunction weights_of(SchurKind kind);
const char* kind_name(SchurKind kind);
SchurKind parse_schur_kind(const std::string& text);

std::vector<int> parabolic_subgroup(const WeylGroupB& g, const Composition& lambda,
                                    MatrixKind kind);

struct DoubleCoset {
  std::vector<int> elements;  // group indices, sorted
  int shortest = -1;
  int longest = -1;
  CosetMatrix matrix;
};

// W_lambda \ W / W_mu, found by orbit enumeration.
std::vector<DoubleCoset> double_coset_data(const WeylGroupB& g,
                                           const Composition& lambda,
                                           const Composition& mu, MatrixKind kind);

// q^{-L(w_0)} sum_{w in subgroup} q^{2 L(w)}, w_0 the longest element.
LaurentPoly pi_J(const HeckeAlgebra& h, const std::vector<int>& subgroup);

// Schur algebra on the basis Pi(n, d), with structure constants
// pi_J(mu) g_{A,B}^C = h_{w_A^+, w_B^+}^{w_C^+}.
class SchurOracle {
 public:
  SchurOracle(int n, int d, SchurKind kind, int max_rank = 4);

  int n() const { return n_; }
  int d() const { return d_; }
  SchurKind kind() const { return kind_; }
  const std::vector<CosetMatrix>& basis() const { return basis_; }
  int index(const CosetMatrix& a) const;
  int w_plus(int a) const { return w_plus_[a]; }
  HeckeAlgebra& hecke() { return *hecke_; }

  // {A}{B} = sum_C g_{A,B}^C {C}; empty unless co(A) = ro(B).
  std::vector<std::pair<int, LaurentPoly>> product(int a, int b);
  LaurentPoly structure_constant(int a, int b, int c);

  CellDecomposition cells();

 private:
  int n_, d_;
  SchurKind kind_;
  std::unique_ptr<HeckeAlgebra> hecke_;
  std::vector<CosetMatrix> basis_;
  std::vector<int> w_plus_;
  std::map<std::tuple<Composition, Composition, int>, int> by_coset_;
  std::map<Composition, LaurentPoly> pi_;
};

// Cells of the Schur algebra predicted from Hecke cells: A ~_L B iff
// co(A) = co(B) and w_A^+ ~_L w_B^+; right cells use ro; two-sided cells
// follow w^+.
struct CellBlocks {
  std::vector<std::vector<int>> left, right, two_sided;
  friend bool operator==(const CellBlocks&, const CellBlocks&) = default;
};
CellBlocks blocks_of(const CellDecomposition& c);
CellBlocks predicted_schur_cells(SchurOracle& s, const HeckeCells& hecke);

struct LeftCellCount {
  Partition special;
  int hecke_left_cells = 0;
  int count_via_R = 0;     // sum over Hecke left cells of admissible lambda
  int schur_left_cells = 0;  // from the Schur oracle
};
// One row per Hecke two-sided cell meeting the w^+ of Pi(n, d).  J or I only.
std::vector<LeftCellCount> left_cell_count_via_R(SchurOracle& s);

}  // namespace cellkit
