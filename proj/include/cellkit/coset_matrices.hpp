#pragma once

#include <string>
#include <vector>

#include "cellkit/signed_perm.hpp"
#include "cellkit/tableaux.hpp"

namespace cellkit {

// J: n = 2r+1 rows and columns indexed by [-r, r], entries summing to 2d+1.
// I: n = 2r indexed by [-r, r] \ {0}, entries summing to 2d.
enum class MatrixKind { J, I };

EmbedKind embed_kind(MatrixKind kind);
// Row/column labels in increasing order.
std::vector<int> index_set(MatrixKind kind, int n);

// Symmetric compositions, stored in index order (-r first).
using Composition = std::vector<int>;

// Centrally symmetric (a_{ij} = a_{-i,-j}) non-negative matrix.  rows[0] is
// the row labelled -r.
struct CosetMatrix {
  MatrixKind kind = MatrixKind::J;
  int n = 0;
  int d = 0;
  std::vector<std::vector<int>> rows;

  int at(int i, int j) const;  // by labels
  friend bool operator==(const CosetMatrix&, const CosetMatrix&) = default;
  friend auto operator<=>(const CosetMatrix&, const CosetMatrix&) = default;
};

CosetMatrix make_matrix(MatrixKind kind, std::vector<std::vector<int>> rows);
void validate(const CosetMatrix& a);

std::vector<Composition> enumerate_compositions(int n, int d, MatrixKind kind);
std::vector<CosetMatrix> enumerate_Pi(int n, int d, MatrixKind kind);
Composition ro(const CosetMatrix& a);
Composition co(const CosetMatrix& a);

// Blocks R_i of the composition, in index order, as sorted lists of integers
// in [-d, d] (J) or [-d, d] \ {0} (I).
std::vector<std::vector<int>> intervals(const Composition& lambda,
                                        MatrixKind kind);
int composition_rank(const Composition& lambda, MatrixKind kind);
// Simple reflections generating the stabiliser of the blocks.
std::vector<int> parabolic_generators(const Composition& lambda,
                                      MatrixKind kind);

// a_{ij} = #(R_i^lambda intersected with g(R_j^mu))
CosetMatrix matrix_of_triple(const Composition& lambda,
                             const SignedPermutation& g, const Composition& mu,
                             MatrixKind kind);

// Cell (i, j) holds a_{ij} consecutive values written in decreasing order.
using PseudoMatrix = std::vector<std::vector<std::vector<int>>>;
PseudoMatrix pseudo_matrix(const CosetMatrix& a);
// Longest element of the double coset attached to a.
SignedPermutation y_of_matrix(const CosetMatrix& a);
// Length of y_of_matrix(a) computed from the entries alone.
int length_formula(const CosetMatrix& a);

Partition sigma(const CosetMatrix& a);
// s_k = largest total over positions forming at most k chains, for k=1..n^2
// (chains for (i,j) <= (i',j') iff i >= i' and j <= j').  n <= 4.
std::vector<int> greene_invariants(const CosetMatrix& a);
Partition sigma_greene_oracle(const CosetMatrix& a);

struct TwoSidedClass {
  Partition special;  // the special partition of the class
  std::vector<CosetMatrix> members;
};
// Group Pi by the ~-class of sigma, keyed by the special partition.
std::vector<TwoSidedClass> two_sided_classify(int n, int d, MatrixKind kind);
Partition special_partition_of(const Partition& p, MatrixKind kind);

std::string to_string(const CosetMatrix& a);
const char* kind_name(MatrixKind kind);

}  // namespace cellkit
