#pragma once

#include <map>
#include <utility>
#include <vector>

#include "cellkit/laurent.hpp"
#include "cellkit/signed_perm.hpp"

namespace cellkit {

// Weights of the generators: L(s_0) and L(s_i) for i >= 1.
struct WeightFunction {
  int s0 = 1;
  int other = 1;
  static WeightFunction equal() { return {1, 1}; }
  // L(s_0) = 0, L(s_i) = 1: the weight counting letters s_i with i >= 1.
  static WeightFunction ell_a() { return {0, 1}; }
  int of(int generator) const { return generator == 0 ? s0 : other; }
  friend bool operator==(const WeightFunction&, const WeightFunction&) = default;
};

// B_d with multiplication tables, elements indexed in enumerate_group order.
class WeylGroupB {
 public:
  explicit WeylGroupB(int d, int bound = 5);

  int rank() const { return d_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const SignedPermutation& element(int w) const { return elements_[w]; }
  int index(const SignedPermutation& w) const;
  int identity() const { return 0; }
  int longest() const { return size() - 1; }

  int right(int w, int s) const { return right_[w][s]; }  // w s
  int left(int s, int w) const { return left_[w][s]; }    // s w
  int multiply(int x, int y) const;
  int inverse(int w) const { return inverse_[w]; }
  int length(int w) const { return length_[w]; }
  int negatives(int w) const { return negatives_[w]; }
  bool in_D(int w) const { return negatives_[w] % 2 == 0; }
  const CoxeterWord& word(int w) const { return words_[w]; }
  bool right_descent(int w, int s) const { return length_[right_[w][s]] < length_[w]; }
  bool left_descent(int s, int w) const { return length_[left_[w][s]] < length_[w]; }
  std::vector<int> right_descents(int w) const;
  std::vector<int> left_descents(int w) const;
  // Subgroup generated by the given elements.
  std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
  std::vector<int> d_elements() const;

 private:
  int d_;
  std::vector<SignedPermutation> elements_;
  std::vector<int> lookup_;
  std::vector<std::vector<int>> right_, left_;
  std::vector<int> inverse_, length_, negatives_;
  std::vector<CoxeterWord> words_;
};

// Coefficients indexed by group element, in the basis named by the function
// that produced them.
using HeckeVector = std::vector<LaurentPoly>;
using SparseTerms = std::vector<std::pair<int, LaurentPoly>>;

// Iwahori-Hecke algebra of B_d over Z[q, q^{-1}] with
// T_s^2 = 1 + (q^{L(s)} - q^{-L(s)}) T_s, and its Kazhdan-Lusztig basis
// C'_w = T_w + sum_{y < w} p_{y,w} T_y, p_{y,w} in q^{-1} Z[q^{-1}].
class HeckeAlgebra {
 public:
  HeckeAlgebra(int d, WeightFunction weights, int max_rank = 4);

  const WeylGroupB& group() const { return group_; }
  WeightFunction weights() const { return weights_; }
  int size() const { return group_.size(); }
  int weighted_length(int w) const { return wlen_[w]; }

  HeckeVector zero() const { return HeckeVector(size()); }
  HeckeVector T(int w) const;
  HeckeVector right_generator(const HeckeVector& h, int s) const;  // h T_s
  HeckeVector left_generator(int s, const HeckeVector& h) const;   // T_s h
  HeckeVector multiply(const HeckeVector& a, const HeckeVector& b) const;  // T basis
  HeckeVector bar(const HeckeVector& h) const;                            // T basis

  // C'_w written in the T basis.
  const HeckeVector& kl(int w) const { return kl_[w]; }
  const SparseTerms& kl_terms(int w) const { return kl_sparse_[w]; }
  // T-basis coordinates -> C'-basis coordinates.
  HeckeVector to_kl_basis(HeckeVector h) const;
  HeckeVector from_kl_basis(const HeckeVector& c) const;

  // C'_x C'_y = sum_z h_{x,y,z} C'_z.  Reads the full table once it is built,
  // otherwise computes and caches the single product.
  const SparseTerms& structure(int x, int y);
  // Without the table.
  SparseTerms product_in_kl_basis(int x, int y) const;
  bool has_structure_table() const { return !table_.empty(); }
  void build_structure_table();

 private:
  static SparseTerms sparse(const HeckeVector& h);

  WeylGroupB group_;
  WeightFunction weights_;
  std::vector<int> wlen_;
  std::vector<HeckeVector> bar_t_;
  std::vector<HeckeVector> kl_;
  std::vector<SparseTerms> kl_sparse_;
  std::vector<std::vector<SparseTerms>> table_;
  std::map<std::pair<int, int>, SparseTerms> cache_;
};

}  // namespace cellkit
