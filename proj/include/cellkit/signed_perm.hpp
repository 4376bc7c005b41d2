#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace cellkit {

// Letters of a word in the generators s_0, ..., s_{d-1} of the type B_d Weyl
// group.  s_0 swaps -1 and 1, s_i (i >= 1) swaps i and i+1 (and -i, -i-1).
using CoxeterWord = std::vector<int>;

// A bijection w of [-d, d] with w(-i) = -w(i), stored by its window
// [w(1), ..., w(d)].
class SignedPermutation {
 public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int d);
  static SignedPermutation longest(int d);
  static SignedPermutation simple(int d, int i);

  int rank() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const {
    return i == 0 ? 0 : (i > 0 ? w_[i - 1] : -w_[-i - 1]);
  }
  const std::vector<int>& window() const { return w_; }
  bool is_identity() const;

  friend bool operator==(const SignedPermutation&,
                         const SignedPermutation&) = default;
  friend auto operator<=>(const SignedPermutation&,
                          const SignedPermutation&) = default;

 private:
  std::vector<int> w_;
};

SignedPermutation from_word(int d, const CoxeterWord& word);
// (x y)(i) = x(y(i))
SignedPermutation compose(const SignedPermutation& x,
                          const SignedPermutation& y);
SignedPermutation inverse(const SignedPermutation& w);

int length(const SignedPermutation& w);
int negative_count(const SignedPermutation& w);
// Number of letters s_1, ..., s_{d-1} in any reduced word.
int weight_a(const SignedPermutation& w);
CoxeterWord reduced_word(const SignedPermutation& w);
bool in_type_D(const SignedPermutation& w);
bool bruhat_leq(const SignedPermutation& x, const SignedPermutation& y);

enum class Side { Left, Right };
// Full uses S = {s_0, ..., s_{d-1}}, Tilde drops s_0.
enum class GeneratorSet { Full, Tilde };

bool has_descent(const SignedPermutation& w, int i, Side side);
std::vector<int> descents(const SignedPermutation& w, Side side,
                          GeneratorSet gens = GeneratorSet::Full);

enum class GroupType { B, D };

// All elements, sorted by length and then by window.  Throws ResourceLimit
// when d exceeds bound.
std::vector<SignedPermutation> enumerate_group(int d, GroupType type,
                                               int bound = 5);

std::string to_string(const SignedPermutation& w);
SignedPermutation parse_signed_perm(const std::string& text);
std::string word_to_string(const CoxeterWord& word);
CoxeterWord parse_word(const std::string& text);

// Dense index for elements of B_d, used for table lookups.
std::uint64_t encode(const SignedPermutation& w);

}  // namespace cellkit
