#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cellkit/signed_perm.hpp"

namespace cellkit {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;
// Rows of a tableau, top row first.
using Tableau = std::vector<std::vector<int>>;

enum class VeryEvenLabel { I, II };

struct LabeledPartition {
  Partition parts;
  std::optional<VeryEvenLabel> label;
  friend bool operator==(const LabeledPartition&,
                         const LabeledPartition&) = default;
};

// B embeds [-d, d] into [1, 2d+1]; C embeds [-d, d] \ {0} into [1, 2d].
enum class EmbedKind { B, C };

// One-line notation of w as a permutation of [1, 2d+1] (B) or [1, 2d] (C).
std::vector<int> embed_sym(const SignedPermutation& w, EmbedKind kind);

// Row insertion with decreasing rows: k is appended to a row when it is not
// larger than every entry, otherwise it replaces the largest entry smaller
// than k, which moves to the next row.  Throws on repeated values.
Tableau rs_insert(const std::vector<int>& seq);
Partition shape(const Tableau& t);
Partition pt_shape(const SignedPermutation& w, EmbedKind kind);

int size(const Partition& p);
Partition conjugate(const Partition& p);
// Partitions of n with at most max_parts parts, in decreasing lex order.
std::vector<Partition> partitions(int n, int max_parts);

// B: size odd, even parts have even multiplicity, same for the conjugate.
// C: size even, odd parts have even multiplicity, same for the conjugate.
// D: size even, even parts have even multiplicity, conjugate as in C.
enum class PartitionKind { B, C, D };

bool even_parts_even_multiplicity(const Partition& p);
bool odd_parts_even_multiplicity(const Partition& p);
bool is_very_even(const Partition& p);
bool is_special(const Partition& p, PartitionKind kind);
// Kind D lists very even partitions twice, labelled I and II.
std::vector<LabeledPartition> enumerate_special(int size, int max_parts,
                                                PartitionKind kind);

// Chains of shapes growing by one domino at a time, starting from the empty
// shape (even size) or from the single box (odd size).
long long count_standard_domino(const Partition& p);

// Fillings of p by dominoes with labels in [1, bound], rows weakly increasing
// and columns strictly increasing between distinct pieces.  For odd size a
// monomino sits in the corner box; it carries label 1 when
// monomino_entry_one is set and label 0 otherwise.
long long count_semistandard_domino(const Partition& p, int bound,
                                    bool monomino_entry_one);

std::string partition_to_string(const Partition& p);

}  // namespace cellkit
