#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cellkit/signed_perm.hpp"
#include "cellkit/tableaux.hpp"

namespace cellkit {

// Two strictly increasing rows of non-negative integers with m+1 entries on
// top and m below; the entries sum to d + m^2.
struct SymbolBC {
  std::vector<int> top;
  std::vector<int> bottom;
  friend bool operator==(const SymbolBC&, const SymbolBC&) = default;
};

// Two strictly increasing rows of equal length m, entries summing to
// d + m(m-1).  Symbols with equal rows come in two copies, told apart by twin.
struct SymbolD {
  std::vector<int> top;
  std::vector<int> bottom;
  std::optional<VeryEvenLabel> twin;
  friend bool operator==(const SymbolD&, const SymbolD&) = default;
};

void validate(const SymbolBC& s);
void validate(const SymbolD& s);
int defect(const SymbolBC& s);  // m
int defect(const SymbolD& s);
int rank(const SymbolBC& s);
int rank(const SymbolD& s);
bool is_twin(const SymbolD& s);

// Prepend 0 to both rows and raise the old entries by one.
SymbolBC shift(const SymbolBC& s);
SymbolD shift(const SymbolD& s);
// Undo shifts while possible; for D also put the lexicographically smaller
// row on top.
SymbolBC normalize(const SymbolBC& s);
SymbolD normalize(const SymbolD& s);

Partition par_B(const SymbolBC& s);  // size 2d+1
Partition par_C(const SymbolBC& s);  // size 2d

// Inverse of par_B (kind B) or par_C (kind C) up to shift.  Throws
// NotSymbolPartition when the parity split does not give m+1 / m entries.
SymbolBC symbol_from_partition(const Partition& p, EmbedKind kind);

// Same multiset of entries once both are brought to a common m.
bool approx_equal(const SymbolBC& a, const SymbolBC& b);

enum class EntryComparison { Sets, Multisets };
struct DEquivalenceOptions {
  EntryComparison entries = EntryComparison::Sets;
  // Ignore the I/II labels of twin symbols.
  bool twins_identical = false;
};
bool approx_equal(const SymbolD& a, const SymbolD& b,
                  DEquivalenceOptions opts = {});
// Equality of classes under shift (and row swap for D).
bool same_class(const SymbolBC& a, const SymbolBC& b);
bool same_class(const SymbolD& a, const SymbolD& b, bool twins_identical);

// lambda_i <= mu_i <= lambda_{i+1}
bool is_special_symbol(const SymbolBC& s);
// lambda_i <= mu_i <= lambda_{i+1} for all i, or the same with rows swapped
bool is_special_symbol(const SymbolD& s);
// The special symbol in the ~-class of s (entries sorted and interleaved).
SymbolBC special_in_class(const SymbolBC& s);
SymbolD special_in_class(const SymbolD& s);

// Bottom row mu becomes (0, mu_1 + 1, ..., mu_m + 1).
SymbolD chi(const SymbolBC& s);
// normalize(chi(symbol of PT_C(w))).  Twins come out unlabelled.
SymbolD sym(const SignedPermutation& w);

// All symbols of rank d and defect m.
std::vector<SymbolBC> enumerate_symbols(int d, int m);

std::string to_string(const SymbolBC& s);
std::string to_string(const SymbolD& s);
SymbolBC parse_symbol_bc(const std::string& text);
SymbolD parse_symbol_d(const std::string& text);

}  // namespace cellkit
