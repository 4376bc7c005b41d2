#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cellkit/cells.hpp"
#include "cellkit/coset_matrices.hpp"
#include "cellkit/schur.hpp"
#include "cellkit/symbols.hpp"
#include "cellkit/tableaux.hpp"
#include "commands.hpp"

using namespace cellkit;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates sub-checks; the first few failures end up in the detail.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failed_;
    if (failed_ <= 3) notes_ += (notes_.empty() ? "" : "; ") + what;
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  Outcome outcome() const {
    std::string d = std::to_string(checks_ - failed_) + "/" + std::to_string(checks_) + " checks";
    if (!notes_.empty()) d += "; " + notes_;
    return {failed_ == 0, d};
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::string notes_;
};

bool verify_passes(const std::string& id, Tally& t) {
  auto r = cli::cmd_verify(id, {});
  int failed = 0;
  for (const auto& v : r.doc["verdicts"])
    if (!v["pass"].get<bool>()) {
      ++failed;
      if (failed == 1) t.note(id + ": " + v["check"].get<std::string>());
    }
  t.expect(r.status == cli::Status::Pass,
           id + " has " + std::to_string(failed) + " failing values");
  return r.status == cli::Status::Pass;
}

std::set<Partition> keys_of(int n, int d, MatrixKind kind) {
  std::set<Partition> out;
  for (const auto& c : two_sided_classify(n, d, kind)) out.insert(c.special);
  return out;
}

std::set<std::set<int>> group_sets(const HeckeCells& hc, CellSide side) {
  std::set<std::set<int>> out;
  for (const auto& c : hc.cells.cells(side)) {
    std::set<int> s;
    for (int i : c) s.insert(hc.elements[i]);
    out.insert(s);
  }
  return out;
}

Outcome basis_with_n3_d2() {
  Tally t;
  t.expect(enumerate_Pi(3, 2, MatrixKind::J).size() == 15, "Pi(3,2) has 15 matrices");
  verify_passes("ex-3.11", t);
  return t.outcome();
}

Outcome pseudo_matrix_example() {
  Tally t;
  verify_passes("ex-3.14", t);
  auto a = make_matrix(MatrixKind::J, {{2, 1, 1}, {2, 3, 2}, {1, 1, 2}});
  t.expect(sigma_greene_oracle(a) == Partition{9, 4, 2}, "Greene path gives (9,4,2)");
  t.expect(pt_shape(y_of_matrix(a), EmbedKind::B) == Partition{9, 4, 2},
           "RS path gives (9,4,2)");
  return t.outcome();
}

Outcome two_sided_cells_n3_d2() {
  Tally t;
  auto classes = two_sided_classify(3, 2, MatrixKind::J);
  t.expect(classes.size() == 2, "two classes");
  std::map<Partition, size_t> sizes;
  for (const auto& c : classes) sizes[c.special] = c.members.size();
  t.expect(sizes == std::map<Partition, size_t>{{{3, 1, 1}, 6}, {{5}, 9}},
           "classes (3,1,1) with 6 and (5) with 9 members");
  std::set<Partition> sp;
  for (const auto& lp : enumerate_special(5, 3, PartitionKind::B)) sp.insert(lp.parts);
  t.expect(sp == std::set<Partition>{{5}, {3, 1, 1}}, "special partitions of 5, at most 3 parts");
  verify_passes("ex-3.18", t);
  return t.outcome();
}

Outcome i_kind_n2() {
  Tally t;
  verify_passes("ex-5.9", t);
  t.expect(keys_of(2, 2, MatrixKind::I) == std::set<Partition>{{4}, {2, 2}}, "keys at d = 2");
  t.expect(keys_of(2, 3, MatrixKind::I) == std::set<Partition>{{6}, {4, 2}, {3, 3}},
           "keys at d = 3");
  for (int d = 1; d <= 8; ++d)
    for (int k = 0; k <= d; ++k) {
      Partition e = {2 * d - k};
      if (k > 0) e.push_back(k);
      t.expect(sigma(make_matrix(MatrixKind::I, {{k, d - k}, {d - k, k}})) == e,
               "closed form at d = " + std::to_string(d));
    }
  return t.outcome();
}

Outcome hecke_cells_vs_rs_shape() {
  Tally t;
  std::string counts;
  for (int d = 2; d <= 3; ++d) {
    HeckeAlgebra h(d, WeightFunction::equal());
    auto hc = hecke_cells(h);
    const auto& g = h.group();
    // classes of the symbol of PT(w) up to the approximate equivalence
    std::vector<SymbolBC> reps;
    std::map<int, std::set<int>> by_class;
    for (int w = 0; w < g.size(); ++w) {
      auto s = symbol_from_partition(pt_shape(g.element(w), EmbedKind::B), EmbedKind::B);
      size_t k = 0;
      while (k < reps.size() && !approx_equal(reps[k], s)) ++k;
      if (k == reps.size()) reps.push_back(s);
      by_class[static_cast<int>(k)].insert(w);
    }
    std::set<std::set<int>> classes;
    for (auto& [k, s] : by_class) classes.insert(s);
    auto cells = group_sets(hc, CellSide::TwoSided);
    t.expect(cells == classes, "cells = classes at d = " + std::to_string(d));
    auto sp = enumerate_special(2 * d + 1, 2 * d + 1, PartitionKind::B).size();
    t.expect(cells.size() == sp, "cell count = special partitions at d = " + std::to_string(d));
    if (d == 2) t.expect(cells.size() == 3, "3 cells at d = 2");
    counts += (counts.empty() ? "" : ", ") + std::to_string(cells.size());
  }
  t.note("cell counts " + counts);
  return t.outcome();
}

Outcome longest_representatives() {
  Tally t;
  struct Case {
    int n, d;
    MatrixKind kind;
  };
  const std::vector<Case> cases = {{3, 1, MatrixKind::J}, {3, 2, MatrixKind::J},
                                   {3, 3, MatrixKind::J}, {5, 2, MatrixKind::J},
                                   {2, 2, MatrixKind::I}, {2, 3, MatrixKind::I},
                                   {4, 2, MatrixKind::I}};
  for (const auto& c : cases) {
    WeylGroupB g(c.d);
    std::map<CosetMatrix, int> longest;
    for (const auto& lambda : enumerate_compositions(c.n, c.d, c.kind))
      for (const auto& mu : enumerate_compositions(c.n, c.d, c.kind))
        for (const auto& dc : double_coset_data(g, lambda, mu, c.kind))
          longest[dc.matrix] = dc.longest;
    auto pi = enumerate_Pi(c.n, c.d, c.kind);
    std::string tag = std::string(kind_name(c.kind)) + "(" + std::to_string(c.n) + "," +
                      std::to_string(c.d) + ")";
    t.expect(longest.size() == pi.size(), "one double coset per matrix for " + tag);
    for (const auto& a : pi) {
      auto y = y_of_matrix(a);
      t.expect(longest.count(a) && g.element(longest[a]) == y, "y is longest for " + tag);
      t.expect(length_formula(a) == length(y), "length formula for " + tag);
    }
  }
  return t.outcome();
}

Outcome schur_oracle_cells() {
  Tally t;
  for (auto [n, d, kind] : {std::tuple{3, 2, SchurKind::J}, std::tuple{2, 2, SchurKind::ITilde}}) {
    SchurOracle s(n, d, kind);
    auto predicted = predicted_schur_cells(s, hecke_cells(s.hecke()));
    auto oracle = blocks_of(s.cells());
    std::string tag = std::string(kind_name(kind)) + "(" + std::to_string(n) + "," +
                      std::to_string(d) + ")";
    t.expect(oracle.left == predicted.left, "left cells of " + tag);
    t.expect(oracle.right == predicted.right, "right cells of " + tag);
    t.expect(oracle.two_sided == predicted.two_sided, "two-sided cells of " + tag);
  }
  return t.outcome();
}

Outcome letter_counting_weight() {
  Tally t;
  for (int d = 1; d <= 3; ++d) {
    HeckeAlgebra h(d, WeightFunction::ell_a());
    const auto& g = h.group();
    for (int w = 0; w < g.size(); ++w) {
      t.expect(h.bar(h.kl(w)) == h.kl(w), "bar invariance");
      for (int i = 1; i < d; ++i) {
        if (!g.left_descent(i, w)) continue;
        auto lhs = h.left_generator(i, h.kl(w));
        auto rhs = h.kl(w);
        for (auto& c : rhs) c = c.shifted(1);
        t.expect(lhs == rhs, "T_i C'_w = q C'_w");
      }
    }
    h.build_structure_table();
    for (int x = 0; x < g.size(); ++x)
      for (int y = 0; y < g.size(); ++y)
        for (const auto& [z, p] : h.structure(x, y)) t.expect(p.nonnegative(), "positivity");
    if (d < 2) continue;
    auto hc = hecke_cells(h);
    auto hd = hecke_cells_type_D(h);
    std::vector<int> omega = {g.identity(), g.right(g.identity(), 0)};
    t.expect(omega.size() == 2 && omega[0] != omega[1], "|Omega| = 2");
    std::set<std::set<int>> saturated;
    for (const auto& f : group_sets(hd, CellSide::TwoSided)) {
      std::set<int> s;
      for (int a : omega)
        for (int x : f)
          for (int b : omega) s.insert(g.multiply(g.multiply(a, x), b));
      saturated.insert(s);
    }
    t.expect(group_sets(hc, CellSide::TwoSided) == saturated,
             "cells are Omega F Omega at d = " + std::to_string(d));
  }
  return t.outcome();
}

Outcome symbol_conjecture_scan() {
  Tally t;
  verify_passes("ex-6.14", t);
  std::string counts, first;
  for (int d = 2; d <= 4; ++d) {
    int checked = 0, counter = 0;
    const auto s0 = SignedPermutation::simple(d, 0);
    for (const auto& w : enumerate_group(d, GroupType::D)) {
      ++checked;
      auto a = sym(w), b = sym(compose(s0, w));
      if (same_class(a, b, true)) continue;
      ++counter;
      if (first.empty())
        first = "w = " + word_to_string(reduced_word(w)) + ": sym(w) = " + to_string(a) +
                ", sym(s0 w) = " + to_string(b);
    }
    if (d == 4) t.expect(checked == 192, "192 elements at d = 4");
    t.expect(counter == 0, std::to_string(counter) + " counterexamples at d = " +
                               std::to_string(d));
    counts += (counts.empty() ? "" : ", ") + std::string("d=") + std::to_string(d) + ": " +
              std::to_string(counter) + "/" + std::to_string(checked);
  }
  t.note("counterexamples " + counts);
  if (!first.empty()) t.note("first " + first);
  return t.outcome();
}

Outcome left_cell_counts() {
  Tally t;
  for (int d = 1; d <= 3; ++d) {
    HeckeAlgebra h(d, WeightFunction::equal());
    auto hc = hecke_cells(h);
    const auto& g = h.group();
    std::set<Partition> seen;
    for (const auto& cell : hc.cells.two_sided_cells) {
      auto lambda = special_partition_of(
          pt_shape(g.element(hc.elements[cell.front()]), EmbedKind::B), MatrixKind::J);
      seen.insert(lambda);
      std::set<int> lefts;
      for (int x : cell) lefts.insert(hc.cells.cell_of(CellSide::Left, x));
      t.expect(static_cast<long long>(lefts.size()) == count_standard_domino(lambda),
               "left cells in the cell of " + partition_to_string(lambda));
    }
    std::set<Partition> all;
    for (const auto& lp : enumerate_special(2 * d + 1, 2 * d + 1, PartitionKind::B))
      all.insert(lp.parts);
    t.expect(seen == all, "every special partition has a cell at d = " + std::to_string(d));
  }
  SchurOracle s(3, 2, SchurKind::J);
  for (const auto& row : left_cell_count_via_R(s))
    t.expect(row.count_via_R == row.schur_left_cells,
             "via R for " + partition_to_string(row.special));
  auto table = cli::cmd_conjecture("c3.19", [] {
    cli::Options o;
    o.n = 3;
    o.d = 2;
    return o;
  }());
  std::string rows;
  for (const auto& r : table.doc["result"]["rows"])
    rows += " " + r["special"].get<std::string>() + ":" +
            std::to_string(r["domino_count"].get<long long>()) + "/" +
            std::to_string(r["oracle_left_cells"].get<int>());
  t.note("domino/oracle table" + rows);
  return t.outcome();
}

Outcome property_suite() {
  Tally t;
  for (int d = 1; d <= 3; ++d)
    for (const auto& w : enumerate_group(d, GroupType::B))
      for (auto k : {EmbedKind::B, EmbedKind::C})
        t.expect(pt_shape(w, k) == pt_shape(inverse(w), k), "RS symmetry");
  for (int d = 1; d <= 6; ++d)
    for (auto k : {EmbedKind::B, EmbedKind::C}) {
      int big = k == EmbedKind::B ? 2 * d + 1 : 2 * d;
      t.expect(pt_shape(SignedPermutation::identity(d), k) == Partition(big, 1),
               "shape of the identity");
      t.expect(pt_shape(SignedPermutation::longest(d), k) == Partition{big},
               "shape of the longest element");
    }
  for (int d = 1; d <= 6; ++d)
    for (int m = 0; m <= 3; ++m)
      for (const auto& s : enumerate_symbols(d, m)) {
        auto pb = par_B(s), pc = par_C(s);
        t.expect(par_B(symbol_from_partition(pb, EmbedKind::B)) == pb, "par_B round trip");
        t.expect(par_C(symbol_from_partition(pc, EmbedKind::C)) == pc, "par_C round trip");
      }
  for (int d = 1; d <= 4; ++d) {
    std::vector<SymbolBC> classes;  // normalised representatives
    for (int m = 0; m <= d; ++m)
      for (const auto& s : enumerate_symbols(d, m)) {
        auto n = normalize(s);
        bool known = false;
        for (const auto& c : classes) known |= c == n;
        if (!known) classes.push_back(n);
      }
    std::vector<bool> used(classes.size(), false);
    for (size_t i = 0; i < classes.size(); ++i) {
      if (used[i]) continue;
      int specials = 0;
      for (size_t j = i; j < classes.size(); ++j)
        if (approx_equal(classes[i], classes[j])) {
          used[j] = true;
          specials += is_special_symbol(classes[j]);
        }
      t.expect(specials == 1, "one special symbol in the class of " + to_string(classes[i]));
    }
  }
  for (int d = 1; d <= 3; ++d)
    for (const auto& a : enumerate_Pi(3, d, MatrixKind::J))
      t.expect(sigma(a) == sigma_greene_oracle(a), "sigma = Greene on " + to_string(a));
  return t.outcome();
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
  double limit_s;  // 0: no bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"basis of S^j(3,2): y and lengths", basis_with_n3_d2, 1.0},
      {"pseudo-matrix, Greene invariants and sigma for one matrix of Pi(3,7)",
       pseudo_matrix_example, 5.0},
      {"two-sided cells of S^j(3,2)", two_sided_cells_n3_d2, 0},
      {"i-kind with n = 2: matrices, sigma, cells, closed form d <= 8", i_kind_n2, 0},
      {"equal-parameter Hecke cells = RS-shape classes, d = 2, 3", hecke_cells_vs_rs_shape,
       300.0},
      {"longest double coset representatives and length formula", longest_representatives, 0},
      {"Schur oracle cells = co/ro + Hecke-cell prediction", schur_oracle_cells, 0},
      {"letter-counting weight suite, d <= 3", letter_counting_weight, 0},
      {"sym(s0 w) = sym(w) on W_D, d <= 4", symbol_conjecture_scan, 10.0},
      {"left-cell counts and domino tableaux", left_cell_counts, 0},
      {"property suite", property_suite, 0},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && s >= c.limit_s) {
      o.pass = false;
      o.detail += "; over the time bound";
    }
    failures += !o.pass;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (o.pass ? "PASS" : "FAIL") << "  [" << (i + 1) << "] " << c.name << " (" << s
         << " s) -- " << o.detail;
    std::cout << line.str() << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria pass\n";
  return failures == 0 ? 0 : 1;
}
