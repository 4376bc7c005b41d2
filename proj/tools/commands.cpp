#include "commands.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cellkit/cells.hpp"
#include "cellkit/coset_matrices.hpp"
#include "cellkit/error.hpp"
#include "cellkit/schur.hpp"
#include "cellkit/symbols.hpp"
#include "cellkit/tableaux.hpp"

namespace cellkit::cli {

namespace {

Json json_of(const CosetMatrix& a) { return Json(a.rows); }
Json json_of(const Partition& p) { return Json(p); }
std::string word_of(const SignedPermutation& w) { return word_to_string(reduced_word(w)); }

// Collects pass/fail verdicts.
class Verdicts {
 public:
  template <class E, class A>
  bool check(const std::string& name, bool ok, const E& expected, const A& actual) {
    list_.push_back({{"check", name},
                     {"expected", Json(expected)},
                     {"actual", Json(actual)},
                     {"pass", ok}});
    all_ &= ok;
    return ok;
  }
  template <class T>
  bool equal(const std::string& name, const T& expected, const T& actual) {
    return check(name, expected == actual, expected, actual);
  }
  bool all() const { return all_; }
  const Json& list() const { return list_; }

 private:
  Json list_ = Json::array();
  bool all_ = true;
};

Report finish(Json doc, const Verdicts& v) {
  Report r;
  doc["verdicts"] = v.list();
  r.status = v.all() ? Status::Pass : Status::Fail;
  doc["status"] = status_name(r.status);
  r.doc = std::move(doc);
  return r;
}

Report report_only(Json doc) {
  Report r;
  doc["status"] = status_name(Status::ReportOnly);
  r.doc = std::move(doc);
  return r;
}

Json params(const Options& o, std::initializer_list<const char*> keys) {
  Json p = Json::object();
  for (std::string k : keys) {
    if (k == "n") p["n"] = o.n;
    if (k == "d") p["d"] = o.d;
    if (k == "kind") p["kind"] = o.kind;
    if (k == "method") p["method"] = o.method;
  }
  return p;
}

void require_positive(const Options& o, bool need_n) {
  if (o.d < 1) throw Error(ErrorCode::InvalidArgument, "--d must be at least 1");
  if (need_n && o.n < 1) throw Error(ErrorCode::InvalidArgument, "--n must be at least 1");
}

void require_oracle_rank(const Options& o) {
  if (o.d > o.max_d)
    throw Error(ErrorCode::ResourceLimit,
                "d = " + std::to_string(o.d) + " exceeds the oracle rank cap " +
                    std::to_string(o.max_d) +
                    " (set CELLKIT_MAX_D or --max-rank-override)");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ",";
    line += csv_field(fields[i]);
  }
  return line + "\n";
}

// Two-sided cells of the i-tilde algebra are indexed by a type D symbol class:
// the special symbol of sym(x), x the element of {w, s0 w} lying in W_D.
std::string itilde_key(const WeylGroupB& g, int w) {
  int x = g.in_D(w) ? w : g.left(0, w);
  return to_string(special_in_class(sym(g.element(x))));
}

struct CellRow {
  std::string key;
  std::vector<int> members;  // basis positions
  int left_cells = -1;
  int right_cells = -1;
};

std::vector<CellRow> combinatorial_cells(const Options& o, MatrixKind mk,
                                         const std::vector<CosetMatrix>& basis) {
  std::vector<CellRow> rows;
  for (const auto& c : two_sided_classify(o.n, o.d, mk)) {
    CellRow row{partition_to_string(c.special), {}};
    for (const auto& a : c.members)
      row.members.push_back(static_cast<int>(
          std::lower_bound(basis.begin(), basis.end(), a) - basis.begin()));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<CellRow> oracle_cells(SchurOracle& s) {
  const auto cells = s.cells();
  const auto& g = s.hecke().group();
  const MatrixKind mk = matrix_kind(s.kind());
  std::vector<CellRow> rows;
  for (const auto& block : cells.two_sided_cells) {
    std::set<std::string> keys;
    std::set<int> lefts, rights;
    for (int a : block) {
      int w = s.w_plus(a);
      keys.insert(s.kind() == SchurKind::ITilde
                      ? itilde_key(g, w)
                      : partition_to_string(special_partition_of(
                            pt_shape(g.element(w), embed_kind(mk)), mk)));
      lefts.insert(cells.cell_of(CellSide::Left, a));
      rights.insert(cells.cell_of(CellSide::Right, a));
    }
    std::string key;
    for (const auto& k : keys) key += (key.empty() ? "" : "|") + k;
    rows.push_back({key, block, static_cast<int>(lefts.size()),
                    static_cast<int>(rights.size())});
  }
  if (s.kind() != SchurKind::ITilde) {
    // same order as the combinatorial table: decreasing special partition
    std::sort(rows.begin(), rows.end(), [&](const CellRow& x, const CellRow& y) {
      return special_partition_of(sigma(s.basis()[x.members.front()]), mk) >
             special_partition_of(sigma(s.basis()[y.members.front()]), mk);
    });
  }
  return rows;
}

Json cells_json(const std::vector<CellRow>& rows, const std::vector<CosetMatrix>& basis) {
  Json out = Json::array();
  for (const auto& r : rows) {
    Json c;
    c["key"] = r.key;
    c["size"] = r.members.size();
    if (r.left_cells >= 0) {
      c["left_cells"] = r.left_cells;
      c["right_cells"] = r.right_cells;
    }
    Json m = Json::array();
    for (int a : r.members) m.push_back(json_of(basis[a]));
    c["members"] = m;
    out.push_back(c);
  }
  return out;
}

std::set<std::set<int>> block_sets(const std::vector<CellRow>& rows) {
  std::set<std::set<int>> out;
  for (const auto& r : rows) out.insert(std::set<int>(r.members.begin(), r.members.end()));
  return out;
}

std::string cells_csv(const std::vector<CellRow>& rows,
                      const std::vector<CosetMatrix>& basis) {
  std::string out = csv_row({"cell", "key", "matrix"});
  for (size_t i = 0; i < rows.size(); ++i)
    for (int a : rows[i].members)
      out += csv_row({std::to_string(i + 1), rows[i].key, to_string(basis[a])});
  return out;
}

// ---- golden data helpers

Json golden(const std::string& id) {
  auto it = golden_files().find(id);
  if (it == golden_files().end())
    throw Error(ErrorCode::InvalidArgument, "unknown example id: " + id);
  return Json::parse(it->second);
}

std::vector<std::vector<int>> rows_of(const Json& j) {
  return j.get<std::vector<std::vector<int>>>();
}

SignedPermutation word_elem(int d, const Json& j) {
  return from_word(d, parse_word(j.get<std::string>()));
}

const DoubleCoset& coset_of(const std::vector<DoubleCoset>& cosets, const CosetMatrix& a) {
  for (const auto& c : cosets)
    if (c.matrix == a) return c;
  throw Error(ErrorCode::ConventionFailure, "no double coset for " + to_string(a));
}

std::set<std::vector<int>> partition_set(const Json& j) {
  std::set<std::vector<int>> s;
  for (const auto& p : j) s.insert(p.get<Partition>());
  return s;
}

std::set<std::vector<int>> special_set(int size, int max_parts, PartitionKind kind) {
  std::set<std::vector<int>> s;
  for (const auto& lp : enumerate_special(size, max_parts, kind)) s.insert(lp.parts);
  return s;
}

std::string sets_string(const std::set<std::set<std::string>>& s) {
  std::string out;
  for (const auto& b : s) {
    out += "{";
    bool first = true;
    for (const auto& x : b) {
      out += (first ? "" : ",") + x;
      first = false;
    }
    out += "}";
  }
  return out;
}

// Cells of the listed form {special, members(labels)} against a computed split.
void check_cells(Verdicts& v, const std::string& what, const Json& cells,
                 const std::map<std::string, CosetMatrix>& by_label,
                 const std::set<std::set<CosetMatrix>>& computed) {
  std::map<CosetMatrix, std::string> label_of;
  for (const auto& [l, m] : by_label) label_of[m] = l;
  std::set<std::set<std::string>> expected, actual;
  for (const auto& c : cells) {
    std::set<std::string> s;
    for (const auto& l : c["members"]) s.insert(l.get<std::string>());
    expected.insert(s);
  }
  for (const auto& b : computed) {
    std::set<std::string> s;
    for (const auto& m : b) s.insert(label_of.count(m) ? label_of[m] : to_string(m));
    actual.insert(s);
  }
  v.check(what, expected == actual, sets_string(expected), sets_string(actual));
}

std::set<std::set<CosetMatrix>> classify_sets(int n, int d, MatrixKind mk,
                                              std::map<std::string, Partition>* keys,
                                              const std::map<CosetMatrix, std::string>& label_of) {
  std::set<std::set<CosetMatrix>> out;
  for (const auto& c : two_sided_classify(n, d, mk)) {
    out.insert(std::set<CosetMatrix>(c.members.begin(), c.members.end()));
    if (keys)
      for (const auto& m : c.members)
        if (label_of.count(m)) (*keys)[label_of.at(m)] = c.special;
  }
  return out;
}

std::set<std::set<CosetMatrix>> oracle_sets(int n, int d, SchurKind kind, int max_d) {
  SchurOracle s(n, d, kind, std::max(max_d, d));
  std::set<std::set<CosetMatrix>> out;
  for (const auto& b : s.cells().two_sided_cells) {
    std::set<CosetMatrix> m;
    for (int a : b) m.insert(s.basis()[a]);
    out.insert(m);
  }
  return out;
}

void verify_matrix_table(Verdicts& v, MatrixKind mk, int n, int d, const Json& part,
                         std::map<std::string, CosetMatrix>& by_label) {
  auto pi = enumerate_Pi(n, d, mk);
  if (part.contains("count"))
    v.check("number of matrices", pi.size() == part["count"].get<size_t>(),
            part["count"], pi.size());
  WeylGroupB g(d);
  for (const auto& m : part["matrices"]) {
    const std::string label = m["label"];
    auto a = make_matrix(mk, rows_of(m["rows"]));
    by_label[label] = a;
    v.check(label + " is in the basis", std::binary_search(pi.begin(), pi.end(), a),
            true, std::binary_search(pi.begin(), pi.end(), a));
    auto y = y_of_matrix(a);
    if (m.contains("y")) {
      auto expected = word_elem(d, m["y"]);
      v.check("y of " + label, y == expected, m["y"], word_of(y));
      v.check("length formula of " + label, length_formula(a) == length(y),
              length(y), length_formula(a));
    }
    if (m.contains("shortest")) {
      const auto& c = coset_of(double_coset_data(g, ro(a), co(a), mk), a);
      v.check("shortest element for " + label,
              g.element(c.shortest) == word_elem(d, m["shortest"]), m["shortest"],
              word_of(g.element(c.shortest)));
      v.check("longest element for " + label, g.element(c.longest) == y, word_of(y),
              word_of(g.element(c.longest)));
    }
    if (m.contains("sigma")) {
      auto expected = m["sigma"].get<Partition>();
      v.check("sigma of " + label, sigma(a) == expected, expected, sigma(a));
      auto rs = pt_shape(y, embed_kind(mk));
      v.check("RS shape of y for " + label, rs == expected, expected, rs);
    }
  }
}

void verify_symbols(Verdicts& v, MatrixKind mk, const Json& part) {
  std::map<std::string, SymbolBC> sym_of;
  for (const auto& s : part["symbols"]) {
    auto sb = parse_symbol_bc(s["symbol"].get<std::string>());
    sym_of[s["label"].get<std::string>()] = sb;
    auto p = mk == MatrixKind::J ? par_B(sb) : par_C(sb);
    auto expected = s["partition"].get<Partition>();
    v.check("partition of " + s["label"].get<std::string>(), p == expected, expected, p);
  }
  auto equivalent = [&](const Json& pr) {
    return approx_equal(sym_of[pr[0].get<std::string>()], sym_of[pr[1].get<std::string>()]);
  };
  for (const auto& pr : part["equivalent"])
    v.check(pr[0].get<std::string>() + " ~ " + pr[1].get<std::string>(), equivalent(pr), true,
            equivalent(pr));
  for (const auto& pr : part["inequivalent"])
    v.check(pr[0].get<std::string>() + " !~ " + pr[1].get<std::string>(), !equivalent(pr),
            false, equivalent(pr));
}

// ---- examples

void verify_basis_3_2(Verdicts& v, const Options&) {
  auto data = golden("ex-3.11");
  std::map<std::string, CosetMatrix> by_label;
  verify_matrix_table(v, MatrixKind::J, 3, 2, data, by_label);
  auto pi = enumerate_Pi(3, 2, MatrixKind::J);
  std::set<CosetMatrix> listed;
  for (const auto& [l, a] : by_label) listed.insert(a);
  v.check("listed matrices are the whole basis",
          listed == std::set<CosetMatrix>(pi.begin(), pi.end()), pi.size(), listed.size());

  WeylGroupB g(2);
  std::vector<Composition> expected_comps;
  for (const auto& c : data["compositions"]) {
    auto lambda = c["parts"].get<Composition>();
    expected_comps.push_back(lambda);
    std::set<SignedPermutation> expected, actual;
    Json actual_words = Json::array();
    for (const auto& w : c["subgroup"]) expected.insert(word_elem(2, w));
    for (int w : parabolic_subgroup(g, lambda, MatrixKind::J)) {
      actual.insert(g.element(w));
      actual_words.push_back(word_to_string(g.word(w)));
    }
    v.check("stabiliser of " + partition_to_string(lambda), expected == actual,
            c["subgroup"], actual_words);
  }
  auto comps = enumerate_compositions(3, 2, MatrixKind::J);
  v.check("compositions", comps == expected_comps, expected_comps, comps);

  const auto& pr = data["profile"];
  auto a = by_label.at(pr["label"].get<std::string>());
  v.check("ro", ro(a) == pr["ro"].get<Composition>(), pr["ro"], ro(a));
  v.check("co", co(a) == pr["co"].get<Composition>(), pr["co"], co(a));
  const auto& c = coset_of(double_coset_data(g, ro(a), co(a), MatrixKind::J), a);
  v.check("shortest element", g.element(c.shortest) == word_elem(2, pr["shortest"]),
          pr["shortest"], word_to_string(g.word(c.shortest)));
  v.check("longest element", g.element(c.longest) == word_elem(2, pr["longest"]),
          pr["longest"], word_to_string(g.word(c.longest)));
  v.check("length by formula", length_formula(a) == pr["length"].get<int>(),
          pr["length"], length_formula(a));
}

void verify_pseudo_matrix(Verdicts& v, const Options&) {
  auto data = golden("ex-3.14");
  auto a = make_matrix(MatrixKind::J, rows_of(data["rows"]));
  auto pm = pseudo_matrix(a);
  v.check("pseudo-matrix", Json(pm) == data["pseudo_matrix"], data["pseudo_matrix"], pm);
  auto y = y_of_matrix(a);
  std::vector<int> image;
  for (int x : data["domain"]) image.push_back(y(x));
  v.check("y as a permutation", Json(image) == data["image"], data["image"], image);
  auto gr = greene_invariants(a);
  for (size_t k = 0; k < data["greene"].size(); ++k)
    v.check("Greene invariant s_" + std::to_string(k + 1),
            k < gr.size() && gr[k] == data["greene"][k].get<int>(), data["greene"][k],
            k < gr.size() ? gr[k] : -1);
  auto expected = data["sigma"].get<Partition>();
  v.check("sigma from Greene invariants", sigma_greene_oracle(a) == expected, expected,
          sigma_greene_oracle(a));
  v.check("sigma", sigma(a) == expected, expected, sigma(a));
  v.check("RS shape of y", pt_shape(y, EmbedKind::B) == expected, expected,
          pt_shape(y, EmbedKind::B));
  v.check("length formula", length_formula(a) == length(y), length(y), length_formula(a));
}

void verify_cells_3_2(Verdicts& v, const Options& o) {
  auto data = golden("ex-3.18");
  auto basis_data = golden("ex-3.11");
  std::map<std::string, CosetMatrix> by_label;
  std::map<CosetMatrix, std::string> label_of;
  for (const auto& m : basis_data["matrices"]) {
    auto a = make_matrix(MatrixKind::J, rows_of(m["rows"]));
    by_label[m["label"].get<std::string>()] = a;
    label_of[a] = m["label"].get<std::string>();
  }
  for (const auto& s : data["sigma"]) {
    auto expected = s["partition"].get<Partition>();
    for (const auto& l : s["labels"]) {
      auto a = by_label.at(l.get<std::string>());
      v.check("sigma of " + l.get<std::string>(), sigma(a) == expected, expected, sigma(a));
    }
  }
  verify_symbols(v, MatrixKind::J, data);
  std::map<std::string, Partition> keys;
  auto comb = classify_sets(3, 2, MatrixKind::J, &keys, label_of);
  check_cells(v, "two-sided cells (combinatorial)", data["cells"], by_label, comb);
  for (const auto& c : data["cells"]) {
    auto expected = c["special"].get<Partition>();
    auto first = c["members"][0].get<std::string>();
    v.check("key of the cell of " + first, keys[first] == expected, expected, keys[first]);
  }
  check_cells(v, "two-sided cells (oracle)", data["cells"], by_label,
              oracle_sets(3, 2, SchurKind::J, o.max_d));
  const auto& sp = data["special_partitions"];
  int size = sp["size"];
  v.check("special partitions of " + std::to_string(size),
          special_set(size, size, PartitionKind::B) == partition_set(sp["all"]), sp["all"],
          special_set(size, size, PartitionKind::B));
  v.check("special partitions with at most 3 parts",
          special_set(size, 3, PartitionKind::B) == partition_set(sp["at_most_n_parts"]),
          sp["at_most_n_parts"], special_set(size, 3, PartitionKind::B));
}

void verify_i_family(Verdicts& v, const Options& o) {
  auto data = golden("ex-5.9");
  for (const auto& part : data["parts"]) {
    int n = part["n"], d = part["d"];
    std::string tag = " (d = " + std::to_string(d) + ")";
    std::map<std::string, CosetMatrix> by_label;
    Verdicts local;
    verify_matrix_table(local, MatrixKind::I, n, d, part, by_label);
    verify_symbols(local, MatrixKind::I, part);
    std::map<CosetMatrix, std::string> label_of;
    for (const auto& [l, a] : by_label) label_of[a] = l;
    std::map<std::string, Partition> keys;
    auto comb = classify_sets(n, d, MatrixKind::I, &keys, label_of);
    check_cells(local, "two-sided cells (combinatorial)", part["cells"], by_label, comb);
    for (const auto& c : part["cells"]) {
      auto expected = c["special"].get<Partition>();
      auto first = c["members"][0].get<std::string>();
      local.check("key of the cell of " + first, keys[first] == expected, expected,
                  keys[first]);
    }
    check_cells(local, "two-sided cells (oracle)", part["cells"], by_label,
                oracle_sets(n, d, SchurKind::I, o.max_d));
    local.check("special partitions with at most 2 parts",
                special_set(2 * d, n, PartitionKind::C) ==
                    partition_set(part["special_partitions"]),
                part["special_partitions"], special_set(2 * d, n, PartitionKind::C));
    for (auto item : local.list()) {
      item["check"] = item["check"].get<std::string>() + tag;
      v.check(item["check"].get<std::string>(), item["pass"].get<bool>(), item["expected"], item["actual"]);
    }
  }
  const auto& fam = data["family"];
  for (int d = 1; d <= fam["max_d"].get<int>(); ++d) {
    bool ok = true;
    Json actual = Json::array(), expected = Json::array();
    for (int k = 0; k <= d; ++k) {
      Partition e = {2 * d - k};
      if (k > 0) e.push_back(k);
      auto s = sigma(make_matrix(MatrixKind::I, {{k, d - k}, {d - k, k}}));
      ok &= s == e;
      expected.push_back(e);
      actual.push_back(s);
    }
    v.check("sigma of [[k, d-k], [d-k, k]] for d = " + std::to_string(d), ok, expected,
            actual);
    std::set<Partition> rule;
    for (int j = 0; 2 * j <= d; ++j) {
      Partition p = {2 * d - 2 * j};
      if (j > 0) p.push_back(2 * j);
      rule.insert(p);
    }
    if (d % 2 == 1) rule.insert({d, d});
    auto sp = special_set(2 * d, 2, PartitionKind::C);
    v.check("special partitions of " + std::to_string(2 * d) + " with at most 2 parts",
            sp == rule, rule, sp);
    std::set<Partition> keys;
    for (const auto& c : two_sided_classify(2, d, MatrixKind::I)) keys.insert(c.special);
    v.check("cell keys for d = " + std::to_string(d), keys == rule, rule, keys);
  }
}

void verify_type_d_symbols(Verdicts& v, const Options&) {
  auto data = golden("ex-6.14");
  for (const auto& pr : data["pairs"]) {
    int d = pr["d"];
    auto w = word_elem(d, pr["w"]);
    auto u = word_elem(d, pr["partner"]);
    std::string wn = pr["w"], un = pr["partner"];
    auto check_side = [&](const SignedPermutation& x, const std::string& name,
                          const Json& shape, const Json& symbol) {
      auto s = pt_shape(x, EmbedKind::C);
      v.check("RS shape of " + name, s == shape.get<Partition>(), shape, s);
      auto expected = parse_symbol_bc(symbol.get<std::string>());
      auto actual = symbol_from_partition(s, EmbedKind::C);
      v.check("symbol of " + name, same_class(actual, expected), symbol, to_string(actual));
    };
    check_side(w, wn, pr["shape"], pr["symbol"]);
    check_side(u, un, pr["partner_shape"], pr["partner_symbol"]);
    for (const auto& s : pr["sym"]) {
      auto expected = parse_symbol_d(s.get<std::string>());
      v.check("sym of " + wn + " is " + s.get<std::string>(),
              same_class(sym(w), expected, true), s, to_string(sym(w)));
    }
    v.check("sym(" + wn + ") = sym(" + un + ")", same_class(sym(w), sym(u), true),
            to_string(sym(u)), to_string(sym(w)));
    v.check("exactly one of " + wn + ", " + un + " lies in type D",
            in_type_D(w) != in_type_D(u), true, in_type_D(w) != in_type_D(u));
    auto s0u = compose(SignedPermutation::simple(d, 0), u);
    v.check(wn + " = s0 " + un, s0u == w, wn, word_of(s0u));
  }
}

using Verifier = void (*)(Verdicts&, const Options&);
const std::map<std::string, Verifier>& verifiers() {
  static const std::map<std::string, Verifier> m = {
      {"ex-3.11", verify_basis_3_2}, {"ex-3.14", verify_pseudo_matrix},
      {"ex-3.18", verify_cells_3_2}, {"ex-5.9", verify_i_family},
      {"ex-6.14", verify_type_d_symbols}};
  return m;
}

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::ReportOnly: return "REPORT";
  }
  return "";
}

std::vector<std::string> verify_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, f] : verifiers()) ids.push_back(id);
  return ids;
}

Report cmd_enumerate(const Options& o) {
  require_positive(o, true);
  const SchurKind kind = parse_schur_kind(o.kind);
  const MatrixKind mk = matrix_kind(kind);
  Json rows = Json::array();
  std::string csv = csv_row({"matrix", "ro", "co", "y", "length", "length_formula",
                             "sigma", "special"});
  for (const auto& a : enumerate_Pi(o.n, o.d, mk)) {
    auto y = y_of_matrix(a);
    auto s = sigma(a);
    auto sp = special_partition_of(s, mk);
    Json r;
    r["matrix"] = json_of(a);
    r["ro"] = ro(a);
    r["co"] = co(a);
    r["y"] = word_of(y);
    r["length"] = length(y);
    r["length_formula"] = length_formula(a);
    r["sigma"] = json_of(s);
    r["special"] = json_of(sp);
    rows.push_back(r);
    csv += csv_row({to_string(a), partition_to_string(ro(a)), partition_to_string(co(a)),
                    word_of(y), std::to_string(length(y)),
                    std::to_string(length_formula(a)), partition_to_string(s),
                    partition_to_string(sp)});
  }
  Json doc;
  doc["command"] = "enumerate";
  doc["params"] = params(o, {"n", "d", "kind"});
  doc["result"] = {{"count", rows.size()}, {"matrices", rows}};
  Report r = report_only(std::move(doc));
  r.csv = csv;
  return r;
}

Report cmd_cells(const Options& o) {
  require_positive(o, true);
  const SchurKind kind = parse_schur_kind(o.kind);
  const MatrixKind mk = matrix_kind(kind);
  if (o.method != "combinatorial" && o.method != "oracle" && o.method != "both")
    throw Error(ErrorCode::InvalidArgument, "--method must be combinatorial, oracle or both");
  if (kind == SchurKind::ITilde && o.method == "combinatorial")
    throw Error(ErrorCode::KindMismatch,
                "no combinatorial description is known for i-tilde; use --method oracle "
                "or both (both compares the oracle with the Hecke-cell criterion)");
  const auto basis = enumerate_Pi(o.n, o.d, mk);
  Json doc;
  doc["command"] = "cells";
  doc["params"] = params(o, {"n", "d", "kind", "method"});
  Json result;
  std::string csv;
  Verdicts v;

  std::vector<CellRow> comb, orc;
  if (kind != SchurKind::ITilde) {
    comb = combinatorial_cells(o, mk, basis);
    result["combinatorial"] = {{"two_sided_cells", comb.size()},
                               {"cells", cells_json(comb, basis)}};
    csv = cells_csv(comb, basis);
  }
  if (o.method != "combinatorial") {
    require_oracle_rank(o);
    SchurOracle s(o.n, o.d, kind, o.max_d);
    orc = oracle_cells(s);
    const auto decomposition = s.cells();
    result["oracle"] = {{"two_sided_cells", orc.size()},
                        {"left_cells", decomposition.left_cells.size()},
                        {"right_cells", decomposition.right_cells.size()},
                        {"cells", cells_json(orc, basis)}};
    if (o.method == "oracle" || kind == SchurKind::ITilde) csv = cells_csv(orc, basis);
    if (o.method == "both") {
      if (kind == SchurKind::ITilde) {
        auto predicted = predicted_schur_cells(s, hecke_cells(s.hecke(), CellMethod::Generators));
        v.check("oracle cells match co/ro equality plus Hecke cells of w+",
                predicted == blocks_of(decomposition), "match",
                predicted == blocks_of(decomposition) ? "match" : "differ");
      } else {
        bool same_blocks = block_sets(comb) == block_sets(orc);
        v.check("two-sided cells agree", same_blocks, comb.size(), orc.size());
        bool same_keys = same_blocks;
        for (const auto& c : comb)
          for (const auto& r : orc)
            if (std::set<int>(c.members.begin(), c.members.end()) ==
                std::set<int>(r.members.begin(), r.members.end()))
              same_keys &= c.key == r.key;
        v.check("cell keys agree", same_keys, "special partitions",
                same_keys ? "special partitions" : "differ");
      }
    }
  }
  doc["result"] = result;
  Report r = o.method == "both" ? finish(std::move(doc), v) : report_only(std::move(doc));
  r.csv = csv;
  return r;
}

Report cmd_verify(const std::string& id, const Options& o) {
  auto it = verifiers().find(id);
  if (it == verifiers().end())
    throw Error(ErrorCode::InvalidArgument, "unknown example id: " + id);
  Verdicts v;
  it->second(v, o);
  Json doc;
  doc["command"] = "verify";
  doc["params"] = {{"id", id}};
  auto data = golden(id);
  doc["result"] = {{"example", data["title"]}, {"checks", v.list().size()}};
  return finish(std::move(doc), v);
}

namespace {

Report conjecture_sym(const Options& o) {
  if (o.d < 2 || o.d > 6)
    throw Error(ErrorCode::ResourceLimit, "c6.13 scans 2 <= d <= 6");
  const auto s0 = SignedPermutation::simple(o.d, 0);
  DEquivalenceOptions sets;
  sets.twins_identical = true;
  DEquivalenceOptions multisets = sets;
  multisets.entries = EntryComparison::Multisets;
  int checks = 0, approx_sets = 0, approx_multisets = 0;
  Json counter = Json::array();
  for (const auto& w : enumerate_group(o.d, GroupType::D, 6)) {
    ++checks;
    auto a = sym(w), b = sym(compose(s0, w));
    if (!same_class(a, b, true))
      counter.push_back({{"w", word_of(w)},
                         {"window", to_string(w)},
                         {"sym_w", to_string(a)},
                         {"sym_s0w", to_string(b)},
                         {"shape_w", partition_to_string(pt_shape(w, EmbedKind::C))},
                         {"shape_s0w", partition_to_string(
                                           pt_shape(compose(s0, w), EmbedKind::C))}});
    approx_sets += !approx_equal(a, b, sets);
    approx_multisets += !approx_equal(a, b, multisets);
  }
  Json worked = Json::array();
  const auto examples = golden("ex-6.14");
  for (const auto& pr : examples["pairs"]) {
    if (pr["d"].get<int>() != o.d) continue;
    auto w = word_elem(o.d, pr["w"]), u = word_elem(o.d, pr["partner"]);
    worked.push_back({{"w", pr["w"]},
                      {"partner", pr["partner"]},
                      {"sym", to_string(sym(w))},
                      {"equal", same_class(sym(w), sym(u), true)}});
  }
  Json doc;
  doc["command"] = "conjecture";
  doc["params"] = {{"id", "c6.13"}, {"d", o.d}};
  doc["result"] = {{"statement", "sym(s0 w) = sym(w) for w in W_D, twins identified"},
                   {"checks", checks},
                   {"counterexamples", counter.size()},
                   {"counterexample_list", counter},
                   {"approx_sets_counterexamples", approx_sets},
                   {"approx_multisets_counterexamples", approx_multisets},
                   {"worked_examples", worked}};
  return report_only(std::move(doc));
}

Report conjecture_domino(const Options& o, bool j_kind) {
  require_positive(o, true);
  require_oracle_rank(o);
  const SchurKind kind = j_kind ? SchurKind::J : SchurKind::I;
  const MatrixKind mk = matrix_kind(kind);
  SchurOracle s(o.n, o.d, kind, o.max_d);
  const int r = j_kind ? (o.n - 1) / 2 : o.n / 2;
  const int bound = j_kind ? r + 1 : r;
  Json rows = Json::array();
  for (const auto& row : left_cell_count_via_R(s)) {
    if (static_cast<int>(row.special.size()) > o.n) continue;  // not a cell of the Schur algebra
    long long dominos = count_semistandard_domino(row.special, bound, j_kind);
    rows.push_back({{"special", partition_to_string(row.special)},
                    {"domino_count", dominos},
                    {"oracle_left_cells", row.schur_left_cells},
                    {"left_cells_via_descents", row.count_via_R},
                    {"hecke_left_cells", row.hecke_left_cells},
                    {"match", dominos == row.schur_left_cells}});
  }
  Json doc;
  doc["command"] = "conjecture";
  doc["params"] = {{"id", j_kind ? "c3.19" : "c5.10"}, {"n", o.n}, {"d", o.d}};
  doc["result"] = {{"kind", kind_name(mk)},
                   {"domino_bound", bound},
                   {"monomino_entry", j_kind ? Json(1) : Json(nullptr)},
                   {"rows", rows}};
  return report_only(std::move(doc));
}

}  // namespace

Report cmd_conjecture(const std::string& id, const Options& o) {
  if (id == "c6.13") return conjecture_sym(o);
  if (id == "c3.19") return conjecture_domino(o, true);
  if (id == "c5.10") return conjecture_domino(o, false);
  throw Error(ErrorCode::InvalidArgument, "unknown conjecture id: " + id);
}

Report cmd_oracle_dump(const Options& o) {
  require_positive(o, false);
  require_oracle_rank(o);
  const SchurKind kind = parse_schur_kind(o.kind);
  Json doc;
  doc["command"] = "oracle-dump";
  Json table = Json::array();
  if (o.n == 0) {
    doc["params"] = params(o, {"d", "kind"});
    HeckeAlgebra h(o.d, weights_of(kind), o.max_d);
    const auto& g = h.group();
    for (int x = 0; x < h.size(); ++x)
      for (int y = 0; y < h.size(); ++y) {
        Json terms = Json::object();
        for (const auto& [z, p] : h.structure(x, y))
          terms[word_to_string(g.word(z))] = p.to_string();
        table.push_back({{"x", word_to_string(g.word(x))},
                         {"y", word_to_string(g.word(y))},
                         {"terms", terms}});
      }
    doc["result"] = {{"algebra", "hecke"},
                     {"weights", {{"s0", h.weights().s0}, {"other", h.weights().other}}},
                     {"table", table}};
  } else {
    doc["params"] = params(o, {"n", "d", "kind"});
    SchurOracle s(o.n, o.d, kind, o.max_d);
    const int size = static_cast<int>(s.basis().size());
    for (int a = 0; a < size; ++a)
      for (int b = 0; b < size; ++b) {
        auto prod = s.product(a, b);
        if (prod.empty()) continue;
        Json terms = Json::array();
        for (const auto& [c, p] : prod)
          terms.push_back({{"C", json_of(s.basis()[c])}, {"coeff", p.to_string()}});
        table.push_back({{"A", json_of(s.basis()[a])},
                         {"B", json_of(s.basis()[b])},
                         {"terms", terms}});
      }
    doc["result"] = {{"algebra", "schur"}, {"basis_size", size}, {"table", table}};
  }
  return report_only(std::move(doc));
}

}  // namespace cellkit::cli
