#include "doctest.h"

#include <algorithm>

#include "cellkit/error.hpp"
#include "commands.hpp"

using namespace cellkit;
using namespace cellkit::cli;

namespace {

Options opts(int n, int d, std::string kind = "j", std::string method = "both") {
  Options o;
  o.n = n;
  o.d = d;
  o.kind = std::move(kind);
  o.method = std::move(method);
  return o;
}

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::Parse;
}

}  // namespace

TEST_CASE("enumerate counts") {
  CHECK(cmd_enumerate(opts(3, 2)).doc["result"]["count"] == 15);
  CHECK(cmd_enumerate(opts(2, 3, "i")).doc["result"]["count"] == 4);
  CHECK(cmd_enumerate(opts(3, 2)).status == Status::ReportOnly);
  CHECK(code_of([] { cmd_enumerate(opts(2, 1)); }) == ErrorCode::ParityMismatch);
  CHECK(code_of([] { cmd_enumerate(opts(3, 0)); }) == ErrorCode::InvalidArgument);
  auto csv = cmd_enumerate(opts(3, 2)).csv;
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 16);
}

TEST_CASE("cell tables") {
  auto both = cmd_cells(opts(3, 2));
  CHECK(both.status == Status::Pass);
  CHECK(both.doc["result"]["combinatorial"]["two_sided_cells"] == 2);
  CHECK(both.doc["result"]["oracle"]["two_sided_cells"] == 2);
  CHECK(both.doc["result"]["combinatorial"]["cells"][0]["key"] == "(5)");
  CHECK(both.doc["result"]["combinatorial"]["cells"][1]["size"] == 6);

  auto comb = cmd_cells(opts(3, 2, "j", "combinatorial"));
  CHECK(comb.status == Status::ReportOnly);
  CHECK(comb.doc["result"]["combinatorial"] == both.doc["result"]["combinatorial"]);
  CHECK(!comb.doc["result"].contains("oracle"));

  auto tilde = cmd_cells(opts(2, 2, "i-tilde"));
  CHECK(tilde.status == Status::Pass);
  CHECK(tilde.doc["result"]["oracle"]["two_sided_cells"] == 2);
  CHECK(code_of([] { cmd_cells(opts(2, 2, "i-tilde", "combinatorial")); }) ==
        ErrorCode::KindMismatch);
  CHECK(code_of([] { cmd_cells(opts(3, 4, "j", "oracle")); }) == ErrorCode::ResourceLimit);
  CHECK(code_of([] { cmd_cells(opts(3, 2, "k")); }) == ErrorCode::Parse);
}

TEST_CASE("reports are deterministic") {
  CHECK(cmd_cells(opts(4, 3, "i-tilde")).doc.dump() ==
        cmd_cells(opts(4, 3, "i-tilde")).doc.dump());
  CHECK(cmd_verify("ex-5.9", {}).doc.dump() == cmd_verify("ex-5.9", {}).doc.dump());
}

TEST_CASE("worked examples verify") {
  for (const auto& id : verify_ids()) {
    CAPTURE(id);
    auto r = cmd_verify(id, {});
    CHECK(r.status == Status::Pass);
    CHECK(r.doc["verdicts"].size() > 0);
  }
  CHECK(verify_ids().size() == golden_files().size());
  CHECK(code_of([] { cmd_verify("ex-0", {}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("conjecture reports never fail") {
  auto c = cmd_conjecture("c6.13", opts(0, 2));
  CHECK(c.status == Status::ReportOnly);
  CHECK(c.doc["result"]["checks"] == 4);
  CHECK(c.doc["result"]["counterexamples"] == 0);
  CHECK(c.doc["result"]["worked_examples"].size() == 4);
  for (const auto& w : c.doc["result"]["worked_examples"]) CHECK(w["equal"] == true);

  auto d4 = cmd_conjecture("c6.13", opts(0, 4));
  CHECK(d4.status == Status::ReportOnly);
  CHECK(d4.doc["result"]["checks"] == 192);
  CHECK(d4.doc["result"]["approx_sets_counterexamples"] == 0);

  auto t = cmd_conjecture("c3.19", opts(3, 2));
  CHECK(t.status == Status::ReportOnly);
  REQUIRE(t.doc["result"]["rows"].size() == 2);
  CHECK(t.doc["result"]["rows"][0]["domino_count"] == 3);
  CHECK(t.doc["result"]["rows"][1]["domino_count"] == 2);
  CHECK(code_of([] { cmd_conjecture("c9", opts(3, 2)); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("oracle dump") {
  auto h = cmd_oracle_dump(opts(0, 1));
  // C'_e C'_e, C'_e C'_s0, C'_s0 C'_e, C'_s0 C'_s0
  REQUIRE(h.doc["result"]["table"].size() == 4);
  CHECK(h.doc["result"]["table"][3]["terms"]["s0"] == "q^-1+q");
  auto s = cmd_oracle_dump(opts(2, 2, "i-tilde"));
  CHECK(s.doc["result"]["basis_size"] == 3);
}
