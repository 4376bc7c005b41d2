#include <chrono>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "cellkit/error.hpp"
#include "commands.hpp"

using namespace cellkit;
using namespace cellkit::cli;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;
constexpr int kExitInternal = 4;

// Hard ceiling of the oracle; CELLKIT_MAX_D and --max-rank-override may only
// move the cap up to here.
constexpr int kRankCeiling = 4;

int exit_code_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ResourceLimit: return kExitResource;
    case ErrorCode::DivisionNotExact:
    case ErrorCode::ConventionFailure: return kExitInternal;
    default: return kExitUsage;
  }
}

void print_error(const std::string& command, const char* code, const std::string& message) {
  Json err = {{"command", command}, {"error", code}, {"message", message}};
  std::cerr << err.dump(2) << "\n";
}

int rank_cap_from_env() {
  const char* env = std::getenv("CELLKIT_MAX_D");
  if (!env) return 3;
  try {
    size_t used = 0;
    int v = std::stoi(env, &used);
    if (used == std::string(env).size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, std::string("CELLKIT_MAX_D is not an integer: ") + env);
}

Report verify_all(const Options& o) {
  Report all;
  all.doc["command"] = "verify";
  all.doc["params"] = {{"id", "all"}};
  Json examples = Json::array();
  bool pass = true;
  for (const auto& id : verify_ids()) {
    Report r = cmd_verify(id, o);
    pass &= r.status == Status::Pass;
    examples.push_back({{"id", id}, {"status", status_name(r.status)}, {"report", r.doc}});
  }
  all.doc["result"] = {{"examples", examples}};
  all.status = pass ? Status::Pass : Status::Fail;
  all.doc["status"] = status_name(all.status);
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cellkit: cells of Hecke and Schur algebras of type B/C/D"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  int override_cap = 0;
  bool no_timing = false;
  app.add_option("--max-rank-override", override_cap,
                 "Largest rank d for the oracle (at most 4); overrides CELLKIT_MAX_D");
  app.add_flag("--no-timing", no_timing, "Omit timing_ms from the report");

  auto add_nd = [&](CLI::App* sub, bool n_required) {
    auto n = sub->add_option("--n", o.n, "Size n of the matrices");
    if (n_required) n->required();
    sub->add_option("--d", o.d, "Rank d")->required();
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("--kind", o.kind, "Algebra kind")
        ->check(CLI::IsMember({"j", "i", "i-tilde"}));
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "List the basis Pi(n, d)");
  add_nd(enumerate, true);
  add_kind(enumerate);
  add_format(enumerate);

  auto* cells = app.add_subcommand("cells", "Two-sided cell table");
  add_nd(cells, true);
  add_kind(cells);
  add_format(cells);
  cells->add_option("--method", o.method, "Classification method")
      ->check(CLI::IsMember({"combinatorial", "oracle", "both"}));

  std::string example_id;
  auto* verify = app.add_subcommand("verify", "Recompute a worked example");
  verify->add_option("id", example_id, "Example id, or all")->required();

  std::string conjecture_id;
  auto* conjecture = app.add_subcommand("conjecture", "Scan or tabulate a conjecture");
  conjecture->add_option("id", conjecture_id, "c3.19, c5.10 or c6.13")
      ->required()
      ->check(CLI::IsMember({"c3.19", "c5.10", "c6.13"}));
  add_nd(conjecture, false);

  auto* dump = app.add_subcommand("oracle-dump", "Export structure constants");
  add_nd(dump, false);
  add_kind(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    print_error("", "usage", e.what());
    return kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    o.max_d = override_cap > 0 ? override_cap : rank_cap_from_env();
    if (o.max_d < 1 || o.max_d > kRankCeiling)
      throw Error(ErrorCode::InvalidArgument,
                  "the oracle rank cap must lie in [1, " + std::to_string(kRankCeiling) + "]");
    if (o.format == "csv" && command != "enumerate" && command != "cells")
      throw Error(ErrorCode::InvalidArgument, "csv output is for enumerate and cells only");

    auto start = std::chrono::steady_clock::now();
    Report r;
    if (command == "enumerate") r = cmd_enumerate(o);
    else if (command == "cells") r = cmd_cells(o);
    else if (command == "verify") r = example_id == "all" ? verify_all(o) : cmd_verify(example_id, o);
    else if (command == "conjecture") r = cmd_conjecture(conjecture_id, o);
    else r = cmd_oracle_dump(o);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);

    if (o.format == "csv") {
      std::cout << r.csv;
    } else {
      if (!no_timing) r.doc["timing_ms"] = static_cast<long long>(ms.count());
      std::cout << r.doc.dump(2) << "\n";
    }
    return r.status == Status::Fail ? kExitFail : 0;
  } catch (const Error& e) {
    print_error(command, error_code_name(e.code()), e.what());
    return exit_code_of(e.code());
  }
}
