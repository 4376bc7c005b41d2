#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace cellkit::cli {

using Json = nlohmann::ordered_json;

struct Options {
  int n = 0;
  int d = 0;
  std::string kind = "j";
  std::string method = "both";
  std::string format = "json";
  // Largest rank the Hecke oracle may be built at.
  int max_d = 3;
};

enum class Status { Pass, Fail, ReportOnly };

struct Report {
  Json doc;
  Status status = Status::ReportOnly;
  std::string csv;  // flat table, classification commands only
};

Report cmd_enumerate(const Options& o);
Report cmd_cells(const Options& o);
Report cmd_verify(const std::string& id, const Options& o);
Report cmd_conjecture(const std::string& id, const Options& o);
Report cmd_oracle_dump(const Options& o);

// Transcribed worked examples, keyed by id ("ex-3.11", ...).
const std::map<std::string, std::string>& golden_files();
std::vector<std::string> verify_ids();

const char* status_name(Status s);

}  // namespace cellkit::cli
