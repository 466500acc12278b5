#pragma once

#include "psik/relations.hpp"

#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace psik {

/// Malformed suite configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using ParamMap = std::map<std::string, std::string>;

/// Relation names accepted by run_relation.
const std::vector<std::string>& relation_names();

/// Runs one named verification. Unknown relations and missing or malformed
/// parameters throw DomainError. Some relations emit companion reports
/// (the k = 0 special forms).
std::vector<RelationReport> run_relation(const std::string& relation, const ParamMap& params,
                                         const RelationOptions& options);

struct SuiteJob {
  std::string relation;
  ParamMap params;
};

struct SuiteConfig {
  unsigned precision_bits = 0;  ///< 0 keeps the current precision
  unsigned threads = 1;
  PrecReal tolerance_factor{10};
  long max_terms = 2000;
  std::vector<SuiteJob> jobs;
};

/// Line-oriented key = value text, '#' comments. Keys: digits, bits, threads,
/// tolerance_factor, max_terms, and any number of
///   run = <relation> key=v1,v2 key=a..b ...
/// lines, each expanded to the cartesian product of its value lists.
SuiteConfig parse_suite_config(std::istream& in);
SuiteConfig load_suite_config(const std::string& path);

enum class RowStatus { Ok, Failed, BudgetExceeded, InvalidParams };

struct SuiteRow {
  SuiteJob job;
  RowStatus status = RowStatus::Ok;
  std::string error;
  std::vector<RelationReport> reports;
};

/// Runs every job on a pool of config.threads workers at the configured
/// precision. Rows come back in grid order.
std::vector<SuiteRow> run_suite(const SuiteConfig& config);

}  // namespace psik
