#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stvf/condorcet.hpp"
#include "stvf/paradox.hpp"
#include "stvf/round_table.hpp"
#include "stvf/stv.hpp"

namespace stvf {

inline constexpr const char* kToolVersion = "0.1.0";

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kParse = 2;
inline constexpr int kTabulation = 3;
inline constexpr int kBudget = 4;
inline constexpr int kInvalidWitness = 5;
}  // namespace exit_code

struct CountSection {
  std::string label;
  int seats = 0;
  FixedVote quota{};
  std::uint64_t total_ballots = 0;
  RoundTable table;
  std::vector<CandidateId> winners;  // election order
  bool tie_broken = false;
};

struct WitnessEntry {
  WitnessSpec spec;
  std::vector<CandidateId> winners_before;
  std::vector<CandidateId> winners_after;
  std::vector<CandidateId> missing;  // committee-size only
};

struct ParadoxSection {
  ParadoxKind kind = ParadoxKind::Upward;
  bool complete = true;
  bool truncated = false;
  std::uint64_t tabulations = 0;
  std::vector<WitnessEntry> witnesses;
};

struct CondorcetSection {
  PairwiseMatrix matrix;
  std::optional<CandidateId> winner;
  std::size_t size = 0;
  std::optional<std::vector<CandidateId>> committee;
  CommitteeChain chain;
};

struct VerifySection {
  WitnessSpec spec;
  bool valid = false;
  std::string reason;
  std::optional<CountSection> before;
  std::optional<CountSection> after;
};

// Everything a command prints. Text and JSON are both rendered from this.
struct RunReport {
  std::string command;
  std::string tool_version = kToolVersion;
  std::string title;
  std::vector<std::string> candidates;
  int seats = 0;
  std::uint64_t total_ballots = 0;
  FixedVote quota{};
  std::vector<CandidateId> winners;
  Arithmetic arithmetic = Arithmetic::Exact;
  int precision = 2;
  std::vector<std::pair<std::string, std::string>> config;

  std::vector<CountSection> counts;
  std::optional<CondorcetSection> condorcet;
  std::vector<ParadoxSection> paradoxes;
  std::optional<VerifySection> verify;
};

nlohmann::json to_json(const RunReport& report);
std::string render_text(const RunReport& report);

struct CommandResult {
  int exit_code = exit_code::kOk;
  std::optional<RunReport> report;
  std::string message;  // diagnostics for a nonzero exit
};

struct CommonOptions {
  Arithmetic arithmetic = Arithmetic::Exact;
  TabulateOptions tabulate;
  int precision = 2;
  std::optional<int> seats;  // overrides the file
};

// STVF_STRICT_TIES=1 turns on strict tie handling.
TabulateOptions tabulate_options_from_env();

struct ScanOptions {
  std::vector<ParadoxKind> kinds;
  SearchConfig search;
  bool strict = false;  // an incomplete search exits 4
};

CommandResult cmd_tabulate(const std::string& path, const CommonOptions& common);
CommandResult cmd_scan(const std::string& path, const ScanOptions& scan, const CommonOptions& common);
CommandResult cmd_condorcet(const std::string& path, std::optional<std::size_t> size, const CommonOptions& common);
// Seat count: --seats, else the witness's, else the file's.
CommandResult cmd_verify(const std::string& path, std::string_view witness_json, const CommonOptions& common);

}  // namespace stvf
