#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "stvf/model.hpp"
#include "stvf/stv.hpp"

namespace stvf {

enum class Direction { Up, Down };

// Recast `count` ballots of type `source` as `target`. `target` holds the
// same candidates as `source`; only the moved candidate changes position.
struct BallotMove {
  Ranking source;
  std::uint64_t count = 0;
  Ranking target;

  friend bool operator==(const BallotMove&, const BallotMove&) = default;
  friend auto operator<=>(const BallotMove&, const BallotMove&) = default;
};

struct Removal {
  Ranking ranking;
  std::uint64_t count = 0;

  friend bool operator==(const Removal&, const Removal&) = default;
  friend auto operator<=>(const Removal&, const Removal&) = default;
};

enum class ParadoxKind { CommitteeSize, Upward, Downward, NoShow };

const char* to_string(ParadoxKind kind);
std::optional<ParadoxKind> parse_paradox_kind(std::string_view s);

// The replayable part of a witness: which election, what to change.
struct WitnessSpec {
  ParadoxKind kind = ParadoxKind::Upward;
  int seats = 0;
  std::optional<CandidateId> x;
  std::optional<CandidateId> y;
  std::optional<int> seats_prime;
  std::vector<BallotMove> moves;
  std::vector<Removal> removals;

  friend bool operator==(const WitnessSpec&, const WitnessSpec&) = default;
  friend auto operator<=>(const WitnessSpec&, const WitnessSpec&) = default;
};

template <class Vote>
struct ParadoxWitness {
  WitnessSpec spec;
  WinnerSet winners_before;
  WinnerSet winners_after;
  std::shared_ptr<const TabulationResult<Vote>> ledger_before;
  std::shared_ptr<const TabulationResult<Vote>> ledger_after;
};

struct CommitteeSizeViolation {
  int seats_prime = 0;
  std::vector<CandidateId> missing;  // winners at seats_prime that lose at the full seat count

  friend bool operator==(const CommitteeSizeViolation&, const CommitteeSizeViolation&) = default;
};

// Every S' in 1..seats-1 whose winner set is not contained in W(P, seats).
template <class Vote>
std::vector<CommitteeSizeViolation> check_committee_size(const PreferenceProfile& profile, int seats,
                                                         const TabulateOptions& opts = {});

// P' from P by the given moves of `x`. Throws CountExceedsMultiplicity,
// SourceRankingMissing, RelativeOrderViolated, DirectionViolated.
PreferenceProfile apply_moves(const PreferenceProfile& profile, CandidateId x, std::span<const BallotMove> moves,
                              Direction direction);

// P minus the listed ballots. Throws CountExceedsMultiplicity, SourceRankingMissing.
PreferenceProfile apply_removals(const PreferenceProfile& profile, std::span<const Removal> removals);

template <class Vote>
std::optional<ParadoxWitness<Vote>> verify_committee_size(const Election& election, int seats_prime,
                                                           const TabulateOptions& opts = {});

// Witness iff x, a winner, loses after being raised on the moved ballots.
template <class Vote>
std::optional<ParadoxWitness<Vote>> verify_upward(const Election& election, CandidateId x,
                                                  std::span<const BallotMove> moves,
                                                  const TabulateOptions& opts = {});

// Witness iff x, a loser, wins after being lowered on the moved ballots.
template <class Vote>
std::optional<ParadoxWitness<Vote>> verify_downward(const Election& election, CandidateId x,
                                                    std::span<const BallotMove> moves,
                                                    const TabulateOptions& opts = {});

// Witness iff removing the ballots (each ranking x above y) turns the winner
// set into exactly (W - {y}) + {x}. The quota is recomputed on the reduced
// electorate.
template <class Vote>
std::optional<ParadoxWitness<Vote>> verify_noshow(const Election& election, std::span<const Removal> removals,
                                                  CandidateId x, CandidateId y, const TabulateOptions& opts = {});

// Dispatch on spec.kind; spec.seats overrides nothing, the election's seat
// count is used.
template <class Vote>
std::optional<ParadoxWitness<Vote>> verify_witness(const Election& election, const WitnessSpec& spec,
                                                   const TabulateOptions& opts = {});

enum class SearchStrategy {
  ExhaustiveBounded,  // every combination within the bounds, smallest first
  PivotGuided,        // same space, options touching narrow elimination margins first
};

struct SearchConfig {
  std::size_t max_types = 1;  // ballot types touched per witness
  std::uint64_t max_per_type = std::numeric_limits<std::uint64_t>::max();
  std::size_t max_shift = std::numeric_limits<std::size_t>::max();  // rank displacement of X
  std::uint64_t count_stride = 1;  // counts tried: 1, 1 + stride, ...
  std::uint64_t budget = 1'000'000;  // tabulations
  std::size_t max_witnesses = 0;     // 0 keeps all
  unsigned threads = 0;              // 0 = hardware concurrency
  SearchStrategy strategy = SearchStrategy::ExhaustiveBounded;
  TabulateOptions tabulate;
};

template <class Vote>
struct SearchOutcome {
  std::vector<ParadoxWitness<Vote>> witnesses;  // sorted by spec
  bool complete = true;                         // the whole bounded space was examined
  bool truncated = false;                       // witnesses cut at max_witnesses
  std::uint64_t tabulations = 0;
};

template <class Vote>
SearchOutcome<Vote> search_upward(const Election& election, const SearchConfig& config);
template <class Vote>
SearchOutcome<Vote> search_downward(const Election& election, const SearchConfig& config);
template <class Vote>
SearchOutcome<Vote> search_noshow(const Election& election, const SearchConfig& config);

}  // namespace stvf
