#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stvf/model.hpp"
#include "stvf/vote.hpp"

namespace stvf {

struct TabulateOptions {
  // When a tie survives the look-back rule: throw TieUnresolved instead of
  // picking the lowest candidate id.
  bool strict_ties = false;
};

enum class ActionKind {
  ElectedByQuota,
  Eliminated,
  ElectedAsLastStanding,
};

const char* to_string(ActionKind a);

// One stage of the count. Vote vectors are indexed by candidate id; an empty
// optional means the candidate was not in play at that stage.
template <class Vote>
struct RoundEvent {
  int round_no = 0;
  ActionKind action = ActionKind::Eliminated;
  std::vector<CandidateId> subjects;
  Vote surplus{};  // ElectedByQuota only
  std::vector<std::optional<Vote>> totals_before;
  std::vector<std::optional<Vote>> transfers;
  Vote nontransferable{};
  bool tie_broken = false;

  bool moved_votes() const;
};

template <class Vote>
struct TabulationResult {
  WinnerSet winners;
  Vote quota{};
  std::vector<RoundEvent<Vote>> events;
  Vote exhausted_total{};
  std::uint64_t total_ballots = 0;
  std::size_t num_candidates = 0;
  bool tie_broken = false;
};

// Droop quota floor(N / (S + 1)) + 1.
FixedVote compute_quota(std::uint64_t num_ballots, int seats);

// surplus / elected_total truncated to 5 decimals.
FixedVote transfer_value(FixedVote surplus, FixedVote elected_total);

// Scottish STV count. Each pass of the round loop either
//   1. elects every continuing candidate at or above quota (largest first)
//      and transfers each surplus over all of that candidate's ballots,
//   2. elects all continuing candidates when they exactly fill the open seats,
//   3. or eliminates the lowest continuing candidate and transfers their
//      ballots at current value.
// Ties are settled by the most recent earlier stage at which the tied
// candidates differed. The count halts as soon as every seat is filled.
template <class Vote>
TabulationResult<Vote> tabulate(const Election& election, const TabulateOptions& opts = {});

// Same count without the ledger; the ballot list need not be canonical.
template <class Vote>
WinnerSet tabulate_winners(std::size_t num_candidates, std::span<const BallotType> ballots, int seats,
                           const TabulateOptions& opts = {});

// Runtime choice of scalar for the winners-only path.
WinnerSet tabulate_winners(Arithmetic arithmetic, std::size_t num_candidates,
                           std::span<const BallotType> ballots, int seats, const TabulateOptions& opts = {});

extern template struct RoundEvent<FixedVote>;
extern template struct RoundEvent<ExactVote>;
extern template TabulationResult<FixedVote> tabulate<FixedVote>(const Election&, const TabulateOptions&);
extern template TabulationResult<ExactVote> tabulate<ExactVote>(const Election&, const TabulateOptions&);
extern template WinnerSet tabulate_winners<FixedVote>(std::size_t, std::span<const BallotType>, int,
                                                      const TabulateOptions&);
extern template WinnerSet tabulate_winners<ExactVote>(std::size_t, std::span<const BallotType>, int,
                                                      const TabulateOptions&);

}  // namespace stvf
