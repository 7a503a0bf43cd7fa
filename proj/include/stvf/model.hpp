#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace stvf {

using CandidateId = std::uint32_t;
using Ranking = std::vector<CandidateId>;

struct Candidate {
  CandidateId id = 0;
  std::string name;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

// A strict (possibly partial) ranking together with how many voters cast it.
struct BallotType {
  Ranking ranking;
  std::uint64_t count = 0;

  friend bool operator==(const BallotType&, const BallotType&) = default;
  friend auto operator<=>(const BallotType&, const BallotType&) = default;
};

// Canonical multiset of ballot types over a fixed candidate list. Identical
// rankings are merged and ballot types are sorted lexicographically by ranking,
// so equality and serialization are deterministic. Immutable once built.
class PreferenceProfile {
 public:
  PreferenceProfile() = default;

  const std::vector<Candidate>& candidates() const { return candidates_; }
  std::span<const BallotType> ballot_types() const { return ballot_types_; }
  std::uint64_t total_ballots() const { return total_ballots_; }
  std::size_t num_candidates() const { return candidates_.size(); }
  const std::string& name(CandidateId id) const { return candidates_.at(id).name; }
  std::optional<CandidateId> find(std::string_view name) const;
  // Multiplicity of an exact ranking, 0 when absent.
  std::uint64_t count_of(std::span<const CandidateId> ranking) const;

  friend bool operator==(const PreferenceProfile&, const PreferenceProfile&) = default;

 private:
  friend PreferenceProfile validate_profile(std::vector<std::string>, std::vector<BallotType>);

  std::vector<Candidate> candidates_;
  std::vector<BallotType> ballot_types_;
  std::uint64_t total_ballots_ = 0;
};

// Builds a canonical profile from untrusted input.
// Throws Error with DuplicateCandidateInRanking, UnknownCandidateId,
// EmptyRanking, DuplicateCandidateName or ZeroCount.
PreferenceProfile validate_profile(std::vector<std::string> candidate_names,
                                   std::vector<BallotType> ballots);

class Election {
 public:
  // Throws InvalidElection unless 1 <= seats <= number of candidates.
  Election(PreferenceProfile profile, int seats);

  const PreferenceProfile& profile() const { return profile_; }
  int seats() const { return seats_; }

 private:
  PreferenceProfile profile_;
  int seats_;
};

struct WinnerSet {
  std::vector<CandidateId> order_elected;

  // Sorted by id.
  std::vector<CandidateId> elected() const;
  bool contains(CandidateId c) const;
  std::size_t size() const { return order_elected.size(); }

  // Set equality (election order ignored).
  friend bool operator==(const WinnerSet& a, const WinnerSet& b) { return a.elected() == b.elected(); }
};

// Membership mask indexed by candidate id.
using CandidateSet = std::vector<bool>;

// Subsequence of `ranking` made of continuing candidates, order preserved.
// An empty result means the ballot is non-transferable.
Ranking restrict_ranking(std::span<const CandidateId> ranking, const CandidateSet& continuing);

// Position of `c` on the ballot, or nullopt if unranked.
std::optional<std::size_t> rank_of(std::span<const CandidateId> ranking, CandidateId c);

// Whether the ballot puts `x` above `y`; unranked candidates sit below every
// ranked one and are mutually incomparable.
bool prefers(std::span<const CandidateId> ranking, CandidateId x, CandidateId y);

}  // namespace stvf
