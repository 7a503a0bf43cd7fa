#include "stvf/model.hpp"

#include <algorithm>
#include <set>

#include "stvf/error.hpp"

namespace stvf {

std::optional<CandidateId> PreferenceProfile::find(std::string_view name) const {
  for (const auto& c : candidates_)
    if (c.name == name) return c.id;
  return std::nullopt;
}

std::uint64_t PreferenceProfile::count_of(std::span<const CandidateId> ranking) const {
  auto it = std::lower_bound(ballot_types_.begin(), ballot_types_.end(), ranking,
                             [](const BallotType& b, std::span<const CandidateId> r) {
                               return std::lexicographical_compare(b.ranking.begin(), b.ranking.end(),
                                                                   r.begin(), r.end());
                             });
  if (it != ballot_types_.end() && std::ranges::equal(it->ranking, ranking)) return it->count;
  return 0;
}

PreferenceProfile validate_profile(std::vector<std::string> candidate_names,
                                   std::vector<BallotType> ballots) {
  PreferenceProfile p;
  std::set<std::string_view> seen_names;
  p.candidates_.reserve(candidate_names.size());
  for (std::size_t i = 0; i < candidate_names.size(); ++i)
    p.candidates_.push_back({static_cast<CandidateId>(i), std::move(candidate_names[i])});
  for (const auto& c : p.candidates_)
    if (!seen_names.insert(c.name).second)
      throw Error(ErrorCode::DuplicateCandidateName, "candidate name '" + c.name + "' repeated");

  const std::size_t n = p.candidates_.size();
  std::vector<char> mark(n, 0);
  for (const auto& b : ballots) {
    if (b.count == 0) throw Error(ErrorCode::ZeroCount, "ballot with zero count");
    if (b.ranking.empty()) throw Error(ErrorCode::EmptyRanking, "ballot ranks no candidate");
    std::fill(mark.begin(), mark.end(), 0);
    for (CandidateId c : b.ranking) {
      if (c >= n)
        throw Error(ErrorCode::UnknownCandidateId, "candidate id " + std::to_string(c) +
                                                       " out of range (n=" + std::to_string(n) + ")");
      if (mark[c]) throw Error(ErrorCode::DuplicateCandidateInRanking, "candidate " + p.candidates_[c].name +
                                                                         " ranked twice");
      mark[c] = 1;
    }
  }

  std::sort(ballots.begin(), ballots.end(),
            [](const BallotType& a, const BallotType& b) { return a.ranking < b.ranking; });
  for (auto& b : ballots) {
    p.total_ballots_ += b.count;
    if (!p.ballot_types_.empty() && p.ballot_types_.back().ranking == b.ranking)
      p.ballot_types_.back().count += b.count;
    else
      p.ballot_types_.push_back(std::move(b));
  }
  return p;
}

Election::Election(PreferenceProfile profile, int seats) : profile_(std::move(profile)), seats_(seats) {
  if (seats_ < 1 || static_cast<std::size_t>(seats_) > profile_.num_candidates())
    throw Error(ErrorCode::InvalidElection,
                "seats must be between 1 and the number of candidates (" +
                    std::to_string(profile_.num_candidates()) + "), got " + std::to_string(seats_));
  if (profile_.total_ballots() == 0) throw Error(ErrorCode::InvalidElection, "no ballots");
}

std::vector<CandidateId> WinnerSet::elected() const {
  auto v = order_elected;
  std::sort(v.begin(), v.end());
  return v;
}

bool WinnerSet::contains(CandidateId c) const {
  return std::find(order_elected.begin(), order_elected.end(), c) != order_elected.end();
}

Ranking restrict_ranking(std::span<const CandidateId> ranking, const CandidateSet& continuing) {
  Ranking out;
  for (CandidateId c : ranking)
    if (c < continuing.size() && continuing[c]) out.push_back(c);
  return out;
}

std::optional<std::size_t> rank_of(std::span<const CandidateId> ranking, CandidateId c) {
  auto it = std::find(ranking.begin(), ranking.end(), c);
  if (it == ranking.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ranking.begin());
}

bool prefers(std::span<const CandidateId> ranking, CandidateId x, CandidateId y) {
  auto rx = rank_of(ranking, x);
  if (!rx) return false;
  auto ry = rank_of(ranking, y);
  return !ry || *rx < *ry;
}

}  // namespace stvf
