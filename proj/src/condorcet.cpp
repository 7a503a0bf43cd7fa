#include "stvf/condorcet.hpp"

#include <algorithm>
#include <cassert>

namespace stvf {

PairwiseMatrix& PairwiseMatrix::operator+=(const PairwiseMatrix& o) {
  assert(n_ == o.n_);
  for (std::size_t i = 0; i < cells_.size(); ++i) cells_[i] += o.cells_[i];
  return *this;
}

PairwiseMatrix pairwise_tally(const PreferenceProfile& profile) {
  const std::size_t n = profile.num_candidates();
  PairwiseMatrix m(n);
  std::vector<char> ranked(n);
  for (const auto& b : profile.ballot_types()) {
    std::fill(ranked.begin(), ranked.end(), 0);
    const auto& r = b.ranking;
    for (std::size_t i = 0; i < r.size(); ++i) {
      ranked[r[i]] = 1;
      for (std::size_t j = i + 1; j < r.size(); ++j) m(r[i], r[j]) += b.count;
    }
    for (CandidateId a : r)
      for (CandidateId u = 0; u < n; ++u)
        if (!ranked[u]) m(a, u) += b.count;
  }
  return m;
}

std::optional<CandidateId> condorcet_winner(const PairwiseMatrix& m) {
  auto c = condorcet_committee(m, 1);
  if (!c) return std::nullopt;
  return c->front();
}

std::optional<CandidateId> condorcet_winner(const PreferenceProfile& profile) {
  return condorcet_winner(pairwise_tally(profile));
}

std::optional<std::vector<CandidateId>> condorcet_committee(const PairwiseMatrix& m, std::size_t size) {
  const std::size_t n = m.size();
  if (size == 0 || size > n) return std::nullopt;
  std::vector<CandidateId> members;
  std::vector<char> in(n, 0);
  for (CandidateId a = 0; a < n; ++a) {
    std::size_t wins = 0;
    for (CandidateId b = 0; b < n; ++b)
      if (a != b && m.beats(a, b)) ++wins;
    if (wins >= n - size) {
      members.push_back(a);
      in[a] = 1;
    }
  }
  if (members.size() != size) return std::nullopt;
  for (CandidateId a : members)
    for (CandidateId b = 0; b < n; ++b)
      if (!in[b] && !m.beats(a, b)) return std::nullopt;
  return members;
}

std::optional<std::vector<CandidateId>> condorcet_committee(const PreferenceProfile& profile, std::size_t size) {
  return condorcet_committee(pairwise_tally(profile), size);
}

CommitteeChain committee_chain(const PairwiseMatrix& m, std::size_t max_size) {
  CommitteeChain chain;
  for (std::size_t k = 1; k <= max_size && k <= m.size(); ++k) chain.committees.push_back(condorcet_committee(m, k));
  for (std::size_t i = 0; i < chain.committees.size(); ++i) {
    for (std::size_t j = i + 1; j < chain.committees.size(); ++j) {
      const auto& small = chain.committees[i];
      const auto& big = chain.committees[j];
      if (small && big && !std::includes(big->begin(), big->end(), small->begin(), small->end()))
        chain.nested = false;
    }
  }
  return chain;
}

}  // namespace stvf
