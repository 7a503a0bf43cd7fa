#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stvf/model.hpp"

namespace stvf {

// m(a, b) = number of voters ranking a above b. A ranked candidate is above
// every unranked one; two unranked candidates are incomparable.
class PairwiseMatrix {
 public:
  PairwiseMatrix() = default;
  explicit PairwiseMatrix(std::size_t n) : n_(n), cells_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::uint64_t operator()(CandidateId a, CandidateId b) const { return cells_[a * n_ + b]; }
  std::uint64_t& operator()(CandidateId a, CandidateId b) { return cells_[a * n_ + b]; }
  bool beats(CandidateId a, CandidateId b) const { return (*this)(a, b) > (*this)(b, a); }

  PairwiseMatrix& operator+=(const PairwiseMatrix& o);
  friend PairwiseMatrix operator+(PairwiseMatrix a, const PairwiseMatrix& b) { return a += b; }
  friend bool operator==(const PairwiseMatrix&, const PairwiseMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> cells_;
};

PairwiseMatrix pairwise_tally(const PreferenceProfile& profile);

std::optional<CandidateId> condorcet_winner(const PreferenceProfile& profile);
std::optional<CandidateId> condorcet_winner(const PairwiseMatrix& m);

// The size-`size` set whose every member strictly beats every non-member, if
// any. Sorted by id. Unique when it exists: members are exactly the
// candidates with at least n - size strict pairwise wins.
std::optional<std::vector<CandidateId>> condorcet_committee(const PreferenceProfile& profile, std::size_t size);
std::optional<std::vector<CandidateId>> condorcet_committee(const PairwiseMatrix& m, std::size_t size);

struct CommitteeChain {
  std::vector<std::optional<std::vector<CandidateId>>> committees;  // index k holds size k + 1
  // Every pair of existing committees is nested.
  bool nested = true;
};

// Committees of sizes 1..max_size and whether the existing ones form a chain.
CommitteeChain committee_chain(const PairwiseMatrix& m, std::size_t max_size);

}  // namespace stvf
