#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "stvf/model.hpp"
#include "stvf/paradox.hpp"
#include "stvf/vote.hpp"

namespace stvf::test {

// The 4-candidate, 499-voter example profile, built directly (not via BLT).
PreferenceProfile example_profile();
std::string example_blt();

// "BAD" -> {1, 0, 3} with single-letter candidate names.
Ranking rk(const PreferenceProfile& p, std::string_view letters);
CandidateId id(const PreferenceProfile& p, std::string_view name);

// The 22-ballot move raising B (18 D>B and 4 D>C>B).
std::vector<BallotMove> raise_b_moves(const PreferenceProfile& p);

struct GenSpec {
  std::size_t min_candidates = 2;
  std::size_t max_candidates = 6;
  std::uint64_t max_ballots = 200;
  std::size_t max_types = 12;
};

// Random profile with single-letter names A.. and seats in 1..n.
struct RandomElection {
  PreferenceProfile profile;
  int seats = 1;
};
RandomElection random_election(std::mt19937_64& rng, const GenSpec& spec = {});

// Straightforward per-ballot count in exact rationals, written separately
// from the engine. Returns nullopt if an elimination tie is met, so callers
// compare only tie-free cases.
std::optional<std::vector<CandidateId>> reference_winners(const PreferenceProfile& p, int seats);

// Head-to-head counts by enumerating every ballot and every ordered pair.
std::vector<std::vector<std::uint64_t>> brute_pairwise(const PreferenceProfile& p);
// Every size-k subset checked directly; nullopt if none.
std::optional<std::vector<CandidateId>> brute_committee(const PreferenceProfile& p, std::size_t k);

}  // namespace stvf::test
