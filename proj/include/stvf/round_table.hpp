#pragma once

#include <string>
#include <vector>

#include "stvf/stv.hpp"

namespace stvf {

struct RoundTableCell {
  bool present = false;
  FixedVote value{};
  bool elected = false;

  friend bool operator==(const RoundTableCell&, const RoundTableCell&) = default;
};

// Candidate x column grid of vote totals. A column is one distinct tally:
// an event that moved no votes (zero surplus, or the final election) shares
// its column with the event that follows. A candidate's row ends at the
// column in which they were elected or eliminated.
struct RoundTable {
  std::vector<std::string> candidate_names;
  std::vector<std::vector<RoundTableCell>> rows;  // [candidate][column]
  std::size_t columns = 0;
};

template <class Vote>
RoundTable votes_by_round(const TabulationResult<Vote>& result, const std::vector<Candidate>& candidates);

// Cell text at `precision` decimals; blank for absent cells and a trailing
// '*' for the column in which the candidate was elected.
std::vector<std::vector<std::string>> render_cells(const RoundTable& table, int precision);

// Fixed-width text grid with a header row.
std::string render_table_text(const RoundTable& table, int precision);

extern template RoundTable votes_by_round<FixedVote>(const TabulationResult<FixedVote>&,
                                                     const std::vector<Candidate>&);
extern template RoundTable votes_by_round<ExactVote>(const TabulationResult<ExactVote>&,
                                                     const std::vector<Candidate>&);

}  // namespace stvf
