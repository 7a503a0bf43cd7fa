#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stvf/model.hpp"

namespace stvf {

// One line of the ballot section. Ids are 1-based, as written in the file.
struct BltBallotLine {
  std::uint64_t weight = 1;
  std::vector<std::uint32_t> ranking;

  friend bool operator==(const BltBallotLine&, const BltBallotLine&) = default;
};

// A parsed BLT file:
//
//   <num_candidates> <num_seats>
//   [-<id> -<id> ...]            withdrawn candidates (optional)
//   <weight> <id> <id> ... 0     one line per ballot
//   0                            end of ballots
//   "name 1"
//   ...
//   "name n"
//   "title"
//
// `#` starts a comment that runs to end of line.
struct BltDocument {
  std::uint32_t num_candidates = 0;
  std::uint32_t num_seats = 0;
  std::vector<std::uint32_t> withdrawn;
  std::vector<BltBallotLine> ballot_lines;
  std::vector<std::string> candidate_names;
  std::string title;

  friend bool operator==(const BltDocument&, const BltDocument&) = default;
};

// Throws ParseError (MissingHeader, MissingBallotTerminator, IdOutOfRange,
// MalformedLine, TrailingGarbage) carrying the offending line and column.
BltDocument parse_blt(std::string_view text);

// Withdrawn candidates are deleted from every ranking, rankings left empty
// are dropped, weights become multiplicities and ids shift to 0-based.
// Propagates validate_profile errors.
std::pair<PreferenceProfile, int> to_profile(const BltDocument& doc);

std::string write_blt(const PreferenceProfile& profile, int seats, std::string_view title);

// Reads and parses a file; a missing or unreadable file throws ParseError
// (MissingHeader) naming the path.
BltDocument read_blt_file(const std::string& path);

}  // namespace stvf
