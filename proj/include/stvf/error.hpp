#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stvf {

enum class ErrorCode {
  // profile validation
  DuplicateCandidateInRanking,
  UnknownCandidateId,
  EmptyRanking,
  DuplicateCandidateName,
  ZeroCount,
  InvalidElection,
  // BLT parsing
  MissingHeader,
  MissingBallotTerminator,
  IdOutOfRange,
  MalformedLine,
  TrailingGarbage,
  // counting
  TieUnresolved,
  // ballot modifications and witnesses
  CountExceedsMultiplicity,
  RelativeOrderViolated,
  DirectionViolated,
  SourceRankingMissing,
  XNotAWinner,
  XNotALoser,
  YNotAWinner,
  BallotDoesNotPreferXtoY,
  BudgetExhausted,
  MalformedWitness,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure with the 1-based position of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& detail);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class TieUnresolved : public Error {
 public:
  TieUnresolved(std::vector<std::uint32_t> candidates, int round);
  const std::vector<std::uint32_t>& candidates() const { return candidates_; }
  int round() const { return round_; }

 private:
  std::vector<std::uint32_t> candidates_;
  int round_;
};

}  // namespace stvf
