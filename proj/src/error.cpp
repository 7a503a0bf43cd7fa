#include "stvf/error.hpp"

namespace stvf {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateCandidateInRanking: return "DuplicateCandidateInRanking";
    case ErrorCode::UnknownCandidateId: return "UnknownCandidateId";
    case ErrorCode::EmptyRanking: return "EmptyRanking";
    case ErrorCode::DuplicateCandidateName: return "DuplicateCandidateName";
    case ErrorCode::ZeroCount: return "ZeroCount";
    case ErrorCode::InvalidElection: return "InvalidElection";
    case ErrorCode::MissingHeader: return "MissingHeader";
    case ErrorCode::MissingBallotTerminator: return "MissingBallotTerminator";
    case ErrorCode::IdOutOfRange: return "IdOutOfRange";
    case ErrorCode::MalformedLine: return "MalformedLine";
    case ErrorCode::TrailingGarbage: return "TrailingGarbage";
    case ErrorCode::TieUnresolved: return "TieUnresolved";
    case ErrorCode::CountExceedsMultiplicity: return "CountExceedsMultiplicity";
    case ErrorCode::RelativeOrderViolated: return "RelativeOrderViolated";
    case ErrorCode::DirectionViolated: return "DirectionViolated";
    case ErrorCode::SourceRankingMissing: return "SourceRankingMissing";
    case ErrorCode::XNotAWinner: return "XNotAWinner";
    case ErrorCode::XNotALoser: return "XNotALoser";
    case ErrorCode::YNotAWinner: return "YNotAWinner";
    case ErrorCode::BallotDoesNotPreferXtoY: return "BallotDoesNotPreferXtoY";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::MalformedWitness: return "MalformedWitness";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

ParseError::ParseError(ErrorCode code, std::size_t line, std::size_t column,
                       const std::string& detail)
    : Error(code, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
                      detail),
      line_(line),
      column_(column) {}

namespace {
std::string describe_tie(const std::vector<std::uint32_t>& candidates, int round) {
  std::string s = "unresolvable tie in round " + std::to_string(round) + " between candidates";
  for (auto c : candidates) s += " " + std::to_string(c);
  return s;
}
}  // namespace

TieUnresolved::TieUnresolved(std::vector<std::uint32_t> candidates, int round)
    : Error(ErrorCode::TieUnresolved, describe_tie(candidates, round)),
      candidates_(std::move(candidates)),
      round_(round) {}

}  // namespace stvf
