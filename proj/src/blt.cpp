#include "stvf/blt.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "stvf/error.hpp"

namespace stvf {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::string_view text;
  std::size_t number;  // 1-based
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back({line, number++});
    if (end == text.size()) break;
    start = end + 1;
  }
  return lines;
}

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\v' || c == '\f' || c == '\r'; }

// Tokens of a ballot-section line, comment stripped.
std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (is_space(line[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j]) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') return false;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty() || s.front() == '-' || s.front() == '+') return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

[[noreturn]] void fail(ErrorCode code, const Line& line, std::size_t column, const std::string& detail) {
  throw ParseError(code, line.number, column, detail);
}

std::string quote(std::string_view s) { return "'" + std::string(s) + "'"; }

}  // namespace

BltDocument parse_blt(std::string_view text) {
  const auto lines = split_lines(text);
  BltDocument doc;
  std::size_t li = 0;

  auto next_nonblank = [&]() -> bool {
    while (li < lines.size() && tokenize(lines[li].text).empty()) ++li;
    return li < lines.size();
  };

  // Header.
  if (!next_nonblank()) throw ParseError(ErrorCode::MissingHeader, 1, 1, "empty input");
  {
    const auto toks = tokenize(lines[li].text);
    std::uint64_t n = 0, s = 0;
    if (toks.size() != 2 || !parse_uint(toks[0].text, n) || !parse_uint(toks[1].text, s))
      fail(ErrorCode::MissingHeader, lines[li], toks.front().column,
           "expected '<candidates> <seats>' header");
    if (n == 0 || n > 100000) fail(ErrorCode::MalformedLine, lines[li], toks[0].column, "bad candidate count");
    if (s == 0 || s > n) fail(ErrorCode::MalformedLine, lines[li], toks[1].column, "bad seat count");
    doc.num_candidates = static_cast<std::uint32_t>(n);
    doc.num_seats = static_cast<std::uint32_t>(s);
    ++li;
  }
  const std::uint32_t n = doc.num_candidates;

  // Optional withdrawn line.
  if (next_nonblank()) {
    const auto toks = tokenize(lines[li].text);
    if (toks.front().text.front() == '-') {
      for (const auto& t : toks) {
        std::int64_t v = 0;
        if (!parse_int(t.text, v) || v >= 0)
          fail(ErrorCode::MalformedLine, lines[li], t.column, "withdrawn entry " + quote(t.text));
        if (v < -static_cast<std::int64_t>(n))
          fail(ErrorCode::IdOutOfRange, lines[li], t.column, "withdrawn id " + quote(t.text));
        doc.withdrawn.push_back(static_cast<std::uint32_t>(-v));
      }
      ++li;
    }
  }

  // Ballots.
  bool terminated = false;
  while (next_nonblank()) {
    const Line& line = lines[li];
    const auto toks = tokenize(line.text);
    if (toks.front().text.front() == '"') break;
    if (toks.size() == 1 && toks[0].text == "0") {
      terminated = true;
      ++li;
      break;
    }
    BltBallotLine ballot;
    if (!parse_uint(toks[0].text, ballot.weight) || ballot.weight == 0)
      fail(ErrorCode::MalformedLine, line, toks[0].column,
           "ballot weight must be a positive integer, got " + quote(toks[0].text));
    if (toks.back().text != "0")
      fail(ErrorCode::MalformedLine, line, toks.back().column, "ballot line must end with 0");
    for (std::size_t k = 1; k + 1 < toks.size(); ++k) {
      std::uint64_t id = 0;
      if (!parse_uint(toks[k].text, id))
        fail(ErrorCode::MalformedLine, line, toks[k].column, "bad preference " + quote(toks[k].text));
      if (id == 0 || id > n)
        fail(ErrorCode::IdOutOfRange, line, toks[k].column,
             "candidate id " + quote(toks[k].text) + " outside 1.." + std::to_string(n));
      ballot.ranking.push_back(static_cast<std::uint32_t>(id));
    }
    doc.ballot_lines.push_back(std::move(ballot));
    ++li;
  }
  if (!terminated) {
    const std::size_t at = li < lines.size() ? lines[li].number : lines.back().number;
    throw ParseError(ErrorCode::MissingBallotTerminator, at, 1, "ballot section not terminated by a '0' line");
  }

  // Names and title: quoted strings separated by whitespace or comments.
  std::size_t col = 0;
  auto read_quoted = [&](const char* what) -> std::string {
    for (;;) {
      if (li >= lines.size()) {
        throw ParseError(ErrorCode::MalformedLine, lines.back().number, lines.back().text.size() + 1,
                         std::string("expected ") + what + ", found end of input");
      }
      std::string_view t = lines[li].text;
      while (col < t.size() && is_space(t[col])) ++col;
      if (col >= t.size() || t[col] == '#') {
        ++li;
        col = 0;
        continue;
      }
      if (t[col] != '"')
        fail(ErrorCode::MalformedLine, lines[li], col + 1, std::string("expected quoted ") + what);
      const std::size_t close = t.find('"', col + 1);
      if (close == std::string_view::npos)
        fail(ErrorCode::MalformedLine, lines[li], col + 1, std::string("unterminated ") + what);
      std::string value(t.substr(col + 1, close - col - 1));
      col = close + 1;
      return value;
    }
  };
  for (std::uint32_t i = 0; i < n; ++i) doc.candidate_names.push_back(read_quoted("candidate name"));
  doc.title = read_quoted("title");

  for (; li < lines.size(); ++li, col = 0) {
    std::string_view t = lines[li].text;
    while (col < t.size() && is_space(t[col])) ++col;
    if (col < t.size() && t[col] != '#')
      fail(ErrorCode::TrailingGarbage, lines[li], col + 1, "unexpected content after title");
  }
  return doc;
}

std::pair<PreferenceProfile, int> to_profile(const BltDocument& doc) {
  std::vector<bool> withdrawn(doc.num_candidates + 1, false);
  for (auto w : doc.withdrawn)
    if (w >= 1 && w <= doc.num_candidates) withdrawn[w] = true;

  std::vector<BallotType> ballots;
  ballots.reserve(doc.ballot_lines.size());
  for (const auto& line : doc.ballot_lines) {
    BallotType b{{}, line.weight};
    for (auto id : line.ranking) {
      if (id >= 1 && id <= doc.num_candidates && withdrawn[id]) continue;
      // id 0 wraps to an out-of-range value and is rejected by validation
      b.ranking.push_back(static_cast<CandidateId>(id - 1));
    }
    if (!b.ranking.empty()) ballots.push_back(std::move(b));
  }
  auto profile = validate_profile(doc.candidate_names, std::move(ballots));
  return {std::move(profile), static_cast<int>(doc.num_seats)};
}

std::string write_blt(const PreferenceProfile& profile, int seats, std::string_view title) {
  std::ostringstream out;
  out << profile.num_candidates() << ' ' << seats << '\n';
  for (const auto& b : profile.ballot_types()) {
    out << b.count;
    for (auto c : b.ranking) out << ' ' << (c + 1);
    out << " 0\n";
  }
  out << "0\n";
  for (const auto& c : profile.candidates()) out << '"' << c.name << "\"\n";
  out << '"' << title << "\"\n";
  return out.str();
}

BltDocument read_blt_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(ErrorCode::MissingHeader, 0, 0, "cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_blt(buf.str());
}

}  // namespace stvf
