#include "stvf/round_table.hpp"

#include <algorithm>
#include <sstream>

namespace stvf {

template <class Vote>
RoundTable votes_by_round(const TabulationResult<Vote>& result, const std::vector<Candidate>& candidates) {
  RoundTable table;
  const std::size_t n = result.num_candidates;
  for (std::size_t c = 0; c < n; ++c) table.candidate_names.push_back(candidates.at(c).name);
  table.rows.assign(n, {});

  bool merge_next = false;
  for (const auto& ev : result.events) {
    if (!merge_next) {
      for (std::size_t c = 0; c < n; ++c) {
        RoundTableCell cell;
        if (ev.totals_before[c]) {
          cell.present = true;
          cell.value = ev.totals_before[c]->to_fixed();
        }
        table.rows[c].push_back(cell);
      }
      ++table.columns;
    }
    if (ev.action != ActionKind::Eliminated)
      for (CandidateId c : ev.subjects) table.rows[c].back().elected = true;
    merge_next = !ev.moved_votes();
  }
  return table;
}

template RoundTable votes_by_round<FixedVote>(const TabulationResult<FixedVote>&, const std::vector<Candidate>&);
template RoundTable votes_by_round<ExactVote>(const TabulationResult<ExactVote>&, const std::vector<Candidate>&);

std::vector<std::vector<std::string>> render_cells(const RoundTable& table, int precision) {
  std::vector<std::vector<std::string>> out;
  for (const auto& row : table.rows) {
    auto& line = out.emplace_back();
    for (const auto& cell : row) {
      if (!cell.present) {
        line.emplace_back();
        continue;
      }
      line.push_back(format_vote(cell.value, precision) + (cell.elected ? "*" : ""));
    }
  }
  return out;
}

std::string render_table_text(const RoundTable& table, int precision) {
  const auto cells = render_cells(table, precision);
  std::size_t name_w = std::string("Candidate").size();
  for (const auto& n : table.candidate_names) name_w = std::max(name_w, n.size());
  std::vector<std::size_t> col_w(table.columns, 0);
  for (std::size_t j = 0; j < table.columns; ++j) {
    col_w[j] = std::to_string(j + 1).size();
    for (const auto& row : cells) col_w[j] = std::max(col_w[j], row[j].size());
  }

  std::ostringstream out;
  auto pad_right = [&](const std::string& s, std::size_t w) { out << s << std::string(w - s.size(), ' '); };
  auto pad_left = [&](const std::string& s, std::size_t w) { out << std::string(w - s.size(), ' ') << s; };
  pad_right("Candidate", name_w);
  for (std::size_t j = 0; j < table.columns; ++j) {
    out << " | ";
    pad_left(std::to_string(j + 1), col_w[j]);
  }
  out << '\n';
  for (std::size_t i = 0; i < cells.size(); ++i) {
    pad_right(table.candidate_names[i], name_w);
    for (std::size_t j = 0; j < table.columns; ++j) {
      out << " | ";
      pad_left(cells[i][j], col_w[j]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace stvf
