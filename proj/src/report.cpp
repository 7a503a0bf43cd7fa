#include "stvf/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "stvf/blt.hpp"
#include "stvf/error.hpp"
#include "stvf/witness_json.hpp"

namespace stvf {

using nlohmann::json;

TabulateOptions tabulate_options_from_env() {
  TabulateOptions opts;
  const char* v = std::getenv("STVF_STRICT_TIES");
  opts.strict_ties = v && std::string_view(v) == "1";
  return opts;
}

namespace {

const char* arithmetic_name(Arithmetic a) { return a == Arithmetic::Exact ? "exact" : "scottish"; }

const char* kind_label(ParadoxKind k) {
  switch (k) {
    case ParadoxKind::CommitteeSize: return "committee-size";
    case ParadoxKind::Upward: return "upward monotonicity";
    case ParadoxKind::Downward: return "downward monotonicity";
    case ParadoxKind::NoShow: return "no-show";
  }
  return "?";
}

// ---- rendering helpers -----------------------------------------------------

json vote_json(FixedVote v) {
  if (v.is_integral()) return v.raw() / FixedVote::kScale;
  return static_cast<double>(v.raw()) / static_cast<double>(FixedVote::kScale);
}

json count_json(const CountSection& c) {
  json j;
  j["label"] = c.label;
  j["seats"] = c.seats;
  j["quota"] = vote_json(c.quota);
  j["total_ballots"] = c.total_ballots;
  j["winners"] = c.winners;
  j["tie_broken"] = c.tie_broken;
  j["columns"] = c.table.columns;
  j["rows"] = json::array();
  for (std::size_t i = 0; i < c.table.rows.size(); ++i) {
    json cells = json::array();
    for (const auto& cell : c.table.rows[i]) {
      if (!cell.present)
        cells.push_back(nullptr);
      else
        cells.push_back({{"votes", vote_json(cell.value)}, {"elected", cell.elected}});
    }
    j["rows"].push_back({{"candidate", c.table.candidate_names[i]}, {"cells", std::move(cells)}});
  }
  return j;
}

std::string names(const RunReport& r, const std::vector<CandidateId>& ids, bool as_set) {
  std::vector<CandidateId> v = ids;
  if (as_set) std::sort(v.begin(), v.end());
  std::string out = as_set ? "{" : "";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += r.candidates.at(v[i]);
  }
  return out + (as_set ? "}" : "");
}

std::string ranking_text(const RunReport& r, const Ranking& ranking) {
  std::string out;
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    if (i) out += ">";
    out += r.candidates.at(ranking[i]);
  }
  return out;
}

std::string side_by_side(const std::string& left, const std::string& right) {
  auto split = [](const std::string& s) {
    std::vector<std::string> lines;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    return lines;
  };
  const auto a = split(left), b = split(right);
  std::size_t w = 0;
  for (const auto& l : a) w = std::max(w, l.size());
  std::ostringstream out;
  for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
    std::string l = i < a.size() ? a[i] : "";
    l.resize(w, ' ');
    out << l << "    " << (i < b.size() ? b[i] : "") << '\n';
  }
  return out.str();
}

void render_count(std::ostringstream& out, const RunReport& r, const CountSection& c) {
  out << "[" << c.label << "] seats " << c.seats << ", ballots " << c.total_ballots << ", quota "
      << format_vote(c.quota, r.precision) << '\n';
  out << render_table_text(c.table, r.precision);
  out << "Winners: " << names(r, c.winners, false) << (c.tie_broken ? " (tie broken by lowest id)" : "") << '\n';
}

void render_witness(std::ostringstream& out, const RunReport& r, const WitnessEntry& w) {
  const auto& s = w.spec;
  switch (s.kind) {
    case ParadoxKind::CommitteeSize:
      out << "  S'=" << *s.seats_prime << ": " << names(r, w.missing, true) << " elected at S'=" << *s.seats_prime
          << " but not at S=" << s.seats << "; W(S')=" << names(r, w.winners_after, true)
          << ", W(S)=" << names(r, w.winners_before, true) << '\n';
      break;
    case ParadoxKind::Upward:
    case ParadoxKind::Downward:
      out << "  X=" << r.candidates.at(*s.x) << (s.kind == ParadoxKind::Upward ? " raised" : " lowered") << " on";
      for (std::size_t i = 0; i < s.moves.size(); ++i)
        out << (i ? ";" : "") << " " << s.moves[i].count << " x " << ranking_text(r, s.moves[i].source) << " -> "
            << ranking_text(r, s.moves[i].target);
      out << "; winners " << names(r, w.winners_before, true) << " -> " << names(r, w.winners_after, true) << '\n';
      break;
    case ParadoxKind::NoShow:
      out << "  X=" << r.candidates.at(*s.x) << " Y=" << r.candidates.at(*s.y) << ", removing";
      for (std::size_t i = 0; i < s.removals.size(); ++i)
        out << (i ? ";" : "") << " " << s.removals[i].count << " x " << ranking_text(r, s.removals[i].ranking);
      out << "; winners " << names(r, w.winners_before, true) << " -> " << names(r, w.winners_after, true) << '\n';
      break;
  }
}

// ---- command plumbing ------------------------------------------------------

struct Loaded {
  BltDocument doc;
  PreferenceProfile profile;
  int seats = 0;
};

Loaded load(const std::string& path, const CommonOptions& common) {
  Loaded l;
  l.doc = read_blt_file(path);
  auto [profile, seats] = to_profile(l.doc);
  l.profile = std::move(profile);
  l.seats = common.seats ? *common.seats : seats;
  return l;
}

RunReport base_report(const char* command, const Loaded& l, const CommonOptions& common) {
  if (common.precision < 0 || common.precision > FixedVote::kDecimals)
    throw std::invalid_argument("precision must be between 0 and 5");
  RunReport r;
  r.command = command;
  r.title = l.doc.title;
  for (const auto& c : l.profile.candidates()) r.candidates.push_back(c.name);
  r.seats = l.seats;
  r.total_ballots = l.profile.total_ballots();
  r.quota = compute_quota(r.total_ballots, std::max(l.seats, 0));
  r.arithmetic = common.arithmetic;
  r.precision = common.precision;
  r.config.emplace_back("arithmetic", arithmetic_name(common.arithmetic));
  r.config.emplace_back("precision", std::to_string(common.precision));
  r.config.emplace_back("strict_ties", common.tabulate.strict_ties ? "1" : "0");
  return r;
}

template <class Vote>
CountSection make_count(std::string label, const TabulationResult<Vote>& res, const PreferenceProfile& profile,
                        int seats) {
  CountSection c;
  c.label = std::move(label);
  c.seats = seats;
  c.quota = res.quota.to_fixed();
  c.total_ballots = res.total_ballots;
  c.table = votes_by_round(res, profile.candidates());
  c.winners = res.winners.order_elected;
  c.tie_broken = res.tie_broken;
  return c;
}

template <class F>
CommandResult dispatch(Arithmetic a, F&& f) {
  if (a == Arithmetic::Exact) return f(ExactVote{});
  return f(FixedVote{});
}

bool is_witness_error(ErrorCode c) {
  switch (c) {
    case ErrorCode::CountExceedsMultiplicity:
    case ErrorCode::RelativeOrderViolated:
    case ErrorCode::DirectionViolated:
    case ErrorCode::SourceRankingMissing:
    case ErrorCode::XNotAWinner:
    case ErrorCode::XNotALoser:
    case ErrorCode::YNotAWinner:
    case ErrorCode::BallotDoesNotPreferXtoY:
    case ErrorCode::ZeroCount:
      return true;
    default:
      return false;
  }
}

template <class F>
CommandResult guarded(F&& f) {
  try {
    return f();
  } catch (const ParseError& e) {
    return {exit_code::kParse, std::nullopt, e.what()};
  } catch (const TieUnresolved& e) {
    return {exit_code::kTabulation, std::nullopt, e.what()};
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::InvalidElection:
      case ErrorCode::TieUnresolved:
        return {exit_code::kTabulation, std::nullopt, e.what()};
      case ErrorCode::BudgetExhausted:
        return {exit_code::kBudget, std::nullopt, e.what()};
      default:
        if (is_witness_error(e.code())) return {exit_code::kInvalidWitness, std::nullopt, e.what()};
        return {exit_code::kParse, std::nullopt, e.what()};
    }
  } catch (const std::invalid_argument& e) {
    return {exit_code::kParse, std::nullopt, e.what()};
  }
}

template <class Vote>
WitnessEntry entry_of(const ParadoxWitness<Vote>& w) {
  return {w.spec, w.winners_before.order_elected, w.winners_after.order_elected, {}};
}

// The election a witness spec turns `e` into, when there is one.
std::optional<Election> replayed_election(const Election& e, const WitnessSpec& spec) {
  switch (spec.kind) {
    case ParadoxKind::CommitteeSize:
      return Election(e.profile(), *spec.seats_prime);
    case ParadoxKind::Upward:
    case ParadoxKind::Downward:
      return Election(apply_moves(e.profile(), *spec.x, spec.moves,
                                  spec.kind == ParadoxKind::Upward ? Direction::Up : Direction::Down),
                      e.seats());
    case ParadoxKind::NoShow: {
      auto reduced = apply_removals(e.profile(), spec.removals);
      if (reduced.total_ballots() == 0) return std::nullopt;
      return Election(std::move(reduced), e.seats());
    }
  }
  return std::nullopt;
}

std::string bound_text(std::uint64_t v) {
  return v == std::numeric_limits<std::uint64_t>::max() ? "all" : std::to_string(v);
}

}  // namespace

json to_json(const RunReport& r) {
  json j;
  j["tool"] = "stvf";
  j["version"] = r.tool_version;
  j["command"] = r.command;
  j["election"] = {{"title", r.title},
                   {"candidates", r.candidates},
                   {"seats", r.seats},
                   {"total_ballots", r.total_ballots},
                   {"quota", vote_json(r.quota)},
                   {"winners", r.winners}};
  j["arithmetic"] = arithmetic_name(r.arithmetic);
  j["precision"] = r.precision;
  json cfg = json::object();
  for (const auto& [k, v] : r.config) cfg[k] = v;
  j["config"] = cfg;

  j["counts"] = json::array();
  for (const auto& c : r.counts) j["counts"].push_back(count_json(c));

  PreferenceProfile names_only = validate_profile(r.candidates, {});
  if (r.condorcet) {
    const auto& c = *r.condorcet;
    json m = json::array();
    for (CandidateId a = 0; a < c.matrix.size(); ++a) {
      json row = json::array();
      for (CandidateId b = 0; b < c.matrix.size(); ++b) row.push_back(c.matrix(a, b));
      m.push_back(row);
    }
    json chain = json::array();
    for (std::size_t k = 0; k < c.chain.committees.size(); ++k)
      chain.push_back({{"size", k + 1},
                       {"committee", c.chain.committees[k] ? json(*c.chain.committees[k]) : json(nullptr)}});
    j["condorcet"] = {{"pairwise", m},
                      {"winner", c.winner ? json(*c.winner) : json(nullptr)},
                      {"size", c.size},
                      {"committee", c.committee ? json(*c.committee) : json(nullptr)},
                      {"committee_absent", !c.committee},
                      {"chain", chain},
                      {"chain_nested", c.chain.nested}};
  }

  j["paradoxes"] = json::array();
  for (const auto& p : r.paradoxes) {
    json ws = json::array();
    for (const auto& w : p.witnesses) {
      json e = {{"witness", witness_to_json(w.spec, names_only)},
                {"winners_before", w.winners_before},
                {"winners_after", w.winners_after}};
      if (p.kind == ParadoxKind::CommitteeSize) e["missing"] = w.missing;
      ws.push_back(std::move(e));
    }
    j["paradoxes"].push_back({{"kind", to_string(p.kind)},
                              {"complete", p.complete},
                              {"truncated", p.truncated},
                              {"tabulations", p.tabulations},
                              {"witnesses", std::move(ws)}});
  }

  if (r.verify) {
    const auto& v = *r.verify;
    j["verify"] = {{"valid", v.valid},
                   {"reason", v.reason},
                   {"witness", witness_to_json(v.spec, names_only)},
                   {"before", v.before ? count_json(*v.before) : json(nullptr)},
                   {"after", v.after ? count_json(*v.after) : json(nullptr)}};
  }
  return j;
}

std::string render_text(const RunReport& r) {
  std::ostringstream out;
  out << "Election: " << r.title << '\n';
  out << "Candidates " << r.candidates.size() << ", seats " << r.seats << ", ballots " << r.total_ballots
      << ", quota " << format_vote(r.quota, r.precision) << ", arithmetic " << arithmetic_name(r.arithmetic) << '\n';
  if (!r.winners.empty()) out << "Winners: " << names(r, r.winners, false) << '\n';

  for (const auto& c : r.counts) {
    out << '\n';
    render_count(out, r, c);
  }

  if (r.condorcet) {
    const auto& c = *r.condorcet;
    out << "\nPairwise (voters ranking row above column)\n";
    std::size_t w = 1;
    for (const auto& n : r.candidates) w = std::max(w, n.size());
    for (CandidateId a = 0; a < c.matrix.size(); ++a)
      for (CandidateId b = 0; b < c.matrix.size(); ++b) w = std::max(w, std::to_string(c.matrix(a, b)).size());
    auto cell = [&](const std::string& s) { out << std::string(w - std::min(w, s.size()) + 1, ' ') << s; };
    cell("");
    for (const auto& n : r.candidates) cell(n);
    out << '\n';
    for (CandidateId a = 0; a < c.matrix.size(); ++a) {
      cell(r.candidates[a]);
      for (CandidateId b = 0; b < c.matrix.size(); ++b) cell(a == b ? "-" : std::to_string(c.matrix(a, b)));
      out << '\n';
    }
    out << "Condorcet winner: " << (c.winner ? r.candidates[*c.winner] : "none") << '\n';
    if (c.committee)
      out << "Condorcet committee of size " << c.size << ": " << names(r, *c.committee, true) << '\n';
    else
      out << "COMMITTEE-ABSENT: no Condorcet committee of size " << c.size << '\n';
    out << "Committees by size:";
    for (std::size_t k = 0; k < c.chain.committees.size(); ++k)
      out << " " << k + 1 << "=" << (c.chain.committees[k] ? names(r, *c.chain.committees[k], true) : "none");
    out << (c.chain.nested ? " (nested)" : " (not nested)") << '\n';
  }

  const PreferenceProfile names_only = validate_profile(r.candidates, {});
  for (const auto& p : r.paradoxes) {
    out << '\n' << kind_label(p.kind) << ": ";
    if (p.witnesses.empty())
      out << "none found within bounds";
    else
      out << p.witnesses.size() << " witness" << (p.witnesses.size() == 1 ? "" : "es");
    out << " (" << (p.complete ? "search complete" : "search incomplete, budget exhausted");
    if (p.truncated) out << ", list truncated";
    out << ", " << p.tabulations << " tabulations)\n";
    for (const auto& w : p.witnesses) {
      render_witness(out, r, w);
      out << "    " << witness_to_json(w.spec, names_only).dump() << '\n';
    }
  }

  if (r.verify) {
    const auto& v = *r.verify;
    out << "\nWitness " << (v.valid ? "VALID" : "INVALID");
    if (!v.reason.empty()) out << ": " << v.reason;
    out << '\n';
    if (v.before && v.after) {
      std::ostringstream a, b;
      render_count(a, r, *v.before);
      render_count(b, r, *v.after);
      out << side_by_side(a.str(), b.str());
    } else if (v.before) {
      render_count(out, r, *v.before);
    }
  }
  return out.str();
}

CommandResult cmd_tabulate(const std::string& path, const CommonOptions& common) {
  return guarded([&] {
    const auto l = load(path, common);
    auto report = base_report("tabulate", l, common);
    return dispatch(common.arithmetic, [&](auto tag) {
      using Vote = decltype(tag);
      const Election e(l.profile, l.seats);
      const auto res = tabulate<Vote>(e, common.tabulate);
      report.winners = res.winners.order_elected;
      report.counts.push_back(make_count("count", res, l.profile, l.seats));
      return CommandResult{exit_code::kOk, std::move(report), {}};
    });
  });
}

CommandResult cmd_scan(const std::string& path, const ScanOptions& scan, const CommonOptions& common) {
  return guarded([&] {
    const auto l = load(path, common);
    auto report = base_report("scan", l, common);
    std::string kinds;
    for (auto k : scan.kinds) kinds += (kinds.empty() ? "" : ",") + std::string(to_string(k));
    report.config.emplace_back("kinds", kinds);
    report.config.emplace_back("max_types", std::to_string(scan.search.max_types));
    report.config.emplace_back("max_per_type", bound_text(scan.search.max_per_type));
    report.config.emplace_back("max_shift", bound_text(scan.search.max_shift));
    report.config.emplace_back("budget", std::to_string(scan.search.budget));
    report.config.emplace_back("max_witnesses", std::to_string(scan.search.max_witnesses));
    report.config.emplace_back("strategy",
                               scan.search.strategy == SearchStrategy::PivotGuided ? "pivot" : "exhaustive");

    return dispatch(common.arithmetic, [&](auto tag) {
      using Vote = decltype(tag);
      const Election e(l.profile, l.seats);
      SearchConfig cfg = scan.search;
      cfg.tabulate = common.tabulate;
      const auto base = tabulate_winners<Vote>(l.profile.num_candidates(), l.profile.ballot_types(), l.seats,
                                               common.tabulate);
      report.winners = base.order_elected;
      bool all_complete = true;

      for (auto kind : scan.kinds) {
        ParadoxSection sec;
        sec.kind = kind;
        if (kind == ParadoxKind::CommitteeSize) {
          for (const auto& v : check_committee_size<Vote>(l.profile, l.seats, common.tabulate)) {
            WitnessEntry w;
            w.spec.kind = kind;
            w.spec.seats = l.seats;
            w.spec.seats_prime = v.seats_prime;
            w.winners_before = base.order_elected;
            w.winners_after = tabulate_winners<Vote>(l.profile.num_candidates(), l.profile.ballot_types(),
                                                     v.seats_prime, common.tabulate)
                                  .order_elected;
            w.missing = v.missing;
            sec.witnesses.push_back(std::move(w));
          }
          sec.tabulations = static_cast<std::uint64_t>(std::max(l.seats, 1));
        } else {
          SearchOutcome<Vote> o;
          if (kind == ParadoxKind::Upward) o = search_upward<Vote>(e, cfg);
          if (kind == ParadoxKind::Downward) o = search_downward<Vote>(e, cfg);
          if (kind == ParadoxKind::NoShow) o = search_noshow<Vote>(e, cfg);
          sec.complete = o.complete;
          sec.truncated = o.truncated;
          sec.tabulations = o.tabulations;
          for (const auto& w : o.witnesses) sec.witnesses.push_back(entry_of(w));
        }
        all_complete = all_complete && sec.complete;
        report.paradoxes.push_back(std::move(sec));
      }
      if (scan.strict && !all_complete)
        return CommandResult{exit_code::kBudget, std::move(report), "search budget exhausted before the bounded space was covered"};
      return CommandResult{exit_code::kOk, std::move(report), {}};
    });
  });
}

CommandResult cmd_condorcet(const std::string& path, std::optional<std::size_t> size, const CommonOptions& common) {
  return guarded([&] {
    const auto l = load(path, common);
    auto report = base_report("condorcet", l, common);
    CondorcetSection c;
    c.matrix = pairwise_tally(l.profile);
    c.winner = condorcet_winner(c.matrix);
    c.size = size ? *size : static_cast<std::size_t>(std::max(l.seats, 1));
    if (c.size == 0 || c.size > l.profile.num_candidates())
      throw std::invalid_argument("committee size must be between 1 and the number of candidates");
    c.committee = condorcet_committee(c.matrix, c.size);
    c.chain = committee_chain(c.matrix, l.profile.num_candidates() > 1 ? l.profile.num_candidates() - 1 : 1);
    report.config.emplace_back("size", std::to_string(c.size));
    report.condorcet = std::move(c);
    return CommandResult{exit_code::kOk, std::move(report), {}};
  });
}

CommandResult cmd_verify(const std::string& path, std::string_view witness_text, const CommonOptions& common) {
  return guarded([&] {
    auto l = load(path, common);
    const auto spec = parse_witness(witness_text, l.profile);
    if (!common.seats && spec.seats > 0) l.seats = spec.seats;
    auto report = base_report("verify", l, common);

    return dispatch(common.arithmetic, [&](auto tag) {
      using Vote = decltype(tag);
      const Election e(l.profile, l.seats);
      VerifySection v;
      v.spec = spec;
      v.spec.seats = l.seats;
      const auto before = tabulate<Vote>(e, common.tabulate);
      report.winners = before.winners.order_elected;
      v.before = make_count("before", before, l.profile, l.seats);

      std::optional<ParadoxWitness<Vote>> w;
      try {
        w = verify_witness<Vote>(e, spec, common.tabulate);
      } catch (const Error& err) {
        if (!is_witness_error(err.code()) && err.code() != ErrorCode::InvalidElection) throw;
        v.reason = err.what();
      }
      if (w) {
        v.valid = true;
        const int after_seats = spec.kind == ParadoxKind::CommitteeSize ? *spec.seats_prime : l.seats;
        v.after = make_count("after", *w->ledger_after, l.profile, after_seats);
      } else if (v.reason.empty()) {
        v.reason = "replaying the witness does not produce the paradox";
        // Show what the replay does produce.
        if (auto replay = replayed_election(e, spec))
          v.after = make_count("after", tabulate<Vote>(*replay, common.tabulate), l.profile, replay->seats());
      }
      const bool valid = v.valid;
      std::string message = valid ? std::string() : v.reason;
      report.verify = std::move(v);
      return CommandResult{valid ? exit_code::kOk : exit_code::kInvalidWitness, std::move(report), std::move(message)};
    });
  });
}

}  // namespace stvf
