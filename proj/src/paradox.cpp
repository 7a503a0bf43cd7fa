#include "stvf/paradox.hpp"

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "stvf/error.hpp"

namespace stvf {

const char* to_string(ParadoxKind kind) {
  switch (kind) {
    case ParadoxKind::CommitteeSize: return "committee_size";
    case ParadoxKind::Upward: return "upward";
    case ParadoxKind::Downward: return "downward";
    case ParadoxKind::NoShow: return "noshow";
  }
  return "?";
}

std::optional<ParadoxKind> parse_paradox_kind(std::string_view s) {
  if (s == "committee_size" || s == "committee") return ParadoxKind::CommitteeSize;
  if (s == "upward" || s == "up") return ParadoxKind::Upward;
  if (s == "downward" || s == "down") return ParadoxKind::Downward;
  if (s == "noshow") return ParadoxKind::NoShow;
  return std::nullopt;
}

namespace {

std::vector<std::string> names_of(const PreferenceProfile& p) {
  std::vector<std::string> names;
  for (const auto& c : p.candidates()) names.push_back(c.name);
  return names;
}

void require_candidate(const PreferenceProfile& p, CandidateId c) {
  if (c >= p.num_candidates())
    throw Error(ErrorCode::UnknownCandidateId, "candidate id " + std::to_string(c) + " out of range");
}

Ranking without(std::span<const CandidateId> r, CandidateId x) {
  Ranking out;
  for (auto c : r)
    if (c != x) out.push_back(c);
  return out;
}

template <class Vote>
std::shared_ptr<const TabulationResult<Vote>> ledger(const Election& e, const TabulateOptions& opts) {
  return std::make_shared<const TabulationResult<Vote>>(tabulate<Vote>(e, opts));
}

std::vector<CandidateId> difference(const WinnerSet& a, const WinnerSet& b) {
  std::vector<CandidateId> out;
  for (auto c : a.elected())
    if (!b.contains(c)) out.push_back(c);
  return out;
}

}  // namespace

PreferenceProfile apply_moves(const PreferenceProfile& profile, CandidateId x, std::span<const BallotMove> moves,
                              Direction direction) {
  require_candidate(profile, x);
  std::map<Ranking, std::uint64_t> taken;
  for (const auto& m : moves) {
    if (m.count == 0) throw Error(ErrorCode::ZeroCount, "move of zero ballots");
    const auto from = rank_of(m.source, x);
    const auto to = rank_of(m.target, x);
    if (!from || !to)
      throw Error(ErrorCode::RelativeOrderViolated, "moved candidate must be ranked on both source and target");
    if (m.source.size() != m.target.size() || without(m.source, x) != without(m.target, x))
      throw Error(ErrorCode::RelativeOrderViolated, "target changes the order of the other candidates");
    const bool ok = direction == Direction::Up ? *to < *from : *to > *from;
    if (!ok)
      throw Error(ErrorCode::DirectionViolated,
                  direction == Direction::Up ? "target does not raise the candidate" : "target does not lower the candidate");
    const std::uint64_t have = profile.count_of(m.source);
    if (have == 0) throw Error(ErrorCode::SourceRankingMissing, "source ranking not in profile");
    auto& t = taken[m.source];
    t += m.count;
    if (t > have)
      throw Error(ErrorCode::CountExceedsMultiplicity,
                  "moving " + std::to_string(t) + " ballots of a type cast " + std::to_string(have) + " times");
  }

  std::vector<BallotType> ballots;
  for (const auto& b : profile.ballot_types()) {
    auto it = taken.find(b.ranking);
    const std::uint64_t left = b.count - (it == taken.end() ? 0 : it->second);
    if (left > 0) ballots.push_back({b.ranking, left});
  }
  for (const auto& m : moves) ballots.push_back({m.target, m.count});
  return validate_profile(names_of(profile), std::move(ballots));
}

PreferenceProfile apply_removals(const PreferenceProfile& profile, std::span<const Removal> removals) {
  std::map<Ranking, std::uint64_t> taken;
  for (const auto& r : removals) {
    if (r.count == 0) throw Error(ErrorCode::ZeroCount, "removal of zero ballots");
    const std::uint64_t have = profile.count_of(r.ranking);
    if (have == 0) throw Error(ErrorCode::SourceRankingMissing, "removed ranking not in profile");
    auto& t = taken[r.ranking];
    t += r.count;
    if (t > have)
      throw Error(ErrorCode::CountExceedsMultiplicity,
                  "removing " + std::to_string(t) + " ballots of a type cast " + std::to_string(have) + " times");
  }
  std::vector<BallotType> ballots;
  for (const auto& b : profile.ballot_types()) {
    auto it = taken.find(b.ranking);
    const std::uint64_t left = b.count - (it == taken.end() ? 0 : it->second);
    if (left > 0) ballots.push_back({b.ranking, left});
  }
  return validate_profile(names_of(profile), std::move(ballots));
}

template <class Vote>
std::vector<CommitteeSizeViolation> check_committee_size(const PreferenceProfile& profile, int seats,
                                                         const TabulateOptions& opts) {
  std::vector<CommitteeSizeViolation> out;
  if (seats < 2) return out;
  const auto full = tabulate_winners<Vote>(profile.num_candidates(), profile.ballot_types(), seats, opts);
  for (int s = 1; s < seats; ++s) {
    const auto w = tabulate_winners<Vote>(profile.num_candidates(), profile.ballot_types(), s, opts);
    auto missing = difference(w, full);
    if (!missing.empty()) out.push_back({s, std::move(missing)});
  }
  return out;
}

template <class Vote>
std::optional<ParadoxWitness<Vote>> verify_committee_size(const Election& election, int seats_prime,
                                                           const TabulateOptions& opts) {
  if (seats_prime < 1 || seats_prime >= election.seats())
    throw Error(ErrorCode::InvalidElection, "committee-size check needs 1 <= S' < S");
  auto before = ledger<Vote>(election, opts);
  auto after = ledger<Vote>(Election(election.profile(), seats_prime), opts);
  if (difference(after->winners, before->winners).empty()) return std::nullopt;
  ParadoxWitness<Vote> w;
  w.spec.kind = ParadoxKind::CommitteeSize;
  w.spec.seats = election.seats();
  w.spec.seats_prime = seats_prime;
  w.winners_before = before->winners;
  w.winners_after = after->winners;
  w.ledger_before = std::move(before);
  w.ledger_after = std::move(after);
  return w;
}

namespace {

template <class Vote>
std::optional<ParadoxWitness<Vote>> verify_move(const Election& election, CandidateId x,
                                                std::span<const BallotMove> moves, Direction direction,
                                                const TabulateOptions& opts) {
  const auto& profile = election.profile();
  require_candidate(profile, x);
  auto before = ledger<Vote>(election, opts);
  const bool up = direction == Direction::Up;
  if (up && !before->winners.contains(x))
    throw Error(ErrorCode::XNotAWinner, profile.name(x) + " is not a winner");
  if (!up && before->winners.contains(x))
    throw Error(ErrorCode::XNotALoser, profile.name(x) + " is a winner");
  auto modified = apply_moves(profile, x, moves, direction);
  auto after = ledger<Vote>(Election(std::move(modified), election.seats()), opts);
  if (after->winners.contains(x) == up) return std::nullopt;

  ParadoxWitness<Vote> w;
  w.spec.kind = up ? ParadoxKind::Upward : ParadoxKind::Downward;
  w.spec.seats = election.seats();
  w.spec.x = x;
  w.spec.moves.assign(moves.begin(), moves.end());
  std::sort(w.spec.moves.begin(), w.spec.moves.end());
  w.winners_before = before->winners;
  w.winners_after = after->winners;
  w.ledger_before = std::move(before);
  w.ledger_after = std::move(after);
  return w;
}

}  // namespace

template <class Vote>
std::optional<ParadoxWitness<Vote>> verify_upward(const Election& election, CandidateId x,
                                                  std::span<const BallotMove> moves, const TabulateOptions& opts) {
  return verify_move<Vote>(election, x, moves, Direction::Up, opts);
}

template <class Vote>
std::optional<ParadoxWitness<Vote>> verify_downward(const Election& election, CandidateId x,
                                                    std::span<const BallotMove> moves, const TabulateOptions& opts) {
  return verify_move<Vote>(election, x, moves, Direction::Down, opts);
}

template <class Vote>
std::optional<ParadoxWitness<Vote>> verify_noshow(const Election& election, std::span<const Removal> removals,
                                                  CandidateId x, CandidateId y, const TabulateOptions& opts) {
  const auto& profile = election.profile();
  require_candidate(profile, x);
  require_candidate(profile, y);
  auto before = ledger<Vote>(election, opts);
  if (before->winners.contains(x)) throw Error(ErrorCode::XNotALoser, profile.name(x) + " is a winner");
  if (!before->winners.contains(y)) throw Error(ErrorCode::YNotAWinner, profile.name(y) + " is not a winner");
  for (const auto& r : removals)
    if (!prefers(r.ranking, x, y))
      throw Error(ErrorCode::BallotDoesNotPreferXtoY,
                  "a removed ballot does not rank " + profile.name(x) + " above " + profile.name(y));

  auto reduced = apply_removals(profile, removals);
  if (reduced.total_ballots() == 0) return std::nullopt;
  auto after = ledger<Vote>(Election(std::move(reduced), election.seats()), opts);

  WinnerSet expected;
  for (auto c : before->winners.order_elected)
    if (c != y) expected.order_elected.push_back(c);
  expected.order_elected.push_back(x);
  if (!(after->winners == expected)) return std::nullopt;

  ParadoxWitness<Vote> w;
  w.spec.kind = ParadoxKind::NoShow;
  w.spec.seats = election.seats();
  w.spec.x = x;
  w.spec.y = y;
  w.spec.removals.assign(removals.begin(), removals.end());
  std::sort(w.spec.removals.begin(), w.spec.removals.end());
  w.winners_before = before->winners;
  w.winners_after = after->winners;
  w.ledger_before = std::move(before);
  w.ledger_after = std::move(after);
  return w;
}

template <class Vote>
std::optional<ParadoxWitness<Vote>> verify_witness(const Election& election, const WitnessSpec& spec,
                                                   const TabulateOptions& opts) {
  auto need = [](const std::optional<CandidateId>& c, const char* what) {
    if (!c) throw Error(ErrorCode::MalformedWitness, std::string("witness lacks ") + what);
    return *c;
  };
  switch (spec.kind) {
    case ParadoxKind::CommitteeSize:
      if (!spec.seats_prime) throw Error(ErrorCode::MalformedWitness, "witness lacks Sprime");
      return verify_committee_size<Vote>(election, *spec.seats_prime, opts);
    case ParadoxKind::Upward:
      return verify_upward<Vote>(election, need(spec.x, "X"), spec.moves, opts);
    case ParadoxKind::Downward:
      return verify_downward<Vote>(election, need(spec.x, "X"), spec.moves, opts);
    case ParadoxKind::NoShow:
      return verify_noshow<Vote>(election, spec.removals, need(spec.x, "X"), need(spec.y, "Y"), opts);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Bounded witness search.
//
// The space is enumerated at ballot-type granularity: a combination picks up
// to max_types options (at most one per ballot type) and a count for each.
// Combinations are generated in a fixed order and evaluated in batches, so a
// budget cut always stops at the same combination whatever the thread count.

namespace {

struct Option {
  std::size_t type_index = 0;
  Ranking target;  // empty for removals
  std::uint64_t limit = 0;
  double score = std::numeric_limits<double>::infinity();
};

struct Group {
  std::optional<CandidateId> x;
  std::vector<Option> options;
  double score = std::numeric_limits<double>::infinity();
};

using Combo = std::vector<std::pair<std::uint32_t, std::uint64_t>>;  // (option, count)

struct Job {
  std::uint32_t group = 0;
  Combo combo;
};

struct Hit {
  CandidateId x = 0;
  CandidateId y = 0;
};

using Workspace = std::vector<BallotType>;
using EvalFn = std::function<std::optional<Hit>(const Group&, const Combo&, Workspace&)>;

// Narrow elimination rounds of the baseline count.
struct Pivot {
  std::vector<bool> in_play;
  CandidateId lowest = 0;
  CandidateId runner_up = 0;
  double margin = 0;
};

template <class Vote>
std::vector<Pivot> find_pivots(const TabulationResult<Vote>& base) {
  std::vector<Pivot> pivots;
  for (const auto& ev : base.events) {
    if (ev.action != ActionKind::Eliminated) continue;
    Pivot p;
    p.in_play.assign(base.num_candidates, false);
    std::vector<std::pair<std::int64_t, CandidateId>> live;
    for (CandidateId c = 0; c < base.num_candidates; ++c) {
      if (!ev.totals_before[c]) continue;
      p.in_play[c] = true;
      live.emplace_back(ev.totals_before[c]->to_fixed().raw(), c);
    }
    if (live.size() < 2) continue;
    std::sort(live.begin(), live.end());
    p.lowest = ev.subjects.front();
    p.runner_up = live[0].second == p.lowest ? live[1].second : live[0].second;
    const std::int64_t low = ev.totals_before[p.lowest]->to_fixed().raw();
    std::int64_t next = 0;
    for (const auto& [v, c] : live)
      if (c != p.lowest) {
        next = v;
        break;
      }
    p.margin = static_cast<double>(next - low) / static_cast<double>(FixedVote::kScale);
    pivots.push_back(std::move(p));
  }
  return pivots;
}

std::optional<CandidateId> head_in(std::span<const CandidateId> r, const std::vector<bool>& in_play) {
  for (auto c : r)
    if (in_play[c]) return c;
  return std::nullopt;
}

double move_score(const std::vector<Pivot>& pivots, const Ranking& source, const Ranking& target) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pivots)
    if (head_in(source, p.in_play) != head_in(target, p.in_play)) best = std::min(best, p.margin);
  return best;
}

double removal_score(const std::vector<Pivot>& pivots, const Ranking& ranking) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : pivots) {
    auto h = head_in(ranking, p.in_play);
    if (h && (*h == p.lowest || *h == p.runner_up)) best = std::min(best, p.margin);
  }
  return best;
}

void order_for_strategy(std::vector<Group>& groups, SearchStrategy strategy) {
  if (strategy != SearchStrategy::PivotGuided) return;
  for (auto& g : groups) {
    std::stable_sort(g.options.begin(), g.options.end(),
                     [](const Option& a, const Option& b) { return a.score < b.score; });
    g.score = g.options.empty() ? std::numeric_limits<double>::infinity() : g.options.front().score;
  }
  std::stable_sort(groups.begin(), groups.end(), [](const Group& a, const Group& b) { return a.score < b.score; });
}

struct RawHit {
  Job job;
  Hit hit;
};

struct DriveResult {
  std::vector<RawHit> hits;
  bool complete = true;
  std::uint64_t tabulations = 0;
};

class Driver {
 public:
  Driver(const PreferenceProfile& profile, const SearchConfig& cfg, const std::vector<Group>& groups, EvalFn eval)
      : profile_(profile), cfg_(cfg), groups_(groups), eval_(std::move(eval)) {
    threads_ = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  }

  DriveResult run() {
    for (std::uint32_t g = 0; g < groups_.size() && !stopped_; ++g) {
      for (std::size_t size = 1; size <= cfg_.max_types && !stopped_; ++size) {
        Combo cur;
        std::vector<char> used(profile_.ballot_types().size(), 0);
        enumerate(g, 0, size, cur, used);
      }
    }
    flush();
    return std::move(result_);
  }

 private:
  static constexpr std::size_t kBatch = 2048;

  bool enumerate(std::uint32_t g, std::size_t start, std::size_t remaining, Combo& cur, std::vector<char>& used) {
    if (remaining == 0) return visit(g, cur);
    const auto& opts = groups_[g].options;
    for (std::size_t i = start; i < opts.size(); ++i) {
      const auto& o = opts[i];
      if (used[o.type_index]) continue;
      used[o.type_index] = 1;
      for (std::uint64_t c = 1; c <= o.limit; c += cfg_.count_stride) {
        cur.emplace_back(static_cast<std::uint32_t>(i), c);
        const bool go = enumerate(g, i + 1, remaining - 1, cur, used);
        cur.pop_back();
        if (!go) return false;
        if (c > o.limit - cfg_.count_stride) break;  // overflow guard
      }
      used[o.type_index] = 0;
    }
    return true;
  }

  bool visit(std::uint32_t g, const Combo& combo) {
    if (result_.tabulations == cfg_.budget) {
      result_.complete = false;
      stopped_ = true;
      return false;
    }
    ++result_.tabulations;
    batch_.push_back({g, combo});
    if (batch_.size() >= kBatch) flush();
    return true;
  }

  void flush() {
    if (batch_.empty()) return;
    std::vector<std::optional<Hit>> found(batch_.size());
    auto work = [&](std::size_t begin, std::size_t end) {
      Workspace ws(profile_.ballot_types().begin(), profile_.ballot_types().end());
      for (std::size_t i = begin; i < end; ++i) found[i] = eval_(groups_[batch_[i].group], batch_[i].combo, ws);
    };
    const std::size_t t = std::min<std::size_t>(threads_, batch_.size());
    if (t <= 1) {
      work(0, batch_.size());
    } else {
      std::vector<std::thread> pool;
      std::vector<std::exception_ptr> errors(t);
      const std::size_t chunk = (batch_.size() + t - 1) / t;
      for (std::size_t k = 0; k < t; ++k) {
        const std::size_t b = k * chunk, e = std::min(batch_.size(), b + chunk);
        pool.emplace_back([&, k, b, e] {
          try {
            work(b, e);
          } catch (...) {
            errors[k] = std::current_exception();
          }
        });
      }
      for (auto& th : pool) th.join();
      for (auto& err : errors)
        if (err) std::rethrow_exception(err);
    }
    for (std::size_t i = 0; i < batch_.size(); ++i)
      if (found[i]) result_.hits.push_back({std::move(batch_[i]), *found[i]});
    batch_.clear();
  }

  const PreferenceProfile& profile_;
  const SearchConfig& cfg_;
  const std::vector<Group>& groups_;
  EvalFn eval_;
  unsigned threads_ = 1;
  bool stopped_ = false;
  std::vector<Job> batch_;
  DriveResult result_;
};

std::uint64_t limit_for(const BallotType& b, const SearchConfig& cfg) { return std::min(b.count, cfg.max_per_type); }

void validate_config(const SearchConfig& cfg) {
  if (cfg.max_types == 0 || cfg.count_stride == 0 || cfg.max_per_type == 0 || cfg.max_shift == 0)
    throw std::invalid_argument("search bounds must be positive");
}

template <class Vote>
SearchOutcome<Vote> finish(const Election& election, const SearchConfig& cfg, const std::vector<Group>& groups,
                           DriveResult drive, ParadoxKind kind) {
  const auto& types = election.profile().ballot_types();
  std::vector<WitnessSpec> specs;
  for (const auto& h : drive.hits) {
    const auto& g = groups[h.job.group];
    WitnessSpec s;
    s.kind = kind;
    s.seats = election.seats();
    for (const auto& [oi, count] : h.job.combo) {
      const auto& o = g.options[oi];
      if (kind == ParadoxKind::NoShow)
        s.removals.push_back({types[o.type_index].ranking, count});
      else
        s.moves.push_back({types[o.type_index].ranking, count, o.target});
    }
    std::sort(s.moves.begin(), s.moves.end());
    std::sort(s.removals.begin(), s.removals.end());
    if (kind == ParadoxKind::NoShow) {
      s.x = h.hit.x;
      s.y = h.hit.y;
    } else {
      s.x = g.x;
    }
    specs.push_back(std::move(s));
  }
  std::sort(specs.begin(), specs.end());
  specs.erase(std::unique(specs.begin(), specs.end()), specs.end());

  SearchOutcome<Vote> out;
  out.complete = drive.complete;
  out.tabulations = drive.tabulations;
  if (cfg.max_witnesses && specs.size() > cfg.max_witnesses) {
    specs.resize(cfg.max_witnesses);
    out.truncated = true;
  }
  for (const auto& s : specs) {
    auto w = verify_witness<Vote>(election, s, cfg.tabulate);
    if (!w) throw std::logic_error("search produced a witness that does not verify");
    out.witnesses.push_back(std::move(*w));
  }
  return out;
}

template <class Vote>
SearchOutcome<Vote> search_moves(const Election& election, const SearchConfig& cfg, Direction direction) {
  validate_config(cfg);
  const auto& profile = election.profile();
  const auto base = tabulate<Vote>(election, cfg.tabulate);
  const auto pivots = find_pivots(base);
  const bool up = direction == Direction::Up;

  std::vector<Group> groups;
  for (CandidateId x = 0; x < profile.num_candidates(); ++x) {
    if (base.winners.contains(x) != up) continue;
    Group g;
    g.x = x;
    const auto types = profile.ballot_types();
    for (std::size_t t = 0; t < types.size(); ++t) {
      const auto& r = types[t].ranking;
      const auto pos = rank_of(r, x);
      if (!pos) continue;
      const std::size_t p = *pos;
      auto make = [&](std::size_t q) {
        Option o;
        o.type_index = t;
        o.target = r;
        o.target.erase(o.target.begin() + static_cast<std::ptrdiff_t>(p));
        o.target.insert(o.target.begin() + static_cast<std::ptrdiff_t>(q), x);
        o.limit = limit_for(types[t], cfg);
        o.score = move_score(pivots, r, o.target);
        g.options.push_back(std::move(o));
      };
      if (up) {
        for (std::size_t d = 1; d <= p && d <= cfg.max_shift; ++d) make(p - d);
      } else {
        for (std::size_t q = p + 1; q < r.size() && q - p <= cfg.max_shift; ++q) make(q);
      }
    }
    if (!g.options.empty()) groups.push_back(std::move(g));
  }
  order_for_strategy(groups, cfg.strategy);

  const std::size_t n = profile.num_candidates();
  const int seats = election.seats();
  const auto topts = cfg.tabulate;
  EvalFn eval = [n, seats, topts, up](const Group& g, const Combo& combo, Workspace& ws) -> std::optional<Hit> {
    const std::size_t base_size = ws.size();
    for (const auto& [oi, count] : combo) {
      const auto& o = g.options[oi];
      ws[o.type_index].count -= count;
      ws.push_back({o.target, count});
    }
    const auto w = tabulate_winners<Vote>(n, ws, seats, topts);
    for (const auto& [oi, count] : combo) ws[g.options[oi].type_index].count += count;
    ws.resize(base_size);
    if (w.contains(*g.x) != up) return Hit{*g.x, 0};
    return std::nullopt;
  };

  Driver driver(profile, cfg, groups, eval);
  return finish<Vote>(election, cfg, groups, driver.run(), up ? ParadoxKind::Upward : ParadoxKind::Downward);
}

}  // namespace

template <class Vote>
SearchOutcome<Vote> search_upward(const Election& election, const SearchConfig& config) {
  return search_moves<Vote>(election, config, Direction::Up);
}

template <class Vote>
SearchOutcome<Vote> search_downward(const Election& election, const SearchConfig& config) {
  return search_moves<Vote>(election, config, Direction::Down);
}

template <class Vote>
SearchOutcome<Vote> search_noshow(const Election& election, const SearchConfig& cfg) {
  validate_config(cfg);
  const auto& profile = election.profile();
  const auto base = tabulate<Vote>(election, cfg.tabulate);
  const auto pivots = find_pivots(base);
  const auto& winners = base.winners;
  const std::size_t n = profile.num_candidates();

  Group g;
  const auto types = profile.ballot_types();
  for (std::size_t t = 0; t < types.size(); ++t) {
    bool useful = false;
    for (CandidateId x = 0; x < n && !useful; ++x) {
      if (winners.contains(x)) continue;
      for (CandidateId y : winners.order_elected)
        if (prefers(types[t].ranking, x, y)) useful = true;
    }
    if (!useful) continue;
    Option o;
    o.type_index = t;
    o.limit = limit_for(types[t], cfg);
    o.score = removal_score(pivots, types[t].ranking);
    g.options.push_back(std::move(o));
  }
  std::vector<Group> groups;
  if (!g.options.empty()) groups.push_back(std::move(g));
  order_for_strategy(groups, cfg.strategy);

  const int seats = election.seats();
  const auto topts = cfg.tabulate;
  const std::uint64_t total = profile.total_ballots();
  EvalFn eval = [n, seats, topts, total, &winners](const Group& g, const Combo& combo,
                                                   Workspace& ws) -> std::optional<Hit> {
    std::uint64_t removed = 0;
    for (const auto& [oi, count] : combo) removed += count;
    if (removed >= total) return std::nullopt;
    for (const auto& [oi, count] : combo) ws[g.options[oi].type_index].count -= count;
    const auto w = tabulate_winners<Vote>(n, ws, seats, topts);
    for (const auto& [oi, count] : combo) ws[g.options[oi].type_index].count += count;

    const auto gained = difference(w, winners);
    const auto lost = difference(winners, w);
    if (gained.size() != 1 || lost.size() != 1) return std::nullopt;
    for (const auto& [oi, count] : combo)
      if (!prefers(ws[g.options[oi].type_index].ranking, gained[0], lost[0])) return std::nullopt;
    return Hit{gained[0], lost[0]};
  };

  Driver driver(profile, cfg, groups, eval);
  return finish<Vote>(election, cfg, groups, driver.run(), ParadoxKind::NoShow);
}

#define STVF_INSTANTIATE(V)                                                                                     \
  template std::vector<CommitteeSizeViolation> check_committee_size<V>(const PreferenceProfile&, int,           \
                                                                       const TabulateOptions&);                 \
  template std::optional<ParadoxWitness<V>> verify_committee_size<V>(const Election&, int,                      \
                                                                     const TabulateOptions&);                   \
  template std::optional<ParadoxWitness<V>> verify_upward<V>(const Election&, CandidateId,                      \
                                                             std::span<const BallotMove>, const TabulateOptions&); \
  template std::optional<ParadoxWitness<V>> verify_downward<V>(const Election&, CandidateId,                    \
                                                               std::span<const BallotMove>,                     \
                                                               const TabulateOptions&);                         \
  template std::optional<ParadoxWitness<V>> verify_noshow<V>(const Election&, std::span<const Removal>,         \
                                                             CandidateId, CandidateId, const TabulateOptions&); \
  template std::optional<ParadoxWitness<V>> verify_witness<V>(const Election&, const WitnessSpec&,              \
                                                              const TabulateOptions&);                          \
  template SearchOutcome<V> search_upward<V>(const Election&, const SearchConfig&);                             \
  template SearchOutcome<V> search_downward<V>(const Election&, const SearchConfig&);                           \
  template SearchOutcome<V> search_noshow<V>(const Election&, const SearchConfig&);

STVF_INSTANTIATE(FixedVote)
STVF_INSTANTIATE(ExactVote)

#undef STVF_INSTANTIATE

}  // namespace stvf
