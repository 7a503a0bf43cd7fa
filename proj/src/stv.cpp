#include "stvf/stv.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

#include "stvf/error.hpp"

namespace stvf {

const char* to_string(ActionKind a) {
  switch (a) {
    case ActionKind::ElectedByQuota: return "elected";
    case ActionKind::Eliminated: return "eliminated";
    case ActionKind::ElectedAsLastStanding: return "elected_last_standing";
  }
  return "?";
}

template <class Vote>
bool RoundEvent<Vote>::moved_votes() const {
  if (nontransferable != Vote{}) return true;
  return std::any_of(transfers.begin(), transfers.end(), [](const auto& t) { return t.has_value(); });
}

FixedVote compute_quota(std::uint64_t num_ballots, int seats) {
  assert(seats >= 1);
  return FixedVote::from_int(static_cast<std::int64_t>(num_ballots / (static_cast<std::uint64_t>(seats) + 1) + 1));
}

FixedVote transfer_value(FixedVote surplus, FixedVote elected_total) {
  return FixedVote::scaled(FixedVote::from_int(1), surplus, elected_total);
}

namespace {

constexpr std::size_t kExhausted = std::numeric_limits<std::size_t>::max();

template <class Vote>
class Count {
 public:
  Count(std::size_t n, std::span<const BallotType> ballots, int seats, const TabulateOptions& opts, bool record)
      : n_(n), seats_(seats), opts_(opts), record_(record), totals_(n), status_(n, Status::Continuing) {
    std::uint64_t total = 0;
    const Vote one = Vote::from_int(1);
    parcels_.reserve(ballots.size());
    for (const auto& b : ballots) {
      if (b.count == 0 || b.ranking.empty()) continue;
      total += b.count;
      parcels_.push_back({&b, 0, one});
      totals_[b.ranking[0]] += one * b.count;
    }
    if (seats < 1 || static_cast<std::size_t>(seats) > n)
      throw Error(ErrorCode::InvalidElection, "seats out of range");
    if (total == 0) throw Error(ErrorCode::InvalidElection, "no ballots");
    result_.total_ballots = total;
    result_.num_candidates = n;
    result_.quota = Vote::from_int(static_cast<std::int64_t>(total / (static_cast<std::uint64_t>(seats) + 1) + 1));
  }

  TabulationResult<Vote> run() && {
    const Vote& quota = result_.quota;
    while (elected_ < seats_) {
      std::vector<CandidateId> over;
      for (CandidateId c = 0; c < n_; ++c)
        if (status_[c] == Status::Continuing && !(totals_[c] < quota)) over.push_back(c);

      if (!over.empty()) {
        history_.push_back(totals_);
        const auto order = order_by_total(over);
        for (CandidateId c : over) status_[c] = Status::PendingSurplus;
        for (std::size_t k = 0; k < order.size(); ++k) {
          if (k > 0) history_.push_back(totals_);
          const CandidateId c = order[k];
          auto ev = begin_event(ActionKind::ElectedByQuota, {c});
          ev.surplus = totals_[c] - quota;
          status_[c] = Status::Elected;
          result_.winners.order_elected.push_back(c);
          ++elected_;
          if (elected_ < seats_) {
            transfer_surplus(c, ev);
          }
          finish_event(std::move(ev));
          if (elected_ == seats_) break;
        }
        continue;
      }

      std::vector<CandidateId> continuing;
      for (CandidateId c = 0; c < n_; ++c)
        if (status_[c] == Status::Continuing) continuing.push_back(c);
      history_.push_back(totals_);

      if (static_cast<int>(continuing.size()) == seats_ - elected_) {
        std::stable_sort(continuing.begin(), continuing.end(),
                         [&](CandidateId a, CandidateId b) { return totals_[b] < totals_[a]; });
        auto ev = begin_event(ActionKind::ElectedAsLastStanding, continuing);
        for (CandidateId c : continuing) {
          status_[c] = Status::Elected;
          result_.winners.order_elected.push_back(c);
          ++elected_;
        }
        finish_event(std::move(ev));
        break;
      }

      bool flagged = false;
      const CandidateId loser = pick_extreme(continuing, /*lowest=*/true, flagged);
      auto ev = begin_event(ActionKind::Eliminated, {loser});
      ev.tie_broken = flagged;
      status_[loser] = Status::Eliminated;
      transfer_all(loser, ev);
      finish_event(std::move(ev));
    }
    return std::move(result_);
  }

 private:
  enum class Status : std::uint8_t { Continuing, PendingSurplus, Elected, Eliminated };

  struct Parcel {
    const BallotType* ballot;
    std::size_t pos;  // index of the current holder in the ranking, or kExhausted
    Vote weight;      // value of each ballot in the parcel
  };

  CandidateId holder(const Parcel& p) const { return p.ballot->ranking[p.pos]; }

  void advance(Parcel& p) const {
    const auto& r = p.ballot->ranking;
    for (std::size_t i = p.pos + 1; i < r.size(); ++i) {
      if (status_[r[i]] == Status::Continuing) {
        p.pos = i;
        return;
      }
    }
    p.pos = kExhausted;
  }

  RoundEvent<Vote> begin_event(ActionKind action, std::vector<CandidateId> subjects) {
    RoundEvent<Vote> ev;
    ev.round_no = static_cast<int>(events_seen_) + 1;
    ev.action = action;
    ev.subjects = std::move(subjects);
    if (record_) {
      ev.totals_before.resize(n_);
      ev.transfers.resize(n_);
      for (CandidateId c = 0; c < n_; ++c)
        if (status_[c] == Status::Continuing || status_[c] == Status::PendingSurplus)
          ev.totals_before[c] = totals_[c];
    }
    return ev;
  }

  void finish_event(RoundEvent<Vote>&& ev) {
    ++events_seen_;
    result_.exhausted_total += ev.nontransferable;
    if (ev.tie_broken) result_.tie_broken = true;
    if (record_) result_.events.push_back(std::move(ev));
  }

  void credit(CandidateId to, const Vote& amount, RoundEvent<Vote>& ev) {
    totals_[to] += amount;
    if (record_) {
      auto& slot = ev.transfers[to];
      if (slot)
        *slot += amount;
      else
        slot = amount;
    }
  }

  void transfer_surplus(CandidateId c, RoundEvent<Vote>& ev) {
    const Vote total = totals_[c];
    const Vote surplus = ev.surplus;
    Vote moved{};
    for (auto& p : parcels_) {
      if (p.pos == kExhausted || holder(p) != c) continue;
      p.weight = Vote::scaled(p.weight, surplus, total);
      advance(p);
      if (p.pos == kExhausted) continue;
      const Vote amount = p.weight * p.ballot->count;
      moved += amount;
      credit(holder(p), amount, ev);
    }
    ev.nontransferable = surplus - moved;
    totals_[c] = result_.quota;
  }

  void transfer_all(CandidateId c, RoundEvent<Vote>& ev) {
    Vote lost{};
    for (auto& p : parcels_) {
      if (p.pos == kExhausted || holder(p) != c) continue;
      const Vote amount = p.weight * p.ballot->count;
      advance(p);
      if (p.pos == kExhausted)
        lost += amount;
      else
        credit(holder(p), amount, ev);
    }
    ev.nontransferable = lost;
    totals_[c] = Vote{};
  }

  // Highest (or lowest) of `among` by current total; ties go to the most
  // recent earlier stage at which the tied candidates differed.
  CandidateId pick_extreme(const std::vector<CandidateId>& among, bool lowest, bool& flagged) {
    auto better = [lowest](const Vote& a, const Vote& b) { return lowest ? a < b : b < a; };
    std::vector<CandidateId> tied;
    for (CandidateId c : among) {
      if (tied.empty() || better(totals_[c], totals_[tied.front()])) {
        tied.assign(1, c);
      } else if (totals_[c] == totals_[tied.front()]) {
        tied.push_back(c);
      }
    }
    // history_.back() is the current stage
    for (std::size_t k = history_.size() - 1; tied.size() > 1 && k-- > 0;) {
      const auto& h = history_[k];
      std::vector<CandidateId> next;
      for (CandidateId c : tied) {
        if (next.empty() || better(h[c], h[next.front()]))
          next.assign(1, c);
        else if (h[c] == h[next.front()])
          next.push_back(c);
      }
      tied = std::move(next);
    }
    if (tied.size() == 1) return tied.front();
    if (opts_.strict_ties)
      throw TieUnresolved(std::vector<std::uint32_t>(tied.begin(), tied.end()), static_cast<int>(events_seen_) + 1);
    flagged = true;
    return *std::min_element(tied.begin(), tied.end());
  }

  std::vector<CandidateId> order_by_total(std::vector<CandidateId> remaining) {
    std::vector<CandidateId> order;
    while (!remaining.empty()) {
      bool flagged = false;
      const CandidateId top = pick_extreme(remaining, /*lowest=*/false, flagged);
      if (flagged) result_.tie_broken = true;
      order.push_back(top);
      remaining.erase(std::find(remaining.begin(), remaining.end(), top));
    }
    return order;
  }

  std::size_t n_;
  int seats_;
  TabulateOptions opts_;
  bool record_;
  std::vector<Vote> totals_;
  std::vector<Status> status_;
  std::vector<Parcel> parcels_;
  std::vector<std::vector<Vote>> history_;
  int elected_ = 0;
  std::size_t events_seen_ = 0;
  TabulationResult<Vote> result_;
};

}  // namespace

template <class Vote>
TabulationResult<Vote> tabulate(const Election& election, const TabulateOptions& opts) {
  const auto& p = election.profile();
  return Count<Vote>(p.num_candidates(), p.ballot_types(), election.seats(), opts, true).run();
}

template <class Vote>
WinnerSet tabulate_winners(std::size_t num_candidates, std::span<const BallotType> ballots, int seats,
                           const TabulateOptions& opts) {
  return Count<Vote>(num_candidates, ballots, seats, opts, false).run().winners;
}

WinnerSet tabulate_winners(Arithmetic arithmetic, std::size_t num_candidates, std::span<const BallotType> ballots,
                           int seats, const TabulateOptions& opts) {
  if (arithmetic == Arithmetic::Scottish) return tabulate_winners<FixedVote>(num_candidates, ballots, seats, opts);
  return tabulate_winners<ExactVote>(num_candidates, ballots, seats, opts);
}

template struct RoundEvent<FixedVote>;
template struct RoundEvent<ExactVote>;
template TabulationResult<FixedVote> tabulate<FixedVote>(const Election&, const TabulateOptions&);
template TabulationResult<ExactVote> tabulate<ExactVote>(const Election&, const TabulateOptions&);
template WinnerSet tabulate_winners<FixedVote>(std::size_t, std::span<const BallotType>, int, const TabulateOptions&);
template WinnerSet tabulate_winners<ExactVote>(std::size_t, std::span<const BallotType>, int, const TabulateOptions&);

}  // namespace stvf
