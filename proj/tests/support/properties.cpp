#include "properties.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "stvf/blt.hpp"
#include "stvf/error.hpp"
#include "stvf/paradox.hpp"
#include "stvf/stv.hpp"
#include "support.hpp"

namespace stvf::test {

namespace {

std::string text_of(const FixedVote& v) { return v.to_decimal_string(); }
std::string text_of(const ExactVote& v) { return v.to_fraction_string(); }

template <class Vote>
std::string ledger_string(const TabulationResult<Vote>& r) {
  std::ostringstream out;
  out << "q " << text_of(r.quota) << " x " << text_of(r.exhausted_total) << '\n';
  for (const auto& ev : r.events) {
    out << ev.round_no << ' ' << to_string(ev.action) << ' ' << ev.tie_broken << ' ' << text_of(ev.surplus) << ' '
        << text_of(ev.nontransferable) << " |";
    for (auto c : ev.subjects) out << ' ' << c;
    out << " |";
    for (const auto& t : ev.totals_before) out << ' ' << (t ? text_of(*t) : "-");
    out << " |";
    for (const auto& t : ev.transfers) out << ' ' << (t ? text_of(*t) : "-");
    out << '\n';
  }
  out << "w";
  for (auto c : r.winners.order_elected) out << ' ' << c;
  return out.str();
}

// Sum of in-play totals + quota per finished quota election + votes lost so
// far must equal N at every stage.
template <class Vote>
std::optional<std::string> conservation(const TabulationResult<Vote>& r) {
  Vote lost{};
  std::uint64_t settled = 0;
  const Vote n = Vote::from_int(static_cast<std::int64_t>(r.total_ballots));
  for (const auto& ev : r.events) {
    Vote sum = lost + r.quota * settled;
    for (const auto& t : ev.totals_before)
      if (t) sum += *t;
    if (!(sum == n)) return "stage " + std::to_string(ev.round_no) + " holds " + text_of(sum);
    lost += ev.nontransferable;
    if (ev.action == ActionKind::ElectedByQuota) ++settled;
  }
  if (!(lost == r.exhausted_total)) return std::string("exhausted total mismatch");
  return std::nullopt;
}

std::string fuzz(std::string s, std::mt19937_64& rng) {
  static const char* kTokens[] = {"0", "-1", "99", "\"", "#", "\n", " ", "x", "4294967296", "-", "18446744073709551616"};
  std::uniform_int_distribution<int> op(0, 4);
  const int edits = std::uniform_int_distribution<int>(1, 6)(rng);
  for (int e = 0; e < edits; ++e) {
    if (s.empty()) s = "\n";
    const std::size_t at = std::uniform_int_distribution<std::size_t>(0, s.size() - 1)(rng);
    switch (op(rng)) {
      case 0: s[at] = static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng)); break;
      case 1: s.erase(at, std::uniform_int_distribution<std::size_t>(1, 8)(rng)); break;
      case 2: s.insert(at, kTokens[std::uniform_int_distribution<std::size_t>(0, std::size(kTokens) - 1)(rng)]); break;
      case 3: s.resize(at); break;
      case 4: s.insert(at, s.substr(at / 2, 10)); break;
    }
  }
  return s;
}

}  // namespace

PropertyReport run_properties(std::uint64_t cases, std::uint64_t seed) {
  PropertyReport rep;
  rep.cases = cases;
  std::mt19937_64 rng(seed);
  auto fail = [&](const char* prop, std::uint64_t i, std::string detail) {
    rep.failures.push_back({prop, i, std::move(detail)});
  };

  for (std::uint64_t i = 0; i < cases; ++i) {
    const auto re = random_election(rng);
    const PreferenceProfile& p = re.profile;
    const Election e(p, re.seats);

    const auto exact = tabulate<ExactVote>(e);
    const auto fixed = tabulate<FixedVote>(e);

    ++rep.checks["conservation"];
    if (auto bad = conservation(exact)) fail("conservation", i, "exact: " + *bad);
    if (auto bad = conservation(fixed)) fail("conservation", i, "scottish: " + *bad);

    ++rep.checks["seats"];
    for (const auto* w : {&exact.winners, &fixed.winners}) {
      auto sorted = w->elected();
      if (w->size() != static_cast<std::size_t>(re.seats) ||
          std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        fail("seats", i, "winner count " + std::to_string(w->size()) + " for " + std::to_string(re.seats) + " seats");
    }

    ++rep.checks["determinism"];
    if (ledger_string(exact) != ledger_string(tabulate<ExactVote>(e)) ||
        ledger_string(fixed) != ledger_string(tabulate<FixedVote>(e)))
      fail("determinism", i, "ledgers differ between runs");

    if (auto ref = reference_winners(p, re.seats)) {
      ++rep.checks["reference"];
      if (*ref != exact.winners.elected()) fail("reference", i, "winner sets differ from the reference count");
    }

    // verify . search
    {
      SearchConfig cfg;
      cfg.max_types = 1 + i % 2;
      cfg.max_per_type = 3;
      cfg.max_shift = 2;
      cfg.budget = 60;
      cfg.threads = 1;
      cfg.strategy = i % 3 == 0 ? SearchStrategy::PivotGuided : SearchStrategy::ExhaustiveBounded;
      std::vector<ParadoxWitness<FixedVote>> found;
      for (auto* search : {&search_upward<FixedVote>, &search_downward<FixedVote>, &search_noshow<FixedVote>}) {
        auto out = (*search)(e, cfg);
        for (auto& w : out.witnesses) found.push_back(std::move(w));
      }
      ++rep.checks["soundness"];
      for (const auto& w : found) {
        const auto again = verify_witness<FixedVote>(e, w.spec);
        if (!again || !(again->winners_after == w.winners_after)) {
          fail("soundness", i, std::string(to_string(w.spec.kind)) + " witness does not re-verify");
          continue;
        }
        // Independently of verify: rebuild P' and recount.
        PreferenceProfile changed =
            w.spec.kind == ParadoxKind::NoShow
                ? apply_removals(p, w.spec.removals)
                : apply_moves(p, *w.spec.x, w.spec.moves,
                              w.spec.kind == ParadoxKind::Upward ? Direction::Up : Direction::Down);
        const auto after = tabulate_winners<FixedVote>(changed.num_candidates(), changed.ballot_types(), re.seats);
        bool holds = false;
        switch (w.spec.kind) {
          case ParadoxKind::Upward: holds = fixed.winners.contains(*w.spec.x) && !after.contains(*w.spec.x); break;
          case ParadoxKind::Downward: holds = !fixed.winners.contains(*w.spec.x) && after.contains(*w.spec.x); break;
          case ParadoxKind::NoShow: {
            auto expect = fixed.winners.elected();
            std::replace(expect.begin(), expect.end(), *w.spec.y, *w.spec.x);
            std::sort(expect.begin(), expect.end());
            holds = after.elected() == expect;
            break;
          }
          default: break;
        }
        if (!holds) fail("soundness", i, "recount does not show the paradox");
      }
    }

    // apply_moves on a random ballot type
    {
      const auto types = p.ballot_types();
      const auto& bt = types[std::uniform_int_distribution<std::size_t>(0, types.size() - 1)(rng)];
      if (bt.ranking.size() >= 2) {
        ++rep.checks["relative_order"];
        const std::size_t from = std::uniform_int_distribution<std::size_t>(0, bt.ranking.size() - 1)(rng);
        std::size_t to = std::uniform_int_distribution<std::size_t>(0, bt.ranking.size() - 2)(rng);
        if (to >= from) ++to;
        const CandidateId x = bt.ranking[from];
        Ranking target = bt.ranking;
        target.erase(target.begin() + static_cast<std::ptrdiff_t>(from));
        target.insert(target.begin() + static_cast<std::ptrdiff_t>(to), x);
        const std::uint64_t count = std::uniform_int_distribution<std::uint64_t>(1, bt.count)(rng);
        const BallotMove mv{bt.ranking, count, target};
        const auto dir = to < from ? Direction::Up : Direction::Down;
        const auto q = apply_moves(p, x, std::span(&mv, 1), dir);
        if (q.total_ballots() != p.total_ballots()) fail("relative_order", i, "ballot total changed");
        if (q.count_of(bt.ranking) != bt.count - count) fail("relative_order", i, "source multiplicity wrong");
        if (q.count_of(target) != p.count_of(target) + count) fail("relative_order", i, "target multiplicity wrong");
        // Every ballot of P' restricted to the non-X candidates matches some ballot of P.
        auto strip = [x](const Ranking& r) {
          Ranking out;
          for (auto c : r)
            if (c != x) out.push_back(c);
          return out;
        };
        for (const auto& b : q.ballot_types()) {
          bool seen = false;
          for (const auto& a : types) seen = seen || strip(a.ranking) == strip(b.ranking);
          if (!seen) fail("relative_order", i, "a new ordering of the other candidates appeared");
        }
        // The wrong direction and a reorder of others are both refused.
        bool refused = false;
        try {
          apply_moves(p, x, std::span(&mv, 1), dir == Direction::Up ? Direction::Down : Direction::Up);
        } catch (const Error& err) {
          refused = err.code() == ErrorCode::DirectionViolated;
        }
        if (!refused) fail("relative_order", i, "direction check missing");
        if (bt.ranking.size() >= 3) {
          Ranking swapped = target;
          std::vector<std::size_t> others;
          for (std::size_t k = 0; k < swapped.size(); ++k)
            if (swapped[k] != x) others.push_back(k);
          std::swap(swapped[others[0]], swapped[others[1]]);
          const BallotMove wrong{bt.ranking, count, swapped};
          refused = false;
          try {
            apply_moves(p, x, std::span(&wrong, 1), dir);
          } catch (const Error& err) {
            refused = err.code() == ErrorCode::RelativeOrderViolated;
          }
          if (!refused) fail("relative_order", i, "reordering other candidates was accepted");
        }
      }
    }

    // BLT round trip
    {
      ++rep.checks["blt_roundtrip"];
      const std::string text = write_blt(p, re.seats, "case " + std::to_string(i));
      const auto doc = parse_blt(text);
      const auto [back, seats] = to_profile(doc);
      if (!(back == p) || seats != re.seats || doc.title != "case " + std::to_string(i))
        fail("blt_roundtrip", i, "profile changed through BLT");
      if (write_blt(back, seats, doc.title) != text) fail("blt_roundtrip", i, "rewritten text differs");

      ++rep.checks["parser_fuzz"];
      const std::string mutated = fuzz(text, rng);
      try {
        const auto d = parse_blt(mutated);
        (void)to_profile(d);
      } catch (const Error&) {
      } catch (const std::exception& ex) {
        fail("parser_fuzz", i, std::string("foreign exception: ") + ex.what());
      }
    }
  }
  return rep;
}

}  // namespace stvf::test
