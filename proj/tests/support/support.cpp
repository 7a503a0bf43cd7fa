#include "support.hpp"

#include <algorithm>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace stvf::test {

namespace {

struct Row {
  std::uint64_t count;
  const char* letters;
};

constexpr Row kExampleRows[] = {{96, "AB"},  {10, "ACDB"}, {4, "BCA"}, {128, "BADC"}, {68, "CA"},
                           {62, "CBA"}, {4, "CDBA"},  {57, "DAC"}, {52, "DCB"},  {18, "DB"}};

}  // namespace

Ranking rk(const PreferenceProfile& p, std::string_view letters) {
  Ranking r;
  for (char ch : letters) r.push_back(id(p, std::string(1, ch)));
  return r;
}

CandidateId id(const PreferenceProfile& p, std::string_view name) {
  auto c = p.find(name);
  if (!c) throw std::invalid_argument("no candidate " + std::string(name));
  return *c;
}

PreferenceProfile example_profile() {
  std::vector<BallotType> ballots;
  for (const auto& row : kExampleRows) {
    Ranking r;
    for (const char* c = row.letters; *c; ++c) r.push_back(static_cast<CandidateId>(*c - 'A'));
    ballots.push_back({r, row.count});
  }
  return validate_profile({"A", "B", "C", "D"}, ballots);
}

std::string example_blt() {
  std::string s = "4 2\n";
  for (const auto& row : kExampleRows) {
    s += std::to_string(row.count);
    for (const char* c = row.letters; *c; ++c) s += " " + std::to_string(*c - 'A' + 1);
    s += " 0\n";
  }
  s += "0\n\"A\"\n\"B\"\n\"C\"\n\"D\"\n\"Four-candidate example\"\n";
  return s;
}

std::vector<BallotMove> raise_b_moves(const PreferenceProfile& p) {
  return {{rk(p, "DB"), 18, rk(p, "BD")}, {rk(p, "DCB"), 4, rk(p, "BDC")}};
}

RandomElection random_election(std::mt19937_64& rng, const GenSpec& spec) {
  auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  const std::size_t n = uniform(spec.min_candidates, spec.max_candidates);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, static_cast<char>('A' + i));

  const std::size_t types = uniform(1, spec.max_types);
  const std::uint64_t per_type = std::max<std::uint64_t>(1, spec.max_ballots / types);
  std::vector<BallotType> ballots;
  Ranking perm(n);
  for (std::size_t t = 0; t < types; ++t) {
    for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<CandidateId>(i);
    std::shuffle(perm.begin(), perm.end(), rng);
    const std::size_t len = uniform(1, n);
    ballots.push_back({Ranking(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(len)), uniform(1, per_type)});
  }
  RandomElection e{validate_profile(names, ballots), static_cast<int>(uniform(1, n))};
  return e;
}

std::optional<std::vector<CandidateId>> reference_winners(const PreferenceProfile& p, int seats) {
  using Q = boost::multiprecision::cpp_rational;
  struct Paper {
    const Ranking* ranking;
    std::size_t at;
    Q weight;
  };
  enum State { Hopeful, Elected, Excluded };

  const std::size_t n = p.num_candidates();
  std::vector<Paper> papers;
  for (const auto& b : p.ballot_types())
    for (std::uint64_t i = 0; i < b.count; ++i) papers.push_back({&b.ranking, 0, Q(1)});
  const Q quota = Q(static_cast<long long>(papers.size() / (static_cast<std::size_t>(seats) + 1) + 1));

  std::vector<State> state(n, Hopeful);
  auto move_on = [&](Paper& pp) {
    while (pp.at < pp.ranking->size() && state[(*pp.ranking)[pp.at]] != Hopeful) ++pp.at;
  };
  auto holder = [](const Paper& pp) -> std::optional<CandidateId> {
    if (pp.at >= pp.ranking->size()) return std::nullopt;
    return (*pp.ranking)[pp.at];
  };

  std::vector<CandidateId> winners;
  while (winners.size() < static_cast<std::size_t>(seats)) {
    std::vector<Q> tally(n);
    for (const auto& pp : papers)
      if (auto h = holder(pp); h && state[*h] == Hopeful) tally[*h] += pp.weight;
    std::vector<CandidateId> hopeful;
    for (CandidateId c = 0; c < n; ++c)
      if (state[c] == Hopeful) hopeful.push_back(c);

    std::vector<CandidateId> over;
    for (auto c : hopeful)
      if (tally[c] >= quota) over.push_back(c);
    if (!over.empty()) {
      std::stable_sort(over.begin(), over.end(), [&](auto a, auto b) { return tally[a] > tally[b]; });
      for (auto c : over) state[c] = Elected;
      for (auto c : over) {
        winners.push_back(c);
        if (winners.size() == static_cast<std::size_t>(seats)) break;
        const Q ratio = (tally[c] - quota) / tally[c];
        for (auto& pp : papers) {
          if (holder(pp) != c) continue;
          pp.weight *= ratio;
          move_on(pp);
        }
      }
      continue;
    }
    if (hopeful.size() == static_cast<std::size_t>(seats) - winners.size()) {
      winners.insert(winners.end(), hopeful.begin(), hopeful.end());
      break;
    }
    Q low = tally[hopeful.front()];
    for (auto c : hopeful) low = std::min(low, tally[c]);
    std::vector<CandidateId> lowest;
    for (auto c : hopeful)
      if (tally[c] == low) lowest.push_back(c);
    if (lowest.size() > 1) return std::nullopt;
    state[lowest[0]] = Excluded;
    for (auto& pp : papers)
      if (holder(pp) == lowest[0]) move_on(pp);
  }
  std::sort(winners.begin(), winners.end());
  return winners;
}

std::vector<std::vector<std::uint64_t>> brute_pairwise(const PreferenceProfile& p) {
  const std::size_t n = p.num_candidates();
  std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(n, 0));
  for (const auto& b : p.ballot_types()) {
    for (std::uint64_t voter = 0; voter < b.count; ++voter) {
      for (CandidateId a = 0; a < n; ++a) {
        for (CandidateId c = 0; c < n; ++c) {
          if (a == c) continue;
          auto ia = std::find(b.ranking.begin(), b.ranking.end(), a);
          auto ic = std::find(b.ranking.begin(), b.ranking.end(), c);
          const bool a_in = ia != b.ranking.end(), c_in = ic != b.ranking.end();
          if ((a_in && !c_in) || (a_in && c_in && ia < ic)) ++m[a][c];
        }
      }
    }
  }
  return m;
}

std::optional<std::vector<CandidateId>> brute_committee(const PreferenceProfile& p, std::size_t k) {
  const auto m = brute_pairwise(p);
  const std::size_t n = p.num_candidates();
  std::optional<std::vector<CandidateId>> found;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    bool ok = true;
    for (CandidateId a = 0; a < n && ok; ++a)
      for (CandidateId b = 0; b < n && ok; ++b)
        if ((mask >> a & 1) && !(mask >> b & 1) && m[a][b] <= m[b][a]) ok = false;
    if (!ok) continue;
    if (found) throw std::logic_error("two Condorcet committees of one size");
    std::vector<CandidateId> members;
    for (CandidateId a = 0; a < n; ++a)
      if (mask >> a & 1) members.push_back(a);
    found = members;
  }
  return found;
}

}  // namespace stvf::test
