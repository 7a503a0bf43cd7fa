#include <doctest.h>

#include <cstdlib>

#include "stvf/report.hpp"
#include "stvf/witness_json.hpp"
#include "support/support.hpp"

using namespace stvf;

namespace {

std::string data(const char* name) { return std::string(STVF_TEST_DATA_DIR) + "/" + name; }

const char* kRaiseBWitness =
    R"({"kind":"upward","X":1,"seats":2,"moves":[{"source":[3,1],"count":18,"new":[1,3]},)"
    R"({"source":[3,2,1],"count":4,"new":[1,3,2]}]})";

std::vector<std::vector<std::string>> cells(const CountSection& c, int precision = 2) {
  return render_cells(c.table, precision);
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("tabulate reproduces the grids") {
    CommonOptions opts;
    auto r = cmd_tabulate(data("example.blt"), opts);
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.report);
    CHECK(cells(r.report->counts.at(0))[3] == std::vector<std::string>{"127", "127", "161.25", "175.25*"});
    CHECK(r.report->winners == std::vector<CandidateId>{1, 3});
    CHECK(r.report->quota == FixedVote::from_int(167));

    opts.seats = 1;
    r = cmd_tabulate(data("example.blt"), opts);
    REQUIRE(r.report);
    CHECK(cells(r.report->counts.at(0))[2] == std::vector<std::string>{"134", "144", "253*"});
    const auto text = render_text(*r.report);
    CHECK(text.find("253*") != std::string::npos);
    CHECK(text.find("Winners: C") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CommonOptions opts;
    auto r = cmd_tabulate(data("missing.blt"), opts);
    CHECK(r.exit_code == exit_code::kParse);
    CHECK(r.message.find("missing.blt") != std::string::npos);
    CHECK(cmd_tabulate(data("bad_id.blt"), opts).exit_code == exit_code::kParse);

    opts.seats = 9;
    CHECK(cmd_tabulate(data("example.blt"), opts).exit_code == exit_code::kTabulation);

    CommonOptions strict;
    strict.tabulate.strict_ties = true;
    r = cmd_tabulate(data("tie.blt"), strict);
    CHECK(r.exit_code == exit_code::kTabulation);
    CHECK(r.message.find("round 1") != std::string::npos);
    r = cmd_tabulate(data("tie.blt"), CommonOptions{});
    CHECK(r.exit_code == 0);
    CHECK(r.report->counts[0].tie_broken);

    CommonOptions wide;
    wide.precision = 7;
    CHECK(cmd_tabulate(data("example.blt"), wide).exit_code == exit_code::kParse);
  }

  TEST_CASE("scan reports every detector") {
    ScanOptions scan;
    scan.kinds = {ParadoxKind::CommitteeSize, ParadoxKind::Upward, ParadoxKind::Downward, ParadoxKind::NoShow};
    scan.search.max_types = 2;
    scan.search.max_per_type = 22;
    scan.search.max_shift = 3;
    scan.search.max_witnesses = 5;
    const auto r = cmd_scan(data("example.blt"), scan, CommonOptions{});
    REQUIRE(r.exit_code == 0);
    REQUIRE(r.report->paradoxes.size() == 4);
    const auto& ps = r.report->paradoxes;

    REQUIRE(ps[0].witnesses.size() == 1);
    CHECK(ps[0].witnesses[0].spec.seats_prime == 1);
    CHECK(ps[0].witnesses[0].missing == std::vector<CandidateId>{2});

    CHECK(ps[1].kind == ParadoxKind::Upward);
    REQUIRE_FALSE(ps[1].witnesses.empty());
    CHECK(ps[1].witnesses[0].spec.x == CandidateId{1});

    CHECK(ps[2].kind == ParadoxKind::Downward);
    CHECK(ps[2].witnesses.empty());
    CHECK(ps[2].complete);

    CHECK(ps[3].kind == ParadoxKind::NoShow);
    bool a_over_d = false;
    for (const auto& w : ps[3].witnesses) a_over_d = a_over_d || (w.spec.x == CandidateId{0} && w.spec.y == CandidateId{3});
    CHECK(a_over_d);

    const auto text = render_text(*r.report);
    CHECK(text.find("downward monotonicity: none found within bounds") != std::string::npos);
    CHECK(text.find("\"kind\":\"upward\"") != std::string::npos);

    // every listed witness replays through verify
    const auto profile = test::example_profile();
    for (const auto& p : ps)
      for (const auto& w : p.witnesses) {
        const auto v = cmd_verify(data("example.blt"), witness_to_json(w.spec, profile).dump(), CommonOptions{});
        CHECK(v.exit_code == 0);
      }
  }

  TEST_CASE("scan edge cases") {
    ScanOptions none;
    auto r = cmd_scan(data("example.blt"), none, CommonOptions{});
    CHECK(r.exit_code == 0);
    CHECK(r.report->paradoxes.empty());
    CHECK(r.report->counts.empty());
    CHECK(r.report->total_ballots == 499);

    ScanOptions tight;
    tight.kinds = {ParadoxKind::Upward};
    tight.search.max_types = 2;
    tight.search.budget = 10;
    r = cmd_scan(data("example.blt"), tight, CommonOptions{});
    CHECK(r.exit_code == 0);
    CHECK_FALSE(r.report->paradoxes[0].complete);
    tight.strict = true;
    r = cmd_scan(data("example.blt"), tight, CommonOptions{});
    CHECK(r.exit_code == exit_code::kBudget);
    CHECK(r.report);
  }

  TEST_CASE("condorcet command") {
    auto r = cmd_condorcet(data("cycle3.blt"), 1, CommonOptions{});
    REQUIRE(r.exit_code == 0);
    CHECK_FALSE(r.report->condorcet->committee);
    CHECK(render_text(*r.report).find("COMMITTEE-ABSENT") != std::string::npos);
    CHECK(to_json(*r.report)["condorcet"]["committee_absent"] == true);

    r = cmd_condorcet(data("example.blt"), std::nullopt, CommonOptions{});
    REQUIRE(r.exit_code == 0);
    CHECK(r.report->condorcet->size == 2);
    CHECK(r.report->condorcet->matrix(1, 0) == 268);

    CHECK(cmd_condorcet(data("example.blt"), 9, CommonOptions{}).exit_code == exit_code::kParse);
  }

  TEST_CASE("verify replays stored witnesses") {
    auto r = cmd_verify(data("example.blt"), kRaiseBWitness, CommonOptions{});
    REQUIRE(r.exit_code == 0);
    const auto& v = *r.report->verify;
    CHECK(v.valid);
    REQUIRE(v.after);
    CHECK(cells(*v.after) == std::vector<std::vector<std::string>>{
                                 {"106", "163", "168.60*"}, {"154", "154", "163.40"}, {"134", "182*", ""}, {"105", "", ""}});

    std::string fewer = kRaiseBWitness;
    fewer.replace(fewer.find("\"count\":4"), 9, "\"count\":3");
    r = cmd_verify(data("example.blt"), fewer, CommonOptions{});
    CHECK(r.exit_code == exit_code::kInvalidWitness);
    REQUIRE(r.report->verify->after);
    CHECK(r.report->verify->after->winners.size() == 2);

    r = cmd_verify(data("example.blt"), R"({"kind":"upward","X":1,"moves":[]})", CommonOptions{});
    CHECK(r.exit_code == exit_code::kInvalidWitness);

    r = cmd_verify(data("example.blt"), R"({"kind":"upward","X":0,"moves":[]})", CommonOptions{});
    CHECK(r.exit_code == exit_code::kInvalidWitness);
    CHECK(r.report->verify->reason.find("XNotAWinner") != std::string::npos);

    CHECK(cmd_verify(data("example.blt"), "{not json", CommonOptions{}).exit_code == exit_code::kParse);
    CHECK(cmd_verify(data("example.blt"), R"({"kind":"upward"})", CommonOptions{}).exit_code == exit_code::kParse);

    r = cmd_verify(data("example.blt"), R"({"kind":"committee_size","Sprime":1})", CommonOptions{});
    CHECK(r.exit_code == 0);
    r = cmd_verify(data("example.blt"), R"({"kind":"noshow","X":0,"Y":3,"removals":[{"ranking":[2,0],"count":29}]})",
                   CommonOptions{});
    CHECK(r.exit_code == 0);
    CHECK(r.report->verify->after->quota == FixedVote::from_int(157));
  }

  TEST_CASE("JSON carries full precision") {
    CommonOptions scottish;
    scottish.arithmetic = Arithmetic::Scottish;
    const auto r = cmd_verify(data("example.blt"), kRaiseBWitness, scottish);
    REQUIRE(r.exit_code == 0);
    const auto j = to_json(*r.report);
    const auto b = j["verify"]["after"]["rows"][1]["cells"][2]["votes"];
    CHECK(b.dump() == "163.39474");
    CHECK(j["verify"]["after"]["rows"][0]["cells"][2]["elected"] == true);
    CHECK(j["verify"]["after"]["rows"][3]["cells"][1].is_null());
    CHECK(render_text(*r.report).find("163.39") != std::string::npos);
    CHECK(j["arithmetic"] == "scottish");
  }

  TEST_CASE("reports are reproducible") {
    ScanOptions scan;
    scan.kinds = {ParadoxKind::CommitteeSize, ParadoxKind::Upward, ParadoxKind::NoShow};
    scan.search.max_per_type = 30;
    const auto a = cmd_scan(data("example.blt"), scan, CommonOptions{});
    const auto b = cmd_scan(data("example.blt"), scan, CommonOptions{});
    CHECK(render_text(*a.report) == render_text(*b.report));
    CHECK(to_json(*a.report).dump() == to_json(*b.report).dump());
  }

  TEST_CASE("strict ties from the environment") {
    ::setenv("STVF_STRICT_TIES", "1", 1);
    CHECK(tabulate_options_from_env().strict_ties);
    ::setenv("STVF_STRICT_TIES", "0", 1);
    CHECK_FALSE(tabulate_options_from_env().strict_ties);
    ::unsetenv("STVF_STRICT_TIES");
    CHECK_FALSE(tabulate_options_from_env().strict_ties);
  }
}
