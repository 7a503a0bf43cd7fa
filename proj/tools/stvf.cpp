// stvf: Scottish STV counts and paradox forensics.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stvf/error.hpp"
#include "stvf/report.hpp"

namespace {

std::vector<stvf::ParadoxKind> parse_kinds(const std::string& list) {
  std::vector<stvf::ParadoxKind> kinds;
  std::stringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item == "none") continue;
    auto k = stvf::parse_paradox_kind(item);
    if (!k) throw CLI::ValidationError("--kinds", "unknown kind '" + item + "'");
    if (std::find(kinds.begin(), kinds.end(), *k) == kinds.end()) kinds.push_back(*k);
  }
  std::sort(kinds.begin(), kinds.end());
  return kinds;
}

// --witness takes a file path or inline JSON.
std::string witness_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '{') return arg;
  std::ifstream in(arg, std::ios::binary);
  if (!in) throw stvf::Error(stvf::ErrorCode::MalformedWitness, "cannot read witness file '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const stvf::CommandResult& r, bool json) {
  if (r.report) {
    if (json)
      std::cout << stvf::to_json(*r.report).dump(2) << '\n';
    else
      std::cout << stvf::render_text(*r.report);
  }
  if (r.exit_code != 0 && !r.message.empty()) std::cerr << "stvf: " << r.message << '\n';
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Scottish STV tabulation and paradox forensics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("stvf ") + stvf::kToolVersion);

  stvf::CommonOptions common;
  common.tabulate = stvf::tabulate_options_from_env();
  bool json = false;
  std::string file;
  int seats = 0;
  std::string arithmetic = "exact";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", file, "BLT ballot file")->required();
    sub->add_option("--seats", seats, "override the seat count in the file")->check(CLI::PositiveNumber);
    sub->add_option("--precision", common.precision, "decimals shown in tables")->check(CLI::Range(0, 5));
    sub->add_option("--arithmetic", arithmetic, "exact (default) or scottish 5-decimal truncation")
        ->check(CLI::IsMember({"exact", "scottish"}));
    sub->add_flag("--json", json, "JSON output");
  };

  auto* tab = app.add_subcommand("tabulate", "count an election and print votes by round");
  add_common(tab);

  auto* scan = app.add_subcommand("scan", "search for paradox witnesses");
  add_common(scan);
  std::string kinds = "committee,up,down,noshow";
  std::string strategy = "exhaustive";
  stvf::ScanOptions scan_opts;
  scan_opts.search.max_witnesses = 20;
  std::uint64_t max_per_type = 0;
  std::size_t max_shift = 0;
  scan->add_option("--kinds", kinds, "comma list of committee, up, down, noshow (or none)");
  scan->add_option("--max-types", scan_opts.search.max_types, "ballot types touched per witness")
      ->check(CLI::PositiveNumber);
  scan->add_option("--max-per-type", max_per_type, "ballots moved or removed per type (default all)");
  scan->add_option("--max-shift", max_shift, "rank displacement of the moved candidate (default any)");
  scan->add_option("--stride", scan_opts.search.count_stride, "step between tried counts")->check(CLI::PositiveNumber);
  scan->add_option("--budget", scan_opts.search.budget, "tabulations per search");
  scan->add_option("--max-witnesses", scan_opts.search.max_witnesses, "witnesses listed per search, 0 for all");
  scan->add_option("--threads", scan_opts.search.threads, "worker threads, 0 for all cores");
  scan->add_option("--strategy", strategy, "pivot or exhaustive")->check(CLI::IsMember({"pivot", "exhaustive"}));
  scan->add_flag("--strict", scan_opts.strict, "exit 4 when a search runs out of budget");

  auto* cond = app.add_subcommand("condorcet", "pairwise matrix and Condorcet committee");
  add_common(cond);
  std::size_t size = 0;
  cond->add_option("--size", size, "committee size (default: seats)")->check(CLI::PositiveNumber);

  auto* ver = app.add_subcommand("verify", "replay a stored witness");
  add_common(ver);
  std::string witness;
  ver->add_option("--witness", witness, "witness JSON file or inline JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : stvf::exit_code::kParse;
  }

  if (seats > 0) common.seats = seats;
  common.arithmetic = arithmetic == "scottish" ? stvf::Arithmetic::Scottish : stvf::Arithmetic::Exact;

  try {
    if (*tab) return emit(stvf::cmd_tabulate(file, common), json);
    if (*scan) {
      scan_opts.kinds = parse_kinds(kinds);
      if (max_per_type) scan_opts.search.max_per_type = max_per_type;
      if (max_shift) scan_opts.search.max_shift = max_shift;
      scan_opts.search.strategy =
          strategy == "pivot" ? stvf::SearchStrategy::PivotGuided : stvf::SearchStrategy::ExhaustiveBounded;
      return emit(stvf::cmd_scan(file, scan_opts, common), json);
    }
    if (*cond) return emit(stvf::cmd_condorcet(file, size ? std::optional<std::size_t>(size) : std::nullopt, common), json);
    if (*ver) return emit(stvf::cmd_verify(file, witness_text(witness), common), json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "stvf: " << e.what() << '\n';
    return stvf::exit_code::kParse;
  } catch (const stvf::Error& e) {
    std::cerr << "stvf: " << e.what() << '\n';
    return stvf::exit_code::kParse;
  }
  return stvf::exit_code::kParse;
}
