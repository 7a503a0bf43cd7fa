#include "stvf/witness_json.hpp"

#include "stvf/error.hpp"

namespace stvf {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::MalformedWitness, what); }

Ranking read_ranking(const json& j, const PreferenceProfile& profile, const char* field) {
  if (!j.is_array()) bad(std::string(field) + " must be an array of candidate ids");
  Ranking r;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) bad(std::string(field) + " holds a non-id entry");
    const auto id = v.get<std::uint64_t>();
    if (id >= profile.num_candidates()) bad(std::string(field) + " holds unknown id " + std::to_string(id));
    r.push_back(static_cast<CandidateId>(id));
  }
  return r;
}

std::uint64_t read_count(const json& obj) {
  auto it = obj.find("count");
  if (it == obj.end() || !it->is_number_unsigned()) bad("count must be a nonnegative integer");
  return it->get<std::uint64_t>();
}

std::optional<CandidateId> read_id(const json& doc, const char* key, const PreferenceProfile& profile) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_unsigned()) bad(std::string(key) + " must be a candidate id");
  const auto id = it->get<std::uint64_t>();
  if (id >= profile.num_candidates()) bad(std::string(key) + " is not a candidate id");
  return static_cast<CandidateId>(id);
}

}  // namespace

json witness_to_json(const WitnessSpec& spec, const PreferenceProfile& profile) {
  json j;
  j["kind"] = to_string(spec.kind);
  j["seats"] = spec.seats;
  if (spec.x) j["X"] = *spec.x;
  if (spec.y) j["Y"] = *spec.y;
  if (spec.seats_prime) j["Sprime"] = *spec.seats_prime;
  j["moves"] = json::array();
  for (const auto& m : spec.moves) j["moves"].push_back({{"source", m.source}, {"count", m.count}, {"new", m.target}});
  j["removals"] = json::array();
  for (const auto& r : spec.removals) j["removals"].push_back({{"ranking", r.ranking}, {"count", r.count}});
  j["candidates"] = json::array();
  for (const auto& c : profile.candidates()) j["candidates"].push_back(c.name);
  return j;
}

WitnessSpec witness_from_json(const json& doc, const PreferenceProfile& profile) {
  if (!doc.is_object()) bad("witness must be a JSON object");
  WitnessSpec spec;

  auto kind = doc.find("kind");
  if (kind == doc.end() || !kind->is_string()) bad("kind is required");
  auto parsed = parse_paradox_kind(kind->get<std::string>());
  if (!parsed) bad("unknown kind '" + kind->get<std::string>() + "'");
  spec.kind = *parsed;

  if (auto s = doc.find("seats"); s != doc.end()) {
    if (!s->is_number_integer()) bad("seats must be an integer");
    spec.seats = s->get<int>();
  }
  spec.x = read_id(doc, "X", profile);
  spec.y = read_id(doc, "Y", profile);
  if (auto sp = doc.find("Sprime"); sp != doc.end() && !sp->is_null()) {
    if (!sp->is_number_integer()) bad("Sprime must be an integer");
    spec.seats_prime = sp->get<int>();
  }

  if (auto moves = doc.find("moves"); moves != doc.end()) {
    if (!moves->is_array()) bad("moves must be an array");
    for (const auto& m : *moves) {
      if (!m.is_object() || !m.contains("source") || !m.contains("new")) bad("each move needs source, count, new");
      spec.moves.push_back({read_ranking(m["source"], profile, "source"), read_count(m),
                            read_ranking(m["new"], profile, "new")});
    }
  }
  if (auto removals = doc.find("removals"); removals != doc.end()) {
    if (!removals->is_array()) bad("removals must be an array");
    for (const auto& r : *removals) {
      if (!r.is_object() || !r.contains("ranking")) bad("each removal needs ranking and count");
      spec.removals.push_back({read_ranking(r["ranking"], profile, "ranking"), read_count(r)});
    }
  }

  if (auto names = doc.find("candidates"); names != doc.end()) {
    if (!names->is_array() || names->size() != profile.num_candidates()) bad("candidate table does not match the election");
    for (std::size_t i = 0; i < names->size(); ++i)
      if (!(*names)[i].is_string() || (*names)[i].get<std::string>() != profile.name(static_cast<CandidateId>(i)))
        bad("candidate table does not match the election");
  }

  switch (spec.kind) {
    case ParadoxKind::CommitteeSize:
      if (!spec.seats_prime) bad("committee_size witness needs Sprime");
      break;
    case ParadoxKind::Upward:
    case ParadoxKind::Downward:
      if (!spec.x) bad("move witness needs X");
      break;
    case ParadoxKind::NoShow:
      if (!spec.x || !spec.y) bad("noshow witness needs X and Y");
      break;
  }
  return spec;
}

WitnessSpec parse_witness(std::string_view text, const PreferenceProfile& profile) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  return witness_from_json(doc, profile);
}

}  // namespace stvf
