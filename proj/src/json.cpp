#include "seqcong/json.hpp"

#include "seqcong/errors.hpp"

namespace seqcong {

namespace {

std::uint64_t as_count(const Json& j, const char* what) {
  if (!j.is_number_unsigned())
    throw DomainError(std::string(what) + " must be a nonnegative integer, got " + j.dump());
  return j.get<std::uint64_t>();
}

std::vector<std::uint64_t> counts(const Json& j, const char* what) {
  if (!j.is_array()) throw DomainError(std::string(what) + " must be a JSON array, got " + j.dump());
  std::vector<std::uint64_t> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_count(v, what));
  return out;
}

Json partition_list(const std::vector<Partition>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (Part v : p.parts()) out.push_back(v);
  return out;
}

Json to_json(const FrequencyMap& f) {
  Json pairs = Json::array();
  for (const auto& [part, mult] : f.entries()) pairs.push_back(Json::array({part, mult}));
  return Json{{"freq", pairs}};
}

Json to_json(const CNotation& c) { return Json{{"c", c.coeffs}}; }

Json to_json(const NNotation& n) {
  return Json{{"n", n.coeffs}, {"A", n.spec.a().to_string()}, {"B", n.spec.b().to_string()}};
}

Json to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return Json(v.convert_to<std::uint64_t>());
  return Json(v.str());
}

Json to_json(const ClosureResult& r) {
  return Json{{"closed", r.closed}, {"member", optional_json(r.member)}, {"removed", optional_json(r.removed)}};
}

Json to_json(const OrderEstimate& r) {
  Json out;
  if (r.unbounded) out["order"] = "growing-with-bound";
  else out["order"] = r.order;
  out["witnesses"] = partition_list(r.witnesses);
  return out;
}

Json to_json(const ModulusVerdict& r) {
  const char* failure = "none";
  if (r.failure == ModulusVerdict::Failure::ShiftLeavesIdeal) failure = "shift-leaves-ideal";
  if (r.failure == ModulusVerdict::Failure::NotAShift) failure = "not-a-shift";
  return Json{{"holds", r.holds}, {"failure", failure}, {"witness", optional_json(r.witness)}};
}

Json to_json(const LSet& r) {
  return Json{{"members", partition_list(r.members)}, {"infinite_within_bound", r.infinite_within_bound}};
}

Json to_json(const LinkReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    entries.push_back(Json{{"tail", to_json(e.tail)},
                           {"valid_spans", e.valid_spans},
                           {"span", e.span ? Json(*e.span) : Json(nullptr)},
                           {"linking_set", partition_list(e.linking_set)},
                           {"witness", optional_json(e.witness)}});
  }
  return Json{{"ideal", r.ideal.to_string()},
              {"modulus", r.modulus},
              {"verdict", to_string(r.verdict)},
              {"witness", optional_json(r.witness)},
              {"L", to_json(r.L)},
              {"entries", entries}};
}

Partition partition_from_json(const Json& j) {
  auto parts = counts(j, "partition");
  return Partition(std::move(parts));
}

FrequencyMap frequency_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("freq")) throw DomainError("expected {\"freq\":[[part,mult],...]}");
  FrequencyMap out;
  for (const auto& pair : j.at("freq")) {
    auto pm = counts(pair, "frequency entry");
    if (pm.size() != 2) throw DomainError("frequency entries are [part, multiplicity] pairs");
    if (pm[0] == 0) throw DomainError("frequency parts must be positive");
    out.add(pm[0], pm[1]);
  }
  return out;
}

CNotation cnotation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("c")) throw DomainError("expected {\"c\":[...]}");
  return CNotation{counts(j.at("c"), "c-notation")};
}

NNotation nnotation_from_json(const Json& j, const GenSpec& fallback) {
  if (!j.is_object() || !j.contains("n")) throw DomainError("expected {\"n\":[...]}");
  Sequence a = fallback.a();
  Sequence b = fallback.b();
  if (j.contains("A")) a = Sequence::parse(j.at("A").get<std::string>());
  if (j.contains("B")) b = Sequence::parse(j.at("B").get<std::string>());
  return NNotation{GenSpec(a, b, fallback.horizon()), counts(j.at("n"), "n-notation")};
}

Partition any_partition_from_json(const Json& j) {
  if (j.is_array()) return partition_from_json(j);
  if (j.is_object() && j.contains("freq")) return frequency_from_json(j).to_partition();
  if (j.is_object() && j.contains("c")) return from_c_notation(cnotation_from_json(j));
  throw DomainError("expected a partition, {\"freq\":...} or {\"c\":...}, got " + j.dump());
}

}  // namespace seqcong
