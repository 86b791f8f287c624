#pragma once

#include <json.hpp>

#include "seqcong/bijections.hpp"
#include "seqcong/enumeration.hpp"
#include "seqcong/generalized.hpp"
#include "seqcong/ideal.hpp"
#include "seqcong/partition.hpp"

namespace seqcong {

using Json = nlohmann::ordered_json;

// Wire forms:
//   partition   [7,5,5,4,1]            (π_0 is [])
//   frequency   {"freq":[[1,4],[2,4]]}
//   c-notation  {"c":[2,1,0,1]}
//   n-notation  {"n":[1,2],"A":"nat","B":"pow:2"}

Json to_json(const Partition& p);
Json to_json(const FrequencyMap& f);
Json to_json(const CNotation& c);
Json to_json(const NNotation& n);
Json to_json(const BigInt& v);  // a number when it fits in 64 bits, else a decimal string
Json to_json(const ClosureResult& r);
Json to_json(const OrderEstimate& r);
Json to_json(const ModulusVerdict& r);
Json to_json(const LSet& r);
Json to_json(const LinkReport& r);

/// Throws DomainError unless j is an array of positive integers in weakly
/// decreasing order.
Partition partition_from_json(const Json& j);
FrequencyMap frequency_from_json(const Json& j);
CNotation cnotation_from_json(const Json& j);
/// "A"/"B" inside the object win over `fallback`.
NNotation nnotation_from_json(const Json& j, const GenSpec& fallback);

/// Any of partition, frequency or c-notation, converted to a partition.
Partition any_partition_from_json(const Json& j);

}  // namespace seqcong
