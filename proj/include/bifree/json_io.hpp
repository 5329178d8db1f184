#pragma once

#include <json.hpp>

#include "bifree/bnc.hpp"
#include "bifree/conditional.hpp"
#include "bifree/mult_fn.hpp"
#include "bifree/partition.hpp"
#include "bifree/series.hpp"
#include "bifree/transforms.hpp"

namespace bifree {

using Json = nlohmann::ordered_json;

// Exact rationals travel as decimal strings: {"num":"-5","den":"3"}.
Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);

// Partitions are sorted lists of sorted integer lists.
Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

// BNC positions are tagged {"side":"l"|"r","index":k}.
Json to_json(const BNCPartition& p);
BNCPartition bnc_from_json(const Json& j);

Json to_json(const Series1& s);
Series1 series1_from_json(const Json& j);

Json to_json(const Series2& s);
Series2 series2_from_json(const Json& j);

Json to_json(const MultFn& f);
MultFn mult_fn_from_json(const Json& j);

Json to_json(const PairSpec& p);
PairSpec pair_spec_from_json(const Json& j);

Json to_json(const MomentSpec& m);
MomentSpec moment_spec_from_json(const Json& j);

Json to_json(const ConditionalPairSpec& cs);
ConditionalPairSpec conditional_from_json(const Json& j);

}  // namespace bifree
