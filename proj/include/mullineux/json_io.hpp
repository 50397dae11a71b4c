#pragma once

#include <string>
#include <vector>

#include <json.hpp>
#include "mullineux/barcores.hpp"
#include "mullineux/cores.hpp"
#include "mullineux/harness.hpp"
#include "mullineux/partition.hpp"
#include "mullineux/qseries.hpp"
#include "mullineux/symbol.hpp"

namespace mullineux::json_io {

using nlohmann::json;

// Every from_json validates through the library constructors and throws
// std::invalid_argument on malformed input.

json to_json(const Partition& p);
Partition partition_from_json(const json& j);

json to_json(const MullineuxSymbol& s);
MullineuxSymbol symbol_from_json(const json& j);

json to_json(const NVector& v);
NVector nvector_from_json(const json& j);

json to_json(const CoreDecomposition& d);
CoreDecomposition core_decomposition_from_json(const json& j);

json to_json(const Abacus& a);
Abacus abacus_from_json(const json& j);

json to_json(const BarCoreDecomposition& d);

json to_json(const Series1& s);
Series1 series1_from_json(const json& j);

/// Terms sorted by (n, w).
json to_json(const Series2& s);
Series2 series2_from_json(const json& j, int truncation);

json to_json(const harness::VerificationReport& r);
harness::VerificationReport report_from_json(const json& j);

} // namespace mullineux::json_io
