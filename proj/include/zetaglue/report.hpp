#pragma once

#include <string>

#include <json.hpp>

#include "zetaglue/gluing.hpp"
#include "zetaglue/interface_ops.hpp"
#include "zetaglue/terms.hpp"
#include "zetaglue/zreg.hpp"

namespace zg {

using Json = nlohmann::ordered_json;

Json to_json(const Term& t);
Json to_json(const DetReport& r);
Json to_json(const GluingReport& g);
Json to_json(const InterfaceSpectrum& s);
Json to_json(const ZetaPoint& z);

/// Serializes with every float printed as %.17g and keys in insertion order, so equal inputs give
/// byte-identical output.  indent < 0 gives a single line.
std::string dump_json(const Json& j, int indent = 2);

/// Plain-text table of the terms of a report.
std::string format_table(const Json& report);

}  // namespace zg
