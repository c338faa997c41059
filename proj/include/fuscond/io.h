#pragma once

#include <string>

#include "fuscond/condensation.h"
#include "json.hpp"

namespace fuscond {

using Json = nlohmann::json;

// Scalars are integers, {"cyclotomic": {"order", "coeffs": ["p/q", ...]}} or {"re", "im"}.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j);

Json ring_to_json(const BasedRing& ring);
BasedRing ring_from_json(const Json& j);

Json mtc_to_json(const ModularData& md);
ModularData mtc_from_json(const Json& j);

Json bundle_to_json(const CondensationBundle& b);
CondensationBundle bundle_from_json(const Json& j);

/// "ring.v1", "mtc.v1" or "bundle.v1"; throws ParseError otherwise.
std::string schema_of(const Json& j);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump_canonical(const Json& j);

Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fuscond
