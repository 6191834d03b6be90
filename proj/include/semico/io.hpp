#pragma once

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "semico/cyclic.hpp"
#include "semico/extensions.hpp"

namespace semico::io {

using Json = nlohmann::json;

/// {"kind": "monoid", "size": n, "op": [[...]], "labels": [...]} or one of
/// the names "C<m>", "O2".
FiniteMonoid parse_monoid(const Json& j);
/// {"size": n, "add": [[...]]}; "B", "boolean", "Z/n x ..." (finite names
/// become tables); "N^k", "Z^r x Z/d x ...", "D(m)"; {"sum": [...]}.
Carrier parse_carrier(const Json& j);
/// {"monoid": ..., "carrier": ..., "action": [...] | "trivial"}. Finite
/// carriers take action[x][a]; structured carriers one matrix per element.
MSemimodule parse_semimodule(const Json& j);
/// {"kind": "cyclic", "m", "moduli", "t", "ugens", "module", "carrier"} or
/// {"kind": "cyclic", "semimodule": {...}}.
CyclicData parse_cyclic(const Json& j);
/// {"kind": "extension", "semimodule", "middle", "kappa", "sigma", "reps"}.
SchreierExtension parse_extension(const Json& j);
IntMatrix parse_matrix(const Json& j);
/// {"n": n, "values": {"x,y": a}} keyed by monoid labels; absent tuples are 0.
NormalizedCochain parse_cochain(const Json& j, const CochainComplex& c);

Json monoid_json(const FiniteMonoid& m);
Json carrier_json(const FiniteAbelianMonoid& a);
Json matrix_json(const IntMatrix& m);
Json group_json(const AbGroupPresentation& g);
Json cochain_json(const CochainComplex& c, const NormalizedCochain& f);
/// "x,y" -> a for the non-zero values, in position order.
std::string cochain_text(const CochainComplex& c, const NormalizedCochain& f);
/// Finite semimodules only.
Json semimodule_json(const MSemimodule& s);
Json extension_json(const SchreierExtension& e);

using Input = std::variant<FiniteMonoid, Carrier, MSemimodule, CyclicData, SchreierExtension>;

/// Dispatches on "kind" and on the keys present.
Input parse_input(const Json& j);
Input parse_input_text(const std::string& text);
Input load_input(const std::string& path);

}  // namespace semico::io
