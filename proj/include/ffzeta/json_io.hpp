#pragma once

// Parsers and serializers for the stable JSON formats: polynomial systems,
// isocrystal matrices, factored zeta data, zeta functions and polygons.
// Parsing is strict: unknown keys are rejected.

#include <string>

#include <json.hpp>

#include "ffzeta/congruence.hpp"
#include "ffzeta/isocrystal.hpp"
#include "ffzeta/polygon.hpp"
#include "ffzeta/polysys.hpp"
#include "ffzeta/zeta.hpp"

namespace ffz {

using ojson = nlohmann::ordered_json;

PolySystem parse_system_json(const std::string& text);
FIsocrystal parse_isocrystal_json(const std::string& text);
WeilData parse_weil_json(const std::string& text);

// "7", "-3" or "3/4"
mpq_class parse_rational(const std::string& text);

// integers as JSON numbers while they fit, decimal strings beyond
ojson mpz_to_json(const mpz_class& x);
ojson mpq_pair(const mpq_class& x);        // always [num, den]
ojson rational_or_int(const mpq_class& x); // bare integer when den == 1

ojson polygon_to_json(const Polygon& poly);
ojson zeta_to_json(const ZetaFunction& zeta);
ojson report_to_json(const CongruenceReport& report);

} // namespace ffz
