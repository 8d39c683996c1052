#pragma once

#include <string>

#include "json.hpp"

#include "cmfock/characters.hpp"
#include "cmfock/fock.hpp"
#include "cmfock/symbols.hpp"

namespace cmfock::io {

using Json = nlohmann::json;

// Coefficients travel as decimal strings; structural integers stay numeric.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json multipartition_to_json(const Multipartition& mp);
Multipartition multipartition_from_json(const Json& j);

Json charge_to_json(const Charge& s);
Charge charge_from_json(const Json& j, ChargeFlavor flavor = ChargeFlavor::general);
Charge charge_from_string(const std::string& csv,
                          ChargeFlavor flavor = ChargeFlavor::general);

Json fock_to_json(const FockVector& v);
FockVector fock_from_json(const Json& j);

// Rows store the non-frozen suffix for the semi-infinite flavor; full rows
// are accepted on input.
Json symbol_to_json(const Symbol& S);
Symbol symbol_from_json(const Json& j);

Json word_to_json(const MonomialWord& w);
MonomialWord word_from_json(const Json& j);

Json character_to_json(const Character& chi);

}  // namespace cmfock::io
