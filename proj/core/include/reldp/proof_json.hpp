#ifndef RELDP_PROOF_JSON_HPP
#define RELDP_PROOF_JSON_HPP

#include <json.hpp>

#include "reldp/proof.hpp"

namespace reldp {

// JSON proof document with byte-stable key order. Terms are
// {"var": name} | {"fun": name, "args": [...]}.

using Json = nlohmann::ordered_json;

Json term_to_json(const Term& t);
Term term_from_json(const Json& j);

Json rule_to_json(const Rule& r);
Rule rule_from_json(const Json& j);

Json trs_to_json(const Trs& t);
Trs trs_from_json(const Json& j);

Json dpp_to_json(const RelativeDpp& d);
RelativeDpp dpp_from_json(const Json& j);

Json witness_to_json(const ChainWitness& w);
ChainWitness witness_from_json(const Json& j);

Json proof_to_json(const ProofNode& n);
ProofNode proof_from_json(const Json& j);

}  // namespace reldp

#endif  // RELDP_PROOF_JSON_HPP
