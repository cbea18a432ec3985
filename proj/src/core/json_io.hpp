// Copyright (C) 2026 acrlab contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "core/classify.hpp"
#include "core/motif.hpp"
#include "core/verify.hpp"

#include <json.hpp>

namespace acrlab {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
/// Accepts {"num":p,"den":q} or a plain integer.
Rational rational_from_json(const Json& j);

/// {"species":[...], "reactions":[{"reactant":{...},"product":{...},"k":...}]}.
Json network_json(const ReactionNetwork& net, const RateAssignment& k);
/// Throws ParseError (line 0) on malformed documents.
ParsedNetwork network_from_json(const Json& j);

Json signomial_json(const Signomial& s);
Json report_json(const AcrReport& r);
Json atlas_json(std::span<const AtlasEntry> entries);
Json verification_json(const VerificationReport& v);
Json sim_config_json(const SimConfig& c);

}  // namespace acrlab
