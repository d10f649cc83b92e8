#pragma once

// JSON views of the report types. Keys are emitted in a fixed order and every
// rational is a "num/den" string; *_approx fields are rounded doubles for
// reading only.

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "kva/blowup.hpp"
#include "kva/certify.hpp"
#include "kva/constants.hpp"
#include "kva/hyperell.hpp"

namespace kva {

using Json = nlohmann::ordered_json;

Json to_json(const SurfaceType& s);
Json surfaces_json(std::span<const SurfaceType> table);
Json to_json(const ObstructionWitness& w);
Json obstructions_json(const DivisorClass& l_s, int k, int r, const Rat& delta, D2Formula formula,
                       const SearchBounds& bounds, const std::vector<ObstructionWitness>& witnesses);
Json to_json(const PolyClaim& c);
Json to_json(const ConstraintCert& c);
Json to_json(const PublishedClaim& c);
Json to_json(const GridPoint& g);
Json to_json(const ConstantsReport& r);
Json to_json(const InstanceCertificate& c);

/// Canonical text form: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace kva
