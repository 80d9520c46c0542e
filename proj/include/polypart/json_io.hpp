#pragma once

#include <string>

#include <json.hpp>

#include "polypart/cone.hpp"
#include "polypart/genfun.hpp"
#include "polypart/oracle.hpp"
#include "polypart/verification.hpp"
#include "polypart/volume.hpp"

// Canonical JSON forms. Exponent vectors and integer matrices are integer
// arrays; every coefficient, volume and count is a decimal string so no
// precision is lost.
namespace polypart {

using nlohmann::json;

void to_json(json& j, const MultiPolynomial& p);
void from_json(const json& j, MultiPolynomial& p);
void to_json(json& j, const TruncatedSeries& s);
void from_json(const json& j, TruncatedSeries& s);
void to_json(json& j, const RationalGF& g);
void from_json(const json& j, RationalGF& g);
void to_json(json& j, const GeneratorCone& g);
void from_json(const json& j, GeneratorCone& g);
void to_json(json& j, const HalfspaceCone& h);
void from_json(const json& j, HalfspaceCone& h);
void to_json(json& j, const VerificationReport& r);
void to_json(json& j, const ConjectureRow& row);

/// One integer array per line, lexicographic order.
std::string to_json_lines(const PointSet& p);

}  // namespace polypart
