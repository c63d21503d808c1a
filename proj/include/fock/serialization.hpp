#pragma once

// Canonical text and JSON forms. Text prints numerator terms in graded-lex
// order over the (1+p^2)^N denominator and parses back bit-exactly; JSON
// carries coefficients as exact "a/b" strings for the same reason.

#include <string>

#include "json.hpp"

#include "fock/checks.hpp"
#include "fock/eigenbasis.hpp"
#include "fock/linear_operator.hpp"
#include "fock/sphere.hpp"

namespace fock {

std::string to_text(const Polynomial3& p);
std::string to_text(const PolyField& f);
std::string to_text(const RescaledField& f);

// Inverse of to_text(PolyField); throws std::invalid_argument on bad input.
PolyField polyfield_from_text(const std::string& text);

nlohmann::json polyfield_to_json(const PolyField& f);
PolyField polyfield_from_json(const nlohmann::json& j);

nlohmann::json rescaled_to_json(const RescaledField& f);

nlohmann::json operator_to_json(const LinearOperator& op);
LinearOperator operator_from_json(const nlohmann::json& j);

// Builds an applicable operator from an expression-tree spec; alias for the
// JSON path, which already rejects malformed trees.
LinearOperator build_operator(const nlohmann::json& spec);

// State envelope {n, l, m, k, space, scale} plus the field payload.
nlohmann::json state_to_json(const QuantumState& s, const std::string& space,
                             int scale);

nlohmann::json check_report_to_json(const CheckReport& r);

nlohmann::json sphere_point_to_json(const SpherePoint& s);
SpherePoint sphere_point_from_json(const nlohmann::json& j);

}  // namespace fock
