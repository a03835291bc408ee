#pragma once

// JSON wire format. Complex numbers travel as [re, im] arrays; points as
// three complex numbers; matrices as four complex numbers in row-major order;
// automorphisms as {"upsilon": {"omega", "alpha"}, "chi": {...}, "flip": bool}.

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tetra/autgroup.hpp"
#include "tetra/membership.hpp"
#include "tetra/numerics.hpp"
#include "tetra/oracle.hpp"
#include "tetra/schwarz.hpp"

namespace tetra::wire {

using nlohmann::json;

/// Malformed or schema-invalid input.
class WireError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

json encode(Complex z);
json encode(const TetraPoint& x);
json encode(const TangentTarget& y);
json encode(const Matrix2& m);
json encode(const DiscAutomorphism& u);
json encode(const TetraAutomorphism& g);
json encode(const MembershipReport& r);
json encode(const SuiteReport& r, bool include_timing = true);

Complex decode_complex(const json& j);
TetraPoint decode_point(const json& j);
TangentTarget decode_target(const json& j);
Matrix2 decode_matrix(const json& j);
DiscAutomorphism decode_disc(const json& j);
TetraAutomorphism decode_automorphism(const json& j);

/// The member `key` of an object, or WireError.
const json& require(const json& obj, const char* key);

/// Serializes with every floating-point value printed to 17 significant digits.
std::string dump(const json& j, bool pretty);

}  // namespace tetra::wire
