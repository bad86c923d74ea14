#ifndef TFORGE_FIELD_DESCRIPTOR_HPP
#define TFORGE_FIELD_DESCRIPTOR_HPP

#include <string>
#include <variant>

#include "tforge/finite_field.hpp"

namespace tforge {

// Field descriptors: "Q", "GF(p)", "GF(p^k)", "GF(p^k;modulus=t^3+t^2+1)".
// The generator symbol of an extension field is the variable letter of the
// modulus text (default "t").
using FieldVariant = std::variant<QQ, GFp, GFq>;

FieldVariant parse_field_descriptor(const std::string& text);

std::string field_name(const FieldVariant& f);

}  // namespace tforge

#endif
