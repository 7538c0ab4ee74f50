#pragma once

#include "amalg/dsl.hpp"

#include <string>
#include <vector>

namespace amalg::dsl::detail {

struct Param {
    Type type;
    bool repeated = false;  // zero or more, last in its section
};

struct Shape {
    std::string name;
    std::vector<std::vector<Param>> sections;
    Type result;
    std::string text;  // e.g. "gen(ring; elem*)"
};

const std::vector<Shape>& builtin_table();
const std::vector<Shape>& check_table();

using TypeMask = unsigned;
constexpr TypeMask mask(Type t)
{
    return 1u << static_cast<unsigned>(t);
}

/// Index into `table` of the first overload of `call` accepting `arg_types`
/// (one mask per argument, grouped by section), or -1.
int match_shape(const std::vector<Shape>& table, const std::string& name,
                const std::vector<std::vector<TypeMask>>& arg_types);

/// The label an element literal denotes: "3", "1+X", "(1,0)".
std::string literal_label(const Expr& e);

} // namespace amalg::dsl::detail
