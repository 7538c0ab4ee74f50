#pragma once

#include "amalg/constructions.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace amalg::dsl {

struct Location {
    int line = 1;
    int column = 1;
};

enum class Type { ring, ideal, hom, module, subring, amalgam, pullback, integer, elem, arrow };

std::string_view to_string(Type t);

struct Expr {
    enum class Kind { name, integer, string, tuple, arrow, call };

    Kind kind = Kind::name;
    std::string text;  // identifier, string contents or callee
    std::int64_t value = 0;
    std::vector<Expr> items;                   // tuple members, or {lhs, rhs} of an arrow
    std::vector<std::vector<Expr>> sections;   // call arguments, ';'-separated groups
    Location loc;

    /// Structural equality; locations are ignored.
    bool operator==(const Expr& other) const;
};

struct Statement {
    enum class Kind { definition, check };

    Kind kind = Kind::definition;
    Type type = Type::ring;  // declared type of a definition
    std::string name;        // defined name, or the check name
    Expr expr;               // definition body, or the check call
    Location loc;

    bool operator==(const Statement& other) const;
};

struct Script {
    std::vector<Statement> statements;
    std::vector<std::string> warnings;

    bool operator==(const Script& other) const { return statements == other.statements; }
};

class DslError : public std::runtime_error {
public:
    enum class Kind { syntax, unknown_name, type_mismatch, redefinition, evaluation };

    DslError(Kind kind, Location loc, std::string message, std::vector<std::string> expected = {});

    Kind kind() const noexcept { return kind_; }
    Location location() const noexcept { return loc_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }
    const std::string& message() const noexcept { return message_; }

private:
    Kind kind_;
    Location loc_;
    std::string message_;
    std::vector<std::string> expected_;
};

std::string_view to_string(DslError::Kind k);

/// Parses and type-checks a script. Throws DslError.
Script parse(std::string_view text);

/// Canonical text: one statement per line. parse(render(s)) == s.
std::string render(const Script& script);
std::string render(const Expr& expr);

/// One report per check, in order. Hypothesis failures (size guard, unmet
/// preconditions) become hypothesis_not_met reports; other errors throw
/// DslError::evaluation at the check's location.
std::vector<VerificationReport> evaluate(const Script& script);

/// Overload shapes of a builtin or check, e.g. "gen(ring; elem*)"; empty when unknown.
std::vector<std::string> builtin_shapes(std::string_view name);
std::vector<std::string> check_shapes(std::string_view name);
std::vector<std::string> check_names();

/// A description of what a check verifies, or nullopt for an unknown name.
std::optional<std::string> explain(std::string_view check);

struct NamedAmalgam {
    std::string name;
    std::shared_ptr<const Amalgam> amalgam;
};

/// Every amalgam definition of the script, evaluated, in script order.
std::vector<NamedAmalgam> amalgams(const Script& script);

inline constexpr std::size_t minimum_catalog_budget = 4;

/// A deterministic instance catalog. Amalgams satisfy |A|*|J| <= budget and
/// |A|*|B| <= budget; the seed drives the sampling of hom/ideal pairs. A budget
/// below minimum_catalog_budget yields an empty script with a warning.
Script generate_catalog(std::uint64_t seed, std::size_t budget);

} // namespace amalg::dsl
