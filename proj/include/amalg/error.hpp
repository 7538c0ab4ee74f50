#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace amalg {

enum class ErrorKind {
    malformed_table,
    malformed_map,
    invalid_structure,
    invalid_parameter,
    size_guard_exceeded,
    missing_identity,
    ambient_mismatch,
    empty_set,
    not_multiplicatively_closed,
    not_surjective,
    incompatible_structures,
    hypothesis_violated,
    not_prime,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the algebra layer. The kind is what callers branch on;
/// the message carries the witness in human-readable form.
class AlgebraError : public std::runtime_error {
public:
    AlgebraError(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

    /// Errors that mean "this instance is outside what can be checked" rather than
    /// "the input is wrong".
    bool is_hypothesis_failure() const noexcept
    {
        switch (kind_) {
        case ErrorKind::size_guard_exceeded:
        case ErrorKind::hypothesis_violated:
        case ErrorKind::not_prime:
        case ErrorKind::missing_identity:
        case ErrorKind::not_surjective:
            return true;
        default:
            return false;
        }
    }

private:
    ErrorKind kind_;
};

inline constexpr std::size_t default_size_guard = 4096;

/// Upper bound on the order of any constructed ring. Process-wide; set it once
/// before starting work.
std::size_t size_guard();
void set_size_guard(std::size_t limit);

/// Throws size_guard_exceeded when `order` is over the current guard.
void check_size(std::size_t order, std::string_view what);

/// Restores the previous guard on scope exit.
class ScopedSizeGuard {
public:
    explicit ScopedSizeGuard(std::size_t limit) : previous_(size_guard()) { set_size_guard(limit); }
    ~ScopedSizeGuard() { set_size_guard(previous_); }
    ScopedSizeGuard(const ScopedSizeGuard&) = delete;
    ScopedSizeGuard& operator=(const ScopedSizeGuard&) = delete;

private:
    std::size_t previous_;
};

} // namespace amalg
