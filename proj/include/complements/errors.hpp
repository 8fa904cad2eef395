#pragma once

#include <stdexcept>
#include <string>

namespace complements {

// Coarse error class, mapped onto process exit codes by the CLI.
enum class errc {
    usage,   // malformed input or arguments
    domain,  // violated precondition of an operation
    budget,  // bounded search ran out of budget
};

// All operation failures carry a machine-readable kind tag next to the
// human-readable message, so callers can distinguish e.g. which
// precondition of a theorem was violated.
class error : public std::runtime_error {
public:
    error(errc code, std::string kind, const std::string& what)
        : std::runtime_error(what), code_(code), kind_(std::move(kind)) {}

    errc code() const { return code_; }
    const std::string& kind() const { return kind_; }

private:
    errc code_;
    std::string kind_;
};

inline error domain_error(std::string kind, const std::string& what) {
    return error(errc::domain, std::move(kind), what);
}

inline error budget_error(std::string kind, const std::string& what) {
    return error(errc::budget, std::move(kind), what);
}

inline error usage_error(const std::string& what) {
    return error(errc::usage, "usage", what);
}

}  // namespace complements
