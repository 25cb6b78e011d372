#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bicascade {

// Bad arguments surface as std::invalid_argument. The two types below carry
// conditions callers are expected to branch on.

/// An exact computation was asked to enumerate more than its configured limit.
class capacity_error : public std::runtime_error {
public:
    capacity_error(const std::string& what, std::size_t limit, std::size_t requested)
        : std::runtime_error(what), limit_(limit), requested_(requested) {}

    std::size_t limit() const noexcept { return limit_; }
    std::size_t requested() const noexcept { return requested_; }

private:
    std::size_t limit_;
    std::size_t requested_;
};

/// A subnetwork instance has an R vertex whose degree is below the constraint.
class infeasible_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph, instance, or distribution text.
class parse_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bicascade
