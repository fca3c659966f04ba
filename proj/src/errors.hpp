#pragma once

#include <stdexcept>
#include <string>

namespace cvqkd {

// A numeric routine violated one of its own invariants (bad caller input
// uses std::domain_error / std::invalid_argument instead).
class internal_error : public std::runtime_error {
public:
    explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

// Post-selection threshold rejected: the estimated success probability is
// too small to form a usable conditional state.
class threshold_error : public std::runtime_error {
public:
    threshold_error(const std::string& what, double estimated_ps)
        : std::runtime_error(what), estimated_ps_(estimated_ps) {}
    double estimated_ps() const noexcept { return estimated_ps_; }

private:
    double estimated_ps_;
};

// Invalid or inconsistent sweep configuration.
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cvqkd
