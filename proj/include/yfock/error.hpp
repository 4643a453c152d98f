#pragma once
#include <stdexcept>
#include <string>

namespace yfock {

// Recoverable input/arithmetic errors; the CLI maps these to exit code 3.
class domain_error : public std::runtime_error {
public:
    explicit domain_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Specialization of a rational function hit a vanishing denominator.
class pole_error : public domain_error {
public:
    pole_error(const std::string& msg, std::string factor)
        : domain_error(msg), factor_(std::move(factor)) {}
    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

} // namespace yfock
