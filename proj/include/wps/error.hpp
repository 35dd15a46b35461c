#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wps {

/// Base class for all library errors. `name()` is the stable identifier the
/// CLI prints on standard error.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& message)
        : std::runtime_error(message), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct EmptyInput : Error {
    EmptyInput() : Error("EmptyInput", "a weight vector needs at least two entries") {}
};

struct NonPositiveWeight : Error {
    explicit NonPositiveWeight(std::size_t index)
        : Error("NonPositiveWeight",
                "weight at index " + std::to_string(index) + " must be >= 1"),
          index(index) {}
    std::size_t index;
};

struct IndexOutOfRange : Error {
    IndexOutOfRange(std::size_t index, std::size_t size)
        : Error("IndexOutOfRange", "index " + std::to_string(index) +
                                       " out of range for " + std::to_string(size) +
                                       " weights") {}
};

struct NotWellFormed : Error {
    NotWellFormed() : Error("NotWellFormed", "weights are not well-formed") {}
};

struct NotIsolated : Error {
    NotIsolated()
        : Error("NotIsolated",
                "weights are not pairwise coprime (singularities are not isolated)") {}
};

struct NegativeDegree : Error {
    explicit NegativeDegree(long long d)
        : Error("NegativeDegree", "degree " + std::to_string(d) + " is negative") {}
};

struct InvalidK : Error {
    explicit InvalidK(const std::string& detail) : Error("InvalidK", detail) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& detail) : Error("BudgetExceeded", detail) {}
};

struct DimensionTooSmall : Error {
    explicit DimensionTooSmall(const std::string& detail)
        : Error("DimensionTooSmall", detail) {}
};

struct SubsetTooSmall : Error {
    explicit SubsetTooSmall(const std::string& detail) : Error("SubsetTooSmall", detail) {}
};

struct WrongDimension : Error {
    explicit WrongDimension(const std::string& detail) : Error("WrongDimension", detail) {}
};

struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& detail)
        : Error("InvalidArgument", detail) {}
};

} // namespace wps
