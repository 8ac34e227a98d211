#pragma once

#include <stdexcept>
#include <string>

namespace sincderiv {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// API misuse: mismatched jets, invalid parameters, out-of-range orders.
class UsageError : public Error {
public:
    using Error::Error;
};

/// Evaluation at or outside the open interval of a map or target function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// A singular operation: division by a (near-)zero leading coefficient, an
/// elementary function applied outside its real domain, or an operation that
/// produced non-finite coefficients. Carries the offending value.
class SingularityError : public Error {
public:
    SingularityError(const std::string& what, double offending)
        : Error(what + " (offending value " + std::to_string(offending) + ")"),
          offending_(offending) {}

    double offending_value() const noexcept { return offending_; }

private:
    double offending_;
};

/// A sampled function produced a non-finite value at a node.
class SamplingError : public Error {
public:
    SamplingError(const std::string& what, int node_index, double t)
        : Error(what), node_(node_index), t_(t) {}

    int node_index() const noexcept { return node_; }
    double abscissa() const noexcept { return t_; }

private:
    int node_;
    double t_;
};

} // namespace sincderiv
