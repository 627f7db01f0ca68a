#pragma once

#include <stdexcept>
#include <string>

namespace iterlab {

// Error taxonomy shared by all modules. Each maps to one C-API status code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};

// Adaptive quadrature exhausted its subdivision budget.
struct NonConvergence : Error {
    using Error::Error;
};

struct StepUnderflow : Error {
    using Error::Error;
};

// Density requested exactly on a singular locus (e.g. x=0 for the K0 law).
struct SingularPoint : Error {
    using Error::Error;
};

struct GridTooCoarse : Error {
    using Error::Error;
};

struct NotPositiveDefinite : Error {
    using Error::Error;
};

struct EmbeddingFailure : Error {
    using Error::Error;
};

struct Overflow : Error {
    using Error::Error;
};

struct SeriesDivergence : Error {
    using Error::Error;
};

struct ToleranceBudgetExceeded : Error {
    using Error::Error;
};

struct UnsupportedModel : Error {
    using Error::Error;
};

}  // namespace iterlab
