#pragma once

#include <stdexcept>
#include <string>

namespace cayley {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Generating-set validation failures.
struct EmptyGenset : Error { using Error::Error; };
struct NotInvolution : Error { using Error::Error; };
struct ContainsIdentity : Error { using Error::Error; };
struct PairingNotInverse : Error { using Error::Error; };
struct NotGenerating : Error { using Error::Error; };

// Group axiom probe found a counterexample; message carries the witness.
struct AxiomViolation : Error { using Error::Error; };

// Metric / coverage failures.
struct OutOfTable : Error { using Error::Error; };

struct MemoryBudgetExceeded : Error {
    MemoryBudgetExceeded(const std::string& msg, int radius)
        : Error(msg), completed_radius(radius) {}
    int completed_radius;
};

// Transport solver instance larger than the configured budget.
struct SolverBudgetExceeded : Error { using Error::Error; };

// kappa(e) is 0/0 by the defining formula.
struct UndefinedAtIdentity : Error { using Error::Error; };

// Heisenberg low-height predictor called outside its sector.
struct OutsideRegion : Error { using Error::Error; };

struct NotNormal : Error { using Error::Error; };
struct OrbitNotFinite : Error { using Error::Error; };
struct ConditionNotMet : Error { using Error::Error; };

struct ParseError : Error { using Error::Error; };

} // namespace cayley
