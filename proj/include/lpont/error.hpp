#pragma once

#include <stdexcept>
#include <string>

namespace lpont {

enum class ErrorKind {
    Parse,
    NotPure,
    DuplicateFacet,
    RidgeDegreeViolation,
    NonOrientable,
    NotConnected,
    SimplexNotInComplex,
    VertexCollision,
    NotA2Sphere,
    MoveNotAdmissible,
    InducedDiffNotABistellarMove,
    BudgetExhausted,
    LoopNotClosed,
    AnchorConfigurationInvalid,
    DimensionMismatch,
    NotACycle,
    NoDecompositionWithinBudget,
    LinkNotCertified,
    AssembledChainNotACycle,
    InconsistentGeneratorValues,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace lpont
