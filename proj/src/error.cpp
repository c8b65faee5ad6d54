#include <lpont/error.hpp>

namespace lpont {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Parse: return "ParseError";
        case ErrorKind::NotPure: return "NotPure";
        case ErrorKind::DuplicateFacet: return "DuplicateFacet";
        case ErrorKind::RidgeDegreeViolation: return "RidgeDegreeViolation";
        case ErrorKind::NonOrientable: return "NonOrientable";
        case ErrorKind::NotConnected: return "NotConnected";
        case ErrorKind::SimplexNotInComplex: return "SimplexNotInComplex";
        case ErrorKind::VertexCollision: return "VertexCollision";
        case ErrorKind::NotA2Sphere: return "NotA2Sphere";
        case ErrorKind::MoveNotAdmissible: return "MoveNotAdmissible";
        case ErrorKind::InducedDiffNotABistellarMove: return "InducedDiffNotABistellarMove";
        case ErrorKind::BudgetExhausted: return "BudgetExhausted";
        case ErrorKind::LoopNotClosed: return "LoopNotClosed";
        case ErrorKind::AnchorConfigurationInvalid: return "AnchorConfigurationInvalid";
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NotACycle: return "NotACycle";
        case ErrorKind::NoDecompositionWithinBudget: return "NoDecompositionWithinBudget";
        case ErrorKind::LinkNotCertified: return "LinkNotCertified";
        case ErrorKind::AssembledChainNotACycle: return "AssembledChainNotACycle";
        case ErrorKind::InconsistentGeneratorValues: return "InconsistentGeneratorValues";
    }
    return "Error";
}

}  // namespace lpont
