#include "resolvekit/error.hpp"

namespace resolvekit {

auto to_string(ErrorKind kind) -> std::string_view
{
    switch (kind) {
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::InvalidN: return "InvalidN";
    case ErrorKind::UnlabeledGraph: return "UnlabeledGraph";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::EmptyLandmarkSet: return "EmptyLandmarkSet";
    case ErrorKind::InvalidLandmarkSet: return "InvalidLandmarkSet";
    case ErrorKind::EvidenceFailure: return "EvidenceFailure";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::NBelowTableRange: return "NBelowTableRange";
    case ErrorKind::UnknownRow: return "UnknownRow";
    case ErrorKind::CensusMismatch: return "CensusMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Usage: return "Usage";
    }
    return "Unknown";
}

} // namespace resolvekit
