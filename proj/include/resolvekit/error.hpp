#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resolvekit {

enum class ErrorKind {
    SelfLoop,
    DuplicateEdge,
    VertexOutOfRange,
    Disconnected,
    InvalidN,
    UnlabeledGraph,
    UnknownLabel,
    EmptyLandmarkSet,
    InvalidLandmarkSet,
    EvidenceFailure,
    BudgetExceeded,
    TheoremViolation,
    NBelowTableRange,
    UnknownRow,
    CensusMismatch,
    ParseError,
    Usage,
};

auto to_string(ErrorKind kind) -> std::string_view;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) :
        std::runtime_error(what),
        _kind(kind)
    {
    }

    auto kind() const noexcept -> ErrorKind { return _kind; }

private:
    ErrorKind _kind;
};

} // namespace resolvekit
