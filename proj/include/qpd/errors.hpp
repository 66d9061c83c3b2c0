#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qpd/ids.hpp"

namespace qpd {

enum class ErrorKind {
    SyntaxError,            // malformed input text
    SemanticError,          // structurally invalid quiver/potential data
    NotACycle,              // word does not close or does not compose
    EndpointMismatch,       // substitution image endpoints disagree with arrow
    NotInvertible,          // degree-1 part of a substitution is singular
    InhomogeneousElement,   // mixed (src,dst) components where one is required
    TwoCycleAtVertex,       // mutation vertex lies on a quiver 2-cycle
    NotReduced,             // potential still has degree-2 terms
    RelatedArrows,          // massive arrow shared between 2-cycle terms
    FuelExhausted,          // substitution cascade did not terminate in budget
    NotGood,                // potential fails the good-potential test
    NotCertifiedDualizable, // vertex lacks a dualizability certificate
    MassiveFormViolation,            // premutated potential fails the massive/mesonic decomposition
    NoIncomingArrows,       // obstruction search needs at least one arrow into k
    NameCollision,          // generated arrow name already taken
    Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Arrows b_i sharing one massive partner that sits in >= 2 distinct
// 2-cycle terms of the potential.
struct RelatedArrowGroup {
    ArrowId shared_arrow;
    std::vector<ArrowId> partners;
};

class RelatedArrowsError : public Error {
public:
    RelatedArrowsError(std::vector<RelatedArrowGroup> groups, const std::string& message)
        : Error(ErrorKind::RelatedArrows, message), groups_(std::move(groups)) {}

    const std::vector<RelatedArrowGroup>& groups() const { return groups_; }

private:
    std::vector<RelatedArrowGroup> groups_;
};

} // namespace qpd
