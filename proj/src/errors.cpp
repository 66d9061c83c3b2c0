#include "qpd/errors.hpp"

namespace qpd {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SyntaxError: return "syntax-error";
        case ErrorKind::SemanticError: return "semantic-error";
        case ErrorKind::NotACycle: return "not-a-cycle";
        case ErrorKind::EndpointMismatch: return "endpoint-mismatch";
        case ErrorKind::NotInvertible: return "not-invertible";
        case ErrorKind::InhomogeneousElement: return "inhomogeneous-element";
        case ErrorKind::TwoCycleAtVertex: return "two-cycle-at-vertex";
        case ErrorKind::NotReduced: return "not-reduced";
        case ErrorKind::RelatedArrows: return "related-arrows";
        case ErrorKind::FuelExhausted: return "fuel-exhausted";
        case ErrorKind::NotGood: return "not-good";
        case ErrorKind::NotCertifiedDualizable: return "not-certified-dualizable";
        case ErrorKind::MassiveFormViolation: return "massive-form-violation";
        case ErrorKind::NoIncomingArrows: return "no-incoming-arrows";
        case ErrorKind::NameCollision: return "name-collision";
        case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

} // namespace qpd
