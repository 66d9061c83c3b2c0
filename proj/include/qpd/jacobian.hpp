#pragma once

#include <limits>
#include <map>
#include <memory>
#include <optional>

#include "qpd/path_element.hpp"

namespace qpd {

// One relation dS/dx per arrow x (zero relations included); each relation is
// homogeneous from dst(x) to src(x).
struct JacobianPresentation {
    std::map<ArrowId, PathElement> relations;
    // Minimum path length over all nonzero relation terms; SIZE_MAX when the
    // ideal is zero. Any nonzero ideal element only has terms at least this
    // long, which is what certifies non-membership below the bound.
    std::size_t min_relation_length = std::numeric_limits<std::size_t>::max();
};

JacobianPresentation jacobian_relations(const QuiverWithPotential& qp);

// One term of an explicit two-sided combination: coefficient * p * r * q
// with r the relation of `relation_arrow` and p, q (possibly trivial) paths.
struct IdealCertificateTerm {
    ArrowId relation_arrow;
    Word left;  // p, applied last
    Word right; // q, applied first
    Rational coefficient;
};

struct MembershipVerdict {
    enum class Status { InIdeal, NotInIdealCertified, Unknown };
    Status status = Status::Unknown;
    std::size_t bound = 0;
    std::vector<IdealCertificateTerm> certificate; // InIdeal only
    std::string reason;
};

// Expands a certificate back into a path element (exact replay).
PathElement replay_certificate(const QuiverWithPotential& qp,
                               const std::vector<IdealCertificateTerm>& certificate);

// Per-target outcome of the obstruction search at a vertex.
struct ObstructionWitness {
    VertexId target = 0;
    PathElement f;
    MembershipVerdict f_not_in_ideal; // NotInIdealCertified
    // One InIdeal verdict (with certificate) per incoming arrow at k.
    std::vector<std::pair<ArrowId, MembershipVerdict>> products;
};

struct TargetSearchResult {
    VertexId target = 0;
    std::size_t bound = 0;
    bool obstruction_found = false;
    std::optional<ObstructionWitness> witness;
    // Solutions of the linear problem that are not certified outside the
    // ideal and not inside the bounded ideal span: honest unknowns.
    std::vector<PathElement> candidates;
};

struct ObstructionSearch {
    VertexId vertex = 0;
    std::size_t bound = 0;
    std::vector<TargetSearchResult> targets;

    bool any_obstruction() const;
    bool any_candidates() const;
};

// Caches path enumeration and bounded ideal spans for one QP, so repeated
// membership queries and searches stay cheap.
class OracleSession {
public:
    explicit OracleSession(QuiverWithPotential qp);
    ~OracleSession();
    OracleSession(const OracleSession&) = delete;
    OracleSession& operator=(const OracleSession&) = delete;

    const QuiverWithPotential& qp() const;
    const JacobianPresentation& relations() const;

    MembershipVerdict membership(const PathElement& element, std::size_t bound);
    ObstructionSearch obstruction_search(VertexId k, std::size_t bound);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// Span membership of `element` among {p * r * q : total length <= bound},
// with an explicit certificate on success and a degree-bound certificate of
// non-membership when every term is shorter than any relation term.
MembershipVerdict ideal_membership_bounded(const PathElement& element,
                                           const QuiverWithPotential& qp,
                                           std::size_t bound);

// For each target vertex s, solves exactly for f in the span of paths
// k -> s of length 1..bound with f * alpha_j inside the bounded ideal span
// for every incoming arrow alpha_j, then looks for a solution certified
// nonzero in the Jacobian algebra. Throws NoIncomingArrows.
ObstructionSearch tilting_obstruction_search(const QuiverWithPotential& qp, VertexId k,
                                             std::size_t bound);

} // namespace qpd
