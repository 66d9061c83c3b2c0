#pragma once

#include "qpd/reduction.hpp"

namespace qpd {

// Output of the premutation (Q~, S~) at a vertex k: reflected arrows,
// mesonic composite arrows, and the potential [S] + Delta_k.
struct PremutationResult {
    VertexId vertex = 0;
    QuiverWithPotential qp_tilde;

    struct DualArrow {
        ArrowId original; // id in the input quiver
        ArrowId dual;     // id in qp_tilde
    };
    struct MesonicArrow {
        ArrowId meson;         // id in qp_tilde
        ArrowId incoming_orig; // alpha: j -> k in the input quiver
        ArrowId outgoing_orig; // beta: k -> j' in the input quiver
    };
    std::vector<DualArrow> duals;
    std::vector<MesonicArrow> mesons;

    // Surviving input arrow id -> id in qp_tilde.
    std::map<ArrowId, ArrowId> survivor_map;

    // S with every cycle rotated to a base point != k, over input arrow ids.
    std::vector<std::pair<Word, Rational>> rotated_terms;

    // The two summands of S~ = [S] + Delta_k, over qp_tilde arrow ids.
    Potential bracket_potential;
    Potential delta_potential;

    std::vector<ArrowId> mesonic_ids() const;
};

// Steps 1-3 of mutation at k: rotate cycles off k, reflect arrows at k,
// collapse length-two factors through k into mesonic arrows and add
// Delta_k. Requires a reduced input. Throws TwoCycleAtVertex / NotReduced /
// NameCollision.
PremutationResult premutate(const QuiverWithPotential& qp, VertexId k);

// Full mutation mu_k = reduce(premutate(qp, k)).
QuiverWithPotential mutate(const QuiverWithPotential& qp, VertexId k,
                           const IntegrateOptions& options = {});

// Mutation with the premutation and elimination trace kept for reporting.
struct MutationResult {
    PremutationResult premutation;
    IntegrationResult integration;
};
MutationResult mutate_with_trace(const QuiverWithPotential& qp, VertexId k,
                                 const IntegrateOptions& options = {});

} // namespace qpd
