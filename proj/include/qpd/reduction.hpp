#pragma once

#include <map>

#include "qpd/substitution.hpp"

namespace qpd {

// One 2-cycle term lambda * a * b of a potential; a is the arrow whose
// relation gets solved, b the partner that is substituted away.
struct TwoCycleTerm {
    ArrowId a;
    ArrowId b;
    Rational lambda;
};

struct ReductionStep {
    ArrowId eliminated;               // arrow a whose relation dS/da = 0 was used
    ArrowId solved;                   // arrow b that was substituted away
    PathElement replacement_solved;   // image of b, over the input quiver's arrows
    PathElement replacement_eliminated; // image of a from dS/db = 0
};

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    int fuel_used = 0;
};

struct IntegrationResult {
    QuiverWithPotential qp; // reduced QP over a fresh quiver without the eliminated arrows
    ReductionTrace trace;
    // Accumulated elimination images for every removed arrow, expressed over
    // the *input* quiver's arrow ids (their words only use surviving arrows).
    std::map<ArrowId, PathElement> accumulated;
    // input arrow id -> output arrow id for surviving arrows.
    std::map<ArrowId, ArrowId> arrow_map;
};

struct IntegrateOptions {
    int fuel = 100;
    // Tests permute the deterministic elimination order to confirm the end
    // result is order-independent on fixtures.
    bool reverse_order = false;
};

// Groups of arrows sharing one massive partner that appears in two or more
// distinct 2-cycle terms; an empty result means the massive part is diagonal.
std::vector<RelatedArrowGroup> detect_related_arrows(const QuiverWithPotential& qp);

// Degree-two terms of the potential, oriented so `a` is the smaller arrow.
std::vector<TwoCycleTerm> two_cycle_terms(const QuiverWithPotential& qp);

// Eliminates every 2-cycle term by solving dS/da = 0 for the partner and
// substituting, then drops both arrows from the quiver. Iterates until no
// degree-two terms remain. Throws RelatedArrows / FuelExhausted.
IntegrationResult integrate_massive(const QuiverWithPotential& qp,
                                    const IntegrateOptions& options = {});

// Convenience composition; the result carries no degree-two terms.
QuiverWithPotential reduce(const QuiverWithPotential& qp, const IntegrateOptions& options = {});

} // namespace qpd
