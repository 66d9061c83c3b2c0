#pragma once

#include "qpd/jacobian.hpp"
#include "qpd/mutation.hpp"

namespace qpd {

// Reading of "subpath of length two" inside a cycle. Cyclic counts the
// wraparound pair; Linear does not. Both exist because the definition can
// be read either way; the dP1 fixture is good under both.
enum class SubpathMode { Cyclic, Linear };

struct RepeatedSubpath {
    // Written-order adjacent pair (first, second): second is applied first.
    ArrowId first;
    ArrowId second;
    Cycle term1;
    Cycle term2;
};

struct GoodPotentialVerdict {
    bool is_good = false;
    SubpathMode mode = SubpathMode::Cyclic;
    std::map<ArrowId, std::size_t> arrow_counts; // occurrences, multiplicity counted
    std::vector<RepeatedSubpath> repeated_subpaths;
};

// Every arrow occurs at least twice and no length-two subpath repeats.
GoodPotentialVerdict is_good_potential(const QuiverWithPotential& qp,
                                       SubpathMode mode = SubpathMode::Cyclic);

// Per-arrow record behind the syntactic certificate: dS/da has >= 2 terms
// and their leading (leftmost written) arrows are pairwise distinct, so no
// relation of the shape u * alpha = 0 can occur.
struct SyntacticCertificateEntry {
    ArrowId arrow;
    std::size_t num_terms = 0;
    std::vector<ArrowId> leading_arrows;
    bool distinct_leading = false;
};

struct VertexDualizability {
    VertexId vertex = 0;
    enum class Kind { CertifiedSyntactic, CertifiedBounded, ObstructionFound, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::size_t bound = 0; // meaningful for the bounded kinds
    std::optional<ObstructionWitness> witness;
    std::size_t num_candidates = 0;
    std::string note;
};

struct DualizabilityStatus {
    GoodPotentialVerdict good;
    std::vector<SyntacticCertificateEntry> certificates; // present when good
    std::vector<VertexDualizability> vertices;

    bool vertex_certified(VertexId v) const;
};

// Layer one: a good potential certifies every vertex at once; otherwise all
// vertices stay inconclusive at this level.
DualizabilityStatus syntactic_delta(const QuiverWithPotential& qp,
                                    SubpathMode mode = SubpathMode::Cyclic);

// Layer two: bounded obstruction search per vertex.
DualizabilityStatus bounded_delta(const QuiverWithPotential& qp, std::size_t bound);

// The dual algorithm: premutate at k, then integrate over massive arrows.
// Requires a good potential and a certified vertex.
QuiverWithPotential seiberg_dual(const QuiverWithPotential& qp, VertexId k,
                                 const IntegrateOptions& options = {},
                                 SubpathMode mode = SubpathMode::Cyclic);

// Massive/mesonic decomposition of a premutated potential:
//   S~ = sum_i (lambda_i a_i b_i + sum_j sigma_ij a_i u_ij + b_i v_i) + W.
struct MassiveDecomposition {
    struct MassivePair {
        ArrowId a = 0; // non-mesonic side of the 2-cycle
        ArrowId b = 0; // mesonic side, substituted away
        Rational lambda;
        bool has_v = false;
        Word v; // remainder of the coefficient-one term b_i v_i
        std::vector<std::pair<Rational, Word>> companions; // (sigma_ij, u_ij)
    };
    std::vector<MassivePair> pairs;
    Potential remainder; // W, free of massive arrows
};

MassiveDecomposition decompose_massive(const QuiverWithPotential& qp_tilde,
                                       const std::vector<ArrowId>& mesonic);

// The right equivalence phi = prod_i phi_i with
//   a_i -> a_i - (1/lambda_i) v_i,
//   b_i -> b_i - (1/lambda_i) sum_j sigma_ij u_ij.
// The reduced part of phi(S~) equals the integrated potential.
Substitution reduction_right_equivalence(const QuiverWithPotential& qp_tilde,
                                         const std::vector<ArrowId>& mesonic);
Substitution reduction_right_equivalence(const PremutationResult& premutation);

struct DualityReport {
    VertexId vertex = 0;
    QuiverWithPotential mutated;
    QuiverWithPotential dual;
    std::optional<Substitution> phi; // over the premutated quiver
    bool agree_quiver = false;
    bool agree_potential = false;
    bool phi_reduction_matches = false;
    std::vector<std::string> notes;

    bool agree() const { return agree_quiver && agree_potential; }
};

// Runs mutation and Seiberg duality independently and compares the results;
// also re-derives the dual potential through the explicit right equivalence.
DualityReport verify_duality(const QuiverWithPotential& qp, VertexId k,
                             const IntegrateOptions& options = {},
                             SubpathMode mode = SubpathMode::Cyclic);

} // namespace qpd
