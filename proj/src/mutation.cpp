#include "qpd/mutation.hpp"

#include <algorithm>

namespace qpd {

std::vector<ArrowId> PremutationResult::mesonic_ids() const {
    std::vector<ArrowId> out;
    out.reserve(mesons.size());
    for (const auto& m : mesons) out.push_back(m.meson);
    return out;
}

namespace {

// Minimal rotation of a cycle word among rotations based at a vertex != k.
// The base of a written word is src of its rightmost arrow.
Word rotation_off_vertex(const Quiver& quiver, const Word& word, VertexId k) {
    Word best;
    Word rot = word;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (quiver.word_src(rot) == k) continue;
        if (best.empty() || rot < best) best = rot;
    }
    if (best.empty()) {
        throw Error(ErrorKind::Internal, "cycle cannot be based off the mutation vertex");
    }
    return best;
}

} // namespace

PremutationResult premutate(const QuiverWithPotential& qp, VertexId k) {
    const Quiver& quiver = qp.quiver;
    if (!quiver.has_vertex(k)) {
        throw Error(ErrorKind::SemanticError, "no vertex " + std::to_string(k));
    }
    if (quiver.has_two_cycle_through(k)) {
        throw Error(ErrorKind::TwoCycleAtVertex,
                    "vertex " + std::to_string(k) + " lies on a 2-cycle");
    }
    auto [trivial, rest] = split_degree_two(qp.potential);
    if (!trivial.is_zero()) {
        throw Error(ErrorKind::NotReduced,
                    "potential has degree-two terms; reduce before mutating");
    }

    PremutationResult result;
    result.vertex = k;

    std::vector<ArrowId> incident;
    std::vector<ArrowId> incoming = quiver.arrows_into(k);
    std::vector<ArrowId> outgoing = quiver.arrows_out_of(k);

    Quiver tilde(quiver.name(), quiver.num_vertices());
    auto guarded_add = [&](const std::string& name, VertexId src, VertexId dst) {
        if (tilde.has_arrow_name(name)) {
            throw Error(ErrorKind::NameCollision,
                        "generated arrow name '" + name + "' is already taken");
        }
        return tilde.add_arrow(name, src, dst);
    };

    for (const Arrow& a : quiver.arrows()) {
        if (a.src == k || a.dst == k) continue;
        result.survivor_map.emplace(a.id, guarded_add(a.name, a.src, a.dst));
    }
    for (const Arrow& a : quiver.arrows()) {
        if (a.src != k && a.dst != k) continue;
        ArrowId dual = guarded_add(a.name + "*", a.dst, a.src);
        result.duals.push_back(PremutationResult::DualArrow{a.id, dual});
    }
    // One mesonic arrow [beta alpha] per length-two path alpha then beta
    // through k, created outgoing-major to mirror the Delta_k display.
    for (ArrowId beta : outgoing) {
        for (ArrowId alpha : incoming) {
            const Arrow& b = quiver.arrow(beta);
            const Arrow& al = quiver.arrow(alpha);
            ArrowId meson = guarded_add("[" + b.name + al.name + "]", al.src, b.dst);
            result.mesons.push_back(PremutationResult::MesonicArrow{meson, alpha, beta});
        }
    }

    auto dual_of = [&](ArrowId orig) {
        for (const auto& d : result.duals) {
            if (d.original == orig) return d.dual;
        }
        throw Error(ErrorKind::Internal, "missing dual arrow");
    };
    auto meson_of = [&](ArrowId beta, ArrowId alpha) {
        for (const auto& m : result.mesons) {
            if (m.outgoing_orig == beta && m.incoming_orig == alpha) return m.meson;
        }
        throw Error(ErrorKind::Internal, "missing mesonic arrow");
    };

    // [S]: rotate each cycle off k, then collapse adjacent pairs through k.
    Potential bracket;
    for (const auto& [cycle, coef] : qp.potential.terms()) {
        Word rotated = rotation_off_vertex(quiver, cycle.word(), k);
        result.rotated_terms.emplace_back(rotated, coef);
        Word image;
        for (std::size_t i = 0; i < rotated.size();) {
            if (i + 1 < rotated.size() && quiver.arrow(rotated[i + 1]).dst == k) {
                image.push_back(meson_of(rotated[i], rotated[i + 1]));
                i += 2;
                continue;
            }
            const Arrow& a = quiver.arrow(rotated[i]);
            if (a.src == k || a.dst == k) {
                throw Error(ErrorKind::Internal,
                            "unpaired arrow through the mutation vertex");
            }
            image.push_back(result.survivor_map.at(rotated[i]));
            ++i;
        }
        bracket.add_term(Cycle::make(tilde, image), coef);
    }

    // Delta_k = sum over pairs of [beta alpha] alpha* beta*.
    Potential delta;
    for (const auto& m : result.mesons) {
        Word word{m.meson, dual_of(m.incoming_orig), dual_of(m.outgoing_orig)};
        delta.add_term(Cycle::make(tilde, word), Rational(1));
    }

    result.bracket_potential = bracket;
    result.delta_potential = delta;
    result.qp_tilde = QuiverWithPotential{std::move(tilde), bracket + delta};
    return result;
}

QuiverWithPotential mutate(const QuiverWithPotential& qp, VertexId k,
                           const IntegrateOptions& options) {
    return mutate_with_trace(qp, k, options).integration.qp;
}

MutationResult mutate_with_trace(const QuiverWithPotential& qp, VertexId k,
                                 const IntegrateOptions& options) {
    MutationResult result;
    result.premutation = premutate(qp, k);
    result.integration = integrate_massive(result.premutation.qp_tilde, options);
    return result;
}

} // namespace qpd
