#include "qpd/reduction.hpp"

#include <algorithm>

namespace qpd {

std::vector<TwoCycleTerm> two_cycle_terms(const QuiverWithPotential& qp) {
    std::vector<TwoCycleTerm> out;
    for (const auto& [cycle, coef] : qp.potential.terms()) {
        if (cycle.length() != 2) continue;
        ArrowId x = cycle.word()[0];
        ArrowId y = cycle.word()[1];
        TwoCycleTerm term;
        term.a = std::min(x, y);
        term.b = std::max(x, y);
        term.lambda = coef;
        out.push_back(std::move(term));
    }
    return out;
}

std::vector<RelatedArrowGroup> detect_related_arrows(const QuiverWithPotential& qp) {
    auto terms = two_cycle_terms(qp);
    std::map<ArrowId, std::vector<ArrowId>> partners;
    for (const TwoCycleTerm& t : terms) {
        partners[t.a].push_back(t.b);
        partners[t.b].push_back(t.a);
    }
    std::vector<RelatedArrowGroup> groups;
    for (auto& [shared, bs] : partners) {
        if (bs.size() < 2) continue;
        std::sort(bs.begin(), bs.end());
        groups.push_back(RelatedArrowGroup{shared, bs});
    }
    return groups;
}

namespace {

std::string related_message(const Quiver& quiver, const std::vector<RelatedArrowGroup>& groups) {
    std::string msg = "related arrows:";
    for (const auto& g : groups) {
        msg += " [shared " + quiver.arrow(g.shared_arrow).name + ":";
        for (ArrowId b : g.partners) msg += " " + quiver.arrow(b).name;
        msg += "]";
    }
    return msg;
}

} // namespace

IntegrationResult integrate_massive(const QuiverWithPotential& qp,
                                    const IntegrateOptions& options) {
    const Quiver& quiver = qp.quiver;
    Potential potential = qp.potential;
    std::vector<bool> deleted(quiver.num_arrows(), false);
    std::map<ArrowId, PathElement> accumulated;
    ReductionTrace trace;

    int fuel = options.fuel;
    while (true) {
        auto deg2 = two_cycle_terms(QuiverWithPotential{quiver, potential});
        if (deg2.empty()) break;
        if (fuel <= 0) {
            throw Error(ErrorKind::FuelExhausted,
                        "reduction fuel exhausted after " +
                            std::to_string(options.fuel) + " eliminations");
        }
        auto related = detect_related_arrows(QuiverWithPotential{quiver, potential});
        if (!related.empty()) {
            throw RelatedArrowsError(related, related_message(quiver, related));
        }
        const TwoCycleTerm pick = options.reverse_order ? deg2.back() : deg2.front();

        // dS/da = lambda * b + rest; solving for b needs rest free of a and b.
        PathElement rel_a = cyclic_derivative(quiver, potential, pick.a);
        if (rel_a.coefficient(Word{pick.b}) != pick.lambda) {
            throw Error(ErrorKind::Internal, "unexpected 2-cycle coefficient");
        }
        PathElement rest_a = rel_a;
        rest_a.add_term(Word{pick.b}, -pick.lambda);
        if (rest_a.contains_arrow(pick.a) || rest_a.contains_arrow(pick.b)) {
            throw Error(ErrorKind::FuelExhausted,
                        "elimination of '" + quiver.arrow(pick.b).name +
                            "' is self-referential; the substitution cascade cannot "
                            "terminate");
        }
        PathElement repl_b = rest_a.scaled(Rational(-1) / pick.lambda);
        repl_b.set_component(quiver.arrow(pick.b).src, quiver.arrow(pick.b).dst);

        // dS/db = lambda * a + rest_b delivers the image of a.
        PathElement rel_b = cyclic_derivative(quiver, potential, pick.b);
        if (rel_b.coefficient(Word{pick.a}) != pick.lambda) {
            throw Error(ErrorKind::Internal, "unexpected 2-cycle coefficient");
        }
        PathElement rest_b = rel_b;
        rest_b.add_term(Word{pick.a}, -pick.lambda);
        if (rest_b.contains_arrow(pick.a) || rest_b.contains_arrow(pick.b)) {
            throw Error(ErrorKind::FuelExhausted,
                        "elimination of '" + quiver.arrow(pick.a).name +
                            "' is self-referential; the substitution cascade cannot "
                            "terminate");
        }
        PathElement repl_a = rest_b.scaled(Rational(-1) / pick.lambda);
        repl_a.set_component(quiver.arrow(pick.a).src, quiver.arrow(pick.a).dst);

        Substitution::ImageMap step_map;
        step_map.emplace(pick.b, repl_b);
        step_map.emplace(pick.a, repl_a);

        potential = apply_arrow_map(quiver, step_map, potential);
        if (potential.contains_arrow(pick.a) || potential.contains_arrow(pick.b)) {
            throw Error(ErrorKind::Internal,
                        "eliminated arrows survived the substitution");
        }

        for (auto& [arrow, image] : accumulated) {
            image = apply_arrow_map(quiver, step_map, image);
        }
        accumulated.emplace(pick.a, repl_a);
        accumulated.emplace(pick.b, repl_b);
        deleted[pick.a] = deleted[pick.b] = true;

        trace.steps.push_back(ReductionStep{pick.a, pick.b, repl_b, repl_a});
        --fuel;
        ++trace.fuel_used;
    }

    // Rebuild the quiver without the eliminated arrows; relative order (and
    // with it every canonical form) is preserved.
    IntegrationResult result;
    Quiver out(quiver.name(), quiver.num_vertices());
    for (const Arrow& a : quiver.arrows()) {
        if (deleted[a.id]) continue;
        ArrowId fresh = out.add_arrow(a.name, a.src, a.dst);
        result.arrow_map.emplace(a.id, fresh);
    }
    Potential out_potential;
    for (const auto& [cycle, coef] : potential.terms()) {
        Word word;
        for (ArrowId id : cycle.word()) word.push_back(result.arrow_map.at(id));
        out_potential.add_term(Cycle::from_canonical_rotation(word), coef);
    }
    result.qp = QuiverWithPotential{std::move(out), std::move(out_potential)};
    result.trace = std::move(trace);
    result.accumulated = std::move(accumulated);
    return result;
}

QuiverWithPotential reduce(const QuiverWithPotential& qp, const IntegrateOptions& options) {
    return integrate_massive(qp, options).qp;
}

} // namespace qpd
