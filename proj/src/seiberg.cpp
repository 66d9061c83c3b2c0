#include "qpd/seiberg.hpp"

#include <algorithm>

namespace qpd {

GoodPotentialVerdict is_good_potential(const QuiverWithPotential& qp, SubpathMode mode) {
    GoodPotentialVerdict verdict;
    verdict.mode = mode;
    for (const Arrow& a : qp.quiver.arrows()) verdict.arrow_counts[a.id] = 0;

    std::map<std::pair<ArrowId, ArrowId>, std::vector<Cycle>> subpaths;
    for (const auto& [cycle, coef] : qp.potential.terms()) {
        const Word& word = cycle.word();
        for (ArrowId id : word) ++verdict.arrow_counts[id];
        std::size_t pairs = mode == SubpathMode::Cyclic ? word.size() : word.size() - 1;
        for (std::size_t i = 0; i < pairs; ++i) {
            ArrowId first = word[i];
            ArrowId second = word[(i + 1) % word.size()];
            subpaths[{first, second}].push_back(cycle);
        }
    }

    bool counts_ok = true;
    for (const auto& [arrow, count] : verdict.arrow_counts) {
        if (count < 2) counts_ok = false;
    }
    for (const auto& [pair, cycles] : subpaths) {
        if (cycles.size() < 2) continue;
        verdict.repeated_subpaths.push_back(
            RepeatedSubpath{pair.first, pair.second, cycles[0], cycles[1]});
    }
    verdict.is_good = counts_ok && verdict.repeated_subpaths.empty();
    return verdict;
}

bool DualizabilityStatus::vertex_certified(VertexId v) const {
    for (const auto& entry : vertices) {
        if (entry.vertex != v) continue;
        return entry.kind == VertexDualizability::Kind::CertifiedSyntactic ||
               entry.kind == VertexDualizability::Kind::CertifiedBounded;
    }
    return false;
}

DualizabilityStatus syntactic_delta(const QuiverWithPotential& qp, SubpathMode mode) {
    DualizabilityStatus status;
    status.good = is_good_potential(qp, mode);

    if (status.good.is_good) {
        for (const Arrow& x : qp.quiver.arrows()) {
            PathElement rel = cyclic_derivative(qp.quiver, qp.potential, x.id);
            SyntacticCertificateEntry entry;
            entry.arrow = x.id;
            entry.num_terms = rel.terms().size();
            for (const auto& [word, coef] : rel.terms()) {
                entry.leading_arrows.push_back(word.front());
            }
            std::sort(entry.leading_arrows.begin(), entry.leading_arrows.end());
            entry.distinct_leading =
                std::adjacent_find(entry.leading_arrows.begin(), entry.leading_arrows.end()) ==
                entry.leading_arrows.end();
            if (entry.num_terms < 2 || !entry.distinct_leading) {
                throw Error(ErrorKind::Internal,
                            "good potential without a syntactic certificate for arrow '" +
                                x.name + "'");
            }
            status.certificates.push_back(std::move(entry));
        }
    }
    for (VertexId v = 1; v <= qp.quiver.num_vertices(); ++v) {
        VertexDualizability entry;
        entry.vertex = v;
        entry.kind = status.good.is_good ? VertexDualizability::Kind::CertifiedSyntactic
                                         : VertexDualizability::Kind::Inconclusive;
        if (!status.good.is_good) entry.note = "potential is not good";
        status.vertices.push_back(std::move(entry));
    }
    return status;
}

DualizabilityStatus bounded_delta(const QuiverWithPotential& qp, std::size_t bound) {
    DualizabilityStatus status;
    status.good = is_good_potential(qp);
    OracleSession session(qp);
    for (VertexId v = 1; v <= qp.quiver.num_vertices(); ++v) {
        VertexDualizability entry;
        entry.vertex = v;
        entry.bound = bound;
        if (qp.quiver.arrows_into(v).empty()) {
            entry.kind = VertexDualizability::Kind::Inconclusive;
            entry.note = "no incoming arrows; the tilting condition is out of reach";
            status.vertices.push_back(std::move(entry));
            continue;
        }
        ObstructionSearch search = session.obstruction_search(v, bound);
        if (search.any_obstruction()) {
            entry.kind = VertexDualizability::Kind::ObstructionFound;
            for (const auto& target : search.targets) {
                if (target.obstruction_found) {
                    entry.witness = target.witness;
                    break;
                }
            }
        } else if (search.any_candidates()) {
            entry.kind = VertexDualizability::Kind::Inconclusive;
            for (const auto& target : search.targets) {
                entry.num_candidates += target.candidates.size();
            }
            entry.note = "uncertified solutions remain at this bound";
        } else {
            entry.kind = VertexDualizability::Kind::CertifiedBounded;
        }
        status.vertices.push_back(std::move(entry));
    }
    return status;
}

QuiverWithPotential seiberg_dual(const QuiverWithPotential& qp, VertexId k,
                                 const IntegrateOptions& options, SubpathMode mode) {
    // The zero potential has no relations, so no element can obstruct the
    // tilting condition; duality degenerates to reflection and is allowed.
    if (!qp.potential.is_zero()) {
        DualizabilityStatus status = syntactic_delta(qp, mode);
        if (!status.good.is_good) {
            throw Error(ErrorKind::NotGood,
                        "potential is not good; Seiberg duality needs one");
        }
        if (!status.vertex_certified(k)) {
            throw Error(ErrorKind::NotCertifiedDualizable,
                        "vertex " + std::to_string(k) + " is not certified dualizable");
        }
    }
    PremutationResult premut = premutate(qp, k);
    return integrate_massive(premut.qp_tilde, options).qp;
}

MassiveDecomposition decompose_massive(const QuiverWithPotential& qp_tilde,
                                       const std::vector<ArrowId>& mesonic) {
    const Quiver& quiver = qp_tilde.quiver;
    auto is_mesonic = [&](ArrowId id) {
        return std::find(mesonic.begin(), mesonic.end(), id) != mesonic.end();
    };

    auto related = detect_related_arrows(qp_tilde);
    if (!related.empty()) {
        std::string msg = "related arrows prevent the massive/mesonic decomposition";
        throw RelatedArrowsError(related, msg);
    }

    MassiveDecomposition out;
    std::map<ArrowId, std::size_t> pair_of; // massive arrow -> index into pairs
    for (const auto& [cycle, coef] : qp_tilde.potential.terms()) {
        if (cycle.length() != 2) continue;
        ArrowId x = cycle.word()[0];
        ArrowId y = cycle.word()[1];
        MassiveDecomposition::MassivePair pair;
        if (is_mesonic(y) && !is_mesonic(x)) {
            pair.a = x;
            pair.b = y;
        } else if (is_mesonic(x) && !is_mesonic(y)) {
            pair.a = y;
            pair.b = x;
        } else if (is_mesonic(x) && is_mesonic(y)) {
            pair.a = std::min(x, y);
            pair.b = std::max(x, y);
        } else {
            throw Error(ErrorKind::MassiveFormViolation,
                        "2-cycle " + word_to_string(quiver, cycle.word()) +
                            " has no mesonic arrow");
        }
        pair.lambda = coef;
        pair_of.emplace(pair.a, out.pairs.size());
        pair_of.emplace(pair.b, out.pairs.size());
        out.pairs.push_back(std::move(pair));
    }

    for (const auto& [cycle, coef] : qp_tilde.potential.terms()) {
        if (cycle.length() == 2) continue;
        const Word& word = cycle.word();
        std::vector<std::size_t> hits; // positions of massive arrows
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (pair_of.count(word[i])) hits.push_back(i);
        }
        if (hits.empty()) {
            out.remainder.add_term(cycle, coef);
            continue;
        }
        if (hits.size() > 1) {
            throw Error(ErrorKind::MassiveFormViolation,
                        "term " + word_to_string(quiver, word) +
                            " involves more than one massive arrow");
        }
        std::size_t pos = hits.front();
        ArrowId massive = word[pos];
        MassiveDecomposition::MassivePair& pair = out.pairs[pair_of.at(massive)];
        // Rotate so the massive arrow is leftmost; the remainder follows it.
        Word remainder;
        remainder.insert(remainder.end(), word.begin() + pos + 1, word.end());
        remainder.insert(remainder.end(), word.begin(), word.begin() + pos);
        if (massive == pair.a) {
            pair.companions.emplace_back(coef, std::move(remainder));
        } else {
            if (pair.has_v) {
                throw Error(ErrorKind::MassiveFormViolation,
                            "mesonic arrow '" + quiver.arrow(massive).name +
                                "' appears in two long terms");
            }
            if (coef != 1) {
                throw Error(ErrorKind::MassiveFormViolation,
                            "mesonic term " + word_to_string(quiver, word) +
                                " does not have coefficient 1");
            }
            pair.has_v = true;
            pair.v = std::move(remainder);
        }
    }
    return out;
}

Substitution reduction_right_equivalence(const QuiverWithPotential& qp_tilde,
                                         const std::vector<ArrowId>& mesonic) {
    MassiveDecomposition decomposition = decompose_massive(qp_tilde, mesonic);
    Substitution::ImageMap images;
    for (const auto& pair : decomposition.pairs) {
        Rational inv = Rational(-1) / pair.lambda;
        if (pair.has_v) {
            PathElement image = path_element(qp_tilde.quiver, Word{pair.a});
            image.add_term(pair.v, inv);
            images.emplace(pair.a, std::move(image));
        }
        if (!pair.companions.empty()) {
            PathElement image = path_element(qp_tilde.quiver, Word{pair.b});
            for (const auto& [sigma, u] : pair.companions) {
                image.add_term(u, inv * sigma);
            }
            images.emplace(pair.b, std::move(image));
        }
    }
    return Substitution(qp_tilde.quiver, std::move(images));
}

Substitution reduction_right_equivalence(const PremutationResult& premutation) {
    return reduction_right_equivalence(premutation.qp_tilde, premutation.mesonic_ids());
}

namespace {

// Translates a potential across an arrow-id map (same names, fresh ids).
std::optional<Potential> translate(const Potential& potential,
                                   const std::map<ArrowId, ArrowId>& arrow_map) {
    Potential out;
    for (const auto& [cycle, coef] : potential.terms()) {
        Word word;
        for (ArrowId id : cycle.word()) {
            auto it = arrow_map.find(id);
            if (it == arrow_map.end()) return std::nullopt;
            word.push_back(it->second);
        }
        out.add_term(Cycle::from_canonical_rotation(word), coef);
    }
    return out;
}

} // namespace

DualityReport verify_duality(const QuiverWithPotential& qp, VertexId k,
                             const IntegrateOptions& options, SubpathMode mode) {
    DualityReport report;
    report.vertex = k;
    report.mutated = mutate(qp, k, options);
    report.dual = seiberg_dual(qp, k, options, mode);

    report.agree_quiver = report.mutated.quiver == report.dual.quiver;
    if (report.agree_quiver) {
        report.agree_potential =
            cyclically_equal(report.mutated.potential, report.dual.potential);
    } else {
        report.notes.push_back("quivers disagree; skipping the potential comparison");
    }

    // Independent route: the explicit right equivalence of the premutated
    // potential must reduce to the integrated potential.
    PremutationResult premut = premutate(qp, k);
    IntegrationResult integrated = integrate_massive(premut.qp_tilde, options);
    try {
        Substitution phi = reduction_right_equivalence(premut);
        Potential phi_s =
            apply_substitution(premut.qp_tilde.quiver, phi, premut.qp_tilde.potential);
        auto [trivial, reduced_part] = split_degree_two(phi_s);
        auto translated = translate(reduced_part, integrated.arrow_map);
        report.phi_reduction_matches =
            translated.has_value() &&
            cyclically_equal(*translated, integrated.qp.potential);
        report.phi = std::move(phi);
        if (!report.phi_reduction_matches) {
            report.notes.push_back(
                "reduced part of phi(S~) differs from the integrated potential");
        }
    } catch (const Error& error) {
        report.notes.push_back(std::string("no right-equivalence certificate: ") +
                               error.what());
    }
    return report;
}

} // namespace qpd
