#include "qpd/potential.hpp"

namespace qpd {

void Potential::add_term(const Cycle& cycle, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(cycle, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational Potential::coefficient(const Cycle& cycle) const {
    auto it = terms_.find(cycle);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool Potential::contains_arrow(ArrowId arrow) const {
    for (const auto& [cycle, coef] : terms_) {
        if (cycle.contains(arrow)) return true;
    }
    return false;
}

Potential Potential::operator+(const Potential& other) const {
    Potential out = *this;
    for (const auto& [cycle, coef] : other.terms_) out.add_term(cycle, coef);
    return out;
}

Potential Potential::operator-() const {
    Potential out;
    for (const auto& [cycle, coef] : terms_) out.terms_.emplace(cycle, -coef);
    return out;
}

Potential Potential::scaled(const Rational& factor) const {
    Potential out;
    if (factor == 0) return out;
    for (const auto& [cycle, coef] : terms_) out.terms_.emplace(cycle, coef * factor);
    return out;
}

QuiverWithPotential QuiverWithPotential::make(Quiver quiver, Potential potential) {
    for (const auto& [cycle, coef] : potential.terms()) {
        for (ArrowId id : cycle.word()) {
            if (id >= quiver.num_arrows()) {
                throw Error(ErrorKind::SemanticError,
                            "potential references arrow id " + std::to_string(id) +
                                " outside the quiver");
            }
        }
        Cycle::make(quiver, cycle.word()); // re-validates closure and composability
    }
    return QuiverWithPotential{std::move(quiver), std::move(potential)};
}

std::pair<Potential, Potential> split_degree_two(const Potential& potential) {
    Potential trivial;
    Potential rest;
    for (const auto& [cycle, coef] : potential.terms()) {
        (cycle.length() == 2 ? trivial : rest).add_term(cycle, coef);
    }
    return {std::move(trivial), std::move(rest)};
}

} // namespace qpd
