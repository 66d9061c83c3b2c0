#include "qpd/path_element.hpp"

#include <algorithm>

namespace qpd {

PathElement PathElement::zero(VertexId src, VertexId dst) {
    PathElement e;
    e.component_ = {src, dst};
    return e;
}

void PathElement::add_term(const Word& word, const Rational& coefficient) {
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.emplace(word, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

void PathElement::add(const PathElement& other) {
    for (const auto& [word, coef] : other.terms_) add_term(word, coef);
}

Rational PathElement::coefficient(const Word& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool PathElement::contains_arrow(ArrowId arrow) const {
    for (const auto& [word, coef] : terms_) {
        if (std::find(word.begin(), word.end(), arrow) != word.end()) return true;
    }
    return false;
}

std::size_t PathElement::max_term_length() const {
    std::size_t best = 0;
    for (const auto& [word, coef] : terms_) best = std::max(best, word.size());
    return best;
}

PathElement PathElement::operator+(const PathElement& other) const {
    PathElement out = *this;
    out.add(other);
    return out;
}

PathElement PathElement::operator-(const PathElement& other) const {
    PathElement out = *this;
    for (const auto& [word, coef] : other.terms_) out.add_term(word, -coef);
    return out;
}

PathElement PathElement::scaled(const Rational& factor) const {
    PathElement out;
    out.component_ = component_;
    if (factor == 0) return out;
    for (const auto& [word, coef] : terms_) out.terms_.emplace(word, coef * factor);
    return out;
}

std::optional<std::pair<VertexId, VertexId>> PathElement::homogeneity(
    const Quiver& quiver) const {
    if (terms_.empty()) return component_;
    std::pair<VertexId, VertexId> ends{quiver.word_src(terms_.begin()->first),
                                       quiver.word_dst(terms_.begin()->first)};
    for (const auto& [word, coef] : terms_) {
        if (quiver.word_src(word) != ends.first || quiver.word_dst(word) != ends.second) {
            return std::nullopt;
        }
    }
    if (component_ && *component_ != ends) return std::nullopt;
    return ends;
}

PathElement path_element(const Quiver& quiver, const Word& word, const Rational& coefficient) {
    Path p = Path::make(quiver, word);
    PathElement e = PathElement::zero(p.src, p.dst);
    e.add_term(p.word, coefficient);
    return e;
}

PathElement multiply(const Quiver& quiver, const PathElement& lhs, const PathElement& rhs) {
    PathElement out;
    for (const auto& [lw, lc] : lhs.terms()) {
        for (const auto& [rw, rc] : rhs.terms()) {
            if (quiver.word_src(lw) != quiver.word_dst(rw)) continue;
            Word product = lw;
            product.insert(product.end(), rw.begin(), rw.end());
            out.add_term(product, lc * rc);
        }
    }
    return out;
}

PathElement cyclic_derivative(const Quiver& quiver, const Potential& potential,
                              ArrowId arrow) {
    const Arrow& x = quiver.arrow(arrow);
    PathElement out = PathElement::zero(x.dst, x.src);
    for (const auto& [cycle, coef] : potential.terms()) {
        const Word& word = cycle.word();
        for (std::size_t k = 0; k < word.size(); ++k) {
            if (word[k] != arrow) continue;
            // remainder a_{k+1} .. a_n a_1 .. a_{k-1} in written order
            Word remainder;
            remainder.reserve(word.size() - 1);
            remainder.insert(remainder.end(), word.begin() + k + 1, word.end());
            remainder.insert(remainder.end(), word.begin(), word.begin() + k);
            if (remainder.empty()) {
                throw Error(ErrorKind::Internal, "loop term in potential");
            }
            out.add_term(remainder, coef);
        }
    }
    return out;
}

Potential to_potential(const Quiver& quiver, const PathElement& element) {
    Potential out;
    for (const auto& [word, coef] : element.terms()) {
        out.add_term(Cycle::make(quiver, word), coef);
    }
    return out;
}

std::string to_string(const Quiver& quiver, const PathElement& element) {
    if (element.is_zero()) return "0";
    std::string out;
    for (const auto& [word, coef] : element.terms()) {
        if (!out.empty()) out += ' ';
        out += to_string(coef) + ' ' + word_to_string(quiver, word) + " ;";
    }
    return out;
}

std::string to_string(const Quiver& quiver, const Potential& potential) {
    if (potential.is_zero()) return "0";
    std::string out;
    for (const auto& [cycle, coef] : potential.terms()) {
        if (!out.empty()) out += ' ';
        out += to_string(coef) + ' ' + word_to_string(quiver, cycle.word()) + " ;";
    }
    return out;
}

} // namespace qpd
