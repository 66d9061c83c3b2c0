#pragma once

#include <map>
#include <optional>
#include <utility>

#include "qpd/potential.hpp"

namespace qpd {

// Formal rational linear combination of nonempty paths — a general element
// of the path algebra. Terms never carry zero coefficients. An optional
// (src,dst) tag records the homogeneity component, which survives even when
// all terms cancel.
class PathElement {
public:
    using TermMap = std::map<Word, Rational>;

    PathElement() = default;
    static PathElement zero(VertexId src, VertexId dst);

    void add_term(const Word& word, const Rational& coefficient);
    void add(const PathElement& other);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Word& word) const;
    bool contains_arrow(ArrowId arrow) const;
    std::size_t max_term_length() const;

    PathElement operator+(const PathElement& other) const;
    PathElement operator-(const PathElement& other) const;
    PathElement scaled(const Rational& factor) const;

    void set_component(VertexId src, VertexId dst) { component_ = {src, dst}; }
    const std::optional<std::pair<VertexId, VertexId>>& component_tag() const {
        return component_;
    }

    // (src,dst) shared by all terms, from the tag or computed against the
    // quiver; nullopt when terms mix components or the element is untagged
    // zero.
    std::optional<std::pair<VertexId, VertexId>> homogeneity(const Quiver& quiver) const;

    bool operator==(const PathElement& other) const { return terms_ == other.terms_; }

private:
    TermMap terms_;
    std::optional<std::pair<VertexId, VertexId>> component_;
};

// Single validated path as an element.
PathElement path_element(const Quiver& quiver, const Word& word,
                         const Rational& coefficient = Rational(1));

// Bilinear extension of path composition; non-composable products vanish.
PathElement multiply(const Quiver& quiver, const PathElement& lhs, const PathElement& rhs);

// Sum over the occurrences of `arrow` in each cycle of the rotated
// remainder, scaled by the term coefficient. Homogeneous from dst(arrow)
// to src(arrow); zero (tagged) when the arrow is absent.
PathElement cyclic_derivative(const Quiver& quiver, const Potential& potential,
                              ArrowId arrow);

// A closed homogeneous element folded into a potential (terms normalized).
Potential to_potential(const Quiver& quiver, const PathElement& element);

std::string to_string(const Quiver& quiver, const PathElement& element);
std::string to_string(const Quiver& quiver, const Potential& potential);

} // namespace qpd
