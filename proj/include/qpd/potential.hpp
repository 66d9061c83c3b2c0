#pragma once

#include <map>

#include "qpd/path.hpp"
#include "qpd/rational.hpp"

namespace qpd {

// Finite linear combination of cycles in cyclic normal form. Keys are
// canonical, so no two stored cycles are rotations of each other and zero
// coefficients are never kept.
class Potential {
public:
    using TermMap = std::map<Cycle, Rational>;

    Potential() = default;

    // Accumulates; cancels to zero silently.
    void add_term(const Cycle& cycle, const Rational& coefficient);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    Rational coefficient(const Cycle& cycle) const;
    bool contains_arrow(ArrowId arrow) const;

    Potential operator+(const Potential& other) const;
    Potential operator-() const;
    Potential scaled(const Rational& factor) const;

    bool operator==(const Potential& other) const = default;

private:
    TermMap terms_;
};

// Two potentials are cyclically equal iff their normal forms coincide;
// canonical storage makes this a term-map comparison.
inline bool cyclically_equal(const Potential& lhs, const Potential& rhs) {
    return lhs == rhs;
}

struct QuiverWithPotential {
    Quiver quiver;
    Potential potential;

    // Validates that every potential cycle composes in the quiver.
    static QuiverWithPotential make(Quiver quiver, Potential potential);
};

// (degree-two terms, everything longer); the two parts sum back to the input.
std::pair<Potential, Potential> split_degree_two(const Potential& potential);

} // namespace qpd
