#include "qpd/substitution.hpp"

#include <vector>

namespace qpd {

namespace {

// Exact nonsingularity test for the arrow->arrow coefficient matrix.
bool degree_one_invertible(const Quiver& quiver, const Substitution::ImageMap& images) {
    std::size_t n = quiver.num_arrows();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (ArrowId x = 0; x < n; ++x) {
        auto it = images.find(x);
        if (it == images.end()) {
            m[x][x] = 1;
            continue;
        }
        for (const auto& [word, coef] : it->second.terms()) {
            if (word.size() == 1) m[x][word[0]] = coef;
        }
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return false;
        std::swap(m[pivot], m[col]);
        for (std::size_t row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational factor = m[row][col] / m[col][col];
            for (std::size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
        }
    }
    return true;
}

} // namespace

Substitution::Substitution(const Quiver& quiver, ImageMap images) : images_(std::move(images)) {
    for (auto it = images_.begin(); it != images_.end();) {
        const Arrow& x = quiver.arrow(it->first);
        const PathElement& image = it->second;
        if (!image.is_zero()) {
            auto ends = image.homogeneity(quiver);
            if (!ends || ends->first != x.src || ends->second != x.dst) {
                throw Error(ErrorKind::EndpointMismatch,
                            "image of arrow '" + x.name + "' does not run " +
                                std::to_string(x.src) + " -> " + std::to_string(x.dst));
            }
        }
        // Drop literal identity entries so is_identity() is meaningful.
        if (image.terms().size() == 1) {
            const auto& [word, coef] = *image.terms().begin();
            if (word.size() == 1 && word[0] == it->first && coef == 1) {
                it = images_.erase(it);
                continue;
            }
        }
        ++it;
    }
    if (!degree_one_invertible(quiver, images_)) {
        throw Error(ErrorKind::NotInvertible,
                    "degree-1 part of the substitution is not invertible");
    }
}

PathElement Substitution::image(const Quiver& quiver, ArrowId arrow) const {
    auto it = images_.find(arrow);
    if (it != images_.end()) return it->second;
    return path_element(quiver, Word{arrow});
}

PathElement apply_arrow_map(const Quiver& quiver, const Substitution::ImageMap& images,
                            const PathElement& element) {
    PathElement out;
    for (const auto& [word, coef] : element.terms()) {
        PathElement acc;
        bool first = true;
        for (ArrowId arrow : word) {
            auto it = images.find(arrow);
            PathElement factor =
                it != images.end() ? it->second : path_element(quiver, Word{arrow});
            acc = first ? factor : multiply(quiver, acc, factor);
            first = false;
            if (acc.is_zero()) break;
        }
        out.add(acc.scaled(coef));
    }
    return out;
}

Potential apply_arrow_map(const Quiver& quiver, const Substitution::ImageMap& images,
                          const Potential& potential) {
    Potential out;
    for (const auto& [cycle, coef] : potential.terms()) {
        PathElement image =
            apply_arrow_map(quiver, images,
                            path_element(quiver, cycle.word(), coef));
        for (const auto& [word, c] : image.terms()) {
            out.add_term(Cycle::make(quiver, word), c);
        }
    }
    return out;
}

PathElement apply_substitution(const Quiver& quiver, const Substitution& phi,
                               const PathElement& element) {
    return apply_arrow_map(quiver, phi.images(), element);
}

Potential apply_substitution(const Quiver& quiver, const Substitution& phi,
                             const Potential& potential) {
    return apply_arrow_map(quiver, phi.images(), potential);
}

} // namespace qpd
