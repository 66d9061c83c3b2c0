#pragma once

#include <map>

#include "qpd/path_element.hpp"

namespace qpd {

// Arrow-indexed data of an algebra endomorphism of the path algebra:
// x -> image(x), identity on unlisted arrows. Construction enforces
// endpoint compatibility and an invertible degree-1 part, so instances
// are right equivalences when surjective onto the target arrow span.
class Substitution {
public:
    using ImageMap = std::map<ArrowId, PathElement>;

    // Throws EndpointMismatch / NotInvertible.
    Substitution(const Quiver& quiver, ImageMap images);

    static Substitution identity(const Quiver& quiver) { return Substitution(quiver, {}); }

    const ImageMap& images() const { return images_; }
    bool is_identity() const { return images_.empty(); }

    // Image of one arrow (identity for unlisted arrows).
    PathElement image(const Quiver& quiver, ArrowId arrow) const;

private:
    ImageMap images_;
};

// Multiplicative-on-paths, linear-on-sums application. The arrow-map
// variants do not require invertibility; integration over massive arrows
// uses them with non-invertible eliminations.
PathElement apply_arrow_map(const Quiver& quiver, const Substitution::ImageMap& images,
                            const PathElement& element);
Potential apply_arrow_map(const Quiver& quiver, const Substitution::ImageMap& images,
                          const Potential& potential);

PathElement apply_substitution(const Quiver& quiver, const Substitution& phi,
                               const PathElement& element);
Potential apply_substitution(const Quiver& quiver, const Substitution& phi,
                             const Potential& potential);

} // namespace qpd
