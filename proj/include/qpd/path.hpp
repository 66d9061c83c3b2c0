#pragma once

#include <compare>
#include <string>

#include "qpd/quiver.hpp"

namespace qpd {

// A composable arrow word with its endpoints resolved.
struct Path {
    Word word;
    VertexId src = 0;
    VertexId dst = 0;

    std::size_t length() const { return word.size(); }

    // Validates composability. Throws NotACycle-flavoured SemanticError on
    // an empty or non-composing word.
    static Path make(const Quiver& quiver, Word word);
};

// A closed path stored in cyclic normal form: the rotation of the written
// word that is lexicographically minimal in the arrow order.
class Cycle {
public:
    Cycle() = default;

    // Throws NotACycle if the word does not compose or does not close.
    static Cycle make(const Quiver& quiver, const Word& word);

    // Canonicalizes a rotation-of-a-known-cycle without re-validating.
    static Cycle from_canonical_rotation(Word already_canonical);

    const Word& word() const { return word_; }
    std::size_t length() const { return word_.size(); }
    bool contains(ArrowId arrow) const;
    std::size_t count(ArrowId arrow) const;

    // Length-then-lex; shorter cycles order first.
    std::strong_ordering operator<=>(const Cycle& other) const {
        if (auto c = word_.size() <=> other.word_.size(); c != 0) return c;
        if (word_ < other.word_) return std::strong_ordering::less;
        if (other.word_ < word_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }
    bool operator==(const Cycle& other) const = default;

private:
    explicit Cycle(Word word) : word_(std::move(word)) {}

    Word word_;
};

// The lexicographically minimal rotation of a written cycle word.
Word minimal_rotation(const Word& word);

// Validate and canonicalize a raw cycle word.
inline Cycle cyclic_normal_form(const Quiver& quiver, const Word& word) {
    return Cycle::make(quiver, word);
}

// Renders a word as space-separated arrow names in written order.
std::string word_to_string(const Quiver& quiver, const Word& word);

} // namespace qpd
