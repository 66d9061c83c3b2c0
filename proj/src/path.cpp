#include "qpd/path.hpp"

#include <algorithm>

namespace qpd {

Path Path::make(const Quiver& quiver, Word word) {
    if (word.empty()) {
        throw Error(ErrorKind::SemanticError, "empty path word");
    }
    if (!quiver.composable(word)) {
        throw Error(ErrorKind::SemanticError,
                    "word does not compose: " + word_to_string(quiver, word));
    }
    Path p;
    p.src = quiver.word_src(word);
    p.dst = quiver.word_dst(word);
    p.word = std::move(word);
    return p;
}

Word minimal_rotation(const Word& word) {
    Word best = word;
    Word rot = word;
    for (std::size_t i = 1; i < word.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

Cycle Cycle::make(const Quiver& quiver, const Word& word) {
    if (word.empty()) {
        throw Error(ErrorKind::NotACycle, "empty cycle word");
    }
    if (!quiver.composable(word)) {
        throw Error(ErrorKind::NotACycle,
                    "word does not compose: " + word_to_string(quiver, word));
    }
    if (quiver.word_src(word) != quiver.word_dst(word)) {
        throw Error(ErrorKind::NotACycle,
                    "word does not close: " + word_to_string(quiver, word));
    }
    return Cycle(minimal_rotation(word));
}

Cycle Cycle::from_canonical_rotation(Word already_canonical) {
    return Cycle(std::move(already_canonical));
}

bool Cycle::contains(ArrowId arrow) const {
    return std::find(word_.begin(), word_.end(), arrow) != word_.end();
}

std::size_t Cycle::count(ArrowId arrow) const {
    return static_cast<std::size_t>(std::count(word_.begin(), word_.end(), arrow));
}

std::string word_to_string(const Quiver& quiver, const Word& word) {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ' ';
        out += word[i] < quiver.num_arrows() ? quiver.arrow(word[i]).name
                                             : "?" + std::to_string(word[i]);
    }
    return out;
}

} // namespace qpd
