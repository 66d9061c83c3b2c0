#include "qpd/quiver.hpp"

#include <cctype>

namespace qpd {

bool valid_arrow_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name) {
        if (std::isspace(static_cast<unsigned char>(c))) return false;
        if (c == '#' || c == ';') return false;
        if (!std::isprint(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

ArrowId Quiver::add_arrow(const std::string& name, VertexId src, VertexId dst) {
    if (!valid_arrow_name(name)) {
        throw Error(ErrorKind::SemanticError, "invalid arrow name '" + name + "'");
    }
    if (!has_vertex(src) || !has_vertex(dst)) {
        throw Error(ErrorKind::SemanticError,
                    "arrow '" + name + "' references a vertex outside 1.." +
                        std::to_string(num_vertices_));
    }
    if (src == dst) {
        throw Error(ErrorKind::SemanticError, "arrow '" + name + "' is a loop");
    }
    if (by_name_.count(name)) {
        throw Error(ErrorKind::NameCollision, "duplicate arrow name '" + name + "'");
    }
    ArrowId id = static_cast<ArrowId>(arrows_.size());
    arrows_.push_back(Arrow{id, name, src, dst});
    by_name_.emplace(name, id);
    return id;
}

std::optional<ArrowId> Quiver::find_arrow(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
}

std::vector<ArrowId> Quiver::arrows_into(VertexId v) const {
    std::vector<ArrowId> out;
    for (const Arrow& a : arrows_) {
        if (a.dst == v) out.push_back(a.id);
    }
    return out;
}

std::vector<ArrowId> Quiver::arrows_out_of(VertexId v) const {
    std::vector<ArrowId> out;
    for (const Arrow& a : arrows_) {
        if (a.src == v) out.push_back(a.id);
    }
    return out;
}

bool Quiver::composable(const Word& word) const {
    if (word.empty()) return false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
        if (arrow(word[i]).src != arrow(word[i + 1]).dst) return false;
    }
    return true;
}

bool Quiver::has_two_cycle_through(VertexId v) const {
    for (const Arrow& a : arrows_) {
        if (a.dst != v) continue;
        for (const Arrow& b : arrows_) {
            if (b.src == v && b.dst == a.src) return true;
        }
    }
    return false;
}

bool Quiver::operator==(const Quiver& other) const {
    if (num_vertices_ != other.num_vertices_) return false;
    if (arrows_.size() != other.arrows_.size()) return false;
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
        const Arrow& x = arrows_[i];
        const Arrow& y = other.arrows_[i];
        if (x.name != y.name || x.src != y.src || x.dst != y.dst) return false;
    }
    return true;
}

} // namespace qpd
