#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "qpd/errors.hpp"
#include "qpd/ids.hpp"

namespace qpd {

struct Arrow {
    ArrowId id;
    std::string name;
    VertexId src;
    VertexId dst;
};

// Finite directed multigraph without loops. Vertices are 1..n; arrows keep
// creation order, which doubles as the global arrow order.
class Quiver {
public:
    Quiver() = default;
    Quiver(std::string name, VertexId num_vertices)
        : name_(std::move(name)), num_vertices_(num_vertices) {}

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    VertexId num_vertices() const { return num_vertices_; }
    bool has_vertex(VertexId v) const { return v >= 1 && v <= num_vertices_; }

    // Throws SemanticError for unknown endpoints or loops, NameCollision for
    // duplicate names. Arrow names may not contain whitespace, '#' or ';'.
    ArrowId add_arrow(const std::string& name, VertexId src, VertexId dst);

    const std::vector<Arrow>& arrows() const { return arrows_; }
    const Arrow& arrow(ArrowId id) const { return arrows_.at(id); }
    std::size_t num_arrows() const { return arrows_.size(); }

    std::optional<ArrowId> find_arrow(const std::string& name) const;
    bool has_arrow_name(const std::string& name) const { return by_name_.count(name) > 0; }

    std::vector<ArrowId> arrows_into(VertexId v) const;
    std::vector<ArrowId> arrows_out_of(VertexId v) const;

    // Source of a written word (src of the rightmost arrow).
    VertexId word_src(const Word& word) const { return arrow(word.back()).src; }
    // Target of a written word (dst of the leftmost arrow).
    VertexId word_dst(const Word& word) const { return arrow(word.front()).dst; }

    // Adjacent written entries must compose: src(word[i]) == dst(word[i+1]).
    bool composable(const Word& word) const;

    // True when some pair of arrows forms a 2-cycle through v.
    bool has_two_cycle_through(VertexId v) const;

    bool operator==(const Quiver& other) const;

private:
    std::string name_;
    VertexId num_vertices_ = 0;
    std::vector<Arrow> arrows_;
    std::unordered_map<std::string, ArrowId> by_name_;
};

// Name validity shared by the quiver and the parser.
bool valid_arrow_name(const std::string& name);

} // namespace qpd
