#include "qpd/dot.hpp"

#include <sstream>

namespace qpd {

namespace {

std::string quote(const std::string& text) {
    std::string out = "\"";
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string export_dot(const Quiver& quiver) {
    std::ostringstream out;
    out << "digraph " << quote(quiver.name().empty() ? "quiver" : quiver.name()) << " {\n";
    for (VertexId v = 1; v <= quiver.num_vertices(); ++v) {
        out << "  " << v << ";\n";
    }
    for (const Arrow& a : quiver.arrows()) {
        out << "  " << a.src << " -> " << a.dst << " [label=" << quote(a.name) << "];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace qpd
