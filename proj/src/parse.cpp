#include "qpd/parse.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace qpd {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

[[noreturn]] void syntax_error(int line, const std::string& message) {
    throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line) + ": " + message);
}

VertexId parse_vertex_id(const std::string& tok, int line) {
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) {
            return std::isdigit(c);
        })) {
        syntax_error(line, "expected a vertex number, got '" + tok + "'");
    }
    unsigned long v = std::stoul(tok);
    if (v == 0 || v > 100000) syntax_error(line, "vertex number out of range: " + tok);
    return static_cast<VertexId>(v);
}

ParsedTerm parse_term_tokens(std::vector<std::string> tokens, int line) {
    // The trailing ';' may be its own token or glued to the last arrow.
    if (tokens.empty()) syntax_error(line, "empty potential term");
    if (tokens.back() == ";") {
        tokens.pop_back();
    } else if (tokens.back().size() > 1 && tokens.back().back() == ';') {
        tokens.back().pop_back();
    } else {
        syntax_error(line, "potential term must end with ';'");
    }
    if (tokens.size() < 2) {
        syntax_error(line, "potential term needs a coefficient and at least one arrow");
    }
    ParsedTerm term;
    term.line = line;
    try {
        term.coefficient = rational_from_string(tokens[0]);
    } catch (const Error&) {
        syntax_error(line, "malformed coefficient '" + tokens[0] + "'");
    }
    if (term.coefficient == 0) {
        syntax_error(line, "zero coefficient is not allowed");
    }
    term.arrow_names.assign(tokens.begin() + 1, tokens.end());
    return term;
}

} // namespace

ParsedQp parse_qp_text(const std::string& text) {
    ParsedQp doc;
    enum class State { ExpectQuiver, ExpectVertices, Arrows, Potential, Done };
    State state = State::ExpectQuiver;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto tokens = tokenize(strip_comment(raw));
        if (tokens.empty()) continue;
        const std::string& head = tokens[0];
        switch (state) {
            case State::ExpectQuiver:
                if (head != "quiver" || tokens.size() != 2) {
                    syntax_error(lineno, "expected 'quiver <name>'");
                }
                doc.name = tokens[1];
                state = State::ExpectVertices;
                break;
            case State::ExpectVertices:
                if (head != "vertices" || tokens.size() != 2) {
                    syntax_error(lineno, "expected 'vertices <n>'");
                }
                if (!std::all_of(tokens[1].begin(), tokens[1].end(), [](unsigned char c) {
                        return std::isdigit(c);
                    })) {
                    syntax_error(lineno, "vertex count must be a number");
                }
                doc.num_vertices = static_cast<VertexId>(std::stoul(tokens[1]));
                state = State::Arrows;
                break;
            case State::Arrows:
                if (head == "arrow") {
                    if (tokens.size() != 4) {
                        syntax_error(lineno, "expected 'arrow <name> <src> <dst>'");
                    }
                    ParsedArrow arrow;
                    arrow.name = tokens[1];
                    arrow.src = parse_vertex_id(tokens[2], lineno);
                    arrow.dst = parse_vertex_id(tokens[3], lineno);
                    arrow.line = lineno;
                    doc.arrows.push_back(std::move(arrow));
                } else if (head == "potential" && tokens.size() == 1) {
                    state = State::Potential;
                } else {
                    syntax_error(lineno, "expected 'arrow', 'potential', got '" + head + "'");
                }
                break;
            case State::Potential:
                if (head == "end" && tokens.size() == 1) {
                    state = State::Done;
                } else {
                    doc.terms.push_back(parse_term_tokens(std::move(tokens), lineno));
                }
                break;
            case State::Done:
                syntax_error(lineno, "content after 'end'");
        }
    }
    if (state == State::ExpectQuiver) throw Error(ErrorKind::SyntaxError, "empty input");
    if (state == State::ExpectVertices) {
        throw Error(ErrorKind::SyntaxError, "missing 'vertices <n>' line");
    }
    if (state == State::Potential) {
        throw Error(ErrorKind::SyntaxError, "potential block not closed with 'end'");
    }
    return doc;
}

namespace {

// Vertices lying on a cycle: SCC of size >= 2, or a loop arrow.
std::vector<bool> cycle_covered(VertexId num_vertices,
                                const std::vector<ParsedArrow>& arrows) {
    std::size_t n = num_vertices;
    std::vector<std::vector<std::size_t>> adj(n + 1);
    std::vector<bool> covered(n + 1, false);
    for (const ParsedArrow& a : arrows) {
        if (a.src < 1 || a.src > n || a.dst < 1 || a.dst > n) continue;
        if (a.src == a.dst) {
            covered[a.src] = true;
            continue;
        }
        adj[a.src].push_back(a.dst);
    }
    // Tarjan iterative
    std::vector<int> index(n + 1, -1), low(n + 1, 0);
    std::vector<bool> onstack(n + 1, false);
    std::vector<std::size_t> stack;
    int counter = 0;
    struct Frame {
        std::size_t v;
        std::size_t next_child;
    };
    for (std::size_t root = 1; root <= n; ++root) {
        if (index[root] != -1) continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        onstack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            if (f.next_child < adj[f.v].size()) {
                std::size_t w = adj[f.v][f.next_child++];
                if (index[w] == -1) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    onstack[w] = true;
                    frames.push_back({w, 0});
                } else if (onstack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
            } else {
                if (low[f.v] == index[f.v]) {
                    std::vector<std::size_t> comp;
                    while (true) {
                        std::size_t w = stack.back();
                        stack.pop_back();
                        onstack[w] = false;
                        comp.push_back(w);
                        if (w == f.v) break;
                    }
                    if (comp.size() >= 2) {
                        for (std::size_t w : comp) covered[w] = true;
                    }
                }
                std::size_t v = f.v;
                frames.pop_back();
                if (!frames.empty()) {
                    low[frames.back().v] = std::min(low[frames.back().v], low[v]);
                }
            }
        }
    }
    return covered;
}

} // namespace

ValidationReport validate(const ParsedQp& doc, bool require_cycle_cover) {
    ValidationReport report;
    auto issue = [&](ValidationIssue::Kind kind, const std::string& message, int line) {
        report.issues.push_back(ValidationIssue{kind, message, line});
    };

    std::unordered_map<std::string, const ParsedArrow*> by_name;
    std::unordered_map<std::string, int> name_count;
    for (const ParsedArrow& a : doc.arrows) {
        if (!valid_arrow_name(a.name)) {
            issue(ValidationIssue::Kind::InvalidName, "invalid arrow name '" + a.name + "'",
                  a.line);
        }
        if (++name_count[a.name] == 2) {
            issue(ValidationIssue::Kind::DuplicateName,
                  "arrow name '" + a.name + "' appears more than once", a.line);
        }
        if (a.src < 1 || a.src > doc.num_vertices || a.dst < 1 || a.dst > doc.num_vertices) {
            issue(ValidationIssue::Kind::UnknownVertex,
                  "arrow '" + a.name + "' references a vertex outside 1.." +
                      std::to_string(doc.num_vertices),
                  a.line);
        } else if (a.src == a.dst) {
            issue(ValidationIssue::Kind::LoopArrow, "arrow '" + a.name + "' is a loop",
                  a.line);
        }
        by_name.emplace(a.name, &a);
    }

    for (const ParsedTerm& term : doc.terms) {
        bool resolvable = true;
        for (const std::string& name : term.arrow_names) {
            if (!by_name.count(name)) {
                issue(ValidationIssue::Kind::UnknownArrowInTerm,
                      "term references unknown arrow '" + name + "'", term.line);
                resolvable = false;
            } else if (name_count[name] > 1) {
                resolvable = false; // ambiguous; duplicate already reported
            }
        }
        if (!resolvable) continue;
        bool composes = true;
        for (std::size_t i = 0; i + 1 < term.arrow_names.size() && composes; ++i) {
            composes = by_name[term.arrow_names[i]]->src == by_name[term.arrow_names[i + 1]]->dst;
        }
        if (composes) {
            composes = by_name[term.arrow_names.back()]->src ==
                       by_name[term.arrow_names.front()]->dst;
        }
        if (!composes) {
            std::string joined;
            for (const auto& n : term.arrow_names) joined += joined.empty() ? n : " " + n;
            issue(ValidationIssue::Kind::NonComposableTerm,
                  "term '" + joined + "' is not a composable cycle", term.line);
        }
    }

    if (require_cycle_cover) {
        auto covered = cycle_covered(doc.num_vertices, doc.arrows);
        for (VertexId v = 1; v <= doc.num_vertices; ++v) {
            if (!covered[v]) {
                issue(ValidationIssue::Kind::VertexNotOnCycle,
                      "vertex " + std::to_string(v) + " lies on no cycle", 0);
            }
        }
    }
    return report;
}

ValidationReport validate(const QuiverWithPotential& qp, bool require_cycle_cover) {
    return validate(to_document(qp), require_cycle_cover);
}

QuiverWithPotential build_qp(const ParsedQp& doc) {
    ValidationReport report = validate(doc, false);
    if (!report.valid()) {
        throw Error(ErrorKind::SemanticError, report.issues.front().message);
    }
    Quiver quiver(doc.name, doc.num_vertices);
    for (const ParsedArrow& a : doc.arrows) quiver.add_arrow(a.name, a.src, a.dst);
    Potential potential;
    for (const ParsedTerm& term : doc.terms) {
        Word word;
        for (const std::string& name : term.arrow_names) word.push_back(*quiver.find_arrow(name));
        potential.add_term(Cycle::make(quiver, word), term.coefficient);
    }
    return QuiverWithPotential{std::move(quiver), std::move(potential)};
}

QuiverWithPotential parse_qp(const std::string& text) {
    return build_qp(parse_qp_text(text));
}

ParsedQp to_document(const QuiverWithPotential& qp) {
    ParsedQp doc;
    doc.name = qp.quiver.name();
    doc.num_vertices = qp.quiver.num_vertices();
    for (const Arrow& a : qp.quiver.arrows()) {
        doc.arrows.push_back(ParsedArrow{a.name, a.src, a.dst, 0});
    }
    for (const auto& [cycle, coef] : qp.potential.terms()) {
        ParsedTerm term;
        term.coefficient = coef;
        for (ArrowId id : cycle.word()) term.arrow_names.push_back(qp.quiver.arrow(id).name);
        doc.terms.push_back(std::move(term));
    }
    return doc;
}

std::string serialize_qp(const QuiverWithPotential& qp) {
    std::ostringstream out;
    out << "quiver " << (qp.quiver.name().empty() ? "q" : qp.quiver.name()) << "\n";
    out << "vertices " << qp.quiver.num_vertices() << "\n";
    for (const Arrow& a : qp.quiver.arrows()) {
        out << "arrow " << a.name << ' ' << a.src << ' ' << a.dst << "\n";
    }
    out << "potential\n";
    for (const auto& [cycle, coef] : qp.potential.terms()) {
        out << to_string(coef);
        for (ArrowId id : cycle.word()) out << ' ' << qp.quiver.arrow(id).name;
        out << " ;\n";
    }
    out << "end\n";
    return out.str();
}

PathElement parse_path_element(const Quiver& quiver, const std::string& text) {
    // Terms separated by ';'; a trailing ';' is optional.
    PathElement element;
    std::string chunk;
    std::vector<std::string> chunks;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        bool closes = tok == ";";
        if (!closes && tok.size() > 1 && tok.back() == ';') {
            tok.pop_back();
            chunk += chunk.empty() ? tok : " " + tok;
            closes = true;
        } else if (!closes) {
            chunk += chunk.empty() ? tok : " " + tok;
        }
        if (closes) {
            if (!chunk.empty()) chunks.push_back(chunk);
            chunk.clear();
        }
    }
    if (!chunk.empty()) chunks.push_back(chunk);
    if (chunks.empty()) {
        throw Error(ErrorKind::SyntaxError, "empty path element");
    }
    for (const std::string& c : chunks) {
        auto tokens = tokenize(c);
        if (tokens.size() < 2) {
            throw Error(ErrorKind::SyntaxError,
                        "term '" + c + "' needs a coefficient and at least one arrow");
        }
        Rational coef = rational_from_string(tokens[0]);
        if (coef == 0) {
            throw Error(ErrorKind::SyntaxError, "zero coefficient in '" + c + "'");
        }
        Word word;
        for (std::size_t i = 1; i < tokens.size(); ++i) {
            auto id = quiver.find_arrow(tokens[i]);
            if (!id) {
                throw Error(ErrorKind::SyntaxError, "unknown arrow '" + tokens[i] + "'");
            }
            word.push_back(*id);
        }
        Path::make(quiver, word); // composability check
        element.add_term(word, coef);
    }
    return element;
}

const char* to_string(ValidationIssue::Kind kind) {
    switch (kind) {
        case ValidationIssue::Kind::InvalidName: return "invalid-name";
        case ValidationIssue::Kind::DuplicateName: return "duplicate-name";
        case ValidationIssue::Kind::UnknownVertex: return "unknown-vertex";
        case ValidationIssue::Kind::LoopArrow: return "loop-arrow";
        case ValidationIssue::Kind::UnknownArrowInTerm: return "unknown-arrow-in-term";
        case ValidationIssue::Kind::NonComposableTerm: return "non-composable-term";
        case ValidationIssue::Kind::VertexNotOnCycle: return "vertex-not-on-cycle";
    }
    return "unknown";
}

} // namespace qpd
