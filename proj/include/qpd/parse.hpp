#pragma once

#include <string>
#include <vector>

#include "qpd/path_element.hpp"

namespace qpd {

// Parse tree of the QP text format. Syntax is checked by the parser;
// semantic faults (loops, duplicate names, bad endpoints, non-composable
// terms) are left in place for validate() to report.
struct ParsedArrow {
    std::string name;
    VertexId src = 0;
    VertexId dst = 0;
    int line = 0;
};

struct ParsedTerm {
    Rational coefficient;
    std::vector<std::string> arrow_names; // written order, rightmost applied first
    int line = 0;
};

struct ParsedQp {
    std::string name;
    VertexId num_vertices = 0;
    std::vector<ParsedArrow> arrows;
    std::vector<ParsedTerm> terms;
};

// Throws SyntaxError with a line number. Zero coefficients are rejected here.
ParsedQp parse_qp_text(const std::string& text);

struct ValidationIssue {
    enum class Kind {
        InvalidName,
        DuplicateName,
        UnknownVertex,
        LoopArrow,
        UnknownArrowInTerm,
        NonComposableTerm,
        VertexNotOnCycle,
    };
    Kind kind;
    std::string message;
    int line = 0;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool valid() const { return issues.empty(); }
};

ValidationReport validate(const ParsedQp& doc, bool require_cycle_cover = false);
ValidationReport validate(const QuiverWithPotential& qp, bool require_cycle_cover = false);

// Throws SemanticError describing the first validation issue.
QuiverWithPotential build_qp(const ParsedQp& doc);

// parse + validate + build in one step.
QuiverWithPotential parse_qp(const std::string& text);

ParsedQp to_document(const QuiverWithPotential& qp);

// Canonical text form; parse_qp(serialize_qp(qp)) reproduces qp exactly.
std::string serialize_qp(const QuiverWithPotential& qp);

// Parses a linear combination in potential-line syntax
// ("<coef> <arrow> ... ; <coef> <arrow> ... [;]") against a quiver.
PathElement parse_path_element(const Quiver& quiver, const std::string& text);

const char* to_string(ValidationIssue::Kind kind);

} // namespace qpd
