// qpdual: exact computations on quivers with potentials — validation,
// Jacobian relations, DWZ mutation, Seiberg duality, dualizability
// certificates and bounded ideal membership.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qpd/dot.hpp"
#include "qpd/fixtures.hpp"
#include "qpd/jacobian.hpp"
#include "qpd/mutation.hpp"
#include "qpd/parse.hpp"
#include "qpd/seiberg.hpp"

using json = nlohmann::ordered_json;
using namespace qpd;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDisagreement = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPrecondition = 3;

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::TwoCycleAtVertex:
        case ErrorKind::NotReduced:
        case ErrorKind::RelatedArrows:
        case ErrorKind::FuelExhausted:
        case ErrorKind::NotGood:
        case ErrorKind::NotCertifiedDualizable:
        case ErrorKind::MassiveFormViolation:
        case ErrorKind::NoIncomingArrows:
        case ErrorKind::InhomogeneousElement:
        case ErrorKind::NameCollision:
            return kExitPrecondition;
        default:
            return kExitUsage;
    }
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::SyntaxError, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// --- JSON rendering -------------------------------------------------------

json term_json(const Quiver& quiver, const Word& word, const Rational& coef) {
    json arrows = json::array();
    for (ArrowId id : word) arrows.push_back(quiver.arrow(id).name);
    return json{{"coefficient", to_string(coef)}, {"arrows", arrows}};
}

json element_json(const Quiver& quiver, const PathElement& element) {
    json terms = json::array();
    for (const auto& [word, coef] : element.terms()) {
        terms.push_back(term_json(quiver, word, coef));
    }
    return terms;
}

json potential_json(const Quiver& quiver, const Potential& potential) {
    json terms = json::array();
    for (const auto& [cycle, coef] : potential.terms()) {
        terms.push_back(term_json(quiver, cycle.word(), coef));
    }
    return terms;
}

json qp_json(const QuiverWithPotential& qp) {
    json arrows = json::array();
    for (const Arrow& a : qp.quiver.arrows()) {
        arrows.push_back(json{{"name", a.name}, {"src", a.src}, {"dst", a.dst}});
    }
    return json{{"name", qp.quiver.name()},
                {"vertices", qp.quiver.num_vertices()},
                {"arrows", arrows},
                {"potential", potential_json(qp.quiver, qp.potential)}};
}

json verdict_json(const QuiverWithPotential& qp, const MembershipVerdict& verdict) {
    json out;
    switch (verdict.status) {
        case MembershipVerdict::Status::InIdeal: out["verdict"] = "in-ideal"; break;
        case MembershipVerdict::Status::NotInIdealCertified:
            out["verdict"] = "not-in-ideal";
            break;
        case MembershipVerdict::Status::Unknown: out["verdict"] = "unknown"; break;
    }
    out["bound"] = verdict.bound;
    if (verdict.status == MembershipVerdict::Status::InIdeal) {
        json cert = json::array();
        for (const auto& term : verdict.certificate) {
            json left = json::array();
            for (ArrowId id : term.left) left.push_back(qp.quiver.arrow(id).name);
            json right = json::array();
            for (ArrowId id : term.right) right.push_back(qp.quiver.arrow(id).name);
            cert.push_back(json{{"relation_arrow", qp.quiver.arrow(term.relation_arrow).name},
                                {"left", left},
                                {"right", right},
                                {"coefficient", to_string(term.coefficient)}});
        }
        out["certificate"] = cert;
    }
    if (!verdict.reason.empty()) out["reason"] = verdict.reason;
    return out;
}

json good_json(const Quiver& quiver, const GoodPotentialVerdict& verdict) {
    json counts;
    for (const auto& [arrow, count] : verdict.arrow_counts) {
        counts[quiver.arrow(arrow).name] = count;
    }
    json repeats = json::array();
    for (const auto& r : verdict.repeated_subpaths) {
        repeats.push_back(json{
            {"subpath", json::array({quiver.arrow(r.first).name, quiver.arrow(r.second).name})},
            {"terms", json::array({word_to_string(quiver, r.term1.word()),
                                   word_to_string(quiver, r.term2.word())})}});
    }
    return json{{"is_good", verdict.is_good},
                {"mode", verdict.mode == SubpathMode::Cyclic ? "cyclic" : "linear"},
                {"arrow_counts", counts},
                {"repeated_subpaths", repeats}};
}

json witness_json(const QuiverWithPotential& qp, const ObstructionWitness& witness) {
    json products = json::array();
    for (const auto& [arrow, verdict] : witness.products) {
        products.push_back(json{{"incoming_arrow", qp.quiver.arrow(arrow).name},
                                {"membership", verdict_json(qp, verdict)}});
    }
    return json{{"target", witness.target},
                {"f", element_json(qp.quiver, witness.f)},
                {"f_membership", verdict_json(qp, witness.f_not_in_ideal)},
                {"products", products}};
}

json trace_json(const Quiver& quiver, const ReductionTrace& trace) {
    json steps = json::array();
    for (const auto& step : trace.steps) {
        steps.push_back(json{{"eliminated", quiver.arrow(step.eliminated).name},
                             {"solved", quiver.arrow(step.solved).name},
                             {"replacement", element_json(quiver, step.replacement_solved)},
                             {"eliminated_image",
                              element_json(quiver, step.replacement_eliminated)}});
    }
    return json{{"fuel_used", trace.fuel_used}, {"steps", steps}};
}

void emit(const json& payload, bool as_json, const std::string& text) {
    if (as_json) {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

// --- text rendering helpers -----------------------------------------------

std::string issues_text(const ValidationReport& report) {
    std::ostringstream out;
    for (const auto& issue : report.issues) {
        out << "  [" << to_string(issue.kind) << "] " << issue.message;
        if (issue.line > 0) out << " (line " << issue.line << ")";
        out << "\n";
    }
    return out.str();
}

std::string status_name(VertexDualizability::Kind kind) {
    switch (kind) {
        case VertexDualizability::Kind::CertifiedSyntactic: return "certified-syntactic";
        case VertexDualizability::Kind::CertifiedBounded: return "certified-bounded";
        case VertexDualizability::Kind::ObstructionFound: return "obstruction";
        case VertexDualizability::Kind::Inconclusive: return "inconclusive";
    }
    return "unknown";
}

struct Options {
    bool json = false;
    std::string file = "-";
    VertexId vertex = 0;
    std::size_t max_len = 6;
    int fuel = 100;
    std::string mode = "syntactic";
    std::string subpath = "cyclic";
    std::string elem;
    std::string fixture;
    bool cycle_cover = false;
};

SubpathMode subpath_mode(const Options& opt) {
    return opt.subpath == "linear" ? SubpathMode::Linear : SubpathMode::Cyclic;
}

int cmd_check(const Options& opt) {
    ParsedQp doc = parse_qp_text(read_input(opt.file));
    ValidationReport report = validate(doc, opt.cycle_cover);
    json payload{{"command", "check"}, {"name", doc.name}, {"valid", report.valid()}};
    json issues = json::array();
    for (const auto& issue : report.issues) {
        issues.push_back(json{{"kind", to_string(issue.kind)},
                              {"message", issue.message},
                              {"line", issue.line}});
    }
    payload["issues"] = issues;

    std::ostringstream text;
    text << "quiver " << doc.name << ": " << (report.valid() ? "valid" : "INVALID") << "\n"
         << issues_text(report);
    if (report.valid()) {
        QuiverWithPotential qp = build_qp(doc);
        GoodPotentialVerdict verdict = is_good_potential(qp, subpath_mode(opt));
        payload["good_potential"] = good_json(qp.quiver, verdict);
        text << "good potential: " << (verdict.is_good ? "yes" : "no") << "\n";
        if (!verdict.is_good) {
            for (const auto& [arrow, count] : verdict.arrow_counts) {
                if (count < 2) {
                    text << "  arrow " << qp.quiver.arrow(arrow).name << " appears " << count
                         << " time(s)\n";
                }
            }
            for (const auto& r : verdict.repeated_subpaths) {
                text << "  subpath " << qp.quiver.arrow(r.first).name << " "
                     << qp.quiver.arrow(r.second).name << " repeats\n";
            }
        }
    }
    emit(payload, opt.json, text.str());
    return report.valid() ? kExitOk : kExitUsage;
}

int cmd_relations(const Options& opt) {
    QuiverWithPotential qp = parse_qp(read_input(opt.file));
    JacobianPresentation pres = jacobian_relations(qp);
    json rels = json::array();
    std::ostringstream text;
    for (const auto& [arrow, element] : pres.relations) {
        rels.push_back(json{{"arrow", qp.quiver.arrow(arrow).name},
                            {"element", element_json(qp.quiver, element)}});
        text << "d/d" << qp.quiver.arrow(arrow).name << ": " << to_string(qp.quiver, element)
             << "\n";
    }
    emit(json{{"command", "relations"}, {"relations", rels}}, opt.json, text.str());
    return kExitOk;
}

int cmd_premutate(const Options& opt) {
    QuiverWithPotential qp = parse_qp(read_input(opt.file));
    PremutationResult premut = premutate(qp, opt.vertex);
    json payload{{"command", "premutate"},
                 {"vertex", opt.vertex},
                 {"qp", qp_json(premut.qp_tilde)}};
    json duals = json::array();
    for (const auto& d : premut.duals) {
        duals.push_back(json{{"original", qp.quiver.arrow(d.original).name},
                             {"dual", premut.qp_tilde.quiver.arrow(d.dual).name}});
    }
    json mesons = json::array();
    for (const auto& m : premut.mesons) {
        mesons.push_back(json{{"name", premut.qp_tilde.quiver.arrow(m.meson).name},
                              {"incoming", qp.quiver.arrow(m.incoming_orig).name},
                              {"outgoing", qp.quiver.arrow(m.outgoing_orig).name}});
    }
    payload["dual_arrows"] = duals;
    payload["mesonic_arrows"] = mesons;
    emit(payload, opt.json, serialize_qp(premut.qp_tilde));
    return kExitOk;
}

int cmd_mutate(const Options& opt) {
    QuiverWithPotential qp = parse_qp(read_input(opt.file));
    IntegrateOptions io;
    io.fuel = opt.fuel;
    MutationResult result = mutate_with_trace(qp, opt.vertex, io);
    json payload{{"command", "mutate"},
                 {"vertex", opt.vertex},
                 {"qp", qp_json(result.integration.qp)},
                 {"trace", trace_json(result.premutation.qp_tilde.quiver,
                                      result.integration.trace)}};
    emit(payload, opt.json, serialize_qp(result.integration.qp));
    return kExitOk;
}

int cmd_dual(const Options& opt) {
    QuiverWithPotential qp = parse_qp(read_input(opt.file));
    IntegrateOptions io;
    io.fuel = opt.fuel;
    QuiverWithPotential dual = seiberg_dual(qp, opt.vertex, io, subpath_mode(opt));
    json payload{{"command", "dual"}, {"vertex", opt.vertex}, {"qp", qp_json(dual)}};
    emit(payload, opt.json, serialize_qp(dual));
    return kExitOk;
}

int cmd_verify(const Options& opt) {
    QuiverWithPotential qp = parse_qp(read_input(opt.file));
    IntegrateOptions io;
    io.fuel = opt.fuel;
    DualityReport report = verify_duality(qp, opt.vertex, io, subpath_mode(opt));
    json phi = json::array();
    if (report.phi) {
        PremutationResult premut = premutate(qp, opt.vertex);
        const Quiver& tilde = premut.qp_tilde.quiver;
        for (const auto& [arrow, image] : report.phi->images()) {
            phi.push_back(json{{"arrow", tilde.arrow(arrow).name},
                               {"image", element_json(tilde, image)}});
        }
    }
    json payload{{"command", "verify"},
                 {"vertex", opt.vertex},
                 {"agree_quiver", report.agree_quiver},
                 {"agree_potential", report.agree_potential},
                 {"phi_reduction_matches", report.phi_reduction_matches},
                 {"agree", report.agree()},
                 {"mutated", qp_json(report.mutated)},
                 {"dual", qp_json(report.dual)},
                 {"phi", phi},
                 {"notes", report.notes}};

    std::ostringstream text;
    text << "verify k=" << opt.vertex << "\n"
         << "  agree_quiver: " << (report.agree_quiver ? "true" : "false") << "\n"
         << "  agree_potential: " << (report.agree_potential ? "true" : "false") << "\n"
         << "  phi reduction matches: " << (report.phi_reduction_matches ? "true" : "false")
         << "\n";
    for (const auto& note : report.notes) text << "  note: " << note << "\n";
    emit(payload, opt.json, text.str());
    return report.agree() ? kExitOk : kExitDisagreement;
}

int cmd_delta(const Options& opt) {
    QuiverWithPotential qp = parse_qp(read_input(opt.file));
    DualizabilityStatus status = opt.mode == "bounded"
                                     ? bounded_delta(qp, opt.max_len)
                                     : syntactic_delta(qp, subpath_mode(opt));
    json vertices = json::array();
    std::ostringstream text;
    bool obstruction = false;
    for (const auto& entry : status.vertices) {
        json v{{"vertex", entry.vertex}, {"status", status_name(entry.kind)}};
        if (entry.kind == VertexDualizability::Kind::CertifiedBounded ||
            entry.kind == VertexDualizability::Kind::ObstructionFound ||
            (entry.kind == VertexDualizability::Kind::Inconclusive && opt.mode == "bounded")) {
            v["bound"] = entry.bound;
        }
        if (entry.witness) v["witness"] = witness_json(qp, *entry.witness);
        if (entry.num_candidates > 0) v["candidates"] = entry.num_candidates;
        if (!entry.note.empty()) v["note"] = entry.note;
        vertices.push_back(std::move(v));
        obstruction |= entry.kind == VertexDualizability::Kind::ObstructionFound;
        text << "vertex " << entry.vertex << ": " << status_name(entry.kind);
        if (!entry.note.empty()) text << " (" << entry.note << ")";
        text << "\n";
    }
    json payload{{"command", "delta"},
                 {"mode", opt.mode},
                 {"good", good_json(qp.quiver, status.good)},
                 {"vertices", vertices}};
    if (opt.mode == "bounded") payload["bound"] = opt.max_len;
    emit(payload, opt.json, text.str());
    return obstruction ? kExitDisagreement : kExitOk;
}

int cmd_member(const Options& opt) {
    QuiverWithPotential qp = parse_qp(read_input(opt.file));
    PathElement element = parse_path_element(qp.quiver, opt.elem);
    MembershipVerdict verdict = ideal_membership_bounded(element, qp, opt.max_len);
    json payload{{"command", "member"}};
    json fields = verdict_json(qp, verdict);
    for (auto& [key, value] : fields.items()) {
        payload[key] = value;
    }

    std::ostringstream text;
    switch (verdict.status) {
        case MembershipVerdict::Status::InIdeal: {
            text << "in ideal (bound " << verdict.bound << ")\n";
            for (const auto& term : verdict.certificate) {
                text << "  " << to_string(term.coefficient) << " * ["
                     << word_to_string(qp.quiver, term.left) << "] * d/d"
                     << qp.quiver.arrow(term.relation_arrow).name << " * ["
                     << word_to_string(qp.quiver, term.right) << "]\n";
            }
            break;
        }
        case MembershipVerdict::Status::NotInIdealCertified:
            text << "not in ideal: " << verdict.reason << "\n";
            break;
        case MembershipVerdict::Status::Unknown:
            text << "unknown at bound " << verdict.bound << "\n";
            break;
    }
    emit(payload, opt.json, text.str());
    if (verdict.status == MembershipVerdict::Status::NotInIdealCertified) {
        return kExitDisagreement;
    }
    return kExitOk;
}

int cmd_dot(const Options& opt) {
    QuiverWithPotential qp = parse_qp(read_input(opt.file));
    std::string dot = export_dot(qp.quiver);
    emit(json{{"command", "dot"}, {"dot", dot}}, opt.json, dot);
    return kExitOk;
}

int cmd_fixture(const Options& opt) {
    std::cout << fixture_text(opt.fixture);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations on quivers with potentials"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto add_file = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.file, "input QP file ('-' for stdin)")
            ->default_val("-");
    };
    auto add_vertex = [&](CLI::App* cmd) {
        cmd->add_option("-k,--vertex", opt.vertex, "vertex to act at")->required();
    };
    auto add_fuel = [&](CLI::App* cmd) {
        cmd->add_option("--fuel", opt.fuel, "elimination budget")->default_val(100);
    };
    auto add_subpath = [&](CLI::App* cmd) {
        cmd->add_option("--subpath", opt.subpath, "length-two subpath reading")
            ->check(CLI::IsMember({"cyclic", "linear"}))
            ->default_val("cyclic");
    };

    CLI::App* check = app.add_subcommand("check", "validate and test for a good potential");
    add_file(check);
    add_subpath(check);
    check->add_flag("--cycle-cover", opt.cycle_cover,
                    "require every vertex to lie on a cycle");

    CLI::App* relations = app.add_subcommand("relations", "print the Jacobian relations");
    add_file(relations);

    CLI::App* premutate_cmd = app.add_subcommand("premutate", "premutation (Q~, S~) at k");
    add_vertex(premutate_cmd);
    add_file(premutate_cmd);

    CLI::App* mutate_cmd = app.add_subcommand("mutate", "DWZ mutation at k");
    add_vertex(mutate_cmd);
    add_file(mutate_cmd);
    add_fuel(mutate_cmd);

    CLI::App* dual_cmd = app.add_subcommand("dual", "Seiberg dual at k");
    add_vertex(dual_cmd);
    add_file(dual_cmd);
    add_fuel(dual_cmd);
    add_subpath(dual_cmd);

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "compare mutation with Seiberg duality at k");
    add_vertex(verify_cmd);
    add_file(verify_cmd);
    add_fuel(verify_cmd);
    add_subpath(verify_cmd);

    CLI::App* delta_cmd = app.add_subcommand("delta", "dualizability certificates");
    add_file(delta_cmd);
    add_subpath(delta_cmd);
    delta_cmd->add_option("--mode", opt.mode, "certification mode")
        ->check(CLI::IsMember({"syntactic", "bounded"}))
        ->default_val("syntactic");
    delta_cmd->add_option("--max-len", opt.max_len, "path length bound")->default_val(6);

    CLI::App* member_cmd = app.add_subcommand("member", "bounded ideal membership");
    add_file(member_cmd);
    member_cmd->add_option("--elem", opt.elem, "element in potential-term syntax")
        ->required();
    member_cmd->add_option("--max-len", opt.max_len, "path length bound")->default_val(6);

    CLI::App* dot_cmd = app.add_subcommand("dot", "export the quiver as DOT");
    add_file(dot_cmd);

    CLI::App* fixture_cmd = app.add_subcommand("fixture", "print a built-in QP file");
    fixture_cmd->add_option("name", opt.fixture, "fixture name")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    opt.json = format == "json";

    try {
        if (check->parsed()) return cmd_check(opt);
        if (relations->parsed()) return cmd_relations(opt);
        if (premutate_cmd->parsed()) return cmd_premutate(opt);
        if (mutate_cmd->parsed()) return cmd_mutate(opt);
        if (dual_cmd->parsed()) return cmd_dual(opt);
        if (verify_cmd->parsed()) return cmd_verify(opt);
        if (delta_cmd->parsed()) return cmd_delta(opt);
        if (member_cmd->parsed()) return cmd_member(opt);
        if (dot_cmd->parsed()) return cmd_dot(opt);
        if (fixture_cmd->parsed()) return cmd_fixture(opt);
    } catch (const Error& error) {
        json payload{{"error", {{"kind", to_string(error.kind())},
                                {"message", error.what()}}}};
        if (opt.json) {
            std::cout << payload.dump(2) << "\n";
        } else {
            std::cerr << "error [" << to_string(error.kind()) << "]: " << error.what()
                      << "\n";
        }
        return exit_code_for(error.kind());
    }
    return kExitUsage;
}
