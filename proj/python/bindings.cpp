// Python bindings for the qpd core: parsing, validation, mutation, Seiberg
// duality, dualizability certificates and bounded ideal membership.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qpd/dot.hpp"
#include "qpd/fixtures.hpp"
#include "qpd/jacobian.hpp"
#include "qpd/mutation.hpp"
#include "qpd/parse.hpp"
#include "qpd/seiberg.hpp"

namespace py = pybind11;
using namespace qpd;

namespace {

std::vector<std::string> words_to_names(const Quiver& quiver, const Word& word) {
    std::vector<std::string> names;
    names.reserve(word.size());
    for (ArrowId id : word) names.push_back(quiver.arrow(id).name);
    return names;
}

py::list element_terms(const Quiver& quiver, const PathElement& element) {
    py::list out;
    for (const auto& [word, coef] : element.terms()) {
        out.append(py::make_tuple(to_string(coef), words_to_names(quiver, word)));
    }
    return out;
}

py::list potential_terms(const Quiver& quiver, const Potential& potential) {
    py::list out;
    for (const auto& [cycle, coef] : potential.terms()) {
        out.append(py::make_tuple(to_string(coef), words_to_names(quiver, cycle.word())));
    }
    return out;
}

Word names_to_word(const Quiver& quiver, const std::vector<std::string>& names) {
    Word word;
    word.reserve(names.size());
    for (const auto& name : names) {
        auto id = quiver.find_arrow(name);
        if (!id) throw Error(ErrorKind::SemanticError, "unknown arrow '" + name + "'");
        word.push_back(*id);
    }
    return word;
}

std::string verdict_name(MembershipVerdict::Status status) {
    switch (status) {
        case MembershipVerdict::Status::InIdeal: return "in-ideal";
        case MembershipVerdict::Status::NotInIdealCertified: return "not-in-ideal";
        case MembershipVerdict::Status::Unknown: return "unknown";
    }
    return "unknown";
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

py::dict membership_dict(const QuiverWithPotential& qp, const MembershipVerdict& verdict) {
    py::dict out;
    out["verdict"] = verdict_name(verdict.status);
    out["bound"] = verdict.bound;
    if (verdict.status == MembershipVerdict::Status::InIdeal) {
        py::list cert;
        for (const auto& term : verdict.certificate) {
            py::dict t;
            t["relation_arrow"] = qp.quiver.arrow(term.relation_arrow).name;
            t["left"] = words_to_names(qp.quiver, term.left);
            t["right"] = words_to_names(qp.quiver, term.right);
            t["coefficient"] = to_string(term.coefficient);
            cert.append(t);
        }
        out["certificate"] = cert;
    }
    if (!verdict.reason.empty()) out["reason"] = verdict.reason;
    return out;
}

} // namespace

PYBIND11_MODULE(qpdual, m) {
    m.doc() = "Quivers with potentials: DWZ mutation, Seiberg duality and "
              "derived-equivalence certificates over exact rationals.";

    py::register_exception<Error>(m, "QpError");

    py::class_<QuiverWithPotential>(m, "QP")
        .def_static("parse", [](const std::string& text) { return parse_qp(text); },
                    py::arg("text"), "Parse a QP from its text format.")
        .def_property_readonly("name",
                               [](const QuiverWithPotential& qp) { return qp.quiver.name(); })
        .def_property_readonly(
            "num_vertices",
            [](const QuiverWithPotential& qp) { return qp.quiver.num_vertices(); })
        .def_property_readonly("arrows",
                               [](const QuiverWithPotential& qp) {
                                   py::list out;
                                   for (const Arrow& a : qp.quiver.arrows()) {
                                       out.append(py::make_tuple(a.name, a.src, a.dst));
                                   }
                                   return out;
                               })
        .def_property_readonly("potential",
                               [](const QuiverWithPotential& qp) {
                                   return potential_terms(qp.quiver, qp.potential);
                               })
        .def("serialize", [](const QuiverWithPotential& qp) { return serialize_qp(qp); })
        .def("dot", [](const QuiverWithPotential& qp) { return export_dot(qp.quiver); })
        .def("__repr__", [](const QuiverWithPotential& qp) {
            std::ostringstream out;
            out << "<QP '" << qp.quiver.name() << "' " << qp.quiver.num_vertices()
                << " vertices, " << qp.quiver.num_arrows() << " arrows, "
                << qp.potential.num_terms() << " potential terms>";
            return out.str();
        })
        .def("__eq__", [](const QuiverWithPotential& a, const QuiverWithPotential& b) {
            return a.quiver == b.quiver && cyclically_equal(a.potential, b.potential);
        });

    m.def("fixture_names", &fixture_names);
    m.def("fixture_text", &fixture_text, py::arg("name"));
    m.def("fixture", &fixture_qp, py::arg("name"), "Load a built-in QP.");

    m.def(
        "validate",
        [](const QuiverWithPotential& qp, bool require_cycle_cover) {
            ValidationReport report = validate(qp, require_cycle_cover);
            py::list issues;
            for (const auto& issue : report.issues) {
                issues.append(py::make_tuple(to_string(issue.kind), issue.message));
            }
            return issues;
        },
        py::arg("qp"), py::arg("require_cycle_cover") = false);

    m.def(
        "validate_text",
        [](const std::string& text, bool require_cycle_cover) {
            ValidationReport report = validate(parse_qp_text(text), require_cycle_cover);
            py::list issues;
            for (const auto& issue : report.issues) {
                issues.append(py::make_tuple(to_string(issue.kind), issue.message));
            }
            return issues;
        },
        py::arg("text"), py::arg("require_cycle_cover") = false);

    m.def(
        "is_good_potential",
        [](const QuiverWithPotential& qp, const std::string& mode) {
            GoodPotentialVerdict verdict = is_good_potential(
                qp, mode == "linear" ? SubpathMode::Linear : SubpathMode::Cyclic);
            py::dict out;
            out["is_good"] = verdict.is_good;
            py::dict counts;
            for (const auto& [arrow, count] : verdict.arrow_counts) {
                counts[py::str(qp.quiver.arrow(arrow).name)] = count;
            }
            out["arrow_counts"] = counts;
            py::list repeats;
            for (const auto& r : verdict.repeated_subpaths) {
                repeats.append(py::make_tuple(qp.quiver.arrow(r.first).name,
                                              qp.quiver.arrow(r.second).name));
            }
            out["repeated_subpaths"] = repeats;
            return out;
        },
        py::arg("qp"), py::arg("mode") = "cyclic");

    m.def(
        "jacobian_relations",
        [](const QuiverWithPotential& qp) {
            JacobianPresentation pres = jacobian_relations(qp);
            py::dict out;
            for (const auto& [arrow, element] : pres.relations) {
                out[py::str(qp.quiver.arrow(arrow).name)] =
                    element_terms(qp.quiver, element);
            }
            return out;
        },
        py::arg("qp"));

    m.def(
        "cyclic_derivative",
        [](const QuiverWithPotential& qp, const std::string& arrow) {
            auto id = qp.quiver.find_arrow(arrow);
            if (!id) throw Error(ErrorKind::SemanticError, "unknown arrow '" + arrow + "'");
            return element_terms(qp.quiver,
                                 cyclic_derivative(qp.quiver, qp.potential, *id));
        },
        py::arg("qp"), py::arg("arrow"));

    m.def("premutate",
          [](const QuiverWithPotential& qp, VertexId k) {
              PremutationResult premut = premutate(qp, k);
              py::dict out;
              out["qp"] = premut.qp_tilde;
              py::list duals;
              for (const auto& d : premut.duals) {
                  duals.append(py::make_tuple(qp.quiver.arrow(d.original).name,
                                              premut.qp_tilde.quiver.arrow(d.dual).name));
              }
              out["dual_arrows"] = duals;
              py::list mesons;
              for (const auto& msn : premut.mesons) {
                  mesons.append(py::make_tuple(
                      premut.qp_tilde.quiver.arrow(msn.meson).name,
                      qp.quiver.arrow(msn.incoming_orig).name,
                      qp.quiver.arrow(msn.outgoing_orig).name));
              }
              out["mesonic_arrows"] = mesons;
              return out;
          },
          py::arg("qp"), py::arg("k"));

    m.def("mutate",
          [](const QuiverWithPotential& qp, VertexId k, int fuel) {
              IntegrateOptions options;
              options.fuel = fuel;
              return mutate(qp, k, options);
          },
          py::arg("qp"), py::arg("k"), py::arg("fuel") = 100);

    m.def("reduce",
          [](const QuiverWithPotential& qp, int fuel) {
              IntegrateOptions options;
              options.fuel = fuel;
              return reduce(qp, options);
          },
          py::arg("qp"), py::arg("fuel") = 100);

    m.def("seiberg_dual",
          [](const QuiverWithPotential& qp, VertexId k, int fuel) {
              IntegrateOptions options;
              options.fuel = fuel;
              return seiberg_dual(qp, k, options);
          },
          py::arg("qp"), py::arg("k"), py::arg("fuel") = 100);

    m.def("verify_duality",
          [](const QuiverWithPotential& qp, VertexId k) {
              DualityReport report = verify_duality(qp, k);
              py::dict out;
              out["vertex"] = report.vertex;
              out["agree_quiver"] = report.agree_quiver;
              out["agree_potential"] = report.agree_potential;
              out["phi_reduction_matches"] = report.phi_reduction_matches;
              out["agree"] = report.agree();
              out["mutated"] = report.mutated;
              out["dual"] = report.dual;
              out["notes"] = report.notes;
              if (report.phi) {
                  PremutationResult premut = premutate(qp, k);
                  const Quiver& tilde = premut.qp_tilde.quiver;
                  py::dict phi;
                  for (const auto& [arrow, image] : report.phi->images()) {
                      phi[py::str(tilde.arrow(arrow).name)] = element_terms(tilde, image);
                  }
                  out["phi"] = phi;
              }
              return out;
          },
          py::arg("qp"), py::arg("k"));

    m.def("delta",
          [](const QuiverWithPotential& qp, const std::string& mode, std::size_t max_len) {
              DualizabilityStatus status =
                  mode == "bounded" ? bounded_delta(qp, max_len) : syntactic_delta(qp);
              py::list out;
              for (const auto& entry : status.vertices) {
                  py::dict v;
                  v["vertex"] = entry.vertex;
                  v["status"] = status_name(entry.kind);
                  if (!entry.note.empty()) v["note"] = entry.note;
                  out.append(v);
              }
              return out;
          },
          py::arg("qp"), py::arg("mode") = "syntactic", py::arg("max_len") = 6);

    m.def("ideal_membership",
          [](const QuiverWithPotential& qp, const std::string& element,
             std::size_t max_len) {
              PathElement parsed = parse_path_element(qp.quiver, element);
              return membership_dict(qp, ideal_membership_bounded(parsed, qp, max_len));
          },
          py::arg("qp"), py::arg("element"), py::arg("max_len") = 6,
          "Element in potential-term syntax, e.g. '1 d3 c1 ; -1 d1 c2'.");

    m.def("obstruction_search",
          [](const QuiverWithPotential& qp, VertexId k, std::size_t max_len) {
              ObstructionSearch search = tilting_obstruction_search(qp, k, max_len);
              py::list targets;
              for (const auto& target : search.targets) {
                  py::dict t;
                  t["target"] = target.target;
                  t["obstruction_found"] = target.obstruction_found;
                  t["num_candidates"] = target.candidates.size();
                  if (target.witness) {
                      py::dict w;
                      w["f"] = element_terms(qp.quiver, target.witness->f);
                      w["f_membership"] = membership_dict(qp, target.witness->f_not_in_ideal);
                      py::list products;
                      for (const auto& [arrow, verdict] : target.witness->products) {
                          products.append(py::make_tuple(qp.quiver.arrow(arrow).name,
                                                         membership_dict(qp, verdict)));
                      }
                      w["products"] = products;
                      t["witness"] = w;
                  }
                  targets.append(t);
              }
              return targets;
          },
          py::arg("qp"), py::arg("k"), py::arg("max_len") = 6);

    m.def("mutation_word",
          [](QuiverWithPotential qp, const std::vector<VertexId>& vertices, int fuel) {
              IntegrateOptions options;
              options.fuel = fuel;
              for (VertexId k : vertices) qp = mutate(qp, k, options);
              return qp;
          },
          py::arg("qp"), py::arg("vertices"), py::arg("fuel") = 100,
          "Apply a sequence of mutations left to right.");
}
