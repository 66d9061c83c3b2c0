#include "qpd/jacobian.hpp"

#include <algorithm>
#include <tuple>

namespace qpd {

JacobianPresentation jacobian_relations(const QuiverWithPotential& qp) {
    JacobianPresentation out;
    for (const Arrow& a : qp.quiver.arrows()) {
        PathElement rel = cyclic_derivative(qp.quiver, qp.potential, a.id);
        for (const auto& [word, coef] : rel.terms()) {
            out.min_relation_length = std::min(out.min_relation_length, word.size());
        }
        out.relations.emplace(a.id, std::move(rel));
    }
    return out;
}

PathElement replay_certificate(const QuiverWithPotential& qp,
                               const std::vector<IdealCertificateTerm>& certificate) {
    PathElement out;
    JacobianPresentation pres = jacobian_relations(qp);
    for (const IdealCertificateTerm& term : certificate) {
        const PathElement& rel = pres.relations.at(term.relation_arrow);
        for (const auto& [word, coef] : rel.terms()) {
            Word full = term.left;
            full.insert(full.end(), word.begin(), word.end());
            full.insert(full.end(), term.right.begin(), term.right.end());
            out.add_term(full, coef * term.coefficient);
        }
    }
    return out;
}

bool ObstructionSearch::any_obstruction() const {
    return std::any_of(targets.begin(), targets.end(),
                       [](const TargetSearchResult& t) { return t.obstruction_found; });
}

bool ObstructionSearch::any_candidates() const {
    return std::any_of(targets.begin(), targets.end(),
                       [](const TargetSearchResult& t) { return !t.candidates.empty(); });
}

// ---------------------------------------------------------------------------
// Exact sparse linear algebra over the path basis of one component.

namespace {

using Index = std::uint32_t;
// Sorted by index; no explicit zeros.
using SparseVec = std::vector<std::pair<Index, Rational>>;

void axpy(SparseVec& target, const Rational& factor, const SparseVec& source) {
    if (factor == 0 || source.empty()) return;
    SparseVec merged;
    merged.reserve(target.size() + source.size());
    auto ti = target.begin();
    auto si = source.begin();
    while (ti != target.end() || si != source.end()) {
        if (si == source.end() || (ti != target.end() && ti->first < si->first)) {
            merged.push_back(*ti++);
        } else if (ti == target.end() || si->first < ti->first) {
            merged.emplace_back(si->first, factor * si->second);
            ++si;
        } else {
            Rational sum = ti->second + factor * si->second;
            if (sum != 0) merged.emplace_back(ti->first, std::move(sum));
            ++ti;
            ++si;
        }
    }
    target = std::move(merged);
}

void scale(SparseVec& v, const Rational& factor) {
    for (auto& [idx, value] : v) value *= factor;
}

// Fully reduced (Gauss-Jordan) row space with per-row provenance combos.
class Rref {
public:
    struct Row {
        Index pivot;
        SparseVec vec;   // normalized: value 1 at pivot
        SparseVec combo; // combination of inserted generators producing vec
    };

    std::size_t rank() const { return rows_.size(); }
    const std::vector<Row>& rows() const { return rows_; }

    // Eliminates v against the rows. When combo_out is given it accumulates
    // the generator combination subtracted from v.
    void reduce(SparseVec& v, SparseVec* combo_out) const {
        std::size_t cursor = 0;
        while (cursor < v.size()) {
            auto it = pivot_row_.find(v[cursor].first);
            if (it == pivot_row_.end()) {
                ++cursor;
                continue;
            }
            const Row& row = rows_[it->second];
            Rational factor = -v[cursor].second;
            axpy(v, factor, row.vec);
            if (combo_out) axpy(*combo_out, factor, row.combo);
            // The pivot coordinate vanished; indices >= cursor may have shifted,
            // but everything before cursor is pivot-free already.
        }
    }

    // Returns false when v is dependent (reduces to zero).
    bool insert(SparseVec v, SparseVec combo) {
        reduce(v, &combo);
        if (v.empty()) return false;
        Index pivot = v.front().first;
        Rational inv = 1 / v.front().second;
        scale(v, inv);
        scale(combo, inv);
        // Back-substitute into existing rows so every row stays pivot-free
        // outside its own pivot; this keeps reduce() a single pass.
        for (Row& row : rows_) {
            auto hit = std::lower_bound(
                row.vec.begin(), row.vec.end(), pivot,
                [](const auto& entry, Index idx) { return entry.first < idx; });
            if (hit == row.vec.end() || hit->first != pivot) continue;
            Rational factor = -hit->second;
            axpy(row.vec, factor, v);
            axpy(row.combo, factor, combo);
        }
        pivot_row_.emplace(pivot, rows_.size());
        rows_.push_back(Row{pivot, std::move(v), std::move(combo)});
        return true;
    }

private:
    std::vector<Row> rows_;
    std::map<Index, std::size_t> pivot_row_;
};

} // namespace

// ---------------------------------------------------------------------------
// Session implementation

struct OracleSession::Impl {
    QuiverWithPotential qp;
    JacobianPresentation presentation;

    // Paths per (src,dst), sorted length-then-lex; indices stay stable as the
    // enumeration deepens because longer paths only append.
    struct ComponentPaths {
        std::vector<Word> words; // sorted by (length, lex); longer paths only append
        std::map<Word, Index> index;

        std::size_t count_up_to(std::size_t maxlen) const {
            auto it = std::partition_point(
                words.begin(), words.end(),
                [maxlen](const Word& w) { return w.size() <= maxlen; });
            return static_cast<std::size_t>(it - words.begin());
        }
    };
    std::map<std::pair<VertexId, VertexId>, ComponentPaths> components;
    std::size_t enumerated_len = 0;
    std::vector<std::vector<Word>> level_words; // level_words[l]: all words of length l

    struct Generator {
        ArrowId relation_arrow;
        Word left;
        Word right;
    };
    struct Span {
        Rref rref;
        std::vector<Generator> generators;
    };
    std::map<std::tuple<VertexId, VertexId, std::size_t>, Span> spans;

    explicit Impl(QuiverWithPotential qp_in)
        : qp(std::move(qp_in)), presentation(jacobian_relations(qp)) {}

    void ensure_paths(std::size_t maxlen) {
        if (enumerated_len == 0) {
            level_words.assign(1, {}); // length 0 unused
            enumerated_len = 0;
        }
        while (enumerated_len < maxlen) {
            std::size_t next = enumerated_len + 1;
            std::vector<Word> level;
            if (next == 1) {
                for (const Arrow& a : qp.quiver.arrows()) level.push_back(Word{a.id});
            } else {
                for (const Word& w : level_words[next - 1]) {
                    VertexId top = qp.quiver.word_dst(w);
                    for (const Arrow& a : qp.quiver.arrows()) {
                        if (a.src != top) continue;
                        Word extended;
                        extended.reserve(w.size() + 1);
                        extended.push_back(a.id);
                        extended.insert(extended.end(), w.begin(), w.end());
                        level.push_back(std::move(extended));
                    }
                }
            }
            std::sort(level.begin(), level.end());
            for (const Word& w : level) {
                auto key = std::make_pair(qp.quiver.word_src(w), qp.quiver.word_dst(w));
                ComponentPaths& comp = components[key];
                comp.index.emplace(w, static_cast<Index>(comp.words.size()));
                comp.words.push_back(w);
            }
            level_words.push_back(std::move(level));
            enumerated_len = next;
        }
    }

    ComponentPaths& component(VertexId src, VertexId dst) {
        return components[{src, dst}];
    }

    std::size_t basis_size(VertexId src, VertexId dst, std::size_t bound) {
        ensure_paths(bound);
        return component(src, dst).count_up_to(bound);
    }

    // Bounded two-sided span of the relations inside one homogeneity
    // component: all p*r*q with len(p)+len(q)+max term of r <= bound.
    Span& span(VertexId src, VertexId dst, std::size_t bound) {
        auto key = std::make_tuple(src, dst, bound);
        auto it = spans.find(key);
        if (it != spans.end()) return it->second;
        ensure_paths(bound);
        Span& sp = spans[key];
        ComponentPaths& comp = component(src, dst);

        for (const Arrow& x : qp.quiver.arrows()) {
            const PathElement& rel = presentation.relations.at(x.id);
            if (rel.is_zero()) continue;
            std::size_t rel_len = rel.max_term_length();
            if (rel_len > bound) continue;
            VertexId rel_src = x.dst; // relations run dst(x) -> src(x)
            VertexId rel_dst = x.src;
            std::size_t budget = bound - rel_len;

            // p: rel_dst -> dst (applied last), q: src -> rel_src (applied first);
            // trivial p/q allowed when endpoints already agree.
            auto left_words = paths_up_to(rel_dst, dst, budget);
            for (const Word& p : left_words) {
                std::size_t q_budget = budget - p.size();
                auto right_words = paths_up_to(src, rel_src, q_budget);
                for (const Word& q : right_words) {
                    SparseVec vec;
                    for (const auto& [word, coef] : rel.terms()) {
                        Word full = p;
                        full.insert(full.end(), word.begin(), word.end());
                        full.insert(full.end(), q.begin(), q.end());
                        auto idx = comp.index.find(full);
                        if (idx == comp.index.end()) {
                            throw Error(ErrorKind::Internal, "span term outside basis");
                        }
                        SparseVec unit;
                        unit.emplace_back(idx->second, coef);
                        axpy(vec, Rational(1), unit);
                    }
                    if (vec.empty()) continue;
                    Index gen_index = static_cast<Index>(sp.generators.size());
                    SparseVec combo;
                    combo.emplace_back(gen_index, Rational(1));
                    sp.generators.push_back(Generator{x.id, p, q});
                    if (!sp.rref.insert(std::move(vec), std::move(combo))) {
                        sp.generators.pop_back(); // dependent; recycle the slot
                    }
                }
            }
        }
        return sp;
    }

    // All words from src to dst with length <= maxlen, plus the trivial path
    // (empty word) when src == dst. Assumes ensure_paths(maxlen) was called.
    std::vector<Word> paths_up_to(VertexId src, VertexId dst, std::size_t maxlen) {
        std::vector<Word> out;
        if (src == dst) out.push_back(Word{});
        ComponentPaths& comp = component(src, dst);
        std::size_t count = comp.count_up_to(maxlen);
        for (std::size_t i = 0; i < count; ++i) out.push_back(comp.words[i]);
        return out;
    }

    SparseVec to_vector(const PathElement& element, VertexId src, VertexId dst,
                        std::size_t bound) {
        ensure_paths(bound);
        ComponentPaths& comp = component(src, dst);
        SparseVec vec;
        for (const auto& [word, coef] : element.terms()) {
            auto idx = comp.index.find(word);
            if (idx == comp.index.end() || word.size() > bound) {
                throw Error(ErrorKind::Internal, "element term outside enumerated basis");
            }
            SparseVec unit;
            unit.emplace_back(idx->second, coef);
            axpy(vec, Rational(1), unit);
        }
        return vec;
    }

    PathElement from_coefficients(const SparseVec& coeffs, VertexId src, VertexId dst) {
        ComponentPaths& comp = component(src, dst);
        PathElement out = PathElement::zero(src, dst);
        for (const auto& [idx, value] : coeffs) {
            out.add_term(comp.words[idx], value);
        }
        return out;
    }
};

OracleSession::OracleSession(QuiverWithPotential qp)
    : impl_(std::make_unique<Impl>(std::move(qp))) {}
OracleSession::~OracleSession() = default;

const QuiverWithPotential& OracleSession::qp() const { return impl_->qp; }
const JacobianPresentation& OracleSession::relations() const { return impl_->presentation; }

MembershipVerdict OracleSession::membership(const PathElement& element, std::size_t bound) {
    MembershipVerdict verdict;
    verdict.bound = bound;
    if (element.is_zero()) {
        verdict.status = MembershipVerdict::Status::InIdeal;
        return verdict;
    }
    auto ends = element.homogeneity(impl_->qp.quiver);
    if (!ends) {
        throw Error(ErrorKind::InhomogeneousElement,
                    "ideal membership needs a homogeneous element");
    }
    if (element.max_term_length() > bound) {
        throw Error(ErrorKind::SemanticError,
                    "membership bound smaller than the element's longest term");
    }

    auto& span = impl_->span(ends->first, ends->second, bound);
    SparseVec vec = impl_->to_vector(element, ends->first, ends->second, bound);
    SparseVec combo;
    span.rref.reduce(vec, &combo);
    if (vec.empty()) {
        verdict.status = MembershipVerdict::Status::InIdeal;
        for (const auto& [gen_idx, coef] : combo) {
            const auto& gen = span.generators[gen_idx];
            // reduce() accumulated what was subtracted; flip sign to present
            // element = sum coef * p * r * q.
            verdict.certificate.push_back(
                IdealCertificateTerm{gen.relation_arrow, gen.left, gen.right, -coef});
        }
        return verdict;
    }
    if (element.max_term_length() < impl_->presentation.min_relation_length) {
        verdict.status = MembershipVerdict::Status::NotInIdealCertified;
        verdict.reason =
            "every term is shorter than the shortest relation term (" +
            std::to_string(element.max_term_length()) + " < " +
            std::to_string(impl_->presentation.min_relation_length) + ")";
        return verdict;
    }
    verdict.status = MembershipVerdict::Status::Unknown;
    return verdict;
}

ObstructionSearch OracleSession::obstruction_search(VertexId k, std::size_t bound) {
    const Quiver& quiver = impl_->qp.quiver;
    if (!quiver.has_vertex(k)) {
        throw Error(ErrorKind::SemanticError, "no vertex " + std::to_string(k));
    }
    std::vector<ArrowId> incoming = quiver.arrows_into(k);
    if (incoming.empty()) {
        throw Error(ErrorKind::NoIncomingArrows,
                    "vertex " + std::to_string(k) + " has no incoming arrows");
    }

    ObstructionSearch search;
    search.vertex = k;
    search.bound = bound;
    impl_->ensure_paths(bound + 1);

    for (VertexId s = 1; s <= quiver.num_vertices(); ++s) {
        TargetSearchResult target;
        target.target = s;
        target.bound = bound;

        auto& fcomp = impl_->component(k, s);
        std::size_t fsize = impl_->basis_size(k, s, bound);

        // Residual of f*alpha_j against the bounded span, per basis path of f.
        // Row for basis path i: concatenated residuals | marker e_i.
        std::vector<SparseVec> rows(fsize);
        Index offset = 0;
        for (ArrowId alpha : incoming) {
            VertexId j = quiver.arrow(alpha).src;
            auto& span = impl_->span(j, s, bound + 1);
            auto& pcomp = impl_->component(j, s);
            for (std::size_t i = 0; i < fsize; ++i) {
                Word product = fcomp.words[i];
                product.push_back(alpha);
                auto idx = pcomp.index.find(product);
                if (idx == pcomp.index.end()) {
                    throw Error(ErrorKind::Internal, "product path missing from basis");
                }
                SparseVec vec;
                vec.emplace_back(idx->second, Rational(1));
                span.rref.reduce(vec, nullptr);
                for (auto& [coord, value] : vec) {
                    rows[i].emplace_back(offset + coord, std::move(value));
                }
            }
            offset += static_cast<Index>(pcomp.words.size());
        }
        const Index marker_base = offset;
        for (std::size_t i = 0; i < fsize; ++i) {
            rows[i].emplace_back(marker_base + static_cast<Index>(i), Rational(1));
        }

        auto extract_solutions = [&](const std::vector<std::size_t>& selection) {
            // Rows whose residual part eliminates to zero yield null
            // combinations; their marker parts are the solution vectors.
            Rref rref;
            std::vector<SparseVec> solutions;
            for (std::size_t i : selection) {
                SparseVec row = rows[i];
                rref.reduce(row, nullptr);
                if (!row.empty() && row.front().first >= marker_base) {
                    SparseVec coeffs;
                    for (const auto& [coord, value] : row) {
                        coeffs.emplace_back(coord - marker_base, value);
                    }
                    solutions.push_back(coeffs);
                }
                if (!row.empty()) rref.insert(std::move(row), {});
            }
            return solutions;
        };

        // Certified witnesses live on paths too short to sit in the ideal.
        std::size_t min_rel = impl_->presentation.min_relation_length;
        std::vector<std::size_t> short_rows;
        for (std::size_t i = 0; i < fsize; ++i) {
            if (fcomp.words[i].size() < min_rel) short_rows.push_back(i);
        }
        auto short_solutions = extract_solutions(short_rows);
        if (!short_solutions.empty()) {
            PathElement f = impl_->from_coefficients(short_solutions.front(), k, s);
            ObstructionWitness witness;
            witness.target = s;
            witness.f = f;
            witness.f_not_in_ideal = membership(f, bound);
            if (witness.f_not_in_ideal.status != MembershipVerdict::Status::NotInIdealCertified) {
                throw Error(ErrorKind::Internal, "short witness not certified outside ideal");
            }
            for (ArrowId alpha : incoming) {
                PathElement product =
                    multiply(impl_->qp.quiver, f,
                             path_element(impl_->qp.quiver, Word{alpha}));
                MembershipVerdict in = membership(product, bound + 1);
                if (in.status != MembershipVerdict::Status::InIdeal) {
                    throw Error(ErrorKind::Internal, "witness product not in bounded span");
                }
                witness.products.emplace_back(alpha, std::move(in));
            }
            target.obstruction_found = true;
            target.witness = std::move(witness);
            search.targets.push_back(std::move(target));
            continue;
        }

        // General solutions, quotiented by the bounded ideal subspace of the
        // f-component: anything left over is an uncertified candidate.
        std::vector<std::size_t> all_rows(fsize);
        for (std::size_t i = 0; i < fsize; ++i) all_rows[i] = i;
        auto solutions = extract_solutions(all_rows);
        auto& fspan = impl_->span(k, s, bound);
        for (const SparseVec& sol : solutions) {
            SparseVec residual = sol;
            fspan.rref.reduce(residual, nullptr);
            if (residual.empty()) continue; // bounded ideal element; expected
            target.candidates.push_back(impl_->from_coefficients(sol, k, s));
        }
        search.targets.push_back(std::move(target));
    }
    return search;
}

MembershipVerdict ideal_membership_bounded(const PathElement& element,
                                           const QuiverWithPotential& qp,
                                           std::size_t bound) {
    OracleSession session(qp);
    return session.membership(element, bound);
}

ObstructionSearch tilting_obstruction_search(const QuiverWithPotential& qp, VertexId k,
                                             std::size_t bound) {
    OracleSession session(qp);
    return session.obstruction_search(k, bound);
}

} // namespace qpd
