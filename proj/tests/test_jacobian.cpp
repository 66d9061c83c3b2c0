#include <doctest.h>

#include "qpd/fixtures.hpp"
#include "qpd/jacobian.hpp"
#include "qpd/parse.hpp"
#include "qpd/seiberg.hpp"
#include "support/generators.hpp"

using namespace qpd;
using qpd::testing::Rng;

TEST_SUITE("jacobian-oracle") {

TEST_CASE("relations of the fixtures") {
    SUBCASE("triangle") {
        auto tri = fixture_qp("triangle");
        JacobianPresentation pres = jacobian_relations(tri);
        CHECK(pres.relations.size() == 3);
        CHECK(pres.min_relation_length == 2);
        auto rel = [&](const char* n) {
            return pres.relations.at(*tri.quiver.find_arrow(n));
        };
        CHECK(rel("a") == parse_path_element(tri.quiver, "1 c b"));
        CHECK(rel("b") == parse_path_element(tri.quiver, "1 a c"));
        CHECK(rel("c") == parse_path_element(tri.quiver, "1 b a"));
    }
    SUBCASE("dp1 has the three collection relations among its ten") {
        auto dp1 = fixture_qp("dp1");
        JacobianPresentation pres = jacobian_relations(dp1);
        auto rel = [&](const char* n) {
            return pres.relations.at(*dp1.quiver.find_arrow(n));
        };
        CHECK(rel("R3") == parse_path_element(dp1.quiver, "1 d3 c1 ; -1 d1 c2"));
        CHECK(rel("R1") == parse_path_element(dp1.quiver, "1 d1 b ; -1 d2 c1 a"));
        CHECK(rel("R2") == parse_path_element(dp1.quiver, "1 d2 c2 a ; -1 d3 b"));
        CHECK(pres.min_relation_length == 2);
    }
    SUBCASE("zero potential gives zero relations") {
        auto a3 = fixture_qp("a3");
        JacobianPresentation pres = jacobian_relations(a3);
        for (const auto& [arrow, rel] : pres.relations) CHECK(rel.is_zero());
        CHECK(pres.min_relation_length == std::numeric_limits<std::size_t>::max());
    }
}

TEST_CASE("bounded ideal membership on the triangle") {
    auto tri = fixture_qp("triangle");
    SUBCASE("a generator is in the ideal, with a replaying certificate") {
        PathElement ba = parse_path_element(tri.quiver, "1 b a");
        MembershipVerdict verdict = ideal_membership_bounded(ba, tri, 2);
        REQUIRE(verdict.status == MembershipVerdict::Status::InIdeal);
        CHECK(replay_certificate(tri, verdict.certificate) == ba);
    }
    SUBCASE("a single arrow is certified outside by the degree bound") {
        PathElement b = parse_path_element(tri.quiver, "1 b");
        MembershipVerdict verdict = ideal_membership_bounded(b, tri, 3);
        CHECK(verdict.status == MembershipVerdict::Status::NotInIdealCertified);
    }
    SUBCASE("the potential itself is a left multiple of a relation") {
        PathElement cba = parse_path_element(tri.quiver, "1 c b a");
        MembershipVerdict verdict = ideal_membership_bounded(cba, tri, 3);
        // c b a = c * (d/dc), so it is in the ideal
        CHECK(verdict.status == MembershipVerdict::Status::InIdeal);
        CHECK(replay_certificate(tri, verdict.certificate) == cba);
    }
}

TEST_CASE("membership on dp1 and certificate replay") {
    auto dp1 = fixture_qp("dp1");
    PathElement rel = parse_path_element(dp1.quiver, "1 d3 c1 ; -1 d1 c2");
    MembershipVerdict verdict = ideal_membership_bounded(rel, dp1, 2);
    REQUIRE(verdict.status == MembershipVerdict::Status::InIdeal);
    CHECK(replay_certificate(dp1, verdict.certificate) == rel);

    SUBCASE("monotone in the bound") {
        for (std::size_t bound : {3u, 4u, 5u, 6u}) {
            MembershipVerdict again = ideal_membership_bounded(rel, dp1, bound);
            CHECK(again.status == MembershipVerdict::Status::InIdeal);
            CHECK(replay_certificate(dp1, again.certificate) == rel);
        }
    }
    SUBCASE("zero element is trivially inside") {
        PathElement zero = PathElement::zero(2, 4);
        MembershipVerdict v = ideal_membership_bounded(zero, dp1, 3);
        CHECK(v.status == MembershipVerdict::Status::InIdeal);
        CHECK(v.certificate.empty());
    }
    SUBCASE("a short path in a relation-free component stays unknown") {
        // component 1 -> 3 has no bare relations; its shortest span elements
        // have length 3, so this length-2 path is neither proven in nor out
        PathElement c1a = parse_path_element(dp1.quiver, "1 c1 a");
        MembershipVerdict v = ideal_membership_bounded(c1a, dp1, 4);
        CHECK(v.status == MembershipVerdict::Status::Unknown);
    }
    SUBCASE("inhomogeneous elements are rejected") {
        PathElement mixed = parse_path_element(dp1.quiver, "1 a ; 1 b");
        CHECK_THROWS_AS(ideal_membership_bounded(mixed, dp1, 3), Error);
    }
    SUBCASE("bound below the element's degree is rejected") {
        PathElement long_elem = parse_path_element(dp1.quiver, "1 R1 d1 b");
        CHECK_THROWS_AS(ideal_membership_bounded(long_elem, dp1, 2), Error);
    }
}

TEST_CASE("random ideal elements are recognized and replay") {
    Rng rng(555555);
    auto dp1 = fixture_qp("dp1");
    OracleSession session(dp1);
    JacobianPresentation pres = jacobian_relations(dp1);
    int checked = 0;
    while (checked < 60) {
        // random p * r * q with small p, q
        ArrowId x = static_cast<ArrowId>(rng.uniform(0, int(dp1.quiver.num_arrows()) - 1));
        const PathElement& rel = pres.relations.at(x);
        if (rel.is_zero()) continue;
        auto ends = rel.homogeneity(dp1.quiver);
        REQUIRE(ends.has_value());
        PathElement elem = rel;
        // left-extend then right-extend by single arrows when possible
        auto lefts = dp1.quiver.arrows_out_of(ends->second);
        if (!lefts.empty() && rng.chance(0.7)) {
            ArrowId l = lefts[static_cast<std::size_t>(rng.uniform(0, int(lefts.size()) - 1))];
            elem = multiply(dp1.quiver, path_element(dp1.quiver, Word{l}), elem);
        }
        auto rights = dp1.quiver.arrows_into(ends->first);
        if (!rights.empty() && rng.chance(0.7)) {
            ArrowId r =
                rights[static_cast<std::size_t>(rng.uniform(0, int(rights.size()) - 1))];
            elem = multiply(dp1.quiver, elem, path_element(dp1.quiver, Word{r}));
        }
        MembershipVerdict verdict = session.membership(elem, elem.max_term_length() + 1);
        REQUIRE(verdict.status == MembershipVerdict::Status::InIdeal);
        CHECK(replay_certificate(dp1, verdict.certificate) == elem);
        ++checked;
    }
}

TEST_CASE("obstruction search on the triangle at k=2") {
    auto tri = fixture_qp("triangle");
    ObstructionSearch search = tilting_obstruction_search(tri, 2, 3);
    REQUIRE(search.targets.size() == 3);
    CHECK(search.any_obstruction());

    const TargetSearchResult* at3 = nullptr;
    for (const auto& t : search.targets) {
        if (t.target == 3) at3 = &t;
    }
    REQUIRE(at3 != nullptr);
    REQUIRE(at3->obstruction_found);
    const ObstructionWitness& witness = *at3->witness;
    CHECK(witness.f == parse_path_element(tri.quiver, "1 b"));
    CHECK(witness.f_not_in_ideal.status == MembershipVerdict::Status::NotInIdealCertified);
    REQUIRE(witness.products.size() == 1);
    const auto& [alpha, product_verdict] = witness.products.front();
    CHECK(tri.quiver.arrow(alpha).name == "a");
    REQUIRE(product_verdict.status == MembershipVerdict::Status::InIdeal);
    CHECK(replay_certificate(tri, product_verdict.certificate) ==
          parse_path_element(tri.quiver, "1 b a"));
}

TEST_CASE("dp1 carries no obstruction at any vertex, L in 3..6") {
    auto dp1 = fixture_qp("dp1");
    OracleSession session(dp1);
    for (std::size_t bound : {3u, 4u, 5u, 6u}) {
        for (VertexId k = 1; k <= 4; ++k) {
            ObstructionSearch search = session.obstruction_search(k, bound);
            CHECK_FALSE(search.any_obstruction());
            CHECK_FALSE(search.any_candidates());
        }
    }
}

TEST_CASE("zero potential never obstructs") {
    auto a3 = fixture_qp("a3");
    ObstructionSearch search = tilting_obstruction_search(a3, 3, 4);
    CHECK_FALSE(search.any_obstruction());
    CHECK_FALSE(search.any_candidates());
}

TEST_CASE("vertices without incoming arrows are rejected") {
    auto a3 = fixture_qp("a3");
    try {
        tilting_obstruction_search(a3, 1, 3);
        FAIL("expected NoIncomingArrows");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NoIncomingArrows);
    }
}

TEST_CASE("bounded delta matches the syntactic certificate on dp1") {
    auto dp1 = fixture_qp("dp1");
    DualizabilityStatus syntactic = syntactic_delta(dp1);
    DualizabilityStatus bounded = bounded_delta(dp1, 4);
    REQUIRE(syntactic.vertices.size() == bounded.vertices.size());
    for (std::size_t i = 0; i < bounded.vertices.size(); ++i) {
        CHECK(syntactic.vertices[i].kind == VertexDualizability::Kind::CertifiedSyntactic);
        CHECK(bounded.vertices[i].kind == VertexDualizability::Kind::CertifiedBounded);
    }
}

} // TEST_SUITE
