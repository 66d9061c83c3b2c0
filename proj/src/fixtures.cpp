#include "qpd/fixtures.hpp"

#include "qpd/parse.hpp"

namespace qpd {

namespace {

const char* kDp1 = R"(# Completed quiver for dP1 (projective plane blown up in one point).
quiver dp1
vertices 4
arrow a 1 2
arrow b 1 3
arrow c1 2 3
arrow c2 2 3
arrow d1 3 4
arrow d2 3 4
arrow d3 3 4
arrow R1 4 1
arrow R2 4 1
arrow R3 4 2
potential
1 R3 d3 c1 ;
-1 R3 d1 c2 ;
1 R1 d1 b ;
-1 R1 d2 c1 a ;
1 R2 d2 c2 a ;
-1 R2 d3 b ;
end
)";

const char* kDp1Collection = R"(# dP1 exceptional-collection quiver, before completion.
# Relations (not part of the data):
#   d3 c1 = d1 c2
#   d2 c1 a = d1 b
#   d3 b = d2 c2 a
quiver dp1-collection
vertices 4
arrow a 1 2
arrow b 1 3
arrow c1 2 3
arrow c2 2 3
arrow d1 3 4
arrow d2 3 4
arrow d3 3 4
potential
end
)";

const char* kTriangle = R"(quiver triangle
vertices 3
arrow a 1 2
arrow b 2 3
arrow c 3 1
potential
1 c b a ;
end
)";

const char* kA3 = R"(quiver a3
vertices 3
arrow a 1 2
arrow b 2 3
potential
end
)";

} // namespace

std::vector<std::string> fixture_names() {
    return {"dp1", "dp1-collection-quiver", "triangle", "a3"};
}

bool has_fixture(const std::string& name) {
    for (const auto& n : fixture_names()) {
        if (n == name) return true;
    }
    return false;
}

std::string fixture_text(const std::string& name) {
    if (name == "dp1") return kDp1;
    if (name == "dp1-collection-quiver") return kDp1Collection;
    if (name == "triangle") return kTriangle;
    if (name == "a3") return kA3;
    throw Error(ErrorKind::SemanticError, "unknown fixture '" + name + "'");
}

QuiverWithPotential fixture_qp(const std::string& name) {
    return parse_qp(fixture_text(name));
}

} // namespace qpd
