#include <doctest.h>

#include "lpcalc/factorization.hpp"
#include "lpcalc/invariants.hpp"

using namespace lpcalc;

namespace {

struct Chain {
    TwistSystem sys{1, 1, false};
    CurveId ca, cb, d1;
    Factorization fact;

    Chain() {
        const Surface& s = sys.surface();
        Letter A = s.a(1), B = s.b(1);
        ca = sys.add_curve("a", Word::one_letter(A));
        cb = sys.add_curve("b", Word::one_letter(B));
        auto mk = [&](std::vector<Word> fwd, std::vector<Word> inv) {
            return MappingClass::from_images(s, std::move(fwd), std::move(inv), {}, {0, 1});
        };
        sys.register_twist(ca, mk({Word::one_letter(A), Word({B, A})},
                                  {Word::one_letter(A), Word({B, -A})}));
        sys.register_twist(cb, mk({Word({A, -B}), Word::one_letter(B)},
                                  {Word({A, B}), Word::one_letter(B)}));
        d1 = sys.boundary_curve(1);
        for (int k = 0; k < 6; ++k) {
            fact.twists.push_back(cb);
            fact.twists.push_back(ca);
        }
        fact.target = {d1};
    }
};

}  // namespace

TEST_CASE("verify the classical chain factorization") {
    Chain c;
    CHECK(verify_h1(c.sys, c.fact));
    CHECK(verify(c.sys, c.fact));
    CHECK(verify_report(c.sys, c.fact) == "verified");
}

TEST_CASE("a deleted twist fails the H1 pre-check") {
    Chain c;
    Factorization broken = c.fact;
    broken.twists.pop_back();
    CHECK_FALSE(verify_h1(c.sys, broken));
    CHECK_FALSE(verify(c.sys, broken));
    CHECK(verify_report(c.sys, broken) != "verified");
}

TEST_CASE("elementary transformations preserve the product") {
    Chain c;
    MappingClass before = c.sys.product_of_twists(c.fact.twists);
    for (int i = 1; i < static_cast<int>(c.fact.twists.size()); ++i) {
        Factorization g = elementary_transformation(c.sys, c.fact, i);
        CHECK(c.sys.product_of_twists(g.twists) == before);
        CHECK(verify(c.sys, g));
    }
}

TEST_CASE("elementary transformation inverts") {
    Chain c;
    for (int i = 1; i < static_cast<int>(c.fact.twists.size()); ++i) {
        Factorization g = elementary_transformation(c.sys, c.fact, i);
        Factorization back = inverse_elementary_transformation(c.sys, g, i);
        CHECK(curvewise_equal(c.sys, back, c.fact));
        Factorization gh = inverse_elementary_transformation(c.sys, c.fact, i);
        Factorization forth = elementary_transformation(c.sys, gh, i);
        CHECK(curvewise_equal(c.sys, forth, c.fact));
    }
}

TEST_CASE("simultaneous conjugation by the identity and by a twist") {
    Chain c;
    MappingClass id = MappingClass::identity(c.sys.surface());
    Factorization g = simultaneous_conjugation(c.sys, c.fact, id);
    CHECK(curvewise_equal(c.sys, g, c.fact));
    Factorization h = simultaneous_conjugation(c.sys, c.fact, c.sys.twist(c.ca));
    CHECK(verify(c.sys, h));  // boundary multitwist is central
}

TEST_CASE("substitution replays a registered relation") {
    Chain c;
    RelationTable table;
    // (t_a t_b)^6 = t_delta as a substitutable relation
    table.add(c.sys, Relation{"chain6", c.fact.twists, {c.d1}});
    Factorization g = substitute(c.sys, c.fact, 0, 12, table, "chain6", true);
    CHECK(g.twists.size() == 1);
    Factorization back = substitute(c.sys, g, 0, 1, table, "chain6", false);
    CHECK(curvewise_equal(c.sys, back, c.fact));
    CHECK_THROWS(substitute(c.sys, c.fact, 1, 11, table, "chain6", true));
}

TEST_CASE("move scripts replay and report failing steps") {
    Chain c;
    MoveScript s;
    s.push_back(Move{Move::Kind::Elem, 3, {}, {}, 0, 0, "", true});
    s.push_back(Move{Move::Kind::ElemInv, 3, {}, {}, 0, 0, "", true});
    Factorization g = apply_script(c.sys, c.fact, s, nullptr);
    CHECK(curvewise_equal(c.sys, g, c.fact));
    MoveScript bad;
    bad.push_back(Move{Move::Kind::Elem, 99, {}, {}, 0, 0, "", true});
    CHECK_THROWS(apply_script(c.sys, c.fact, bad, nullptr));
}

TEST_CASE("hurwitz search finds a one-move witness") {
    Chain c;
    CHECK(hurwitz_search(c.sys, c.fact, c.fact, 0)->empty());
    Factorization g = elementary_transformation(c.sys, c.fact, 5);
    auto script = hurwitz_search(c.sys, c.fact, g, 2);
    REQUIRE(script.has_value());
    Factorization replay = apply_script(c.sys, c.fact, *script, nullptr);
    CHECK(curvewise_equal(c.sys, replay, g));
}
