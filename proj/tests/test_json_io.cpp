#include <doctest.h>

#include "lpcalc/json_io.hpp"
#include "lpcalc/pencil_library.hpp"
#include "toy_pencil.hpp"

using namespace lpcalc;

namespace {

Dataset toy_dataset() {
    auto t = std::make_unique<Toy>();
    Dataset d;
    d.id = "toy";
    d.sys = std::make_unique<TwistSystem>(std::move(t->sys));
    d.fact = t->fact;
    return d;
}

}  // namespace

TEST_CASE("dataset round-trip is byte-identical and verifies") {
    Dataset d = toy_dataset();
    json j1 = dataset_to_json(d);
    Dataset back = dataset_from_json(j1);
    json j2 = dataset_to_json(back);
    CHECK(j1.dump(1) == j2.dump(1));
    CHECK(verify(*back.sys, back.fact));
    CHECK(back.sys->curve(back.sys->curve_id("a")).rel_h1.has_value());
}

TEST_CASE("script round-trip") {
    Dataset d = toy_dataset();
    MoveScript s;
    Move m1;
    m1.kind = Move::Kind::Elem;
    m1.index = 3;
    Move m2;
    m2.kind = Move::Kind::Conj;
    m2.conj_twists = {d.sys->curve_id("a"), d.sys->curve_id("b")};
    m2.conj_signs = {1, -1};
    Move m3;
    m3.kind = Move::Kind::Subst;
    m3.subst_start = 2;
    m3.subst_len = 4;
    m3.relation_id = "chain";
    m3.left_to_right = false;
    s = {m1, m2, m3};
    json j1 = script_to_json(*d.sys, s);
    MoveScript back = script_from_json(*d.sys, j1);
    CHECK(script_to_json(*d.sys, back).dump(1) == j1.dump(1));
    REQUIRE(back.size() == 3);
    CHECK(back[1].conj_signs == std::vector<int>{1, -1});
    CHECK(back[2].relation_id == "chain");
    CHECK_FALSE(back[2].left_to_right);
}

TEST_CASE("torus bundle group abelianizations") {
    Presentation p0 = torus_bundle_pi1({}, {});
    H1Result h0 = h1(p0);
    CHECK(h0.rank == 4);
    CHECK(h0.torsion.empty());

    Presentation p1 = torus_bundle_pi1({1}, {});
    H1Result h1r = h1(p1);
    CHECK(h1r.rank == 3);
    CHECK(h1r.torsion.empty());

    CHECK_THROWS(torus_bundle_pi1({1}, {2}));  // t_c and t_d do not commute

    // powers of the same twist always commute
    Presentation p2 = torus_bundle_pi1({1}, {1, 1});
    CHECK(h1(p2).rank == 3);
}

TEST_CASE("twist word tokens") {
    std::vector<int> w = parse_tc_td("tc td~ tc~ td");
    CHECK(w == std::vector<int>{1, -2, -1, 2});
    CHECK(render_tc_td(w) == "tc td~ tc~ td");
    CHECK_THROWS(parse_tc_td("tx"));
    CHECK(fab_hash({1}, {}) != fab_hash({}, {1}));
    CHECK(fab_hash({1}, {}).size() == 8);
}
