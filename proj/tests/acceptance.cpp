// Acceptance battery: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Dataset-heavy checks pull from the pencil library, not
// from files, so the battery has no directory dependencies.

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lpcalc/invariants.hpp"
#include "lpcalc/json_io.hpp"
#include "lpcalc/pencil_library.hpp"

using namespace lpcalc;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::printf("PASS %d: %s\n", id, name.c_str());
    } catch (const std::exception& e) {
        std::printf("FAIL %d: %s (%s)\n", id, name.c_str(), e.what());
        ++failures;
    }
    std::fflush(stdout);
}

void require(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

Dataset toy_dataset() {
    Dataset d;
    d.id = "toy";
    d.sys = std::make_unique<TwistSystem>(1, 1, true);
    TwistSystem& sys = *d.sys;
    const Surface& s = sys.surface();
    Letter A = s.a(1), B = s.b(1), XD = s.xD();
    RelHomologyModel rm(s);
    std::vector<std::int64_t> relA(rm.rank(), 0), relB(rm.rank(), 0);
    relA[rm.A(1)] = 1;
    relB[rm.B(1)] = 1;
    CurveId ca = sys.add_curve("a", Word::one_letter(A), relA);
    CurveId cb = sys.add_curve("b", Word::one_letter(B), relB);
    auto mk = [&](std::vector<Word> fwd, std::vector<Word> inv) {
        std::vector<Word> arcs(1);
        return MappingClass::from_images(s, std::move(fwd), std::move(inv), std::move(arcs),
                                         {0, 1});
    };
    sys.register_twist(ca, mk({Word::one_letter(A), Word({B, A}), Word::one_letter(XD)},
                              {Word::one_letter(A), Word({B, -A}), Word::one_letter(XD)}));
    sys.register_twist(cb, mk({Word({A, -B}), Word::one_letter(B), Word::one_letter(XD)},
                              {Word({A, B}), Word::one_letter(B), Word::one_letter(XD)}));
    d.fact.target = {sys.boundary_curve(1)};
    for (int k = 0; k < 6; ++k) {
        d.fact.twists.push_back(cb);
        d.fact.twists.push_back(ca);
    }
    return d;
}

std::vector<Dataset> shipped_datasets() {
    std::vector<Dataset> out;
    for (const std::string& id : builtin_ids()) out.push_back(build_builtin(id));
    return out;
}

void check_report(const HomologyReport& r, int euler, int h1_rank, int h2_rank, long long div,
                  const std::string& id) {
    require(r.euler == euler, id + ": euler");
    require(r.h1.rank == h1_rank && r.h1.torsion.empty(), id + ": h1");
    require(r.h2.free_rank == h2_rank && r.h2.torsion.empty(), id + ": h2");
    require(r.h2.divisibility && *r.h2.divisibility == div, id + ": divisibility");
}

}  // namespace

int main() {
    criterion(1, "relation verification for all shipped pencils", [] {
        for (const Dataset& d : shipped_datasets())
            require(verify(*d.sys, d.fact), d.id + " does not verify");
        const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs = {
            {{}, {}}, {{1}, {}}, {{1}, {1}}, {{1, 2}, {1, 2}}};
        for (const auto& [a, b] : pairs) {
            Dataset d = f_alpha_beta(a, b);
            require(verify(*d.sys, d.fact),
                    "fab(" + render_tc_td(a) + ";" + render_tc_td(b) + ") does not verify");
        }
    });

    criterion(2, "symmetric-family invariants for genus 3..6", [] {
        for (int g = 3; g <= 6; ++g) {
            Dataset d = generalized_fg(g);
            HomologyReport r = full_report(*d.sys, d.fact);
            check_report(r, 0, 4, 6, 1, d.id);
        }
    });

    criterion(3, "boundary-operator fixtures on the genus-4 pencil", [] {
        Dataset d = generalized_fg(4);
        ChainComplex cc = build_chain_complex(*d.sys, d.fact);
        require((cc.d2 * cc.d3).is_zero(), "d2*d3 != 0");
        int alternating = 1 - 2 * cc.g + (cc.n + 1 + cc.p) - (2 * cc.g + cc.p - 1) + 1;
        require(alternating == 4 - 4 * cc.g + cc.n, "handle count");
        fg4_boundary_fixtures(d, cc);  // throws with the offending column on mismatch
    });

    criterion(4, "derivation scripts replay to their endpoints", [] {
        run_script_checks();
    });

    criterion(5, "torus-bundle fundamental-group consistency", [] {
        const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs = {
            {{}, {}}, {{1}, {}}, {{1}, {1, 1}}, {{2}, {2}}, {{1, 2}, {1, 2, 1, 2}}};
        for (const auto& [a, b] : pairs) {
            Dataset d = f_alpha_beta(a, b);
            H1Result lhs = h1(pi1_presentation(*d.sys, d.fact));
            H1Result rhs = h1(torus_bundle_pi1(a, b));
            require(lhs.rank == rhs.rank && lhs.torsion == rhs.torsion,
                    "mismatch at (" + render_tc_td(a) + ";" + render_tc_td(b) + ")");
        }
    });

    criterion(6, "staged reduction agrees with the dense oracle", [] {
        auto check = [](const Dataset& d) {
            ChainComplex cc = build_chain_complex(*d.sys, d.fact);
            H2Result staged = homology_h2_with_fiber(cc);
            H2Result oracle = homology_h2_oracle(cc);
            require(staged.free_rank == oracle.free_rank, d.id + ": rank");
            require(staged.torsion == oracle.torsion, d.id + ": torsion");
            require(staged.divisibility == oracle.divisibility, d.id + ": divisibility");
        };
        check(toy_dataset());
        check(smith_f3());
    });

    criterion(7, "seeded property suites", [] {
        std::mt19937 rng(0xacce97ed);
        std::vector<Dataset> sets = shipped_datasets();
        {
            Dataset toy = toy_dataset();
            sets.push_back(std::move(toy));
        }
        // 1000 random elementary transformations, spread across datasets in
        // short restarted walks so derived words stay small
        int walks = 0;
        while (walks < 1000) {
            for (Dataset& d : sets) {
                MappingClass target = d.sys->product_of_twists(d.fact.twists);
                Factorization f = d.fact;
                int n = static_cast<int>(f.twists.size());
                std::uniform_int_distribution<int> idx(1, n - 1);
                std::uniform_int_distribution<int> dir(0, 1);
                for (int step = 0; step < 8 && walks < 1000; ++step, ++walks) {
                    int i = idx(rng);
                    f = dir(rng) ? elementary_transformation(*d.sys, f, i)
                                 : inverse_elementary_transformation(*d.sys, f, i);
                }
                require(d.sys->product_of_twists(f.twists) == target,
                        d.id + ": product changed");
                if (walks >= 1000) break;
            }
        }
        for (Dataset& d : sets) {
            // inverse law at every index
            int n = static_cast<int>(d.fact.twists.size());
            for (int i = 1; i < n; ++i) {
                Factorization fwd = elementary_transformation(*d.sys, d.fact, i);
                Factorization back = inverse_elementary_transformation(*d.sys, fwd, i);
                require(curvewise_equal(*d.sys, back, d.fact), d.id + ": inverse law");
            }
            // transvection identity for every registered twist
            const Surface& s = d.sys->surface();
            std::uniform_int_distribution<int> coord(-4, 4);
            for (CurveId id = 0; id < d.sys->curve_count(); ++id) {
                const Curve& c = d.sys->curve(id);
                if (c.explicit_twist < 0 && !c.conjugated_from) continue;
                auto m = d.sys->twist(id).h1_action();
                std::vector<std::int64_t> x(c.abs_h1.size());
                for (auto& vv : x) vv = coord(rng);
                std::int64_t k = s.intersection(c.abs_h1, x);
                for (std::size_t r = 0; r < x.size(); ++r) {
                    std::int64_t got = 0;
                    for (std::size_t cc = 0; cc < x.size(); ++cc) got += m[r][cc] * x[cc];
                    require(got == x[r] + k * c.abs_h1[r], d.id + ": transvection");
                }
            }
        }
        // group axioms over random words of length <= 12
        Dataset toy = toy_dataset();
        const Surface& s = toy.sys->surface();
        std::vector<MappingClass> gens;
        for (CurveId id = 0; id < toy.sys->curve_count(); ++id)
            gens.push_back(toy.sys->twist(id));
        auto word = [&](int len) {
            std::uniform_int_distribution<int> pick(0, static_cast<int>(gens.size()) - 1);
            std::uniform_int_distribution<int> sgn(0, 1);
            MappingClass w = MappingClass::identity(s);
            for (int k = 0; k < len; ++k) {
                const MappingClass& g = gens[pick(rng)];
                w = (sgn(rng) ? g : g.inverted()).compose(w);
            }
            return w;
        };
        std::uniform_int_distribution<int> len(0, 12);
        for (int trial = 0; trial < 30; ++trial) {
            MappingClass f = word(len(rng)), g = word(len(rng)), h = word(len(rng));
            require(f.compose(g).compose(h) == f.compose(g.compose(h)), "associativity");
            require(f.compose(f.inverted()) == MappingClass::identity(s), "inverses");
            require(f.compose(g).inverted() == g.inverted().compose(f.inverted()),
                    "antihomomorphism");
        }
    });

    criterion(8, "covering arithmetic", [] {
        require(cover_polarization_type(1, 2, 1, 2) == std::make_pair(Int(1), Int(4)),
                "(1,2) x (1,2) cover");
        require(cover_polarization_type(1, 2, 2, 1) == std::make_pair(Int(2), Int(2)),
                "(1,2) x (2,1) cover");
        std::mt19937 rng(828);
        std::uniform_int_distribution<int> small(1, 12);
        int done = 0;
        while (done < 200) {
            Int d1 = small(rng), n1 = small(rng), n2 = small(rng);
            Int d2 = d1 * small(rng);
            auto [e1, e2] = cover_polarization_type(d1, d2, n1, n2);
            require(e1 * e2 == n1 * n2 * d1 * d2, "degree identity");
            require(e2 % e1 == 0, "divisibility chain");
            ++done;
        }
    });

    criterion(9, "documented exclusions / optional covering data", [] {
        // Uniqueness, signature and diffeomorphism-type statements have no
        // finite algorithm; the figure-lifted covering pencils are optional
        // data and are not shipped. Nothing to compute.
    });

    return failures == 0 ? 0 : 1;
}
