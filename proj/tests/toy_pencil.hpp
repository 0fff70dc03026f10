#pragma once

#include "lpcalc/twist_system.hpp"
#include "lpcalc/factorization.hpp"

// genus-1 pencil toy: (t_a t_b)^6 = t_delta on the extended one-holed torus
struct Toy {
    lpcalc::TwistSystem sys{1, 1, true};
    lpcalc::Factorization fact;

    Toy() {
        using namespace lpcalc;
        const Surface& s = sys.surface();
        Letter A = s.a(1), B = s.b(1), XD = s.xD();
        RelHomologyModel rm(s);
        std::vector<std::int64_t> relA(rm.rank(), 0), relB(rm.rank(), 0);
        relA[rm.A(1)] = 1;
        relB[rm.B(1)] = 1;
        CurveId ca = sys.add_curve("a", Word::one_letter(A), relA);
        CurveId cb = sys.add_curve("b", Word::one_letter(B), relB);
        auto mk = [&](std::vector<Word> fwd, std::vector<Word> inv) {
            std::vector<Word> arcs(1);  // gD stays put: both curves avoid the disk
            return MappingClass::from_images(s, std::move(fwd), std::move(inv), std::move(arcs),
                                             {0, 1});
        };
        sys.register_twist(ca, mk({Word::one_letter(A), Word({B, A}), Word::one_letter(XD)},
                                  {Word::one_letter(A), Word({B, -A}), Word::one_letter(XD)}));
        sys.register_twist(cb, mk({Word({A, -B}), Word::one_letter(B), Word::one_letter(XD)},
                                  {Word({A, B}), Word::one_letter(B), Word::one_letter(XD)}));
        CurveId d1 = sys.boundary_curve(1);
        for (int k = 0; k < 6; ++k) {
            fact.twists.push_back(cb);
            fact.twists.push_back(ca);
        }
        fact.target = {d1};
    }
};
