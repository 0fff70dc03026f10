#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpcalc/factorization.hpp"
#include "lpcalc/intmat.hpp"
#include "lpcalc/twist_system.hpp"

namespace lpcalc {

// chi of the total space of a pencil with fiber genus g, n critical points
// and p base points.
inline int euler_characteristic(int g, int n, int p) { return 4 - 4 * g + n - p; }

// expected free rank of H_2 given b_1 of the total space
inline int h2_rank_formula(int g, int n, int p, int b1) { return 2 - 4 * g + n - p + 2 * b1; }

// Fundamental group of the total space: pi_1 of the closed fiber modulo the
// vanishing cycles. Generators a_1,b_1,...,a_g,b_g; relators are the surface
// relation and one word per twist with all boundary letters erased.
struct Presentation {
    int genus;
    std::vector<std::vector<int>> relators;  // letters +-(1..2g)
};

Presentation pi1_presentation(const TwistSystem& sys, const Factorization& f);

struct H1Result {
    int rank;
    std::vector<Int> torsion;
};

H1Result h1(const Presentation& p);

// Handle chain complex of the blown-up total space. C_1 has rank 2g (the
// closed-fiber 1-handles); C_2 is spanned by one 2-handle per twist, the
// fiber class h_F and the p section classes h_S^j; C_3 by the closed-fiber
// 1-handles again (core arcs and the connecting arcs to boundaries 2..p).
struct ChainComplex {
    int g, n, p;
    IMat d2;  // 2g x (n+1+p)
    IMat d3;  // (n+1+p) x (2g+p-1)
};

// The iterative boundary-coefficient computation for one 1-handle: pair the
// running relative class against each vanishing cycle in application order,
// subtracting the multiple of its relative class, then decode the residual
// against the boundary classes. Residuals outside the allowed span are a
// hard data-integrity error.
std::vector<Int> partial3_row(const TwistSystem& sys, const Factorization& f,
                              const std::vector<std::int64_t>& eta_rel, int end_i, int end_j);

ChainComplex build_chain_complex(const TwistSystem& sys, const Factorization& f);

struct H2Result {
    std::vector<Int> torsion;        // coefficients > 1
    int free_rank;                   // free rank of H_2 of the blow-up minus sections
    int exceptional_rank;            // the p section classes
    std::vector<Int> fiber_class;    // coordinates in the reduced basis
    std::optional<Int> divisibility; // nullopt = infinite (fiber free part vanishes)
};

// Staged reduction: normal form on the non-section block first, then the
// section rows are cleared against the staircase pivots; every cleared entry
// must be divisible by its pivot or the data is inconsistent.
H2Result homology_h2_with_fiber(const ChainComplex& cc);

// Independent dense path over the full boundary matrices, for
// cross-checking the staged reduction.
H2Result homology_h2_oracle(const ChainComplex& cc);

struct HomologyReport {
    int euler;
    H1Result h1;
    H2Result h2;
};

HomologyReport full_report(const TwistSystem& sys, const Factorization& f);

// Pull-back polarization type along an unbranched (n1 x n2)-isogeny cover.
std::pair<Int, Int> cover_polarization_type(const Int& d1, const Int& d2, const Int& n1,
                                            const Int& n2);

}  // namespace lpcalc
