#include "lpcalc/invariants.hpp"

#include <algorithm>

#include "lpcalc/homology_model.hpp"

namespace lpcalc {

namespace {

std::vector<int> erase_boundary_letters(const Surface& s, const Word& w) {
    std::vector<int> out;
    for (Letter l : w.letters()) {
        int g = std::abs(l);
        const std::string& name = s.loop_name(g);
        if (name[0] == 'x') continue;  // boundary and disk classes die in the closed surface
        // loop ids are a1,b1,a2,b2,... in order, which is already the closed
        // surface numbering
        int mapped = g;
        out.push_back(l > 0 ? mapped : -mapped);
    }
    // free reduction
    std::vector<int> red;
    for (int l : out) {
        if (!red.empty() && red.back() == -l)
            red.pop_back();
        else
            red.push_back(l);
    }
    return red;
}

Int gcd_int(Int a, Int b) {
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Largest d such that the class (given per-coordinate as invariant factor
// d_i and coordinate y_i, d_i = 0 meaning a free coordinate) is d times
// another element of the group. nullopt encodes "infinite".
std::optional<Int> divisibility_of(const std::vector<std::pair<Int, Int>>& coords) {
    Int free_gcd = 0;
    bool any = false;
    for (const auto& [d, y] : coords)
        if (d == 0) {
            free_gcd = gcd_int(free_gcd, y);
            any = (any || y != 0);
        }
    if (!any) return std::nullopt;
    auto works = [&](const Int& n) {
        for (const auto& [d, y] : coords) {
            if (d == 0) {
                if (y % n != 0) return false;
            } else if (d > 1) {
                if ((y % d) % gcd_int(n, d) != 0) return false;
            }
        }
        return true;
    };
    // walk the divisors of the free gcd from the top
    std::vector<Int> divs;
    for (Int i = 1; i * i <= free_gcd; ++i)
        if (free_gcd % i == 0) {
            divs.push_back(i);
            divs.push_back(free_gcd / i);
        }
    std::sort(divs.begin(), divs.end(), [](const Int& a, const Int& b) { return a > b; });
    for (const Int& n : divs)
        if (works(n)) return n;
    return Int(1);
}

}  // namespace

Presentation pi1_presentation(const TwistSystem& sys, const Factorization& f) {
    const Surface& s = sys.surface();
    Presentation p;
    p.genus = s.genus();
    std::vector<int> surf;
    for (int i = 1; i <= s.genus(); ++i) {
        int ai = 2 * i - 1, bi = 2 * i;
        surf.insert(surf.end(), {ai, bi, -ai, -bi});
    }
    p.relators.push_back(std::move(surf));
    for (CurveId id : f.twists)
        p.relators.push_back(erase_boundary_letters(s, sys.curve(id).word));
    return p;
}

H1Result h1(const Presentation& p) {
    int cols = 2 * p.genus;
    IMat m(static_cast<int>(p.relators.size()), cols);
    for (int i = 0; i < m.rows(); ++i)
        for (int l : p.relators[i]) m.at(i, std::abs(l) - 1) += l > 0 ? 1 : -1;
    SmithForm f = smith_normal_form(m);
    return H1Result{cols - f.rank, f.torsion};
}

std::vector<Int> partial3_row(const TwistSystem& sys, const Factorization& f,
                              const std::vector<std::int64_t>& eta_rel, int end_i, int end_j) {
    const Surface& s = sys.surface();
    RelHomologyModel rm(s);
    int n = static_cast<int>(f.twists.size());
    int p = s.boundary_count();

    std::vector<Int> eta(eta_rel.begin(), eta_rel.end());
    std::vector<Int> row(n + 1 + p, 0);
    for (int l = 0; l < n; ++l) {
        const Curve& c = sys.curve(f.twists[l]);
        if (!c.rel_h1)
            throw model_error("curve " + c.name + " carries no relative homology class");
        // pairing of the running class against the cycle's absolute class
        Int k = 0;
        for (int i = 1; i <= s.genus(); ++i) {
            k += eta[rm.A(i)] * c.abs_h1[s.b(i) - 1];
            k -= eta[rm.B(i)] * c.abs_h1[s.a(i) - 1];
        }
        for (int j = 2; j <= p; ++j) k += eta[rm.G(j)] * c.abs_h1[s.x(j) - 1];
        k += eta[rm.AL()] * c.abs_h1[s.xD() - 1];
        row[l] = k;
        for (int t = 0; t < rm.rank(); ++t) eta[t] -= k * (*c.rel_h1)[t];
    }

    // residual must be delta_i - delta_j - k_F [dD], i.e. supported on the
    // boundary classes with the pattern e_i - e_j + k_F(1,...,1)
    std::vector<Int> res(eta_rel.begin(), eta_rel.end());
    for (int t = 0; t < rm.rank(); ++t) res[t] = eta[t] - res[t];
    for (int t = 0; t < rm.rank(); ++t) {
        bool boundary_coord = false;
        for (int j = 1; j <= p; ++j) boundary_coord = boundary_coord || t == rm.D(j);
        if (!boundary_coord && res[t] != 0)
            throw model_error("partial3 residual leaves the boundary span (coordinate " +
                              std::to_string(t) + "): inconsistent relative homology data");
    }
    Int sum = 0;
    for (int j = 1; j <= p; ++j) sum += res[rm.D(j)];
    if (sum % p != 0) throw model_error("partial3 residual: fiber coefficient is not integral");
    Int kF = sum / p;
    for (int j = 1; j <= p; ++j) {
        Int want = kF + (j == end_i ? 1 : 0) - (j == end_j ? 1 : 0);
        if (res[rm.D(j)] != want)
            throw model_error("partial3 residual does not match the declared endpoints");
    }
    row[n] = kF;
    if (end_i != end_j) {
        row[n + end_i] = 1;
        row[n + end_j] = -1;
    }
    return row;
}

ChainComplex build_chain_complex(const TwistSystem& sys, const Factorization& f) {
    const Surface& s = sys.surface();
    if (!s.extended()) throw model_error("chain complex needs the extended surface model");
    int g = s.genus(), p = s.boundary_count();
    int n = static_cast<int>(f.twists.size());
    ChainComplex cc;
    cc.g = g;
    cc.n = n;
    cc.p = p;
    cc.d2 = IMat(2 * g, n + 1 + p);
    for (int l = 0; l < n; ++l) {
        const Curve& c = sys.curve(f.twists[l]);
        for (int i = 1; i <= g; ++i) {
            cc.d2.at(2 * i - 2, l) = c.abs_h1[s.a(i) - 1];
            cc.d2.at(2 * i - 1, l) = c.abs_h1[s.b(i) - 1];
        }
    }

    RelHomologyModel rm(s);
    cc.d3 = IMat(n + 1 + p, 2 * g + p - 1);
    auto fill = [&](int col, int basis_index, int ei, int ej) {
        std::vector<std::int64_t> eta(rm.rank(), 0);
        eta[basis_index] = 1;
        auto row = partial3_row(sys, f, eta, ei, ej);
        for (int r = 0; r < cc.d3.rows(); ++r) cc.d3.at(r, col) = row[r];
    };
    for (int i = 1; i <= g; ++i) {
        fill(2 * i - 2, rm.A(i), 1, 1);
        fill(2 * i - 1, rm.B(i), 1, 1);
    }
    for (int j = 2; j <= p; ++j) fill(2 * g + j - 2, rm.G(j), 1, j);

    if (!(cc.d2 * cc.d3).is_zero()) throw model_error("chain complex: d2 * d3 != 0");
    return cc;
}

namespace {

struct KernelData {
    std::vector<std::vector<Int>> basis;  // of the vanishing-cycle block
    IMat mat;                             // n x |basis|
};

KernelData cycle_kernel(const ChainComplex& cc) {
    IMat ml(2 * cc.g, cc.n);
    for (int i = 0; i < 2 * cc.g; ++i)
        for (int j = 0; j < cc.n; ++j) ml.at(i, j) = cc.d2.at(i, j);
    KernelData k;
    k.basis = kernel_basis(ml);
    k.mat = IMat(cc.n, static_cast<int>(k.basis.size()));
    for (int j = 0; j < k.mat.cols(); ++j)
        for (int i = 0; i < cc.n; ++i) k.mat.at(i, j) = k.basis[j][i];
    return k;
}

}  // namespace

H2Result homology_h2_with_fiber(const ChainComplex& cc) {
    KernelData ker = cycle_kernel(cc);
    int nk = static_cast<int>(ker.basis.size());
    int zf = nk;                 // fiber row inside the non-section block
    int nn = nk + 1;             // non-section rows
    int p = cc.p;
    int m = cc.d3.cols();

    IMat Bn(nn, m), Be(p, m);
    for (int col = 0; col < m; ++col) {
        std::vector<Int> cl(cc.n);
        for (int i = 0; i < cc.n; ++i) cl[i] = cc.d3.at(i, col);
        auto y = solve(ker.mat, cl);
        if (!y) throw model_error("h2 reduction: boundary column leaves the cycle lattice");
        for (int i = 0; i < nk; ++i) Bn.at(i, col) = (*y)[i];
        Bn.at(zf, col) = cc.d3.at(cc.n, col);
        for (int s = 0; s < p; ++s) Be.at(s, col) = cc.d3.at(cc.n + 1 + s, col);
    }

    SmithForm sf = smith_normal_form(Bn);
    IMat BeV = Be * sf.v;

    // fiber class through the row basis change
    std::vector<Int> fn(nn, 0);
    for (int i = 0; i < nn; ++i) fn[i] = sf.u.at(i, zf);
    std::vector<Int> fe(p, 0);

    // clear the section rows against the staircase pivots; the cleared
    // entries must be divisible by their pivot
    for (int t = 0; t < sf.rank; ++t) {
        const Int& e = sf.d.at(t, t);
        for (int s = 0; s < p; ++s) {
            Int v = BeV.at(s, t);
            if (v == 0) continue;
            if (v % e != 0)
                throw model_error("h2 reduction: section entry not divisible by its pivot");
            Int q = v / e;
            for (int col = 0; col < m; ++col) BeV.at(s, col) -= q * sf.d.at(t, col);
            fe[s] -= q * fn[t];
        }
    }
    if (!BeV.is_zero())
        throw model_error("h2 reduction: section rows are not cleared by the staircase");

    H2Result r;
    r.exceptional_rank = p;
    r.free_rank = nn - sf.rank;
    std::vector<std::pair<Int, Int>> coords;
    for (int t = 0; t < sf.rank; ++t)
        if (sf.d.at(t, t) > 1) {
            Int e = sf.d.at(t, t);
            Int res = ((fn[t] % e) + e) % e;
            r.torsion.push_back(e);
            r.fiber_class.push_back(res);
            coords.emplace_back(e, res);
        }
    for (int t = sf.rank; t < nn; ++t) {
        r.fiber_class.push_back(fn[t]);
        coords.emplace_back(0, fn[t]);
    }
    r.divisibility = divisibility_of(coords);
    return r;
}

H2Result homology_h2_oracle(const ChainComplex& cc) {
    auto kb = kernel_basis(cc.d2);
    int z = static_cast<int>(kb.size());
    int c2 = cc.d2.cols();
    IMat K(c2, z);
    for (int j = 0; j < z; ++j)
        for (int i = 0; i < c2; ++i) K.at(i, j) = kb[j][i];

    auto in_kernel_coords = [&](const std::vector<Int>& v) {
        auto y = solve(K, v);
        if (!y) throw model_error("h2 oracle: vector outside the cycle lattice");
        return *y;
    };

    int m = cc.d3.cols();
    IMat M(z, m + cc.p);  // boundary image plus the section classes
    for (int col = 0; col < m; ++col) {
        std::vector<Int> v(c2);
        for (int i = 0; i < c2; ++i) v[i] = cc.d3.at(i, col);
        auto y = in_kernel_coords(v);
        for (int i = 0; i < z; ++i) M.at(i, col) = y[i];
    }
    for (int s = 0; s < cc.p; ++s) {
        std::vector<Int> v(c2, 0);
        v[cc.n + 1 + s] = 1;
        auto y = in_kernel_coords(v);
        for (int i = 0; i < z; ++i) M.at(i, m + s) = y[i];
    }
    std::vector<Int> fv(c2, 0);
    fv[cc.n] = 1;
    auto f = in_kernel_coords(fv);

    SmithForm sf = smith_normal_form(M);
    std::vector<Int> y = sf.u.apply(f);

    H2Result r;
    r.exceptional_rank = cc.p;
    r.free_rank = z - sf.rank;
    std::vector<std::pair<Int, Int>> coords;
    for (int t = 0; t < sf.rank; ++t)
        if (sf.d.at(t, t) > 1) {
            Int e = sf.d.at(t, t);
            Int res = ((y[t] % e) + e) % e;
            r.torsion.push_back(e);
            r.fiber_class.push_back(res);
            coords.emplace_back(e, res);
        }
    for (int t = sf.rank; t < z; ++t) {
        r.fiber_class.push_back(y[t]);
        coords.emplace_back(0, y[t]);
    }
    r.divisibility = divisibility_of(coords);
    return r;
}

HomologyReport full_report(const TwistSystem& sys, const Factorization& f) {
    const Surface& s = sys.surface();
    HomologyReport rep;
    rep.euler = euler_characteristic(s.genus(), static_cast<int>(f.twists.size()),
                                     s.boundary_count());
    rep.h1 = h1(pi1_presentation(sys, f));
    rep.h2 = homology_h2_with_fiber(build_chain_complex(sys, f));
    return rep;
}

std::pair<Int, Int> cover_polarization_type(const Int& d1, const Int& d2, const Int& n1,
                                            const Int& n2) {
    if (d1 <= 0 || d2 <= 0 || n1 <= 0 || n2 <= 0)
        throw model_error("polarization data must be positive");
    if (d2 % d1 != 0) throw model_error("polarization type needs d1 | d2");
    Int t1 = gcd_int(n1 * d1, n2 * d2);
    Int prod = n1 * n2 * d1 * d2;
    Int t2 = prod / t1;
    if (t1 * t2 != prod) throw model_error("polarization arithmetic broke its own identity");
    return {t1, t2};
}

}  // namespace lpcalc
