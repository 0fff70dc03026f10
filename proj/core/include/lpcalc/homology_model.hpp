#pragma once

#include <cstdint>
#include <vector>

#include "lpcalc/mapping_class.hpp"
#include "lpcalc/surface.hpp"

namespace lpcalc {

// Relative homology H_1(surface, marked points) of an extended surface
// (rank 2g+2p). Basis order:
//   A_1, B_1, ..., A_g, B_g   core classes (= classes of the curves a_i, b_i)
//   D_1, ..., D_p             boundary classes delta_i
//   G_2, ..., G_p             reference-arc classes
//   AL                        arc to the auxiliary disk D
// The class of the disk boundary is not a basis element; the model fixes
//   [dD] = -(D_1 + ... + D_p),
// which keeps the inclusion of absolute H_1 injective.
class RelHomologyModel {
public:
    explicit RelHomologyModel(const Surface& s) : g_(s.genus()), p_(s.boundary_count()) {
        if (!s.extended()) throw model_error("relative homology needs the extended surface");
    }

    int rank() const { return 2 * g_ + 2 * p_; }

    int A(int i) const { return 2 * (i - 1); }
    int B(int i) const { return 2 * (i - 1) + 1; }
    int D(int i) const { return 2 * g_ + (i - 1); }
    int G(int i) const { return 2 * g_ + p_ + (i - 2); }  // i = 2..p
    int AL() const { return 2 * g_ + 2 * p_ - 1; }

    std::vector<std::int64_t> dD_class() const {
        std::vector<std::int64_t> v(rank(), 0);
        for (int i = 1; i <= p_; ++i) v[D(i)] = -1;
        return v;
    }

    // Inclusion of an absolute class (coefficients over the extended
    // surface's loop generators a_i, b_i, x_2..x_p, xD) into the relative
    // group: a_i -> A_i, b_i -> B_i, x_j -> D_j, xD -> [dD].
    std::vector<std::int64_t> embed(const Surface& s, const std::vector<std::int64_t>& abs) const {
        std::vector<std::int64_t> v(rank(), 0);
        for (int i = 1; i <= g_; ++i) {
            v[A(i)] = abs[s.a(i) - 1];
            v[B(i)] = abs[s.b(i) - 1];
        }
        for (int j = 2; j <= p_; ++j) v[D(j)] = abs[s.x(j) - 1];
        std::int64_t cD = abs[s.xD() - 1];
        for (int j = 1; j <= p_; ++j) v[D(j)] -= cD;
        return v;
    }

    // Intersection pairing of a relative class against an absolute class:
    //   (A_i, b_i) = +1, (B_i, a_i) = -1, (G_j, x_j) = +1, (AL, xD) = +1,
    // boundary classes D_j pair to zero with everything.
    std::int64_t pairing(const Surface& s, const std::vector<std::int64_t>& rel,
                         const std::vector<std::int64_t>& abs) const {
        std::int64_t r = 0;
        for (int i = 1; i <= g_; ++i) {
            r += rel[A(i)] * abs[s.b(i) - 1];
            r -= rel[B(i)] * abs[s.a(i) - 1];
        }
        for (int j = 2; j <= p_; ++j) r += rel[G(j)] * abs[s.x(j) - 1];
        r += rel[AL()] * abs[s.xD() - 1];
        return r;
    }

private:
    int g_, p_;
};

// Induced action on the relative group. Core classes transform like the
// curves a_i, b_i; boundary classes are fixed (all shipped classes fix the
// boundary pointwise up to the stored permutation, which must be trivial
// here); an arc class picks up the class of its offset word.
inline std::vector<std::vector<std::int64_t>> rel_h1_action(const RelHomologyModel& rel,
                                                            const MappingClass& phi) {
    const Surface& s = phi.surface();
    for (int i = 1; i <= s.boundary_count(); ++i)
        if (phi.boundary_perm()[i] != i)
            throw model_error("rel_h1_action: boundary permutation must be trivial");
    int n = rel.rank();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    auto set_col = [&](int j, const std::vector<std::int64_t>& v) {
        for (int i = 0; i < n; ++i) m[i][j] = v[i];
    };
    int g = s.genus(), p = s.boundary_count();
    for (int i = 1; i <= g; ++i) {
        set_col(rel.A(i), rel.embed(s, s.abelianize(phi.loop_images()[s.a(i) - 1])));
        set_col(rel.B(i), rel.embed(s, s.abelianize(phi.loop_images()[s.b(i) - 1])));
    }
    for (int j = 1; j <= p; ++j) m[rel.D(j)][rel.D(j)] = 1;
    for (int j = 2; j <= p; ++j) {
        auto v = rel.embed(s, s.abelianize(phi.arc_offsets()[s.arc_index(j)]));
        v[rel.G(j)] += 1;
        set_col(rel.G(j), v);
    }
    {
        auto v = rel.embed(s, s.abelianize(phi.arc_offsets()[s.arcD_index()]));
        v[rel.AL()] += 1;
        set_col(rel.AL(), v);
    }
    return m;
}

}  // namespace lpcalc
