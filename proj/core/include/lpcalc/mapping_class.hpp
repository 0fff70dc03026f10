#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "lpcalc/surface.hpp"

namespace lpcalc {

// A mapping class as its action on the fundamental groupoid: images of the
// loop generators (with the inverse automorphism carried alongside so that
// inversion is exact rather than searched-for), an offset word u_i per
// reference arc meaning phi(gamma_i) = u_i * gamma_{perm(i)}, and a
// permutation of the boundary indices.
class MappingClass {
public:
    static MappingClass identity(const Surface& s) {
        MappingClass m(s);
        for (Letter g = 1; g <= s.num_loop_gens(); ++g) {
            m.fwd_[g - 1] = Word::one_letter(g);
            m.inv_[g - 1] = Word::one_letter(g);
        }
        return m;
    }

    // images/inverse_images are indexed by generator id - 1; arc_offsets by
    // the surface's arc table. boundary_perm maps boundary i -> perm[i]
    // (1-based, perm[0] unused).
    static MappingClass from_images(const Surface& s, std::vector<Word> images,
                                    std::vector<Word> inverse_images, std::vector<Word> arc_offsets,
                                    std::vector<int> boundary_perm) {
        MappingClass m(s);
        if (static_cast<int>(images.size()) != s.num_loop_gens() ||
            static_cast<int>(inverse_images.size()) != s.num_loop_gens())
            throw model_error("mapping class: wrong number of loop images");
        if (static_cast<int>(arc_offsets.size()) != s.num_arcs())
            throw model_error("mapping class: wrong number of arc offsets");
        if (static_cast<int>(boundary_perm.size()) != s.boundary_count() + 1)
            throw model_error("mapping class: wrong boundary permutation size");
        m.fwd_ = std::move(images);
        m.inv_ = std::move(inverse_images);
        m.arc_ = std::move(arc_offsets);
        m.perm_ = std::move(boundary_perm);
        if (m.perm_[1] != 1) throw model_error("mapping class: boundary 1 carries the basepoint");
        {
            std::vector<bool> hit(m.perm_.size(), false);
            for (int i = 1; i <= s.boundary_count(); ++i) {
                int t = m.perm_[i];
                if (t < 1 || t > s.boundary_count() || hit[t])
                    throw model_error("mapping class: invalid boundary permutation");
                hit[t] = true;
            }
        }
        m.check_inverse_pair();
        m.check_peripheral();
        return m;
    }

    const Surface& surface() const { return *surface_; }
    const std::vector<Word>& loop_images() const { return fwd_; }
    const std::vector<Word>& inverse_loop_images() const { return inv_; }
    const std::vector<Word>& arc_offsets() const { return arc_; }
    const std::vector<int>& boundary_perm() const { return perm_; }

    Word apply(const Word& w) const { return map_through(fwd_, w); }
    Word apply_inverse(const Word& w) const { return map_through(inv_, w); }

    // (*this) o psi: psi first.
    MappingClass compose(const MappingClass& psi) const {
        require_same_surface(psi);
        MappingClass r(*surface_);
        for (int i = 0; i < surface_->num_loop_gens(); ++i) {
            r.fwd_[i] = apply(psi.fwd_[i]);
            r.inv_[i] = psi.apply_inverse(inv_[i]);
        }
        const Surface& s = *surface_;
        for (int bd = 2; bd <= s.boundary_count(); ++bd) {
            int i = s.arc_index(bd);
            int mid = psi.perm_[bd];
            r.arc_[i] = apply(psi.arc_[i]) * arc_[s.arc_index(mid)];
            r.perm_[bd] = perm_[mid];
        }
        if (s.extended()) {
            int i = s.arcD_index();
            r.arc_[i] = apply(psi.arc_[i]) * arc_[i];
        }
        r.perm_[1] = 1;
        return r;
    }

    MappingClass inverted() const {
        MappingClass r(*surface_);
        r.fwd_ = inv_;
        r.inv_ = fwd_;
        const Surface& s = *surface_;
        for (int bd = 2; bd <= s.boundary_count(); ++bd)
            r.perm_[perm_[bd]] = bd;
        for (int bd = 2; bd <= s.boundary_count(); ++bd) {
            int src = r.perm_[bd];  // phi maps src -> bd
            r.arc_[s.arc_index(bd)] = apply_inverse(arc_[s.arc_index(src)]).inverse();
        }
        if (s.extended()) r.arc_[s.arcD_index()] = apply_inverse(arc_[s.arcD_index()]).inverse();
        return r;
    }

    MappingClass power(int n) const {
        MappingClass base = n >= 0 ? *this : inverted();
        MappingClass r = identity(*surface_);
        for (int i = 0, k = n >= 0 ? n : -n; i < k; ++i) r = base.compose(r);
        return r;
    }

    bool operator==(const MappingClass& o) const {
        return fwd_ == o.fwd_ && arc_ == o.arc_ && perm_ == o.perm_;
    }
    bool operator!=(const MappingClass& o) const { return !(*this == o); }

    bool is_identity() const { return *this == identity(*surface_); }

    // Abelianized action on H_1 (columns indexed by generator, rows by the
    // same basis).
    std::vector<std::vector<std::int64_t>> h1_action() const {
        int n = surface_->num_loop_gens();
        std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
        for (int j = 0; j < n; ++j) {
            auto col = surface_->abelianize(fwd_[j]);
            for (int i = 0; i < n; ++i) m[i][j] = col[i];
        }
        return m;
    }

private:
    explicit MappingClass(const Surface& s)
        : surface_(&s),
          fwd_(s.num_loop_gens()),
          inv_(s.num_loop_gens()),
          arc_(s.num_arcs()),
          perm_(s.boundary_count() + 1) {
        std::iota(perm_.begin(), perm_.end(), 0);
    }

    void require_same_surface(const MappingClass& o) const {
        if (!surface_->same_model(*o.surface_)) throw model_error("mapping class: surface mismatch");
    }

    Word map_through(const std::vector<Word>& images, const Word& w) const {
        Word out;
        for (Letter l : w.letters()) {
            if (l > 0)
                out.append(images[l - 1]);
            else
                out.append(images[-l - 1].inverse());
        }
        return out;
    }

    void check_inverse_pair() const {
        for (Letter g = 1; g <= surface_->num_loop_gens(); ++g) {
            Word back = map_through(inv_, fwd_[g - 1]);
            Word fore = map_through(fwd_, inv_[g - 1]);
            if (back != Word::one_letter(g) || fore != Word::one_letter(g))
                throw model_error("mapping class: images do not define an automorphism (" +
                                  surface_->loop_name(g) + ")");
        }
    }

    void check_peripheral() const {
        const Surface& s = *surface_;
        for (int bd = 2; bd <= s.boundary_count(); ++bd) {
            Word img = fwd_[s.x(bd) - 1].cyclically_reduced();
            if (img != Word::one_letter(s.x(perm_[bd])))
                throw model_error("mapping class: peripheral structure broken at boundary " +
                                  std::to_string(bd));
        }
        if (s.extended()) {
            Word img = fwd_[s.xD() - 1].cyclically_reduced();
            if (img != Word::one_letter(s.xD()))
                throw model_error("mapping class: auxiliary disk boundary not preserved");
        }
    }

    const Surface* surface_;
    std::vector<Word> fwd_, inv_, arc_;
    std::vector<int> perm_;
};

}  // namespace lpcalc
