#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lpcalc/homology_model.hpp"
#include "lpcalc/mapping_class.hpp"
#include "lpcalc/surface.hpp"

namespace lpcalc {

using CurveId = int;

// A registered simple closed curve: reduced cyclic word, cached homology
// classes, and a recipe for its Dehn twist. The recipe is either an
// explicitly registered automorphism or a pair (base curve, conjugator),
// realizing t_{phi(c)} = phi t_c phi^{-1}.
struct Curve {
    std::string name;
    Word word;  // freely reduced; identity of curves is cyclic-word equality
    std::vector<std::int64_t> abs_h1;
    std::optional<std::vector<std::int64_t>> rel_h1;
    int explicit_twist = -1;  // index into the automorphism store
    std::optional<std::pair<CurveId, MappingClass>> conjugated_from;
};

// Surface together with its curve and twist registry. Twists are never
// derived from raw words: a curve either ships an explicit automorphism or
// is a mapping-class image of one that does.
class TwistSystem {
public:
    TwistSystem(int genus, int boundary_count, bool extended)
        : surface_(std::make_shared<Surface>(genus, boundary_count, extended)) {}

    const Surface& surface() const { return *surface_; }
    std::shared_ptr<const Surface> surface_ptr() const { return surface_; }

    int curve_count() const { return static_cast<int>(curves_.size()); }
    const Curve& curve(CurveId id) const { return curves_.at(id); }
    bool has_curve(const std::string& name) const { return by_name_.count(name) > 0; }
    CurveId curve_id(const std::string& name) const {
        auto it = by_name_.find(name);
        if (it == by_name_.end()) throw model_error("unknown curve: " + name);
        return it->second;
    }

    CurveId add_curve(const std::string& name, const Word& word,
                      std::optional<std::vector<std::int64_t>> rel_h1 = std::nullopt) {
        if (word.cyclically_reduced().empty())
            throw model_error("curve " + name + ": null-homotopic word");
        if (by_name_.count(name)) throw model_error("duplicate curve name: " + name);
        Curve c;
        c.name = name;
        c.word = word;
        c.abs_h1 = surface_->abelianize(word);
        c.rel_h1 = std::move(rel_h1);
        curves_.push_back(std::move(c));
        CurveId id = curve_count() - 1;
        by_name_[name] = id;
        by_word_.emplace(word.cyclic_canonical(), id);
        return id;
    }

    // Explicit twist registration. Checks that the H_1 action is the
    // transvection along the curve's class.
    void register_twist(CurveId id, MappingClass phi) {
        const Curve& c = curves_.at(id);
        auto m = phi.h1_action();
        int n = surface_->num_loop_gens();
        for (int j = 0; j < n; ++j) {
            std::vector<std::int64_t> x(n, 0);
            x[j] = 1;
            std::int64_t coef = surface_->intersection(c.abs_h1, x);
            for (int i = 0; i < n; ++i) {
                std::int64_t want = (i == j ? 1 : 0) + coef * c.abs_h1[i];
                if (m[i][j] != want)
                    throw model_error("twist " + c.name + ": H1 action is not the transvection");
            }
        }
        autos_.push_back(std::move(phi));
        curves_[id].explicit_twist = static_cast<int>(autos_.size()) - 1;
    }

    // phi-image of a registered curve; reuses an existing curve when the
    // image word is already present (cyclic-word identity).
    CurveId derived_curve(CurveId base, const MappingClass& phi) {
        const Curve& b = curves_.at(base);
        Word w = phi.apply(b.word);
        auto key = w.cyclic_canonical();
        auto it = by_word_.find(key);
        std::optional<std::vector<std::int64_t>> rel;
        if (b.rel_h1 && surface_->extended()) {
            RelHomologyModel rm(*surface_);
            auto act = rel_h1_action(rm, phi);
            std::vector<std::int64_t> v(rm.rank(), 0);
            for (int i = 0; i < rm.rank(); ++i)
                for (int j = 0; j < rm.rank(); ++j) v[i] += act[i][j] * (*b.rel_h1)[j];
            rel = std::move(v);
        }
        if (it != by_word_.end()) {
            Curve& ex = curves_[it->second];
            if (rel) {
                // words are identified up to orientation, so the class is
                // only defined up to sign
                auto neg = *rel;
                for (auto& v : neg) v = -v;
                if (ex.rel_h1 && *ex.rel_h1 != *rel && *ex.rel_h1 != neg)
                    throw model_error("derived curve " + ex.name + ": relative class mismatch");
                if (!ex.rel_h1) ex.rel_h1 = rel;
            }
            return it->second;
        }
        Curve c;
        c.name = unique_name(b.name);
        c.word = w;
        c.abs_h1 = surface_->abelianize(w);
        c.rel_h1 = std::move(rel);
        c.conjugated_from = std::make_pair(base, phi);
        curves_.push_back(std::move(c));
        CurveId id = curve_count() - 1;
        by_name_[curves_[id].name] = id;
        by_word_.emplace(std::move(key), id);
        return id;
    }

    MappingClass twist(CurveId id) const {
        auto hit = twist_cache_.find(id);
        if (hit != twist_cache_.end()) return hit->second;
        const Curve& c = curves_.at(id);
        if (c.explicit_twist >= 0) return autos_[c.explicit_twist];
        if (c.conjugated_from) {
            const auto& [base, phi] = *c.conjugated_from;
            MappingClass t = phi.compose(twist(base)).compose(phi.inverted());
            twist_cache_.emplace(id, t);
            return t;
        }
        throw model_error("curve " + c.name + " has no twist recipe");
    }

    // Boundary-parallel twists are built in: t_{delta_1} conjugates every
    // loop by the boundary-1 word and offsets every arc by it; t_{delta_i}
    // (i >= 2) fixes all loops and offsets only the arc to boundary i by x_i.
    // This is what forces groupoid-level (not just pi_1) bookkeeping.
    // On an extended surface "delta1" is the curve enclosing boundary 1
    // together with the auxiliary disk (the disk sits inside the collar), so
    // its word drops the x_D letter and its twist fixes the disk arc. This
    // is what lets a pencil relation hold verbatim on the extended model.
    CurveId boundary_curve(int i) {
        std::string nm = "delta" + std::to_string(i);
        if (by_name_.count(nm)) return by_name_[nm];
        Word w = i == 1 ? delta1_word() : Word::one_letter(surface_->x(i));
        std::optional<std::vector<std::int64_t>> rel;
        if (surface_->extended()) {
            RelHomologyModel rm(*surface_);
            rel = rm.embed(*surface_, surface_->abelianize(w));
        }
        CurveId id = add_curve(nm, w, std::move(rel));
        register_twist(id, boundary_twist_class(i));
        return id;
    }

    MappingClass product_of_twists(const std::vector<CurveId>& application_order) const {
        MappingClass p = MappingClass::identity(*surface_);
        for (CurveId id : application_order) p = twist(id).compose(p);
        return p;
    }

private:
    Word delta1_word() const {
        Word w = surface_->boundary_word();
        if (!surface_->extended()) return w;
        Word out;
        for (Letter l : w.letters())
            if (l != surface_->xD()) out.push(l);
        return out;
    }

    MappingClass boundary_twist_class(int i) const {
        const Surface& s = *surface_;
        int n = s.num_loop_gens();
        std::vector<Word> fwd(n), inv(n), arcs(s.num_arcs());
        std::vector<int> perm(s.boundary_count() + 1);
        for (int k = 0; k <= s.boundary_count(); ++k) perm[k] = k;
        if (i == 1) {
            // right-handed with respect to the registered twist alphabet:
            // (t_a t_b)^6 on the one-holed torus conjugates by the inverse
            // boundary word, so that is the positive boundary twist
            Word d = delta1_word().inverse();
            for (Letter g = 1; g <= n; ++g) {
                fwd[g - 1] = Word::one_letter(g).conjugated_by(d);
                inv[g - 1] = Word::one_letter(g).conjugated_by(d.inverse());
            }
            if (s.extended()) {
                // the disk loop never leaves the enclosed collar region
                fwd[s.xD() - 1] = Word::one_letter(s.xD());
                inv[s.xD() - 1] = Word::one_letter(s.xD());
            }
            for (int bd = 2; bd <= s.boundary_count(); ++bd) arcs[s.arc_index(bd)] = d;
            // the disk arc stays inside the enclosed collar region
        } else {
            for (Letter g = 1; g <= n; ++g) {
                fwd[g - 1] = Word::one_letter(g);
                inv[g - 1] = Word::one_letter(g);
            }
            arcs[s.arc_index(i)] = Word::one_letter(-s.x(i));
        }
        return MappingClass::from_images(s, std::move(fwd), std::move(inv), std::move(arcs),
                                         std::move(perm));
    }

    std::string unique_name(const std::string& base) {
        std::string n = base + "'";
        while (by_name_.count(n)) n += "'";
        return n;
    }

    std::shared_ptr<Surface> surface_;
    std::vector<Curve> curves_;
    std::vector<MappingClass> autos_;
    std::map<std::string, CurveId> by_name_;
    std::map<Word, CurveId> by_word_;
    mutable std::map<CurveId, MappingClass> twist_cache_;
};

}  // namespace lpcalc
