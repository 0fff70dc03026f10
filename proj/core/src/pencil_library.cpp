#include "lpcalc/pencil_library.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

namespace lpcalc {

namespace {

// One-holed torus with registered twists t_c (= t_a) and t_d (= t_b), used
// both for the commuting-pair precondition and for the mapping-torus
// relators. Loop letters double as the base generators c, d.
TwistSystem one_holed_torus() {
    TwistSystem sys(1, 1, false);
    const Surface& s = sys.surface();
    Letter A = s.a(1), B = s.b(1);
    CurveId ca = sys.add_curve("c", Word::one_letter(A));
    CurveId cb = sys.add_curve("d", Word::one_letter(B));
    auto mk = [&](std::vector<Word> fwd, std::vector<Word> inv) {
        return MappingClass::from_images(s, std::move(fwd), std::move(inv), {}, {0, 1});
    };
    sys.register_twist(ca, mk({Word::one_letter(A), Word({B, A})},
                              {Word::one_letter(A), Word({B, -A})}));
    sys.register_twist(cb, mk({Word({A, -B}), Word::one_letter(B)},
                              {Word({A, B}), Word::one_letter(B)}));
    return sys;
}

MappingClass tc_td_class(const TwistSystem& sys, const std::vector<int>& w) {
    MappingClass phi = MappingClass::identity(sys.surface());
    for (int l : w) {
        CurveId id = sys.curve_id(std::abs(l) == 1 ? "c" : "d");
        MappingClass t = sys.twist(id);
        phi = (l > 0 ? t : t.inverted()).compose(phi);
    }
    return phi;
}

}  // namespace

std::vector<int> parse_tc_td(const std::string& text) {
    std::vector<int> out;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        int sign = 1;
        if (tok.size() > 1 && tok.back() == '~') {
            sign = -1;
            tok.pop_back();
        }
        if (tok == "tc")
            out.push_back(sign);
        else if (tok == "td")
            out.push_back(2 * sign);
        else
            throw model_error("bad twist token: " + tok);
    }
    return out;
}

std::string render_tc_td(const std::vector<int>& w) {
    std::string out;
    for (int l : w) {
        if (!out.empty()) out += ' ';
        out += std::abs(l) == 1 ? "tc" : "td";
        if (l < 0) out += '~';
    }
    return out;
}

std::string fab_hash(const std::vector<int>& alpha, const std::vector<int>& beta) {
    std::string key = render_tc_td(alpha) + "|" + render_tc_td(beta);
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf, 8);
}

Presentation torus_bundle_pi1(const std::vector<int>& alpha, const std::vector<int>& beta) {
    TwistSystem sys = one_holed_torus();
    MappingClass pa = tc_td_class(sys, alpha);
    MappingClass pb = tc_td_class(sys, beta);
    if (!(pa.compose(pb) == pb.compose(pa)))
        throw model_error("monodromy pair does not commute");

    // generators a=1, b=2, c=3, d=4; the fiber letters are literal, the base
    // letters are the torus loop letters shifted by 2.
    auto shift = [](const Word& w) {
        std::vector<int> out;
        for (Letter l : w.letters()) out.push_back(l > 0 ? l + 2 : l - 2);
        return out;
    };
    auto inv = [](std::vector<int> w) {
        std::reverse(w.begin(), w.end());
        for (int& l : w) l = -l;
        return w;
    };
    auto mapping_torus = [&](int base, const MappingClass& phi, int fiber) {
        // base * fiber * phi(base)^-1 * fiber^-1
        Word img = phi.apply(Word::one_letter(base == 3 ? sys.surface().a(1)
                                                        : sys.surface().b(1)));
        std::vector<int> r{base, fiber};
        for (int l : inv(shift(img))) r.push_back(l);
        r.push_back(-fiber);
        return r;
    };

    Presentation p;
    p.genus = 2;  // four generators
    p.relators.push_back({1, 2, -1, -2});
    p.relators.push_back(mapping_torus(3, pa, 1));
    p.relators.push_back(mapping_torus(3, pb, 2));
    p.relators.push_back({3, 4, -3, -4});
    p.relators.push_back(mapping_torus(4, pa, 1));
    p.relators.push_back(mapping_torus(4, pb, 2));
    return p;
}

std::vector<std::string> builtin_ids() {
    return {"matsumoto-lift", "matsumoto-sym", "smith-f3", "smith-geometric",
            "fg-3",           "fg-4",          "fg-5",     "fg-6"};
}

Dataset build_builtin(const std::string& id) {
    if (id == "matsumoto-lift") return matsumoto_lift();
    if (id == "matsumoto-sym") return modified_matsumoto();
    if (id == "smith-f3") return smith_f3();
    if (id == "smith-geometric") return smith_geometric();
    if (id.rfind("fg-", 0) == 0) {
        int g = std::stoi(id.substr(3));
        return generalized_fg(g);
    }
    throw model_error("unknown dataset id: " + id);
}

}  // namespace lpcalc
