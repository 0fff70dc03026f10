#include "lpcalc/json_io.hpp"

#include <fstream>

namespace lpcalc {

namespace {

json word_to_json(const Surface& s, const Word& w) {
    json a = json::array();
    for (const auto& t : s.word_tokens(w)) a.push_back(t);
    return a;
}

Word word_from_json(const Surface& s, const json& a) {
    std::vector<std::string> toks;
    for (const auto& t : a) toks.push_back(t.get<std::string>());
    return s.word_from_tokens(toks);
}

json images_to_json(const Surface& s, const std::vector<Word>& imgs) {
    json o = json::object();
    for (Letter g = 1; g <= s.num_loop_gens(); ++g)
        o[s.loop_name(g)] = word_to_json(s, imgs[g - 1]);
    return o;
}

std::vector<Word> images_from_json(const Surface& s, const json& o) {
    std::vector<Word> v(s.num_loop_gens());
    for (Letter g = 1; g <= s.num_loop_gens(); ++g) {
        const std::string& n = s.loop_name(g);
        if (!o.contains(n)) throw model_error("twist registration: missing image of " + n);
        v[g - 1] = word_from_json(s, o.at(n));
    }
    return v;
}

json arcs_to_json(const Surface& s, const std::vector<Word>& arcs) {
    json o = json::object();
    for (int i = 0; i < s.num_arcs(); ++i) o[s.arc_name(i)] = word_to_json(s, arcs[i]);
    return o;
}

std::vector<Word> arcs_from_json(const Surface& s, const json& o) {
    std::vector<Word> v(s.num_arcs());
    for (int i = 0; i < s.num_arcs(); ++i)
        if (o.contains(s.arc_name(i))) v[i] = word_from_json(s, o.at(s.arc_name(i)));
    return v;
}

std::pair<std::vector<CurveId>, std::vector<int>> twist_word_from_json(const TwistSystem& sys,
                                                                       const json& a) {
    std::vector<CurveId> tw;
    std::vector<int> sg;
    for (const auto& t : a) {
        std::string s = t.get<std::string>();
        int sign = 1;
        if (!s.empty() && s.back() == '~') {
            sign = -1;
            s.pop_back();
        }
        tw.push_back(sys.curve_id(s));
        sg.push_back(sign);
    }
    return {tw, sg};
}

}  // namespace

json dataset_to_json(const Dataset& d) {
    const TwistSystem& sys = *d.sys;
    const Surface& s = sys.surface();
    json j;
    j["id"] = d.id;
    j["surface"] = {{"genus", s.genus()}, {"boundary", s.boundary_count()},
                    {"extended", s.extended()}};
    json curves = json::array();
    for (CurveId id = 0; id < sys.curve_count(); ++id) {
        const Curve& c = sys.curve(id);
        if (c.name.rfind("delta", 0) == 0) continue;  // boundary curves are implicit
        json cj;
        cj["name"] = c.name;
        cj["word"] = word_to_json(s, c.word);
        if (c.rel_h1) cj["rel_h1"] = *c.rel_h1;
        if (c.explicit_twist >= 0) {
            MappingClass t = sys.twist(id);
            cj["twist"] = {{"loop_images", images_to_json(s, t.loop_images())},
                           {"inverse_loop_images", images_to_json(s, t.inverse_loop_images())},
                           {"arc_offsets", arcs_to_json(s, t.arc_offsets())}};
        } else if (c.conjugated_from) {
            cj["base"] = sys.curve(c.conjugated_from->first).name;
            // the conjugator itself is serialized by the producer as a twist
            // word; datasets we emit always carry one
            throw model_error("dataset emit: curve " + c.name +
                              " has an anonymous conjugation recipe");
        }
        curves.push_back(std::move(cj));
    }
    j["curves"] = std::move(curves);
    json fw = json::array();
    for (CurveId id : d.fact.twists) fw.push_back(sys.curve(id).name);
    j["factorization"] = std::move(fw);
    json tg = json::array();
    for (CurveId id : d.fact.target) tg.push_back(sys.curve(id).name);
    j["target"] = std::move(tg);
    return j;
}

Dataset dataset_from_json(const json& j) {
    Dataset d;
    d.id = j.value("id", "");
    const auto& sj = j.at("surface");
    d.sys = std::make_unique<TwistSystem>(sj.at("genus").get<int>(), sj.at("boundary").get<int>(),
                                          sj.value("extended", false));
    TwistSystem& sys = *d.sys;
    const Surface& s = sys.surface();
    for (int i = 1; i <= s.boundary_count(); ++i) sys.boundary_curve(i);

    // two passes so conjugation recipes can reference any named curve
    for (const auto& cj : j.at("curves")) {
        std::optional<std::vector<std::int64_t>> rel;
        if (cj.contains("rel_h1")) rel = cj.at("rel_h1").get<std::vector<std::int64_t>>();
        sys.add_curve(cj.at("name").get<std::string>(), word_from_json(s, cj.at("word")),
                      std::move(rel));
    }
    for (const auto& cj : j.at("curves")) {
        CurveId id = sys.curve_id(cj.at("name").get<std::string>());
        if (cj.contains("twist")) {
            const auto& tj = cj.at("twist");
            std::vector<int> perm(s.boundary_count() + 1);
            for (int i = 0; i <= s.boundary_count(); ++i) perm[i] = i;
            sys.register_twist(
                id, MappingClass::from_images(s, images_from_json(s, tj.at("loop_images")),
                                              images_from_json(s, tj.at("inverse_loop_images")),
                                              arcs_from_json(s, tj.at("arc_offsets")), perm));
        } else if (cj.contains("conjugate_of")) {
            const auto& rj = cj.at("conjugate_of");
            CurveId base = sys.curve_id(rj.at("base").get<std::string>());
            auto [tw, sg] = twist_word_from_json(sys, rj.at("by"));
            MappingClass phi = MappingClass::identity(s);
            for (std::size_t k = 0; k < tw.size(); ++k) {
                MappingClass t = sys.twist(tw[k]);
                if (sg[k] < 0) t = t.inverted();
                phi = t.compose(phi);
            }
            CurveId derived = sys.derived_curve(base, phi);
            if (derived != id)
                throw model_error("curve " + sys.curve(id).name +
                                  ": conjugation recipe yields a different word");
        }
    }

    for (const auto& t : j.at("factorization"))
        d.fact.twists.push_back(sys.curve_id(t.get<std::string>()));
    for (const auto& t : j.at("target"))
        d.fact.target.push_back(sys.curve_id(t.get<std::string>()));
    return d;
}

Dataset load_dataset_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw model_error("cannot open " + path);
    json j;
    in >> j;
    return dataset_from_json(j);
}

void save_dataset_file(const Dataset& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw model_error("cannot write " + path);
    out << dataset_to_json(d).dump(1) << "\n";
}

json script_to_json(const TwistSystem& sys, const MoveScript& s) {
    json a = json::array();
    for (const Move& m : s) {
        switch (m.kind) {
            case Move::Kind::Elem:
                a.push_back({{"op", "elem"}, {"i", m.index}});
                break;
            case Move::Kind::ElemInv:
                a.push_back({{"op", "elem_inv"}, {"i", m.index}});
                break;
            case Move::Kind::Conj: {
                json by = json::array();
                for (std::size_t k = 0; k < m.conj_twists.size(); ++k) {
                    std::string t = sys.curve(m.conj_twists[k]).name;
                    if (m.conj_signs[k] < 0) t += "~";
                    by.push_back(t);
                }
                a.push_back({{"op", "conj"}, {"by", by}});
                break;
            }
            case Move::Kind::Subst:
                a.push_back({{"op", "subst"},
                             {"at", {m.subst_start, m.subst_len}},
                             {"relation", m.relation_id},
                             {"direction", m.left_to_right ? "lr" : "rl"}});
                break;
        }
    }
    return a;
}

MoveScript script_from_json(const TwistSystem& sys, const json& j) {
    MoveScript s;
    for (const auto& mj : j) {
        std::string op = mj.at("op").get<std::string>();
        Move m;
        if (op == "elem" || op == "elem_inv") {
            m.kind = op == "elem" ? Move::Kind::Elem : Move::Kind::ElemInv;
            m.index = mj.at("i").get<int>();
        } else if (op == "conj") {
            m.kind = Move::Kind::Conj;
            auto [tw, sg] = twist_word_from_json(sys, mj.at("by"));
            m.conj_twists = std::move(tw);
            m.conj_signs = std::move(sg);
        } else if (op == "subst") {
            m.kind = Move::Kind::Subst;
            m.subst_start = mj.at("at").at(0).get<int>();
            m.subst_len = mj.at("at").at(1).get<int>();
            m.relation_id = mj.at("relation").get<std::string>();
            m.left_to_right = mj.at("direction").get<std::string>() == "lr";
        } else {
            throw model_error("unknown script op: " + op);
        }
        s.push_back(std::move(m));
    }
    return s;
}

MoveScript load_script_file(const TwistSystem& sys, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw model_error("cannot open " + path);
    json j;
    in >> j;
    return script_from_json(sys, j);
}

json report_to_json(const HomologyReport& r) {
    json j;
    j["euler"] = r.euler;
    json tors = json::array();
    for (const Int& t : r.h1.torsion) tors.push_back(t.convert_to<long long>());
    j["h1"] = {{"rank", r.h1.rank}, {"torsion", tors}};
    json tors2 = json::array();
    for (const Int& t : r.h2.torsion) tors2.push_back(t.convert_to<long long>());
    j["h2"] = {{"rank", r.h2.free_rank}, {"torsion", tors2}};
    if (r.h2.divisibility)
        j["fiber_divisibility"] = r.h2.divisibility->convert_to<long long>();
    else
        j["fiber_divisibility"] = "infinite";
    json fc = json::array();
    for (const Int& t : r.h2.fiber_class) fc.push_back(t.convert_to<long long>());
    j["fiber_class"] = fc;
    return j;
}

}  // namespace lpcalc
