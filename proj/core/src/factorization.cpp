#include "lpcalc/factorization.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "lpcalc/intmat.hpp"

namespace lpcalc {

namespace {

IMat h1_product(const TwistSystem& sys, const std::vector<CurveId>& order) {
    int n = sys.surface().num_loop_gens();
    IMat p = IMat::identity(n);
    for (CurveId id : order) p = IMat::from_rows(sys.twist(id).h1_action()) * p;
    return p;
}

MappingClass conjugator_class(const TwistSystem& sys, const std::vector<CurveId>& twists,
                              const std::vector<int>& signs) {
    MappingClass p = MappingClass::identity(sys.surface());
    for (std::size_t k = 0; k < twists.size(); ++k) {
        MappingClass t = sys.twist(twists[k]);
        if (signs[k] < 0) t = t.inverted();
        p = t.compose(p);
    }
    return p;
}

}  // namespace

bool verify_h1(const TwistSystem& sys, const Factorization& f) {
    return h1_product(sys, f.twists) == h1_product(sys, f.target);
}

bool verify(const TwistSystem& sys, const Factorization& f) {
    if (!verify_h1(sys, f)) return false;
    return sys.product_of_twists(f.twists) == sys.product_of_twists(f.target);
}

std::string verify_report(const TwistSystem& sys, const Factorization& f) {
    IMat lh = h1_product(sys, f.twists), rh = h1_product(sys, f.target);
    const Surface& s = sys.surface();
    if (!(lh == rh)) {
        for (int j = 0; j < lh.cols(); ++j)
            for (int i = 0; i < lh.rows(); ++i)
                if (lh.at(i, j) != rh.at(i, j)) {
                    std::ostringstream os;
                    os << "H1 mismatch at image of " << s.loop_name(j + 1) << ", coefficient of "
                       << s.loop_name(i + 1) << ": " << lh.at(i, j) << " vs " << rh.at(i, j);
                    return os.str();
                }
    }
    MappingClass l = sys.product_of_twists(f.twists), r = sys.product_of_twists(f.target);
    for (Letter g = 1; g <= s.num_loop_gens(); ++g)
        if (l.loop_images()[g - 1] != r.loop_images()[g - 1])
            return "loop image mismatch at generator " + s.loop_name(g);
    for (int i = 0; i < s.num_arcs(); ++i)
        if (l.arc_offsets()[i] != r.arc_offsets()[i])
            return "arc offset mismatch at " + s.arc_name(i);
    if (l.boundary_perm() != r.boundary_perm()) return "boundary permutation mismatch";
    return "verified";
}

Factorization elementary_transformation(TwistSystem& sys, const Factorization& f, int i) {
    int n = static_cast<int>(f.twists.size());
    if (i < 1 || i >= n) throw model_error("elementary transformation: index out of range");
    Factorization g = f;
    CurveId lo = f.twists[i - 1], hi = f.twists[i];
    g.twists[i - 1] = hi;
    g.twists[i] = sys.derived_curve(lo, sys.twist(hi));
    return g;
}

Factorization inverse_elementary_transformation(TwistSystem& sys, const Factorization& f, int i) {
    int n = static_cast<int>(f.twists.size());
    if (i < 1 || i >= n) throw model_error("elementary transformation: index out of range");
    Factorization g = f;
    CurveId lo = f.twists[i - 1], hi = f.twists[i];
    g.twists[i - 1] = sys.derived_curve(hi, sys.twist(lo).inverted());
    g.twists[i] = lo;
    return g;
}

Factorization simultaneous_conjugation(TwistSystem& sys, const Factorization& f,
                                       const MappingClass& phi) {
    Factorization g;
    g.twists.reserve(f.twists.size());
    for (CurveId id : f.twists) g.twists.push_back(sys.derived_curve(id, phi));
    for (CurveId id : f.target) g.target.push_back(sys.derived_curve(id, phi));
    return g;
}

void RelationTable::add(TwistSystem& sys, Relation r) {
    Factorization check{r.lhs, r.rhs};
    if (!verify(sys, check))
        throw model_error("relation " + r.id + ": sides are not equal as mapping classes");
    rels_.push_back(std::move(r));
}

const Relation& RelationTable::get(const std::string& id) const {
    for (const auto& r : rels_)
        if (r.id == id) return r;
    throw model_error("unregistered relation: " + id);
}

Factorization substitute(const TwistSystem& sys, const Factorization& f, int start, int len,
                         const RelationTable& table, const std::string& relation_id,
                         bool left_to_right) {
    const Relation& rel = table.get(relation_id);
    const auto& from = left_to_right ? rel.lhs : rel.rhs;
    const auto& to = left_to_right ? rel.rhs : rel.lhs;
    if (start < 0 || len != static_cast<int>(from.size()) ||
        start + len > static_cast<int>(f.twists.size()))
        throw model_error("substitute: range does not fit relation " + relation_id);
    for (int k = 0; k < len; ++k)
        if (!sys.curve(f.twists[start + k]).word.cyclic_equal(sys.curve(from[k]).word))
            throw model_error("substitute: factor " + std::to_string(start + k) +
                              " does not match relation " + relation_id);
    Factorization g;
    g.target = f.target;
    g.twists.assign(f.twists.begin(), f.twists.begin() + start);
    g.twists.insert(g.twists.end(), to.begin(), to.end());
    g.twists.insert(g.twists.end(), f.twists.begin() + start + len, f.twists.end());
    return g;
}

Factorization apply_move(TwistSystem& sys, const Factorization& f, const Move& m,
                         const RelationTable* table) {
    switch (m.kind) {
        case Move::Kind::Elem:
            return elementary_transformation(sys, f, m.index);
        case Move::Kind::ElemInv:
            return inverse_elementary_transformation(sys, f, m.index);
        case Move::Kind::Conj:
            return simultaneous_conjugation(sys, f, conjugator_class(sys, m.conj_twists, m.conj_signs));
        case Move::Kind::Subst:
            if (!table) throw model_error("substitute move without a relation table");
            return substitute(sys, f, m.subst_start, m.subst_len, *table, m.relation_id,
                              m.left_to_right);
    }
    throw model_error("unknown move");
}

Factorization apply_script(TwistSystem& sys, const Factorization& f, const MoveScript& s,
                           const RelationTable* table) {
    Factorization cur = f;
    for (std::size_t k = 0; k < s.size(); ++k) {
        try {
            cur = apply_move(sys, cur, s[k], table);
        } catch (const model_error& e) {
            throw model_error("script step " + std::to_string(k + 1) + ": " + e.what());
        }
    }
    return cur;
}

bool curvewise_equal(const TwistSystem& sys, const Factorization& a, const Factorization& b) {
    if (a.twists.size() != b.twists.size() || a.target.size() != b.target.size()) return false;
    for (std::size_t k = 0; k < a.twists.size(); ++k)
        if (!sys.curve(a.twists[k]).word.cyclic_equal(sys.curve(b.twists[k]).word)) return false;
    for (std::size_t k = 0; k < a.target.size(); ++k)
        if (!sys.curve(a.target[k]).word.cyclic_equal(sys.curve(b.target[k]).word)) return false;
    return true;
}

std::optional<MoveScript> hurwitz_search(TwistSystem& sys, const Factorization& f1,
                                         const Factorization& f2, int max_depth,
                                         const std::vector<MappingClass>& conjugators) {
    if (f1.twists.size() != f2.twists.size()) return std::nullopt;

    auto key_of = [&](const Factorization& f) {
        std::vector<Word> k;
        k.reserve(f.twists.size());
        for (CurveId id : f.twists) k.push_back(sys.curve(id).word.cyclic_canonical());
        return k;
    };

    std::vector<Word> goal = key_of(f2);
    struct Node {
        Factorization fact;
        int parent;
        Move move;
        int depth;
    };
    std::vector<Node> nodes;
    std::map<std::vector<Word>, int> seen;

    auto reconstruct = [&](int idx) {
        MoveScript s;
        for (int i = idx; i > 0; i = nodes[i].parent) s.push_back(nodes[i].move);
        std::reverse(s.begin(), s.end());
        return s;
    };

    nodes.push_back({f1, -1, Move{}, 0});
    seen[key_of(f1)] = 0;
    if (key_of(f1) == goal) return MoveScript{};

    std::deque<int> queue{0};
    int n = static_cast<int>(f1.twists.size());
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        if (nodes[cur].depth >= max_depth) continue;
        std::vector<Move> moves;
        for (int i = 1; i < n; ++i) moves.push_back(Move{Move::Kind::Elem, i, {}, {}, 0, 0, "", true});
        for (int i = 1; i < n; ++i)
            moves.push_back(Move{Move::Kind::ElemInv, i, {}, {}, 0, 0, "", true});
        for (std::size_t c = 0; c < conjugators.size(); ++c) {
            Move m{Move::Kind::Conj, 0, {}, {}, 0, 0, "", true};
            m.index = static_cast<int>(c);  // reference into the caller's list
            moves.push_back(m);
        }
        for (const Move& m : moves) {
            Factorization next =
                m.kind == Move::Kind::Conj
                    ? simultaneous_conjugation(sys, nodes[cur].fact, conjugators[m.index])
                    : apply_move(sys, nodes[cur].fact, m, nullptr);
            auto k = key_of(next);
            if (seen.count(k)) continue;
            int idx = static_cast<int>(nodes.size());
            seen[k] = idx;
            nodes.push_back({next, cur, m, nodes[cur].depth + 1});
            if (k == goal) return reconstruct(idx);
            queue.push_back(idx);
        }
    }
    return std::nullopt;
}

}  // namespace lpcalc
