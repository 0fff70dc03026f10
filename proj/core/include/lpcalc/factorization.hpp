#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lpcalc/twist_system.hpp"

namespace lpcalc {

// An ordered sequence of positive Dehn twists with a boundary multitwist as
// target. Twists are stored in application order c_1, ..., c_n; the product
// they stand for is t_{c_n} ... t_{c_1} (rightmost applied first).
struct Factorization {
    std::vector<CurveId> twists;
    std::vector<CurveId> target;
};

// Fast necessary check: the product of transvections must match the target's.
bool verify_h1(const TwistSystem& sys, const Factorization& f);

// Full groupoid equality of the two products (loops, arcs, boundary
// permutation). Runs the H_1 check first and short-circuits.
bool verify(const TwistSystem& sys, const Factorization& f);

// On failure, a human-readable description of the first discrepancy.
std::string verify_report(const TwistSystem& sys, const Factorization& f);

// t_{c_{i+1}} t_{c_i} -> t_{t_{c_{i+1}}(c_i)} t_{c_{i+1}}   (1-based i < n)
Factorization elementary_transformation(TwistSystem& sys, const Factorization& f, int i);
// t_{c_{i+1}} t_{c_i} -> t_{c_i} t_{t_{c_i}^{-1}(c_{i+1})}
Factorization inverse_elementary_transformation(TwistSystem& sys, const Factorization& f, int i);
// every curve replaced by its phi-image (target too, by identity of
// boundary curves under permutation)
Factorization simultaneous_conjugation(TwistSystem& sys, const Factorization& f,
                                       const MappingClass& phi);

// A verified two-sided relation available for substitution.
struct Relation {
    std::string id;
    std::vector<CurveId> lhs;  // application order
    std::vector<CurveId> rhs;
};

class RelationTable {
public:
    void add(TwistSystem& sys, Relation r);
    const Relation& get(const std::string& id) const;

private:
    std::vector<Relation> rels_;
};

// Replace f.twists[start .. start+len) (0-based) by the other side of the
// relation. direction "lr" expects the range to match lhs and inserts rhs.
Factorization substitute(const TwistSystem& sys, const Factorization& f, int start, int len,
                         const RelationTable& table, const std::string& relation_id,
                         bool left_to_right);

struct Move {
    enum class Kind { Elem, ElemInv, Conj, Subst } kind;
    int index = 0;                      // Elem/ElemInv (1-based)
    std::vector<CurveId> conj_twists;   // Conj: conjugator as twist word, application order
    std::vector<int> conj_signs;        // Conj: +1 / -1 per twist
    int subst_start = 0, subst_len = 0; // Subst
    std::string relation_id;
    bool left_to_right = true;
};

using MoveScript = std::vector<Move>;

Factorization apply_move(TwistSystem& sys, const Factorization& f, const Move& m,
                         const RelationTable* table);
Factorization apply_script(TwistSystem& sys, const Factorization& f, const MoveScript& s,
                           const RelationTable* table);

// Curve-wise equality of two factorizations (cyclic-word level), the
// endpoint notion used by scripts and the search.
bool curvewise_equal(const TwistSystem& sys, const Factorization& a, const Factorization& b);

// Bounded breadth-first search over elementary transformations in both
// directions, optionally interleaved with the supplied conjugators. A
// nullopt result is not a disproof of equivalence.
std::optional<MoveScript> hurwitz_search(TwistSystem& sys, const Factorization& f1,
                                         const Factorization& f2, int max_depth,
                                         const std::vector<MappingClass>& conjugators = {});

}  // namespace lpcalc
