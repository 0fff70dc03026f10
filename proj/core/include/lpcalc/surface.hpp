#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lpcalc/word.hpp"

namespace lpcalc {

struct model_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Combinatorial model of a compact genus-g surface with p boundary
// components and one marked point q_i per boundary. The fundamental group
// based at q_1 is free on the loop generators
//   a_1, b_1, ..., a_g, b_g, x_2, ..., x_p
// where x_i encircles boundary i. Reference arcs gamma_2, ..., gamma_p run
// from q_1 to q_i and are tracked separately (they never occur inside words).
//
// With extended = true an auxiliary marked disk D near boundary 1 is added
// (loop x_D, arc gamma_D); this is the surface the handle-decomposition
// homology pipeline works on. The boundary-1 word is fixed as
//   [a_1,b_1]...[a_g,b_g] x_2 ... x_p (x_D).
class Surface {
public:
    Surface(int genus, int boundary_count, bool extended)
        : g_(genus), p_(boundary_count), extended_(extended) {
        if (genus < 0) throw model_error("surface: negative genus");
        if (boundary_count < 1) throw model_error("surface: need at least one boundary component");
        for (int i = 1; i <= g_; ++i) {
            add_loop("a" + std::to_string(i));
            add_loop("b" + std::to_string(i));
        }
        for (int i = 2; i <= p_; ++i) add_loop("x" + std::to_string(i));
        if (extended_) add_loop("xD");
        for (int i = 2; i <= p_; ++i) arc_names_.push_back("g" + std::to_string(i));
        if (extended_) arc_names_.push_back("gD");
    }

    int genus() const { return g_; }
    int boundary_count() const { return p_; }
    bool extended() const { return extended_; }

    bool same_model(const Surface& o) const {
        return g_ == o.g_ && p_ == o.p_ && extended_ == o.extended_;
    }

    int num_loop_gens() const { return static_cast<int>(loop_names_.size()); }
    int num_arcs() const { return static_cast<int>(arc_names_.size()); }

    const std::string& loop_name(Letter id) const { return loop_names_.at(id - 1); }
    const std::string& arc_name(int idx) const { return arc_names_.at(idx); }

    Letter loop_id(const std::string& name) const {
        auto it = loop_index_.find(name);
        if (it == loop_index_.end()) throw model_error("unknown generator: " + name);
        return it->second;
    }
    bool has_loop(const std::string& name) const { return loop_index_.count(name) > 0; }

    Letter a(int i) const { return loop_id("a" + std::to_string(i)); }
    Letter b(int i) const { return loop_id("b" + std::to_string(i)); }
    Letter x(int i) const { return loop_id("x" + std::to_string(i)); }
    Letter xD() const { return loop_id("xD"); }

    // arc table index for the arc to boundary i (2 <= i <= p)
    int arc_index(int boundary) const {
        if (boundary < 2 || boundary > p_) throw model_error("arc_index: bad boundary");
        return boundary - 2;
    }
    int arcD_index() const {
        if (!extended_) throw model_error("arcD_index: surface not extended");
        return p_ - 1;
    }

    // [a_1,b_1]...[a_g,b_g] x_2...x_p (x_D): the boundary-1 word.
    Word boundary_word() const {
        Word w;
        for (int i = 1; i <= g_; ++i) {
            w.push(a(i));
            w.push(b(i));
            w.push(-a(i));
            w.push(-b(i));
        }
        for (int i = 2; i <= p_; ++i) w.push(x(i));
        if (extended_) w.push(xD());
        return w;
    }

    // ---- token form ("a1", "b1~", ...) ----

    std::string letter_token(Letter l) const {
        return l > 0 ? loop_name(l) : loop_name(-l) + "~";
    }
    Letter token_letter(const std::string& tok) const {
        if (!tok.empty() && tok.back() == '~') return -loop_id(tok.substr(0, tok.size() - 1));
        return loop_id(tok);
    }
    std::vector<std::string> word_tokens(const Word& w) const {
        std::vector<std::string> out;
        out.reserve(w.size());
        for (Letter l : w.letters()) out.push_back(letter_token(l));
        return out;
    }
    Word word_from_tokens(const std::vector<std::string>& toks) const {
        std::vector<Letter> ls;
        ls.reserve(toks.size());
        for (const auto& t : toks) ls.push_back(token_letter(t));
        return Word(std::move(ls));
    }

    // ---- absolute homology ----
    // The H_1 basis is the loop generator list itself (x_i carries the class
    // of the boundary-parallel curve delta_i). Intersection form:
    // <a_i, b_i> = +1, boundary classes in the radical.

    std::vector<std::int64_t> abelianize(const Word& w) const {
        std::vector<std::int64_t> v(num_loop_gens(), 0);
        for (Letter l : w.letters()) v[std::abs(l) - 1] += l > 0 ? 1 : -1;
        return v;
    }

    std::int64_t intersection(const std::vector<std::int64_t>& u,
                              const std::vector<std::int64_t>& v) const {
        std::int64_t s = 0;
        for (int i = 1; i <= g_; ++i) {
            int ai = a(i) - 1, bi = b(i) - 1;
            s += u[ai] * v[bi] - u[bi] * v[ai];
        }
        return s;
    }

private:
    void add_loop(const std::string& n) {
        loop_names_.push_back(n);
        loop_index_[n] = static_cast<Letter>(loop_names_.size());
    }

    int g_, p_;
    bool extended_;
    std::vector<std::string> loop_names_;
    std::vector<std::string> arc_names_;
    std::map<std::string, Letter> loop_index_;
};

}  // namespace lpcalc
