#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

namespace lpcalc {

// A letter is a nonzero generator id: +k for the k-th generator, -k for its
// inverse. Ids are 1-based indices into a surface's generator table.
using Letter = std::int32_t;

// Freely reduced word in the generators. All mutating helpers keep the
// reduced invariant; raw vectors must go through reduce() first.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) { reduce(); }
    static Word one_letter(Letter l) { return Word(std::vector<Letter>{l}); }

    const std::vector<Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    bool operator==(const Word& o) const { return letters_ == o.letters_; }
    bool operator!=(const Word& o) const { return letters_ != o.letters_; }
    bool operator<(const Word& o) const { return letters_ < o.letters_; }

    Word inverse() const {
        std::vector<Letter> out;
        out.reserve(letters_.size());
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(-*it);
        Word w;
        w.letters_ = std::move(out);  // inverse of reduced word is reduced
        return w;
    }

    // this * o, freely reduced.
    Word operator*(const Word& o) const {
        Word w = *this;
        w.append(o);
        return w;
    }

    void append(const Word& o) {
        for (Letter l : o.letters_) push(l);
    }

    void push(Letter l) {
        if (!letters_.empty() && letters_.back() == -l)
            letters_.pop_back();
        else
            letters_.push_back(l);
    }

    // u * this * u^-1
    Word conjugated_by(const Word& u) const { return u * *this * u.inverse(); }

    Word power(int n) const {
        Word base = n >= 0 ? *this : inverse();
        Word out;
        for (int i = 0, k = std::abs(n); i < k; ++i) out.append(base);
        return out;
    }

    // Remove cancelling prefix/suffix pairs: the shortest w with
    // this = u * w * u^-1 for some u.
    Word cyclically_reduced() const {
        std::size_t lo = 0, hi = letters_.size();
        while (hi - lo >= 2 && letters_[lo] == -letters_[hi - 1]) {
            ++lo;
            --hi;
        }
        Word w;
        w.letters_.assign(letters_.begin() + lo, letters_.begin() + hi);
        return w;
    }

    // Canonical representative of the cyclic word up to rotation and formal
    // inversion: the lexicographically least rotation of the reduced word and
    // of its inverse. Used for curve identity.
    Word cyclic_canonical() const;

    bool cyclic_equal(const Word& o) const { return cyclic_canonical() == o.cyclic_canonical(); }

private:
    void reduce() {
        std::vector<Letter> out;
        out.reserve(letters_.size());
        for (Letter l : letters_) {
            if (l == 0) continue;
            if (!out.empty() && out.back() == -l)
                out.pop_back();
            else
                out.push_back(l);
        }
        letters_ = std::move(out);
    }

    std::vector<Letter> letters_;
};

inline Word Word::cyclic_canonical() const {
    Word core = cyclically_reduced();
    const auto pick_least = [](const std::vector<Letter>& v) {
        std::vector<Letter> best = v;
        std::vector<Letter> rot = v;
        for (std::size_t i = 1; i < v.size(); ++i) {
            rot.push_back(rot.front());
            rot.erase(rot.begin());
            if (rot < best) best = rot;
        }
        return best;
    };
    if (core.empty()) return core;
    std::vector<Letter> a = pick_least(core.letters());
    std::vector<Letter> b = pick_least(core.inverse().letters());
    Word w;
    w.letters_ = a < b ? std::move(a) : std::move(b);
    return w;
}

}  // namespace lpcalc
