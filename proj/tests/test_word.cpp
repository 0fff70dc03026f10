#include <doctest.h>

#include "lpcalc/word.hpp"

using namespace lpcalc;

TEST_CASE("free reduction") {
    Word w(std::vector<Letter>{1, 2, -2, -1, 3});
    CHECK(w.letters() == std::vector<Letter>{3});
    CHECK(Word(std::vector<Letter>{1, -1}).empty());
}

TEST_CASE("append cancels across the boundary") {
    Word a(std::vector<Letter>{1, 2});
    Word b(std::vector<Letter>{-2, -1, 4});
    CHECK((a * b).letters() == std::vector<Letter>{4});
}

TEST_CASE("inverse and conjugation") {
    Word w(std::vector<Letter>{1, 2, -3});
    CHECK(w.inverse().letters() == std::vector<Letter>{3, -2, -1});
    CHECK((w * w.inverse()).empty());
    Word u(std::vector<Letter>{5});
    Word c = w.conjugated_by(u);
    CHECK(c.letters() == std::vector<Letter>{5, 1, 2, -3, -5});
    CHECK(c.cyclically_reduced() == w);
}

TEST_CASE("powers") {
    Word w(std::vector<Letter>{1, 2});
    CHECK(w.power(3).size() == 6);
    CHECK(w.power(-1) == w.inverse());
    CHECK(w.power(0).empty());
}

TEST_CASE("cyclic equality up to rotation and inversion") {
    Word w(std::vector<Letter>{1, 2, 3});
    Word rot(std::vector<Letter>{2, 3, 1});
    Word inv = w.inverse();
    Word other(std::vector<Letter>{1, 3, 2});
    CHECK(w.cyclic_equal(rot));
    CHECK(w.cyclic_equal(inv));
    CHECK(w.cyclic_equal(w.conjugated_by(Word(std::vector<Letter>{4, -2}))));
    CHECK_FALSE(w.cyclic_equal(other));
}
