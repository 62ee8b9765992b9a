#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qhh/element.hpp"
#include "qhh/fields.hpp"
#include "qhh/quiver.hpp"

using namespace qhh;

namespace {

Quiver xu_quiver() {
    Quiver q;
    int v1 = q.add_vertex("1");
    q.add_vertex("2");
    q.add_arrow("a", v1, v1);
    q.add_arrow("b", v1, v1);
    q.add_arrow("c", v1, 1);
    return q;
}

template <class F>
Element<F> random_element(const F& K, const Quiver& q, std::mt19937& rng, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> coeff_dist(-4, 4);
    Element<F> e;
    for (int t = 0; t < 4; ++t) {
        int len = len_dist(rng);
        auto paths = paths_of_length(q, len);
        if (paths.empty()) continue;
        std::uniform_int_distribution<int> pick(0, static_cast<int>(paths.size()) - 1);
        e = Element<F>::add_term(K, e, paths[pick(rng)], K.from_int(coeff_dist(rng)));
    }
    return e;
}

} // namespace

TEST_CASE("path composition", "[quiver]") {
    Quiver q = xu_quiver();
    int a = *q.find_arrow("a"), b = *q.find_arrow("b"), c = *q.find_arrow("c");

    Path pa = make_path(q, {a}), pb = make_path(q, {b}), pc = make_path(q, {c});

    auto ab = compose(pa, pb);
    REQUIRE(ab.has_value());
    CHECK(ab->length() == 2);
    CHECK(ab->from == 0);
    CHECK(ab->to == 0);

    auto ea = compose(Path::trivial(0), pa);
    REQUIRE(ea.has_value());
    CHECK(*ea == pa);

    CHECK_FALSE(compose(pc, pa).has_value());
}

TEST_CASE("path enumeration", "[quiver]") {
    Quiver q = xu_quiver();
    auto p0 = paths_of_length(q, 0);
    REQUIRE(p0.size() == 2);
    CHECK(p0[0] == Path::trivial(0));
    CHECK(p0[1] == Path::trivial(1));

    auto p1 = paths_of_length(q, 1);
    REQUIRE(p1.size() == 3);
    CHECK(path_str(q, p1[0]) == "a");
    CHECK(path_str(q, p1[1]) == "b");
    CHECK(path_str(q, p1[2]) == "c");

    auto p2 = paths_of_length(q, 2);
    CHECK(p2.size() == 6); // aa ab ac ba bb bc

    // every length-(m+n) path factors uniquely at position m
    for (int m = 0; m <= 2; ++m) {
        int n = 2 - m;
        auto pm = paths_of_length(q, m);
        auto pn = paths_of_length(q, n);
        std::vector<Path> built;
        for (const auto& x : pm)
            for (const auto& y : pn) {
                auto z = compose(x, y);
                if (z) built.push_back(*z);
            }
        std::sort(built.begin(), built.end(), PathLess{});
        REQUIRE(built.size() == p2.size());
        for (std::size_t i = 0; i < built.size(); ++i) CHECK(built[i] == p2[i]);
    }
}

TEST_CASE("free multiplication", "[quiver]") {
    RationalField K;
    Quiver q = xu_quiver();
    int a = *q.find_arrow("a"), b = *q.find_arrow("b"), c = *q.find_arrow("c");
    auto E = [&](std::vector<int> ids) { return Element<RationalField>::path(K, make_path(q, ids)); };

    auto ab = Element<RationalField>::mul(K, E({a}), E({b}));
    CHECK(ab == E({a, b}));

    // (ab - ba) * a = aba - ba^2
    auto comm = Element<RationalField>::sub(K, E({a, b}), E({b, a}));
    auto prod = Element<RationalField>::mul(K, comm, E({a}));
    auto expect = Element<RationalField>::sub(K, E({a, b, a}), E({b, a, a}));
    CHECK(prod == expect);

    CHECK(Element<RationalField>::mul(K, E({c}), E({a})).is_zero());
}

TEST_CASE("free algebra properties", "[quiver]") {
    RationalField K;
    Quiver q = xu_quiver();
    std::mt19937 rng(12345);
    auto unit = Element<RationalField>::unit(K, q);

    for (int trial = 0; trial < 30; ++trial) {
        auto x = random_element(K, q, rng, 2);
        auto y = random_element(K, q, rng, 2);
        auto z = random_element(K, q, rng, 2);
        auto xy_z = Element<RationalField>::mul(K, Element<RationalField>::mul(K, x, y), z);
        auto x_yz = Element<RationalField>::mul(K, x, Element<RationalField>::mul(K, y, z));
        CHECK(xy_z == x_yz);
        CHECK(Element<RationalField>::mul(K, unit, x) == x);
        CHECK(Element<RationalField>::mul(K, x, unit) == x);
    }
}

TEST_CASE("prime field arithmetic", "[quiver]") {
    PrimeField K(7);
    CHECK(K.add(3, 5) == 1);
    CHECK(K.mul(3, 5) == 1);
    CHECK(K.inv(3) == 5);
    CHECK(K.neg(0) == 0);
    CHECK(K.from_int(-1) == 6);
    CHECK(K.from_fraction(1, 2) == 4);
    CHECK_THROWS(PrimeField(6));
    CHECK_THROWS(PrimeField(1u << 16));
}
