#include "catch_amalgamated.hpp"

#include "tubecat/derived.hpp"

using namespace tubecat;

namespace {
std::vector<StalkObject> stalks(int p, int tmax, int kmin, int kmax) {
    std::vector<StalkObject> out;
    for (int j = 0; j < p; ++j)
        for (int t = 1; t <= tmax; ++t)
            for (int k = kmin; k <= kmax; ++k) out.emplace_back(p, j, t, k);
    return out;
}
}  // namespace

TEST_CASE("graded hom picks hom or ext by degree") {
    for (int p = 2; p <= 5; ++p) CHECK(graded_hom(StalkObject(p, 1, 1, 0), StalkObject(p, 0, 1, 1), 0) == 1);
    StalkObject a(3, 2, 2, 0), b(3, 1, 1, 3);
    CHECK(graded_hom(a, b, -2) == ext1_dim(a.inner, b.inner));
    CHECK(graded_hom(a, b, -2) == 0);
    CHECK(graded_hom(a, b, -3) == hom_dim(a.inner, b.inner));
    CHECK(graded_hom(a, b, 0) == 0);
}

TEST_CASE("identity endomorphism for short stalks") {
    for (int p = 1; p <= 5; ++p)
        for (const auto& x : stalks(p, p, -2, 2)) CHECK(graded_hom(x, x, 0) == 1);
}

TEST_CASE("shift is invertible and preserves graded hom") {
    for (int p = 1; p <= 4; ++p) {
        auto xs = stalks(p, 2 * p, -1, 1);
        for (const auto& x : xs) {
            CHECK(shift(shift(x, 1), -1) == x);
            for (const auto& y : xs)
                for (int n = -3; n <= 3; ++n)
                    for (int m : {-2, 1, 3}) CHECK(graded_hom(shift(x, m), shift(y, m), n) == graded_hom(x, y, n));
        }
    }
}

TEST_CASE("tau preserves graded hom") {
    for (int p = 1; p <= 4; ++p) {
        auto xs = stalks(p, 2 * p + 1, -1, 1);
        for (const auto& x : xs)
            for (const auto& y : xs)
                for (int n = -3; n <= 3; ++n)
                    CHECK(graded_hom(tau_derived(x, 1), tau_derived(y, 1), n) == graded_hom(x, y, n));
    }
}

TEST_CASE("no negative degrees within one copy and at most two degrees") {
    for (int p = 1; p <= 4; ++p) {
        auto xs = stalks(p, 2 * p, -1, 1);
        for (const auto& x : xs)
            for (const auto& y : xs) {
                auto d = hom_degrees(x, y);
                CHECK(d.size() <= 2);
                if (d.size() == 2) CHECK(std::next(d.begin())->first == d.begin()->first + 1);
                if (x.k == y.k)
                    for (int n = -4; n < 0; ++n) CHECK(graded_hom(x, y, n) == 0);
                for (int n = -4; n <= 4; ++n) {
                    auto it = d.find(n);
                    CHECK(graded_hom(x, y, n) == (it == d.end() ? 0 : it->second));
                }
            }
    }
}

TEST_CASE("euler form examples") {
    for (int p = 2; p <= 5; ++p)
        for (int j = 0; j < p; ++j) {
            auto ej = k0_class(TubeObject::simple(p, j));
            CHECK(euler_form(ej, ej) == 1);
            CHECK(euler_form(ej, k0_class(TubeObject::simple(p, j - 1))) == -1);
        }
    for (int p = 1; p <= 5; ++p) {
        auto c = k0_class(TubeObject(p, 0, p));
        CHECK(euler_form(c, c) == 0);
    }
    CHECK_THROWS_AS(euler_form(K0Class{{1, 0}}, K0Class{{1}}), InvalidInput);
}

TEST_CASE("euler form equals hom minus ext") {
    for (int p = 1; p <= 5; ++p)
        for (int t1 = 1; t1 <= 10; ++t1)
            for (int t2 = 1; t2 <= 10; ++t2)
                for (int j1 = 0; j1 < p; ++j1)
                    for (int j2 = 0; j2 < p; ++j2) {
                        TubeObject x(p, j1, t1), y(p, j2, t2);
                        CHECK(hom_dim(x, y) - ext1_dim(x, y) == euler_form(k0_class(x), k0_class(y)));
                    }
}

TEST_CASE("k0 class carries the shift sign") {
    StalkObject x(3, 2, 2, 1);
    CHECK(k0_class(x).v == std::vector<long long>{0, -1, -1});
    CHECK(k0_class(shift(x, 1)).v == std::vector<long long>{0, 1, 1});
    CHECK((k0_class(x) + k0_class(shift(x, 1))).v == std::vector<long long>{0, 0, 0});
}

TEST_CASE("stalk labels") {
    CHECK(to_string(StalkObject(3, 2, 3, 0)) == "S2^(3)");
    CHECK(to_string(StalkObject(3, 1, 1, -1)) == "S1[-1]");
}
