#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <rmbispec/macdonald.hpp>
#include <rmbispec/operators.hpp>

using namespace rmb;

static Rational rq(long a, long b) { return rational(a, b); }

static const Params<Rational> PR{rq(2, 7), rq(3, 5)};

TEST_CASE("horizontal strip predicate") {
    CHECK(is_horizontal_strip({3, 1}, {2, 1}));
    CHECK(is_horizontal_strip({3, 1}, {1, 0}));
    CHECK(!is_horizontal_strip({3, 1}, {3, 2}));
    CHECK(!is_horizontal_strip({2, 2}, {1, 0}));
    CHECK(is_horizontal_strip({2}, {}));
}

TEST_CASE("small Macdonald polynomials match hand expansions") {
    const Rational q = PR.q, t = PR.t;
    {
        auto p = macdonald_poly({1}, 2, PR);
        CHECK(p.size() == 2);
        CHECK(p.at({1, 0}) == Rational(1));
        CHECK(p.at({0, 1}) == Rational(1));
    }
    {
        // P_(2) = m_(2) + (1-t)(1+q)/(1-qt) m_(11)
        auto p = macdonald_poly({2}, 2, PR);
        Rational c = (Rational(1) - t) * (Rational(1) + q) / (Rational(1) - q * t);
        CHECK(p.at({2, 0}) == Rational(1));
        CHECK(p.at({0, 2}) == Rational(1));
        CHECK(p.at({1, 1}) == c);
    }
    {
        // P_(1,1) = e_2
        auto p = macdonald_poly({1, 1}, 2, PR);
        CHECK(p.size() == 1);
        CHECK(p.at({1, 1}) == Rational(1));
    }
    {
        // P_(la + (1,1)) = e_2 * P_la in two variables
        auto p21 = macdonald_poly({2, 1}, 2, PR);
        CHECK(p21.size() == 2);
        CHECK(p21.at({2, 1}) == Rational(1));
        CHECK(p21.at({1, 2}) == Rational(1));
    }
}

TEST_CASE("Macdonald polynomials are symmetric") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> cd(1, 20);
    for (const Partition& la : {Partition{2, 1, 0}, Partition{3, 1, 1}, Partition{2, 2, 0}}) {
        auto p = macdonald_poly(la, 3, PR);
        std::vector<Rational> x(3);
        for (auto& v : x) v = rational(cd(rng), cd(rng) + 21);
        std::vector<Rational> xs{x[1], x[2], x[0]};
        CHECK(poly_eval(p, x) == poly_eval(p, xs));
    }
}

TEST_CASE("column operators are diagonal on Macdonald polynomials") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<long> cd(1, 20);
    int n = 3;
    for (const Partition& la : {Partition{1, 0, 0}, Partition{2, 1, 0}, Partition{2, 2, 1}}) {
        auto p = macdonald_poly(la, n, PR);
        auto s = principal_point(la, n, PR);
        PointFn<Rational> f = [&](const std::vector<Rational>& y) { return poly_eval(p, y); };
        std::vector<Rational> x(n);
        for (auto& v : x) v = rational(cd(rng), cd(rng) + 21);
        for (int r = 0; r <= n; ++r) {
            Rational er(0);
            for (const auto& I : subsets(n, r)) {
                Rational pr_(1);
                for (int v : I) pr_ = pr_ * s[v - 1];
                er = er + pr_;
            }
            CHECK(d_r_point(r, x, PR, f) == er * f(x));
        }
    }
}

TEST_CASE("row operators are diagonal with the product-generating eigenvalues") {
    std::mt19937 rng(1209);
    std::uniform_int_distribution<long> cd(1, 20);
    int n = 2;
    for (const Partition& la : {Partition{1, 0}, Partition{2, 1}, Partition{3, 0}}) {
        auto p = macdonald_poly(la, n, PR);
        auto s = principal_point(la, n, PR);
        auto h = h_eigen_coeffs(s, PR, 3);
        PointFn<Rational> f = [&](const std::vector<Rational>& y) { return poly_eval(p, y); };
        std::vector<Rational> x(n);
        for (auto& v : x) v = rational(cd(rng), cd(rng) + 21);
        for (int l = 0; l <= 3; ++l) {
            CHECK(h_l_point(l, x, PR, f) == h[l] * f(x));
        }
    }
}

TEST_CASE("normalized polynomials satisfy the evaluation duality") {
    std::vector<Partition> las = {{0, 0}, {1, 0}, {2, 0}, {2, 1}, {3, 1}};
    int n = 2;
    for (const Partition& la : las)
        for (const Partition& mu : las) {
            auto pl = macdonald_poly(la, n, PR);
            auto pm = macdonald_poly(mu, n, PR);
            Rational lhs = poly_eval(pl, principal_point(mu, n, PR)) / principal_eval(la, n, PR);
            Rational rhs = poly_eval(pm, principal_point(la, n, PR)) / principal_eval(mu, n, PR);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("both principal-value formulas agree and match the polynomial") {
    for (int n : {2, 3}) {
        for (const Partition& la : partitions_up_to(n, 4)) {
            Rational fin = principal_eval(la, n, PR);
            Rational prod = principal_eval_products(la, n, PR);
            CHECK(fin == prod);
            auto p = macdonald_poly(la, n, PR);
            std::vector<Rational> td(n);
            for (int i = 0; i < n; ++i) td[i] = pow_int(PR.t, n - 1 - i);
            CHECK(poly_eval(p, td) == fin);
        }
    }
}

TEST_CASE("specialized eigenfunction series recovers the Macdonald polynomial") {
    std::mt19937 rng(60601);
    std::uniform_int_distribution<long> cd(1, 20);
    for (int n : {2, 3}) {
        for (const Partition& la : {Partition{2, 1, 0}, Partition{3, 1, 0}, Partition{2, 2, 1}}) {
            Partition lan(la.begin(), la.begin() + n);
            if (!is_partition(lan)) continue;
            auto s = principal_point(lan, n, PR);
            int dz = (n - 1) * weight(lan);
            Series<Rational> p = p_series_at_s(n, PR.q, PR.t, s, dz);
            auto P = macdonald_poly(lan, n, PR);
            std::vector<Rational> x(n);
            for (auto& v : x) v = rational(cd(rng), cd(rng) + 21);
            std::vector<Rational> zv(n - 1);
            for (int i = 0; i < n - 1; ++i) zv[i] = x[i + 1] / x[i];
            Rational xl(1);
            for (int i = 0; i < n; ++i) xl = xl * pow_int(x[i], part_at(lan, i));
            Rational lhs = xl * p.eval(zv, std::vector<Rational>{});
            CHECK(lhs == poly_eval(P, x));
        }
    }
}
