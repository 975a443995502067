#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nashcurve/bipoly.hpp"
#include "nashcurve/linsolve.hpp"
#include "nashcurve/rational.hpp"
#include "paper_data.hpp"

using namespace nashcurve;

TEST_CASE("rational canonical form") {
    Rational a(6, 8);
    CHECK(rational_to_string(a) == "3/4");
    CHECK(rational_canonical(a));
    CHECK(rational_canonical(a - a));
    CHECK(parse_rational("-25/7") == Rational(-25, 7));
    CHECK(parse_rational("3") == Rational(3));
    CHECK_THROWS_AS(parse_rational("x"), DomainError);

    CHECK(make_rational(3, -4) == Rational(-3, 4));
    CHECK(make_rational(-6, -8) == Rational(3, 4));
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-40, 40);
    for (int t = 0; t < 500; ++t) {
        int den1 = d(rng), den2 = d(rng);
        if (den1 == 0 || den2 == 0) continue;
        Rational p = make_rational(d(rng), den1), q = make_rational(d(rng), den2);
        CHECK(rational_canonical(p + q));
        CHECK(rational_canonical(p * q));
        CHECK(rational_canonical(p - q));
        if (q != 0) CHECK(rational_canonical(p / q));
    }
}

TEST_CASE("poly_add examples") {
    BiPoly x5 = BiPoly::monomial(5, 0, 1);
    BiPoly y5 = BiPoly::monomial(0, 5, 1);
    CHECK(poly_add(x5 + y5, Rational(-1) * y5) == x5);
    CHECK(poly_add(x5, BiPoly()) == x5);

    // h_4 + (14/5) y^2 h_3 over <5,7>
    BiPoly combo = testdata::h57(4) + Rational(14, 5) * (BiPoly::monomial(0, 2, 1) * testdata::h57(3));
    CHECK(combo == testdata::i3_combination());
    CHECK(render(combo) == "x^12 + 6*x^7*y^5 - 6*x^5*y^7 - y^12");
}

TEST_CASE("poly_mul examples") {
    BiPoly h1 = testdata::h57(1);
    BiPoly sq = poly_mul(h1, h1);
    BiPoly expected;
    expected.add_term(10, 0, 1);
    expected.add_term(5, 5, 2);
    expected.add_term(0, 10, 1);
    CHECK(sq == expected);
    CHECK(poly_mul(h1, BiPoly::constant(1)) == h1);

    BiPoly prod = poly_mul(testdata::h57(2), testdata::h57(3));
    CHECK(prod.is_homogeneous());
    CHECK(prod.homogeneous_degree() == 17);
    CHECK(divisibility_order(prod) == 5);
}

TEST_CASE("y_slice examples") {
    CHECK(y_slice(testdata::h57(2), 0) == UniPoly{{7, Rational(1)}});
    CHECK(y_slice(testdata::h57(2), 1).empty());
    CHECK(y_slice(testdata::h57(6), 1) == UniPoly{{14, Rational(125, 49)}});
}

TEST_CASE("divisibility_order examples and errors") {
    CHECK(divisibility_order(testdata::h57(1)) == 1);

    BiPoly xy = BiPoly::monomial(1, 0, 1) + BiPoly::monomial(0, 1, 1);
    CHECK(divisibility_order(xy * xy * xy) == 3);

    CHECK(divisibility_order(testdata::h25_second_generator()) == 2);

    CHECK_THROWS_AS(divisibility_order(BiPoly()), ZeroPolynomial);
    BiPoly mixed = BiPoly::monomial(1, 0, 1) + BiPoly::monomial(0, 2, 1);
    CHECK_THROWS_AS(divisibility_order(mixed), NonHomogeneous);
}

TEST_CASE("divisibility order is additive on products") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-5, 5), ord(0, 3), deg(0, 4);
    for (int t = 0; t < 60; ++t) {
        BiPoly xy = BiPoly::monomial(1, 0, 1) + BiPoly::monomial(0, 1, 1);
        auto random_homogeneous = [&]() {
            const long long d = deg(rng);
            BiPoly base;
            for (long long a = 0; a <= d; ++a) base.add_term(a, d - a, coef(rng));
            if (base.is_zero()) base.add_term(0, d, 1);
            BiPoly out = base;
            const int k = ord(rng);
            for (int i = 0; i < k; ++i) out = out * xy;
            return out;
        };
        BiPoly p = random_homogeneous(), q = random_homogeneous();
        CHECK(divisibility_order(p * q) == divisibility_order(p) + divisibility_order(q));
    }
}

namespace {

// naive flat-list polynomial arithmetic used as the oracle
using FlatPoly = std::vector<std::tuple<long long, long long, Rational>>;

BiPoly flat_to_bipoly(const FlatPoly& f) {
    BiPoly p;
    for (const auto& [a, b, c] : f) p.add_term(a, b, c);
    return p;
}

FlatPoly flat_add(const FlatPoly& p, const FlatPoly& q) {
    FlatPoly r = p;
    r.insert(r.end(), q.begin(), q.end());
    return r;
}

FlatPoly flat_mul(const FlatPoly& p, const FlatPoly& q) {
    FlatPoly r;
    for (const auto& [a1, b1, c1] : p)
        for (const auto& [a2, b2, c2] : q) r.emplace_back(a1 + a2, b1 + b2, c1 * c2);
    return r;
}

} // namespace

TEST_CASE("poly arithmetic agrees with the naive oracle") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> e(0, 6), c(-9, 9);
    for (int t = 0; t < 100; ++t) {
        FlatPoly p, q;
        for (int i = 0; i < 10; ++i) {
            p.emplace_back(e(rng), e(rng), c(rng));
            q.emplace_back(e(rng), e(rng), c(rng));
        }
        BiPoly bp = flat_to_bipoly(p), bq = flat_to_bipoly(q);
        CHECK(poly_add(bp, bq) == flat_to_bipoly(flat_add(p, q)));
        CHECK(poly_mul(bp, bq) == flat_to_bipoly(flat_mul(p, q)));
        CHECK(poly_mul(bp, bq) == poly_mul(bq, bp));
    }
}

TEST_CASE("solve_unique examples") {
    // 1x2 system [1, 1], normalize index 1
    auto s1 = solve_unique({{Rational(1), Rational(1)}}, 1);
    CHECK(s1 == std::vector<Rational>{Rational(-1), Rational(1)});

    // values and first derivatives of t^0, t^5, t^7 at t = -1
    std::vector<std::vector<Rational>> h2rows = {
        {Rational(1), Rational(-1), Rational(-1)},
        {Rational(0), Rational(5), Rational(7)},
    };
    auto s2 = solve_unique(h2rows, 2);
    CHECK(s2 == std::vector<Rational>{Rational(-2, 5), Rational(-7, 5), Rational(1)});

    // the 3x4 system for h_3 of <2,5>: derivatives of t^0,t^2,t^4,t^5 at -1
    std::vector<std::vector<Rational>> h3rows;
    const std::vector<long long> exps{0, 2, 4, 5};
    for (long long j = 0; j < 3; ++j) {
        std::vector<Rational> row;
        for (long long s : exps) {
            Int f = falling_factorial(s, j);
            if ((s - j) % 2 != 0) f = -f;
            row.emplace_back(f);
        }
        h3rows.push_back(row);
    }
    auto s3 = solve_unique(h3rows, 3);
    CHECK(s3 == std::vector<Rational>{Rational(3, 8), Rational(-5, 4), Rational(15, 8), Rational(1)});
}

TEST_CASE("solve_unique rejects singular systems") {
    std::vector<std::vector<Rational>> rows = {
        {Rational(1), Rational(1), Rational(0)},
        {Rational(2), Rational(2), Rational(0)},
    };
    CHECK_THROWS_AS(solve_unique(rows, 2), SingularSystem);
}

TEST_CASE("solve_unique satisfies every row exactly") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-10, 10);
    int solved = 0;
    for (int t = 0; t < 120 && solved < 60; ++t) {
        const std::size_t m = 1 + t % 5;
        std::vector<std::vector<Rational>> rows(m, std::vector<Rational>(m + 1));
        for (auto& row : rows)
            for (auto& v : row) v = c(rng);
        std::vector<Rational> sol;
        try {
            sol = solve_unique(rows, m);
        } catch (const SingularSystem&) {
            continue;
        }
        ++solved;
        for (const auto& row : rows) {
            Rational acc = 0;
            for (std::size_t i = 0; i <= m; ++i) acc += row[i] * sol[i];
            REQUIRE(acc == 0);
        }
    }
    CHECK(solved > 20);
}
