#include "dioph/contfrac.hpp"

#include <doctest.h>

#include <random>

using namespace dioph;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) {
    std::vector<BigInt> out;
    for (long x : xs) out.emplace_back(x);
    return out;
}

CFQuotients periodic(std::initializer_list<long> head, std::initializer_list<long> period) {
    CFQuotients cf;
    cf.head = big(head);
    cf.period = big(period);
    return cf;
}

}  // namespace

TEST_SUITE("contfrac") {

TEST_CASE("rational expansions") {
    const auto cf = cf_of_rational(Rational(22, 7));
    CHECK(cf.quotients == big({3, 7}));
    CHECK(cf.terminated);
    CHECK(cf.convergents.back().p == 22);
    CHECK(cf.convergents.back().q == 7);

    CHECK(cf_of_rational(Rational(5)).quotients == big({5}));
    CHECK(cf_of_rational(Rational(1, 2)).quotients == big({0, 2}));
    CHECK(cf_of_rational(Rational(-7, 3)).quotients == big({-3, 1, 2}));

    const auto via_enclosure = cf_from_enclosure(RealSpec::rational(22, 7), 10);
    CHECK(via_enclosure.quotients == big({3, 7}));
    CHECK(via_enclosure.terminated);
    CHECK_FALSE(via_enclosure.partial());
}

TEST_CASE("rational round trip") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> num(-100000, 100000), den(1, 100000);
    for (int trial = 0; trial < 500; ++trial) {
        Rational x(num(rng), den(rng));
        x.canonicalize();
        const auto cf = cf_of_rational(x);
        // Rebuild from the quotients, innermost first.
        Rational back(cf.quotients.back());
        for (std::size_t k = cf.quotients.size() - 1; k-- > 0;) back = Rational(cf.quotients[k]) + 1 / back;
        CHECK(back == x);
        if (cf.quotients.size() > 1) CHECK(cf.quotients.back() >= 2);
        CHECK(cf_from_enclosure(RealSpec::rational(x.get_num(), x.get_den()), 100).quotients == cf.quotients);
    }
}

TEST_CASE("euler expansion of e") {
    const auto cf = cf_from_enclosure(RealSpec::e(), 30);
    REQUIRE(cf.certified() == 30);
    CHECK_FALSE(cf.partial());
    CHECK(cf.quotients[0] == 2);
    for (std::size_t k = 1; k < 30; ++k) {
        const BigInt expected = k % 3 == 2 ? BigInt(2 * (k + 1) / 3) : BigInt(1);
        CHECK(cf.quotients[k] == expected);
    }
    CHECK(cf.quotients_json().substr(0, 21) == R"(["2","1","2","1","1",)");
}

TEST_CASE("quadratic surds are periodic") {
    CHECK(cf_from_enclosure(RealSpec::surd(0, 1, 2), 20).quotients ==
          big({1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}));
    const auto golden = cf_from_enclosure(RealSpec::surd(1, 2, 5), 40);
    for (const auto& a : golden.quotients) CHECK(a == 1);
    CHECK(cf_from_enclosure(RealSpec::surd(0, 1, 7), 9).quotients == big({2, 1, 1, 1, 4, 1, 1, 1, 4}));
}

TEST_CASE("shallit number quotients") {
    const auto cf = cf_from_enclosure(RealSpec::shallit(), 15);
    CHECK(cf.quotients == big({0, 1, 4, 2, 4, 4, 6, 4, 2, 4, 6, 2, 4, 6, 4}));
    CHECK(bounded_pq_check(cf, 1, 14) == 6);
    CHECK_THROWS_AS(bounded_pq_check(cf, 10, 6), std::invalid_argument);
}

TEST_CASE("convergent sandwich and approximation quality") {
    for (const RealSpec& s : {RealSpec::e(), RealSpec::shallit(), RealSpec::surd(-1, 1, 3)}) {
        const auto cf = cf_from_enclosure(s, 40);
        REQUIRE(cf.certified() == 40);
        const auto x = enclosure(s, 2000);
        for (std::size_t n = 0; n + 1 < cf.certified(); ++n) {
            const auto& c = cf.convergents[n];
            const Rational pq = make_rational(c.p, c.q);
            const Rational far = std::max(abs(x.lo - pq), abs(x.hi - pq));
            CHECK(far < make_rational(1, c.q * cf.convergents[n + 1].q));
            // Convergents alternate around the value.
            if (n % 2 == 0) CHECK(pq < x.lo);
            else CHECK(pq > x.hi);
            if (n >= 1) CHECK(c.p * cf.convergents[n - 1].q - c.q * cf.convergents[n - 1].p == (n % 2 ? 1 : -1));
        }
    }
}

TEST_CASE("budget exhaustion gives a partial expansion") {
    const auto cf = cf_from_enclosure(RealSpec::e(), 500, Budget{256});
    CHECK(cf.partial());
    CHECK(cf.certified() > 20);
    CHECK(cf.certified() < 500);

    CFQuotients open;
    open.head = big({0, 3, 1, 4});
    open.open_tail = true;
    const auto head_only = cf_from_enclosure(RealSpec::from_cf(open), 10);
    CHECK(head_only.partial());
    CHECK(head_only.certified() <= 4);
}

TEST_CASE("mu estimates") {
    const auto golden = mu_estimate(cf_from_enclosure(RealSpec::surd(1, 2, 5), 40));
    for (double v : golden.values) CHECK(v == 2.0);
    CHECK(golden.n_min == 5);
    CHECK(golden.n_last() == 38);

    const auto e = mu_estimate(cf_from_enclosure(RealSpec::e(), 62), 30);
    CHECK(e.values.size() == 31);
    for (double v : e.values) {
        CHECK(v >= 2.0);
        CHECK(v <= 2.2);
    }
    CHECK(e.tail_max <= e.global_max);

    // An irrational with a huge quotient shows up as a spike.
    CFQuotients spiky = periodic({0, 1, 1, 1, 1, 1, 1, 1, 1, 1000000}, {1});
    const auto spike = mu_estimate(cf_from_enclosure(RealSpec::from_cf(spiky), 30));
    CHECK(spike.global_max > 3.0);

    CHECK_THROWS_AS(mu_estimate(cf_of_rational(Rational(22, 7))), std::invalid_argument);
    CHECK_THROWS_AS(mu_estimate(cf_from_enclosure(RealSpec::e(), 10), 1), std::invalid_argument);
}

TEST_CASE("mobius images keep the mu estimate") {
    const auto inner = cf_from_enclosure(RealSpec::e(), 70);
    const auto image = cf_from_enclosure(RealSpec::mobius(2, 1, 1, 1, RealSpec::e()), 70);
    REQUIRE(image.certified() == 70);
    const auto a = mu_estimate(inner, 30);
    const auto b = mu_estimate(image, 30);
    CHECK(std::abs(a.tail_max - b.tail_max) < 0.05);
}

TEST_CASE("json forms") {
    const auto cf = cf_of_rational(Rational(22, 7));
    CHECK(cf.quotients_json() == R"(["3","7"])");
    CHECK(cf.convergents_json() == R"([["3","1"],["22","7"]])");
}

}
