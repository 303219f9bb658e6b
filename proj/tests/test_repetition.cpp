#include "dioph/repetition.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <random>

using namespace dioph;
using dioph::testing::binary;
using dioph::testing::letters;

namespace {

RepetitionWitness as_witness(const oracle::Triple& t) { return {t.u, t.v, t.m}; }

}  // namespace

TEST_SUITE("repetition") {

TEST_CASE("dio examples") {
    const auto zeros = dio_estimate(Word::from_digits("0000000000", 2), 1);
    CHECK(zeros.global_max == RepetitionWitness{0, 1, 10});
    CHECK(zeros.global_max.score() == 10);

    const auto short_word = dio_estimate(Word::from_digits("01", 2), 1);
    CHECK(short_word.global_max == RepetitionWitness{0, 2, 2});
    CHECK(short_word.global_max.score() == 1);

    CHECK_THROWS_WITH_AS(dio_estimate(Word::from_digits("0", 2), 1), "degenerate prefix", std::invalid_argument);
    CHECK_THROWS_WITH_AS(ice_estimate(Word({}, 2), 1), "degenerate prefix", std::invalid_argument);
    CHECK_THROWS_AS(dio_estimate(Word::from_digits("0101", 2), 3), std::invalid_argument);
    CHECK_THROWS_AS(dio_estimate(Word::from_digits("0101", 2), 0), std::invalid_argument);
}

TEST_CASE("ice examples") {
    const auto alt = ice_estimate(Word::from_digits("010101", 2), 1);
    CHECK(alt.global_max == RepetitionWitness{0, 2, 6});
    CHECK(alt.global_max.score() == 3);

    const Word fib13 = Word::from_digits("0100101001001", 2);
    const auto fib = ice_estimate(fib13, 1);
    CHECK(fib.global_max == RepetitionWitness{0, 5, 11});
    CHECK(fib.global_max.score() == Rational(11, 5));
    CHECK(verify_witness(fib13, fib.global_max));
    CHECK(fib.global_max == as_witness(oracle::best_repetition(letters(fib13), 1, true)));
}

TEST_CASE("verify_witness") {
    CHECK(verify_witness(Word::from_digits("0000", 2), {0, 1, 4}));
    CHECK_FALSE(verify_witness(Word::from_digits("0100", 2), {0, 1, 4}));
    CHECK_FALSE(verify_witness(Word::from_digits("0000", 2), {2, 2, 3}));
    CHECK_THROWS_WITH_AS(verify_witness(Word::from_digits("0000", 2), {0, 1, 5}), "witness exceeds prefix",
                         std::invalid_argument);
}

TEST_CASE("tie-break ordering") {
    CHECK(witness_before({0, 2, 6}, {0, 1, 2}));
    CHECK(witness_before({0, 2, 6}, {0, 1, 3}));  // equal score, longer repetition
    CHECK(witness_before({0, 2, 6}, {1, 1, 6}));  // equal score and span, smaller u
    CHECK_FALSE(witness_before({1, 1, 6}, {1, 1, 6}));
}

TEST_CASE("fibonacci prefixes match the oracle") {
    const auto fib = oracle::fibonacci_word(500);
    const auto est = dio_estimate(binary(fib), 25);
    CHECK(est.global_max == RepetitionWitness{0, 144, 375});
    CHECK(est.global_max == as_witness(oracle::best_repetition(fib)));
    CHECK(est.persistent_max == as_witness(oracle::best_repetition(fib, 25)));
    CHECK(ice_estimate(binary(fib), 25).global_max == as_witness(oracle::best_repetition(fib, 1, true)));
}

TEST_CASE("scans agree with the oracle on random words") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 400; ++trial) {
        const Letter b = 2 + static_cast<Letter>(trial % 3);
        const std::size_t n = 2 + static_cast<std::size_t>(trial % 60);
        const Word w = dioph::testing::random_word(rng, n, b);
        const std::size_t t = 1 + static_cast<std::size_t>(trial) % (n / 2);
        const auto a = letters(w);
        const auto dio = dio_estimate(w, t);
        const auto ice = ice_estimate(w, t);
        CHECK(dio.global_max == as_witness(oracle::best_repetition(a)));
        CHECK(dio.persistent_max == as_witness(oracle::best_repetition(a, t)));
        CHECK(ice.global_max == as_witness(oracle::best_repetition(a, 1, true)));
        CHECK(ice.persistent_max == as_witness(oracle::best_repetition(a, t, true)));
    }
}

TEST_CASE("estimate invariants") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const Word w = dioph::testing::random_word(rng, 200, 2);
        const auto dio = dio_estimate(w, 10);
        const auto ice = ice_estimate(w, 10);
        CHECK(ice.global_max.score() <= dio.global_max.score());
        CHECK(dio.persistent_max.score() <= dio.global_max.score());
        CHECK(dio.persistent_max.span() >= 10);
        CHECK(verify_witness(w, dio.global_max));
        CHECK(verify_witness(w, dio.persistent_max));
        CHECK(verify_witness(w, ice.global_max));
        CHECK(dio.global_max.m >= dio.global_max.span());
        // Longer prefixes can only extend witnesses.
        CHECK(dio_estimate(w.prefix(100), 5).global_max.score() <= dio.global_max.score());
    }
}

TEST_CASE("purely periodic words score N / |V|") {
    const std::vector<Letter> period{0, 1, 1, 0, 1, 0, 0};
    std::vector<Letter> a;
    while (a.size() < 700) a.insert(a.end(), period.begin(), period.end());
    const Word w(a, 2);
    CHECK(dio_estimate(w, 1).global_max == RepetitionWitness{0, 7, 700});
    CHECK(ice_estimate(w, 1).global_max.score() == 100);
}

TEST_CASE("threads give identical results") {
    const Word w = binary(oracle::fibonacci_word(3000));
    const auto one = dio_estimate(w, 150);
    for (unsigned threads : {2U, 3U, 8U}) {
        const auto many = dio_estimate(w, 150, ScanOptions{threads});
        CHECK(many.global_max == one.global_max);
        CHECK(many.persistent_max == one.persistent_max);
    }
}

TEST_CASE("witness json") {
    CHECK(RepetitionWitness{1, 3, 10}.to_json() == R"({"u":1,"v":3,"m":10,"score_num":"5","score_den":"2"})");
    CHECK(default_threshold(10000) == 500);
    CHECK(default_threshold(10) == 1);
}

}
