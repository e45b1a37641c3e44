#include <gtest/gtest.h>

#include "endsym/continuants.hpp"
#include "oracles.hpp"

using namespace endsym;

namespace {

QuotientSequence seq(std::initializer_list<long long> v) { return QuotientSequence(v); }

}  // namespace

TEST(Continuant, Examples) {
    EXPECT_EQ(continuant(seq({1, 2, 3})), 10);
    EXPECT_EQ(continuant(seq({2, 1, 2, 1})), 11);
    EXPECT_EQ(continuant(seq({3, 1, 1, 3})), 25);
    EXPECT_EQ(continuant(seq({})), 1);
}

TEST(Continuant, Sentinels) {
    auto q = seq({4, 2, 7});
    for (Index i = 0; i <= 3; ++i) {
        EXPECT_EQ(continuant_range(q, i, i - 1), 1);
        EXPECT_EQ(continuant_range(q, i, i - 2), 0);
    }
    EXPECT_EQ(continuant_range(q, 1, 2), 15);
    EXPECT_EQ(continuant_range(q, 2, 2), 7);
}

TEST(Continuant, RangeErrors) {
    auto q = seq({4, 2, 7});
    EXPECT_THROW(continuant_range(q, -1, 1), DomainError);
    EXPECT_THROW(continuant_range(q, 2, -1), DomainError);
    EXPECT_THROW(continuant_range(q, 0, 3), DomainError);
    EXPECT_THROW(continuant_range(q, 5, 3), DomainError);
}

TEST(Anticontinuant, Examples) {
    EXPECT_EQ(anticontinuant(seq({5, 1})), 4);
    EXPECT_EQ(anticontinuant(seq({3, 1, 1, 3})), 0);
    EXPECT_EQ(anticontinuant(seq({1, 1, 1, 2, 2, 1})), 2);
    EXPECT_EQ(anticontinuant(seq({2, 1, 2, 1})), 4);
    EXPECT_EQ(anticontinuant(seq({1, 1, 2, 1, 2, 1})), 4);
    EXPECT_EQ(anticontinuant(seq({7})), 0);
    EXPECT_EQ(anticontinuant(seq({})), 0);
}

TEST(Anticontinuant, RangeErrorsAndEmpty) {
    auto q = seq({5, 1, 3});
    EXPECT_EQ(anticontinuant_range(q, 1, 0), 0);
    EXPECT_EQ(anticontinuant_range_by_recursion(q, 2, 1), 0);
    EXPECT_THROW(anticontinuant_range(q, 0, 3), DomainError);
    EXPECT_THROW(anticontinuant_range(q, 2, 0), DomainError);
    EXPECT_THROW(anticontinuant_range_by_recursion(q, -1, 1), DomainError);
}

TEST(Anticontinuant, LowOrderFormulas) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> d(1, 50);
    for (int t = 0; t < 500; ++t) {
        long long a = d(rng), b = d(rng), c = d(rng);
        EXPECT_EQ(anticontinuant(seq({a, b})), a - b);
        EXPECT_EQ(anticontinuant(seq({a, b, c})), a * b - b * c);
    }
}

TEST(Euler, Examples) {
    EXPECT_EQ(euler_residual(seq({3, 1, 1, 3}), 0, 1, 2, 3), 0);
    EXPECT_EQ(euler_residual(seq({2, 1, 2, 1}), 0, 1, 1, 3), 0);
    auto q = seq({4, 1, 6, 2, 3});
    for (Index k = 0; k < 5; ++k)
        for (Index m = k; m < 5; ++m) EXPECT_EQ(euler_residual(q, k, k, m, m), 0);
}

TEST(Euler, IndexErrors) {
    auto q = seq({3, 1, 1, 3});
    EXPECT_THROW(euler_residual(q, 1, 0, 2, 3), DomainError);
    EXPECT_THROW(euler_residual(q, 0, 3, 0, 3), DomainError);
    EXPECT_THROW(euler_residual(q, 0, 1, 2, 4), DomainError);
    EXPECT_THROW(euler_residual(q, 0, 1, 3, 2), DomainError);
}

TEST(Fibonacci, Values) {
    EXPECT_EQ(fibonacci(0), 0);
    EXPECT_EQ(fibonacci(1), 1);
    EXPECT_EQ(fibonacci(2), 1);
    EXPECT_EQ(fibonacci(3), 2);
    EXPECT_EQ(fibonacci(90), parse_integer("2880067194370816120"));
    EXPECT_EQ(fibonacci(100), parse_integer("354224848179261915075"));
    for (std::size_t s = 0; s <= 20; ++s) {
        QuotientSequence ones(std::vector<Integer>(s, Integer(1)));
        EXPECT_EQ(continuant(ones), fibonacci(s + 1));
    }
}

// Random sequences (length <= 12, entries <= 9) against the matrix-product oracle.
TEST(ContinuantProperties, AgreeWithOracle) {
    std::mt19937_64 rng(12345);
    for (int t = 0; t < 2000; ++t) {
        auto raw = oracle::random_seq(rng, 0, 12, 9);
        auto q = oracle::to_library(raw);
        const auto s = static_cast<Index>(raw.size());
        ASSERT_EQ(continuant(q), oracle::continuant(raw));
        ASSERT_EQ(anticontinuant(q), oracle::anticontinuant(raw));
        ASSERT_EQ(continuant(q), continuant(q.reversed()));
        ASSERT_EQ(anticontinuant(q.reversed()), -anticontinuant(q));
        ASSERT_GE(continuant(q), fibonacci(raw.size() + 1));
        for (Index i = 0; i <= s; ++i)
            for (Index j = i - 1; j < s; ++j) {
                ASSERT_EQ(continuant_range(q, i, j), oracle::continuant_range(raw, i, j));
                ASSERT_EQ(anticontinuant_range(q, i, j), oracle::anticontinuant_range(raw, i, j));
                ASSERT_EQ(anticontinuant_range_by_recursion(q, i, j), anticontinuant_range(q, i, j));
            }
    }
}

TEST(ContinuantProperties, EulerResidualVanishesEverywhere) {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 150; ++t) {
        auto q = oracle::to_library(oracle::random_seq(rng, 1, 9, 9));
        const auto s = static_cast<Index>(q.size());
        for (Index n = 0; n < s; ++n)
            for (Index m = -2; m <= n; ++m)
                for (Index l = 0; l <= m + 2; ++l)
                    for (Index k = 0; k <= l; ++k) ASSERT_EQ(euler_residual(q, k, l, m, n), 0) << to_string(q);
    }
}

TEST(ContinuantProperties, HalfBound) {
    std::mt19937_64 rng(5);
    int tested = 0;
    while (tested < 3000) {
        auto raw = oracle::random_seq(rng, 1, 12, 9);
        bool both_big = raw.front() >= 2 && raw.back() >= 2;
        bool both_one = raw.front() == 1 && raw.back() == 1;
        if (!both_big && !both_one) continue;
        ++tested;
        auto q = oracle::to_library(raw);
        Integer a = anticontinuant(q);
        ASSERT_LT(2 * (a < 0 ? Integer(-a) : a), continuant(q)) << to_string(q);
    }
}
