#include <doctest.h>

#include "oracles.hpp"
#include "tauforge/error.hpp"
#include "tauforge/partitions.hpp"

using namespace tauforge;

namespace {
Partition L(std::vector<int> p) { return Partition(std::move(p)); }
} // namespace

TEST_SUITE("partitions") {

TEST_CASE("validation and parsing") {
    CHECK_THROWS_AS(L({1, 2}), InvalidInput);
    CHECK_THROWS_AS(L({2, 0}), InvalidInput);
    CHECK(Partition::parse("3,1,1") == L({3, 1, 1}));
    CHECK(Partition::parse("()").empty());
    CHECK_THROWS_AS(Partition::parse("2,,1"), InvalidInput);
    CHECK_THROWS_AS(Partition::parse("a"), InvalidInput);
    CHECK(L({3, 1, 1}).size() == 5);
    CHECK(L({3, 1}).to_string() == "3,1");
}

TEST_CASE("v_sequence examples") {
    auto v0 = v_sequence(Partition());
    CHECK(v0.head.empty());
    CHECK(v0.tail_start == 0);
    CHECK(v0.contains(0));
    CHECK_FALSE(v0.contains(1));
    auto v1 = v_sequence(L({1}));
    CHECK(v1.head == std::vector<int>{1});
    CHECK(v1.tail_start == -1);
    auto v21 = v_sequence(L({2, 1}));
    CHECK(v21.head == std::vector<int>{2, 0});
    CHECK(v21.tail_start == -2);
    CHECK_FALSE(v21.contains(1));
    CHECK_FALSE(v21.contains(-1));
}

TEST_CASE("is_n_periodic examples") {
    CHECK(is_n_periodic(L({1}), 2));
    CHECK_FALSE(is_n_periodic(L({2}), 2));
    CHECK(is_n_periodic(L({2, 1}), 2));
    CHECK(is_n_periodic(Partition(), 3));
    CHECK_THROWS_AS(is_n_periodic(L({1}), 1), InvalidInput);
}

TEST_CASE("periodicity matches the definition for all sizes up to 10") {
    for (const auto& lambda : enumerate_partitions(10))
        for (int n = 2; n <= 5; ++n) CHECK(is_n_periodic(lambda, n) == oracle::periodic_by_definition(lambda, n));
}

TEST_CASE("residue classes of periodic partitions") {
    // At most n-1 classes appear among the head values.
    for (int n = 2; n <= 4; ++n)
        for (const auto& lambda : enumerate_n_periodic(n, 10)) {
            std::set<int> classes;
            for (int v : v_sequence(lambda).head) classes.insert(((v % n) + n) % n);
            CHECK(static_cast<int>(classes.size()) <= n - 1);
        }
}

TEST_CASE("enumeration") {
    CHECK(enumerate_n_periodic(2, 1) == std::vector<Partition>{Partition(), L({1})});
    auto upto3 = enumerate_n_periodic(2, 3);
    CHECK(std::find(upto3.begin(), upto3.end(), L({2, 1})) != upto3.end());
    CHECK(enumerate_n_periodic(3, 1) == std::vector<Partition>{Partition(), L({1})});
    // partition counts p(0..8)
    std::vector<int> counts(9, 0);
    for (const auto& p : enumerate_partitions(8)) counts[static_cast<std::size_t>(p.size())]++;
    CHECK(counts == std::vector<int>{1, 1, 2, 3, 5, 7, 11, 15, 22});
    auto all = enumerate_partitions(6);
    for (std::size_t i = 1; i < all.size(); ++i) {
        bool ordered = all[i - 1].size() < all[i].size() || (all[i - 1].size() == all[i].size() && all[i - 1] < all[i]);
        CHECK(ordered);
    }
    CHECK_THROWS_AS(enumerate_partitions(31), InvalidInput);
    CHECK_THROWS_AS(enumerate_partitions(-1), InvalidInput);
}

TEST_CASE("canonicalize_shifts examples") {
    std::vector<ShiftVector> one{ShiftVector({Rational(3), Rational(4)})};
    CHECK(canonicalize_shifts(L({2}), one)[0] == one[0]);
    std::vector<ShiftVector> C{ShiftVector({Rational(5), Rational(7)}), ShiftVector({Rational(2)})};
    auto out = canonicalize_shifts(L({1, 1}), C);
    CHECK(out[0].entries[0] == Rational(0));
    CHECK(out[0].entries[1] == Rational(7));
    CHECK(out[1] == C[1]);
    CHECK_THROWS_AS(canonicalize_shifts(L({1, 1}), {ShiftVector({Rational(1)}), ShiftVector({Rational(2)})}),
                    InvalidInput);
}

TEST_CASE("canonical shifts satisfy the constraints") {
    oracle::Rng rng(21);
    for (const auto& lambda : enumerate_partitions(7)) {
        std::vector<ShiftVector> C;
        for (int j = 1; j <= lambda.length(); ++j) C.push_back(rng.shift(shift_length(lambda, j)));
        auto out = canonicalize_shifts(lambda, C);
        for (int j = 1; j <= lambda.length(); ++j)
            for (int i = j + 1; i <= lambda.length(); ++i)
                CHECK(schur_constant(lambda[j] - j - lambda[i] + i, out[static_cast<std::size_t>(j - 1)]) == Rational(0));
    }
}

TEST_CASE("free parameters equal the size") {
    for (const auto& lambda : enumerate_partitions(16))
        if (lambda.length() <= 4 && (lambda.empty() || lambda[1] <= 4)) CHECK(free_parameter_count(lambda) == lambda.size());
}

} // TEST_SUITE
