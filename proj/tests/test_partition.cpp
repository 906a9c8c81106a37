#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "chromsym/partition.hpp"
#include "oracles.hpp"

using namespace chromsym;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("construction validates part order and positivity") {
    CHECK_NOTHROW(P({3, 3, 1}));
    CHECK_NOTHROW(P({}));
    CHECK_THROWS_AS(P({1, 2}), std::domain_error);
    CHECK_THROWS_AS(P({2, 0}), std::domain_error);
    CHECK_THROWS_AS(P({-1}), std::domain_error);
}

TEST_CASE("partitions_of small cases") {
    CHECK(partitions_of(0) == std::vector<Partition>{P({})});
    CHECK(partitions_of(1) == std::vector<Partition>{P({1})});
    CHECK(partitions_of(4) ==
          std::vector<Partition>{P({4}), P({3, 1}), P({2, 2}), P({2, 1, 1}), P({1, 1, 1, 1})});
}

TEST_CASE("partitions_of counts match the pentagonal recurrence") {
    const auto counts = oracle::partition_counts(12);
    for (int n = 0; n <= 12; ++n)
        CHECK(static_cast<long long>(partitions_of(n).size()) == counts[static_cast<size_t>(n)]);
}

TEST_CASE("partitions_of order linearly extends dominance") {
    for (int n = 1; n <= 10; ++n) {
        const auto parts = partitions_of(n);
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i + 1; j < parts.size(); ++j) {
                // A later partition never strictly dominates an earlier one.
                CHECK_FALSE(oracle::dominates(parts[j], parts[i]));
            }
    }
}

TEST_CASE("conjugate") {
    CHECK(P({6, 4, 4, 1}).conjugate() == P({4, 3, 3, 3, 1, 1}));
    CHECK(P({}).conjugate() == P({}));
    CHECK(P({1, 1, 1}).conjugate() == P({3}));
    for (int n = 0; n <= 9; ++n)
        for (const auto& lam : partitions_of(n)) CHECK(lam.conjugate().conjugate() == lam);
}

TEST_CASE("skew diagram construction and cells") {
    CHECK_THROWS_AS(SkewDiagram(P({2}), P({3})), std::domain_error);
    CHECK_THROWS_AS(SkewDiagram(P({2}), P({1, 1})), std::domain_error);
    const SkewDiagram d(P({3, 1}), P({1}));
    CHECK(d.size() == 3);
    CHECK(d.cells() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 1}});
}

TEST_CASE("transpose matches cell-set reflection") {
    CHECK(SkewDiagram(P({6, 4, 4, 1}), P({3, 2})).transpose() ==
          SkewDiagram(P({4, 3, 3, 3, 1, 1}), P({2, 2, 1})));
    CHECK(SkewDiagram(P({3}), P({})).transpose() == SkewDiagram(P({1, 1, 1}), P({})));
    CHECK(SkewDiagram(P({2, 2}), P({1})).transpose() == SkewDiagram(P({2, 2}), P({1})));

    for (int n = 0; n <= 8; ++n) {
        for (const auto& outer : partitions_of(n)) {
            for (int m = 0; m <= n; ++m) {
                for (const auto& inner : partitions_of(m)) {
                    if (!outer.contains(inner)) continue;
                    const SkewDiagram d(outer, inner);
                    CHECK(d.transpose().transpose() == d);
                    auto expect = d.cells();
                    for (auto& [r, c] : expect) std::swap(r, c);
                    std::sort(expect.begin(), expect.end());
                    auto got = d.transpose().cells();
                    std::sort(got.begin(), got.end());
                    CHECK(got == expect);
                }
            }
        }
    }
}

TEST_CASE("classify_strip") {
    CHECK(classify_strip(SkewDiagram(P({6, 4, 4, 1}), P({3, 2}))).kind == StripKind::neither);

    const auto vertical = classify_strip(SkewDiagram(P({1, 1, 1}), P({})));
    CHECK(vertical.kind == StripKind::vertical);
    CHECK(vertical.col_profile == std::vector<int>{3});

    const auto horizontal = classify_strip(SkewDiagram(P({3, 1}), P({1})));
    CHECK(horizontal.kind == StripKind::horizontal);
    CHECK(horizontal.row_profile == std::vector<int>{2, 1});

    const auto both = classify_strip(SkewDiagram(P({2, 1}), P({1})));
    CHECK(both.kind == StripKind::both);
    CHECK(both.row_profile == std::vector<int>{1, 1});
    CHECK(both.col_profile == std::vector<int>{1, 1});
}

TEST_CASE("classify_strip transposes horizontal to vertical") {
    for (int n = 1; n <= 8; ++n) {
        for (const auto& outer : partitions_of(n)) {
            for (int m = 0; m < n; ++m) {
                for (const auto& inner : partitions_of(m)) {
                    if (!outer.contains(inner)) continue;
                    const SkewDiagram d(outer, inner);
                    const auto kd = classify_strip(d).kind;
                    const auto kt = classify_strip(d.transpose()).kind;
                    CHECK((kd == StripKind::horizontal) == (kt == StripKind::vertical));
                    CHECK((kd == StripKind::both) == (kt == StripKind::both));
                }
            }
        }
    }
}

TEST_CASE("z examples") {
    CHECK(z(P({5})) == 5);
    CHECK(z(P({1, 1, 1})) == 6);
    CHECK(z(P({})) == 1);
    CHECK(z(P({2, 2, 1})) == 8);
}

TEST_CASE("z counts permutation cycle types") {
    // The number of permutations of n with cycle type lambda is n!/z_lambda;
    // check against a direct census for n <= 7.
    for (int n = 1; n <= 7; ++n) {
        std::map<Partition, long long> census;
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        do {
            std::vector<bool> seen(static_cast<size_t>(n), false);
            std::vector<int> cycles;
            for (int v = 0; v < n; ++v) {
                if (seen[static_cast<size_t>(v)]) continue;
                int len = 0, u = v;
                while (!seen[static_cast<size_t>(u)]) {
                    seen[static_cast<size_t>(u)] = true;
                    u = perm[static_cast<size_t>(u)];
                    ++len;
                }
                cycles.push_back(len);
            }
            std::sort(cycles.begin(), cycles.end(), std::greater<int>());
            ++census[Partition(cycles)];
        } while (std::next_permutation(perm.begin(), perm.end()));

        Integer total = 0;
        for (const auto& lam : partitions_of(n)) {
            const Integer expected = factorial(n) / z(lam);
            CHECK(Integer(census[lam]) == expected);
            total += expected;
        }
        CHECK(total == factorial(n));
    }
}

TEST_CASE("text forms") {
    CHECK(P({6, 4, 4, 1}).to_string() == "[6,4,4,1]");
    CHECK(P({}).to_string() == "[]");
    CHECK(SkewDiagram(P({6, 4, 4, 1}), P({3, 2})).to_string() == "[6,4,4,1]/[3,2]");
}

}  // TEST_SUITE
