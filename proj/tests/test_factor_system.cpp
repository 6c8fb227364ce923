#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fmr/factor_system.hpp"

using namespace fmr;

namespace {

std::vector<Int> all_ones_table(int n) { return std::vector<Int>(std::size_t(n) * n * n, 1); }

FactorSystem certify(int n, const BaseRing& R, const std::vector<Int>& t) {
    auto out = validate(n, R, t);
    REQUIRE(std::holds_alternative<FactorSystem>(out));
    return std::get<FactorSystem>(std::move(out));
}

}  // namespace

TEST_CASE("validate accepts the trivial system") {
    auto sys = certify(2, BaseRing::modular(4), all_ones_table(2));
    CHECK(sys.at(1, 2, 1) == 1);
}

TEST_CASE("validate accepts the n=2 binary table and rejects tampering") {
    auto R = BaseRing::modular(4);
    auto t = all_ones_table(2);
    t[table_index(2, 1, 2, 1)] = 2;
    t[table_index(2, 2, 1, 2)] = 2;
    auto sys = certify(2, R, t);
    CHECK(sys.at(1, 2, 1) == 2);
    CHECK(sys.at(2, 1, 2) == 2);

    auto bad = t;
    bad[table_index(2, 1, 1, 2)] = 2;  // s_iik must be 1
    auto out = validate(2, R, bad);
    REQUIRE(std::holds_alternative<Violation>(out));
    auto v = std::get<Violation>(out);
    CHECK(v.kind == Violation::Kind::Normalization);
    CHECK(v.indices == std::array<int, 4>{1, 1, 2, 0});
}

TEST_CASE("validate rejects a broken cocycle") {
    auto R = BaseRing::modular(4);
    auto t = all_ones_table(2);
    t[table_index(2, 1, 2, 1)] = 2;  // without the matching s_212 the cocycle fails
    auto out = validate(2, R, t);
    REQUIRE(std::holds_alternative<Violation>(out));
    CHECK(std::get<Violation>(out).kind == Violation::Kind::Cocycle);
}

TEST_CASE("derived relations hold on certified systems") {
    CHECK(derived_relations_report(trivial_system(BaseRing::modular(4), 3)).pass);
    auto bin = binary_system(BaseRing::modular(8), {1, 1, 2}, 2);
    CHECK(derived_relations_report(bin).pass);
    // Random coboundary systems, n=4.
    std::uint64_t st = 7;
    for (int trial = 0; trial < 25; ++trial) {
        ExponentMatrix g(4);
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                st = st * 6364136223846793005ULL + 1442695040888963407ULL;
                if (i != j) g.at(i, j) = Int((st >> 33) % 3);
            }
        // Shortest-path flooding turns the raw entries into a valid
        // quasi-metric (triangle inequality).
        for (int r = 0; r < 4; ++r)
            for (int i = 1; i <= 4; ++i)
                for (int j = 1; j <= 4; ++j)
                    for (int k = 1; k <= 4; ++k)
                        g.at(i, k) = std::min(g.at(i, k), g.at(i, j) + g.at(j, k));
        auto sys = coboundary_system(BaseRing::modular(8), g, 2);
        CHECK(derived_relations_report(sys).pass);
    }
}

TEST_CASE("coboundary expansion matches hand-computed exponents") {
    auto R = BaseRing::modular(4);
    ExponentMatrix g(2);
    g.at(1, 2) = 1;
    auto sys = coboundary_system(R, g, 2);
    CHECK(sys.at(1, 2, 1) == 2);  // exponent g(1,2)+g(2,1)-g(1,1) = 1
    CHECK(sys.at(2, 1, 2) == 2);
    for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j)
            for (int k = 1; k <= 2; ++k)
                if (!((i == 1 && j == 2 && k == 1) || (i == 2 && j == 1 && k == 2)))
                    CHECK(sys.at(i, j, k) == 1);

    CHECK(coboundary_system(R, ExponentMatrix(3), 2).table() ==
          trivial_system(R, 3).table());

    ExponentMatrix bad(2);
    bad.at(1, 1) = 1;
    CHECK_THROWS_AS(coboundary_system(R, bad, 2), BadExponentMatrix);
}

TEST_CASE("binary systems and their principal matrices") {
    auto R4 = BaseRing::modular(4);
    auto S = principal_matrix(binary_system(R4, {1, 2}, 2));
    CHECK(S.at(1, 1) == 1);
    CHECK(S.at(1, 2) == 2);
    CHECK(S.at(2, 1) == 2);
    CHECK(S.at(2, 2) == 1);

    auto R8 = BaseRing::modular(8);
    auto S2 = principal_matrix(binary_system(R8, {1, 1, 2}, 2));
    Mat expect(3);
    expect.a = {1, 1, 2, 1, 1, 2, 2, 2, 1};
    CHECK(S2 == expect);

    auto R2 = BaseRing::modular(2);
    auto S3 = principal_matrix(binary_system(R2, {1, 2}, 0));
    CHECK(S3.at(1, 2) == 0);
    CHECK(S3.at(2, 2) == 1);

    // Distinct classes with s=0 over Z/2: identity-patterned S.
    auto S4 = principal_matrix(binary_system(R2, {1, 2, 3}, 0));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) CHECK(S4.at(i, j) == (i == j ? 1 : 0));

    CHECK(binary_system(R4, {1, 1, 1}, 2).table() == trivial_system(R4, 3).table());
    CHECK_THROWS_AS(binary_system(R4, {1, 3}, 2), BadClassMap);
}

TEST_CASE("factor matrices S_k") {
    auto R = BaseRing::modular(4);
    auto sys = binary_system(R, {1, 2}, 2);
    // Entry (i,j) of S_k is s_ikj; for this system the nonunit entries are
    // s_212 (in S_1) and s_121 (in S_2).
    auto S1 = factor_matrix_k(sys, 1);
    CHECK(S1.a == std::vector<Int>{1, 1, 1, 2});
    auto S2 = factor_matrix_k(sys, 2);
    CHECK(S2.a == std::vector<Int>{2, 1, 1, 1});
    CHECK_THROWS_AS(factor_matrix_k(sys, 3), IndexOutOfRange);
    // Row k and column k are 1s.
    for (int k = 1; k <= 2; ++k) {
        auto Sk = factor_matrix_k(sys, k);
        for (int i = 1; i <= 2; ++i) {
            CHECK(Sk.at(k, i) == 1);
            CHECK(Sk.at(i, k) == 1);
        }
    }
}

TEST_CASE("permute round trip and principal reindexing") {
    auto R = BaseRing::modular(8);
    auto sys = binary_system(R, {1, 1, 2}, 2);
    CHECK(permute(sys, Permutation::identity(3)).table() == sys.table());
    for (const auto& tau : all_permutations(3)) {
        auto p = permute(sys, tau);
        CHECK(permute(p, tau.inverse()).table() == sys.table());
        auto S = principal_matrix(sys);
        auto pS = principal_matrix(p);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) CHECK(pS.at(i, j) == S.at(tau(i), tau(j)));
    }
}

TEST_CASE("permuting a binary system relabels its partition") {
    auto R = BaseRing::modular(4);
    auto a = binary_system(R, {1, 2}, 2);
    Permutation swap{{2, 1}};
    auto b = permute(a, swap);
    CHECK(b.table() == binary_system(R, {2, 1}, 2).table());
}

TEST_CASE("binary uniqueness: principal matrix determines the table") {
    auto R = BaseRing::modular(8);
    auto a = binary_system(R, {1, 1, 2}, 2);
    CHECK(binary_uniqueness_check(a, a, 2) == UniquenessOutcome::TablesEqual);
    auto b = binary_system(R, {1, 1, 2}, 2);
    CHECK(binary_uniqueness_check(a, b, 2) == UniquenessOutcome::TablesEqual);
    auto c = binary_system(R, {1, 2, 2}, 2);
    CHECK(binary_uniqueness_check(a, c, 2) == UniquenessOutcome::NotComparable);
    CHECK_THROWS(binary_uniqueness_check(a, b, 0));  // s^2 = s
}

TEST_CASE("every generated system validates; entries stay in {1, s}") {
    auto R = BaseRing::modular(9);
    for (int n = 2; n <= 4; ++n)
        for (const auto& classes : all_ordered_partitions(n)) {
            auto sys = binary_system(R, classes, 3);
            auto out = validate(n, R, sys.table());
            CHECK(std::holds_alternative<FactorSystem>(out));
            for (Int v : sys.table()) CHECK((v == 1 || v == 3));
        }
}

TEST_CASE("ordered partition counts follow the Fubini numbers") {
    CHECK(all_ordered_partitions(2).size() == 3);
    CHECK(all_ordered_partitions(3).size() == 13);
    CHECK(all_ordered_partitions(4).size() == 75);
    CHECK(all_ordered_partitions(5).size() == 541);
}
