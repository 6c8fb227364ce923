#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "fmr/canonical.hpp"
#include "fmr/formal_matrix.hpp"

using namespace fmr;

namespace {

// Unordered class-set view of a label map, for recovery comparisons.
std::set<std::set<int>> class_sets(const std::vector<int>& labels) {
    std::set<std::set<int>> out;
    int k = *std::max_element(labels.begin(), labels.end());
    for (int c = 1; c <= k; ++c) {
        std::set<int> cls;
        for (std::size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == c) cls.insert(int(i) + 1);
        out.insert(cls);
    }
    return out;
}

std::set<std::set<int>> class_sets(const EquivalencePartition& p) {
    std::set<std::set<int>> out;
    for (const auto& cls : p.classes) out.insert(std::set<int>(cls.begin(), cls.end()));
    return out;
}

}  // namespace

TEST_CASE("trichotomy census") {
    auto triv = trivial_system(BaseRing::modular(8), 3);
    auto rep = trichotomy_check(triv);
    CHECK(rep.pass());
    CHECK(rep.case_all_ones == 1);

    auto bin = binary_system(BaseRing::modular(8), {1, 1, 2}, 2);
    auto rep2 = trichotomy_check(bin);
    CHECK(rep2.pass());
    CHECK(rep2.case_two_nonunits == 1);  // s_121=1, s_131=2, s_232=2

    auto all_distinct = binary_system(BaseRing::modular(2), {1, 2, 3}, 0);
    auto rep3 = trichotomy_check(all_distinct);
    CHECK(rep3.pass());
    CHECK(rep3.case_all_nonunits == 1);

    // An invertible factor other than 1 violates the hypothesis.
    auto unit_sys = binary_system(BaseRing::modular(4), {1, 2}, 3);
    CHECK_THROWS_AS(trichotomy_check(unit_sys), HypothesisViolated);
}

TEST_CASE("similarity partition recovers the generating classes") {
    auto triv = trivial_system(BaseRing::modular(4), 4);
    auto p = similarity_partition(triv);
    CHECK(p.classes.size() == 1);
    CHECK(p.classes[0] == std::vector<int>{1, 2, 3, 4});

    auto p2 = similarity_partition(binary_system(BaseRing::modular(8), {1, 1, 2}, 2));
    CHECK(class_sets(p2) == std::set<std::set<int>>{{1, 2}, {3}});

    auto p3 = similarity_partition(binary_system(BaseRing::modular(4), {1, 2, 2, 1, 2}, 2));
    CHECK(class_sets(p3) == std::set<std::set<int>>{{1, 4}, {2, 3, 5}});
}

TEST_CASE("similarity partition never hits non-transitivity on generated systems") {
    auto R = BaseRing::modular(4);
    for (int n = 2; n <= 5; ++n)
        for (const auto& classes : all_ordered_partitions(n)) {
            auto p = similarity_partition(binary_system(R, classes, 2));
            CHECK(class_sets(p) == class_sets(classes));
        }
}

TEST_CASE("canonicalize: block form and descriptor") {
    auto triv = canonicalize(trivial_system(BaseRing::modular(4), 3), 2);
    CHECK(triv.descriptor.block_sizes == std::vector<int>{3});
    for (Int v : triv.canonical_s.a) CHECK(v == 1);

    // Class of 3 carries label 1, but blocks are ordered by size.
    auto can = canonicalize(binary_system(BaseRing::modular(8), {2, 2, 1}, 2));
    CHECK(can.descriptor.block_sizes == std::vector<int>{2, 1});
    Mat expect(3);
    expect.a = {1, 1, 2, 1, 1, 2, 2, 2, 1};
    CHECK(can.canonical_s == expect);
    CHECK(can.tau.images == std::vector<int>{1, 2, 3});

    auto can2 = canonicalize(binary_system(BaseRing::modular(2), {1, 2, 1, 2}, 0));
    CHECK(can2.descriptor.block_sizes == std::vector<int>{2, 2});
    // Cell-by-cell: 1 inside the diagonal blocks, s elsewhere.
    std::vector<int> block{0, 0, 1, 1};
    for (int i = 1; i <= 4; ++i)
        for (int j = 1; j <= 4; ++j)
            CHECK(can2.canonical_s.at(i, j) ==
                  (block[std::size_t(i) - 1] == block[std::size_t(j) - 1] ? 1 : 0));

    CHECK_THROWS_AS(canonicalize(binary_system(BaseRing::modular(4), {1, 2}, 3)),
                    HypothesisViolated);
}

TEST_CASE("descriptors are invariant under permutation") {
    auto R = BaseRing::modular(4);
    for (int n = 2; n <= 4; ++n)
        for (const auto& classes : all_ordered_partitions(n)) {
            auto sys = binary_system(R, classes, 2);
            auto base = canonicalize(sys, 2).descriptor;
            for (const auto& tau : all_permutations(n))
                CHECK(canonicalize(permute(sys, tau), 2).descriptor == base);
        }
}

TEST_CASE("same_canonical_form compares s and block multiset") {
    CanonicalDescriptor a{2, {2, 1}}, b{2, {2, 1}}, c{2, {3}}, d{2, {1, 1, 1}};
    CHECK(same_canonical_form(a, b));
    CHECK(!same_canonical_form(c, d));
    CanonicalDescriptor e{3, {2, 1}};
    CHECK(!same_canonical_form(a, e));
}

TEST_CASE("decide_isomorphism: equal descriptors with the converse hypotheses") {
    auto R = BaseRing::modular(8);
    auto a = binary_system(R, {1, 1, 2}, 2);
    auto b = binary_system(R, {1, 2, 2}, 2);
    auto v = decide_isomorphism(R, 2, a, b);
    CHECK(v.outcome == IsoOutcome::Isomorphic);
    REQUIRE(v.witness.has_value());
    CHECK(permute(a, *v.witness).table() == b.table());
}

TEST_CASE("decide_isomorphism: different descriptors") {
    auto R = BaseRing::modular(8);
    auto a = binary_system(R, {1, 1, 1}, 2);
    auto b = binary_system(R, {1, 2, 3}, 2);
    auto v = decide_isomorphism(R, 2, a, b);
    CHECK(v.outcome == IsoOutcome::NotIsomorphic);
}

TEST_CASE("decide_isomorphism gates on the hypotheses") {
    // s = 0: s^2 = s, the converse is not available.
    auto R2 = BaseRing::modular(2);
    auto a = binary_system(R2, {1, 2}, 0);
    auto b = binary_system(R2, {2, 1}, 0);
    auto v = decide_isomorphism(R2, 0, a, b);
    CHECK(v.outcome == IsoOutcome::Inconclusive);
    bool quotient_note = false;
    for (const auto& h : v.hypotheses)
        if (h.name == "quotient_level_equivalence_available" && h.pass) quotient_note = true;
    CHECK(quotient_note);

    // Z/6 is decomposable modulo its radical.
    auto R6 = BaseRing::modular(6);
    auto c = binary_system(R6, {1, 1}, 0);
    auto d = binary_system(R6, {1, 2}, 0);
    auto v2 = decide_isomorphism(R6, 0, c, d);
    CHECK(v2.outcome == IsoOutcome::Inconclusive);
    bool named = false;
    for (const auto& h : v2.hypotheses)
        if (h.name == "quotient_indecomposable" && !h.pass) named = true;
    CHECK(named);
}

TEST_CASE("decide_isomorphism short-circuits on invertible s") {
    auto R = BaseRing::modular(4);
    auto a = binary_system(R, {1, 2}, 3);
    auto b = binary_system(R, {1, 1}, 3);
    auto v = decide_isomorphism(R, 3, a, b);
    CHECK(v.outcome == IsoOutcome::Isomorphic);
}

TEST_CASE("decide_isomorphism rejects malformed pairings") {
    auto R = BaseRing::modular(8);
    auto a = binary_system(R, {1, 2}, 2);
    auto b = binary_system(R, {1, 2, 2}, 2);
    CHECK_THROWS_AS(decide_isomorphism(R, 2, a, b), HypothesisViolated);
    auto c = binary_system(R, {1, 2}, 4);
    CHECK_THROWS_AS(decide_isomorphism(R, 2, a, c), HypothesisViolated);
}

TEST_CASE("decide_isomorphism is symmetric and reflexive") {
    auto R = BaseRing::modular(8);
    auto parts = all_ordered_partitions(3);
    for (const auto& pa : parts) {
        auto a = binary_system(R, pa, 2);
        CHECK(decide_isomorphism(R, 2, a, a).outcome == IsoOutcome::Isomorphic);
        for (const auto& pb : parts) {
            auto b = binary_system(R, pb, 2);
            CHECK(decide_isomorphism(R, 2, a, b).outcome ==
                  decide_isomorphism(R, 2, b, a).outcome);
        }
    }
}

TEST_CASE("quotient descriptor lists the block sizes") {
    auto R = BaseRing::modular(4);
    CHECK(quotient_descriptor(R, 2, trivial_system(R, 3)) == std::vector<int>{3});
    CHECK(quotient_descriptor(R, 2, binary_system(R, {1, 2}, 2)) == std::vector<int>{1, 1});
    CHECK(quotient_descriptor(R, 2, binary_system(R, {1, 1, 1}, 2)) == std::vector<int>{3});
    CHECK_THROWS_AS(quotient_descriptor(R, 3, trivial_system(R, 3)), HypothesisViolated);
}
