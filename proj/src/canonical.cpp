#include "fmr/canonical.hpp"

#include <algorithm>

namespace fmr {

int EquivalencePartition::class_of(int i) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (int m : classes[c])
            if (m == i) return int(c);
    throw IndexOutOfRange("index not covered by the partition");
}

std::string CanonicalDescriptor::describe() const {
    std::string out = "blocks=[";
    for (std::size_t i = 0; i < block_sizes.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(block_sizes[i]);
    }
    out += "] s=" + std::to_string(s);
    return out;
}

static void require_nonunit_factors(const FactorSystem& sys) {
    const Int one = sys.ring().norm(1);
    const int n = sys.order();
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                Int v = sys.at(i, j, k);
                if (v != one && sys.ring().is_unit(v))
                    throw HypothesisViolated("factor s_(" + std::to_string(i) + "," +
                                             std::to_string(j) + "," + std::to_string(k) +
                                             ") is invertible and not 1");
            }
}

TrichotomyReport trichotomy_check(const FactorSystem& sys) {
    require_nonunit_factors(sys);
    TrichotomyReport rep;
    const Int one = sys.ring().norm(1);
    const int n = sys.order();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                int ones = (sys.at(i, j, i) == one) + (sys.at(i, k, i) == one) +
                           (sys.at(j, k, j) == one);
                if (ones == 3)
                    ++rep.case_all_ones;
                else if (ones == 1)
                    ++rep.case_two_nonunits;
                else if (ones == 0)
                    ++rep.case_all_nonunits;
                else
                    rep.misfits.push_back({i, j, k});
            }
    return rep;
}

EquivalencePartition similarity_partition(const FactorSystem& sys) {
    require_nonunit_factors(sys);
    const int n = sys.order();
    const Int one = sys.ring().norm(1);
    auto related = [&](int i, int j) { return sys.at(i, j, i) == one; };

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                if (related(i, j) && related(j, k) && !related(i, k))
                    throw NotTransitive("~ not transitive at (" + std::to_string(i) + "," +
                                        std::to_string(j) + "," + std::to_string(k) + ")");

    EquivalencePartition part;
    part.n = n;
    std::vector<bool> placed(std::size_t(n) + 1, false);
    for (int i = 1; i <= n; ++i) {
        if (placed[std::size_t(i)]) continue;
        std::vector<int> cls;
        for (int j = i; j <= n; ++j)
            if (!placed[std::size_t(j)] && related(i, j)) {
                cls.push_back(j);
                placed[std::size_t(j)] = true;
            }
        part.classes.push_back(std::move(cls));
    }
    return part;
}

static Int infer_s(const FactorSystem& sys, std::optional<Int> s) {
    const BaseRing& R = sys.ring();
    auto vals = sys.nonunit_values();
    if (s) {
        Int sv = R.norm(*s);
        for (Int v : vals)
            if (v != sv) throw NotBinary("table contains a value other than 1 and s");
        return sv;
    }
    if (vals.empty()) return R.norm(1);
    if (vals.size() > 1) throw NotBinary("table contains more than one value besides 1");
    return vals[0];
}

Canonicalization canonicalize(const FactorSystem& sys, std::optional<Int> s) {
    const BaseRing& R = sys.ring();
    const int n = sys.order();
    Int sv = infer_s(sys, s);
    if (sv != R.norm(1) && R.is_unit(sv))
        throw HypothesisViolated("canonical form requires a non-invertible s");

    auto part = similarity_partition(sys);
    // Classes ordered by decreasing size, ties by smallest member.
    std::stable_sort(part.classes.begin(), part.classes.end(),
                     [](const auto& a, const auto& b) {
                         if (a.size() != b.size()) return a.size() > b.size();
                         return a.front() < b.front();
                     });

    Canonicalization out;
    out.tau.images.reserve(std::size_t(n));
    for (const auto& cls : part.classes) {
        out.descriptor.block_sizes.push_back(int(cls.size()));
        for (int m : cls) out.tau.images.push_back(m);
    }
    out.descriptor.s = sv;

    Mat S = principal_matrix(sys);
    out.canonical_s = Mat(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) out.canonical_s.at(i, j) = S.at(out.tau(i), out.tau(j));
    return out;
}

bool same_canonical_form(const CanonicalDescriptor& a, const CanonicalDescriptor& b) {
    return a == b;
}

std::string to_string(IsoOutcome o) {
    switch (o) {
        case IsoOutcome::Isomorphic: return "Isomorphic";
        case IsoOutcome::NotIsomorphic: return "NotIsomorphic";
        case IsoOutcome::Inconclusive: return "Inconclusive";
    }
    return "";
}

IsoVerdict decide_isomorphism(const BaseRing& ring, Int s, const FactorSystem& sysA,
                              const FactorSystem& sysB) {
    if (!(sysA.ring() == ring) || !(sysB.ring() == ring))
        throw HypothesisViolated("systems must live over the given ring");
    if (sysA.order() != sysB.order())
        throw HypothesisViolated("systems must have the same order");
    const Int sv = ring.norm(s);
    const Int one = ring.norm(1);
    for (const auto* sys : {&sysA, &sysB})
        for (Int v : sys->nonunit_values())
            if (v != sv) throw HypothesisViolated("system is not binary in {1, s}");

    IsoVerdict verdict;
    if (ring.is_unit(sv)) {
        // Invertible s: both rings are isomorphic to the ordinary matrix
        // ring, descriptor [n] on both sides.
        verdict.outcome = IsoOutcome::Isomorphic;
        verdict.hypotheses.push_back({"s_invertible_ordinary_ring", true});
        verdict.note = "s is invertible; both rings are isomorphic to M(n,R)";
        return verdict;
    }

    const Int s2 = ring.mul(sv, sv);
    bool h_nilpotent = ring.is_nilpotent(sv);
    bool h_indecomp = indecomposable_mod_radical(ring);
    bool h_nm = true;  // commutative base rings satisfy the order condition
    bool h_s2_ne_1 = s2 != one;
    bool h_s2_ne_s = s2 != sv;
    verdict.hypotheses = {{"s_in_radical", h_nilpotent},
                          {"quotient_indecomposable", h_indecomp},
                          {"order_condition_commutative", h_nm},
                          {"s_squared_ne_1", h_s2_ne_1},
                          {"s_squared_ne_s", h_s2_ne_s}};
    bool part1 = h_nilpotent && h_indecomp && h_nm;
    bool part2 = part1 && h_s2_ne_1 && h_s2_ne_s;

    auto canA = canonicalize(sysA, sv);
    auto canB = canonicalize(sysB, sv);
    bool same = same_canonical_form(canA.descriptor, canB.descriptor);

    if (!same) {
        if (part1) {
            verdict.outcome = IsoOutcome::NotIsomorphic;
            verdict.note = "canonical forms differ: " + canA.descriptor.describe() + " vs " +
                           canB.descriptor.describe();
        } else {
            verdict.outcome = IsoOutcome::Inconclusive;
            verdict.note = "canonical forms differ but a required hypothesis fails";
        }
        return verdict;
    }

    if (part2) {
        // Equal descriptors with the uniqueness hypotheses: the aligning
        // permutation carries one table onto the other exactly.
        Permutation sigma = canA.tau.after(canB.tau.inverse());
        if (permute(sysA, sigma).table() == sysB.table()) {
            verdict.outcome = IsoOutcome::Isomorphic;
            verdict.witness = sigma;
            verdict.note = "canonical forms equal; witness permutation aligns the tables";
        } else {
            verdict.outcome = IsoOutcome::Inconclusive;
            verdict.note = "equal descriptors but no permutation alignment found";
        }
        return verdict;
    }

    verdict.outcome = IsoOutcome::Inconclusive;
    verdict.note = "equal canonical forms but the converse hypotheses fail";
    if (part1)
        verdict.hypotheses.push_back({"quotient_level_equivalence_available", true});
    return verdict;
}

std::vector<int> quotient_descriptor(const BaseRing& ring, Int s, const FactorSystem& sys) {
    if (!ring.is_nilpotent(ring.norm(s)))
        throw HypothesisViolated("quotient descriptor requires s in the radical");
    return canonicalize(sys, ring.norm(s)).descriptor.block_sizes;
}

}  // namespace fmr
