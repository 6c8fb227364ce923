#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fmr/factor_system.hpp"

namespace fmr {

struct HypothesisViolated : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotBinary : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotTransitive : std::logic_error {
    using std::logic_error::logic_error;
};

/// Classes of the relation i ~ j <=> s_iji = 1.
struct EquivalencePartition {
    int n = 0;
    std::vector<std::vector<int>> classes;  // disjoint, covering {1..n}

    int class_of(int i) const;
};

/// Permutation-invariant fingerprint of a canonical form: the element s
/// together with the diagonal block sizes, sorted descending.
struct CanonicalDescriptor {
    Int s = 0;
    std::vector<int> block_sizes;

    bool operator==(const CanonicalDescriptor&) const = default;
    std::string describe() const;
};

struct TrichotomyReport {
    long case_all_ones = 0;       // all three principal entries equal 1
    long case_two_nonunits = 0;   // exactly two non-invertible, one 1
    long case_all_nonunits = 0;   // all three non-invertible
    std::vector<std::array<int, 3>> misfits;  // triples fitting no case
    bool pass() const { return misfits.empty(); }
};

/// Census of (s_iji, s_iki, s_jkj) over all triples of pairwise distinct
/// subscripts. Requires every factor to be 1 or non-invertible; a misfit
/// indicates a library bug, not bad input.
TrichotomyReport trichotomy_check(const FactorSystem& sys);

EquivalencePartition similarity_partition(const FactorSystem& sys);

struct Canonicalization {
    Permutation tau;
    CanonicalDescriptor descriptor;
    Mat canonical_s;  // tau S: all-1 diagonal blocks, s elsewhere
};

/// Reduce the principal factor matrix to canonical form. The system must
/// be binary in {1, s} with s not invertible; when s is omitted it is
/// inferred from the table (1 for an all-ones table). Blocks are ordered
/// by decreasing size, ties by smallest original index, so the output is
/// reproducible and descriptors compare by plain equality.
Canonicalization canonicalize(const FactorSystem& sys, std::optional<Int> s = std::nullopt);

bool same_canonical_form(const CanonicalDescriptor& a, const CanonicalDescriptor& b);

enum class IsoOutcome { Isomorphic, NotIsomorphic, Inconclusive };

std::string to_string(IsoOutcome o);

struct Hypothesis {
    std::string name;
    bool pass;
};

struct IsoVerdict {
    IsoOutcome outcome = IsoOutcome::Inconclusive;
    std::vector<Hypothesis> hypotheses;
    std::optional<Permutation> witness;  // sigma with permute(sysA, sigma) == sysB
    std::string note;
};

/// Canonical-form decision procedure for two binary systems over the
/// same ring with the same s. Different descriptors plus the part-1
/// hypotheses give NotIsomorphic; equal descriptors plus the part-2
/// hypotheses give Isomorphic with an explicit permutation witness;
/// anything else is Inconclusive with the failed hypotheses named.
IsoVerdict decide_isomorphism(const BaseRing& ring, Int s, const FactorSystem& sysA,
                              const FactorSystem& sysB);

/// Block sizes of the canonical form, read as the matrix-ring orders of
/// the factors of K/P(K) over R/P(R). Requires s in P(R).
std::vector<int> quotient_descriptor(const BaseRing& ring, Int s, const FactorSystem& sys);

}  // namespace fmr
