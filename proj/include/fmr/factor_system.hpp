#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fmr/mat.hpp"
#include "fmr/ring.hpp"

namespace fmr {

struct BadClassMap : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

/// Permutation of {1..n}, stored as the image list: images[i-1] = tau(i).
struct Permutation {
    std::vector<int> images;

    static Permutation identity(int n);

    int degree() const { return int(images.size()); }
    int operator()(int i) const { return images[std::size_t(i) - 1]; }

    bool valid() const;
    Permutation inverse() const;
    /// Composition (this o other): i -> this(other(i)).
    Permutation after(const Permutation& other) const;

    bool operator==(const Permutation&) const = default;
};

/// All permutations of degree n, lexicographic by image list.
std::vector<Permutation> all_permutations(int n);

/// Nonnegative exponent matrix g with zero diagonal satisfying the
/// triangle inequality g(i,k) <= g(i,j) + g(j,k); the raw material for
/// coboundary factor systems.
struct ExponentMatrix {
    int n = 0;
    std::vector<Int> g;  // row-major, 1-based accessors

    ExponentMatrix() = default;
    explicit ExponentMatrix(int order) : n(order), g(std::size_t(order) * order, 0) {}

    Int& at(int i, int j) { return g[std::size_t(i - 1) * n + (j - 1)]; }
    Int at(int i, int j) const { return g[std::size_t(i - 1) * n + (j - 1)]; }
};

struct BadExponentMatrix : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Violation {
    enum class Kind { Dimension, Normalization, Cocycle };
    Kind kind;
    std::array<int, 4> indices{};  // (i,j,k,l); l unused for normalization
    std::string message() const;
};

/// Certified factor table {s_ijk}: s_iik = 1 = s_ikk and
/// s_ijk * s_ikl = s_ijl * s_jkl for all subscripts. Instances are only
/// produced by validate() and the generators below, so holding one is
/// proof the relations hold.
class FactorSystem {
public:
    int order() const { return n_; }
    const BaseRing& ring() const { return ring_; }

    /// 1-based lookup of s_ijk.
    Int at(int i, int j, int k) const {
        return table_[(std::size_t(i - 1) * n_ + (k - 1)) + std::size_t(j - 1) * n_ * n_];
    }

    const std::vector<Int>& table() const { return table_; }

    /// Distinct values other than 1 appearing in the table.
    std::vector<Int> nonunit_values() const;

    bool operator==(const FactorSystem&) const = default;

private:
    FactorSystem(int n, BaseRing ring, std::vector<Int> table)
        : n_(n), ring_(ring), table_(std::move(table)) {}

    friend std::variant<FactorSystem, Violation> validate(int n, const BaseRing& ring,
                                                          const std::vector<Int>& table);
    friend FactorSystem coboundary_system(const BaseRing& ring, const ExponentMatrix& g, Int s);
    friend FactorSystem permute(const FactorSystem& sys, const Permutation& tau);

    int n_;
    BaseRing ring_;
    std::vector<Int> table_;
};

/// Check relations (normalization + cocycle) on a raw n^3 table laid out
/// per table_index(). Returns the certified system or the first violated
/// identity in lexicographic index order.
std::variant<FactorSystem, Violation> validate(int n, const BaseRing& ring,
                                               const std::vector<Int>& table);

/// Flat index of entry (i,j,k), 1-based, matching FactorSystem::at.
inline std::size_t table_index(int n, int i, int j, int k) {
    return (std::size_t(i - 1) * n + (k - 1)) + std::size_t(j - 1) * n * n;
}

struct DerivedRelationsReport {
    bool pass = true;
    std::string detail;  // first violated identity, if any
};

/// Re-checks the consequences of the defining relations
/// (s_iji = s_jij = s_ijl s_jil = s_lij s_lji and the three permuted
/// rows) on a certified system. A failure indicates a library bug.
DerivedRelationsReport derived_relations_report(const FactorSystem& sys);

/// s_ijk = s^(g(i,j) + g(j,k) - g(i,k)). The cocycle identity holds as
/// an identity of exponents, so the result always certifies.
FactorSystem coboundary_system(const BaseRing& ring, const ExponentMatrix& g, Int s);

/// Binary system for an ordered partition: class_of maps each index to a
/// label in 1..k (every label used); factors are 1 within a class and s
/// across classes, via g(i,j) = [class(i) > class(j)].
FactorSystem binary_system(const BaseRing& ring, const std::vector<int>& class_of, Int s);

/// All factors 1: the ordinary matrix ring.
FactorSystem trivial_system(const BaseRing& ring, int n);

/// Principal factor matrix S = (s_iji); symmetric with unit diagonal.
Mat principal_matrix(const FactorSystem& sys);

/// Factor matrix S_k = (s_ikj); row k and column k are 1s.
Mat factor_matrix_k(const FactorSystem& sys, int k);

/// t_ijk = s_(tau(i), tau(j), tau(k)); certified by revalidation.
FactorSystem permute(const FactorSystem& sys, const Permutation& tau);

enum class UniquenessOutcome { TablesEqual, TablesDiffer, NotComparable };

/// For two binary systems in {1, s} with s^2 != 1 and s^2 != s: when the
/// principal matrices agree, reports whether the full tables agree
/// (expected yes). Unequal principal matrices give NotComparable.
UniquenessOutcome binary_uniqueness_check(const FactorSystem& a, const FactorSystem& b, Int s);

/// All ordered set partitions of {1..n} as class-label maps: every
/// surjection onto some initial segment 1..k.
std::vector<std::vector<int>> all_ordered_partitions(int n);

}  // namespace fmr
