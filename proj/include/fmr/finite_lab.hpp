#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fmr/formal_matrix.hpp"

namespace fmr {

struct TooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAnIdeal : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Elem = std::uint32_t;

/// Exhaustive element table of a small finite unital ring. Element 0 is
/// the ring zero; operation tables are flat |T| x |T| arrays.
class FiniteRingTable {
public:
    std::size_t size() const { return size_; }
    Elem zero() const { return 0; }
    Elem one() const { return one_; }

    Elem add(Elem a, Elem b) const { return Elem(add_[std::size_t(a) * size_ + b]); }
    Elem mul(Elem a, Elem b) const { return Elem(mul_[std::size_t(a) * size_ + b]); }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    /// a added to itself c times.
    Elem smul(Int c, Elem a) const;

    Int additive_order(Elem a) const;
    bool is_unit(Elem a) const { return unit_[a]; }
    bool is_idempotent(Elem a) const { return mul(a, a) == a; }
    bool is_central(Elem a) const;

    /// Additive generating set (for materialized matrix rings: the
    /// matrix units, diagonal first; otherwise a greedy set).
    const std::vector<Elem>& generators() const { return generators_; }

    static FiniteRingTable from_tables(std::vector<Elem> add, std::vector<Elem> mul, Elem one);

private:
    friend FiniteRingTable materialize(const FormalMatrixRing& K, std::size_t limit);

    void finish();  // neg table, unit scan, greedy generators if unset

    using Cell = std::uint16_t;  // caps ring size at 65535 elements

    std::size_t size_ = 0;
    std::vector<Cell> add_, mul_;
    std::vector<Elem> neg_;
    std::vector<bool> unit_;
    Elem one_ = 0;
    std::vector<Elem> generators_;
};

/// Member indices of a two-sided ideal, sorted ascending.
struct IdealSet {
    std::vector<Elem> members;

    std::size_t size() const { return members.size(); }
    bool contains(Elem e) const;
};

/// Exhaustive table for K = M(n, R, Sigma) over a modular base ring;
/// elements are encoded lexicographically by entries (row-major, first
/// entry most significant). Throws TooLarge past the limit.
FiniteRingTable materialize(const FormalMatrixRing& K, std::size_t limit = 4096);

/// Element encoding used by materialize.
Elem encode_matrix(const FormalMatrixRing& K, const Mat& A);
Mat decode_matrix(const FormalMatrixRing& K, Elem e);

/// Prime radical of a finite ring: {x : 1 - a*x is a unit for all a}.
/// Finite rings are Artinian, so this Jacobson-radical scan computes the
/// prime radical and the result is the largest nilpotent ideal.
IdealSet prime_radical(const FiniteRingTable& T);

bool is_two_sided_ideal(const FiniteRingTable& T, const IdealSet& I);

/// True iff some power of the ideal (span of elementwise products) is 0.
bool ideal_is_nilpotent(const FiniteRingTable& T, const IdealSet& I);

FiniteRingTable quotient(const FiniteRingTable& T, const IdealSet& I);

std::vector<Elem> central_idempotents(const FiniteRingTable& T);

/// Factors cut out by the primitive central idempotents (the corner
/// rings eTe = eT for central e); one entry per factor.
std::vector<FiniteRingTable> central_idempotent_decomposition(const FiniteRingTable& T);

/// External direct product table.
FiniteRingTable direct_product(const FiniteRingTable& A, const FiniteRingTable& B);

/// Cheap isomorphism invariants: size, element counts by additive order,
/// idempotent count, central idempotent count, unit count.
struct RingFingerprint {
    std::size_t size = 0;
    std::vector<std::pair<Int, std::size_t>> order_census;
    std::size_t idempotents = 0;
    std::size_t central_idempotents = 0;
    std::size_t units = 0;

    bool operator==(const RingFingerprint&) const = default;
};

RingFingerprint fingerprint(const FiniteRingTable& T);

struct OracleResult {
    bool isomorphic = false;
    /// witness[x] = image of x, for every element of T1.
    std::optional<std::vector<Elem>> witness;
    std::uint64_t nodes_visited = 0;
};

struct OracleOptions {
    std::size_t limit = 4096;
    bool deterministic = true;  // fixed candidate order: same index, then ascending
};

/// Decides existence of a unital ring isomorphism T1 -> T2 by
/// backtracking over images of the additive generators, pruning by
/// additive order, partial multiplicativity, partial injectivity of the
/// induced additive map, and 1 -> 1. Exhausts the search space before
/// answering false.
OracleResult oracle_isomorphic(const FiniteRingTable& T1, const FiniteRingTable& T2,
                               const OracleOptions& opts = {});

/// Full post-hoc check: bijective, additive, multiplicative, unital.
bool verify_witness(const FiniteRingTable& T1, const FiniteRingTable& T2,
                    const std::vector<Elem>& witness);

}  // namespace fmr
