#pragma once

#include <cstdint>
#include <optional>

#include "fmr/factor_system.hpp"
#include "fmr/mat.hpp"

namespace fmr {

/// The ring K = M(n, R, Sigma). Matrices do not carry their ring; every
/// operation takes the handle explicitly, so the same raw matrix can be
/// viewed in M(n,R,Sigma) and M(n,R,tau Sigma) during transport.
struct FormalMatrixRing {
    BaseRing ring;
    FactorSystem sys;

    int order() const { return sys.order(); }
};

FormalMatrixRing make_ring(const FactorSystem& sys);

Mat mat_zero(const FormalMatrixRing& K);
Mat mat_identity(const FormalMatrixRing& K);

/// Matrix unit E_ij.
Mat unit_matrix(const FormalMatrixRing& K, int i, int j);

Mat mat_add(const FormalMatrixRing& K, const Mat& A, const Mat& B);
Mat mat_neg(const FormalMatrixRing& K, const Mat& A);
Mat mat_sub(const FormalMatrixRing& K, const Mat& A, const Mat& B);

/// Twisted product: c_ij = sum_k s_ikj * a_ik * b_kj.
Mat mat_mul(const FormalMatrixRing& K, const Mat& A, const Mat& B);

/// Diagonal embedding r -> r*E; a ring homomorphism R -> K.
Mat scalar_embed(const FormalMatrixRing& K, Int r);

Mat scalar_mul(const FormalMatrixRing& K, Int r, const Mat& A);

/// Transport isomorphism A -> tau A with (tau A)_ij = a_(tau(i), tau(j));
/// additive bijection M(n,R,Sigma) -> M(n,R,tau Sigma) that is
/// multiplicative between the two twisted products.
Mat transport(const Permutation& tau, const Mat& A);

struct AssocReport {
    bool pass = true;
    std::uint64_t seed = 0;
    long samples_run = 0;
    std::optional<std::array<Mat, 3>> counterexample;
};

/// (AB)C vs A(BC) on all matrix-unit triples E_ij, E_jk, E_kl first
/// (a broken cocycle quadruple shows up there), then on seeded random
/// triples. Expected to pass for every certified system.
AssocReport associativity_probe(const FormalMatrixRing& K, long samples, std::uint64_t seed);

/// Same probe against an arbitrary (possibly invalid) raw table.
AssocReport associativity_probe_raw(const BaseRing& ring, int n, const std::vector<Int>& table,
                                    long samples, std::uint64_t seed);

/// Seeded uniform random matrix over K's base ring (modular rings only).
Mat random_matrix(const FormalMatrixRing& K, std::uint64_t& state);

}  // namespace fmr
