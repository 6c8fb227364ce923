#include "fmr/formal_matrix.hpp"

namespace fmr {

FormalMatrixRing make_ring(const FactorSystem& sys) { return {sys.ring(), sys}; }

static void check_shape(const FormalMatrixRing& K, const Mat& A) {
    if (A.n != K.order()) throw ShapeMismatch("matrix order does not match the ring");
}

Mat mat_zero(const FormalMatrixRing& K) { return Mat(K.order(), K.ring.norm(0)); }

Mat mat_identity(const FormalMatrixRing& K) { return scalar_embed(K, 1); }

Mat unit_matrix(const FormalMatrixRing& K, int i, int j) {
    Mat E(K.order(), K.ring.norm(0));
    E.at(i, j) = K.ring.norm(1);
    return E;
}

Mat mat_add(const FormalMatrixRing& K, const Mat& A, const Mat& B) {
    check_shape(K, A);
    check_shape(K, B);
    Mat C(A.n);
    for (std::size_t p = 0; p < C.a.size(); ++p) C.a[p] = K.ring.add(A.a[p], B.a[p]);
    return C;
}

Mat mat_neg(const FormalMatrixRing& K, const Mat& A) {
    check_shape(K, A);
    Mat C(A.n);
    for (std::size_t p = 0; p < C.a.size(); ++p) C.a[p] = K.ring.neg(A.a[p]);
    return C;
}

Mat mat_sub(const FormalMatrixRing& K, const Mat& A, const Mat& B) {
    return mat_add(K, A, mat_neg(K, B));
}

static Mat raw_mul(const BaseRing& R, int n, const std::vector<Int>& table, const Mat& A,
                   const Mat& B) {
    Mat C(n, R.norm(0));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            Int acc = 0;
            for (int k = 1; k <= n; ++k) {
                Int s = table[table_index(n, i, k, j)];
                acc = R.add(acc, R.mul(s, R.mul(A.at(i, k), B.at(k, j))));
            }
            C.at(i, j) = acc;
        }
    return C;
}

Mat mat_mul(const FormalMatrixRing& K, const Mat& A, const Mat& B) {
    check_shape(K, A);
    check_shape(K, B);
    return raw_mul(K.ring, K.order(), K.sys.table(), A, B);
}

Mat scalar_embed(const FormalMatrixRing& K, Int r) {
    Mat D(K.order(), K.ring.norm(0));
    for (int i = 1; i <= K.order(); ++i) D.at(i, i) = K.ring.norm(r);
    return D;
}

Mat scalar_mul(const FormalMatrixRing& K, Int r, const Mat& A) {
    check_shape(K, A);
    Mat C(A.n);
    for (std::size_t p = 0; p < C.a.size(); ++p) C.a[p] = K.ring.mul(r, A.a[p]);
    return C;
}

Mat transport(const Permutation& tau, const Mat& A) {
    if (tau.degree() != A.n) throw ShapeMismatch("permutation degree does not match");
    Mat C(A.n);
    for (int i = 1; i <= A.n; ++i)
        for (int j = 1; j <= A.n; ++j) C.at(i, j) = A.at(tau(i), tau(j));
    return C;
}

static std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

static Mat raw_random(const BaseRing& R, int n, std::uint64_t& state) {
    Mat A(n);
    for (auto& v : A.a) {
        std::uint64_t r = splitmix64(state);
        v = R.is_modular() ? Int(r % std::uint64_t(R.modulus())) : Int(r % 19) - 9;
    }
    return A;
}

Mat random_matrix(const FormalMatrixRing& K, std::uint64_t& state) {
    return raw_random(K.ring, K.order(), state);
}

AssocReport associativity_probe_raw(const BaseRing& ring, int n, const std::vector<Int>& table,
                                    long samples, std::uint64_t seed) {
    AssocReport rep;
    rep.seed = seed;
    FormalMatrixRing probe{ring, trivial_system(ring, n)};  // shape source for unit matrices
    auto check = [&](const Mat& A, const Mat& B, const Mat& C) {
        Mat lhs = raw_mul(ring, n, table, raw_mul(ring, n, table, A, B), C);
        Mat rhs = raw_mul(ring, n, table, A, raw_mul(ring, n, table, B, C));
        if (!(lhs == rhs)) {
            rep.pass = false;
            rep.counterexample = {A, B, C};
        }
        return rep.pass;
    };
    // Matrix-unit sweep: (E_ij E_jk) E_kl vs E_ij (E_jk E_kl) differs
    // exactly when the cocycle identity fails at (i,j,k,l).
    for (int i = 1; i <= n && rep.pass; ++i)
        for (int j = 1; j <= n && rep.pass; ++j)
            for (int k = 1; k <= n && rep.pass; ++k)
                for (int l = 1; l <= n && rep.pass; ++l)
                    check(unit_matrix(probe, i, j), unit_matrix(probe, j, k),
                          unit_matrix(probe, k, l));
    std::uint64_t state = seed;
    for (long t = 0; t < samples && rep.pass; ++t) {
        ++rep.samples_run;
        check(raw_random(ring, n, state), raw_random(ring, n, state), raw_random(ring, n, state));
    }
    return rep;
}

AssocReport associativity_probe(const FormalMatrixRing& K, long samples, std::uint64_t seed) {
    return associativity_probe_raw(K.ring, K.order(), K.sys.table(), samples, seed);
}

}  // namespace fmr
