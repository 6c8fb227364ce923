#include "fmr/factor_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fmr {

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(std::size_t(n));
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

bool Permutation::valid() const {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 1 || v > int(images.size()) || seen[std::size_t(v) - 1]) return false;
        seen[std::size_t(v) - 1] = true;
    }
    return true;
}

Permutation Permutation::inverse() const {
    Permutation p;
    p.images.resize(images.size());
    for (int i = 1; i <= degree(); ++i) p.images[std::size_t((*this)(i)) - 1] = i;
    return p;
}

Permutation Permutation::after(const Permutation& other) const {
    Permutation p;
    p.images.resize(images.size());
    for (int i = 1; i <= degree(); ++i) p.images[std::size_t(i) - 1] = (*this)(other(i));
    return p;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<Permutation> out;
    Permutation p = Permutation::identity(n);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.images.begin(), p.images.end()));
    return out;
}

std::string Violation::message() const {
    switch (kind) {
        case Kind::Dimension:
            return "table dimensions do not match the declared order";
        case Kind::Normalization:
            return "normalization s_iik = 1 = s_ikk violated at (" + std::to_string(indices[0]) +
                   "," + std::to_string(indices[1]) + "," + std::to_string(indices[2]) + ")";
        case Kind::Cocycle:
            return "cocycle identity violated at (" + std::to_string(indices[0]) + "," +
                   std::to_string(indices[1]) + "," + std::to_string(indices[2]) + "," +
                   std::to_string(indices[3]) + ")";
    }
    return "";
}

std::variant<FactorSystem, Violation> validate(int n, const BaseRing& ring,
                                               const std::vector<Int>& table) {
    if (n < 2 || table.size() != std::size_t(n) * n * n)
        return Violation{Violation::Kind::Dimension, {n, 0, 0, 0}};
    std::vector<Int> t(table.size());
    for (std::size_t p = 0; p < table.size(); ++p) t[p] = ring.norm(table[p]);

    auto at = [&](int i, int j, int k) { return t[table_index(n, i, j, k)]; };
    const Int one = ring.norm(1);

    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if ((i == j && at(i, j, k) != one) || (j == k && at(i, j, k) != one))
                    return Violation{Violation::Kind::Normalization, {i, j, k, 0}};
            }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = 1; l <= n; ++l) {
                    Int lhs = ring.mul(at(i, j, k), at(i, k, l));
                    Int rhs = ring.mul(at(i, j, l), at(j, k, l));
                    if (lhs != rhs) return Violation{Violation::Kind::Cocycle, {i, j, k, l}};
                }
    return FactorSystem(n, ring, std::move(t));
}

std::vector<Int> FactorSystem::nonunit_values() const {
    const Int one = ring_.norm(1);
    std::set<Int> vals;
    for (Int v : table_)
        if (v != one) vals.insert(v);
    return {vals.begin(), vals.end()};
}

DerivedRelationsReport derived_relations_report(const FactorSystem& sys) {
    const int n = sys.order();
    const BaseRing& R = sys.ring();
    auto fail = [](const std::string& what, int i, int j, int k) {
        return DerivedRelationsReport{false, what + " at (" + std::to_string(i) + "," +
                                                 std::to_string(j) + "," + std::to_string(k) + ")"};
    };
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int l = 1; l <= n; ++l) {
                Int siji = sys.at(i, j, i);
                if (siji != sys.at(j, i, j)) return fail("s_iji = s_jij", i, j, l);
                if (siji != R.mul(sys.at(i, j, l), sys.at(j, i, l)))
                    return fail("s_iji = s_ijl*s_jil", i, j, l);
                if (siji != R.mul(sys.at(l, i, j), sys.at(l, j, i)))
                    return fail("s_iji = s_lij*s_lji", i, j, l);
            }
    // The three rows obtained by permuting subscripts, checked verbatim.
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (sys.at(i, j, i) != R.mul(sys.at(k, i, j), sys.at(k, j, i)))
                    return fail("row 1", i, j, k);
                if (sys.at(j, k, j) != R.mul(sys.at(i, j, k), sys.at(i, k, j)))
                    return fail("row 2", i, j, k);
                if (sys.at(i, k, i) != R.mul(sys.at(j, i, k), sys.at(j, k, i)))
                    return fail("row 3", i, j, k);
            }
    return {};
}

static void check_exponent_matrix(const ExponentMatrix& g) {
    const int n = g.n;
    for (int i = 1; i <= n; ++i)
        if (g.at(i, i) != 0)
            throw BadExponentMatrix("nonzero diagonal at (" + std::to_string(i) + "," +
                                    std::to_string(i) + ")");
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (g.at(i, j) < 0)
                throw BadExponentMatrix("negative entry at (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
            for (int k = 1; k <= n; ++k)
                if (g.at(i, k) > g.at(i, j) + g.at(j, k))
                    throw BadExponentMatrix("triangle inequality fails at (" + std::to_string(i) +
                                            "," + std::to_string(j) + "," + std::to_string(k) +
                                            ")");
        }
}

FactorSystem coboundary_system(const BaseRing& ring, const ExponentMatrix& g, Int s) {
    check_exponent_matrix(g);
    const int n = g.n;
    std::vector<Int> t(std::size_t(n) * n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                Int e = g.at(i, j) + g.at(j, k) - g.at(i, k);
                t[table_index(n, i, j, k)] = ring.pow(s, e);
            }
    return FactorSystem(n, ring, std::move(t));
}

FactorSystem binary_system(const BaseRing& ring, const std::vector<int>& class_of, Int s) {
    const int n = int(class_of.size());
    if (n < 2) throw BadClassMap("need at least two indices");
    int k = 0;
    for (int c : class_of) k = std::max(k, c);
    std::vector<bool> used(std::size_t(k), false);
    for (int c : class_of) {
        if (c < 1 || c > k) throw BadClassMap("class labels must be 1..k");
        used[std::size_t(c) - 1] = true;
    }
    for (bool u : used)
        if (!u) throw BadClassMap("every class label 1..k must be used");
    ExponentMatrix g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            g.at(i, j) = class_of[std::size_t(i) - 1] > class_of[std::size_t(j) - 1] ? 1 : 0;
    return coboundary_system(ring, g, s);
}

FactorSystem trivial_system(const BaseRing& ring, int n) {
    return coboundary_system(ring, ExponentMatrix(n), 1);
}

Mat principal_matrix(const FactorSystem& sys) {
    Mat S(sys.order());
    for (int i = 1; i <= sys.order(); ++i)
        for (int j = 1; j <= sys.order(); ++j) S.at(i, j) = sys.at(i, j, i);
    return S;
}

Mat factor_matrix_k(const FactorSystem& sys, int k) {
    if (k < 1 || k > sys.order()) throw IndexOutOfRange("factor matrix index out of range");
    Mat S(sys.order());
    for (int i = 1; i <= sys.order(); ++i)
        for (int j = 1; j <= sys.order(); ++j) S.at(i, j) = sys.at(i, k, j);
    return S;
}

FactorSystem permute(const FactorSystem& sys, const Permutation& tau) {
    const int n = sys.order();
    if (!tau.valid() || tau.degree() != n)
        throw std::invalid_argument("permutation degree must match the system order");
    std::vector<Int> t(std::size_t(n) * n * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                t[table_index(n, i, j, k)] = sys.at(tau(i), tau(j), tau(k));
    auto out = validate(n, sys.ring(), t);
    if (std::holds_alternative<Violation>(out))
        throw std::logic_error("permuted factor system failed validation: " +
                               std::get<Violation>(out).message());
    return std::get<FactorSystem>(std::move(out));
}

static bool is_binary_in(const FactorSystem& sys, Int s) {
    const Int one = sys.ring().norm(1);
    const Int sv = sys.ring().norm(s);
    for (Int v : sys.table())
        if (v != one && v != sv) return false;
    return true;
}

UniquenessOutcome binary_uniqueness_check(const FactorSystem& a, const FactorSystem& b, Int s) {
    const BaseRing& R = a.ring();
    if (!(R == b.ring()) || a.order() != b.order())
        throw std::invalid_argument("systems must share a ring and order");
    Int sv = R.norm(s);
    Int s2 = R.mul(sv, sv);
    if (s2 == R.norm(1) || s2 == sv)
        throw std::invalid_argument("uniqueness check requires s^2 != 1 and s^2 != s");
    if (!is_binary_in(a, sv) || !is_binary_in(b, sv))
        throw std::invalid_argument("systems must be binary in {1, s}");
    if (!(principal_matrix(a) == principal_matrix(b))) return UniquenessOutcome::NotComparable;
    return a.table() == b.table() ? UniquenessOutcome::TablesEqual
                                  : UniquenessOutcome::TablesDiffer;
}

std::vector<std::vector<int>> all_ordered_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(std::size_t(n), 1);
    // Enumerate all label maps onto an initial segment 1..k.
    auto rec = [&](auto&& self, int pos, int maxlab) -> void {
        if (pos > n) {
            out.push_back(cur);
            return;
        }
        for (int lab = 1; lab <= n; ++lab) {
            cur[std::size_t(pos) - 1] = lab;
            int newmax = std::max(maxlab, lab);
            // Prune maps that can no longer hit every label up to newmax.
            bool feasible = true;
            std::vector<bool> used(std::size_t(newmax), false);
            for (int q = 1; q <= pos; ++q) used[std::size_t(cur[std::size_t(q) - 1]) - 1] = true;
            int missing = 0;
            for (bool u : used)
                if (!u) ++missing;
            if (missing > n - pos) feasible = false;
            if (feasible) self(self, pos + 1, newmax);
        }
    };
    rec(rec, 1, 0);
    return out;
}

}  // namespace fmr
