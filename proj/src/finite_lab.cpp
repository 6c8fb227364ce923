#include "fmr/finite_lab.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace fmr {

Elem FiniteRingTable::smul(Int c, Elem a) const {
    Elem r = 0;
    for (Int t = 0; t < c; ++t) r = add(r, a);
    return r;
}

Int FiniteRingTable::additive_order(Elem a) const {
    Int ord = 1;
    Elem x = a;
    while (x != 0) {
        x = add(x, a);
        ++ord;
    }
    return ord;
}

bool FiniteRingTable::is_central(Elem a) const {
    for (Elem x = 0; x < size_; ++x)
        if (mul(a, x) != mul(x, a)) return false;
    return true;
}

void FiniteRingTable::finish() {
    neg_.assign(size_, 0);
    for (Elem a = 0; a < size_; ++a)
        for (Elem b = 0; b < size_; ++b)
            if (add(a, b) == 0) {
                neg_[a] = b;
                break;
            }
    unit_.assign(size_, false);
    for (Elem a = 0; a < size_; ++a)
        for (Elem b = 0; b < size_; ++b)
            if (mul(a, b) == one_ && mul(b, a) == one_) {
                unit_[a] = true;
                break;
            }
    if (generators_.empty()) {
        // Greedy additive generating set.
        std::vector<bool> in_span(size_, false);
        in_span[0] = true;
        std::size_t span_size = 1;
        std::vector<Elem> span{0};
        for (Elem e = 1; e < size_ && span_size < size_; ++e) {
            if (in_span[e]) continue;
            generators_.push_back(e);
            std::size_t base = span.size();
            Elem mult = e;
            while (mult != 0) {
                for (std::size_t i = 0; i < base; ++i) {
                    Elem y = add(span[i], mult);
                    if (!in_span[y]) {
                        in_span[y] = true;
                        span.push_back(y);
                        ++span_size;
                    }
                }
                mult = add(mult, e);
            }
        }
    }
}

FiniteRingTable FiniteRingTable::from_tables(std::vector<Elem> add, std::vector<Elem> mul,
                                             Elem one) {
    FiniteRingTable T;
    std::size_t n = 0;
    while (n * n < add.size()) ++n;
    if (n * n != add.size() || mul.size() != add.size())
        throw std::invalid_argument("operation tables must be square and equally sized");
    if (n > 65535) throw TooLarge("ring exceeds the 16-bit table capacity");
    T.size_ = n;
    T.add_.assign(add.begin(), add.end());
    T.mul_.assign(mul.begin(), mul.end());
    T.one_ = one;
    T.finish();
    return T;
}

Elem encode_matrix(const FormalMatrixRing& K, const Mat& A) {
    const Int m = K.ring.modulus();
    Elem e = 0;
    for (Int v : A.a) e = Elem(e * Elem(m) + Elem(K.ring.norm(v)));
    return e;
}

Mat decode_matrix(const FormalMatrixRing& K, Elem e) {
    const Int m = K.ring.modulus();
    const int n = K.order();
    Mat A(n);
    for (std::size_t p = A.a.size(); p-- > 0;) {
        A.a[p] = Int(e % Elem(m));
        e /= Elem(m);
    }
    return A;
}

FiniteRingTable materialize(const FormalMatrixRing& K, std::size_t limit) {
    if (!K.ring.is_modular())
        throw TooLarge("only modular base rings can be materialized");
    const int n = K.order();
    const std::size_t m = std::size_t(K.ring.modulus());
    std::size_t count = 1;
    for (int p = 0; p < n * n; ++p) {
        count *= m;
        if (count > limit)
            throw TooLarge("ring has more than " + std::to_string(limit) + " elements");
    }
    if (count > 65535) throw TooLarge("ring exceeds the 16-bit table capacity");

    FiniteRingTable T;
    T.size_ = count;
    T.add_.resize(count * count);
    T.mul_.resize(count * count);
    T.one_ = encode_matrix(K, mat_identity(K));

    // Per-element digit strings, most significant digit first.
    const int digits = n * n;
    std::vector<std::uint8_t> dig(count * std::size_t(digits));
    for (Elem e = 0; e < count; ++e) {
        Elem x = e;
        for (int p = digits; p-- > 0;) {
            dig[std::size_t(e) * digits + p] = std::uint8_t(x % m);
            x /= Elem(m);
        }
    }
    for (Elem a = 0; a < count; ++a)
        for (Elem b = 0; b < count; ++b) {
            Elem s = 0;
            for (int p = 0; p < digits; ++p)
                s = Elem(s * m + (dig[std::size_t(a) * digits + p] +
                                  dig[std::size_t(b) * digits + p]) % m);
            T.add_[std::size_t(a) * count + b] = FiniteRingTable::Cell(s);
        }
    Mat A(n), B(n);
    for (Elem a = 0; a < count; ++a) {
        for (int p = 0; p < digits; ++p) A.a[std::size_t(p)] = dig[std::size_t(a) * digits + p];
        for (Elem b = 0; b < count; ++b) {
            for (int p = 0; p < digits; ++p) B.a[std::size_t(p)] = dig[std::size_t(b) * digits + p];
            T.mul_[std::size_t(a) * count + b] =
                FiniteRingTable::Cell(encode_matrix(K, mat_mul(K, A, B)));
        }
    }

    // Matrix units as additive generators, diagonal first.
    for (int i = 1; i <= n; ++i) T.generators_.push_back(encode_matrix(K, unit_matrix(K, i, i)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) T.generators_.push_back(encode_matrix(K, unit_matrix(K, i, j)));

    T.finish();
    return T;
}

bool IdealSet::contains(Elem e) const {
    return std::binary_search(members.begin(), members.end(), e);
}

IdealSet prime_radical(const FiniteRingTable& T) {
    IdealSet I;
    for (Elem x = 0; x < T.size(); ++x) {
        bool quasi = true;
        for (Elem a = 0; a < T.size() && quasi; ++a)
            quasi = T.is_unit(T.sub(T.one(), T.mul(a, x)));
        if (quasi) I.members.push_back(x);
    }
    return I;
}

bool is_two_sided_ideal(const FiniteRingTable& T, const IdealSet& I) {
    std::vector<bool> in(T.size(), false);
    for (Elem e : I.members) in[e] = true;
    if (!in[0]) return false;
    for (Elem a : I.members) {
        for (Elem b : I.members)
            if (!in[T.add(a, b)]) return false;
        for (Elem x = 0; x < T.size(); ++x)
            if (!in[T.mul(a, x)] || !in[T.mul(x, a)]) return false;
    }
    return true;
}

static std::vector<Elem> additive_span(const FiniteRingTable& T, const std::set<Elem>& gens) {
    std::vector<bool> in(T.size(), false);
    std::vector<Elem> span{0};
    in[0] = true;
    for (Elem g : gens) {
        if (in[g]) continue;
        std::size_t base = span.size();
        Elem mult = g;
        while (mult != 0) {
            for (std::size_t i = 0; i < base; ++i) {
                Elem y = T.add(span[i], mult);
                if (!in[y]) {
                    in[y] = true;
                    span.push_back(y);
                }
            }
            mult = T.add(mult, g);
        }
    }
    std::sort(span.begin(), span.end());
    return span;
}

bool ideal_is_nilpotent(const FiniteRingTable& T, const IdealSet& I) {
    std::vector<Elem> cur = I.members;
    for (std::size_t round = 0; round < T.size(); ++round) {
        if (cur.size() == 1 && cur[0] == 0) return true;
        std::set<Elem> prods;
        for (Elem a : cur)
            for (Elem b : cur) prods.insert(T.mul(a, b));
        std::vector<Elem> next = additive_span(T, prods);
        if (next == cur) return false;  // stabilized above zero
        cur = std::move(next);
    }
    return false;
}

FiniteRingTable quotient(const FiniteRingTable& T, const IdealSet& I) {
    if (!is_two_sided_ideal(T, I)) throw NotAnIdeal("member set is not a two-sided ideal");
    std::vector<Elem> rep(T.size());
    for (Elem x = 0; x < T.size(); ++x) {
        Elem r = x;
        for (Elem i : I.members) r = std::min(r, T.add(x, i));
        rep[x] = r;
    }
    std::vector<Elem> reps;
    for (Elem x = 0; x < T.size(); ++x)
        if (rep[x] == x) reps.push_back(x);
    std::map<Elem, Elem> id;
    for (std::size_t k = 0; k < reps.size(); ++k) id[reps[k]] = Elem(k);

    const std::size_t q = reps.size();
    std::vector<Elem> qadd(q * q), qmul(q * q);
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            qadd[a * q + b] = id[rep[T.add(reps[a], reps[b])]];
            qmul[a * q + b] = id[rep[T.mul(reps[a], reps[b])]];
        }
    return FiniteRingTable::from_tables(std::move(qadd), std::move(qmul), id[rep[T.one()]]);
}

std::vector<Elem> central_idempotents(const FiniteRingTable& T) {
    std::vector<Elem> out;
    for (Elem e = 0; e < T.size(); ++e)
        if (T.is_idempotent(e) && T.is_central(e)) out.push_back(e);
    return out;
}

std::vector<FiniteRingTable> central_idempotent_decomposition(const FiniteRingTable& T) {
    std::vector<Elem> cents = central_idempotents(T);
    // Primitive = minimal nonzero in the order f <= e iff f*e = f.
    std::vector<Elem> atoms;
    for (Elem e : cents) {
        if (e == 0) continue;
        bool minimal = true;
        for (Elem f : cents)
            if (f != 0 && f != e && T.mul(f, e) == f) {
                minimal = false;
                break;
            }
        if (minimal) atoms.push_back(e);
    }
    std::vector<FiniteRingTable> factors;
    for (Elem e : atoms) {
        std::set<Elem> elems;
        for (Elem x = 0; x < T.size(); ++x) elems.insert(T.mul(e, x));
        std::vector<Elem> list(elems.begin(), elems.end());
        std::map<Elem, Elem> id;
        for (std::size_t k = 0; k < list.size(); ++k) id[list[k]] = Elem(k);
        const std::size_t q = list.size();
        std::vector<Elem> fadd(q * q), fmul(q * q);
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = 0; b < q; ++b) {
                fadd[a * q + b] = id[T.add(list[a], list[b])];
                fmul[a * q + b] = id[T.mul(list[a], list[b])];
            }
        factors.push_back(
            FiniteRingTable::from_tables(std::move(fadd), std::move(fmul), id[e]));
    }
    return factors;
}

FiniteRingTable direct_product(const FiniteRingTable& A, const FiniteRingTable& B) {
    const std::size_t q = A.size() * B.size();
    auto pack = [&](Elem a, Elem b) { return Elem(a * B.size() + b); };
    std::vector<Elem> padd(q * q), pmul(q * q);
    for (Elem a1 = 0; a1 < A.size(); ++a1)
        for (Elem b1 = 0; b1 < B.size(); ++b1)
            for (Elem a2 = 0; a2 < A.size(); ++a2)
                for (Elem b2 = 0; b2 < B.size(); ++b2) {
                    Elem x = pack(a1, b1), y = pack(a2, b2);
                    padd[std::size_t(x) * q + y] = pack(A.add(a1, a2), B.add(b1, b2));
                    pmul[std::size_t(x) * q + y] = pack(A.mul(a1, a2), B.mul(b1, b2));
                }
    return FiniteRingTable::from_tables(std::move(padd), std::move(pmul),
                                        pack(A.one(), B.one()));
}

RingFingerprint fingerprint(const FiniteRingTable& T) {
    RingFingerprint fp;
    fp.size = T.size();
    std::map<Int, std::size_t> census;
    for (Elem x = 0; x < T.size(); ++x) {
        ++census[T.additive_order(x)];
        if (T.is_idempotent(x)) {
            ++fp.idempotents;
            if (T.is_central(x)) ++fp.central_idempotents;
        }
        if (T.is_unit(x)) ++fp.units;
    }
    fp.order_census.assign(census.begin(), census.end());
    return fp;
}

namespace {

struct SearchState {
    const FiniteRingTable& T1;
    const FiniteRingTable& T2;
    const std::vector<Elem>& gens;
    std::vector<Int> ord1, ord2;
    std::vector<Int> gen_ord;
    std::vector<std::int64_t> phi;   // T1 elem -> T2 elem, -1 unassigned
    std::vector<bool> used;          // T2 image taken
    std::vector<Elem> span;          // T1 elems with phi assigned
    std::vector<Elem> images;        // chosen generator images
    std::uint64_t nodes = 0;
    OracleResult result;

    SearchState(const FiniteRingTable& a, const FiniteRingTable& b)
        : T1(a), T2(b), gens(a.generators()) {
        ord1.resize(T1.size());
        for (Elem x = 0; x < T1.size(); ++x) ord1[x] = T1.additive_order(x);
        ord2.resize(T2.size());
        for (Elem x = 0; x < T2.size(); ++x) ord2[x] = T2.additive_order(x);
        for (Elem g : gens) gen_ord.push_back(ord1[g]);
        phi.assign(T1.size(), -1);
        phi[0] = 0;
        used.assign(T2.size(), false);
        used[0] = true;
        span = {0};
    }

    // Extend phi over the coset layers of the new generator; false on an
    // injectivity or consistency collision. Records what it touched so
    // the caller can undo.
    bool extend(Elem g, Elem h, std::vector<Elem>& touched) {
        std::size_t base = span.size();
        Elem gc = g, hc = h;
        while (gc != 0 || hc != 0) {
            if (gc == 0 || hc == 0) return false;  // order mismatch along the way
            for (std::size_t i = 0; i < base; ++i) {
                Elem y = T1.add(span[i], gc);
                Elem img = T2.add(Elem(phi[span[i]]), hc);
                if (phi[y] != -1) {
                    if (phi[y] != img) return false;
                } else {
                    if (used[img]) return false;
                    phi[y] = img;
                    used[img] = true;
                    span.push_back(y);
                    touched.push_back(y);
                }
            }
            gc = T1.add(gc, g);
            hc = T2.add(hc, h);
        }
        return true;
    }

    void undo(const std::vector<Elem>& touched) {
        for (Elem y : touched) {
            used[std::size_t(phi[y])] = false;
            phi[y] = -1;
        }
        span.resize(span.size() - touched.size());
    }

    // Multiplicativity on every assigned generator pair whose product
    // already has an image, plus the 1 -> 1 constraint when decided.
    bool consistent(std::size_t depth) {
        for (std::size_t a = 0; a <= depth; ++a)
            for (std::size_t b = 0; b <= depth; ++b) {
                Elem p = T1.mul(gens[a], gens[b]);
                if (phi[p] == -1) continue;
                if (Elem(phi[p]) != T2.mul(images[a], images[b])) return false;
            }
        if (phi[T1.one()] != -1 && Elem(phi[T1.one()]) != T2.one()) return false;
        return true;
    }

    bool search(std::size_t depth) {
        if (depth == gens.size()) {
            if (span.size() != T1.size()) return false;  // generators must span
            std::vector<Elem> w(T1.size());
            for (Elem x = 0; x < T1.size(); ++x) w[x] = Elem(phi[x]);
            if (!verify_witness(T1, T2, w)) return false;
            result.isomorphic = true;
            result.witness = std::move(w);
            return true;
        }
        Elem g = gens[depth];
        if (phi[g] != -1) {
            // Generator already reached through earlier cosets.
            images.push_back(Elem(phi[g]));
            bool ok = consistent(depth) && search(depth + 1);
            images.pop_back();
            return ok;
        }
        auto try_image = [&](Elem h) {
            if (used[h] || ord2[h] != gen_ord[depth]) return false;
            ++nodes;
            std::vector<Elem> touched;
            if (extend(g, h, touched)) {
                images.push_back(h);
                if (consistent(depth) && search(depth + 1)) return true;
                images.pop_back();
            }
            undo(touched);
            return false;
        };
        // Same-index candidate first, so identical tables get the identity
        // map without a detour through a nontrivial automorphism.
        if (g < T2.size() && try_image(g)) return true;
        for (Elem h = 0; h < T2.size(); ++h) {
            if (h == g) continue;
            if (try_image(h)) return true;
        }
        return false;
    }
};

}  // namespace

bool verify_witness(const FiniteRingTable& T1, const FiniteRingTable& T2,
                    const std::vector<Elem>& w) {
    if (T1.size() != T2.size() || w.size() != T1.size()) return false;
    std::vector<bool> hit(T2.size(), false);
    for (Elem x = 0; x < T1.size(); ++x) {
        if (w[x] >= T2.size() || hit[w[x]]) return false;
        hit[w[x]] = true;
    }
    if (w[T1.one()] != T2.one()) return false;
    for (Elem x = 0; x < T1.size(); ++x)
        for (Elem y = 0; y < T1.size(); ++y) {
            if (w[T1.add(x, y)] != T2.add(w[x], w[y])) return false;
            if (w[T1.mul(x, y)] != T2.mul(w[x], w[y])) return false;
        }
    return true;
}

OracleResult oracle_isomorphic(const FiniteRingTable& T1, const FiniteRingTable& T2,
                               const OracleOptions& opts) {
    if (T1.size() > opts.limit || T2.size() > opts.limit)
        throw TooLarge("ring exceeds the oracle size limit");
    OracleResult out;
    if (T1.size() != T2.size()) return out;
    // Additive order census must match; a mismatch already rules out an
    // additive isomorphism.
    std::map<Int, std::size_t> c1, c2;
    for (Elem x = 0; x < T1.size(); ++x) ++c1[T1.additive_order(x)];
    for (Elem x = 0; x < T2.size(); ++x) ++c2[T2.additive_order(x)];
    if (c1 != c2) return out;

    SearchState st(T1, T2);
    st.search(0);
    st.result.nodes_visited = st.nodes;
    return st.result;
}

}  // namespace fmr
