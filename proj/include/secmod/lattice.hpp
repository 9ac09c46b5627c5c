#pragma once

// Full submodule lattice of a finite module, with the supporting structures
// the classification predicates quantify over: containment bitsets, cover
// (Hasse) edges, completely irreducible / prime / second / minimal flags,
// scalar-image index tables, and the second radical in both of its modes.
//
// Enumeration seeds with every cyclic submodule and closes under pairwise
// sums; canonical forms deduplicate. Node order is deterministic: ascending
// subgroup order, then lexicographic canonical matrix.

#include <cstdint>
#include <unordered_map>

#include "module.hpp"

namespace secmod {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : words_((n + 63) / 64, 0), size_(n) {}

    void set(std::size_t i) { words_[i >> 6] |= 1ull << (i & 63); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    std::size_t size() const { return size_; }

    friend std::size_t and_popcount(const BitVec& a, const BitVec& b) {
        std::size_t c = 0;
        for (std::size_t w = 0; w < a.words_.size(); ++w)
            c += static_cast<std::size_t>(__builtin_popcountll(a.words_[w] & b.words_[w]));
        return c;
    }

private:
    std::vector<std::uint64_t> words_;
    std::size_t size_ = 0;
};

namespace detail {
struct MatrixKey {
    std::vector<i64> flat;
    bool operator==(const MatrixKey&) const = default;
};
struct MatrixKeyHash {
    std::size_t operator()(const MatrixKey& k) const {
        std::size_t h = 1469598103934665603ull;
        for (i64 v : k.flat) {
            h ^= static_cast<std::size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};
inline MatrixKey key_of(const Submodule& s) { return MatrixKey{s.matrix().a}; }
} // namespace detail

struct SubLattice {
    FinModule parent;
    std::vector<Submodule> nodes;
    int zero_index = 0;
    int full_index = 0;

    std::vector<std::vector<int>> covers_above; // minimal strict supersets per node
    std::vector<char> flag_ci, flag_prime, flag_second, flag_minimal;
    std::vector<int> ci_list;                 // node indices, ascending
    std::vector<std::vector<int>> ci_meet;    // ci_meet[i][j]: node of CI_i n CI_j
    std::vector<std::vector<int>> scalar_img; // [a][node] -> node of a*N
    std::vector<i64> ann_gen;                 // exponent of each node
    std::vector<int> sec_idx;                 // node of sec(N) per node

    int size() const { return static_cast<int>(nodes.size()); }
    bool contained(int i, int j) const { return sups_[static_cast<size_t>(i)].test(static_cast<size_t>(j)); }
    const BitVec& subsets_of(int i) const { return subs_[static_cast<size_t>(i)]; }
    const BitVec& supersets_of(int i) const { return sups_[static_cast<size_t>(i)]; }

    int node_of(const Submodule& s) const {
        auto it = index_.find(detail::key_of(s));
        if (it == index_.end()) throw std::logic_error("submodule missing from lattice");
        return it->second;
    }

    // scaling a module element and ranking it, per the parent's element order
    const std::vector<Element>& elements() const { return elements_; }
    const BitVec& member_bits(int node) const { return member_bits_[static_cast<size_t>(node)]; }
    std::size_t scaled_rank(i64 a, std::size_t element_rank) const {
        return scale_rank_[static_cast<size_t>(a)][element_rank];
    }

    friend SubLattice enumerate_submodules(const FinModule&, std::size_t, std::size_t);

private:
    std::unordered_map<detail::MatrixKey, int, detail::MatrixKeyHash> index_;
    std::vector<BitVec> subs_, sups_;
    std::vector<Element> elements_;
    std::vector<BitVec> member_bits_;
    std::vector<std::vector<std::uint32_t>> scale_rank_; // [a][rank] -> rank of a*m
};

/// Decide primeness of a proper submodule by the literal quantifier over ring
/// representatives and module elements: rm in P forces m in P or rM <= P.
inline bool is_prime_submodule(const Submodule& p,
                               std::size_t element_bound = kDefaultElementBound) {
    if (p.is_full()) throw std::invalid_argument("is_prime_submodule: submodule must be proper");
    const FinModule& m = p.parent();
    Submodule full = full_submodule(m);
    auto elements = elements_of(m, element_bound);
    for (i64 r = 0; r < m.ring; ++r) {
        if (p.contains(scalar_image(r, full))) continue; // r in (P : M)
        for (const Element& e : elements)
            if (p.contains_element(m.scale(r, e)) && !p.contains_element(e)) return false;
    }
    return true;
}

/// Socle-style second radical: sum over primes p of the p-torsion of N.
/// Needs no lattice; agrees with the definitional mode (tested exhaustively).
inline Submodule second_radical(const Submodule& n) {
    const FinModule& m = n.parent();
    Submodule acc = zero_submodule(m);
    for (auto [p, e] : factorize(m.exponent()).primes) {
        Submodule torsion = colon(zero_submodule(m), make_ideal(m.ring_spec(), p));
        acc = sum(acc, intersect(n, torsion));
    }
    return acc;
}

inline SubLattice enumerate_submodules(const FinModule& m,
                                       std::size_t lattice_bound = kDefaultLatticeBound,
                                       std::size_t element_bound = kDefaultElementBound) {
    SubLattice L;
    L.parent = m;
    L.elements_ = elements_of(m, element_bound);

    // seed: zero + every cyclic submodule; close under pairwise sums
    std::vector<Submodule> pool;
    std::unordered_map<detail::MatrixKey, int, detail::MatrixKeyHash> seen;
    auto push = [&](Submodule s) {
        auto key = detail::key_of(s);
        if (seen.emplace(key, static_cast<int>(pool.size())).second) {
            pool.push_back(std::move(s));
            if (pool.size() > lattice_bound)
                throw BoundExceeded("submodule lattice bound exceeded", pool.size());
        }
    };
    push(zero_submodule(m));
    for (const Element& e : L.elements_) push(span(m, {e}));
    for (std::size_t p = 0; p < pool.size(); ++p)
        for (std::size_t q = 0; q <= p; ++q) push(sum(pool[p], pool[q]));

    std::sort(pool.begin(), pool.end(), [](const Submodule& a, const Submodule& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.matrix().a < b.matrix().a;
    });
    L.nodes = std::move(pool);
    const int count = L.size();
    for (int i = 0; i < count; ++i) L.index_.emplace(detail::key_of(L.nodes[static_cast<size_t>(i)]), i);
    L.zero_index = 0;
    L.full_index = count - 1;

    // containment bitsets
    L.subs_.assign(static_cast<size_t>(count), BitVec(static_cast<size_t>(count)));
    L.sups_.assign(static_cast<size_t>(count), BitVec(static_cast<size_t>(count)));
    for (int i = 0; i < count; ++i)
        for (int j = i; j < count; ++j) {
            // node order is ascending, so only j >= i can contain i
            if (i == j || L.nodes[static_cast<size_t>(j)].contains(L.nodes[static_cast<size_t>(i)])) {
                L.subs_[static_cast<size_t>(j)].set(static_cast<size_t>(i));
                L.sups_[static_cast<size_t>(i)].set(static_cast<size_t>(j));
            }
        }

    // covers: j covers i iff nothing lies strictly between
    L.covers_above.assign(static_cast<size_t>(count), {});
    for (int i = 0; i < count; ++i)
        for (int j = i + 1; j < count; ++j)
            if (L.contained(i, j) && and_popcount(L.sups_[static_cast<size_t>(i)], L.subs_[static_cast<size_t>(j)]) == 2)
                L.covers_above[static_cast<size_t>(i)].push_back(j);

    // element membership bitmaps and the scaling rank table
    const std::size_t order = L.elements_.size();
    L.member_bits_.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        BitVec bits(order);
        for (const Element& e : elements_of(L.nodes[static_cast<size_t>(i)], element_bound))
            bits.set(element_rank(m, e));
        L.member_bits_.push_back(std::move(bits));
    }
    L.scale_rank_.assign(static_cast<size_t>(m.ring), std::vector<std::uint32_t>(order));
    for (i64 a = 0; a < m.ring; ++a)
        for (std::size_t r = 0; r < order; ++r)
            L.scale_rank_[static_cast<size_t>(a)][r] =
                static_cast<std::uint32_t>(element_rank(m, m.scale(a, L.elements_[r])));

    // scalar image index table
    L.scalar_img.assign(static_cast<size_t>(m.ring), std::vector<int>(static_cast<size_t>(count)));
    for (i64 a = 0; a < m.ring; ++a)
        for (int i = 0; i < count; ++i)
            L.scalar_img[static_cast<size_t>(a)][static_cast<size_t>(i)] =
                L.node_of(scalar_image(a, L.nodes[static_cast<size_t>(i)]));

    // annihilators and second radicals per node
    L.ann_gen.resize(static_cast<size_t>(count));
    L.sec_idx.resize(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        L.ann_gen[static_cast<size_t>(i)] = L.nodes[static_cast<size_t>(i)].exponent();
        L.sec_idx[static_cast<size_t>(i)] = L.node_of(second_radical(L.nodes[static_cast<size_t>(i)]));
    }

    // flags
    L.flag_minimal.assign(static_cast<size_t>(count), 0);
    L.flag_ci.assign(static_cast<size_t>(count), 0);
    L.flag_second.assign(static_cast<size_t>(count), 0);
    L.flag_prime.assign(static_cast<size_t>(count), 0);
    for (int i = 0; i < count; ++i) {
        if (i != L.zero_index && and_popcount(L.subs_[static_cast<size_t>(i)], L.subs_[static_cast<size_t>(i)]) == 2)
            L.flag_minimal[static_cast<size_t>(i)] = 1;
        if (i != L.full_index && L.covers_above[static_cast<size_t>(i)].size() == 1)
            L.flag_ci[static_cast<size_t>(i)] = 1;
        if (i != L.zero_index) {
            bool second = true;
            for (i64 a = 0; a < m.ring && second; ++a) {
                int img = L.scalar_img[static_cast<size_t>(a)][static_cast<size_t>(i)];
                second = img == i || img == L.zero_index;
            }
            L.flag_second[static_cast<size_t>(i)] = second;
        }
    }
    // prime flags via the literal quantifier, using the rank tables
    for (int i = 0; i < count; ++i) {
        if (i == L.full_index) continue;
        const BitVec& bits = L.member_bits_[static_cast<size_t>(i)];
        bool prime = true;
        for (i64 r = 0; r < m.ring && prime; ++r) {
            if (L.contained(L.scalar_img[static_cast<size_t>(r)][static_cast<size_t>(L.full_index)], i))
                continue; // r in (P : M)
            for (std::size_t e = 0; e < order; ++e)
                if (bits.test(L.scaled_rank(r, e)) && !bits.test(e)) { prime = false; break; }
        }
        L.flag_prime[static_cast<size_t>(i)] = prime;
    }

    // completely irreducible list and pairwise meets
    for (int i = 0; i < count; ++i)
        if (L.flag_ci[static_cast<size_t>(i)]) L.ci_list.push_back(i);
    const std::size_t nci = L.ci_list.size();
    L.ci_meet.assign(nci, std::vector<int>(nci));
    for (std::size_t i = 0; i < nci; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            int meet = L.node_of(intersect(L.nodes[static_cast<size_t>(L.ci_list[i])],
                                           L.nodes[static_cast<size_t>(L.ci_list[j])]));
            L.ci_meet[i][j] = L.ci_meet[j][i] = meet;
        }
    return L;
}

inline std::vector<Submodule> completely_irreducibles(const SubLattice& l) {
    std::vector<Submodule> out;
    for (int i : l.ci_list) out.push_back(l.nodes[static_cast<size_t>(i)]);
    return out;
}

inline std::vector<Submodule> prime_submodules(const SubLattice& l) {
    std::vector<Submodule> out;
    for (int i = 0; i < l.size(); ++i)
        if (l.flag_prime[static_cast<size_t>(i)]) out.push_back(l.nodes[static_cast<size_t>(i)]);
    return out;
}

/// Intersection of all prime submodules containing N; M when no prime does.
inline Submodule m_radical(const SubLattice& l, const Submodule& n) {
    int idx = l.node_of(n);
    Submodule acc = full_submodule(l.parent);
    for (int j = 0; j < l.size(); ++j)
        if (l.flag_prime[static_cast<size_t>(j)] && l.contained(idx, j))
            acc = intersect(acc, l.nodes[static_cast<size_t>(j)]);
    return acc;
}

inline std::vector<Submodule> second_submodules(const SubLattice& l) {
    std::vector<Submodule> out;
    for (int i = 0; i < l.size(); ++i)
        if (l.flag_second[static_cast<size_t>(i)]) out.push_back(l.nodes[static_cast<size_t>(i)]);
    return out;
}

/// Definitional second radical: sum of the second submodules contained in N.
inline Submodule second_radical_definitional(const SubLattice& l, const Submodule& n) {
    int idx = l.node_of(n);
    Submodule acc = zero_submodule(l.parent);
    for (int j = 0; j < l.size(); ++j)
        if (l.flag_second[static_cast<size_t>(j)] && l.contained(j, idx))
            acc = sum(acc, l.nodes[static_cast<size_t>(j)]);
    return acc;
}

} // namespace secmod
