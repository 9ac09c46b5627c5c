#pragma once

// Finite modules over Z/nZ in invariant-factor form, and their submodules in
// a unique canonical shape.
//
// A module M = Z/d1 x ... x Z/dk (d1 | d2 | ... | dk, dk | n) is identified
// with Z^k modulo the relation lattice diag(d1..dk) Z^k. A submodule N then
// corresponds to the unique integer lattice L with diag(d) Z^k <= L <= Z^k,
// and its canonical form is the Hermite form of L: a k x k upper-triangular
// matrix with positive pivots dividing the d_i and entries above each pivot
// reduced into [0, pivot). Tie-breaking is therefore fixed by the Hermite
// convention plus the invariant-factor coordinate order. Two submodules of
// equal parents are equal iff their canonical matrices are identical.
//
// Everything is a value: modules, elements, submodules and homs are immutable
// after construction and safe to share across threads.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ideal.hpp"
#include "normal_form.hpp"

namespace secmod {

/// Raised when an enumeration would exceed a configured size bound.
struct BoundExceeded : std::runtime_error {
    std::size_t partial_count;
    BoundExceeded(const std::string& what, std::size_t count)
        : std::runtime_error(what + " (partial count: " + std::to_string(count) + ")"),
          partial_count(count) {}
};

constexpr std::size_t kDefaultElementBound = 20000;
constexpr std::size_t kDefaultLatticeBound = 100000;

using Element = std::vector<i64>;

struct FinModule {
    i64 ring = 1;                  // modulus n >= 1 of the acting ring Z/nZ
    std::vector<i64> factors;      // invariant factors, ascending divisibility

    bool operator==(const FinModule&) const = default;

    int rank() const { return static_cast<int>(factors.size()); }
    i64 order() const {
        i64 o = 1;
        for (i64 d : factors) o = checked_mul(o, d);
        return o;
    }
    i64 exponent() const { return factors.empty() ? 1 : factors.back(); }
    bool is_zero_module() const { return factors.empty(); }
    RingSpec ring_spec() const { return RingSpec{ring}; }

    Element reduce(Element e) const {
        if (static_cast<int>(e.size()) != rank())
            throw std::invalid_argument("element has wrong number of coordinates");
        for (int i = 0; i < rank(); ++i) e[i] = mod_reduce(e[i], factors[i]);
        return e;
    }
    Element zero_element() const { return Element(factors.size(), 0); }
    Element add(const Element& a, const Element& b) const {
        Element r(factors.size());
        for (int i = 0; i < rank(); ++i) r[i] = mod_reduce(a[i] + b[i], factors[i]);
        return r;
    }
    Element scale(i64 c, const Element& a) const {
        Element r(factors.size());
        for (int i = 0; i < rank(); ++i) r[i] = mod_reduce(c % factors[i] * a[i], factors[i]);
        return r;
    }
};

/// Canonicalize arbitrary cyclic factors into invariant-factor form (Smith
/// form of the diagonal relation matrix) and attach the acting ring. A ring
/// modulus of 0 means "default to the exponent".
inline FinModule make_module(i64 ring_modulus, std::vector<i64> cyclic_factors) {
    for (i64 d : cyclic_factors)
        if (d < 2) throw std::invalid_argument("make_module: cyclic factors must be >= 2");
    auto snf = smith_normal_form(Mat::diagonal(cyclic_factors));
    FinModule m;
    for (int i = 0; i < snf.s.rows; ++i)
        if (snf.s.at(i, i) >= 2) m.factors.push_back(snf.s.at(i, i));
    i64 e = m.exponent();
    if (ring_modulus == 0) {
        m.ring = e;
    } else {
        if (ring_modulus < 1 || ring_modulus % e != 0)
            throw std::invalid_argument("make_module: module exponent does not divide ring modulus");
        m.ring = ring_modulus;
    }
    return m;
}

class Submodule {
public:
    Submodule() = default;

    const FinModule& parent() const { return parent_; }
    const Mat& matrix() const { return h_; }
    i64 order() const { return order_; }
    bool is_zero() const { return order_ == 1; }
    bool is_full() const { return order_ == parent_.order(); }

    bool operator==(const Submodule&) const = default;

    /// Membership of a module element (any integer lift works).
    bool contains_element(const Element& e) const {
        if (static_cast<int>(e.size()) != parent_.rank())
            throw std::invalid_argument("element has wrong number of coordinates");
        return solve_row_combination(h_, e).has_value();
    }
    /// N contains K (as sets) iff every canonical generator row of K lies in N.
    bool contains(const Submodule& other) const {
        if (!(other.parent_ == parent_))
            throw std::invalid_argument("submodule containment: parent mismatch");
        if (other.order_ > order_ || order_ % other.order_ != 0) return false;
        const int k = parent_.rank();
        Element row(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) {
            for (int j = 0; j < k; ++j) row[static_cast<size_t>(j)] = other.h_.at(i, j);
            if (!solve_row_combination(h_, row)) return false;
        }
        return true;
    }

    /// Exponent of N: the lcm of the orders of its canonical generators.
    i64 exponent() const {
        i64 e = 1;
        const int k = parent_.rank();
        for (int i = 0; i < k; ++i) {
            i64 row_order = 1;
            for (int j = 0; j < k; ++j) {
                i64 d = parent_.factors[static_cast<size_t>(j)];
                row_order = std::lcm(row_order, d / std::gcd(d, h_.at(i, j)));
            }
            e = std::lcm(e, row_order);
        }
        return e;
    }

    /// Nonzero canonical generator rows, reduced modulo the invariant factors.
    std::vector<Element> generators() const {
        std::vector<Element> gens;
        const int k = parent_.rank();
        for (int i = 0; i < k; ++i) {
            Element row(static_cast<size_t>(k));
            bool nonzero = false;
            for (int j = 0; j < k; ++j) {
                row[static_cast<size_t>(j)] = mod_reduce(h_.at(i, j), parent_.factors[static_cast<size_t>(j)]);
                nonzero |= row[static_cast<size_t>(j)] != 0;
            }
            if (nonzero) gens.push_back(std::move(row));
        }
        return gens;
    }

    static Submodule from_rows(const FinModule& m, const Mat& rows) {
        if (rows.rows > 0 && rows.cols != m.rank())
            throw std::invalid_argument("submodule rows have wrong width");
        Submodule s;
        s.parent_ = m;
        s.h_ = hermite_normal_form(mat_stack(rows, Mat::diagonal(m.factors)));
        if (s.h_.rows != m.rank())
            throw std::logic_error("submodule lattice lost full rank"); // unreachable
        s.order_ = 1;
        for (int i = 0; i < m.rank(); ++i)
            s.order_ *= m.factors[static_cast<size_t>(i)] / s.h_.at(i, i);
        return s;
    }

private:
    FinModule parent_;
    Mat h_;         // canonical Hermite form of the lattice, k x k
    i64 order_ = 1;
};

inline Submodule zero_submodule(const FinModule& m) { return Submodule::from_rows(m, Mat(0, m.rank())); }
inline Submodule full_submodule(const FinModule& m) { return Submodule::from_rows(m, Mat::identity(m.rank())); }

/// Smallest submodule containing the given elements; {} spans the zero one.
inline Submodule span(const FinModule& m, const std::vector<Element>& gens) {
    Mat rows(static_cast<int>(gens.size()), m.rank());
    for (size_t i = 0; i < gens.size(); ++i) {
        if (static_cast<int>(gens[i].size()) != m.rank())
            throw std::invalid_argument("span: element does not belong to the module");
        for (int j = 0; j < m.rank(); ++j) rows.at(static_cast<int>(i), j) = gens[i][static_cast<size_t>(j)];
    }
    return Submodule::from_rows(m, rows);
}

inline void require_same_parent(const Submodule& a, const Submodule& b, const char* what) {
    if (!(a.parent() == b.parent()))
        throw std::invalid_argument(std::string(what) + ": parent mismatch");
}

/// Lattice join N + K.
inline Submodule sum(const Submodule& a, const Submodule& b) {
    require_same_parent(a, b, "sum");
    return Submodule::from_rows(a.parent(), mat_stack(a.matrix(), b.matrix()));
}

/// Lattice meet N n K via the left kernel of the stacked basis matrices.
inline Submodule intersect(const Submodule& a, const Submodule& b) {
    require_same_parent(a, b, "intersect");
    const int k = a.parent().rank();
    Mat ker = left_kernel(mat_stack(a.matrix(), b.matrix()));
    Mat rows(ker.rows, k);
    for (int i = 0; i < ker.rows; ++i)
        for (int j = 0; j < k; ++j) {
            i64 v = 0;
            for (int t = 0; t < k; ++t) v += ker.at(i, t) * a.matrix().at(t, j);
            rows.at(i, j) = v;
        }
    return Submodule::from_rows(a.parent(), rows);
}

/// Image a*N of the scaling-by-a map.
inline Submodule scalar_image(i64 a, const Submodule& n) {
    const int k = n.parent().rank();
    Mat rows(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            rows.at(i, j) = mod_reduce(a % n.parent().factors[static_cast<size_t>(j)] * n.matrix().at(i, j),
                                       n.parent().factors[static_cast<size_t>(j)]);
    return Submodule::from_rows(n.parent(), rows);
}

/// Annihilator ideal of N: generated by the exponent of N inside the divisor
/// lattice of the ring modulus. Ann(0) is the whole ring.
inline Ideal annihilator(const Submodule& n) {
    return Ideal{n.exponent(), n.parent().ring_spec()};
}

/// Colon submodule (N :_M I) = { m : I m <= N }; for the principal ideal (g)
/// this is the preimage of N under scaling by g.
inline Submodule colon(const Submodule& n, const Ideal& i) {
    const FinModule& m = n.parent();
    if (!(i.ring == m.ring_spec()))
        throw std::invalid_argument("colon: ring mismatch");
    const int k = m.rank();
    Mat scaled = Mat::identity(k);
    for (int j = 0; j < k; ++j) scaled.at(j, j) = i.gen;
    Mat ker = left_kernel(mat_stack(scaled, n.matrix()));
    // the first k kernel coordinates are the preimage vectors themselves
    Mat rows(ker.rows, k);
    for (int i2 = 0; i2 < ker.rows; ++i2)
        for (int j = 0; j < k; ++j) rows.at(i2, j) = ker.at(i2, j);
    return Submodule::from_rows(m, rows);
}

/// Coproduct C(NK) = (0 :_M Ann(N) Ann(K)).
inline Submodule coproduct(const Submodule& n, const Submodule& k) {
    require_same_parent(n, k, "coproduct");
    return colon(zero_submodule(n.parent()), ideal_product(annihilator(n), annihilator(k)));
}

/// C(N^t): the coproduct of N with itself t times, (0 :_M Ann(N)^t).
inline Submodule coproduct_power(const Submodule& n, int t) {
    if (t < 1) throw std::invalid_argument("coproduct_power: t must be >= 1");
    return colon(zero_submodule(n.parent()), ideal_pow(annihilator(n), t));
}

// ---------------------------------------------------------------------------
// Element enumeration (bounded).
// ---------------------------------------------------------------------------

/// All elements of M in mixed-radix order (coordinate 0 slowest).
inline std::vector<Element> elements_of(const FinModule& m,
                                        std::size_t bound = kDefaultElementBound) {
    if (static_cast<std::size_t>(m.order()) > bound)
        throw BoundExceeded("module too large to materialize elements", 0);
    std::vector<Element> out;
    out.reserve(static_cast<size_t>(m.order()));
    Element cur = m.zero_element();
    const int k = m.rank();
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        for (; i >= 0; --i) {
            if (++cur[static_cast<size_t>(i)] < m.factors[static_cast<size_t>(i)]) break;
            cur[static_cast<size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

/// All elements of a submodule: canonical coefficient sweep over the Hermite
/// rows (row i contributes d_i / pivot_i distinct multiples).
inline std::vector<Element> elements_of(const Submodule& s,
                                        std::size_t bound = kDefaultElementBound) {
    if (static_cast<std::size_t>(s.order()) > bound)
        throw BoundExceeded("submodule too large to materialize elements", 0);
    const FinModule& m = s.parent();
    const int k = m.rank();
    std::vector<i64> ranges(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
        ranges[static_cast<size_t>(i)] = m.factors[static_cast<size_t>(i)] / s.matrix().at(i, i);
    std::vector<Element> out;
    out.reserve(static_cast<size_t>(s.order()));
    std::vector<i64> c(static_cast<size_t>(k), 0);
    while (true) {
        Element e = m.zero_element();
        for (int i = 0; i < k; ++i) {
            if (c[static_cast<size_t>(i)] == 0) continue;
            for (int j = 0; j < k; ++j)
                e[static_cast<size_t>(j)] = mod_reduce(e[static_cast<size_t>(j)] +
                                                       c[static_cast<size_t>(i)] * s.matrix().at(i, j),
                                                       m.factors[static_cast<size_t>(j)]);
        }
        out.push_back(std::move(e));
        int i = k - 1;
        for (; i >= 0; --i) {
            if (++c[static_cast<size_t>(i)] < ranges[static_cast<size_t>(i)]) break;
            c[static_cast<size_t>(i)] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

/// Mixed-radix rank of an element, matching elements_of(M) order.
inline std::size_t element_rank(const FinModule& m, const Element& e) {
    std::size_t r = 0;
    for (int i = 0; i < m.rank(); ++i)
        r = r * static_cast<std::size_t>(m.factors[static_cast<size_t>(i)]) +
            static_cast<std::size_t>(e[static_cast<size_t>(i)]);
    return r;
}

/// Bitmap of submodule membership indexed by element_rank.
inline std::vector<char> membership_bitmap(const Submodule& s,
                                           std::size_t bound = kDefaultElementBound) {
    std::vector<char> map(static_cast<size_t>(s.parent().order()), 0);
    for (const Element& e : elements_of(s, bound)) map[element_rank(s.parent(), e)] = 1;
    return map;
}

// ---------------------------------------------------------------------------
// Homomorphisms.
// ---------------------------------------------------------------------------

struct ModuleHom {
    FinModule source, target;
    Mat matrix;      // row i = image of source generator e_i
    bool injective = false;

    Element apply(const Element& e) const {
        Element out(static_cast<size_t>(target.rank()), 0);
        for (int j = 0; j < target.rank(); ++j) {
            i64 v = 0;
            for (int i = 0; i < source.rank(); ++i) v += e[static_cast<size_t>(i)] * matrix.at(i, j);
            out[static_cast<size_t>(j)] = mod_reduce(v, target.factors[static_cast<size_t>(j)]);
        }
        return out;
    }
};

inline Submodule hom_image(const ModuleHom& h, const Submodule& n);
inline Submodule hom_preimage(const ModuleHom& h, const Submodule& n);

/// Validate a generator-image matrix as a homomorphism: row i must be killed
/// by d_i in the target. Injectivity is decided by the kernel.
inline ModuleHom hom_make(const FinModule& source, const FinModule& target, const Mat& matrix) {
    if (matrix.rows != source.rank() || matrix.cols != target.rank())
        throw std::invalid_argument("hom_make: matrix shape mismatch");
    for (int i = 0; i < source.rank(); ++i)
        for (int j = 0; j < target.rank(); ++j)
            if (matrix.at(i, j) * source.factors[static_cast<size_t>(i)] %
                    target.factors[static_cast<size_t>(j)] != 0)
                throw std::invalid_argument("hom_make: matrix does not respect source relations");
    ModuleHom h{source, target, matrix, false};
    h.injective = hom_preimage(h, zero_submodule(target)) == zero_submodule(source);
    return h;
}

inline Submodule hom_image(const ModuleHom& h, const Submodule& n) {
    if (!(n.parent() == h.source))
        throw std::invalid_argument("hom_image: submodule not in the source module");
    return Submodule::from_rows(h.target, mat_mul(n.matrix(), h.matrix));
}

inline Submodule hom_preimage(const ModuleHom& h, const Submodule& n) {
    if (!(n.parent() == h.target))
        throw std::invalid_argument("hom_preimage: submodule not in the target module");
    const int k = h.source.rank();
    Mat ker = left_kernel(mat_stack(h.matrix, n.matrix()));
    Mat rows(ker.rows, k);
    for (int i = 0; i < ker.rows; ++i)
        for (int j = 0; j < k; ++j) rows.at(i, j) = ker.at(i, j);
    return Submodule::from_rows(h.source, rows);
}

// ---------------------------------------------------------------------------
// Quotients and abstract structure.
// ---------------------------------------------------------------------------

/// Quotient M/K in invariant-factor form plus the projection M -> M/K.
/// Submodules of the quotient correspond to submodules of M containing K via
/// hom_image / hom_preimage of the projection.
inline std::pair<FinModule, ModuleHom> quotient(const FinModule& m, const Submodule& k) {
    if (!(k.parent() == m)) throw std::invalid_argument("quotient: foreign submodule");
    auto snf = smith_normal_form(k.matrix());
    FinModule q;
    q.ring = m.ring;
    std::vector<int> kept;
    for (int i = 0; i < snf.s.rows; ++i)
        if (snf.s.at(i, i) >= 2) {
            q.factors.push_back(snf.s.at(i, i));
            kept.push_back(i);
        }
    Mat proj(m.rank(), q.rank());
    for (int i = 0; i < m.rank(); ++i)
        for (size_t j = 0; j < kept.size(); ++j)
            proj.at(i, static_cast<int>(j)) =
                mod_reduce(snf.v.at(i, kept[j]), q.factors[j]);
    return {q, hom_make(m, q, proj)};
}

struct AbstractStructure {
    FinModule module;    // abstract invariant-factor presentation of N
    ModuleHom embedding; // injective hom onto N inside the parent
};

/// Present a submodule N as a module in its own right, with the embedding
/// back into the parent. The ring defaults to the parent's; pass an explicit
/// modulus (a multiple of the exponent of N) to restrict the acting ring.
inline AbstractStructure abstract_structure(const Submodule& n, i64 ring_modulus = 0) {
    const FinModule& m = n.parent();
    const int k = m.rank();
    // relation matrix: express diag(d) rows in the Hermite basis of N
    Mat rel(k, k);
    for (int i = 0; i < k; ++i) {
        Element row(static_cast<size_t>(k), 0);
        row[static_cast<size_t>(i)] = m.factors[static_cast<size_t>(i)];
        auto coeff = solve_row_combination(n.matrix(), row);
        if (!coeff) throw std::logic_error("relation lattice escaped the submodule"); // unreachable
        for (int j = 0; j < k; ++j) rel.at(i, j) = (*coeff)[static_cast<size_t>(j)];
    }
    auto snf = smith_normal_form(rel);
    AbstractStructure out;
    out.module.ring = ring_modulus == 0 ? m.ring : ring_modulus;
    std::vector<int> kept;
    for (int i = 0; i < snf.s.rows; ++i)
        if (snf.s.at(i, i) >= 2) {
            out.module.factors.push_back(snf.s.at(i, i));
            kept.push_back(i);
        }
    if (out.module.exponent() > 1 && out.module.ring % out.module.exponent() != 0)
        throw std::invalid_argument("abstract_structure: exponent does not divide the ring modulus");
    // generator j of the abstract module maps to (row kept[j] of Vinv) * H
    Mat emb(static_cast<int>(kept.size()), k);
    for (size_t j = 0; j < kept.size(); ++j)
        for (int c = 0; c < k; ++c) {
            i64 v = 0;
            for (int t = 0; t < k; ++t) v += snf.vinv.at(kept[j], t) * n.matrix().at(t, c);
            emb.at(static_cast<int>(j), c) = mod_reduce(v, m.factors[static_cast<size_t>(c)]);
        }
    out.embedding = hom_make(out.module, m, emb);
    if (!out.embedding.injective || !(hom_image(out.embedding, full_submodule(out.module)) == n))
        throw std::logic_error("abstract_structure: embedding failed to reproduce the submodule");
    return out;
}

} // namespace secmod
