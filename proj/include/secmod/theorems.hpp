#pragma once

// Machine verification of the classification theorems on concrete modules:
// corpus generation over isomorphism classes of finite abelian groups,
// exhaustive instantiation of each theorem's quantifiers, vacuity accounting,
// counterexample search between predicate classes, and CRT product
// decompositions for the theorems over decomposable rings.
//
// Instance accounting: instances_checked counts the hypothesis-bearing units
// a theorem quantifies over (a submodule, a pair, a (hom, submodule) pair, or
// a (split, submodule) pair); vacuous_instances counts the units whose
// hypotheses fail. A module-level hypothesis that fails (comultiplication,
// cocyclic, decomposable ring) contributes a single vacuous instance.

#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>

#include <json.hpp>

#include "classify.hpp"
#include "parse.hpp"

namespace secmod {

using json = nlohmann::ordered_json;

struct TheoremReport {
    std::string theorem_id;
    std::string module_expr;
    long long instances_checked = 0;
    long long vacuous_instances = 0;
    std::vector<json> violations;
    FinModule module;

    bool passed() const { return violations.empty(); }
};

enum class CorpusFilter { all, cyclic_only, p_groups_only, explicit_list };

struct CorpusSpec {
    i64 max_order = 1;
    CorpusFilter filter = CorpusFilter::all;
    std::vector<std::vector<i64>> explicit_factors;
};

// ---------------------------------------------------------------------------
// Corpus generation.
// ---------------------------------------------------------------------------

namespace detail {

/// All partitions of n, each descending, in deterministic order.
inline std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

} // namespace detail

/// Every isomorphism class of finite abelian groups of order <= max_order
/// passing the filter, each exactly once, in deterministic order
/// (order ascending, then invariant factors lexicographic).
inline std::vector<FinModule> corpus_generate(const CorpusSpec& spec) {
    std::vector<FinModule> out;
    if (spec.filter == CorpusFilter::explicit_list) {
        for (const auto& factors : spec.explicit_factors) out.push_back(make_module(0, factors));
        return out;
    }
    for (i64 order = 1; order <= spec.max_order; ++order) {
        auto fact = factorize(order).primes;
        if (spec.filter == CorpusFilter::p_groups_only && fact.size() > 1) continue;
        // per prime: choose a partition of the exponent
        std::vector<std::vector<std::vector<int>>> choices;
        for (auto [p, e] : fact) choices.push_back(detail::partitions_of(e));
        std::vector<std::size_t> pick(choices.size(), 0);
        std::vector<FinModule> classes;
        while (true) {
            std::vector<i64> parts;
            for (std::size_t i = 0; i < choices.size(); ++i) {
                i64 p = fact[i].first;
                for (int exp : choices[i][pick[i]]) {
                    i64 q = 1;
                    for (int t = 0; t < exp; ++t) q *= p;
                    parts.push_back(q);
                }
            }
            FinModule m = make_module(0, parts);
            if (spec.filter != CorpusFilter::cyclic_only || m.rank() <= 1) classes.push_back(m);
            std::size_t i = 0;
            for (; i < pick.size(); ++i) {
                if (++pick[i] < choices[i].size()) break;
                pick[i] = 0;
            }
            if (i == pick.size()) break;
            if (choices.empty()) break;
        }
        std::sort(classes.begin(), classes.end(),
                  [](const FinModule& a, const FinModule& b) { return a.factors < b.factors; });
        out.insert(out.end(), classes.begin(), classes.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// CRT product decomposition of the ring and module.
// ---------------------------------------------------------------------------

struct ProductDecomposition {
    i64 n1 = 1, n2 = 1;
    FinModule m1, m2;          // over Z/n1Z and Z/n2Z
    ModuleHom embed1, embed2;  // additive embeddings back into M
};

/// Split M over Z/nZ = Z/n1Z x Z/n2Z into its n1- and n2-torsion parts.
inline ProductDecomposition product_decompose(const FinModule& m, i64 n1, i64 n2) {
    if (n1 <= 1 || n2 <= 1 || checked_mul(n1, n2) != m.ring || std::gcd(n1, n2) != 1)
        throw std::invalid_argument("product_decompose: ring does not split as n1 x n2");
    ProductDecomposition d;
    d.n1 = n1;
    d.n2 = n2;
    Submodule part1 = colon(zero_submodule(m), make_ideal(m.ring_spec(), n1));
    Submodule part2 = colon(zero_submodule(m), make_ideal(m.ring_spec(), n2));
    AbstractStructure a1 = abstract_structure(part1, n1);
    AbstractStructure a2 = abstract_structure(part2, n2);
    d.m1 = a1.module;
    d.m2 = a2.module;
    d.embed1 = a1.embedding;
    d.embed2 = a2.embedding;
    return d;
}

/// The component pair (N n M1, N n M2) of a submodule, in abstract coordinates.
inline std::pair<Submodule, Submodule> product_split(const ProductDecomposition& d,
                                                     const Submodule& n) {
    return {hom_preimage(d.embed1, n), hom_preimage(d.embed2, n)};
}

inline Submodule product_combine(const ProductDecomposition& d, const Submodule& n1,
                                 const Submodule& n2) {
    return sum(hom_image(d.embed1, n1), hom_image(d.embed2, n2));
}

// ---------------------------------------------------------------------------
// Harness context: classified lattices, cached per module type.
// ---------------------------------------------------------------------------

struct HarnessOptions {
    std::size_t lattice_bound = kDefaultLatticeBound;
    std::size_t element_bound = kDefaultElementBound;
    int hom_samples = 100;       // injective homs sampled per submodule-type pair
    int hom_attempt_factor = 40; // sampling attempts per requested hom
    unsigned workers = 1;
};

// fixed, documented RNG seed for hom sampling; per-pair seeds mix in the types
constexpr std::uint64_t kHomSampleSeed = 0x5EC0DD5EEDull;

class HarnessContext {
public:
    HarnessContext(FinModule m, HarnessOptions opt)
        : module_(std::move(m)), opt_(opt) {
        main_ = &classified(module_);
    }

    const FinModule& module() const { return module_; }
    const HarnessOptions& options() const { return opt_; }
    const ClassificationReport& main() const { return *main_; }

    const ClassificationReport& classified(const FinModule& type) {
        auto key = std::make_pair(type.ring, type.factors);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            auto rep = std::make_unique<ClassificationReport>(
                classify_all(type, 1, opt_.lattice_bound, opt_.element_bound));
            it = cache_.emplace(key, std::move(rep)).first;
        }
        return *it->second;
    }

    const AbstractStructure& abstract_of(int node) {
        auto it = abstracts_.find(node);
        if (it == abstracts_.end())
            it = abstracts_.emplace(node, abstract_structure(main().lattice.nodes[static_cast<size_t>(node)])).first;
        return it->second;
    }

    /// All coprime ordered splits (n1 < n2) of the ring modulus.
    std::vector<std::pair<i64, i64>> ring_splits() const {
        std::vector<std::pair<i64, i64>> out;
        i64 n = module_.ring;
        for (i64 d = 2; d * d <= n; ++d)
            if (n % d == 0 && std::gcd(d, n / d) == 1 && n / d > 1) out.emplace_back(d, n / d);
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    FinModule module_;
    HarnessOptions opt_;
    const ClassificationReport* main_ = nullptr;
    std::map<std::pair<i64, std::vector<i64>>, std::unique_ptr<ClassificationReport>> cache_;
    std::map<int, AbstractStructure> abstracts_;
};

namespace detail {

inline json gens_json(const Submodule& s) {
    json out = json::array();
    for (const auto& g : s.generators()) out.push_back(g);
    return out;
}

inline json node_json(const SubLattice& l, int idx) {
    const Submodule& s = l.nodes[static_cast<size_t>(idx)];
    return json{{"gens", gens_json(s)}, {"order", s.order()}};
}

/// Matrix of the inclusion A1 -> A2 for K1 <= K2 presented by their
/// embeddings into the common parent: solve X * E2 = E1 modulo relations.
inline Mat inclusion_matrix(const ModuleHom& emb1, const ModuleHom& emb2) {
    const FinModule& m = emb1.target;
    Mat stacked = mat_stack(emb2.matrix, Mat::diagonal(m.factors));
    auto ht = hermite_with_transform(stacked);
    Mat trimmed(ht.rank, stacked.cols);
    for (int i = 0; i < ht.rank; ++i)
        for (int j = 0; j < stacked.cols; ++j) trimmed.at(i, j) = ht.h.at(i, j);
    Mat x(emb1.matrix.rows, emb2.matrix.rows);
    for (int r = 0; r < emb1.matrix.rows; ++r) {
        std::vector<i64> row(static_cast<size_t>(emb1.matrix.cols));
        for (int j = 0; j < emb1.matrix.cols; ++j) row[static_cast<size_t>(j)] = emb1.matrix.at(r, j);
        auto c = solve_row_combination(trimmed, row);
        if (!c) throw std::logic_error("inclusion_matrix: element escaped the larger submodule");
        for (int j = 0; j < emb2.matrix.rows; ++j) {
            i64 v = 0;
            for (int t = 0; t < ht.rank; ++t) v += (*c)[static_cast<size_t>(t)] * ht.u.at(t, j);
            x.at(r, j) = mod_reduce(v, emb2.source.factors[static_cast<size_t>(j)]);
        }
    }
    return x;
}

/// Componentwise domination of p-type partitions: does A embed into B?
inline bool embeddable(const FinModule& a, const FinModule& b) {
    std::map<i64, std::vector<int>> ta, tb;
    for (i64 f : a.factors)
        for (auto [p, e] : factorize(f).primes) ta[p].push_back(e);
    for (i64 f : b.factors)
        for (auto [p, e] : factorize(f).primes) tb[p].push_back(e);
    for (auto& [p, list] : ta) {
        auto it = tb.find(p);
        if (it == tb.end()) return false;
        auto& other = it->second;
        std::sort(list.begin(), list.end(), std::greater<>());
        std::sort(other.begin(), other.end(), std::greater<>());
        if (list.size() > other.size()) return false;
        for (std::size_t i = 0; i < list.size(); ++i)
            if (list[i] > other[i]) return false;
    }
    return true;
}

/// Deterministically sampled injective homs A -> B (valid by construction,
/// injectivity tested); includes the canonical diagonal embedding first.
inline std::vector<ModuleHom> sample_injective_homs(const FinModule& a, const FinModule& b,
                                                    int target, int attempt_factor) {
    std::vector<ModuleHom> out;
    if (!embeddable(a, b) || a.is_zero_module()) return out;
    const int ka = a.rank(), kb = b.rank();
    // canonical embedding: match each cyclic part into a distinct target part,
    // largest into largest per prime; realized by greedy assignment
    {
        Mat canon(ka, kb);
        std::vector<i64> remaining = b.factors;
        for (int i = ka - 1; i >= 0; --i) {
            for (int j = kb - 1; j >= 0; --j) {
                if (remaining[static_cast<size_t>(j)] % a.factors[static_cast<size_t>(i)] == 0) {
                    canon.at(i, j) = b.factors[static_cast<size_t>(j)] / a.factors[static_cast<size_t>(i)];
                    remaining[static_cast<size_t>(j)] = 1;
                    break;
                }
            }
        }
        try {
            ModuleHom h = hom_make(a, b, canon);
            if (h.injective) out.push_back(std::move(h));
        } catch (const std::invalid_argument&) {
            // greedy assignment failed; random sampling below still applies
        }
    }
    std::uint64_t seed = kHomSampleSeed;
    auto mix = [&seed](i64 v) { seed = (seed ^ static_cast<std::uint64_t>(v)) * 1099511628211ull; };
    mix(a.ring);
    for (i64 f : a.factors) mix(f);
    mix(-1);
    mix(b.ring);
    for (i64 f : b.factors) mix(f);
    std::mt19937_64 rng(seed);
    long long attempts = static_cast<long long>(target) * attempt_factor;
    while (static_cast<int>(out.size()) < target && attempts-- > 0) {
        Mat mat(ka, kb);
        for (int i = 0; i < ka; ++i)
            for (int j = 0; j < kb; ++j) {
                i64 dj = b.factors[static_cast<size_t>(j)];
                i64 step = dj / std::gcd(dj, a.factors[static_cast<size_t>(i)]);
                i64 slots = dj / step;
                mat.at(i, j) = step * static_cast<i64>(rng() % static_cast<std::uint64_t>(slots));
            }
        ModuleHom h = hom_make(a, b, mat);
        if (h.injective) out.push_back(std::move(h));
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Individual theorem checks.
// ---------------------------------------------------------------------------

namespace theorems {

// abN <= L (completely irreducible), N 2-absorbing secondary, I an ideal:
// IaN <= L forces a sec(N) <= L, I sec(N) <= L, or IaN = 0.
inline TheoremReport check_l1_3(HarnessContext& ctx) {
    TheoremReport rep{"l1.3", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    const SubLattice& l = cls.lattice;
    const i64 ring = ctx.module().ring;
    std::vector<i64> divisors;
    for (i64 d = 1; d <= ring; ++d)
        if (ring % d == 0) divisors.push_back(d);
    for (int idx = 0; idx < l.size(); ++idx) {
        ++rep.instances_checked;
        if (idx == l.zero_index || !cls.rows[static_cast<size_t>(idx)].two_abs_secondary) {
            ++rep.vacuous_instances;
            continue;
        }
        const int sec = l.sec_idx[static_cast<size_t>(idx)];
        bool violated = false;
        for (i64 gi : divisors) {
            for (i64 a = 0; a < ring && !violated; ++a) {
                int ian = l.scalar_img[static_cast<size_t>(gi * a % ring)][static_cast<size_t>(idx)];
                if (ian == l.zero_index) continue;
                int asec = l.scalar_img[static_cast<size_t>(a)][static_cast<size_t>(sec)];
                int isec = l.scalar_img[static_cast<size_t>(gi % ring)][static_cast<size_t>(sec)];
                for (int ci : l.ci_list) {
                    if (!l.contained(ian, ci)) continue;
                    if (!l.contained(asec, ci) && !l.contained(isec, ci)) {
                        rep.violations.push_back(json{{"submodule", detail::node_json(l, idx)},
                                                      {"ideal", gi},
                                                      {"a", a},
                                                      {"target", detail::node_json(l, ci)}});
                        violated = true;
                        break;
                    }
                }
            }
            if (violated) break;
        }
    }
    return rep;
}

// IJN <= L (completely irreducible), N 2-absorbing secondary:
// I sec(N) <= L, J sec(N) <= L, or IJ <= Ann(N).
inline TheoremReport check_l1_4(HarnessContext& ctx) {
    TheoremReport rep{"l1.4", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    const SubLattice& l = cls.lattice;
    const i64 ring = ctx.module().ring;
    std::vector<i64> divisors;
    for (i64 d = 1; d <= ring; ++d)
        if (ring % d == 0) divisors.push_back(d);
    for (int idx = 0; idx < l.size(); ++idx) {
        ++rep.instances_checked;
        if (idx == l.zero_index || !cls.rows[static_cast<size_t>(idx)].two_abs_secondary) {
            ++rep.vacuous_instances;
            continue;
        }
        const int sec = l.sec_idx[static_cast<size_t>(idx)];
        const i64 ann = l.ann_gen[static_cast<size_t>(idx)];
        bool violated = false;
        for (std::size_t di = 0; di < divisors.size() && !violated; ++di)
            for (std::size_t dj = di; dj < divisors.size() && !violated; ++dj) {
                i64 gi = divisors[di], gj = divisors[dj];
                if ((gi * gj) % ann == 0) continue; // IJ <= Ann(N)
                int ijn = l.scalar_img[static_cast<size_t>(gi * gj % ring)][static_cast<size_t>(idx)];
                int isec = l.scalar_img[static_cast<size_t>(gi % ring)][static_cast<size_t>(sec)];
                int jsec = l.scalar_img[static_cast<size_t>(gj % ring)][static_cast<size_t>(sec)];
                for (int ci : l.ci_list) {
                    if (!l.contained(ijn, ci)) continue;
                    if (!l.contained(isec, ci) && !l.contained(jsec, ci)) {
                        rep.violations.push_back(json{{"submodule", detail::node_json(l, idx)},
                                                      {"ideal_i", gi},
                                                      {"ideal_j", gj},
                                                      {"target", detail::node_json(l, ci)}});
                        violated = true;
                        break;
                    }
                }
            }
    }
    return rep;
}

// the three formulations of strongly 2-absorbing secondary are equivalent
inline TheoremReport check_t1_5(HarnessContext& ctx) {
    TheoremReport rep{"t1.5", print_module_expr(ctx.module())};
    const SubLattice& l = ctx.main().lattice;
    for (int idx = 0; idx < l.size(); ++idx) {
        ++rep.instances_checked;
        if (idx == l.zero_index) {
            ++rep.vacuous_instances;
            continue;
        }
        auto modes = strongly_2_absorbing_secondary_modes(l, idx);
        if (!modes.agree())
            rep.violations.push_back(json{{"submodule", detail::node_json(l, idx)},
                                          {"irreducible_pairs", modes.irreducible_pairs},
                                          {"ideal_pairs", modes.ideal_pairs},
                                          {"scalar_formula", modes.scalar_formula}});
    }
    return rep;
}

// strongly 2-absorbing second submodules are strongly 2-absorbing secondary
inline TheoremReport check_l9_2(HarnessContext& ctx) {
    TheoremReport rep{"l9.2", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    for (int idx = 0; idx < cls.lattice.size(); ++idx) {
        ++rep.instances_checked;
        const auto& f = cls.rows[static_cast<size_t>(idx)];
        if (!f.strongly_two_abs_second) {
            ++rep.vacuous_instances;
            continue;
        }
        if (!f.strongly_two_abs_secondary)
            rep.violations.push_back(json{{"submodule", detail::node_json(cls.lattice, idx)}});
    }
    return rep;
}

// on comultiplication modules the annihilator of a strongly 2-absorbing
// secondary submodule is a 2-absorbing primary ideal
inline TheoremReport check_t9_4(HarnessContext& ctx) {
    TheoremReport rep{"t9.4", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    if (!cls.comultiplication) {
        rep.instances_checked = rep.vacuous_instances = 1;
        return rep;
    }
    const SubLattice& l = cls.lattice;
    for (int idx = 0; idx < l.size(); ++idx) {
        ++rep.instances_checked;
        if (!cls.rows[static_cast<size_t>(idx)].strongly_two_abs_secondary) {
            ++rep.vacuous_instances;
            continue;
        }
        Ideal ann{l.ann_gen[static_cast<size_t>(idx)], ctx.module().ring_spec()};
        if (!is_2_absorbing_primary_ideal(ann))
            rep.violations.push_back(json{{"submodule", detail::node_json(l, idx)},
                                          {"annihilator", ann.gen}});
    }
    return rep;
}

// converse of t9.4 on comultiplication modules
inline TheoremReport check_t9_5(HarnessContext& ctx) {
    TheoremReport rep{"t9.5", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    if (!cls.comultiplication) {
        rep.instances_checked = rep.vacuous_instances = 1;
        return rep;
    }
    const SubLattice& l = cls.lattice;
    for (int idx = 0; idx < l.size(); ++idx) {
        ++rep.instances_checked;
        Ideal ann{l.ann_gen[static_cast<size_t>(idx)], ctx.module().ring_spec()};
        if (idx == l.zero_index || ann.gen == 1 || !is_2_absorbing_primary_ideal(ann)) {
            ++rep.vacuous_instances;
            continue;
        }
        if (!cls.rows[static_cast<size_t>(idx)].strongly_two_abs_secondary)
            rep.violations.push_back(json{{"submodule", detail::node_json(l, idx)},
                                          {"annihilator", ann.gen}});
    }
    return rep;
}

// the M-radical of a 2-absorbing primary submodule is a 2-absorbing submodule
inline TheoremReport check_l9_6(HarnessContext& ctx) {
    TheoremReport rep{"l9.6", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    const SubLattice& l = cls.lattice;
    for (int idx = 0; idx < l.size(); ++idx) {
        ++rep.instances_checked;
        if (idx == l.full_index || !cls.rows[static_cast<size_t>(idx)].two_abs_primary_submodule) {
            ++rep.vacuous_instances;
            continue;
        }
        int mrad = l.node_of(m_radical(l, l.nodes[static_cast<size_t>(idx)]));
        bool ok = mrad != l.full_index && cls.rows[static_cast<size_t>(mrad)].two_abs_submodule;
        if (!ok)
            rep.violations.push_back(json{{"submodule", detail::node_json(l, idx)},
                                          {"m_radical", detail::node_json(l, mrad)}});
    }
    return rep;
}

// sec(N) of a 2-absorbing (resp. strongly) secondary submodule is 2-absorbing
// (resp. strongly) second; for second radical submodules the classes coincide
inline TheoremReport check_p1_5(HarnessContext& ctx) {
    TheoremReport rep{"p1.5", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    const SubLattice& l = cls.lattice;
    for (int idx = 0; idx < l.size(); ++idx) {
        ++rep.instances_checked;
        if (idx == l.zero_index) {
            ++rep.vacuous_instances;
            continue;
        }
        const auto& f = cls.rows[static_cast<size_t>(idx)];
        const auto& fs = cls.rows[static_cast<size_t>(l.sec_idx[static_cast<size_t>(idx)])];
        if (!f.two_abs_secondary && !f.strongly_two_abs_secondary && !f.second_radical_submodule) {
            ++rep.vacuous_instances;
            continue;
        }
        bool ok = true;
        if (f.two_abs_secondary && !fs.two_abs_second) ok = false;
        if (f.strongly_two_abs_secondary && !fs.strongly_two_abs_second) ok = false;
        if (f.second_radical_submodule &&
            (f.two_abs_second != f.two_abs_secondary ||
             f.strongly_two_abs_second != f.strongly_two_abs_secondary))
            ok = false;
        if (!ok) rep.violations.push_back(json{{"submodule", detail::node_json(l, idx)}});
    }
    return rep;
}

// if sec(N) is second: N is strongly 2-absorbing secondary, and on
// comultiplication modules every coproduct power C(N^t) is as well
inline TheoremReport check_t9_7(HarnessContext& ctx) {
    TheoremReport rep{"t9.7", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    const SubLattice& l = cls.lattice;
    int power_bound = std::max(1, max_prime_exponent(ctx.module().ring));
    for (int idx = 0; idx < l.size(); ++idx) {
        ++rep.instances_checked;
        if (!l.flag_second[static_cast<size_t>(l.sec_idx[static_cast<size_t>(idx)])]) {
            ++rep.vacuous_instances;
            continue;
        }
        if (!cls.rows[static_cast<size_t>(idx)].strongly_two_abs_secondary)
            rep.violations.push_back(json{{"part", "a"}, {"submodule", detail::node_json(l, idx)}});
        if (cls.comultiplication) {
            for (int t = 1; t <= power_bound; ++t) {
                int cp = l.node_of(coproduct_power(l.nodes[static_cast<size_t>(idx)], t));
                if (!cls.rows[static_cast<size_t>(cp)].strongly_two_abs_secondary)
                    rep.violations.push_back(json{{"part", "b"},
                                                  {"submodule", detail::node_json(l, idx)},
                                                  {"t", t},
                                                  {"coproduct_power", detail::node_json(l, cp)}});
            }
        }
    }
    return rep;
}

// sums of strongly (resp. plainly) 2-absorbing secondary submodules with a
// common second radical stay in the class; sums of two secondary submodules
// are strongly 2-absorbing secondary; and the two-minimal-radical criterion
inline TheoremReport check_t9_8(HarnessContext& ctx) {
    TheoremReport rep{"t9.8", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    if (!cls.comultiplication) {
        rep.instances_checked = rep.vacuous_instances = 1;
        return rep;
    }
    const SubLattice& l = cls.lattice;
    std::vector<int> minimals;
    for (int i = 0; i < l.size(); ++i)
        if (l.flag_minimal[static_cast<size_t>(i)]) minimals.push_back(i);
    for (int i = 0; i < l.size(); ++i)
        for (int j = i; j < l.size(); ++j) {
            const auto& fi = cls.rows[static_cast<size_t>(i)];
            const auto& fj = cls.rows[static_cast<size_t>(j)];
            bool same_sec = l.sec_idx[static_cast<size_t>(i)] == l.sec_idx[static_cast<size_t>(j)];
            int s = l.node_of(sum(l.nodes[static_cast<size_t>(i)], l.nodes[static_cast<size_t>(j)]));
            const auto& fsum = cls.rows[static_cast<size_t>(s)];

            ++rep.instances_checked; // (a)
            if (fi.strongly_two_abs_secondary && fj.strongly_two_abs_secondary && same_sec) {
                if (!fsum.strongly_two_abs_secondary)
                    rep.violations.push_back(json{{"part", "a"},
                                                  {"n1", detail::node_json(l, i)},
                                                  {"n2", detail::node_json(l, j)}});
            } else {
                ++rep.vacuous_instances;
            }

            ++rep.instances_checked; // (b)
            if (fi.two_abs_secondary && fj.two_abs_secondary && same_sec) {
                if (!fsum.two_abs_secondary)
                    rep.violations.push_back(json{{"part", "b"},
                                                  {"n1", detail::node_json(l, i)},
                                                  {"n2", detail::node_json(l, j)}});
            } else {
                ++rep.vacuous_instances;
            }

            ++rep.instances_checked; // (c)
            if (fi.secondary && fj.secondary) {
                if (!fsum.strongly_two_abs_secondary)
                    rep.violations.push_back(json{{"part", "c"},
                                                  {"n1", detail::node_json(l, i)},
                                                  {"n2", detail::node_json(l, j)}});
            } else {
                ++rep.vacuous_instances;
            }
        }
    // (d): sec(N) a sum of two distinct minimal submodules
    for (int idx = 0; idx < l.size(); ++idx) {
        ++rep.instances_checked;
        bool hyp = false;
        if (idx != l.zero_index) {
            for (std::size_t a = 0; a < minimals.size() && !hyp; ++a)
                for (std::size_t b = a + 1; b < minimals.size() && !hyp; ++b)
                    hyp = l.node_of(sum(l.nodes[static_cast<size_t>(minimals[a])],
                                        l.nodes[static_cast<size_t>(minimals[b])])) ==
                          l.sec_idx[static_cast<size_t>(idx)];
        }
        if (!hyp) {
            ++rep.vacuous_instances;
            continue;
        }
        if (!cls.rows[static_cast<size_t>(idx)].strongly_two_abs_secondary)
            rep.violations.push_back(json{{"part", "d"}, {"submodule", detail::node_json(l, idx)}});
    }
    return rep;
}

namespace detail_homs {

struct HomSet {
    // inclusion homs between submodule pairs, plus sampled injective homs per
    // distinct (source type, target type); each entry carries the classified
    // reports of its endpoints
    struct Entry {
        ModuleHom hom;
        const ClassificationReport* src;
        const ClassificationReport* tgt;
        std::string kind; // "inclusion" or "sampled"
    };
    std::vector<Entry> entries;
};

inline HomSet build_homs(HarnessContext& ctx) {
    HomSet hs;
    const SubLattice& l = ctx.main().lattice;
    // inclusions for every contained pair K1 <= K2
    for (int k1 = 0; k1 < l.size(); ++k1) {
        if (k1 == l.zero_index) continue; // zero source: trivially monic, nothing to check
        const auto& a1 = ctx.abstract_of(k1);
        for (int k2 = k1; k2 < l.size(); ++k2) {
            if (!l.contained(k1, k2)) continue;
            const auto& a2 = ctx.abstract_of(k2);
            Mat x = secmod::detail::inclusion_matrix(a1.embedding, a2.embedding);
            ModuleHom h = hom_make(a1.module, a2.module, x);
            if (!h.injective) throw std::logic_error("inclusion hom not injective");
            hs.entries.push_back({std::move(h), &ctx.classified(a1.module), &ctx.classified(a2.module),
                                  "inclusion"});
        }
    }
    // sampled injective homs per distinct type pair
    std::set<std::pair<std::vector<i64>, std::vector<i64>>> done;
    std::vector<const FinModule*> types;
    {
        std::set<std::vector<i64>> seen;
        for (int k = 0; k < l.size(); ++k) {
            if (k == l.zero_index) continue;
            const auto& a = ctx.abstract_of(k);
            if (seen.insert(a.module.factors).second) types.push_back(&a.module);
        }
    }
    for (const FinModule* src : types)
        for (const FinModule* tgt : types) {
            if (!done.insert({src->factors, tgt->factors}).second) continue;
            auto homs = secmod::detail::sample_injective_homs(*src, *tgt, ctx.options().hom_samples,
                                                              ctx.options().hom_attempt_factor);
            const auto* crep_src = &ctx.classified(*src);
            const auto* crep_tgt = &ctx.classified(*tgt);
            for (auto& h : homs)
                hs.entries.push_back({std::move(h), crep_src, crep_tgt, "sampled"});
        }
    return hs;
}

} // namespace detail_homs

// monomorphisms commute with the second radical: sec(f(N)) = f(sec(N)) and
// sec(f^{-1}(N')) = f^{-1}(sec(N')) for N' inside the image
inline TheoremReport check_l9_9(HarnessContext& ctx) {
    TheoremReport rep{"l9.9", print_module_expr(ctx.module())};
    auto hs = detail_homs::build_homs(ctx);
    for (const auto& e : hs.entries) {
        const SubLattice& src = e.src->lattice;
        const SubLattice& tgt = e.tgt->lattice;
        Submodule image = hom_image(e.hom, full_submodule(e.hom.source));
        for (int n = 0; n < src.size(); ++n) {
            ++rep.instances_checked;
            const Submodule& sn = src.nodes[static_cast<size_t>(n)];
            if (!(hom_image(e.hom, second_radical(sn)) == second_radical(hom_image(e.hom, sn))))
                rep.violations.push_back(json{{"part", "a"},
                                              {"kind", e.kind},
                                              {"submodule", detail::node_json(src, n)}});
        }
        int image_idx = tgt.node_of(image);
        for (int n = 0; n < tgt.size(); ++n) {
            if (!tgt.contained(n, image_idx)) continue;
            ++rep.instances_checked;
            const Submodule& tn = tgt.nodes[static_cast<size_t>(n)];
            if (!(hom_preimage(e.hom, second_radical(tn)) == second_radical(hom_preimage(e.hom, tn))))
                rep.violations.push_back(json{{"part", "b"},
                                              {"kind", e.kind},
                                              {"submodule", detail::node_json(tgt, n)}});
        }
    }
    return rep;
}

// monomorphisms transport strongly 2-absorbing secondary submodules both ways
inline TheoremReport check_t9_10(HarnessContext& ctx) {
    TheoremReport rep{"t9.10", print_module_expr(ctx.module())};
    auto hs = detail_homs::build_homs(ctx);
    for (const auto& e : hs.entries) {
        const SubLattice& src = e.src->lattice;
        const SubLattice& tgt = e.tgt->lattice;
        Submodule image = hom_image(e.hom, full_submodule(e.hom.source));
        int image_idx = tgt.node_of(image);
        for (int n = 0; n < src.size(); ++n) {
            ++rep.instances_checked;
            if (!e.src->rows[static_cast<size_t>(n)].strongly_two_abs_secondary) {
                ++rep.vacuous_instances;
                continue;
            }
            int img = tgt.node_of(hom_image(e.hom, src.nodes[static_cast<size_t>(n)]));
            if (!e.tgt->rows[static_cast<size_t>(img)].strongly_two_abs_secondary)
                rep.violations.push_back(json{{"part", "a"},
                                              {"kind", e.kind},
                                              {"submodule", detail::node_json(src, n)},
                                              {"image", detail::node_json(tgt, img)}});
        }
        for (int n = 0; n < tgt.size(); ++n) {
            ++rep.instances_checked;
            if (!e.tgt->rows[static_cast<size_t>(n)].strongly_two_abs_secondary ||
                !tgt.contained(n, image_idx)) {
                ++rep.vacuous_instances;
                continue;
            }
            int pre = src.node_of(hom_preimage(e.hom, tgt.nodes[static_cast<size_t>(n)]));
            if (!e.src->rows[static_cast<size_t>(pre)].strongly_two_abs_secondary)
                rep.violations.push_back(json{{"part", "b"},
                                              {"kind", e.kind},
                                              {"submodule", detail::node_json(tgt, n)},
                                              {"preimage", detail::node_json(src, pre)}});
        }
    }
    return rep;
}

// N <= K: strongly 2-absorbing secondary inside K iff inside M
inline TheoremReport check_c9_11(HarnessContext& ctx) {
    TheoremReport rep{"c9.11", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    const SubLattice& l = cls.lattice;
    for (int k = 0; k < l.size(); ++k) {
        if (k == l.zero_index) continue;
        const auto& ak = ctx.abstract_of(k);
        const auto& krep = ctx.classified(ak.module);
        for (int n = 0; n < l.size(); ++n) {
            if (!l.contained(n, k)) continue;
            ++rep.instances_checked;
            if (n == l.zero_index) {
                ++rep.vacuous_instances;
                continue;
            }
            int pulled = krep.lattice.node_of(hom_preimage(ak.embedding, l.nodes[static_cast<size_t>(n)]));
            bool in_m = cls.rows[static_cast<size_t>(n)].strongly_two_abs_secondary;
            bool in_k = krep.rows[static_cast<size_t>(pulled)].strongly_two_abs_secondary;
            if (in_m != in_k)
                rep.violations.push_back(json{{"submodule", detail::node_json(l, n)},
                                              {"ambient", detail::node_json(l, k)},
                                              {"in_module", in_m},
                                              {"in_ambient", in_k}});
        }
    }
    return rep;
}

// lifting strongly 2-absorbing secondary through the quotient by the minimal
// submodule of a cocyclic module, under the rN != K side condition
inline TheoremReport check_p9_12(HarnessContext& ctx) {
    TheoremReport rep{"p9.12", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    if (!cls.cocyclic) {
        rep.instances_checked = rep.vacuous_instances = 1;
        return rep;
    }
    const SubLattice& l = cls.lattice;
    int k = -1;
    for (int i = 0; i < l.size(); ++i)
        if (l.flag_minimal[static_cast<size_t>(i)]) k = i;
    auto [q, proj] = quotient(ctx.module(), l.nodes[static_cast<size_t>(k)]);
    const auto& qrep = ctx.classified(q);
    for (int n = 0; n < l.size(); ++n) {
        ++rep.instances_checked;
        bool hyp = l.contained(k, n);
        for (i64 r = 0; r < ctx.module().ring && hyp; ++r)
            if (l.scalar_img[static_cast<size_t>(r)][static_cast<size_t>(n)] == k) hyp = false;
        if (hyp) {
            int qn = qrep.lattice.node_of(hom_image(proj, l.nodes[static_cast<size_t>(n)]));
            hyp = qrep.rows[static_cast<size_t>(qn)].strongly_two_abs_secondary;
        }
        if (!hyp) {
            ++rep.vacuous_instances;
            continue;
        }
        if (!cls.rows[static_cast<size_t>(n)].strongly_two_abs_secondary)
            rep.violations.push_back(json{{"submodule", detail::node_json(l, n)}});
    }
    return rep;
}

// over a decomposed ring, second submodules are one-sided and the second
// radical splits componentwise
inline TheoremReport check_l9_13(HarnessContext& ctx) {
    TheoremReport rep{"l9.13", print_module_expr(ctx.module())};
    auto splits = ctx.ring_splits();
    if (splits.empty()) {
        rep.instances_checked = rep.vacuous_instances = 1;
        return rep;
    }
    const SubLattice& l = ctx.main().lattice;
    for (auto [n1, n2] : splits) {
        ProductDecomposition d = product_decompose(ctx.module(), n1, n2);
        for (int n = 0; n < l.size(); ++n) {
            ++rep.instances_checked;
            const Submodule& sn = l.nodes[static_cast<size_t>(n)];
            auto [c1, c2] = product_split(d, sn);
            // (a) second iff exactly one one-sided component, itself second
            bool lhs = l.flag_second[static_cast<size_t>(n)];
            bool rhs = (c2.is_zero() && !c1.is_zero() && is_second(c1)) ||
                       (c1.is_zero() && !c2.is_zero() && is_second(c2));
            bool ok = lhs == rhs;
            // (b) sec(N) = sec(N1) x sec(N2)
            Submodule sec_split = product_combine(d, second_radical(c1), second_radical(c2));
            if (!(second_radical(sn) == sec_split)) ok = false;
            if (!ok)
                rep.violations.push_back(json{{"split", json::array({n1, n2})},
                                              {"submodule", detail::node_json(l, n)},
                                              {"second_in_module", lhs},
                                              {"one_sided_second", rhs}});
        }
    }
    return rep;
}

// componentwise transport of strongly 2-absorbing secondary over M1 x M2,
// and sums of one secondary submodule from each side
inline TheoremReport check_t9_14(HarnessContext& ctx) {
    TheoremReport rep{"t9.14", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    auto splits = ctx.ring_splits();
    if (!cls.comultiplication || splits.empty()) {
        rep.instances_checked = rep.vacuous_instances = 1;
        return rep;
    }
    const SubLattice& l = cls.lattice;
    for (auto [n1, n2] : splits) {
        ProductDecomposition d = product_decompose(ctx.module(), n1, n2);
        const auto& rep1 = ctx.classified(d.m1);
        const auto& rep2 = ctx.classified(d.m2);
        auto check_side = [&](const ClassificationReport& side, const ModuleHom& embed,
                              const char* part) {
            for (int k = 0; k < side.lattice.size(); ++k) {
                ++rep.instances_checked;
                if (k == side.lattice.zero_index) {
                    ++rep.vacuous_instances;
                    continue;
                }
                int img = l.node_of(hom_image(embed, side.lattice.nodes[static_cast<size_t>(k)]));
                bool inside = side.rows[static_cast<size_t>(k)].strongly_two_abs_secondary;
                bool in_m = cls.rows[static_cast<size_t>(img)].strongly_two_abs_secondary;
                if (inside != in_m)
                    rep.violations.push_back(json{{"part", part},
                                                  {"split", json::array({d.n1, d.n2})},
                                                  {"component", detail::node_json(side.lattice, k)},
                                                  {"in_component", inside},
                                                  {"in_module", in_m}});
            }
        };
        check_side(rep1, d.embed1, "a");
        check_side(rep2, d.embed2, "b");
        // (c) K1, K2 secondary on each side: K1 x K2 strongly 2-absorbing secondary
        for (int k1 = 0; k1 < rep1.lattice.size(); ++k1)
            for (int k2 = 0; k2 < rep2.lattice.size(); ++k2) {
                ++rep.instances_checked;
                if (!rep1.rows[static_cast<size_t>(k1)].secondary ||
                    !rep2.rows[static_cast<size_t>(k2)].secondary) {
                    ++rep.vacuous_instances;
                    continue;
                }
                int s = l.node_of(product_combine(d, rep1.lattice.nodes[static_cast<size_t>(k1)],
                                                  rep2.lattice.nodes[static_cast<size_t>(k2)]));
                if (!cls.rows[static_cast<size_t>(s)].strongly_two_abs_secondary)
                    rep.violations.push_back(json{{"part", "c"},
                                                  {"split", json::array({d.n1, d.n2})},
                                                  {"k1", detail::node_json(rep1.lattice, k1)},
                                                  {"k2", detail::node_json(rep2.lattice, k2)}});
            }
    }
    return rep;
}

// on comultiplication modules: secondary iff the annihilator is primary
inline TheoremReport check_t9_15(HarnessContext& ctx) {
    TheoremReport rep{"t9.15", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    if (!cls.comultiplication) {
        rep.instances_checked = rep.vacuous_instances = 1;
        return rep;
    }
    const SubLattice& l = cls.lattice;
    for (int idx = 0; idx < l.size(); ++idx) {
        ++rep.instances_checked;
        if (idx == l.zero_index) {
            ++rep.vacuous_instances;
            continue;
        }
        Ideal ann{l.ann_gen[static_cast<size_t>(idx)], ctx.module().ring_spec()};
        bool secondary = cls.rows[static_cast<size_t>(idx)].secondary;
        if (secondary != is_primary_ideal(ann))
            rep.violations.push_back(json{{"submodule", detail::node_json(l, idx)},
                                          {"annihilator", ann.gen},
                                          {"secondary", secondary}});
    }
    return rep;
}

// classification of strongly 2-absorbing secondary submodules of M1 x M2
inline TheoremReport check_t9_16(HarnessContext& ctx) {
    TheoremReport rep{"t9.16", print_module_expr(ctx.module())};
    const auto& cls = ctx.main();
    auto splits = ctx.ring_splits();
    if (!cls.comultiplication || splits.empty()) {
        rep.instances_checked = rep.vacuous_instances = 1;
        return rep;
    }
    const SubLattice& l = cls.lattice;
    for (auto [n1, n2] : splits) {
        ProductDecomposition d = product_decompose(ctx.module(), n1, n2);
        const auto& rep1 = ctx.classified(d.m1);
        const auto& rep2 = ctx.classified(d.m2);
        for (int n = 0; n < l.size(); ++n) {
            ++rep.instances_checked;
            if (n == l.zero_index) {
                ++rep.vacuous_instances;
                continue;
            }
            auto [c1, c2] = product_split(d, l.nodes[static_cast<size_t>(n)]);
            int i1 = rep1.lattice.node_of(c1);
            int i2 = rep2.lattice.node_of(c2);
            bool lhs = cls.rows[static_cast<size_t>(n)].strongly_two_abs_secondary;
            bool rhs = (c1.is_zero() && rep2.rows[static_cast<size_t>(i2)].strongly_two_abs_secondary) ||
                       (c2.is_zero() && rep1.rows[static_cast<size_t>(i1)].strongly_two_abs_secondary) ||
                       (rep1.rows[static_cast<size_t>(i1)].secondary &&
                        rep2.rows[static_cast<size_t>(i2)].secondary);
            if (lhs != rhs)
                rep.violations.push_back(json{{"split", json::array({d.n1, d.n2})},
                                              {"submodule", detail::node_json(l, n)},
                                              {"strongly", lhs},
                                              {"classified", rhs}});
        }
    }
    return rep;
}

} // namespace theorems

// ---------------------------------------------------------------------------
// Dispatch.
// ---------------------------------------------------------------------------

inline const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {
        "l1.3", "l1.4", "t1.5", "l9.2", "t9.4", "t9.5", "l9.6", "p1.5", "t9.7",
        "t9.8", "l9.9", "t9.10", "c9.11", "p9.12", "l9.13", "t9.14", "t9.15", "t9.16"};
    return ids;
}

inline TheoremReport check_theorem_in_context(const std::string& id, HarnessContext& ctx) {
    using Fn = TheoremReport (*)(HarnessContext&);
    static const std::map<std::string, Fn> table = {
        {"l1.3", theorems::check_l1_3},   {"l1.4", theorems::check_l1_4},
        {"t1.5", theorems::check_t1_5},   {"l9.2", theorems::check_l9_2},
        {"t9.4", theorems::check_t9_4},   {"t9.5", theorems::check_t9_5},
        {"l9.6", theorems::check_l9_6},   {"p1.5", theorems::check_p1_5},
        {"t9.7", theorems::check_t9_7},   {"t9.8", theorems::check_t9_8},
        {"l9.9", theorems::check_l9_9},   {"t9.10", theorems::check_t9_10},
        {"c9.11", theorems::check_c9_11}, {"p9.12", theorems::check_p9_12},
        {"l9.13", theorems::check_l9_13}, {"t9.14", theorems::check_t9_14},
        {"t9.15", theorems::check_t9_15}, {"t9.16", theorems::check_t9_16}};
    auto it = table.find(id);
    if (it == table.end()) throw std::invalid_argument("unknown theorem id: " + id);
    TheoremReport rep = it->second(ctx);
    rep.module = ctx.module();
    return rep;
}

inline TheoremReport check_theorem(const std::string& id, const FinModule& m,
                                   const HarnessOptions& opt = {}) {
    HarnessContext ctx(m, opt);
    return check_theorem_in_context(id, ctx);
}

/// All theorem ids against one module, sharing the classified lattice cache.
inline std::vector<TheoremReport> check_all_theorems(const FinModule& m,
                                                     const HarnessOptions& opt = {}) {
    HarnessContext ctx(m, opt);
    std::vector<TheoremReport> out;
    for (const auto& id : theorem_ids()) out.push_back(check_theorem_in_context(id, ctx));
    return out;
}

/// One id (or every id for "all") across a corpus; modules fan out over
/// workers and reports merge in corpus order.
inline std::vector<TheoremReport> check_theorem_corpus(const std::string& id_or_all,
                                                       const CorpusSpec& spec,
                                                       const HarnessOptions& opt = {}) {
    auto corpus = corpus_generate(spec);
    std::vector<std::vector<TheoremReport>> slots(corpus.size());
    parallel_for(corpus.size(), opt.workers, [&](std::size_t i) {
        if (id_or_all == "all") {
            slots[i] = check_all_theorems(corpus[i], opt);
        } else {
            slots[i] = {check_theorem(id_or_all, corpus[i], opt)};
        }
    });
    std::vector<TheoremReport> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    return out;
}

// ---------------------------------------------------------------------------
// Counterexample search.
// ---------------------------------------------------------------------------

inline const std::map<std::string, bool SubmoduleFlags::*>& class_registry() {
    static const std::map<std::string, bool SubmoduleFlags::*> reg = {
        {"second", &SubmoduleFlags::second},
        {"secondary", &SubmoduleFlags::secondary},
        {"second-radical", &SubmoduleFlags::second_radical_submodule},
        {"2-abs-second", &SubmoduleFlags::two_abs_second},
        {"strongly-2-abs-second", &SubmoduleFlags::strongly_two_abs_second},
        {"2-abs-secondary", &SubmoduleFlags::two_abs_secondary},
        {"strongly-2-abs-secondary", &SubmoduleFlags::strongly_two_abs_secondary},
        {"2-abs-submodule", &SubmoduleFlags::two_abs_submodule},
        {"2-abs-primary-submodule", &SubmoduleFlags::two_abs_primary_submodule},
        {"prime", &SubmoduleFlags::prime},
        {"completely-irreducible", &SubmoduleFlags::completely_irreducible},
        {"minimal", &SubmoduleFlags::minimal}};
    return reg;
}

struct SearchWitness {
    FinModule module;
    Submodule submodule;
};

/// All (module, submodule) pairs in the corpus where the antecedent class
/// holds and the consequent fails. An empty result is only a statement about
/// the searched bound; it never claims non-existence.
inline std::vector<SearchWitness> search_counterexample(const std::string& antecedent,
                                                        const std::string& consequent,
                                                        const CorpusSpec& spec,
                                                        const HarnessOptions& opt = {}) {
    const auto& reg = class_registry();
    auto ia = reg.find(antecedent);
    auto ic = reg.find(consequent);
    if (ia == reg.end()) throw std::invalid_argument("unknown class id: " + antecedent);
    if (ic == reg.end()) throw std::invalid_argument("unknown class id: " + consequent);
    auto corpus = corpus_generate(spec);
    std::vector<std::vector<SearchWitness>> slots(corpus.size());
    parallel_for(corpus.size(), opt.workers, [&](std::size_t i) {
        auto rep = classify_all(corpus[i], 1, opt.lattice_bound, opt.element_bound);
        for (std::size_t r = 0; r < rep.rows.size(); ++r)
            if (rep.rows[r].*(ia->second) && !(rep.rows[r].*(ic->second)))
                slots[i].push_back({corpus[i], rep.lattice.nodes[r]});
    });
    std::vector<SearchWitness> out;
    for (auto& s : slots)
        for (auto& w : s) out.push_back(std::move(w));
    return out;
}

} // namespace secmod
