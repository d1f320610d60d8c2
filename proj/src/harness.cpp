#include "gcpoly/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gcpoly/charpoly.hpp"
#include "gcpoly/rewrite.hpp"
#include "gcpoly/semidirect.hpp"
#include "gcpoly/words.hpp"

namespace gcp {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Ctx {
    const SuiteConfig& cfg;
    std::vector<CheckResult>& out;

    /// Runs one check; any exception becomes a failure with the message as
    /// witness.
    template <class F>
    void run(const std::string& id, F&& body) {
        auto t0 = std::chrono::steady_clock::now();
        CheckResult res;
        res.id = id;
        try {
            auto [pass, witness] = body();
            res.pass = pass;
            res.witness = witness;
        } catch (const std::exception& e) {
            res.pass = false;
            res.witness = std::string("error: ") + e.what();
        }
        res.ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                       std::chrono::steady_clock::now() - t0)
                                       .count());
        out.push_back(std::move(res));
    }
};

using Verdict = std::pair<bool, std::string>;

Verdict ok() { return {true, ""}; }
Verdict fail(const std::string& w) { return {false, w}; }

GroupElem gen(char kind, unsigned idx, const GroupDescriptor& d) {
    return monomial_from_generator({kind, idx}, d);
}

GroupElem prod(std::initializer_list<GroupElem> xs) {
    auto it = xs.begin();
    GroupElem acc = *it++;
    for (; it != xs.end(); ++it) acc = elem_mul(acc, *it);
    return acc;
}

// ---------------------------------------------------------------- suites

void suite_presentation(Ctx& c) {
    for (unsigned r : {2u, 3u, 4u})
        for (unsigned n : {2u, 3u}) {
            std::string id = "presentation/relations-r" + std::to_string(r) + "-n" +
                             std::to_string(n);
            c.run(id, [&]() -> Verdict {
                GroupDescriptor d(r, 1, n);
                GroupElem one = identity_elem(r, n);
                for (unsigned i = 1; i < n; ++i) {
                    GroupElem s = gen('s', i, d);
                    if (!(elem_mul(s, s) == one)) return fail("s" + std::to_string(i) + "^2 != 1");
                }
                for (unsigned j = 1; j <= n; ++j) {
                    GroupElem acc = one;
                    for (unsigned k = 0; k < r; ++k) acc = elem_mul(acc, gen('t', j, d));
                    if (!(acc == one)) return fail("t" + std::to_string(j) + "^r != 1");
                }
                for (unsigned i = 1; i + 1 < n; ++i)
                    for (unsigned j = i + 2; j < n; ++j) {
                        GroupElem si = gen('s', i, d), sj = gen('s', j, d);
                        if (!(elem_mul(si, sj) == elem_mul(sj, si)))
                            return fail("distant s generators fail to commute");
                    }
                for (unsigned i = 1; i + 1 < n; ++i) {
                    GroupElem si = gen('s', i, d), sj = gen('s', i + 1, d);
                    if (!(prod({si, sj, si}) == prod({sj, si, sj})))
                        return fail("braid relation fails at i=" + std::to_string(i));
                }
                {
                    GroupElem s = gen('s', n - 1, d), t = gen('t', n, d);
                    if (!(prod({s, t, s, t}) == prod({t, s, t, s})))
                        return fail("length-4 mixed relation fails");
                }
                for (unsigned i = 1; i + 1 < n; ++i) {
                    GroupElem si = gen('s', i, d), t = gen('t', n, d);
                    if (!(elem_mul(si, t) == elem_mul(t, si)))
                        return fail("s_i and t_n fail to commute for i <= n-2");
                }
                for (unsigned i = 1; i <= n; ++i) {
                    GroupElem acc = gen('t', n, d);
                    for (unsigned j = n - 1; j >= i && j >= 1; --j) {
                        GroupElem s = gen('s', j, d);
                        acc = prod({s, acc, s});
                    }
                    if (!(acc == gen('t', i, d)))
                        return fail("t_i conjugation formula fails at i=" + std::to_string(i));
                }
                return ok();
            });
        }

    struct OrderCase { unsigned r, p, n; std::size_t expect; };
    for (OrderCase oc : {OrderCase{2, 1, 2, 8}, OrderCase{3, 1, 2, 18},
                         OrderCase{2, 1, 3, 48}, OrderCase{4, 2, 2, 16}}) {
        std::string id = "presentation/order-G(" + std::to_string(oc.r) + "," +
                         std::to_string(oc.p) + "," + std::to_string(oc.n) + ")";
        c.run(id, [&]() -> Verdict {
            GroupDescriptor d(oc.r, oc.p, oc.n);
            std::size_t got = enumerate_group(d, c.cfg.group_cap).size();
            if (got != oc.expect || got != d.order())
                return fail("BFS found " + std::to_string(got) + ", expected " +
                            std::to_string(oc.expect));
            return ok();
        });
    }
}

void suite_prop22(Ctx& c) {
    for (unsigned r : {2u, 3u, 4u})
        for (unsigned n : {2u, 3u}) {
            std::string id = "prop22/identities-r" + std::to_string(r) + "-n" +
                             std::to_string(n);
            c.run(id, [&]() -> Verdict {
                GroupDescriptor d(r, 1, n);
                for (unsigned i = 1; i < n; ++i) {
                    GroupElem s = gen('s', i, d);
                    if (!(elem_mul(s, gen('t', i, d)) == elem_mul(gen('t', i + 1, d), s)))
                        return fail("s_i t_i = t_{i+1} s_i fails at i=" + std::to_string(i));
                    if (!(elem_mul(s, gen('t', i + 1, d)) == elem_mul(gen('t', i, d), s)))
                        return fail("s_i t_{i+1} = t_i s_i fails at i=" + std::to_string(i));
                    for (unsigned k = 1; k <= n; ++k) {
                        if (!(k + 1 <= i || k >= i + 2)) continue;  // k <= i-1 or k >= i+2
                        GroupElem t = gen('t', k, d);
                        if (!(elem_mul(s, t) == elem_mul(t, s)))
                            return fail("s_i t_k commutation fails at i=" + std::to_string(i) +
                                        ", k=" + std::to_string(k));
                    }
                }
                for (unsigned i = 1; i <= n; ++i)
                    for (unsigned j = 1; j <= n; ++j) {
                        GroupElem a = gen('t', i, d), b = gen('t', j, d);
                        if (!(elem_mul(a, b) == elem_mul(b, a)))
                            return fail("t generators fail to commute");
                    }
                return ok();
            });
        }
}

std::vector<Letter> alphabet_for(const GroupDescriptor& d) {
    std::vector<Letter> a;
    for (unsigned i = 1; i < d.n; ++i) a.push_back({'s', i, 0});
    for (unsigned i = 1; i <= d.n; ++i) a.push_back({'t', i, 0});
    return a;
}

template <class F>
void for_all_words(const GroupDescriptor& d, std::size_t max_len, F&& f) {
    std::vector<Letter> a = alphabet_for(d);
    std::vector<std::size_t> idx;
    Word w;
    f(w);
    while (true) {
        if (idx.size() < max_len) {
            idx.push_back(0);
        } else {
            while (!idx.empty() && ++idx.back() == a.size()) idx.pop_back();
            if (idx.empty()) break;
        }
        w.clear();
        for (std::size_t k : idx) w.push_back(a[k]);
        f(w);
    }
}

void suite_echelon(Ctx& c) {
    // admissible transformations: conjugacy-preserving and ct-non-increasing
    for (auto [r, n] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {3, 2}}) {
        std::string id = "echelon/rule-soundness-G(" + std::to_string(r) + ",1," +
                         std::to_string(n) + ")";
        c.run(id, [&, r = r, n = n]() -> Verdict {
            GroupDescriptor d(r, 1, n);
            auto elems = enumerate_group(d);
            Alphabet alpha{n, r};
            std::string bad;
            std::size_t applied = 0;
            for_all_words(d, 5, [&](const Word& w) {
                if (!bad.empty()) return;
                CtKey before_ct = ct_key(w, n);
                GroupElem before = evaluate_word(w, d);
                for (Rule rule : {Rule::CancelS, Rule::CancelT, Rule::CommuteSS,
                                  Rule::CommuteTT, Rule::CommuteST, Rule::Braid,
                                  Rule::PushT, Rule::Collapse, Rule::Circular})
                    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
                        Word next;
                        try {
                            next = apply_transformation(w, rule, pos, alpha);
                        } catch (const RuleApplicationError&) {
                            continue;
                        }
                        ++applied;
                        GroupElem after = evaluate_word(next, d);
                        if (!is_conjugate_brute(before, after, elems)) {
                            bad = std::string(rule_name(rule)) + " broke conjugacy on '" +
                                  word_to_string(w) + "'";
                            return;
                        }
                        if (lex_compare(ct_key(next, n), before_ct) == Ordering::GT) {
                            bad = std::string(rule_name(rule)) + " increased ct on '" +
                                  word_to_string(w) + "'";
                            return;
                        }
                    }
            });
            if (!bad.empty()) return fail(bad);
            return {true, std::to_string(applied) + " rule instances verified"};
        });
    }

    // echelonization: termination, echelon output, conjugacy, ct monotone
    struct EchCase { unsigned r, n; std::size_t len; };
    for (EchCase ec : {EchCase{2, 2, 8}, EchCase{3, 2, 6}, EchCase{2, 3, 6}}) {
        std::string id = "echelon/normalize-G(" + std::to_string(ec.r) + ",1," +
                         std::to_string(ec.n) + ")-len" + std::to_string(ec.len);
        c.run(id, [&]() -> Verdict {
            GroupDescriptor d(ec.r, 1, ec.n);
            auto elems = enumerate_group(d);
            std::string bad;
            std::size_t count = 0;
            for_all_words(d, ec.len, [&](const Word& w) {
                if (!bad.empty()) return;
                ++count;
                EchelonizeResult res = echelonize(w, d, c.cfg.word_cap);
                if (res.trace.size() > 50 * w.size() * w.size()) {
                    bad = "step budget exceeded on '" + word_to_string(w) + "'";
                    return;
                }
                Word flat = res.echelon.flatten();
                if (!is_echelon(flat, {ec.n, ec.r})) {
                    bad = "output not echelon for '" + word_to_string(w) + "'";
                    return;
                }
                if (!is_conjugate_brute(evaluate_word(w, d), evaluate_word(flat, d), elems)) {
                    bad = "conjugacy broken for '" + word_to_string(w) + "'";
                    return;
                }
                if (lex_compare(ct_key(flat, ec.n), ct_key(w, ec.n)) == Ordering::GT) {
                    bad = "ct increased for '" + word_to_string(w) + "'";
                    return;
                }
            });
            if (!bad.empty()) return fail(bad);
            return {true, std::to_string(count) + " words echelonized"};
        });
    }

    // ct-key injectivity on echelon words plus recovery round-trip
    c.run("echelon/ct-key-injective-recover", [&]() -> Verdict {
        for (unsigned n = 2; n <= 3; ++n)
            for (unsigned r = 2; r <= 4; ++r) {
                GroupDescriptor d(r, 1, n);
                std::map<CtKey, EchelonWord> seen;
                // enumerate every echelon word
                std::vector<EchelonWord> all;
                EchelonWord base;
                base.n = n;
                base.r = r;
                base.blocks.assign(n, EchelonBlock{});
                std::vector<unsigned> choice(n, 0);
                for (;;) {
                    EchelonWord e = base;
                    for (unsigned i = 0; i < n; ++i) {
                        unsigned ch = choice[i];
                        if (ch == 0) e.blocks[i] = {'1', 0};
                        else if (ch <= r - 1) e.blocks[i] = {'t', ch};
                        else e.blocks[i] = {'s', 0};
                    }
                    all.push_back(e);
                    unsigned i = 0;
                    while (i < n) {
                        unsigned limit = (i + 1 < n) ? r : r - 1;  // last block has no s
                        if (++choice[i] <= limit) break;
                        choice[i++] = 0;
                    }
                    if (i == n) break;
                }
                for (const EchelonWord& e : all) {
                    CtKey key = e.ct();
                    auto [it, fresh] = seen.emplace(key, e);
                    if (!fresh)
                        return fail("ct-key collision at r=" + std::to_string(r) +
                                    ", n=" + std::to_string(n) + ": '" +
                                    word_to_string(e.flatten()) + "' vs '" +
                                    word_to_string(it->second.flatten()) + "'");
                    if (!(ct_recover(key, d) == e))
                        return fail("recovery mismatch for '" +
                                    word_to_string(e.flatten()) + "'");
                }
            }
        return ok();
    });
}

void suite_thm24(Ctx& c) {
    c.run("thm24/brute-vs-coefficient-G(2,1,2)", [&]() -> Verdict {
        auto g = shared_group(imprimitive_finite_group(GroupDescriptor(2, 1, 2)));
        auto chars = one_dim_characters(2, 2, g);
        std::vector<Rep> reps = {chars[0], chars[2], reflection_rep(2, 2, g)};
        std::vector<std::string> names = {"trivial", "sign", "reflection"};
        for (std::size_t ri = 0; ri < reps.size(); ++ri)
            for (unsigned a = 0; a <= 4; ++a)
                for (unsigned b = 0; a + b <= 4; ++b)
                    for (unsigned bn = 0; a + b + bn <= 4; ++bn) {
                        Signature alpha = {a, b, bn};
                        CycNum brute = signature_sum(reps[ri], alpha, 2,
                                                     SigSumMethod::Brute, c.cfg.weight_cap);
                        CycNum coef = signature_sum(reps[ri], alpha, 2,
                                                    SigSumMethod::Coefficient);
                        if (!(brute == coef))
                            return fail(names[ri] + " disagrees at alpha=(" +
                                        std::to_string(a) + "," + std::to_string(b) + "," +
                                        std::to_string(bn) + "): " + brute.to_string() +
                                        " vs " + coef.to_string());
                    }
        return ok();
    });

    c.run("thm24/equal-charpoly-implies-equal-sums", [&]() -> Verdict {
        auto g = shared_group(imprimitive_finite_group(GroupDescriptor(2, 1, 2)));
        Rep refl = reflection_rep(2, 2, g);
        FieldPtr f = refl.field();
        ExactMat x(2, 2, CycNum::zero(f));
        x(0, 0) = CycNum::from_rational(f, 1);
        x(0, 1) = CycNum::from_rational(f, 2);
        x(1, 0) = CycNum::from_rational(f, 1);
        x(1, 1) = CycNum::from_rational(f, 3);
        Rep conj = conjugated(refl, x);
        if (!(det_exact(make_pencil(refl), c.cfg.det_cap) ==
              det_exact(make_pencil(conj), c.cfg.det_cap)))
            return fail("conjugate rep has a different characteristic polynomial");
        for (unsigned a = 0; a <= 4; ++a)
            for (unsigned b = 0; a + b <= 4; ++b)
                for (unsigned bn = 0; a + b + bn <= 4; ++bn) {
                    Signature alpha = {a, b, bn};
                    if (!(signature_sum(refl, alpha, 2, SigSumMethod::Brute) ==
                          signature_sum(conj, alpha, 2, SigSumMethod::Brute)))
                        return fail("signature sums differ at alpha=(" + std::to_string(a) +
                                    "," + std::to_string(b) + "," + std::to_string(bn) + ")");
                }
        return ok();
    });
}

/// Pairwise verdict matrix: characteristic-polynomial equality must match
/// character equivalence. Exact expansion under the dimension cap, PIT above.
Verdict equal_iff_equivalent(const std::vector<Rep>& family,
                             const std::vector<std::string>& names,
                             const std::vector<int>& gen_set, const SuiteConfig& cfg,
                             std::uint64_t seed_salt) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            bool equivalent = equivalent_p(family[i], family[j], cfg.char_tol);
            bool equal;
            std::string how;
            if (family[i].dim() == family[j].dim() && family[i].dim() <= 4 &&
                family[i].field()->r() == family[j].field()->r()) {
                Pencil pi = make_pencil(family[i], gen_set);
                Pencil pj = make_pencil(family[j], gen_set);
                equal = det_exact(pi, cfg.det_cap) == det_exact(pj, cfg.det_cap);
                how = "exact";
            } else {
                PitVerdict v = charpoly_equal(family[i], family[j], gen_set, cfg.trials,
                                              cfg.seed + seed_salt + i * 101 + j);
                equal = v.equal;
                how = "pit";
                if (!equal && v.witness.empty() && v.note.find("degree") == std::string::npos)
                    return fail("unequal verdict lacks a witness: " + names[i] + " vs " +
                                names[j]);
            }
            if (equal != equivalent)
                return fail(names[i] + " vs " + names[j] + " (" + how + "): charpoly " +
                            (equal ? "equal" : "unequal") + " but reps " +
                            (equivalent ? "equivalent" : "inequivalent"));
        }
    return ok();
}

std::pair<std::vector<Rep>, std::vector<std::string>> g212_family(const GroupPtr& g) {
    auto chars = one_dim_characters(2, 2, g);
    Rep refl = reflection_rep(2, 2, g);
    std::vector<Rep> family = {chars[0], chars[1], chars[2], chars[3], refl};
    std::vector<std::string> names = {"chi(+,0)", "chi(+,1)", "chi(-,0)", "chi(-,1)",
                                      "reflection"};
    family.push_back(rep_combine(CombineOp::Dual, refl));
    names.push_back("dual(reflection)");
    family.push_back(rep_combine(CombineOp::Tensor, refl, &chars[2]));
    names.push_back("reflection*sign");
    family.push_back(rep_combine(CombineOp::Tensor, refl, &refl));
    names.push_back("reflection^2");
    family.push_back(rep_combine(CombineOp::DirectSum, chars[0], &refl));
    names.push_back("trivial+reflection");
    family.push_back(rep_combine(CombineOp::DirectSum, chars[2], &refl));
    names.push_back("sign+reflection");
    return {family, names};
}

void suite_thm36(Ctx& c) {
    c.run("thm36/equal-iff-equivalent-G(2,1,2)", [&]() -> Verdict {
        auto g = shared_group(imprimitive_finite_group(GroupDescriptor(2, 1, 2)));
        auto [family, names] = g212_family(g);
        return equal_iff_equivalent(family, names, g->generator_elements(), c.cfg, 36);
    });

    c.run("thm36/basis-invariance-G(2,1,2)", [&]() -> Verdict {
        auto g = shared_group(imprimitive_finite_group(GroupDescriptor(2, 1, 2)));
        auto [family, names] = g212_family(g);
        std::mt19937_64 rng(c.cfg.seed + 3601);
        for (std::size_t fi = 0; fi < family.size(); ++fi) {
            const Rep& rep = family[fi];
            if (rep.dim() > 4) continue;
            MultiPoly expect = det_exact(make_pencil(rep), c.cfg.det_cap);
            for (int trial = 0; trial < 5; ++trial) {
                unsigned d = rep.dim();
                FieldPtr f = rep.field();
                ExactMat x(d, d, CycNum::zero(f));
                for (;;) {
                    for (unsigned i = 0; i < d; ++i)
                        for (unsigned j = 0; j < d; ++j)
                            x(i, j) = CycNum::from_rational(
                                f, static_cast<long>(rng() % 7) - 3);
                    try {
                        gauss_inverse(x);
                        break;
                    } catch (const DomainError&) {
                    }
                }
                Rep conj = conjugated(rep, x);
                if (!(det_exact(make_pencil(conj), c.cfg.det_cap) == expect))
                    return fail(names[fi] + ": basis change altered the polynomial");
            }
        }
        return ok();
    });

    c.run("thm36/equal-iff-equivalent-G(3,1,2)", [&]() -> Verdict {
        auto g = shared_group(imprimitive_finite_group(GroupDescriptor(3, 1, 2)));
        auto chars = one_dim_characters(3, 2, g);
        Rep refl = reflection_rep(3, 2, g);
        std::vector<Rep> family = chars;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < chars.size(); ++i)
            names.push_back("chi" + std::to_string(i));
        family.push_back(refl);
        names.push_back("reflection");
        family.push_back(galois_twist(refl, 2));
        names.push_back("twist(reflection,2)");
        return equal_iff_equivalent(family, names, g->generator_elements(), c.cfg, 3612);
    });
}

void suite_product(Ctx& c) {
    c.run("product/equal-iff-equivalent-G(2,1,2)xG(2,1,2)", [&]() -> Verdict {
        FiniteGroup g1 = imprimitive_finite_group(GroupDescriptor(2, 1, 2));
        auto gp = shared_group(direct_product(g1, g1));
        if (gp->order() != 64) return fail("product order " + std::to_string(gp->order()));

        auto g = shared_group(imprimitive_finite_group(GroupDescriptor(2, 1, 2)));
        auto chars = one_dim_characters(2, 2, g);
        Rep refl = reflection_rep(2, 2, g);
        std::vector<Rep> factor = {chars[0], chars[2], refl};
        std::vector<std::string> fnames = {"triv", "sign", "refl"};
        FieldPtr f = CycloField::get(2);

        // outer tensor products rho1 (x) rho2 from the factor images
        auto outer = [&](const Rep& a, const Rep& b) {
            std::vector<ExactMat> images;
            CycNum zero = CycNum::zero(f), one = CycNum::one(f);
            ExactMat ia = ExactMat::identity(a.dim(), zero, one);
            ExactMat ib = ExactMat::identity(b.dim(), zero, one);
            for (int ge : g->generator_elements())
                images.push_back(ExactMat::tensor(a.exact_image(ge), ib));
            for (int ge : g->generator_elements())
                images.push_back(ExactMat::tensor(ia, b.exact_image(ge)));
            return Rep::exact(gp, f, std::move(images));
        };
        std::vector<Rep> family;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < factor.size(); ++i)
            for (std::size_t j = 0; j < factor.size(); ++j) {
                family.push_back(outer(factor[i], factor[j]));
                names.push_back(fnames[i] + "(x)" + fnames[j]);
            }
        return equal_iff_equivalent(family, names, gp->generator_elements(), c.cfg, 312);
    });

    c.run("product/echelonize-separation", [&]() -> Verdict {
        GroupDescriptor d1(2, 1, 2), d2(3, 1, 2);
        auto e1 = enumerate_group(d1);
        auto e2 = enumerate_group(d2);
        std::mt19937_64 rng(c.cfg.seed + 314);
        for (int trial = 0; trial < 200; ++trial) {
            Word w;
            std::size_t len = rng() % 10;
            for (std::size_t k = 0; k < len; ++k) {
                unsigned tag = static_cast<unsigned>(rng() % 2);
                unsigned n = 2;
                if (rng() % 2)
                    w.push_back({'s', 1 + static_cast<unsigned>(rng() % (n - 1)), tag});
                else
                    w.push_back({'t', 1 + static_cast<unsigned>(rng() % n), tag});
            }
            ProductEchelonResult res = echelonize_product(w, d1, d2, c.cfg.word_cap);
            Word w1, w2;
            for (const Letter& l : w) {
                Letter m = l;
                m.tag = 0;
                (l.tag == 0 ? w1 : w2).push_back(m);
            }
            Word f1 = res.first.flatten(), f2 = res.second.flatten();
            for (Letter& l : f1) l.tag = 0;
            for (Letter& l : f2) l.tag = 0;
            if (!is_conjugate_brute(evaluate_word(w1, d1), evaluate_word(f1, d1), e1))
                return fail("first factor conjugacy broken on '" + word_to_string(w) + "'");
            if (!is_conjugate_brute(evaluate_word(w2, d2), evaluate_word(f2, d2), e2))
                return fail("second factor conjugacy broken on '" + word_to_string(w) + "'");
            CtKey key = product_ct_key(w, 2, 2);
            if (key.size() != 1 + 3 + 2) return fail("combined ct-key has wrong arity");
        }
        return ok();
    });
}

void suite_frobenius(Ctx& c) {
    struct Case { std::string name; GroupPtr g; };
    std::vector<Case> cases;
    cases.push_back({"Z2", shared_group(cyclic_group(2))});
    cases.push_back({"Z3", shared_group(cyclic_group(3))});
    cases.push_back({"S3", shared_group(symmetric_group(3))});
    cases.push_back({"G(2,1,2)",
                     shared_group(imprimitive_finite_group(GroupDescriptor(2, 1, 2)))});
    for (auto& cs : cases) {
        c.run("frobenius/" + cs.name, [&]() -> Verdict {
            auto dec = decompose_regular(cs.g, c.cfg.seed, c.cfg.tol, c.cfg.rep_cap);
            long sum_sq = 0;
            for (const auto& k : dec)
                sum_sq += static_cast<long>(k.rep.dim()) * k.rep.dim();
            if (sum_sq != cs.g->order())
                return fail("sum of squared dimensions " + std::to_string(sum_sq));
            if (dec.size() != cs.g->classes().size())
                return fail("constituent count " + std::to_string(dec.size()) +
                            " != class count " + std::to_string(cs.g->classes().size()));
            FrobeniusReport rep = frobenius_check(cs.g, c.cfg.seed, c.cfg.char_tol, 20);
            if (!rep.pass) return fail(rep.detail);
            std::ostringstream os;
            os << "max relative error " << rep.max_rel_err;
            return {true, os.str()};
        });
    }
}

void suite_grpn(Ctx& c) {
    struct Case { unsigned r, p, n; };
    for (Case cs : {Case{4, 2, 2}, Case{6, 2, 2}, Case{6, 3, 2}, Case{4, 2, 3}}) {
        std::string id = "grpn/A(" + std::to_string(cs.r) + "," + std::to_string(cs.p) +
                         "," + std::to_string(cs.n) + ")";
        c.run(id, [&]() -> Verdict {
            DiagonalGenerators d = gr_pn_generators(cs.r, cs.p, cs.n);
            // constrained enumeration: diagonals with phase sum divisible by p
            std::vector<GroupElem> expect;
            std::vector<unsigned> ph(cs.n, 0);
            for (;;) {
                unsigned long sum = 0;
                for (unsigned x : ph) sum += x;
                if (sum % cs.p == 0) {
                    GroupElem e = identity_elem(cs.r, cs.n);
                    e.phases = ph;
                    expect.push_back(e);
                }
                unsigned i = 0;
                while (i < cs.n && ++ph[i] == cs.r) ph[i++] = 0;
                if (i == cs.n) break;
            }
            std::sort(expect.begin(), expect.end());
            // BFS closure of the y generators
            std::vector<GroupElem> closure = {identity_elem(cs.r, cs.n)};
            std::vector<GroupElem> frontier = closure;
            while (!frontier.empty()) {
                std::vector<GroupElem> next;
                for (const auto& x : frontier)
                    for (const auto& y : d.ys) {
                        GroupElem z = elem_mul(x, y);
                        if (std::find(closure.begin(), closure.end(), z) == closure.end()) {
                            closure.push_back(z);
                            next.push_back(z);
                        }
                    }
                frontier = std::move(next);
            }
            std::sort(closure.begin(), closure.end());
            if (closure != expect)
                return fail("closure has " + std::to_string(closure.size()) +
                            " elements, enumeration has " + std::to_string(expect.size()));
            // the exponent formula must reconstruct every element
            for (const auto& y : expect) {
                std::vector<unsigned> e = d.decompose(y);
                GroupElem acc = identity_elem(cs.r, cs.n);
                for (unsigned i = 0; i < cs.n; ++i)
                    for (unsigned k = 0; k < e[i]; ++k) acc = elem_mul(acc, d.ys[i]);
                if (!(acc == y))
                    return fail("exponent formula fails on " + y.to_string());
            }
            return {true, std::to_string(expect.size()) + " elements reconstructed"};
        });
    }
}

void suite_thm44(Ctx& c) {
    auto run_case = [&](const std::string& name, const SemidirectGroup& sd,
                        std::vector<Rep> family, std::vector<std::string> names) {
        c.run("thm44/" + name, [&]() -> Verdict {
            // pad the family with functorial combinations when needed
            while (family.size() < 6) {
                std::size_t k = family.size();
                family.push_back(rep_combine(CombineOp::DirectSum, family[0],
                                             &family[k % 2 + 1]));
                names.push_back("sum" + std::to_string(k));
            }
            std::vector<std::vector<bool>> verdicts;
            for (GenSetVariant variant :
                 {GenSetVariant::Full, GenSetVariant::NoIdentity, GenSetVariant::NoInverses}) {
                std::vector<int> gens = theorem44_gen_set(sd, variant);
                std::vector<bool> row;
                for (std::size_t i = 0; i < family.size(); ++i)
                    for (std::size_t j = i + 1; j < family.size(); ++j) {
                        PitVerdict v = charpoly_equal(family[i], family[j], gens,
                                                      c.cfg.trials,
                                                      c.cfg.seed + 44 + i * 131 + j);
                        bool equivalent = equivalent_p(family[i], family[j], c.cfg.char_tol);
                        if (v.equal != equivalent)
                            return fail(names[i] + " vs " + names[j] +
                                        ": verdict does not match equivalence");
                        row.push_back(v.equal);
                    }
                verdicts.push_back(std::move(row));
            }
            if (verdicts[0] != verdicts[1] || verdicts[0] != verdicts[2])
                return fail("generating-set variants disagree");
            return {true, std::to_string(family.size()) + " reps, 3 variants agree"};
        });
    };

    {
        auto s2 = shared_group(symmetric_group(2));
        SemidirectGroup sd = make_semidirect(s2, 2, 2, {{0, 1, 1, 0}});
        auto family = quotient_rep_family(sd, c.cfg.rep_cap);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < family.size(); ++i)
            names.push_back("q" + std::to_string(i));
        run_case("S2x(Z2)^2", sd, family, names);
    }
    {
        auto s3 = shared_group(symmetric_group(3));
        // permutation action of the adjacent transpositions on (Z/2)^3
        std::vector<unsigned> a1 = {0, 1, 0, 1, 0, 0, 0, 0, 1};
        std::vector<unsigned> a2 = {1, 0, 0, 0, 0, 1, 0, 1, 0};
        SemidirectGroup sd = make_semidirect(s3, 2, 3, {a1, a2});
        auto family = quotient_rep_family(sd, c.cfg.rep_cap);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < family.size(); ++i)
            names.push_back("q" + std::to_string(i));
        run_case("S3x(Z2)^3", sd, family, names);
    }

    c.run("thm44/G(4,2,2)-variants", [&]() -> Verdict {
        GroupDescriptor d(4, 2, 2);
        auto g = shared_group(imprimitive_finite_group(d));
        FieldPtr f = CycloField::get(4);

        // natural monomial rep and character family
        std::vector<ExactMat> nat_images;
        std::vector<ExactMat> det_images;
        std::vector<GroupElem> gen_elems;
        {
            DiagonalGenerators dg = gr_pn_generators(4, 2, 2);
            gen_elems.push_back(gen('s', 1, d));
            gen_elems.push_back(dg.ys[0]);
            gen_elems.push_back(dg.ys[1]);
        }
        for (const GroupElem& e : gen_elems) {
            ExactMat m = monomial_matrix(e, f);
            nat_images.push_back(m);
            ExactMat dm(1, 1, m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
            det_images.push_back(dm);
        }
        Rep nat = Rep::exact(g, f, nat_images);
        Rep detc = Rep::exact(g, f, det_images);
        std::vector<ExactMat> triv_images(3, ExactMat(1, 1, CycNum::one(f)));
        Rep triv = Rep::exact(g, f, triv_images);
        std::vector<ExactMat> sgn_images = {ExactMat(1, 1, -CycNum::one(f)),
                                            ExactMat(1, 1, CycNum::one(f)),
                                            ExactMat(1, 1, CycNum::one(f))};
        Rep sgn = Rep::exact(g, f, sgn_images);
        std::vector<Rep> family = {triv, sgn, detc, nat, galois_twist(nat, 3),
                                   rep_combine(CombineOp::Tensor, nat, &nat)};
        std::vector<std::string> names = {"trivial", "perm-sign", "det", "natural",
                                          "twist(natural,3)", "natural^2"};
        for (const Rep& rep : family)
            if (!check_representation(rep).pass) return fail("family member is not a rep");

        // class reps of the symmetric part, the y generators, their inverses
        auto locate = [&](const GroupElem& e) {
            int id = g->find_element(e);
            if (id < 0) throw DomainError("element not found in G(4,2,2)");
            return id;
        };
        DiagonalGenerators dg = gr_pn_generators(4, 2, 2);
        std::vector<int> h_reps = {g->identity(), locate(gen('s', 1, d))};
        std::vector<int> n_ids = {locate(dg.ys[0]), locate(dg.ys[1])};
        auto build_set = [&](GenSetVariant variant) {
            std::vector<int> out;
            auto push = [&](int e) {
                if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
            };
            for (int e : h_reps) {
                if (variant != GenSetVariant::Full && e == g->identity()) continue;
                push(e);
            }
            for (int e : n_ids) push(e);
            if (variant != GenSetVariant::NoInverses)
                for (int e : n_ids) push(g->inv(e));
            return out;
        };
        std::vector<std::vector<bool>> verdicts;
        for (GenSetVariant variant :
             {GenSetVariant::Full, GenSetVariant::NoIdentity, GenSetVariant::NoInverses}) {
            std::vector<int> gens = build_set(variant);
            std::vector<bool> row;
            for (std::size_t i = 0; i < family.size(); ++i)
                for (std::size_t j = i + 1; j < family.size(); ++j) {
                    PitVerdict v = charpoly_equal(family[i], family[j], gens, c.cfg.trials,
                                                  c.cfg.seed + 4422 + i * 131 + j);
                    bool equivalent = equivalent_p(family[i], family[j], c.cfg.char_tol);
                    if (v.equal != equivalent)
                        return fail(names[i] + " vs " + names[j] +
                                    ": verdict does not match equivalence");
                    row.push_back(v.equal);
                }
            verdicts.push_back(std::move(row));
        }
        if (verdicts[0] != verdicts[1] || verdicts[0] != verdicts[2])
            return fail("generating-set variants disagree");
        return ok();
    });
}

void suite_affine(Ctx& c) {
    for (const std::string& name : {"A1", "A2", "B2"}) {
        c.run("affine/reflection-" + name, [&]() -> Verdict {
            RootSystem rs = root_system(name);
            std::mt19937_64 rng(c.cfg.seed + 42);
            auto random_vec = [&](std::size_t dim) {
                QVec v(dim);
                for (auto& x : v) {
                    x = Rational(static_cast<long>(rng() % 19) - 9,
                                 1 + static_cast<long>(rng() % 5));
                    x.canonicalize();
                }
                return v;
            };
            std::size_t dim = rs.simple[0].size();
            for (const QVec& alpha : rs.roots)
                for (long k : {-1l, 0l, 1l, 2l})
                    for (int trial = 0; trial < 10; ++trial) {
                        QVec v = random_vec(dim);
                        if (!(affine_reflection(alpha, k, affine_reflection(alpha, k, v)) == v))
                            return fail("reflection is not an involution");
                    }
            // s_{alpha,1} s_{alpha,0} translates by the coroot
            for (const QVec& alpha : rs.roots)
                for (int trial = 0; trial < 10; ++trial) {
                    QVec v = random_vec(dim);
                    QVec got = affine_reflection(alpha, 1, affine_reflection(alpha, 0, v));
                    Rational norm = dot(alpha, alpha);
                    QVec expect = v;
                    for (std::size_t i = 0; i < dim; ++i)
                        expect[i] += Rational(2) / norm * alpha[i];
                    if (!(got == expect)) return fail("translation identity fails");
                }
            // linear part preserves the inner product
            for (const QVec& alpha : rs.roots)
                for (int trial = 0; trial < 10; ++trial) {
                    QVec v = random_vec(dim), w = random_vec(dim);
                    if (dot(affine_reflection(alpha, 0, v), affine_reflection(alpha, 0, w)) !=
                        dot(v, w))
                        return fail("linear reflection is not orthogonal");
                }
            return ok();
        });
    }

    for (unsigned n = 1; n <= 4; ++n) {
        c.run("affine/cover-set-n" + std::to_string(n), [&]() -> Verdict {
            auto cover = an_cover_set(n);
            auto all = enumerate_group(GroupDescriptor(1, 1, n + 1));
            for (const GroupElem& e : all) {
                bool hit = false;
                for (const GroupElem& m : cover)
                    if (is_conjugate_brute(e, m, all)) {
                        hit = true;
                        break;
                    }
                if (!hit) return fail("uncovered element " + e.to_string());
            }
            return {true, std::to_string(cover.size()) + " products cover " +
                              std::to_string(all.size()) + " elements"};
        });
    }
}

const std::map<std::string, void (*)(Ctx&)>& suite_table() {
    static const std::map<std::string, void (*)(Ctx&)> table = {
        {"presentation", suite_presentation}, {"prop22", suite_prop22},
        {"echelon", suite_echelon},           {"thm24", suite_thm24},
        {"thm36", suite_thm36},               {"product", suite_product},
        {"frobenius", suite_frobenius},       {"thm44", suite_thm44},
        {"grpn", suite_grpn},                 {"affine", suite_affine},
    };
    return table;
}

}  // namespace

bool SuiteReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

std::string SuiteReport::summary() const {
    std::size_t passed = 0;
    for (const auto& c : checks) passed += c.pass ? 1 : 0;
    return std::to_string(passed) + "/" + std::to_string(checks.size()) + " checks passed";
}

std::string SuiteReport::to_json(bool timings) const {
    ordered_json j;
    j["suite"] = suite;
    j["seed"] = seed;
    j["checks"] = ordered_json::array();
    for (const auto& c : checks) {
        ordered_json jc;
        jc["id"] = c.id;
        jc["status"] = c.pass ? "pass" : "fail";
        jc["witness"] = c.witness;
        jc["ms"] = timings ? c.ms : 0;
        j["checks"].push_back(std::move(jc));
    }
    j["summary"] = summary();
    return j.dump(2) + "\n";
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, fn] : suite_table()) v.push_back(name);
        v.push_back("all");
        return v;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
    SuiteReport report;
    report.suite = name;
    report.seed = cfg.seed;
    Ctx ctx{cfg, report.checks};
    if (name == "all") {
        // fixed order, not map order: mirrors the acceptance sequence
        for (const char* s : {"presentation", "prop22", "echelon", "thm24", "thm36",
                              "product", "frobenius", "thm44", "grpn", "affine"})
            suite_table().at(s)(ctx);
        return report;
    }
    auto it = suite_table().find(name);
    if (it == suite_table().end())
        throw ConfigError("unknown suite '" + name + "'");
    it->second(ctx);
    return report;
}

std::string explain_word(const std::string& text, const GroupDescriptor& desc) {
    Word w = parse_word(text, desc.n);
    std::ostringstream os;
    os << "word: '" << word_to_string(w) << "' over G(" << desc.r << "," << desc.p << ","
       << desc.n << ")\n";
    Signature sig = signature(w, desc.n);
    os << "signature: (";
    for (std::size_t i = 0; i < sig.size(); ++i) os << (i ? "," : "") << sig[i];
    os << ")\nct-key: (";
    CtKey key = ct_key(w, desc.n);
    for (std::size_t i = 0; i < key.size(); ++i) os << (i ? "," : "") << key[i];
    os << ")\n";
    EchelonizeResult res = echelonize(w, desc);
    for (std::size_t i = 0; i < res.trace.size(); ++i) {
        const RewriteStep& st = res.trace[i];
        os << "  step " << i + 1 << ": " << rule_name(st.rule) << " @" << st.position
           << " -> '" << word_to_string(st.after) << "'\n";
    }
    os << "echelon form: '" << word_to_string(res.echelon.flatten()) << "' ("
       << res.trace.size() << " steps)\n";
    os << "element: " << evaluate_word(w, desc).to_string() << "\n";
    return os.str();
}

}  // namespace gcp
