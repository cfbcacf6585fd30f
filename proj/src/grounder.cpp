/*
 *  Copyright (C) 2026  The disjlog authors
 *
 *  Licensed under the Apache License, Version 2.0 (the "License");
 *  you may not use this file except in compliance with the License.
 *  You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 *  Unless required by applicable law or agreed to in writing, software
 *  distributed under the License is distributed on an "AS IS" BASIS,
 *  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *  See the License for the specific language governing permissions and
 *  limitations under the License.
 */

#include "disjlog/grounder.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "disjlog/analyzer.hpp"
#include "disjlog/errors.hpp"
#include "disjlog/parser.hpp"

namespace disjlog {

namespace {

Term resolve_maxint_term(const Term& t, int64_t maxint) {
    return t.kind() == TermKind::Maxint ? Term::integer(maxint) : t;
}

void resolve_maxint_atom(Atom& a, int64_t maxint) {
    for (Term& t : a.args)
        t = resolve_maxint_term(t, maxint);
}

/// Copy of the program with every #maxint replaced by the configured value.
Program resolve_maxint(const Program& p, int64_t maxint) {
    Program out = p;
    for (Rule& r : out.rules) {
        for (ClassicalLiteral& l : r.head)
            resolve_maxint_atom(l.atom, maxint);
        for (NafLiteral& l : r.body)
            resolve_maxint_atom(l.literal.atom, maxint);
    }
    for (WeakConstraint& wc : out.weak_constraints) {
        for (NafLiteral& l : wc.body)
            resolve_maxint_atom(l.literal.atom, maxint);
        wc.weight = resolve_maxint_term(wc.weight, maxint);
        wc.level = resolve_maxint_term(wc.level, maxint);
    }
    return out;
}

bool is_integer_builtin(const std::string& pred) {
    return pred == "#int" || pred == "#succ" || pred == "+" || pred == "*";
}

// ---------------------------------------------------------------------------
// Compiled statements: variables resolved to dense indices for fast joins.
// ---------------------------------------------------------------------------

struct VarTable {
    std::vector<std::string> names;
    std::map<std::string, int> index;

    int id(const std::string& name) {
        auto [it, inserted] = index.try_emplace(name, static_cast<int>(names.size()));
        if (inserted)
            names.push_back(name);
        return it->second;
    }
};

struct CArg {
    int var = -1; // -1: constant
    Term constant;
};

struct CAtom {
    PredicateRef pred;
    std::string predicate; // original name (built-ins carry no PredicateRef)
    bool builtin = false;
    std::vector<CArg> args;
};

struct CLit {
    CAtom atom;
    bool naf = false;
};

struct CStatement {
    std::vector<CAtom> head;
    std::vector<CLit> body;
    VarTable vars;
    int source_index = -1;
    Term weight = Term::integer(1); // weak constraints only
    Term level = Term::integer(1);
    int weight_var = -1;
    int level_var = -1;
};

CArg compile_arg(const Term& t, VarTable& vars) {
    CArg a;
    if (t.is_variable())
        a.var = vars.id(t.text());
    else
        a.constant = t;
    return a;
}

CAtom compile_atom(const ClassicalLiteral& l, VarTable& vars) {
    CAtom out;
    out.predicate = l.atom.predicate;
    out.builtin = l.atom.is_builtin();
    if (!out.builtin)
        out.pred = PredicateRef::of(l);
    for (const Term& t : l.atom.args)
        out.args.push_back(compile_arg(t, vars));
    return out;
}

CStatement compile_rule(const Rule& r, int source_index) {
    CStatement st;
    st.source_index = source_index;
    for (const ClassicalLiteral& l : r.head)
        st.head.push_back(compile_atom(l, st.vars));
    for (const NafLiteral& l : r.body)
        st.body.push_back({compile_atom(l.literal, st.vars), l.naf_negated});
    return st;
}

CStatement compile_wc(const WeakConstraint& wc, int source_index) {
    CStatement st;
    st.source_index = source_index;
    for (const NafLiteral& l : wc.body)
        st.body.push_back({compile_atom(l.literal, st.vars), l.naf_negated});
    if (wc.weight.is_variable())
        st.weight_var = st.vars.id(wc.weight.text());
    else
        st.weight = wc.weight;
    if (wc.level.is_variable())
        st.level_var = st.vars.id(wc.level.text());
    else
        st.level = wc.level;
    return st;
}

// ---------------------------------------------------------------------------
// Relations: derivable tuples per signed predicate, with certainty flags and
// insertion stamps for semi-naive iteration.
// ---------------------------------------------------------------------------

struct TupleHash {
    size_t operator()(const std::vector<Term>& t) const {
        size_t h = 1469598103934665603ull;
        for (const Term& x : t)
            h = (h ^ x.hash()) * 1099511628211ull;
        return h;
    }
};

struct Relation {
    std::vector<std::vector<Term>> tuples;
    std::vector<char> certain;
    std::vector<int64_t> stamp;
    std::unordered_map<std::vector<Term>, int, TupleHash> pos;

    int find(const std::vector<Term>& t) const {
        auto it = pos.find(t);
        return it == pos.end() ? -1 : it->second;
    }

    // Returns the tuple index; sets added when the tuple is new.
    int add(const std::vector<Term>& t, bool is_certain, int64_t s, bool& added) {
        auto [it, inserted] = pos.try_emplace(t, static_cast<int>(tuples.size()));
        added = inserted;
        if (inserted) {
            tuples.push_back(t);
            certain.push_back(is_certain ? 1 : 0);
            stamp.push_back(s);
        } else if (is_certain) {
            certain[it->second] = 1;
        }
        return it->second;
    }
};

using Relations = std::map<PredicateRef, Relation>;

// ---------------------------------------------------------------------------
// Built-in evaluation against a partial binding.
// ---------------------------------------------------------------------------

struct Binding {
    std::vector<Term> value;
    std::vector<char> bound;

    explicit Binding(size_t n) : value(n), bound(n, 0) {}
};

bool arg_bound(const CArg& a, const Binding& b) {
    return a.var < 0 || b.bound[a.var];
}

Term arg_value(const CArg& a, const Binding& b) {
    return a.var < 0 ? a.constant : b.value[a.var];
}

bool builtin_placeable(const CAtom& a, const Binding& b, bool naf) {
    const std::string& p = a.predicate;
    if (naf || is_comparative_builtin(p)) {
        for (const CArg& arg : a.args)
            if (!arg_bound(arg, b))
                return false;
        return true;
    }
    if (p == "#int")
        return true;
    if (p == "#succ")
        return arg_bound(a.args[0], b) || arg_bound(a.args[1], b);
    // + and * bind their result from the two operands.
    return arg_bound(a.args[0], b) && arg_bound(a.args[1], b);
}

bool comparison_truth(const std::string& op, const Term& a, const Term& b) {
    int c = compare_terms(a, b);
    if (op == "=") return c == 0;
    if (op == "<>") return c != 0;
    if (op == "<") return c < 0;
    if (op == ">") return c > 0;
    if (op == "<=") return c <= 0;
    return c >= 0;
}

bool in_range(const Term& t, int64_t maxint) {
    return t.kind() == TermKind::Integer && t.value() >= 0 && t.value() <= maxint;
}

// Evaluates a built-in with the given binding; calls emit for every solution
// binding extension. All arguments must satisfy builtin_placeable.
void eval_builtin_step(const CAtom& a, bool naf, Binding& b, int64_t maxint,
                       const std::function<void()>& emit) {
    const std::string& p = a.predicate;
    auto with_var = [&](int var, const Term& t, auto&& k) {
        b.value[var] = t;
        b.bound[var] = 1;
        k();
        b.bound[var] = 0;
    };
    auto test = [&](bool truth) {
        if (truth != naf)
            emit();
    };

    if (is_comparative_builtin(p)) {
        test(comparison_truth(p, arg_value(a.args[0], b), arg_value(a.args[1], b)));
        return;
    }
    if (p == "#int") {
        if (arg_bound(a.args[0], b)) {
            test(in_range(arg_value(a.args[0], b), maxint));
        } else {
            for (int64_t v = 0; v <= maxint; ++v)
                with_var(a.args[0].var, Term::integer(v), emit);
        }
        return;
    }
    if (p == "#succ") {
        bool b0 = arg_bound(a.args[0], b);
        bool b1 = arg_bound(a.args[1], b);
        if (b0 && b1) {
            Term x = arg_value(a.args[0], b);
            Term y = arg_value(a.args[1], b);
            test(in_range(x, maxint) && in_range(y, maxint) && y.value() == x.value() + 1);
        } else if (b0) {
            Term x = arg_value(a.args[0], b);
            if (in_range(x, maxint) && x.value() + 1 <= maxint)
                with_var(a.args[1].var, Term::integer(x.value() + 1), emit);
        } else {
            Term y = arg_value(a.args[1], b);
            if (in_range(y, maxint) && y.value() >= 1)
                with_var(a.args[0].var, Term::integer(y.value() - 1), emit);
        }
        return;
    }
    // + and *
    Term x = arg_value(a.args[0], b);
    Term y = arg_value(a.args[1], b);
    if (x.kind() != TermKind::Integer || y.kind() != TermKind::Integer) {
        test(false);
        return;
    }
    __int128 r = p == "+" ? static_cast<__int128>(x.value()) + y.value()
                          : static_cast<__int128>(x.value()) * y.value();
    if (r < 0 || r > maxint) { // overflow past maxint fails
        if (naf && arg_bound(a.args[2], b))
            emit();
        return;
    }
    Term rt = Term::integer(static_cast<int64_t>(r));
    if (arg_bound(a.args[2], b)) {
        test(compare_terms(arg_value(a.args[2], b), rt) == 0);
    } else {
        if (!naf)
            with_var(a.args[2].var, rt, emit);
    }
}

// ---------------------------------------------------------------------------
// Body evaluation: ordered join over relations with greedy built-in placement.
// ---------------------------------------------------------------------------

struct JoinIndexCache {
    // (predicate, bound-position mask) -> tuple indices grouped by key
    std::map<std::pair<PredicateRef, uint64_t>,
             std::unordered_map<std::vector<Term>, std::vector<int>, TupleHash>>
        cache;

    void clear() { cache.clear(); }
};

class BodyEvaluator {
public:
    BodyEvaluator(const CStatement& st, Relations& rels, int64_t maxint, size_t& work,
                  size_t work_cap)
        : st_(st), rels_(rels), maxint_(maxint), work_(work), work_cap_(work_cap) {}

    // delta_lit >= 0 restricts that body literal to tuples with
    // stamp > delta_stamp. Calls cb with a complete binding.
    void run(int delta_lit, int64_t delta_stamp, JoinIndexCache* index_cache,
             const std::function<void(const Binding&)>& cb) {
        delta_lit_ = delta_lit;
        delta_stamp_ = delta_stamp;
        index_cache_ = index_cache;
        cb_ = &cb;
        Binding binding(st_.vars.names.size());

        // Join order: relation literals by ascending relation size with the
        // delta literal first; built-ins placed greedily once evaluable.
        std::vector<int> rel_lits;
        std::vector<int> builtins;
        for (size_t i = 0; i < st_.body.size(); ++i) {
            const CLit& l = st_.body[i];
            if (l.atom.builtin)
                builtins.push_back(static_cast<int>(i));
            else if (!l.naf)
                rel_lits.push_back(static_cast<int>(i));
        }
        std::stable_sort(rel_lits.begin(), rel_lits.end(), [&](int a, int b) {
            if (a == delta_lit_) return b != delta_lit_;
            if (b == delta_lit_) return false;
            return relation_size(a) < relation_size(b);
        });
        order_.clear();
        std::vector<char> placed(st_.body.size(), 0);
        std::vector<char> bound(st_.vars.names.size(), 0);
        // Tests and deterministic binders go in as soon as they are ready;
        // enumerating #int only once no relation literal can bind its
        // variable any more.
        auto place_builtins = [&](bool allow_enumeration) {
            bool progress = true;
            while (progress) {
                progress = false;
                for (int bi : builtins) {
                    if (placed[bi])
                        continue;
                    const CLit& l = st_.body[bi];
                    bool enumerating =
                        l.atom.predicate == "#int" && l.atom.args[0].var >= 0 &&
                        !bound[l.atom.args[0].var];
                    if (enumerating && !allow_enumeration)
                        continue;
                    if (builtin_ready(l, bound)) {
                        order_.push_back(bi);
                        placed[bi] = 1;
                        bind_vars(l.atom, bound);
                        progress = true;
                    }
                }
            }
        };
        place_builtins(false);
        for (int li : rel_lits) {
            order_.push_back(li);
            placed[li] = 1;
            bind_vars(st_.body[li].atom, bound);
            place_builtins(false);
        }
        place_builtins(true);
        for (int bi : builtins)
            if (!placed[bi])
                throw GroundingError("unsupported binding pattern for built-in " +
                                     st_.body[bi].atom.predicate);
        step(0, binding);
    }

private:
    size_t relation_size(int lit) const {
        auto it = rels_.find(st_.body[lit].atom.pred);
        return it == rels_.end() ? 0 : it->second.tuples.size();
    }

    // Can the built-in run once the variables in `bound` are set?
    bool builtin_ready(const CLit& l, const std::vector<char>& bound) const {
        auto is_bound = [&](const CArg& a) { return a.var < 0 || bound[a.var]; };
        const std::string& p = l.atom.predicate;
        if (l.naf || is_comparative_builtin(p)) {
            for (const CArg& a : l.atom.args)
                if (!is_bound(a))
                    return false;
            return true;
        }
        if (p == "#int")
            return true;
        if (p == "#succ")
            return is_bound(l.atom.args[0]) || is_bound(l.atom.args[1]);
        return is_bound(l.atom.args[0]) && is_bound(l.atom.args[1]);
    }

    void bind_vars(const CAtom& a, std::vector<char>& bound) const {
        for (const CArg& arg : a.args)
            if (arg.var >= 0)
                bound[arg.var] = 1;
    }

    void step(size_t depth, Binding& binding) {
        if (depth == order_.size()) {
            (*cb_)(binding);
            return;
        }
        if (++work_ > work_cap_)
            throw ResourceLimitError("grounding work limit exceeded");
        const int lit_index = order_[depth];
        const CLit& lit = st_.body[lit_index];
        if (lit.atom.builtin) {
            eval_builtin_step(lit.atom, lit.naf, binding, maxint_,
                              [&] { step(depth + 1, binding); });
            return;
        }
        auto rel_it = rels_.find(lit.atom.pred);
        if (rel_it == rels_.end())
            return;
        Relation& rel = rel_it->second;
        const bool is_delta = lit_index == delta_lit_;

        auto try_tuple = [&](int ti) {
            if (++work_ > work_cap_)
                throw ResourceLimitError("grounding work limit exceeded");
            const std::vector<Term>& tuple = rel.tuples[ti];
            std::vector<int> newly_bound;
            bool ok = true;
            for (size_t k = 0; k < lit.atom.args.size() && ok; ++k) {
                const CArg& a = lit.atom.args[k];
                if (a.var < 0) {
                    ok = a.constant == tuple[k];
                } else if (binding.bound[a.var]) {
                    ok = binding.value[a.var] == tuple[k];
                } else {
                    binding.value[a.var] = tuple[k];
                    binding.bound[a.var] = 1;
                    newly_bound.push_back(a.var);
                }
            }
            if (ok)
                step(depth + 1, binding);
            for (int v : newly_bound)
                binding.bound[v] = 0;
        };

        if (is_delta) {
            const size_t n = rel.tuples.size();
            for (size_t ti = 0; ti < n; ++ti)
                if (rel.stamp[ti] > delta_stamp_)
                    try_tuple(static_cast<int>(ti));
            return;
        }

        // With an index over the bound argument positions, matching tuples
        // come from one bucket; fall back to a scan when nothing is bound.
        uint64_t mask = 0;
        std::vector<Term> key;
        for (size_t k = 0; k < lit.atom.args.size(); ++k) {
            const CArg& a = lit.atom.args[k];
            if (a.var < 0 || binding.bound[a.var]) {
                mask |= uint64_t{1} << k;
                key.push_back(arg_value(a, binding));
            }
        }
        if (mask == 0 || index_cache_ == nullptr) {
            const size_t n = rel.tuples.size();
            for (size_t ti = 0; ti < n; ++ti)
                try_tuple(static_cast<int>(ti));
            return;
        }
        auto& index = index_for(lit.atom.pred, mask, rel);
        auto bucket = index.find(key);
        if (bucket == index.end())
            return;
        for (int ti : bucket->second)
            try_tuple(ti);
    }

    std::unordered_map<std::vector<Term>, std::vector<int>, TupleHash>&
    index_for(const PredicateRef& pred, uint64_t mask, const Relation& rel) {
        auto key = std::make_pair(pred, mask);
        auto it = index_cache_->cache.find(key);
        if (it != index_cache_->cache.end())
            return it->second;
        auto& index = index_cache_->cache[key];
        for (size_t ti = 0; ti < rel.tuples.size(); ++ti) {
            std::vector<Term> k;
            for (size_t p = 0; p < rel.tuples[ti].size(); ++p)
                if (mask & (uint64_t{1} << p))
                    k.push_back(rel.tuples[ti][p]);
            index[std::move(k)].push_back(static_cast<int>(ti));
        }
        return index;
    }

    const CStatement& st_;
    Relations& rels_;
    int64_t maxint_;
    size_t& work_;
    size_t work_cap_;
    int delta_lit_ = -1;
    int64_t delta_stamp_ = -1;
    JoinIndexCache* index_cache_ = nullptr;
    const std::function<void(const Binding&)>* cb_ = nullptr;
    std::vector<int> order_;
};

std::vector<Term> instantiate_args(const CAtom& a, const Binding& b) {
    std::vector<Term> out;
    out.reserve(a.args.size());
    for (const CArg& arg : a.args)
        out.push_back(arg_value(arg, b));
    return out;
}

ClassicalLiteral make_literal(const CAtom& a, const Binding& b) {
    Atom atom(a.pred.name, instantiate_args(a, b));
    return ClassicalLiteral(std::move(atom), a.pred.negated);
}

GroundProvenance make_provenance(const CStatement& st, const Binding& b, int source_index) {
    GroundProvenance prov;
    prov.source_index = source_index;
    for (size_t v = 0; v < st.vars.names.size(); ++v)
        if (b.bound[v])
            prov.substitution.emplace_back(st.vars.names[v], b.value[v]);
    return prov;
}

struct GroundRuleKey {
    std::vector<LitId> head, pos, naf;
    bool operator==(const GroundRuleKey&) const = default;
};

struct GroundRuleKeyHash {
    size_t operator()(const GroundRuleKey& k) const {
        size_t h = 14695981039346656037ull;
        auto mix = [&h](const std::vector<LitId>& v) {
            for (LitId x : v)
                h = (h ^ static_cast<size_t>(x + 1)) * 1099511628211ull;
            h = (h ^ 0xabcd) * 1099511628211ull;
        };
        mix(k.head);
        mix(k.pos);
        mix(k.naf);
        return h;
    }
};

GroundRuleKey key_of(const GroundRule& r) {
    GroundRuleKey k{r.head, r.body_pos, r.body_naf};
    std::sort(k.head.begin(), k.head.end());
    std::sort(k.pos.begin(), k.pos.end());
    std::sort(k.naf.begin(), k.naf.end());
    return k;
}

} // namespace

// ---------------------------------------------------------------------------
// Herbrand universe
// ---------------------------------------------------------------------------

HerbrandUniverse herbrand_universe(const Program& p, int64_t maxint) {
    if (maxint < 0)
        throw UsageError("maxint must be non-negative");
    HerbrandUniverse u;
    u.maxint = maxint;
    std::set<Term, decltype(&term_less)> constants(&term_less);
    bool integers_occur = false;

    auto note_term = [&](const Term& t) {
        if (t.kind() == TermKind::Maxint || t.kind() == TermKind::Integer)
            integers_occur = true;
        if (t.is_constant())
            constants.insert(resolve_maxint_term(t, maxint));
    };
    auto note_atom = [&](const Atom& a) {
        if (is_integer_builtin(a.predicate))
            integers_occur = true;
        for (const Term& t : a.args)
            note_term(t);
    };
    for (const Rule& r : p.rules) {
        for (const ClassicalLiteral& l : r.head)
            note_atom(l.atom);
        for (const NafLiteral& l : r.body)
            note_atom(l.literal.atom);
    }
    for (const WeakConstraint& wc : p.weak_constraints) {
        for (const NafLiteral& l : wc.body)
            note_atom(l.literal.atom);
        note_term(wc.weight);
        note_term(wc.level);
    }
    if (integers_occur) {
        u.has_integer_range = true;
        for (int64_t v = 0; v <= maxint; ++v)
            constants.insert(Term::integer(v));
    }
    if (constants.empty()) {
        u.added_psi = true;
        constants.insert(Term::symbol("psi"));
    }
    u.constants.assign(constants.begin(), constants.end());
    return u;
}

// ---------------------------------------------------------------------------
// Naive grounding
// ---------------------------------------------------------------------------

namespace {

// Enumerates all substitutions of the statement's variables over U.
template <typename Fn>
void all_substitutions(const CStatement& st, const HerbrandUniverse& u, size_t& work,
                       size_t work_cap, Fn&& fn) {
    const size_t nvars = st.vars.names.size();
    Binding binding(nvars);
    for (size_t v = 0; v < nvars; ++v)
        binding.bound[v] = 1;
    std::vector<size_t> odo(nvars, 0);
    while (true) {
        if (++work > work_cap)
            throw ResourceLimitError("naive grounding work limit exceeded");
        for (size_t v = 0; v < nvars; ++v)
            binding.value[v] = u.constants[odo[v]];
        fn(binding);
        size_t v = 0;
        for (; v < nvars; ++v) {
            if (++odo[v] < u.constants.size())
                break;
            odo[v] = 0;
        }
        if (v == nvars)
            break;
        if (nvars == 0)
            break;
    }
}

// Evaluates the ground built-ins of an instance; false built-ins drop it.
bool builtins_hold(const CStatement& st, const Binding& b, int64_t maxint) {
    for (const CLit& l : st.body) {
        if (!l.atom.builtin)
            continue;
        bool truth = false;
        eval_builtin_step(l.atom, false, const_cast<Binding&>(b), maxint,
                          [&] { truth = true; });
        if (truth == l.naf)
            return false;
    }
    return true;
}

} // namespace

GroundProgram naive_ground(const Program& p, const HerbrandUniverse& u,
                           const GroundingLimits& limits) {
    Program resolved = resolve_maxint(p, u.maxint);
    GroundProgram out;
    std::unordered_set<GroundRuleKey, GroundRuleKeyHash> seen;
    size_t work = 0;
    const size_t work_cap = limits.max_ground_rules * 8;

    for (size_t ri = 0; ri < resolved.rules.size(); ++ri) {
        CStatement st = compile_rule(resolved.rules[ri], static_cast<int>(ri));
        all_substitutions(st, u, work, work_cap, [&](const Binding& b) {
            if (!builtins_hold(st, b, u.maxint))
                return;
            GroundRule gr;
            for (const CAtom& h : st.head) {
                LitId id = out.index.intern(make_literal(h, b));
                if (std::find(gr.head.begin(), gr.head.end(), id) == gr.head.end())
                    gr.head.push_back(id);
            }
            for (const CLit& l : st.body) {
                if (l.atom.builtin)
                    continue;
                LitId id = out.index.intern(make_literal(l.atom, b));
                auto& part = l.naf ? gr.body_naf : gr.body_pos;
                if (std::find(part.begin(), part.end(), id) == part.end())
                    part.push_back(id);
            }
            if (!seen.insert(key_of(gr)).second)
                return;
            if (out.rules.size() >= limits.max_ground_rules)
                throw ResourceLimitError("ground rule limit exceeded");
            gr.provenance = make_provenance(st, b, static_cast<int>(ri));
            out.rules.push_back(std::move(gr));
        });
    }
    for (size_t wi = 0; wi < resolved.weak_constraints.size(); ++wi) {
        CStatement st = compile_wc(resolved.weak_constraints[wi], static_cast<int>(wi));
        all_substitutions(st, u, work, work_cap, [&](const Binding& b) {
            if (!builtins_hold(st, b, u.maxint))
                return;
            GroundWeakConstraint gw;
            Term w = st.weight_var >= 0 ? b.value[st.weight_var] : st.weight;
            Term l = st.level_var >= 0 ? b.value[st.level_var] : st.level;
            if (w.kind() != TermKind::Integer || w.value() < 1 ||
                l.kind() != TermKind::Integer || l.value() < 1)
                throw GroundingError(
                    "weak constraint weight/level must ground to positive integers");
            gw.weight = w.value();
            gw.level = l.value();
            for (const CLit& lit : st.body) {
                if (lit.atom.builtin)
                    continue;
                LitId id = out.index.intern(make_literal(lit.atom, b));
                auto& part = lit.naf ? gw.body_naf : gw.body_pos;
                if (std::find(part.begin(), part.end(), id) == part.end())
                    part.push_back(id);
            }
            gw.provenance = make_provenance(st, b, static_cast<int>(wi));
            out.weak_constraints.push_back(std::move(gw));
        });
    }
    // GroundWC(P) is a set: collapse duplicate instances.
    {
        std::set<std::tuple<std::vector<LitId>, std::vector<LitId>, int64_t, int64_t>> wseen;
        std::vector<GroundWeakConstraint> dedup;
        for (GroundWeakConstraint& gw : out.weak_constraints) {
            auto key = std::make_tuple(gw.body_pos, gw.body_naf, gw.weight, gw.level);
            std::sort(std::get<0>(key).begin(), std::get<0>(key).end());
            std::sort(std::get<1>(key).begin(), std::get<1>(key).end());
            if (wseen.insert(key).second)
                dedup.push_back(std::move(gw));
        }
        out.weak_constraints = std::move(dedup);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Intelligent grounding
// ---------------------------------------------------------------------------

namespace {

class IntelligentGrounder {
public:
    IntelligentGrounder(const Program& p, const HerbrandUniverse& u,
                        const GroundingLimits& limits)
        : program_(resolve_maxint(p, u.maxint)), universe_(u), limits_(limits),
          work_cap_(limits.max_ground_rules * 8) {}

    GroundProgram run() {
        graph_ = build_dependency_graph(program_);
        assign_rules();
        compute_solved();
        for (int m = 0; m < graph_.module_count; ++m)
            process_module(m);
        finish_rules();
        ground_constraints();
        ground_weak_constraints();
        collect_certain();
        return std::move(out_);
    }

private:
    // Rules are processed with the module of their head predicates (head
    // siblings share a module by construction); constraints are handled in
    // a final pass over the finished relations.
    void assign_rules() {
        rules_by_module_.assign(graph_.module_count, {});
        for (size_t i = 0; i < program_.rules.size(); ++i) {
            const Rule& r = program_.rules[i];
            if (r.is_constraint()) {
                constraints_.push_back(static_cast<int>(i));
                continue;
            }
            int node = graph_.node_of(PredicateRef::of(r.head.front()));
            rules_by_module_[graph_.module_of[node]].push_back(static_cast<int>(i));
        }
    }

    void compute_solved() {
        solved_.assign(graph_.module_count, true);
        std::vector<char> has_internal_neg(graph_.module_count, 0);
        for (const DepEdge& e : graph_.edges)
            if (e.kind == DepEdgeKind::Negative &&
                graph_.module_of[e.from] == graph_.module_of[e.to])
                has_internal_neg[graph_.module_of[e.from]] = 1;
        for (int m = 0; m < graph_.module_count; ++m) {
            if (has_internal_neg[m])
                solved_[m] = false;
            for (int ri : rules_by_module_[m]) {
                // Distinct head literals leave a choice open.
                const Rule& r = program_.rules[ri];
                for (size_t i = 0; i + 1 < r.head.size() && solved_[m]; ++i)
                    for (size_t j = i + 1; j < r.head.size(); ++j)
                        if (r.head[i] != r.head[j]) {
                            solved_[m] = false;
                            break;
                        }
            }
        }
        // Dependencies on unsolved modules propagate upward. Module ids are
        // topological (mf < mt for cross edges), so sweep in target order.
        std::vector<std::vector<int>> incoming(graph_.module_count);
        for (const DepEdge& e : graph_.edges) {
            int mf = graph_.module_of[e.from];
            int mt = graph_.module_of[e.to];
            if (mf != mt)
                incoming[mt].push_back(mf);
        }
        for (int m = 0; m < graph_.module_count; ++m)
            for (int dep : incoming[m])
                if (!solved_[dep])
                    solved_[m] = false;
    }

    Relation& relation(const PredicateRef& pred) { return relations_[pred]; }

    void add_atom(const PredicateRef& pred, const std::vector<Term>& tuple, bool certain,
                  bool& added) {
        relation(pred).add(tuple, certain, ++stamp_, added);
    }

    // naf literal over an already finished module: true when certainly
    // false, false when certainly true, indeterminate otherwise.
    enum class NafStatus { True, False, Keep };

    NafStatus naf_status(const PredicateRef& pred, const std::vector<Term>& tuple,
                         int current_module) {
        int node = graph_.node_of(pred);
        if (node >= 0 && graph_.module_of[node] == current_module)
            return NafStatus::Keep; // possibly still growing
        auto it = relations_.find(pred);
        int ti = it == relations_.end() ? -1 : it->second.find(tuple);
        if (ti < 0)
            return NafStatus::True; // atom can never be derived
        if (it->second.certain[ti])
            return NafStatus::False;
        return NafStatus::Keep;
    }

    void process_module(int m) {
        const auto& rule_ids = rules_by_module_[m];
        if (rule_ids.empty())
            return;
        std::vector<CStatement> compiled;
        compiled.reserve(rule_ids.size());
        for (int ri : rule_ids)
            compiled.push_back(compile_rule(program_.rules[ri], ri));

        // Positions of positive body literals over this module's predicates
        // drive the semi-naive iteration.
        std::vector<std::vector<int>> recursive_positions(compiled.size());
        for (size_t ci = 0; ci < compiled.size(); ++ci)
            for (size_t li = 0; li < compiled[ci].body.size(); ++li) {
                const CLit& l = compiled[ci].body[li];
                if (l.atom.builtin || l.naf)
                    continue;
                int node = graph_.node_of(l.atom.pred);
                if (node >= 0 && graph_.module_of[node] == m)
                    recursive_positions[ci].push_back(static_cast<int>(li));
            }

        int64_t pass_start = -1;
        bool first_pass = true;
        while (true) {
            int64_t prev_pass_start = pass_start;
            pass_start = stamp_;
            bool changed = false;
            JoinIndexCache cache;
            for (size_t ci = 0; ci < compiled.size(); ++ci) {
                auto eval_with = [&](int delta_lit, int64_t delta_stamp) {
                    BodyEvaluator ev(compiled[ci], relations_, universe_.maxint, work_,
                                     work_cap_);
                    ev.run(delta_lit, delta_stamp, &cache, [&](const Binding& b) {
                        if (emit_instance(compiled[ci], b, m))
                            changed = true;
                    });
                };
                if (first_pass) {
                    eval_with(-1, -1);
                } else {
                    for (int pos : recursive_positions[ci])
                        eval_with(pos, prev_pass_start);
                }
            }
            first_pass = false;
            if (!changed)
                break;
        }
    }

    // Returns true when something new was derived or emitted.
    bool emit_instance(const CStatement& st, const Binding& b, int module) {
        GroundRule gr;

        // Resolve the body against what is already known.
        for (const CLit& l : st.body) {
            if (l.atom.builtin)
                continue; // evaluated during the join
            std::vector<Term> tuple = instantiate_args(l.atom, b);
            if (!l.naf) {
                Relation& rel = relation(l.atom.pred);
                int ti = rel.find(tuple);
                if (ti >= 0 && rel.certain[ti])
                    continue; // certainly true, drop from the body
                gr.body_pos.push_back(out_.index.intern(make_literal(l.atom, b)));
            } else {
                switch (naf_status(l.atom.pred, tuple, module)) {
                case NafStatus::True: continue;      // drop the literal
                case NafStatus::False: return false; // instance never fires
                case NafStatus::Keep:
                    gr.body_naf.push_back(out_.index.intern(make_literal(l.atom, b)));
                }
            }
        }

        // Heads: a certain head satisfies the rule outright.
        std::vector<std::pair<PredicateRef, std::vector<Term>>> head_tuples;
        for (const CAtom& h : st.head) {
            std::vector<Term> tuple = instantiate_args(h, b);
            Relation& rel = relation(h.pred);
            int ti = rel.find(tuple);
            if (ti >= 0 && rel.certain[ti])
                return false;
            LitId id = out_.index.intern(make_literal(h, b));
            if (std::find(gr.head.begin(), gr.head.end(), id) == gr.head.end()) {
                gr.head.push_back(id);
                head_tuples.emplace_back(h.pred, std::move(tuple));
            }
        }

        if (gr.head.size() == 1 && gr.body_pos.empty() && gr.body_naf.empty()) {
            // Deterministic consequence: promote instead of emitting.
            bool added = false;
            Relation& rel = relation(head_tuples[0].first);
            int before = rel.find(head_tuples[0].second);
            bool was_certain = before >= 0 && rel.certain[before];
            add_atom(head_tuples[0].first, head_tuples[0].second, true, added);
            return added || !was_certain;
        }

        GroundRuleKey key = key_of(gr);
        if (!emitted_keys_.insert(std::move(key)).second)
            return false;
        if (out_.rules.size() >= limits_.max_ground_rules)
            throw ResourceLimitError("ground rule limit exceeded");
        for (auto& [pred, tuple] : head_tuples) {
            bool added = false;
            add_atom(pred, tuple, false, added);
            (void)added;
        }
        gr.provenance = make_provenance(st, b, st.source_index);
        out_.rules.push_back(std::move(gr));
        return true;
    }

    // Re-resolve the NAF literals kept during module processing now that
    // every possible-atom set is final.
    void finish_rules() {
        std::vector<GroundRule> kept;
        kept.reserve(out_.rules.size());
        emitted_keys_.clear();
        for (GroundRule& r : out_.rules) {
            bool drop = false;
            // Late certainty upgrades can leave satisfied rules behind.
            for (LitId id : r.head) {
                const ClassicalLiteral& lit = out_.index.lookup(id);
                auto it = relations_.find(PredicateRef::of(lit));
                int ti = it == relations_.end() ? -1 : it->second.find(lit.atom.args);
                if (ti >= 0 && it->second.certain[ti]) {
                    drop = true;
                    break;
                }
            }
            if (drop)
                continue;
            std::vector<LitId> pos;
            for (LitId id : r.body_pos) {
                const ClassicalLiteral& lit = out_.index.lookup(id);
                auto it = relations_.find(PredicateRef::of(lit));
                int ti = it == relations_.end() ? -1 : it->second.find(lit.atom.args);
                if (ti >= 0 && it->second.certain[ti])
                    continue; // certainly true, keep the body lean
                pos.push_back(id);
            }
            std::vector<LitId> naf;
            for (LitId id : r.body_naf) {
                const ClassicalLiteral& lit = out_.index.lookup(id);
                auto it = relations_.find(PredicateRef::of(lit));
                int ti = it == relations_.end() ? -1 : it->second.find(lit.atom.args);
                if (ti < 0)
                    continue; // impossible atom: literal certainly true
                if (it->second.certain[ti]) {
                    drop = true; // certainly true atom: rule never fires
                    break;
                }
                naf.push_back(id);
            }
            if (drop)
                continue;
            r.body_pos = std::move(pos);
            r.body_naf = std::move(naf);
            if (!emitted_keys_.insert(key_of(r)).second)
                continue;
            kept.push_back(std::move(r));
        }
        out_.rules = std::move(kept);
    }

    void ground_constraints() {
        JoinIndexCache cache;
        for (int ri : constraints_) {
            CStatement st = compile_rule(program_.rules[ri], ri);
            BodyEvaluator ev(st, relations_, universe_.maxint, work_, work_cap_);
            ev.run(-1, -1, &cache, [&](const Binding& b) {
                GroundRule gr;
                for (const CLit& l : st.body) {
                    if (l.atom.builtin)
                        continue;
                    std::vector<Term> tuple = instantiate_args(l.atom, b);
                    auto it = relations_.find(l.atom.pred);
                    int ti = it == relations_.end() ? -1 : it->second.find(tuple);
                    bool certain = ti >= 0 && it->second.certain[ti];
                    bool possible = ti >= 0;
                    if (!l.naf) {
                        if (certain)
                            continue;
                        gr.body_pos.push_back(out_.index.intern(make_literal(l.atom, b)));
                    } else {
                        if (certain)
                            return; // naf literal false: constraint can't fire
                        if (!possible)
                            continue; // naf literal certainly true
                        gr.body_naf.push_back(out_.index.intern(make_literal(l.atom, b)));
                    }
                }
                if (gr.body_pos.empty() && gr.body_naf.empty())
                    out_.inconsistent = true; // violated by every answer set
                if (!emitted_keys_.insert(key_of(gr)).second)
                    return;
                if (out_.rules.size() >= limits_.max_ground_rules)
                    throw ResourceLimitError("ground rule limit exceeded");
                gr.provenance = make_provenance(st, b, ri);
                out_.rules.push_back(std::move(gr));
            });
        }
    }

    void ground_weak_constraints() {
        JoinIndexCache cache;
        std::set<std::tuple<std::vector<LitId>, std::vector<LitId>, int64_t, int64_t>> wseen;
        for (size_t wi = 0; wi < program_.weak_constraints.size(); ++wi) {
            CStatement st = compile_wc(program_.weak_constraints[wi], static_cast<int>(wi));
            BodyEvaluator ev(st, relations_, universe_.maxint, work_, work_cap_);
            ev.run(-1, -1, &cache, [&](const Binding& b) {
                GroundWeakConstraint gw;
                Term w = st.weight_var >= 0 ? b.value[st.weight_var] : st.weight;
                Term l = st.level_var >= 0 ? b.value[st.level_var] : st.level;
                if (w.kind() != TermKind::Integer || w.value() < 1 ||
                    l.kind() != TermKind::Integer || l.value() < 1)
                    throw GroundingError(
                        "weak constraint weight/level must ground to positive integers");
                gw.weight = w.value();
                gw.level = l.value();
                for (const CLit& lit : st.body) {
                    if (lit.atom.builtin)
                        continue;
                    std::vector<Term> tuple = instantiate_args(lit.atom, b);
                    auto it = relations_.find(lit.atom.pred);
                    int ti = it == relations_.end() ? -1 : it->second.find(tuple);
                    bool certain = ti >= 0 && it->second.certain[ti];
                    bool possible = ti >= 0;
                    if (!lit.naf) {
                        if (certain)
                            continue;
                        gw.body_pos.push_back(out_.index.intern(make_literal(lit.atom, b)));
                    } else {
                        if (certain)
                            return;
                        if (!possible)
                            continue;
                        gw.body_naf.push_back(out_.index.intern(make_literal(lit.atom, b)));
                    }
                }
                auto key = std::make_tuple(gw.body_pos, gw.body_naf, gw.weight, gw.level);
                std::sort(std::get<0>(key).begin(), std::get<0>(key).end());
                std::sort(std::get<1>(key).begin(), std::get<1>(key).end());
                if (!wseen.insert(key).second)
                    return;
                gw.provenance = make_provenance(st, b, static_cast<int>(wi));
                out_.weak_constraints.push_back(std::move(gw));
            });
        }
    }

    void collect_certain() {
        for (const auto& [pred, rel] : relations_) {
            for (size_t ti = 0; ti < rel.tuples.size(); ++ti) {
                if (!rel.certain[ti])
                    continue;
                ClassicalLiteral lit(Atom(pred.name, rel.tuples[ti]), pred.negated);
                out_.certain.push_back(out_.index.intern(lit));
            }
        }
        std::sort(out_.certain.begin(), out_.certain.end());
        for (LitId id : out_.certain) {
            LitId comp = out_.index.complement_of(id);
            if (comp != kNoLit &&
                std::binary_search(out_.certain.begin(), out_.certain.end(), comp)) {
                out_.inconsistent = true;
                break;
            }
        }
    }

    Program program_;
    HerbrandUniverse universe_;
    GroundingLimits limits_;
    size_t work_ = 0;
    size_t work_cap_;
    DependencyGraph graph_;
    std::vector<std::vector<int>> rules_by_module_;
    std::vector<int> constraints_;
    std::vector<char> solved_;
    Relations relations_;
    GroundProgram out_;
    int64_t stamp_ = 0;
    std::unordered_set<GroundRuleKey, GroundRuleKeyHash> emitted_keys_;
};

} // namespace

GroundProgram intelligent_ground(const Program& p, const HerbrandUniverse& u,
                                 const GroundingLimits& limits) {
    return IntelligentGrounder(p, u, limits).run();
}

// ---------------------------------------------------------------------------
// Public built-in evaluation
// ---------------------------------------------------------------------------

BuiltinResult eval_builtin(const Atom& atom, int64_t maxint) {
    if (!atom.is_builtin())
        throw UsageError(atom.predicate + " is not a built-in predicate");
    Atom resolved = atom;
    resolve_maxint_atom(resolved, maxint);

    VarTable vars;
    ClassicalLiteral lit{resolved, false};
    CAtom ca = compile_atom(lit, vars);

    Binding b(vars.names.size());
    BuiltinResult result;
    if (vars.names.empty()) {
        result.is_test = true;
        eval_builtin_step(ca, false, b, maxint, [&] { result.truth = true; });
        return result;
    }
    if (!builtin_placeable(ca, b, false))
        throw GroundingError("unsupported binding pattern for built-in " + atom.predicate);
    result.is_test = false;
    eval_builtin_step(ca, false, b, maxint, [&] {
        std::vector<std::pair<std::string, Term>> binding;
        for (size_t v = 0; v < vars.names.size(); ++v)
            if (b.bound[v])
                binding.emplace_back(vars.names[v], b.value[v]);
        result.bindings.push_back(std::move(binding));
    });
    return result;
}

} // namespace disjlog
