#include "dsl_internal.hpp"

#include <chrono>
#include <map>
#include <memory>
#include <variant>

namespace amalg::dsl {

using namespace detail;

namespace {

struct Arrow {
    RingPtr from;
    RingPtr to;
};

struct Literal {
    const Expr* expr;
};

using AmalgamPtr = std::shared_ptr<const Amalgam>;
using PullbackPtr = std::shared_ptr<const PullbackData>;

using Value = std::variant<RingPtr, Ideal, RingHom, FiniteModule, Subrng, AmalgamPtr, PullbackPtr, std::int64_t, Arrow,
                           Literal>;

TypeMask value_mask(const Value& v)
{
    switch (v.index()) {
        case 0: return mask(Type::ring);
        case 1: return mask(Type::ideal);
        case 2: return mask(Type::hom);
        case 3: return mask(Type::module);
        case 4: return mask(Type::subring);
        case 5: return mask(Type::amalgam);
        case 6: return mask(Type::pullback);
        case 7: return mask(Type::integer) | mask(Type::elem);
        case 8: return mask(Type::arrow);
        default: return mask(Type::elem);
    }
}

// Argument list of one call, flattened across sections.
class Args {
public:
    Args(std::vector<std::vector<Value>> sections, const Expr& call) : sections_(std::move(sections)), call_(&call) {}

    const Value& at(std::size_t section, std::size_t i) const { return sections_.at(section).at(i); }
    std::size_t size(std::size_t section) const { return sections_.at(section).size(); }

    const RingPtr& ring(std::size_t s, std::size_t i) const { return std::get<RingPtr>(at(s, i)); }
    const Ideal& ideal(std::size_t s, std::size_t i) const { return std::get<Ideal>(at(s, i)); }
    const RingHom& hom(std::size_t s, std::size_t i) const { return std::get<RingHom>(at(s, i)); }
    const FiniteModule& module(std::size_t s, std::size_t i) const { return std::get<FiniteModule>(at(s, i)); }
    const Subrng& subring(std::size_t s, std::size_t i) const { return std::get<Subrng>(at(s, i)); }
    const Amalgam& amalgam(std::size_t s, std::size_t i) const { return *std::get<AmalgamPtr>(at(s, i)); }
    const PullbackData& pullback(std::size_t s, std::size_t i) const { return *std::get<PullbackPtr>(at(s, i)); }
    const Arrow& arrow(std::size_t s, std::size_t i) const { return std::get<Arrow>(at(s, i)); }

    std::int64_t integer(std::size_t s, std::size_t i) const { return std::get<std::int64_t>(at(s, i)); }

    int small_int(std::size_t s, std::size_t i) const
    {
        const std::int64_t v = integer(s, i);
        if (v < 0 || v > 1'000'000)
            throw AlgebraError(ErrorKind::invalid_parameter, "integer argument " + std::to_string(v) + " out of range");
        return static_cast<int>(v);
    }

    // Element literals of section `s` from index `from` on, resolved in `r`.
    std::vector<Elem> elems(std::size_t s, std::size_t from, const FiniteRng& r) const
    {
        std::vector<Elem> out;
        for (std::size_t i = from; i < size(s); ++i)
            out.push_back(element(s, i, r));
        return out;
    }

    Elem element(std::size_t s, std::size_t i, const FiniteRng& r) const
    {
        const Expr& e = *literal_expr(s, i);
        const std::string label = literal_label(e);
        if (auto x = r.find_label(label))
            return *x;
        if (e.kind == Expr::Kind::integer && r.has_one())
            return r.multiple(*r.one(), e.value);
        throw DslError(DslError::Kind::evaluation, e.loc, "no element labelled '" + label + "' in " + describe(r));
    }

    std::vector<std::int64_t> integers(std::size_t s) const
    {
        std::vector<std::int64_t> out;
        for (std::size_t i = 0; i < size(s); ++i)
            out.push_back(integer(s, i));
        return out;
    }

private:
    const Expr* literal_expr(std::size_t s, std::size_t i) const
    {
        if (auto lit = std::get_if<Literal>(&at(s, i)))
            return lit->expr;
        return &call_->sections.at(s).at(i);
    }

    std::vector<std::vector<Value>> sections_;
    const Expr* call_;
};

Elem find_zero(const RawRing& raw)
{
    for (Elem z = 0; z < raw.order; ++z) {
        bool ok = true;
        for (Elem x = 0; x < raw.order && ok; ++x)
            ok = raw.add[z * raw.order + x] == x;
        if (ok)
            return z;
    }
    return 0;
}

RingHom canonical_hom(const RingPtr& a, const RingPtr& b)
{
    const HomEnumeration homs = enumerate_homs(a, b, 2);
    if (homs.homs.size() != 1)
        throw AlgebraError(ErrorKind::invalid_parameter,
                           homs.homs.empty() ? "no unital hom exists between the rings"
                                             : "the unital hom between the rings is not unique");
    return homs.homs.front();
}

FiniteModule regular_module(const RingPtr& r)
{
    return module_via_hom(identity_hom(r), Ideal::whole(r));
}

Value call_builtin(const std::string& shape, const Args& a)
{
    if (shape == "zmod(int)")
        return zmod(a.integer(0, 0));
    if (shape == "product(ring, ring*)") {
        std::vector<RingPtr> factors;
        for (std::size_t i = 0; i < a.size(0); ++i)
            factors.push_back(a.ring(0, i));
        return direct_product(factors);
    }
    if (shape == "trunc(ring, int, int)")
        return trunc_poly(a.ring(0, 0), a.small_int(0, 1), a.small_int(0, 2));
    if (shape == "gf(int, int)")
        return galois_field(a.integer(0, 0), a.small_int(0, 1));
    if (shape == "quotient(ideal)")
        return quotient_ring(a.ideal(0, 0)).ring;
    if (shape == "table(int; int*; int*)") {
        RawRing raw;
        raw.order = static_cast<std::size_t>(a.small_int(0, 0));
        check_size(raw.order, "table ring");
        for (auto v : a.integers(1))
            raw.add.push_back(static_cast<Elem>(v));
        for (auto v : a.integers(2))
            raw.mul.push_back(static_cast<Elem>(v));
        if (raw.add.size() == raw.order * raw.order)
            raw.zero = find_zero(raw);
        return make_ring(std::move(raw));
    }
    if (shape == "nagata(module)")
        return nagata_idealization(a.module(0, 0)).ring;
    if (shape == "dorroh(ring)")
        return dorroh(a.ring(0, 0)).sum.ring;
    if (shape == "as_ring(subring)")
        return as_ring(a.subring(0, 0)).ring;
    if (shape == "as_ring(ideal)")
        return as_ring(a.ideal(0, 0)).ring;
    if (shape == "carrier(amalgam)")
        return a.amalgam(0, 0).ring();
    if (shape == "carrier(pullback)")
        return a.pullback(0, 0).ring();
    if (shape == "localize(ring; elem*)") {
        const RingPtr& r = a.ring(0, 0);
        return localization(r, multiplicative_closure(r, a.elems(1, 0, *r))).ring;
    }

    if (shape == "gen(ring; elem*)") {
        const RingPtr& r = a.ring(0, 0);
        return ideal_from_generators(r, a.elems(1, 0, *r));
    }
    if (shape == "nil(ring)")
        return nilradical(a.ring(0, 0));
    if (shape == "kernel(hom)")
        return kernel(a.hom(0, 0));
    if (shape == "whole(ring)")
        return Ideal::whole(a.ring(0, 0));
    if (shape == "zero(ring)")
        return Ideal::zero(a.ring(0, 0));
    if (shape == "isum(ideal, ideal)")
        return ideal_sum(a.ideal(0, 0), a.ideal(0, 1));
    if (shape == "iprod(ideal, ideal)")
        return ideal_product(a.ideal(0, 0), a.ideal(0, 1));
    if (shape == "meet(ideal, ideal)")
        return ideal_intersection(a.ideal(0, 0), a.ideal(0, 1));
    if (shape == "preimage(hom, ideal)")
        return preimage(a.hom(0, 0), a.ideal(0, 1));

    if (shape == "map(ring->ring; elem*)") {
        const Arrow& ar = a.arrow(0, 0);
        const bool unital = ar.from->has_one() && ar.to->has_one();
        return RingHom(ar.from, ar.to, a.elems(1, 0, *ar.to), unital);
    }
    if (shape == "id(ring)")
        return identity_hom(a.ring(0, 0));
    if (shape == "canonical(ring->ring)")
        return canonical_hom(a.arrow(0, 0).from, a.arrow(0, 0).to);
    if (shape == "proj(ideal)")
        return quotient_ring(a.ideal(0, 0)).projection;
    if (shape == "compose(hom, hom)")
        return compose(a.hom(0, 0), a.hom(0, 1));
    if (shape == "diag(hom, int)")
        return diagonal_power(a.hom(0, 0), a.small_int(0, 1));
    if (shape == "incl(subring)")
        return as_ring(a.subring(0, 0)).inclusion;
    if (shape == "iota(amalgam)")
        return a.amalgam(0, 0).iota;
    if (shape == "pa(amalgam)")
        return a.amalgam(0, 0).p_a;
    if (shape == "pb(amalgam)")
        return a.amalgam(0, 0).p_b;

    if (shape == "via(hom, ideal)")
        return module_via_hom(a.hom(0, 0), a.ideal(0, 1));
    if (shape == "regular(ring)")
        return regular_module(a.ring(0, 0));
    if (shape == "zero_module(ring)")
        return zero_module(a.ring(0, 0));
    if (shape == "zmodule(ring, int)")
        return integer_module(a.ring(0, 0), a.integer(0, 1));

    if (shape == "subring(ring; elem*)" || shape == "subrng(ring; elem*)") {
        const RingPtr& r = a.ring(0, 0);
        return subring_generated(r, a.elems(1, 0, *r), shape[6] == 'g');
    }
    if (shape == "full(ring)")
        return Subrng::whole(a.ring(0, 0));
    if (shape == "image(hom)")
        return image(a.hom(0, 0));
    if (shape == "bdiamond(hom, ideal)")
        return image_plus_ideal(a.hom(0, 0), a.ideal(0, 1));

    if (shape == "amalg(hom, ideal)")
        return std::make_shared<const Amalgam>(amalgam(a.hom(0, 0), a.ideal(0, 1)));
    if (shape == "dup(ring, ideal)")
        return std::make_shared<const Amalgam>(duplication(a.ring(0, 0), a.ideal(0, 1)));
    if (shape == "dup(ideal)")
        return std::make_shared<const Amalgam>(duplication(a.ideal(0, 0).ring(), a.ideal(0, 0)));
    if (shape == "namalg(hom, ideal, int)")
        return std::make_shared<const Amalgam>(n_amalgam(a.hom(0, 0), a.ideal(0, 1), a.small_int(0, 2)));

    if (shape == "pullback(hom, hom)")
        return std::make_shared<const PullbackData>(pullback(a.hom(0, 0), a.hom(0, 1)));

    throw AlgebraError(ErrorKind::invalid_parameter, "builtin " + shape + " has no implementation");
}

VerificationReport call_check(const std::string& shape, const Args& a)
{
    if (shape == "f_join_iso(amalgam)")
        return f_join_iso_check(a.amalgam(0, 0));
    if (shape == "graph_inclusion(amalgam)")
        return graph_inclusion_check(a.amalgam(0, 0));
    if (shape == "iter_iso(hom, ideal, int)")
        return iter_iso_check(a.hom(0, 0), a.ideal(0, 1), a.small_int(0, 2));
    if (shape == "pull_identity(amalgam)")
        return pull_identity_check(a.amalgam(0, 0));
    if (shape == "alt_pullback(amalgam)")
        return alt_pullback_checks(a.amalgam(0, 0));
    if (shape == "factor(hom, hom, hom)")
        return factor_check(a.hom(0, 0), a.hom(0, 1), a.hom(0, 2));
    if (shape == "fibret(amalgam)")
        return fibret_check(a.amalgam(0, 0));
    if (shape == "fibret(hom, hom)")
        return fibret_check(a.hom(0, 0), a.hom(0, 1));
    if (shape == "prid(pullback)")
        return prid_check(a.pullback(0, 0));
    if (shape == "kernel_identity(pullback)")
        return kernel_identity_check(a.pullback(0, 0));
    if (shape == "canonical_isos(amalgam)")
        return canonical_isos(a.amalgam(0, 0));
    if (shape == "canonical_isos(amalgam, ideal)")
        return canonical_isos(a.amalgam(0, 0), a.ideal(0, 1));
    if (shape == "b_diamond(hom, ideal)")
        return b_diamond(a.hom(0, 0), a.ideal(0, 1)).report;
    if (shape == "domain_criterion(amalgam)")
        return domain_criterion_check(a.amalgam(0, 0));
    if (shape == "reduced_criterion(amalgam)")
        return reduced_criterion_check(a.amalgam(0, 0));
    if (shape == "same_amalgam(hom, hom, ideal)")
        return same_amalgam(a.hom(0, 0), a.hom(0, 1), a.ideal(0, 2));
    if (shape == "split_sequence(module, ring)")
        return split_sequence_check(dotted_sum(a.module(0, 0), a.ring(0, 1)));
    if (shape == "dorroh(ring)")
        return dorroh(a.ring(0, 0)).report;
    if (shape == "idealization(module)")
        return idealization_check(nagata_idealization(a.module(0, 0)));
    if (shape == "nagata_as_amalgam(module)")
        return nagata_as_amalgam_check(a.module(0, 0));
    if (shape == "d_plus_m(subring, ideal, ideal*)") {
        std::vector<Ideal> ms;
        for (std::size_t i = 1; i < a.size(0); ++i)
            ms.push_back(a.ideal(0, i));
        return d_plus_m(a.subring(0, 0), ms).report;
    }
    if (shape == "cpi_prime(ideal)")
        return cpi_prime(a.ideal(0, 0)).report;
    if (shape == "cpi_ideal(ideal)")
        return cpi_ideal(a.ideal(0, 0)).report;
    if (shape == "trunc_poly_amalgam(subring, ideal, int, int)")
        return trunc_poly_amalgam(a.subring(0, 0), a.ideal(0, 1), a.small_int(0, 2), a.small_int(0, 3)).report;
    if (shape == "noetherian(amalgam)")
        return noetherian_report(a.amalgam(0, 0));
    if (shape == "noetherian_verdict_xjx(subring, ideal)")
        return noetherian_verdict_xjx(a.subring(0, 0), a.ideal(0, 1)).report;
    if (shape == "reduced_diamond_search(amalgam*)") {
        std::vector<Amalgam> ams;
        for (std::size_t i = 0; i < a.size(0); ++i)
            ams.push_back(a.amalgam(0, i));
        return reduced_diamond_search(ams);
    }
    throw AlgebraError(ErrorKind::invalid_parameter, "check " + shape + " has no implementation");
}

class Evaluator {
public:
    explicit Evaluator(const Script& s)
    {
        for (const auto& st : s.statements)
            if (st.kind == Statement::Kind::definition)
                defs_.emplace(st.name, &st);
    }

    VerificationReport run_check(const Statement& st)
    {
        const auto start = std::chrono::steady_clock::now();
        VerificationReport rep;
        std::string instance;
        for (std::size_t s = 0; s < st.expr.sections.size(); ++s) {
            if (s)
                instance += "; ";
            for (std::size_t i = 0; i < st.expr.sections[s].size(); ++i)
                instance += (i ? ", " : "") + render(st.expr.sections[s][i]);
        }
        try {
            const Args args = arguments(st.expr);
            const std::string shape = resolve(check_table(), st.expr, args);
            rep = call_check(shape, args);
            rep.note("instance: " + rep.instance);
        } catch (const AlgebraError& e) {
            if (!e.is_hypothesis_failure())
                throw DslError(DslError::Kind::evaluation, st.loc, "check " + st.name + ": " + e.what());
            rep = VerificationReport{};
            rep.hypothesis_not_met(e.what());
            rep.note(e.what());
        }
        rep.check = st.name;
        rep.instance = instance;
        rep.millis =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return rep;
    }

    std::shared_ptr<const Amalgam> amalgam_named(const Statement& st)
    {
        Expr ref;
        ref.kind = Expr::Kind::name;
        ref.text = st.name;
        ref.loc = st.loc;
        try {
            return std::get<std::shared_ptr<const Amalgam>>(lookup(ref));
        } catch (const AlgebraError& e) {
            throw DslError(DslError::Kind::evaluation, st.loc, st.name + ": " + e.what());
        }
    }

private:
    const Value& lookup(const Expr& e)
    {
        if (auto it = memo_.find(e.text); it != memo_.end())
            return it->second;
        auto d = defs_.find(e.text);
        if (d == defs_.end())
            throw DslError(DslError::Kind::unknown_name, e.loc, "'" + e.text + "' is not defined");
        Value v = eval(d->second->expr);
        return memo_.emplace(e.text, std::move(v)).first->second;
    }

    Value eval(const Expr& e)
    {
        switch (e.kind) {
            case Expr::Kind::name: return lookup(e);
            case Expr::Kind::integer: return e.value;
            case Expr::Kind::string:
            case Expr::Kind::tuple: return Literal{&e};
            case Expr::Kind::arrow:
                return Arrow{std::get<RingPtr>(eval(e.items[0])), std::get<RingPtr>(eval(e.items[1]))};
            case Expr::Kind::call: {
                const Args args = arguments(e);
                return call_builtin(resolve(builtin_table(), e, args), args);
            }
        }
        return Literal{&e};
    }

    Args arguments(const Expr& call)
    {
        std::vector<std::vector<Value>> sections;
        for (const auto& sec : call.sections) {
            sections.emplace_back();
            for (const auto& arg : sec)
                sections.back().push_back(eval(arg));
        }
        return Args(std::move(sections), call);
    }

    static std::string resolve(const std::vector<Shape>& table, const Expr& call, const Args& args)
    {
        std::vector<std::vector<TypeMask>> types;
        for (std::size_t s = 0; s < call.sections.size(); ++s) {
            types.emplace_back();
            for (std::size_t i = 0; i < args.size(s); ++i)
                types.back().push_back(value_mask(args.at(s, i)));
        }
        const int k = match_shape(table, call.text, types);
        if (k < 0)
            throw DslError(DslError::Kind::type_mismatch, call.loc, "no overload of '" + call.text + "' applies");
        return table[static_cast<std::size_t>(k)].text;
    }

    std::map<std::string, const Statement*> defs_;
    std::map<std::string, Value> memo_;
};

} // namespace

std::vector<VerificationReport> evaluate(const Script& script)
{
    Evaluator ev(script);
    std::vector<VerificationReport> out;
    for (const auto& st : script.statements)
        if (st.kind == Statement::Kind::check)
            out.push_back(ev.run_check(st));
    return out;
}

std::vector<NamedAmalgam> amalgams(const Script& script)
{
    Evaluator ev(script);
    std::vector<NamedAmalgam> out;
    for (const auto& st : script.statements)
        if (st.kind == Statement::Kind::definition && st.type == Type::amalgam)
            out.push_back({st.name, ev.amalgam_named(st)});
    return out;
}

} // namespace amalg::dsl
