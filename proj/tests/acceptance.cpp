#include "amalg/dsl.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace amalg;
using namespace amalg::dsl;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what)
    {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool has_note(const VerificationReport& rep, const std::string& text)
{
    return std::any_of(rep.notes.begin(), rep.notes.end(),
                       [&](const std::string& n) { return n.find(text) != std::string::npos; });
}

std::vector<const VerificationReport*> by_check(const std::vector<VerificationReport>& reps, const std::string& name)
{
    std::vector<const VerificationReport*> out;
    for (const auto& r : reps)
        if (r.check == name)
            out.push_back(&r);
    return out;
}

// Nilpotency and zero divisors by brute force over the tables.
bool nilpotent_scan(const FiniteRng& r, Elem x)
{
    Elem p = x;
    for (std::size_t k = 0; k <= r.order(); ++k) {
        if (p == r.zero())
            return true;
        p = r.mul(p, x);
    }
    return false;
}

bool reduced_scan(const FiniteRng& r)
{
    for (Elem x = 0; x < r.order(); ++x)
        if (x != r.zero() && nilpotent_scan(r, x))
            return false;
    return true;
}

bool domain_scan(const FiniteRng& r)
{
    if (!r.has_one() || r.order() < 2)
        return false;
    for (Elem x = 0; x < r.order(); ++x)
        for (Elem y = 0; y < r.order(); ++y)
            if (x != r.zero() && y != r.zero() && r.mul(x, y) == r.zero())
                return false;
    return true;
}

std::set<std::pair<Elem, Elem>> amalgam_set(const Amalgam& am)
{
    std::set<std::pair<Elem, Elem>> s;
    for (Elem a = 0; a < am.a()->order(); ++a)
        for (Elem j : am.j.elements())
            s.emplace(a, am.b()->add(am.f(a), j));
    return s;
}

std::set<std::pair<Elem, Elem>> pullback_set(const Amalgam& am)
{
    // (a, b) with b - f(a) in J, which is f-breve(a) = pi(b).
    std::set<std::pair<Elem, Elem>> s;
    for (Elem a = 0; a < am.a()->order(); ++a)
        for (Elem b = 0; b < am.b()->order(); ++b)
            if (am.j.contains(am.b()->sub(b, am.f(a))))
                s.emplace(a, b);
    return s;
}

bool isos_valid(const VerificationReport& r, std::size_t at_least)
{
    if (r.isomorphisms.size() < at_least)
        return false;
    return std::all_of(r.isomorphisms.begin(), r.isomorphisms.end(), [](const RingHom& h) { return verify_iso(h); });
}

std::string count(std::size_t n, const char* what)
{
    return std::to_string(n) + " " + what;
}

} // namespace

int main()
{
    const auto start = std::chrono::steady_clock::now();
    const Script script = generate_catalog(0, 256);
    const std::vector<VerificationReport> reps = evaluate(script);
    const std::vector<NamedAmalgam> ams = amalgams(script);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    std::map<std::string, const Amalgam*> named;
    for (const auto& n : ams)
        named[n.name] = n.amalgam.get();

    std::vector<std::pair<int, Outcome>> results;

    {
        Outcome o;
        o.require(ams.size() >= 30, "only " + count(ams.size(), "amalgams"));
        for (const auto& [name, am] : named) {
            const std::size_t expected = am->a()->order() * am->j.size();
            o.require(amalgam_set(*am).size() == expected, name + ": pair set size != |A|*|J|");
            o.require(am->ring()->order() == expected, name + ": ring order != |A|*|J|");
        }
        const auto fj = by_check(reps, "f_join_iso");
        o.require(fj.size() == ams.size(), "f_join_iso not run on every amalgam");
        for (const auto* r : fj)
            o.require(r->status == Status::pass && isos_valid(*r, 1), "f_join_iso failed on " + r->instance);
        if (o.ok)
            o.detail = count(ams.size(), "amalgams") + ", |A join^f J| = |A|*|J| on all";
        results.emplace_back(1, o);
    }

    {
        Outcome o;
        for (const auto& [name, am] : named) {
            std::set<std::pair<Elem, Elem>> coords(am->pairs.coords.begin(), am->pairs.coords.end());
            o.require(pullback_set(*am) == coords, name + ": pullback element set differs");
        }
        const auto pi = by_check(reps, "pull_identity");
        o.require(pi.size() == ams.size(), "pull_identity not run on every amalgam");
        for (const auto* r : pi)
            o.require(r->status == Status::pass, "pull_identity failed on " + r->instance);
        if (o.ok)
            o.detail = count(pi.size(), "instances") + ", element sets equal";
        results.emplace_back(2, o);
    }

    {
        Outcome o;
        const auto ci = by_check(reps, "canonical_isos");
        o.require(ci.size() == ams.size(), "canonical_isos not run on every amalgam");
        std::size_t surjective = 0;
        for (const auto* r : ci) {
            o.require(r->status == Status::pass && isos_valid(*r, 4), "canonical_isos failed on " + r->instance);
            if (has_note(*r, "f is surjective")) {
                ++surjective;
                o.require(isos_valid(*r, 5), "surjective clause lacks its witness on " + r->instance);
            }
        }
        o.require(surjective >= 1, "no instance with f surjective");
        if (o.ok)
            o.detail = count(ci.size(), "instances") + ", " + count(surjective, "with f surjective");
        results.emplace_back(3, o);
    }

    {
        Outcome o;
        for (const auto& [name, am] : named) {
            bool meet_zero = true;
            for (Elem j : am->j.elements())
                meet_zero = meet_zero && (j == am->b()->zero() || !nilpotent_scan(*am->b(), j));
            o.require(reduced_scan(*am->ring()) == (reduced_scan(*am->a()) && meet_zero),
                      name + ": reduced equivalence violated");
        }
        o.require(named.count("dup_Z4_2") && !reduced_scan(*named["dup_Z4_2"]->ring()), "dup(Z4,(2)) is reduced");
        o.require(named.count("dup_Z6_2") && reduced_scan(*named["dup_Z6_2"]->ring()), "dup(Z6,(2)) is not reduced");
        const auto rc = by_check(reps, "reduced_criterion");
        o.require(rc.size() == ams.size(), "reduced_criterion not run on every amalgam");
        for (const auto* r : rc)
            o.require(r->status == Status::pass, "reduced_criterion failed on " + r->instance);
        if (o.ok)
            o.detail = count(rc.size(), "instances") + ", dup(Z4,(2)) not reduced, dup(Z6,(2)) reduced";
        results.emplace_back(4, o);
    }

    {
        Outcome o;
        std::size_t nonzero = 0;
        for (const auto& [name, am] : named) {
            if (am->j.is_zero())
                continue;
            ++nonzero;
            bool finv_zero = true;
            for (Elem a = 0; a < am->a()->order(); ++a)
                finv_zero = finv_zero && (a == am->a()->zero() || !am->j.contains(am->f(a)));
            const bool rhs = domain_scan(*am->b_diamond.ring) && finv_zero;
            o.require(domain_scan(*am->ring()) == rhs, name + ": domain equivalence violated");
        }
        std::size_t degenerate = 0;
        for (const auto* r : by_check(reps, "domain_criterion")) {
            if (r->status == Status::hypothesis_not_met) {
                o.require(has_note(*r, "J = (0)"), "hypothesis_not_met without J = 0 on " + r->instance);
                continue;
            }
            o.require(r->status == Status::pass, "domain_criterion failed on " + r->instance);
            degenerate += has_note(*r, "finite degeneracy");
        }
        o.require(nonzero >= 30, "only " + count(nonzero, "instances with J != 0"));
        o.require(degenerate == nonzero, "degeneracy not documented on every J != 0 instance");
        if (o.ok)
            o.detail = count(nonzero, "instances with J != 0") + ", both sides false, degeneracy documented";
        results.emplace_back(5, o);
    }

    {
        Outcome o;
        std::size_t round_trips = 0;
        bool negative = false;
        for (const auto* r : by_check(reps, "fibret")) {
            o.require(r->status == Status::pass, "fibret failed on " + r->instance);
            if (named.count(r->instance)) {
                ++round_trips;
                o.require(has_note(*r, "section of p_A found"), "no section for " + r->instance);
            } else if (r->instance == "id(Z2), can_Z4_Z2") {
                negative = has_note(*r, "no section of p_A") && has_note(*r, "0 present D");
            }
        }
        o.require(round_trips == ams.size(), "fibret not run on every amalgam");
        o.require(negative, "negative instance not certified");
        // Independent exhaustive search: every map Z2 -> D, D = id x_{Z2} (Z4 -> Z2).
        const RingPtr z2 = zmod(2);
        const RingPtr z4 = zmod(4);
        const PullbackData d = pullback(identity_hom(z2), RingHom(z4, z2, {0, 1, 0, 1}, true));
        std::size_t sections = 0;
        for (Elem x = 0; x < d.ring()->order(); ++x)
            for (Elem y = 0; y < d.ring()->order(); ++y) {
                const std::vector<Elem> map{x, y};
                if (validate_hom(*z2, *d.ring(), map, true).ok() && d.p_a(x) == 0 && d.p_a(y) == 1)
                    ++sections;
            }
        o.require(sections == 0, "exhaustive search found a section of the negative instance");
        if (o.ok)
            o.detail = count(round_trips, "round trips") + ", negative instance section-free (16 maps scanned)";
        results.emplace_back(6, o);
    }

    {
        Outcome o;
        std::map<int, std::set<std::string>> passed;
        std::vector<std::pair<std::string, int>> probes;
        for (const auto* r : by_check(reps, "iter_iso")) {
            const int n = r->instance.back() - '0';
            o.require(r->status == Status::pass && isos_valid(*r, 1), "iter_iso failed on " + r->instance);
            passed[n].insert(r->instance.substr(0, r->instance.rfind(',')));
            probes.emplace_back(r->instance, n);
        }
        std::string defs;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            const std::string& args = probes[i].first;
            defs += "amalgam probe_" + std::to_string(i) + " = namalg(" + args + ");\n";
            defs += "amalgam base_" + std::to_string(i) + " = amalg(" + args.substr(0, args.rfind(',')) + ");\n";
        }
        std::map<std::string, std::shared_ptr<const Amalgam>> probe_named;
        for (const auto& p : amalgams(parse(render(script) + defs)))
            probe_named[p.name] = p.amalgam;
        for (std::size_t i = 0; i < probes.size(); ++i) {
            const Amalgam& big = *probe_named["probe_" + std::to_string(i)];
            const Amalgam& base = *probe_named["base_" + std::to_string(i)];
            std::size_t expected = base.a()->order();
            for (int t = 0; t < probes[i].second; ++t)
                expected *= base.j.size();
            o.require(amalgam_set(big).size() == expected && big.ring()->order() == expected,
                      probes[i].first + ": order != |A|*|J|^n");
        }
        o.require(passed[2].size() >= 5 && passed[3].size() >= 5, "fewer than 5 instances for n = 2 or 3");
        if (o.ok)
            o.detail = count(passed[2].size(), "instances") + " for n = 2, " + count(passed[3].size(), "for n = 3") +
                       ", order |A|*|J|^n";
        results.emplace_back(7, o);
    }

    {
        Outcome o;
        std::vector<std::string> names{"nagata_as_amalgam", "d_plus_m", "cpi_prime", "cpi_ideal", "dorroh",
                                       "trunc_poly_amalgam"};
        for (const auto& name : names) {
            const auto rs = by_check(reps, name);
            o.require(!rs.empty(), name + " not in the catalog");
            for (const auto* r : rs)
                o.require(r->status == Status::pass && isos_valid(*r, 1), name + " failed on " + r->instance);
        }
        bool z12 = false;
        for (const auto* r : by_check(reps, "cpi_prime"))
            if (r->instance == "gen(Z12; 2)")
                z12 = has_note(*r, "|A join^lambda P A_P| = 24") &&
                      has_note(*r, "|(A join^lambda P A_P)/(P x {0})| = 4");
        o.require(z12, "cpi_prime Z12 (2) does not show 24 -> 4");
        for (const auto* r : by_check(reps, "dorroh"))
            o.require(std::any_of(r->isomorphisms.begin(), r->isomorphisms.end(),
                                  [](const RingHom& h) { return h.domain()->provenance() == Provenance::zmod; }),
                      "dorroh lacks Z/n -> Dh_n(R)/R on " + r->instance);
        if (o.ok)
            o.detail = "6 constructions validated, cpi_prime Z12 (2): 24 -> 4";
        results.emplace_back(8, o);
    }

    {
        Outcome o;
        const auto xs = by_check(reps, "noetherian_verdict_xjx");
        o.require(xs.size() == 2, "expected two verdicts");
        bool idem = false, nilp = false;
        const auto j2_evidence = [](const VerificationReport& r) {
            std::vector<std::string> j, j2;
            for (const auto& w : r.witnesses) {
                if (w.name == "J")
                    j = w.elements;
                if (w.name == "J^2")
                    j2 = w.elements;
            }
            return std::make_pair(j, j2);
        };
        for (const auto* r : xs) {
            o.require(r->status == Status::theorem_backed, "verdict not theorem-backed");
            const auto [j, j2] = j2_evidence(*r);
            if (r->instance == "subring(P2x2;), gen(P2x2; \"(1,0)\")") {
                // J = Z2 x {0}: (1,0)^2 = (1,0).
                idem = j == std::vector<std::string>{"(0,0)", "(1,0)"} && j2 == j &&
                       has_note(*r, "verdict A + XJ[X]: Noetherian");
            } else if (r->instance == "full(Z4), gen(Z4; 2)") {
                // J = (2), J^2 = (4) = 0.
                nilp = j == std::vector<std::string>{"0", "2"} && j2 == std::vector<std::string>{"0"} &&
                       has_note(*r, "not Noetherian");
            }
        }
        o.require(idem, "idempotent instance not Noetherian or lacks J^2 evidence");
        o.require(nilp, "J = (2) in Z4 not reported not-Noetherian or lacks J^2 evidence");
        if (o.ok)
            o.detail = "Z2 x {0}: J^2 = J, Noetherian; (2) in Z4: J^2 = 0, not Noetherian";
        results.emplace_back(9, o);
    }

    {
        Outcome o;
        const std::string first = reports_to_json(reps, false);
        const std::string second = reports_to_json(evaluate(generate_catalog(0, 256)), false);
        o.require(first == second, "JSON differs between runs");
        o.require(render(script) == render(generate_catalog(0, 256)), "catalog text differs between runs");
        o.require(seconds < 60.0, "catalog evaluation took " + std::to_string(seconds) + " s");
        if (o.ok) {
            std::ostringstream s;
            s << first.size() << " bytes identical, " << reps.size() << " checks in " << seconds << " s";
            o.detail = s.str();
        }
        results.emplace_back(10, o);
    }

    bool all = true;
    for (const auto& [n, o] : results) {
        std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << " - " << o.detail << "\n";
        all = all && o.ok;
    }
    return all ? 0 : 1;
}
