#include "dsl_internal.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace amalg::dsl {

namespace {

struct CatalogRing {
    std::string name;
    std::string expr;
    std::vector<std::string> deps;
    RingPtr ring;
};

struct Candidate {
    std::size_t a;
    std::size_t b;
    std::size_t hom;
    std::size_t ideal;
};

constexpr std::size_t selected_amalgams = 40;
constexpr std::size_t homs_per_pair = 8;
constexpr std::size_t ideals_per_ring = 32;
constexpr std::size_t iteration_instances = 6;
constexpr std::size_t pullback_instances = 6;

std::string literal(const std::string& label)
{
    const bool numeric = !label.empty() && std::all_of(label.begin() + (label[0] == '-' ? 1 : 0), label.end(),
                                                       [](char c) { return c >= '0' && c <= '9'; });
    if (numeric && label != "-")
        return label;
    Expr e;
    e.kind = Expr::Kind::string;
    e.text = label;
    return render(e);
}

std::string literals(const FiniteRng& r, const std::vector<Elem>& elems)
{
    std::string out;
    for (Elem x : elems)
        out += ", " + literal(r.label(x));
    return out;
}

// Fisher-Yates on raw engine output.
template <class T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng)
{
    for (std::size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng() % i]);
}

class Builder {
public:
    explicit Builder(std::size_t budget) : budget_(budget) { add_rings(); }

    std::string run(std::uint64_t seed)
    {
        collect_ideals_and_homs();
        std::vector<Candidate> pool = candidates();
        std::mt19937_64 rng(seed);
        shuffle(pool, rng);

        std::vector<std::string> amalgams;
        mandatory(amalgams);
        for (std::size_t k = 0; k < pool.size() && k < selected_amalgams; ++k) {
            const Candidate& c = pool[k];
            amalgams.push_back(define_amalgam(hom_name(c.a, c.b, c.hom), ideal_name(c.b, c.ideal)));
        }

        for (const auto& d : amalgams)
            for (const char* check : {"f_join_iso", "graph_inclusion", "pull_identity", "alt_pullback",
                                      "canonical_isos", "reduced_criterion", "domain_criterion", "fibret",
                                      "noetherian"})
                out_ += std::string("check ") + check + "(" + d + ");\n";

        iterations(pool);
        pullbacks(pool);
        negative_fibret();
        named_constructions();
        if (!amalgams.empty()) {
            std::string args;
            for (const auto& d : amalgams)
                args += (args.empty() ? "" : ", ") + d;
            out_ += "check reduced_diamond_search(" + args + ");\n";
        }
        return out_;
    }

private:
    void add_ring(std::string name, std::string expr, std::vector<std::string> deps, RingPtr r)
    {
        if (r->order() > budget_)
            return;
        index_[name] = rings_.size();
        rings_.push_back({std::move(name), std::move(expr), std::move(deps), std::move(r)});
    }

    void add_rings()
    {
        for (int n = 2; n <= 12; ++n)
            add_ring("Z" + std::to_string(n), "zmod(" + std::to_string(n) + ")", {}, zmod(n));
        for (int m = 2; m <= 4; ++m)
            for (int n = m; m * n <= 16; ++n) {
                const std::string zm = "Z" + std::to_string(m), zn = "Z" + std::to_string(n);
                add_ring("P" + std::to_string(m) + "x" + std::to_string(n), "product(" + zm + ", " + zn + ")", {zm, zn},
                         direct_product({zmod(m), zmod(n)}));
            }
        const std::vector<std::tuple<int, int, int>> truncs{{2, 1, 1}, {3, 1, 1}, {2, 1, 2}, {2, 2, 1}, {4, 1, 1},
                                                            {2, 1, 3}, {3, 1, 2}, {2, 2, 2}, {2, 1, 5}};
        for (auto [p, vars, deg] : truncs) {
            const std::string base = "Z" + std::to_string(p);
            add_ring("T" + std::to_string(p) + "_" + std::to_string(vars) + "_" + std::to_string(deg),
                     "trunc(" + base + ", " + std::to_string(vars) + ", " + std::to_string(deg) + ")", {base},
                     trunc_poly(zmod(p), vars, deg));
        }
        add_ring("F4", "gf(2, 2)", {}, galois_field(2, 2));
        add_ring("F4e", "trunc(F4, 1, 1)", {"F4"}, trunc_poly(galois_field(2, 2), 1, 1));
    }

    bool has(const std::string& name) const { return index_.count(name) != 0; }
    const CatalogRing& ring(const std::string& name) const { return rings_[index_.at(name)]; }

    const std::string& use_ring(const std::string& name)
    {
        const CatalogRing& r = ring(name);
        if (defined_.insert(name).second) {
            for (const auto& d : r.deps)
                use_ring(d);
            out_ += "ring " + name + " = " + r.expr + ";\n";
        }
        return r.name;
    }

    void collect_ideals_and_homs()
    {
        ideals_.resize(rings_.size());
        for (std::size_t k = 0; k < rings_.size(); ++k) {
            auto all = all_ideals(rings_[k].ring);
            if (all.size() > ideals_per_ring)
                all.erase(all.begin() + ideals_per_ring, all.end());
            ideals_[k] = std::move(all);
        }
        for (std::size_t a = 0; a < rings_.size(); ++a)
            for (std::size_t b = 0; b < rings_.size(); ++b) {
                if (rings_[a].ring->order() * rings_[b].ring->order() > budget_)
                    continue;
                auto homs = enumerate_homs(rings_[a].ring, rings_[b].ring, homs_per_pair).homs;
                if (!homs.empty())
                    homs_[{a, b}] = std::move(homs);
            }
    }

    std::vector<Candidate> candidates() const
    {
        std::vector<Candidate> pool;
        for (const auto& [key, homs] : homs_) {
            const auto [a, b] = key;
            for (std::size_t h = 0; h < homs.size(); ++h)
                for (std::size_t i = 0; i < ideals_[b].size(); ++i)
                    if (!ideals_[b][i].ideal.is_zero() && rings_[a].ring->order() * ideals_[b][i].ideal.size() <= budget_)
                        pool.push_back({a, b, h, i});
        }
        return pool;
    }

    std::string ideal_name(std::size_t r, std::size_t i)
    {
        const std::string name = "I_" + rings_[r].name + "_" + std::to_string(i);
        if (defined_.insert(name).second) {
            use_ring(rings_[r].name);
            const auto& g = ideals_[r][i];
            out_ += "ideal " + name + " = gen(" + rings_[r].name + ";" +
                    (g.generators.empty() ? "" : literals(*rings_[r].ring, g.generators).substr(1)) + ");\n";
        }
        return name;
    }

    std::string hom_name(std::size_t a, std::size_t b, std::size_t h)
    {
        const std::string name = "h_" + rings_[a].name + "_" + rings_[b].name + "_" + std::to_string(h);
        if (defined_.insert(name).second) {
            use_ring(rings_[a].name);
            use_ring(rings_[b].name);
            const RingHom& f = homs_.at({a, b})[h];
            out_ += "hom " + name + " = map(" + rings_[a].name + " -> " + rings_[b].name + ";" +
                    literals(*rings_[b].ring, f.images()).substr(1) + ");\n";
        }
        return name;
    }

    std::string define_amalgam(const std::string& f, const std::string& j)
    {
        const std::string name = "D" + std::to_string(++amalgam_count_);
        out_ += "amalgam " + name + " = amalg(" + f + ", " + j + ");\n";
        return name;
    }

    std::string define(const std::string& type, const std::string& name, const std::string& expr)
    {
        if (defined_.insert(name).second)
            out_ += type + " " + name + " = " + expr + ";\n";
        return name;
    }

    void mandatory(std::vector<std::string>& amalgams)
    {
        const auto dup = [&](const std::string& r, const std::string& gen) {
            if (!has(r) || ring(r).ring->order() * ring(r).ring->order() > budget_)
                return;
            use_ring(r);
            const std::string i = define("ideal", "I_" + r + "_gen" + gen, "gen(" + r + "; " + gen + ")");
            const std::string name = "dup_" + r + "_" + gen;
            out_ += "amalgam " + name + " = dup(" + r + ", " + i + ");\n";
            amalgams.push_back(name);
        };
        dup("Z4", "2");
        dup("Z6", "2");
        if (has("Z4") && has("Z2") && budget_ >= 8) {
            use_ring("Z4");
            use_ring("Z2");
            const std::string f = define("hom", "can_Z4_Z2", "canonical(Z4 -> Z2)");
            const std::string j = define("ideal", "all_Z2", "whole(Z2)");
            out_ += "amalgam onto_Z4_Z2 = amalg(" + f + ", " + j + ");\n";
            amalgams.push_back("onto_Z4_Z2");
        }
        if (has("Z2") && has("F4") && budget_ >= 8) {
            use_ring("Z2");
            use_ring("F4");
            const std::string f = define("hom", "can_Z2_F4", "canonical(Z2 -> F4)");
            const std::string j = define("ideal", "zero_F4", "zero(F4)");
            out_ += "amalgam zero_Z2_F4 = amalg(" + f + ", " + j + ");\n";
            amalgams.push_back("zero_Z2_F4");
        }
    }

    void iterations(const std::vector<Candidate>& pool)
    {
        std::size_t taken = 0;
        for (const auto& c : pool) {
            if (taken == iteration_instances)
                break;
            const std::size_t na = rings_[c.a].ring->order();
            const std::size_t nb = rings_[c.b].ring->order();
            const std::size_t nj = ideals_[c.b][c.ideal].ideal.size();
            if (nj < 2 || na * nj * nj * nj > budget_ || nb * nb * nb > budget_)
                continue;
            const std::string f = hom_name(c.a, c.b, c.hom);
            const std::string j = ideal_name(c.b, c.ideal);
            out_ += "check iter_iso(" + f + ", " + j + ", 2);\n";
            out_ += "check iter_iso(" + f + ", " + j + ", 3);\n";
            ++taken;
        }
    }

    void pullbacks(const std::vector<Candidate>& pool)
    {
        std::size_t taken = 0;
        for (const auto& c : pool) {
            if (taken == pullback_instances)
                break;
            if (rings_[c.a].ring->order() * rings_[c.b].ring->order() > budget_)
                continue;
            const std::string f = hom_name(c.a, c.b, c.hom);
            const std::string j = ideal_name(c.b, c.ideal);
            const std::string k = std::to_string(++pullback_count_);
            const std::string q = define("hom", "q" + k, "proj(" + j + ")");
            const std::string al = define("hom", "alpha" + k, "compose(" + q + ", " + f + ")");
            const std::string pb = define("pullback", "PB" + k, "pullback(" + al + ", " + q + ")");
            out_ += "check factor(" + al + ", " + q + ", " + f + ");\n";
            out_ += "check prid(" + pb + ");\n";
            out_ += "check kernel_identity(" + pb + ");\n";
            out_ += "check fibret(" + al + ", " + q + ");\n";
            ++taken;
        }
    }

    void negative_fibret()
    {
        if (!has("Z4") || !has("Z2") || budget_ < 8)
            return;
        use_ring("Z4");
        use_ring("Z2");
        const std::string beta = define("hom", "can_Z4_Z2", "canonical(Z4 -> Z2)");
        out_ += "check fibret(id(Z2), " + beta + ");\n";
    }

    void named_constructions()
    {
        if (budget_ < 64)
            return;
        use_ring("Z2");
        use_ring("Z3");
        use_ring("Z4");
        use_ring("Z6");
        use_ring("Z8");
        use_ring("Z12");
        out_ += "check idealization(regular(Z3));\n";
        out_ += "check nagata_as_amalgam(regular(Z2));\n";
        out_ += "check nagata_as_amalgam(via(id(Z4), gen(Z4; 2)));\n";
        out_ += "check split_sequence(zmodule(as_ring(gen(Z4; 2)), 4), as_ring(gen(Z4; 2)));\n";
        out_ += "check dorroh(as_ring(gen(Z4; 2)));\n";
        out_ += "check dorroh(as_ring(gen(Z8; 2)));\n";
        out_ += "check dorroh(as_ring(gen(Z6; 2)));\n";

        use_ring("T2_1_1");
        out_ += "check d_plus_m(subring(T2_1_1;), nil(T2_1_1));\n";
        use_ring("F4e");
        const RingPtr& t = ring("F4e").ring;
        for (Elem x = 0; x < t->order(); ++x)
            if (t->power(x, 4) == x && x != t->zero() && x != t->unit()) {
                out_ += "check d_plus_m(subring(F4e; " + literal(t->label(x)) + "), nil(F4e));\n";
                break;
            }
        out_ += "check d_plus_m(subring(F4e;), nil(F4e));\n";

        out_ += "check cpi_prime(gen(Z12; 2));\n";
        out_ += "check cpi_prime(gen(Z12; 3));\n";
        out_ += "check cpi_prime(gen(Z8; 2));\n";
        out_ += "check cpi_ideal(gen(Z12; 4));\n";
        out_ += "check cpi_ideal(gen(Z12; 2));\n";
        out_ += "check cpi_ideal(gen(Z8; 4));\n";

        use_ring("F4");
        out_ += "check trunc_poly_amalgam(subring(F4;), whole(F4), 1, 1);\n";
        out_ += "check trunc_poly_amalgam(subring(Z4;), gen(Z4; 2), 1, 2);\n";
        out_ += "check trunc_poly_amalgam(full(Z2), whole(Z2), 2, 1);\n";

        use_ring("P2x2");
        out_ += "check noetherian_verdict_xjx(subring(P2x2;), gen(P2x2; " + literal(ring("P2x2").ring->label(2)) + "));\n";
        out_ += "check noetherian_verdict_xjx(full(Z4), gen(Z4; 2));\n";
    }

    std::size_t budget_;
    std::vector<CatalogRing> rings_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<GeneratedIdeal>> ideals_;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<RingHom>> homs_;
    std::set<std::string> defined_;
    std::string out_;
    std::size_t amalgam_count_ = 0;
    std::size_t pullback_count_ = 0;
};

} // namespace

Script generate_catalog(std::uint64_t seed, std::size_t budget)
{
    if (budget < minimum_catalog_budget) {
        Script s;
        s.warnings.push_back("budget " + std::to_string(budget) + " is below the smallest instance (" +
                             std::to_string(minimum_catalog_budget) + "); the catalog is empty");
        return s;
    }
    ScopedSizeGuard guard(std::max(size_guard(), budget));
    return parse(Builder(budget).run(seed));
}

} // namespace amalg::dsl
