#include "amalg/ring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>

namespace amalg {

namespace {

std::atomic<std::size_t> guard_limit{default_size_guard};

std::vector<std::string> index_labels(std::size_t n)
{
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i)
        labels[i] = std::to_string(i);
    return labels;
}

bool all_digits(const std::string& s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::size_t checked_mul(std::size_t a, std::size_t b, std::string_view what)
{
    if (a != 0 && b > (std::size_t{1} << 40) / a)
        throw AlgebraError(ErrorKind::size_guard_exceeded, std::string(what) + " is astronomically large");
    return a * b;
}

} // namespace

std::string_view to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::malformed_table: return "MalformedTable";
    case ErrorKind::malformed_map: return "MalformedMap";
    case ErrorKind::invalid_structure: return "InvalidStructure";
    case ErrorKind::invalid_parameter: return "InvalidParameter";
    case ErrorKind::size_guard_exceeded: return "SizeGuardExceeded";
    case ErrorKind::missing_identity: return "MissingIdentity";
    case ErrorKind::ambient_mismatch: return "AmbientMismatch";
    case ErrorKind::empty_set: return "EmptySet";
    case ErrorKind::not_multiplicatively_closed: return "NotMultiplicativelyClosed";
    case ErrorKind::not_surjective: return "NotSurjective";
    case ErrorKind::incompatible_structures: return "IncompatibleStructures";
    case ErrorKind::hypothesis_violated: return "HypothesisViolated";
    case ErrorKind::not_prime: return "NotPrime";
    }
    return "Unknown";
}

std::size_t size_guard() { return guard_limit.load(); }

void set_size_guard(std::size_t limit) { guard_limit.store(limit); }

void check_size(std::size_t order, std::string_view what)
{
    if (order > size_guard())
        throw AlgebraError(ErrorKind::size_guard_exceeded,
                           std::string(what) + " would have " + std::to_string(order) +
                               " elements, guard is " + std::to_string(size_guard()));
}

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::zmod: return "zmod";
    case Provenance::product: return "product";
    case Provenance::quotient: return "quotient";
    case Provenance::subring: return "subring";
    case Provenance::amalgam: return "amalgam";
    case Provenance::table: return "table";
    case Provenance::trunc_poly: return "trunc_poly";
    case Provenance::localization: return "localization";
    case Provenance::dotted_sum: return "dotted_sum";
    case Provenance::idealization: return "idealization";
    }
    return "unknown";
}

bool ValidationReport::violates(std::string_view axiom) const
{
    return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.axiom == axiom; });
}

std::string ValidationReport::summary() const
{
    std::ostringstream out;
    bool first = true;
    for (const auto& v : violations) {
        if (!first)
            out << "; ";
        first = false;
        out << v.axiom;
        if (!v.witness.empty()) {
            out << " at (";
            for (std::size_t i = 0; i < v.witness.size(); ++i)
                out << (i ? ", " : "") << v.witness[i];
            out << ")";
        }
    }
    return out.str();
}

FiniteRng::FiniteRng(std::size_t order, std::vector<Elem> add, std::vector<Elem> mul, Elem zero,
                     std::optional<Elem> one, std::vector<std::string> labels, Provenance provenance)
    : order_(order), add_(std::move(add)), mul_(std::move(mul)), zero_(zero), one_(one),
      labels_(std::move(labels)), provenance_(provenance)
{
    if (order_ == 0 || add_.size() != order_ * order_ || mul_.size() != order_ * order_)
        throw AlgebraError(ErrorKind::malformed_table, "tables must be order x order with order >= 1");
    if (zero_ >= order_ || (one_ && *one_ >= order_))
        throw AlgebraError(ErrorKind::malformed_table, "zero/one index out of range");
    if (labels_.empty())
        labels_ = index_labels(order_);
    if (labels_.size() != order_)
        throw AlgebraError(ErrorKind::malformed_table, "label count differs from order");
    for (Elem e : add_)
        if (e >= order_)
            throw AlgebraError(ErrorKind::malformed_table, "addition entry out of range");
    for (Elem e : mul_)
        if (e >= order_)
            throw AlgebraError(ErrorKind::malformed_table, "multiplication entry out of range");

    by_label_.reserve(order_);
    for (Elem i = 0; i < order_; ++i)
        if (!by_label_.emplace(labels_[i], i).second)
            throw AlgebraError(ErrorKind::malformed_table, "duplicate label '" + labels_[i] + "'");

    neg_.assign(order_, 0);
    for (Elem x = 0; x < order_; ++x) {
        bool found = false;
        for (Elem y = 0; y < order_ && !found; ++y)
            if (this->add(x, y) == zero_) {
                neg_[x] = y;
                found = true;
            }
        if (!found)
            throw AlgebraError(ErrorKind::invalid_structure, "element '" + labels_[x] + "' has no additive inverse");
    }
}

Elem FiniteRng::multiple(Elem x, std::int64_t n) const
{
    if (n < 0)
        return neg(multiple(x, -n));
    Elem result = zero_;
    Elem base = x;
    auto k = static_cast<std::uint64_t>(n);
    while (k) {
        if (k & 1)
            result = add(result, base);
        base = add(base, base);
        k >>= 1;
    }
    return result;
}

Elem FiniteRng::power(Elem x, std::uint64_t k) const
{
    if (k == 0)
        throw AlgebraError(ErrorKind::invalid_parameter, "power exponent must be >= 1");
    std::optional<Elem> result;
    Elem base = x;
    while (k) {
        if (k & 1)
            result = result ? mul(*result, base) : base;
        k >>= 1;
        if (k)
            base = mul(base, base);
    }
    return *result;
}

Elem FiniteRng::unit() const
{
    if (!one_)
        throw AlgebraError(ErrorKind::missing_identity, "ring has no identity");
    return *one_;
}

std::optional<Elem> FiniteRng::find_label(const std::string& text) const
{
    auto it = by_label_.find(text);
    if (it == by_label_.end())
        return std::nullopt;
    return it->second;
}

RawRing FiniteRng::raw() const
{
    return RawRing{order_, add_, mul_, zero_, one_, labels_};
}

bool FiniteRng::same_tables(const FiniteRng& other) const
{
    return order_ == other.order_ && zero_ == other.zero_ && one_ == other.one_ && add_ == other.add_ &&
           mul_ == other.mul_;
}

bool FiniteRng::operator==(const FiniteRng& other) const
{
    return same_tables(other) && labels_ == other.labels_;
}

ValidationReport validate_rng(const RawRing& c)
{
    const std::size_t n = c.order;
    if (n == 0 || c.add.size() != n * n || c.mul.size() != n * n)
        throw AlgebraError(ErrorKind::malformed_table, "tables must be square with order >= 1");
    auto in_range = [n](Elem e) { return e < n; };
    if (!std::all_of(c.add.begin(), c.add.end(), in_range) || !std::all_of(c.mul.begin(), c.mul.end(), in_range) ||
        c.zero >= n || (c.one && *c.one >= n))
        throw AlgebraError(ErrorKind::malformed_table, "table entry out of range");
    if (!c.labels.empty() && c.labels.size() != n)
        throw AlgebraError(ErrorKind::malformed_table, "label count differs from order");

    const auto labels = c.labels.empty() ? index_labels(n) : c.labels;
    auto A = [&](Elem x, Elem y) { return c.add[x * n + y]; };
    auto M = [&](Elem x, Elem y) { return c.mul[x * n + y]; };

    ValidationReport report;
    auto fail = [&](const char* axiom, std::initializer_list<Elem> w) {
        if (report.violates(axiom))
            return;
        Violation v{axiom, {}};
        for (Elem e : w)
            v.witness.push_back(labels[e]);
        report.violations.push_back(std::move(v));
    };

    std::set<std::string> seen;
    for (Elem x = 0; x < n; ++x)
        if (!seen.insert(labels[x]).second)
            fail("labels_distinct", {x});

    for (Elem x = 0; x < n; ++x) {
        if (A(c.zero, x) != x)
            fail("additive_identity", {x});
        bool has_neg = false;
        for (Elem y = 0; y < n; ++y) {
            if (A(x, y) == c.zero)
                has_neg = true;
            if (A(x, y) != A(y, x))
                fail("additive_commutativity", {x, y});
            if (M(x, y) != M(y, x))
                fail("multiplicative_commutativity", {x, y});
        }
        if (!has_neg)
            fail("additive_inverse", {x});
        if (c.one && M(*c.one, x) != x)
            fail("multiplicative_identity", {x});
    }
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y) {
            const Elem xy_add = A(x, y);
            const Elem xy_mul = M(x, y);
            for (Elem z = 0; z < n; ++z) {
                if (A(xy_add, z) != A(x, A(y, z)))
                    fail("additive_associativity", {x, y, z});
                if (M(xy_mul, z) != M(x, M(y, z)))
                    fail("multiplicative_associativity", {x, y, z});
                if (M(x, A(y, z)) != A(M(x, y), M(x, z)))
                    fail("distributivity", {x, y, z});
            }
        }
    return report;
}

ValidationReport validate_rng(const FiniteRng& ring)
{
    return validate_rng(ring.raw());
}

RingPtr make_ring(RawRing c, Provenance provenance)
{
    check_size(c.order, "table ring");
    auto report = validate_rng(c);
    if (!report.ok())
        throw AlgebraError(ErrorKind::invalid_structure, report.summary());
    if (!c.one) {
        for (Elem e = 0; e < c.order && !c.one; ++e) {
            bool is_one = true;
            for (Elem x = 0; x < c.order && is_one; ++x)
                is_one = c.mul[e * c.order + x] == x;
            if (is_one)
                c.one = e;
        }
    }
    return std::make_shared<FiniteRng>(c.order, std::move(c.add), std::move(c.mul), c.zero, c.one,
                                       std::move(c.labels), provenance);
}

RingPtr zmod(std::int64_t n)
{
    if (n <= 0)
        throw AlgebraError(ErrorKind::invalid_parameter, "zmod needs n >= 1, got " + std::to_string(n));
    const auto order = static_cast<std::size_t>(n);
    check_size(order, "zmod(" + std::to_string(n) + ")");
    std::vector<Elem> add(order * order), mul(order * order);
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
            add[x * order + y] = static_cast<Elem>((x + y) % order);
            mul[x * order + y] = static_cast<Elem>((x * y) % order);
        }
    const Elem one = order == 1 ? 0 : 1;
    return std::make_shared<FiniteRng>(order, std::move(add), std::move(mul), 0, one, index_labels(order),
                                       Provenance::zmod);
}

RingPtr direct_product(const std::vector<RingPtr>& factors)
{
    if (factors.empty())
        throw AlgebraError(ErrorKind::invalid_parameter, "direct_product needs at least one factor");
    std::size_t order = 1;
    for (const auto& f : factors)
        order = checked_mul(order, f->order(), "direct product");
    check_size(order, "direct product");

    const std::size_t k = factors.size();
    // digits[i*k + t] = index of component t of element i
    std::vector<Elem> digits(order * k);
    for (std::size_t i = 0; i < order; ++i) {
        std::size_t rest = i;
        for (std::size_t t = k; t-- > 0;) {
            digits[i * k + t] = static_cast<Elem>(rest % factors[t]->order());
            rest /= factors[t]->order();
        }
    }
    auto encode = [&](const std::vector<Elem>& comps) {
        std::size_t idx = 0;
        for (std::size_t t = 0; t < k; ++t)
            idx = idx * factors[t]->order() + comps[t];
        return static_cast<Elem>(idx);
    };

    std::vector<Elem> add(order * order), mul(order * order);
    std::vector<Elem> s(k), p(k);
    for (std::size_t x = 0; x < order; ++x)
        for (std::size_t y = 0; y < order; ++y) {
            for (std::size_t t = 0; t < k; ++t) {
                s[t] = factors[t]->add(digits[x * k + t], digits[y * k + t]);
                p[t] = factors[t]->mul(digits[x * k + t], digits[y * k + t]);
            }
            add[x * order + y] = encode(s);
            mul[x * order + y] = encode(p);
        }

    std::vector<std::string> labels(order);
    for (std::size_t i = 0; i < order; ++i) {
        std::string l = "(";
        for (std::size_t t = 0; t < k; ++t) {
            if (t)
                l += ",";
            l += factors[t]->label(digits[i * k + t]);
        }
        labels[i] = l + ")";
    }

    std::vector<Elem> zeros(k), ones(k);
    bool unital = true;
    for (std::size_t t = 0; t < k; ++t) {
        zeros[t] = factors[t]->zero();
        if (factors[t]->has_one())
            ones[t] = *factors[t]->one();
        else
            unital = false;
    }
    std::optional<Elem> one;
    if (unital)
        one = encode(ones);
    return std::make_shared<FiniteRng>(order, std::move(add), std::move(mul), encode(zeros), one, std::move(labels),
                                       Provenance::product);
}

std::vector<std::vector<int>> truncated_monomials(int vars, int degree_bound)
{
    std::vector<std::vector<int>> result;
    for (int d = 0; d <= degree_bound; ++d) {
        // exponent vectors of total degree d, lexicographically descending
        std::vector<int> e(vars, 0);
        auto rec = [&](auto&& self, int pos, int left) -> void {
            if (pos == vars - 1) {
                e[pos] = left;
                result.push_back(e);
                return;
            }
            for (int v = left; v >= 0; --v) {
                e[pos] = v;
                self(self, pos + 1, left - v);
            }
        };
        rec(rec, 0, d);
    }
    return result;
}

std::size_t monomial_count(int vars, int degree_bound)
{
    // C(vars + k, k)
    std::size_t c = 1;
    for (int i = 1; i <= degree_bound; ++i)
        c = c * static_cast<std::size_t>(vars + i) / static_cast<std::size_t>(i);
    return c;
}

RingPtr trunc_poly(const RingPtr& base, int vars, int degree_bound)
{
    if (vars < 1 || degree_bound < 0)
        throw AlgebraError(ErrorKind::invalid_parameter, "trunc_poly needs vars >= 1 and degree bound >= 0");
    if (!base->has_one())
        throw AlgebraError(ErrorKind::missing_identity, "trunc_poly needs a coefficient ring with identity");

    const auto monos = truncated_monomials(vars, degree_bound);
    const std::size_t m = monos.size();
    const std::size_t q = base->order();
    std::size_t order = 1;
    for (std::size_t i = 0; i < m; ++i)
        order = checked_mul(order, q, "truncated polynomial ring");
    check_size(order, "truncated polynomial ring");

    // product of monomials i and j, or -1 when the degree overflows
    std::vector<int> mono_mul(m * m, -1);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            std::vector<int> e(vars);
            int deg = 0;
            for (int v = 0; v < vars; ++v) {
                e[v] = monos[i][v] + monos[j][v];
                deg += e[v];
            }
            if (deg > degree_bound)
                continue;
            mono_mul[i * m + j] = static_cast<int>(std::find(monos.begin(), monos.end(), e) - monos.begin());
        }

    // coefficient vectors; the constant term is the most significant digit
    std::vector<Elem> coeffs(order * m);
    for (std::size_t idx = 0; idx < order; ++idx) {
        std::size_t rest = idx;
        for (std::size_t t = m; t-- > 0;) {
            coeffs[idx * m + t] = static_cast<Elem>(rest % q);
            rest /= q;
        }
    }
    auto encode = [&](const std::vector<Elem>& c) {
        std::size_t idx = 0;
        for (std::size_t t = 0; t < m; ++t)
            idx = idx * q + c[t];
        return static_cast<Elem>(idx);
    };

    std::vector<Elem> add(order * order), mul(order * order);
    std::vector<Elem> s(m), p(m);
    for (std::size_t x = 0; x < order; ++x) {
        const Elem* cx = &coeffs[x * m];
        for (std::size_t y = 0; y < order; ++y) {
            const Elem* cy = &coeffs[y * m];
            std::fill(p.begin(), p.end(), base->zero());
            for (std::size_t t = 0; t < m; ++t)
                s[t] = base->add(cx[t], cy[t]);
            for (std::size_t i = 0; i < m; ++i) {
                if (cx[i] == base->zero())
                    continue;
                for (std::size_t j = 0; j < m; ++j) {
                    const int target = mono_mul[i * m + j];
                    if (target >= 0)
                        p[target] = base->add(p[target], base->mul(cx[i], cy[j]));
                }
            }
            add[x * order + y] = encode(s);
            mul[x * order + y] = encode(p);
        }
    }

    auto monomial_name = [&](const std::vector<int>& e) {
        std::string out;
        for (int v = 0; v < vars; ++v) {
            if (e[v] == 0)
                continue;
            if (!out.empty())
                out += "*";
            out += vars == 1 ? "X" : "X" + std::to_string(v + 1);
            if (e[v] > 1)
                out += "^" + std::to_string(e[v]);
        }
        return out;
    };
    std::vector<std::string> labels(order);
    if (m == 1) {
        labels = base->labels();
    } else {
        const std::string& one_label = base->label(*base->one());
        for (std::size_t idx = 0; idx < order; ++idx) {
            std::string l;
            for (std::size_t t = 0; t < m; ++t) {
                const Elem c = coeffs[idx * m + t];
                if (c == base->zero())
                    continue;
                const std::string& cl = base->label(c);
                std::string coef = all_digits(cl) ? cl : "[" + cl + "]";
                std::string term;
                if (t == 0)
                    term = coef;
                else if (cl == one_label)
                    term = monomial_name(monos[t]);
                else
                    term = coef + monomial_name(monos[t]);
                l += (l.empty() ? "" : "+") + term;
            }
            labels[idx] = l.empty() ? "0" : l;
        }
    }

    std::vector<Elem> zero_c(m, base->zero()), one_c(m, base->zero());
    one_c[0] = *base->one();
    return std::make_shared<FiniteRng>(order, std::move(add), std::move(mul), encode(zero_c), encode(one_c),
                                       std::move(labels), Provenance::trunc_poly);
}

namespace {

using Poly = std::vector<std::int64_t>;  // coefficient of a^i at position i

bool is_prime_number(std::int64_t p)
{
    if (p < 2)
        return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

// remainder of a modulo monic g over Z/p
Poly poly_mod(Poly a, const Poly& g, std::int64_t p)
{
    const std::size_t dg = g.size() - 1;
    for (std::size_t i = a.size(); i-- > dg;) {
        const std::int64_t c = a[i] % p;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dg; ++j)
            a[i - dg + j] = ((a[i - dg + j] - c * g[j]) % p + p) % p;
    }
    a.resize(std::min(a.size(), dg));
    return a;
}

bool has_monic_factor_of_degree(const Poly& g, int d, std::int64_t p)
{
    // enumerate monic polynomials of degree d
    Poly h(d + 1, 0);
    h[d] = 1;
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i)
        count *= p;
    for (std::int64_t code = 0; code < count; ++code) {
        std::int64_t rest = code;
        for (int i = 0; i < d; ++i) {
            h[i] = rest % p;
            rest /= p;
        }
        auto r = poly_mod(g, h, p);
        if (std::all_of(r.begin(), r.end(), [](std::int64_t c) { return c == 0; }))
            return true;
    }
    return false;
}

} // namespace

RingPtr galois_field(std::int64_t p, int k)
{
    if (!is_prime_number(p) || k < 1)
        throw AlgebraError(ErrorKind::invalid_parameter, "galois_field needs a prime p and k >= 1");
    std::size_t q = 1;
    for (int i = 0; i < k; ++i)
        q = checked_mul(q, static_cast<std::size_t>(p), "galois field");
    check_size(q, "galois field");
    if (k == 1)
        return zmod(p);

    // least irreducible monic modulus, constant term most significant in the search order
    Poly g;
    for (std::size_t code = 0; code < q && g.empty(); ++code) {
        Poly cand(k + 1, 0);
        cand[k] = 1;
        std::size_t rest = code;
        for (int i = k - 1; i >= 0; --i) {
            cand[i] = static_cast<std::int64_t>(rest % p);
            rest /= p;
        }
        bool irreducible = true;
        for (int d = 1; d <= k / 2 && irreducible; ++d)
            irreducible = !has_monic_factor_of_degree(cand, d, p);
        if (irreducible)
            g = cand;
    }

    auto decode = [&](std::size_t idx) {
        Poly a(k, 0);
        for (int i = 0; i < k; ++i) {
            a[i] = static_cast<std::int64_t>(idx % p);
            idx /= p;
        }
        return a;
    };
    auto encode = [&](const Poly& a) {
        std::size_t idx = 0;
        for (int i = k - 1; i >= 0; --i)
            idx = idx * p + static_cast<std::size_t>(i < static_cast<int>(a.size()) ? a[i] : 0);
        return static_cast<Elem>(idx);
    };

    std::vector<Elem> add(q * q), mul(q * q);
    for (std::size_t x = 0; x < q; ++x) {
        const Poly a = decode(x);
        for (std::size_t y = 0; y < q; ++y) {
            const Poly b = decode(y);
            Poly s(k), prod(2 * k - 1, 0);
            for (int i = 0; i < k; ++i)
                s[i] = (a[i] + b[i]) % p;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
            add[x * q + y] = encode(s);
            mul[x * q + y] = encode(poly_mod(prod, g, p));
        }
    }

    std::vector<std::string> labels(q);
    for (std::size_t x = 0; x < q; ++x) {
        const Poly a = decode(x);
        std::string l;
        for (int i = k - 1; i >= 0; --i) {
            if (a[i] == 0)
                continue;
            std::string term;
            if (i == 0)
                term = std::to_string(a[i]);
            else {
                term = a[i] == 1 ? "" : std::to_string(a[i]);
                term += i == 1 ? "a" : "a^" + std::to_string(i);
            }
            l += (l.empty() ? "" : "+") + term;
        }
        labels[x] = l.empty() ? "0" : l;
    }
    return std::make_shared<FiniteRng>(q, std::move(add), std::move(mul), 0, 1, std::move(labels),
                                       Provenance::quotient);
}

std::uint64_t additive_order(const FiniteRng& ring, Elem x)
{
    std::uint64_t n = 1;
    Elem acc = x;
    while (acc != ring.zero()) {
        acc = ring.add(acc, x);
        ++n;
    }
    return n;
}

std::uint64_t characteristic(const FiniteRng& ring)
{
    std::uint64_t c = 1;
    for (Elem x = 0; x < ring.order(); ++x)
        c = std::lcm(c, additive_order(ring, x));
    return c;
}

std::optional<Elem> inverse(const FiniteRng& ring, Elem x)
{
    if (!ring.has_one())
        return std::nullopt;
    const Elem one = *ring.one();
    for (Elem y = 0; y < ring.order(); ++y)
        if (ring.mul(x, y) == one)
            return y;
    return std::nullopt;
}

bool is_unit(const FiniteRng& ring, Elem x)
{
    return inverse(ring, x).has_value();
}

bool is_zero_divisor(const FiniteRng& ring, Elem x)
{
    for (Elem y = 0; y < ring.order(); ++y)
        if (y != ring.zero() && ring.mul(x, y) == ring.zero())
            return true;
    return false;
}

bool is_idempotent(const FiniteRng& ring, Elem x)
{
    return ring.mul(x, x) == x;
}

std::uint64_t nilpotency_index(const FiniteRng& ring, Elem x)
{
    Elem acc = x;
    for (std::uint64_t m = 1; m <= ring.order() + 1; ++m) {
        if (acc == ring.zero())
            return m;
        acc = ring.mul(acc, x);
    }
    return 0;
}

bool is_nilpotent(const FiniteRng& ring, Elem x)
{
    return nilpotency_index(ring, x) != 0;
}

bool is_zero_ring(const FiniteRng& ring)
{
    return ring.order() == 1;
}

bool is_domain(const FiniteRng& ring)
{
    ring.unit();
    if (is_zero_ring(ring))
        return false;
    for (Elem x = 0; x < ring.order(); ++x)
        if (x != ring.zero() && is_zero_divisor(ring, x))
            return false;
    return true;
}

bool is_field(const FiniteRng& ring)
{
    ring.unit();
    if (is_zero_ring(ring))
        return false;
    for (Elem x = 0; x < ring.order(); ++x)
        if (x != ring.zero() && !is_unit(ring, x))
            return false;
    return true;
}

bool is_reduced(const FiniteRng& ring)
{
    for (Elem x = 0; x < ring.order(); ++x)
        if (x != ring.zero() && is_nilpotent(ring, x))
            return false;
    return true;
}

bool is_local(const FiniteRng& ring)
{
    if (!ring.has_one() || is_zero_ring(ring))
        return false;
    std::vector<bool> unit(ring.order());
    std::vector<Elem> non_units;
    for (Elem x = 0; x < ring.order(); ++x) {
        unit[x] = is_unit(ring, x);
        if (!unit[x])
            non_units.push_back(x);
    }
    for (Elem x : non_units)
        for (Elem y : non_units)
            if (unit[ring.add(x, y)])
                return false;
    return true;
}

std::vector<std::string> labels_of(const FiniteRng& ring, const std::vector<Elem>& elems)
{
    std::vector<std::string> out;
    out.reserve(elems.size());
    for (Elem e : elems)
        out.push_back(ring.label(e));
    return out;
}

std::string describe(const FiniteRng& ring)
{
    return std::string(to_string(ring.provenance())) + " ring of order " + std::to_string(ring.order()) +
           (ring.has_one() ? "" : " without identity");
}

} // namespace amalg
