#pragma once

// Sparse multivariate polynomials over Rat.
//
// A VarRegistry fixes the variable universe and the graded-lexicographic
// term order for a session (earlier registration = more significant).
// Poly is a canonical term map: no zero coefficients, leading term first.

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pedcurve/error.hpp"
#include "pedcurve/rational.hpp"

namespace pedcurve {

using VarId = std::uint32_t;

class VarRegistry {
public:
    VarRegistry() = default;
    explicit VarRegistry(std::initializer_list<const char*> names) {
        for (const char* n : names) add(n);
    }

    VarId add(const std::string& name) {
        auto it = index_.find(name);
        if (it != index_.end()) return it->second;
        if (name.empty()) throw error(errc::internal, "empty variable name");
        VarId id = static_cast<VarId>(names_.size());
        names_.push_back(name);
        index_.emplace(name, id);
        return id;
    }

    std::optional<VarId> find(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    const std::string& name(VarId id) const { return names_.at(id); }
    std::size_t size() const { return names_.size(); }

private:
    std::vector<std::string> names_;
    std::map<std::string, VarId> index_;
};

// Exponent vector, sparse: sorted (var, exp) pairs, exponents > 0.
struct Monomial {
    std::vector<std::pair<VarId, std::uint32_t>> exps;

    static Monomial one() { return {}; }

    static Monomial var(VarId v, std::uint32_t e = 1) {
        Monomial m;
        if (e > 0) m.exps.emplace_back(v, e);
        return m;
    }

    bool is_one() const { return exps.empty(); }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [v, e] : exps) d += e;
        return d;
    }

    std::uint32_t exponent(VarId v) const {
        for (const auto& [w, e] : exps)
            if (w == v) return e;
        return 0;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        std::size_t i = 0, j = 0;
        while (i < exps.size() || j < o.exps.size()) {
            if (j == o.exps.size() || (i < exps.size() && exps[i].first < o.exps[j].first))
                r.exps.push_back(exps[i++]);
            else if (i == exps.size() || o.exps[j].first < exps[i].first)
                r.exps.push_back(o.exps[j++]);
            else {
                r.exps.emplace_back(exps[i].first, exps[i].second + o.exps[j].second);
                ++i;
                ++j;
            }
        }
        return r;
    }

    // Exact monomial quotient, or nullopt when o does not divide.
    std::optional<Monomial> divide(const Monomial& o) const {
        Monomial r;
        std::size_t i = 0;
        for (const auto& [v, e] : o.exps) {
            while (i < exps.size() && exps[i].first < v) r.exps.push_back(exps[i++]);
            if (i == exps.size() || exps[i].first != v || exps[i].second < e)
                return std::nullopt;
            if (exps[i].second > e) r.exps.emplace_back(v, exps[i].second - e);
            ++i;
        }
        while (i < exps.size()) r.exps.push_back(exps[i++]);
        return r;
    }

    Monomial without(VarId v) const {
        Monomial r;
        for (const auto& p : exps)
            if (p.first != v) r.exps.push_back(p);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps == b.exps;
    }
};

// Graded lex: higher total degree wins; ties broken variable by variable
// in registry order, larger exponent on the earliest variable wins.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db ? -1 : 1;
    std::size_t i = 0, j = 0;
    while (i < a.exps.size() && j < b.exps.size()) {
        if (a.exps[i].first != b.exps[j].first)
            return a.exps[i].first < b.exps[j].first ? 1 : -1;
        if (a.exps[i].second != b.exps[j].second)
            return a.exps[i].second < b.exps[j].second ? -1 : 1;
        ++i;
        ++j;
    }
    if (i < a.exps.size()) return 1;
    if (j < b.exps.size()) return -1;
    return 0;
}

struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grlex_cmp(a, b) > 0;
    }
};

class Poly {
public:
    using TermMap = std::map<Monomial, Rat, MonoGreater>;

    Poly() = default;
    Poly(long long c) { set_term(Monomial::one(), Rat(c)); }  // NOLINT
    Poly(const Rat& c) { set_term(Monomial::one(), c); }      // NOLINT

    static Poly variable(VarId v) {
        Poly p;
        p.set_term(Monomial::var(v), Rat(1));
        return p;
    }

    static Poly term(const Rat& c, const Monomial& m) {
        Poly p;
        p.set_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    // Constant term value; for constant polynomials this is the value.
    Rat constant_value() const {
        auto it = terms_.find(Monomial::one());
        return it == terms_.end() ? Rat(0) : it->second;
    }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    const Monomial& leading_monomial() const {
        if (terms_.empty()) throw error(errc::zero_polynomial, "leading term of zero");
        return terms_.begin()->first;
    }
    const Rat& leading_coefficient() const {
        if (terms_.empty()) throw error(errc::zero_polynomial, "leading term of zero");
        return terms_.begin()->second;
    }

    unsigned total_degree() const {
        unsigned d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    int degree(VarId v) const {
        int d = -1;
        for (const auto& [m, c] : terms_)
            d = std::max(d, static_cast<int>(m.exponent(v)));
        return d;  // -1 for the zero polynomial
    }

    bool depends_on(VarId v) const {
        for (const auto& [m, c] : terms_)
            if (m.exponent(v) > 0) return true;
        return false;
    }

    std::set<VarId> variables() const {
        std::set<VarId> s;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.exps) s.insert(v);
        return s;
    }

    Rat coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rat(0) : it->second;
    }

    // Coefficient of v^k as a polynomial in the remaining variables.
    Poly coeff_of(VarId v, std::uint32_t k) const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (m.exponent(v) == k) r.add_term(m.without(v), c);
        return r;
    }

    Poly leading_coeff(VarId v) const {
        int d = degree(v);
        if (d < 0) return Poly();
        return coeff_of(v, static_cast<std::uint32_t>(d));
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        Poly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Poly operator-() const {
        Poly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }
    Poly& operator+=(const Poly& b) { return *this = *this + b; }
    Poly& operator-=(const Poly& b) { return *this = *this - b; }
    Poly& operator*=(const Poly& b) { return *this = *this * b; }

    Poly scaled(const Rat& c) const {
        if (c.is_zero()) return Poly();
        Poly r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
        return r;
    }

    Poly mul_term(const Rat& c, const Monomial& m) const {
        if (c.is_zero()) return Poly();
        Poly r;
        for (const auto& [mm, k] : terms_) r.terms_.emplace(mm.times(m), k * c);
        return r;
    }

    Poly pow(std::uint64_t e) const {
        Poly r = 1;
        Poly base = *this;
        while (e != 0) {
            if (e & 1) r *= base;
            if (e >>= 1) base *= base;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly differentiate(VarId v) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = m.exponent(v);
            if (e == 0) continue;
            Monomial dm = m;
            for (auto& p : dm.exps)
                if (p.first == v) p.second -= 1;
            dm.exps.erase(std::remove_if(dm.exps.begin(), dm.exps.end(),
                                         [](const auto& p) { return p.second == 0; }),
                          dm.exps.end());
            r.add_term(dm, c * Rat(static_cast<long long>(e)));
        }
        return r;
    }

    Rat evaluate(const std::map<VarId, Rat>& point) const {
        Rat acc(0);
        for (const auto& [m, c] : terms_) {
            Rat t = c;
            for (const auto& [v, e] : m.exps) {
                auto it = point.find(v);
                if (it == point.end())
                    throw error(errc::unbound_variable, "unbound variable in evaluate");
                t *= it->second.pow(e);
            }
            acc += t;
        }
        return acc;
    }

    double evaluate_double(const std::map<VarId, double>& point) const {
        double acc = 0;
        for (const auto& [m, c] : terms_) {
            double t = c.to_double();
            for (const auto& [v, e] : m.exps) {
                double base = point.at(v);
                for (std::uint32_t i = 0; i < e; ++i) t *= base;
            }
            acc += t;
        }
        return acc;
    }

    Poly homogeneous_component(unsigned k) const {
        Poly r;
        for (const auto& [m, c] : terms_)
            if (m.total_degree() == k) r.terms_.emplace(m, c);
        return r;
    }

    // Replace each occurrence of a variable by another variable.
    Poly rename_var(VarId from, VarId to) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Monomial nm = Monomial::one();
            for (const auto& [v, e] : m.exps)
                nm = nm.times(Monomial::var(v == from ? to : v, e));
            r.add_term(nm, c);
        }
        return r;
    }

    // Largest rational g with all coefficients integer multiples of g,
    // i.e. gcd(numerators)/lcm(denominators). Zero polynomial gives 0.
    Rat rational_content() const {
        Rat g(0);
        for (const auto& [m, c] : terms_) g = Rat::gcd(g, c);
        return g;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

private:
    TermMap terms_;

    void set_term(const Monomial& m, const Rat& c) {
        if (!c.is_zero()) terms_[m] = c;
    }
};

// Total order on polynomials: term by term in descending term order,
// monomials first, then coefficients; prefixes sort first.
inline int poly_cmp(const Poly& a, const Poly& b) {
    auto ia = a.terms().begin(), ib = b.terms().begin();
    for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
        int c = grlex_cmp(ia->first, ib->first);
        if (c != 0) return c;
        if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    }
    if (ia != a.terms().end()) return 1;
    if (ib != b.terms().end()) return -1;
    return 0;
}

// P = unit * normalized, where normalized has coprime integer coefficients
// and positive leading coefficient under the term order.
struct Normalized {
    Rat unit;
    Poly poly;
};

inline Normalized normalize_poly(const Poly& p) {
    if (p.is_zero()) return {Rat(1), Poly()};
    Rat g = p.rational_content();
    if (p.leading_coefficient().is_negative()) g = -g;
    return {g, p.scaled(g.inverse())};
}

inline Poly normalized(const Poly& p) { return normalize_poly(p).poly; }

// Exact multivariate division via leading-term steps; nullopt when b
// does not divide a.
inline std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
    if (a.is_zero()) return Poly();
    if (b.is_constant()) return a.scaled(b.constant_value().inverse());
    Poly r = a, q;
    const Monomial& lmb = b.leading_monomial();
    const Rat& lcb = b.leading_coefficient();
    while (!r.is_zero()) {
        auto qm = r.leading_monomial().divide(lmb);
        if (!qm) return std::nullopt;
        Rat qc = r.leading_coefficient() / lcb;
        q.add_term(*qm, qc);
        r -= b.mul_term(qc, *qm);
    }
    return q;
}

inline Poly exact_div(const Poly& a, const Poly& b) {
    auto q = try_divide(a, b);
    if (!q) throw error(errc::internal, "inexact polynomial division");
    return *q;
}

inline bool divides(const Poly& b, const Poly& a) {
    return try_divide(a, b).has_value();
}

// P with each bound variable v replaced by v + shift(v).
inline Poly translate_affine(const Poly& p, const std::map<VarId, Rat>& shifts) {
    Poly r = p;
    for (const auto& [v, s] : shifts) {
        if (s.is_zero()) continue;
        int d = r.degree(v);
        if (d <= 0) continue;
        // binomial expansion per power of v, cached
        std::vector<Poly> pw(static_cast<std::size_t>(d) + 1);
        pw[0] = Poly(1);
        Poly lin = Poly::variable(v) + Poly(s);
        for (int k = 1; k <= d; ++k) pw[static_cast<std::size_t>(k)] = pw[k - 1] * lin;
        Poly acc;
        for (int k = 0; k <= d; ++k) {
            Poly ck = r.coeff_of(v, static_cast<std::uint32_t>(k));
            if (!ck.is_zero()) acc += ck * pw[static_cast<std::size_t>(k)];
        }
        r = acc;
    }
    return r;
}

// Canonical text: terms in descending term order, explicit '*', '^' powers.
inline std::string mono_to_string(const Monomial& m, const VarRegistry& reg) {
    std::string s;
    for (const auto& [v, e] : m.exps) {
        if (!s.empty()) s += "*";
        s += reg.name(v);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

inline std::string poly_to_string(const Poly& p, const VarRegistry& reg) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat a = c.abs();
        bool lead_minus = false;
        if (first) {
            if (c.is_negative()) {
                s += "-";
                lead_minus = true;
            }
            first = false;
        } else {
            s += c.is_negative() ? " - " : " + ";
        }
        std::string ms = mono_to_string(m, reg);
        if (ms.empty()) {
            s += a.to_string();
        } else if (a.is_one()) {
            // a leading "-x^k" would bind the sign before the power under
            // the grammar; spell the coefficient out in that case
            if (lead_minus && m.exps.front().second > 1)
                s += "1*" + ms;
            else
                s += ms;
        } else {
            s += a.to_string() + "*" + ms;
        }
    }
    return s;
}

}  // namespace pedcurve
