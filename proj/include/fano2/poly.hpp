#pragma once

// Exact sparse multivariate polynomials over the rationals, with named
// variables, substitution homomorphisms, partial derivatives and the
// plain-text syntax used by golden files and the command line:
// variables, integers, +, -, *, ^ and parentheses.

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fano2/errors.hpp"
#include "fano2/rational.hpp"

namespace fano2::polyverify {

// Exponent vector as a sparse map; only positive exponents are stored.
using Monomial = std::map<std::string, int>;

inline long mono_degree(const Monomial& m) {
    long d = 0;
    for (auto& [v, e] : m) d += e;
    return d;
}

// Graded lexicographic order, higher degree first so begin() is the leading
// term; ties broken by comparing exponents along sorted variable names.
struct MonoOrder {
    bool operator()(const Monomial& x, const Monomial& y) const {
        const long dx = mono_degree(x), dy = mono_degree(y);
        if (dx != dy) return dx > dy;
        auto ix = x.begin(), iy = y.begin();
        while (ix != x.end() && iy != y.end()) {
            if (ix->first != iy->first) return ix->first < iy->first;  // earlier variable present => larger
            if (ix->second != iy->second) return ix->second > iy->second;
            ++ix, ++iy;
        }
        return ix != x.end();
    }
};

class Poly {
public:
    using Terms = std::map<Monomial, Rat, MonoOrder>;

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    static Poly constant(long n) { return Poly(make_rat(n)); }
    static Poly variable(const std::string& name, int exp = 1) {
        Poly p;
        if (exp < 0) throw InputError("negative exponent");
        if (exp == 0) return constant(1);
        p.terms_[Monomial{{name, exp}}] = make_rat(1);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly& operator+=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) {
        Poly r;
        for (auto& [m, c] : a.terms_) r.terms_[m] = -c;
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) {
                Monomial m = ma;
                for (auto& [v, e] : mb) m[v] += e;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly pow(int n) const {
        if (n < 0) throw InputError("negative exponent");
        Poly r = constant(1);
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    std::set<std::string> variables() const {
        std::set<std::string> vs;
        for (auto& [m, c] : terms_)
            for (auto& [v, e] : m) vs.insert(v);
        return vs;
    }

    int degree_in(const std::string& v) const {
        int d = 0;
        for (auto& [m, c] : terms_) {
            auto it = m.find(v);
            if (it != m.end()) d = std::max(d, it->second);
        }
        return d;
    }

    // Coefficient of v^k, a polynomial in the remaining variables.
    Poly coefficient_of(const std::string& v, int k) const {
        Poly r;
        for (auto& [m, c] : terms_) {
            auto it = m.find(v);
            const int e = it == m.end() ? 0 : it->second;
            if (e != k) continue;
            Monomial rest = m;
            rest.erase(v);
            r.add_term(rest, c);
        }
        return r;
    }

    Poly derivative(const std::string& v) const {
        Poly r;
        for (auto& [m, c] : terms_) {
            auto it = m.find(v);
            if (it == m.end()) continue;
            Monomial dm = m;
            const int e = it->second;
            if (e == 1) dm.erase(v);
            else dm[v] = e - 1;
            r.add_term(dm, c * e);
        }
        return r;
    }

    Rat evaluate(const std::map<std::string, Rat>& point) const {
        Rat total = 0;
        for (auto& [m, c] : terms_) {
            Rat t = c;
            for (auto& [v, e] : m) {
                auto it = point.find(v);
                if (it == point.end()) throw SubstError("evaluate: no value for variable '" + v + "'");
                for (int i = 0; i < e; ++i) t *= it->second;
            }
            total += t;
        }
        return total;
    }

    Rat constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rat(0) : it->second;
    }

    const std::pair<const Monomial, Rat>& leading() const {
        if (terms_.empty()) throw InputError("leading term of zero polynomial");
        return *terms_.begin();
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            Rat a = c;
            if (first) {
                if (a < 0) { out << "-"; a = -a; }
            } else {
                out << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            const bool unit = a == 1 && !m.empty();
            if (!unit) out << rat_str(a);
            bool star = !unit;
            for (auto& [v, e] : m) {
                if (star) out << "*";
                out << v;
                if (e > 1) out << "^" << e;
                star = true;
            }
        }
        return out.str();
    }

private:
    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);  // canonical form: no zero coefficients
        }
    }

    Terms terms_;
};

// Exact division: returns the quotient if d divides p, otherwise nothing.
// Long division against the single divisor's leading term; for an exact
// multiple the remainder vanishes in any monomial order.
inline std::optional<Poly> divide_exact(const Poly& p, const Poly& d) {
    if (d.is_zero()) throw InputError("division by zero polynomial");
    Poly rem = p, quot;
    const auto& [dm, dc] = d.leading();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading();
        // divisibility of leading monomials
        Monomial q = rm;
        for (auto& [v, e] : dm) {
            auto it = q.find(v);
            if (it == q.end() || it->second < e) return std::nullopt;
            it->second -= e;
            if (it->second == 0) q.erase(it);
        }
        Poly t;
        {
            Poly mono;
            mono = Poly(rc / dc);
            for (auto& [v, e] : q) mono = mono * Poly::variable(v, e);
            t = mono;
        }
        quot += t;
        rem -= t * d;
    }
    return quot;
}

// ---------------------------------------------------------------------------
// Parser for the documented grammar.

namespace detail {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    Poly expr() {
        skip();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = get() == '-';
        Poly p = term();
        if (neg) p = -p;
        for (;;) {
            skip();
            const char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                Poly q = term();
                p = c == '+' ? p + q : p - q;
            } else {
                return p;
            }
        }
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            skip();
            if (peek() == '*') {
                ++pos_;
                p = p * factor();
            } else {
                return p;
            }
        }
    }

    Poly factor() {
        Poly b = base();
        skip();
        if (peek() == '^') {
            ++pos_;
            skip();
            if (!std::isdigit(peek())) fail("expected exponent");
            b = b.pow(static_cast<int>(integer()));
        }
        return b;
    }

    Poly base() {
        skip();
        const char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            skip();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(c)) return Poly(make_rat(integer()));
        if (std::isalpha(c) || c == '_') {
            std::string name;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            return Poly::variable(name);
        }
        fail("unexpected character");
        return {};
    }

    long integer() {
        long v = 0;
        if (!std::isdigit(peek())) fail("expected integer");
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            v = v * 10 + (s_[pos_++] - '0');
        return v;
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }
    [[noreturn]] void fail(const std::string& what) const {
        throw FormatError("polynomial syntax error at position " + std::to_string(pos_) + ": " + what + " in '" +
                          s_ + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace detail

inline Poly parse_poly(const std::string& text) { return detail::Parser(text).parse(); }

// ---------------------------------------------------------------------------
// Substitution homomorphisms: a total map from variable names to images.

class Substitution {
public:
    Substitution() = default;

    static Substitution identity_on(const std::vector<std::string>& vars) {
        Substitution s;
        for (const auto& v : vars) s.map_[v] = Poly::variable(v);
        return s;
    }

    void set(const std::string& var, Poly image) { map_[var] = std::move(image); }

    bool defines(const std::string& var) const { return map_.count(var) != 0; }

    const Poly& image(const std::string& var) const {
        auto it = map_.find(var);
        if (it == map_.end()) throw SubstError("substitution does not define variable '" + var + "'");
        return it->second;
    }

    const std::map<std::string, Poly>& images() const { return map_; }

private:
    std::map<std::string, Poly> map_;
};

// Homomorphic image of p under s; s must be total on the variables of p.
inline Poly substitute(const Poly& p, const Substitution& s) {
    Poly out;
    for (auto& [m, c] : p.terms()) {
        Poly t(c);
        for (auto& [v, e] : m) t = t * s.image(v).pow(e);
        out += t;
    }
    return out;
}

// Partials of p in the given variable order (sorted variable names of p by
// default), plus spot-check evaluation via Poly::evaluate.
inline std::vector<Poly> jacobian(const Poly& p, const std::vector<std::string>& vars) {
    std::vector<Poly> out;
    out.reserve(vars.size());
    for (const auto& v : vars) out.push_back(p.derivative(v));
    return out;
}

inline std::vector<Poly> jacobian(const Poly& p) {
    const auto vs = p.variables();
    return jacobian(p, std::vector<std::string>(vs.begin(), vs.end()));
}

} // namespace fano2::polyverify
