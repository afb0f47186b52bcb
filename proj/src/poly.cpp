#include "burniat/poly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace burniat {

namespace {

std::mutex &var_mutex()
{
    static std::mutex m;
    return m;
}

std::vector<std::string> &var_names()
{
    static std::vector<std::string> names;
    return names;
}

std::map<std::string, int> &var_index()
{
    static std::map<std::string, int> idx;
    return idx;
}

} // namespace

int poly_var_id(const std::string &name)
{
    std::lock_guard<std::mutex> lock(var_mutex());
    auto it = var_index().find(name);
    if (it != var_index().end()) return it->second;
    int id = static_cast<int>(var_names().size());
    var_names().push_back(name);
    var_index()[name] = id;
    return id;
}

const std::string &poly_var_name(int id)
{
    std::lock_guard<std::mutex> lock(var_mutex());
    return var_names().at(static_cast<std::size_t>(id));
}

Monomial Monomial::var(int id, int exp)
{
    Monomial m;
    if (exp > 0) m.factors.push_back({id, exp});
    return m;
}

int Monomial::degree() const
{
    int d = 0;
    for (const auto &[v, e] : factors) d += e;
    return d;
}

int Monomial::exponent_of(int id) const
{
    for (const auto &[v, e] : factors)
        if (v == id) return e;
    return 0;
}

Monomial Monomial::operator*(const Monomial &o) const
{
    Monomial r;
    std::size_t i = 0, j = 0;
    while (i < factors.size() || j < o.factors.size()) {
        if (j == o.factors.size() || (i < factors.size() && factors[i].first < o.factors[j].first))
            r.factors.push_back(factors[i++]);
        else if (i == factors.size() || o.factors[j].first < factors[i].first)
            r.factors.push_back(o.factors[j++]);
        else {
            r.factors.push_back({factors[i].first, factors[i].second + o.factors[j].second});
            ++i;
            ++j;
        }
    }
    return r;
}

bool Monomial::divisible_by(const Monomial &o) const
{
    for (const auto &[v, e] : o.factors)
        if (exponent_of(v) < e) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial &o) const
{
    Monomial r;
    std::size_t j = 0;
    for (const auto &[v, e] : factors) {
        int sub = 0;
        while (j < o.factors.size() && o.factors[j].first < v) ++j;
        if (j < o.factors.size() && o.factors[j].first == v) sub = o.factors[j].second;
        if (e - sub < 0) throw std::invalid_argument("Monomial::divide_by: not divisible");
        if (e - sub > 0) r.factors.push_back({v, e - sub});
    }
    return r;
}

std::string Monomial::to_string() const
{
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto &[v, e] : factors) {
        if (!first) os << "*";
        os << poly_var_name(v);
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

bool GrlexGreater::operator()(const Monomial &a, const Monomial &b) const
{
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    // lex: smaller variable id with higher exponent first
    std::size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        if (a.factors[i].first != b.factors[j].first)
            return a.factors[i].first < b.factors[j].first;
        if (a.factors[i].second != b.factors[j].second)
            return a.factors[i].second > b.factors[j].second;
        ++i;
        ++j;
    }
    return i < a.factors.size();
}

void Poly::set_term(const Monomial &m, const BigRat &c)
{
    if (c != 0) terms_[m] = c;
}

Poly Poly::variable(const std::string &name)
{
    Poly p;
    p.set_term(Monomial::var(poly_var_id(name)), BigRat(1));
    return p;
}

Poly Poly::term(const Monomial &m, const BigRat &c)
{
    Poly p;
    p.set_term(m, c);
    return p;
}

int Poly::total_degree() const
{
    return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

int Poly::degree_in(int var_id) const
{
    int d = 0;
    for (const auto &[m, c] : terms_) d = std::max(d, m.exponent_of(var_id));
    return d;
}

Poly Poly::operator+(const Poly &o) const
{
    Poly r = *this;
    for (const auto &[m, c] : o.terms_) {
        auto it = r.terms_.find(m);
        if (it == r.terms_.end())
            r.terms_[m] = c;
        else {
            it->second += c;
            if (it->second == 0) r.terms_.erase(it);
        }
    }
    return r;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto &[m, c] : r.terms_) c = -c;
    return r;
}

Poly Poly::operator-(const Poly &o) const
{
    return *this + (-o);
}

Poly Poly::operator*(const Poly &o) const
{
    Poly r;
    for (const auto &[m1, c1] : terms_)
        for (const auto &[m2, c2] : o.terms_) {
            Monomial m = m1 * m2;
            auto it = r.terms_.find(m);
            if (it == r.terms_.end())
                r.terms_[m] = c1 * c2;
            else {
                it->second += c1 * c2;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

Poly Poly::pow(int e) const
{
    if (e < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r(1);
    Poly base = *this;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Poly Poly::substitute(const std::map<int, Poly> &images) const
{
    Poly r;
    for (const auto &[m, c] : terms_) {
        Poly t(c);
        Monomial rest;
        for (const auto &[v, e] : m.factors) {
            auto it = images.find(v);
            if (it == images.end())
                rest = rest * Monomial::var(v, e);
            else
                t *= it->second.pow(e);
        }
        r += t * Poly::term(rest, BigRat(1));
    }
    return r;
}

Poly Poly::reduce(const std::vector<Poly> &divisors) const
{
    Poly rem;
    Poly p = *this;
    while (!p.is_zero()) {
        const auto &lead = *p.terms_.begin();
        bool divided = false;
        for (const auto &d : divisors) {
            if (d.is_zero()) continue;
            const auto &dl = *d.terms().begin();
            if (!lead.first.divisible_by(dl.first)) continue;
            Monomial q = lead.first.divide_by(dl.first);
            BigRat f = lead.second / dl.second;
            p -= Poly::term(q, f) * d;
            divided = true;
            break;
        }
        if (!divided) {
            rem += Poly::term(lead.first, lead.second);
            p.terms_.erase(p.terms_.begin());
        }
    }
    return rem;
}

Poly Poly::strip_content() const
{
    if (is_zero()) return *this;
    // gcd of monomials: minimum exponent per variable
    std::map<int, int> mins;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        if (first) {
            for (const auto &[v, e] : m.factors) mins[v] = e;
            first = false;
        } else {
            for (auto it = mins.begin(); it != mins.end();) {
                int e = m.exponent_of(it->first);
                if (e == 0)
                    it = mins.erase(it);
                else {
                    it->second = std::min(it->second, e);
                    ++it;
                }
            }
        }
    }
    Monomial g;
    for (const auto &[v, e] : mins) g.factors.push_back({v, e});
    Poly r;
    for (const auto &[m, c] : terms_) r.terms_[m.divide_by(g)] = c;
    if (r.terms_.begin()->second < 0)
        for (auto &[m, c] : r.terms_) c = -c;
    return r;
}

std::string Poly::to_string() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto &[m, c] : terms_) {
        BigRat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (m.factors.empty())
            os << a;
        else {
            if (a != 1) os << a << "*";
            os << m.to_string();
        }
        first = false;
    }
    return os.str();
}

} // namespace burniat
