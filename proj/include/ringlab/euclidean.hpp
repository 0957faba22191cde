#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ringlab {

using BigInt = boost::multiprecision::cpp_int;

// The two Euclidean base domains: arbitrary-precision integers and univariate
// polynomials over a prime field. Both expose the same operation set so the
// fraction and matrix code can be written once.

struct IntegerDomain {
    using Elem = BigInt;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_int(long long v) const { return v; }
    bool is_zero(const Elem& a) const { return a == 0; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }

    // Euclidean division with 0 <= remainder < |b|.
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
        if (b == 0) throw std::domain_error("IntegerDomain: division by zero");
        Elem q = a / b, r = a % b;
        if (r < 0) {
            r += boost::multiprecision::abs(b);
            q = (a - r) / b;
        }
        return {q, r};
    }
    bool divides(const Elem& d, const Elem& a) const {
        if (d == 0) return a == 0;
        return a % d == 0;
    }
    Elem exact_div(const Elem& a, const Elem& d) const {
        if (!divides(d, a)) throw std::domain_error("IntegerDomain: inexact division");
        return a / d;
    }
    Elem gcd(Elem a, Elem b) const {
        a = boost::multiprecision::abs(a);
        b = boost::multiprecision::abs(b);
        while (b != 0) {
            Elem t = a % b;
            a = b;
            b = t;
        }
        return a;
    }
    Elem lcm(const Elem& a, const Elem& b) const {
        if (a == 0 || b == 0) return 0;
        return boost::multiprecision::abs(a / gcd(a, b) * b);
    }
    bool is_unit(const Elem& a) const { return a == 1 || a == -1; }
    Elem unit_inverse(const Elem& u) const {
        if (!is_unit(u)) throw std::domain_error("IntegerDomain: not a unit");
        return u;
    }
    // Canonical associate (non-negative); if unit_out is given it receives u
    // with canonical(a) = u * a.
    Elem canonical(const Elem& a, Elem* unit_out = nullptr) const {
        if (a < 0) {
            if (unit_out) *unit_out = -1;
            return -a;
        }
        if (unit_out) *unit_out = 1;
        return a;
    }
    std::uint64_t size(const Elem& a) const {
        return a == 0 ? 0 : boost::multiprecision::msb(boost::multiprecision::abs(a)) + 1;
    }
    std::string str(const Elem& a) const { return a.str(); }

    Elem random_elem(std::mt19937_64& rng, long bound) const {
        std::uniform_int_distribution<long> d(-bound, bound);
        return d(rng);
    }
    Elem random_nonzero(std::mt19937_64& rng, long bound) const {
        std::uniform_int_distribution<long> d(1, bound);
        long v = d(rng);
        return rng() & 1 ? Elem(v) : Elem(-v);
    }
};

// Dense coefficient vector, low degree first, trimmed of leading zeros.
struct PolyElem {
    std::vector<int> c;
    bool operator==(const PolyElem& o) const { return c == o.c; }
};

struct PolyDomain {
    int p = 2;

    using Elem = PolyElem;

    explicit PolyDomain(int prime = 2) : p(prime) {}

    Elem zero() const { return {}; }
    Elem one() const { return {{1}}; }
    Elem from_int(long long v) const {
        long long m = ((v % p) + p) % p;
        return m == 0 ? Elem{} : Elem{{static_cast<int>(m)}};
    }
    Elem x_power(int k) const {
        Elem e;
        e.c.assign(static_cast<std::size_t>(k) + 1, 0);
        e.c.back() = 1;
        return e;
    }
    bool is_zero(const Elem& a) const { return a.c.empty(); }
    bool eq(const Elem& a, const Elem& b) const { return a.c == b.c; }
    int degree(const Elem& a) const { return static_cast<int>(a.c.size()) - 1; }  // -1 for zero

    Elem trim(Elem a) const {
        while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
        return a;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r;
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            int v = 0;
            if (i < a.c.size()) v += a.c[i];
            if (i < b.c.size()) v += b.c[i];
            r.c[i] = v % p;
        }
        return trim(std::move(r));
    }
    Elem neg(const Elem& a) const {
        Elem r = a;
        for (auto& v : r.c) v = (p - v) % p;
        return trim(std::move(r));
    }
    Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
    Elem mul(const Elem& a, const Elem& b) const {
        if (a.c.empty() || b.c.empty()) return {};
        Elem r;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (std::size_t i = 0; i < a.c.size(); ++i)
            for (std::size_t j = 0; j < b.c.size(); ++j)
                r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % p;
        return trim(std::move(r));
    }
    int inv_mod(int a) const {
        a = ((a % p) + p) % p;
        for (int i = 1; i < p; ++i)
            if ((a * i) % p == 1) return i;
        throw std::domain_error("PolyDomain: no inverse mod p");
    }
    std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
        if (b.c.empty()) throw std::domain_error("PolyDomain: division by zero");
        Elem r = a, q;
        q.c.assign(a.c.size() > b.c.size() ? a.c.size() - b.c.size() + 1 : 1, 0);
        int lead_inv = inv_mod(b.c.back());
        while (!r.c.empty() && r.c.size() >= b.c.size()) {
            int coef = (r.c.back() * lead_inv) % p;
            std::size_t shift = r.c.size() - b.c.size();
            q.c[shift] = coef;
            for (std::size_t i = 0; i < b.c.size(); ++i)
                r.c[i + shift] = ((r.c[i + shift] - coef * b.c[i]) % p + p) % p;
            r = trim(std::move(r));
        }
        return {trim(std::move(q)), r};
    }
    bool divides(const Elem& d, const Elem& a) const {
        if (d.c.empty()) return a.c.empty();
        return divmod(a, d).second.c.empty();
    }
    Elem exact_div(const Elem& a, const Elem& d) const {
        auto [q, r] = divmod(a, d);
        if (!r.c.empty()) throw std::domain_error("PolyDomain: inexact division");
        return q;
    }
    Elem gcd(Elem a, Elem b) const {
        while (!b.c.empty()) {
            Elem t = divmod(a, b).second;
            a = std::move(b);
            b = std::move(t);
        }
        return canonical(a);
    }
    Elem lcm(const Elem& a, const Elem& b) const {
        if (a.c.empty() || b.c.empty()) return {};
        return canonical(mul(exact_div(a, gcd(a, b)), b));
    }
    bool is_unit(const Elem& a) const { return a.c.size() == 1; }
    Elem unit_inverse(const Elem& u) const {
        if (!is_unit(u)) throw std::domain_error("PolyDomain: not a unit");
        return Elem{{inv_mod(u.c[0])}};
    }
    Elem canonical(const Elem& a, Elem* unit_out = nullptr) const {
        if (a.c.empty()) {
            if (unit_out) *unit_out = one();
            return a;
        }
        int u = inv_mod(a.c.back());
        if (unit_out) *unit_out = Elem{{u}};
        Elem r = a;
        for (auto& v : r.c) v = (v * u) % p;
        return r;
    }
    std::uint64_t size(const Elem& a) const {
        return a.c.empty() ? 0 : a.c.size();  // degree + 1
    }
    std::string str(const Elem& a) const {
        if (a.c.empty()) return "0";
        std::string s;
        for (std::size_t i = a.c.size(); i-- > 0;) {
            if (a.c[i] == 0) continue;
            if (!s.empty()) s += "+";
            if (i == 0)
                s += std::to_string(a.c[i]);
            else {
                if (a.c[i] != 1) s += std::to_string(a.c[i]) + "*";
                s += i == 1 ? "x" : "x^" + std::to_string(i);
            }
        }
        return s;
    }

    Elem random_elem(std::mt19937_64& rng, long max_degree) const {
        std::uniform_int_distribution<long> dd(-1, max_degree);
        long deg = dd(rng);
        if (deg < 0) return {};
        Elem e;
        e.c.resize(static_cast<std::size_t>(deg) + 1);
        std::uniform_int_distribution<int> dc(0, p - 1);
        for (auto& v : e.c) v = dc(rng);
        e.c.back() = std::uniform_int_distribution<int>(1, p - 1)(rng);
        return e;
    }
    Elem random_nonzero(std::mt19937_64& rng, long max_degree) const {
        Elem e = random_elem(rng, max_degree);
        return e.c.empty() ? one() : e;
    }
};

}  // namespace ringlab
