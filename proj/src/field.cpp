#include "sqfree/field.hpp"

#include <algorithm>
#include <numeric>

namespace sqfree {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Factors q as p^e with p prime, or returns false.
bool prime_power(unsigned q, unsigned& p, unsigned& e) {
    for (unsigned cand = 2; cand <= q; ++cand) {
        if (q % cand != 0) continue;
        if (!is_prime(cand)) return false;  // smallest divisor is always prime
        unsigned n = q, cnt = 0;
        while (n % cand == 0) n /= cand, ++cnt;
        if (n != 1) return false;
        p = cand;
        e = cnt;
        return true;
    }
    return false;
}

// Polynomials over F_p as coefficient vectors, lowest degree first, with no
// trailing zeros (deg(0) treated as -1 by convention of size 0).

using Poly = std::vector<unsigned>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo monic g.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() > dg) {
        unsigned lead = f.back();
        std::size_t shift = f.size() - 1 - dg;
        if (lead != 0) {
            for (std::size_t i = 0; i <= dg; ++i) {
                unsigned sub = (lead * g[i]) % p;
                f[shift + i] = (f[shift + i] + p - sub % p) % p;
            }
        }
        trim(f);
    }
    return f;
}

// f reducible over F_p iff it has a monic factor of degree in [1, deg(f)/2].
bool poly_irreducible(const Poly& f, unsigned p) {
    const std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // Odometer over monic divisor candidates of each degree.
    for (std::size_t d = 1; 2 * d <= deg; ++d) {
        Poly g(d + 1, 0);
        g[d] = 1;
        while (true) {
            if (poly_mod(f, g, p).empty()) return false;
            // advance coefficients below the leading 1
            std::size_t i = 0;
            while (i < d && ++g[i] == p) g[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

}  // namespace

FieldPtr Field::make(unsigned q) {
    if (q < 2 || q > (1u << 16)) throw Unsupported("field order out of supported range [2, 2^16]");
    unsigned p = 0, e = 0;
    if (!prime_power(q, p, e)) throw NotAPrimePower("field order is not a prime power");

    auto field = std::shared_ptr<Field>(new Field());
    Field& f = *field;
    f.p_ = p;
    f.e_ = e;
    f.q_ = q;

    if (e > 1) {
        // Lexicographically smallest monic irreducible of degree e, comparing
        // coefficient tuples low-degree-first (so c0 is most significant and
        // the ascending enumeration varies the highest-degree coefficient
        // fastest).
        Poly cand(e + 1, 0);
        cand[e] = 1;
        while (true) {
            if (poly_irreducible(cand, p)) break;
            std::size_t i = e;
            while (i > 0) {
                --i;
                if (++cand[i] < p) break;
                cand[i] = 0;
                if (i == 0) throw InternalError("no irreducible polynomial found");
            }
        }
        f.modulus_.assign(cand.begin(), cand.end());
    }

    // Slow multiplication used only while bootstrapping the tables.
    auto unpack = [&](unsigned v) {
        Poly digits(e, 0);
        for (unsigned i = 0; i < e; ++i) digits[i] = v % p, v /= p;
        return digits;
    };
    auto pack = [&](const Poly& digits) {
        unsigned v = 0;
        for (unsigned i = e; i-- > 0;) v = v * p + (i < digits.size() ? digits[i] : 0);
        return v;
    };
    auto slow_mul = [&](unsigned a, unsigned b) -> unsigned {
        if (e == 1) return static_cast<unsigned>((static_cast<std::uint64_t>(a) * b) % p);
        Poly fa = unpack(a), fb = unpack(b);
        Poly prod(2 * e - 1, 0);
        for (unsigned i = 0; i < e; ++i)
            for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p;
        Poly mod(f.modulus_.begin(), f.modulus_.end());
        return pack(poly_mod(std::move(prod), mod, p));
    };
    auto slow_pow = [&](unsigned a, unsigned n) {
        unsigned r = 1;
        while (n) {
            if (n & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            n >>= 1;
        }
        return r;
    };

    // Smallest-encoded primitive element: v generates iff v^((q-1)/l) != 1
    // for every prime l dividing q-1.
    std::vector<unsigned> prime_factors;
    {
        unsigned n = q - 1;
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0) {
                prime_factors.push_back(d);
                while (n % d == 0) n /= d;
            }
        if (n > 1) prime_factors.push_back(n);
    }
    unsigned xi = 0;
    for (unsigned v = 1; v < q; ++v) {
        bool primitive = true;
        for (unsigned l : prime_factors)
            if (slow_pow(v, (q - 1) / l) == 1) {
                primitive = false;
                break;
            }
        if (primitive) {
            xi = v;
            break;
        }
    }
    if (xi == 0) throw InternalError("no primitive element found");
    f.xi_ = static_cast<Elem>(xi);

    // Antilog table doubled so mul can add logs without reducing mod q-1.
    f.exp_.resize(2 * (q - 1));
    f.log_.assign(q, 0);
    unsigned cur = 1;
    for (unsigned i = 0; i < q - 1; ++i) {
        f.exp_[i] = static_cast<Elem>(cur);
        f.log_[cur] = static_cast<Elem>(i);
        cur = slow_mul(cur, xi);
    }
    if (cur != 1) throw InternalError("designated element is not primitive");
    for (unsigned i = 0; i < q - 1; ++i) f.exp_[q - 1 + i] = f.exp_[i];

    return field;
}

Elem Field::add_digits(unsigned a, unsigned b) const {
    unsigned out = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        out += ((a % p_) + (b % p_)) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::neg_digits(unsigned a) const {
    unsigned out = 0, mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        out += (p_ - (a % p_)) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return static_cast<Elem>(out);
}

Elem Field::pow(unsigned a, long long n) const {
    if (a == 0) {
        if (n > 0) return 0;
        if (n == 0) return 1;
        throw DivisionByZero("negative power of zero");
    }
    const long long m = q_ - 1;
    long long r = n % m;
    if (r < 0) r += m;
    return exp_[(static_cast<unsigned long long>(log_[a]) * static_cast<unsigned long long>(r)) %
                static_cast<unsigned long long>(m)];
}

unsigned Field::order(unsigned a) const {
    if (a == 0) throw DivisionByZero("order of zero");
    // ord(xi^i) = (q-1)/gcd(i, q-1)
    return (q_ - 1) / std::gcd<unsigned>(log_[a], q_ - 1);
}

}  // namespace sqfree
