#pragma once

#include <map>
#include <mutex>
#include <numeric>

#include "skewsieve/errors.hpp"
#include "skewsieve/polynomial.hpp"

namespace skewsieve {

// m-th cyclotomic polynomial, computed by exact division of x^m - 1 by the
// product of the lower-order cyclotomic polynomials.  Memoized; safe for
// concurrent use.
inline IntPolynomial cyclotomic_polynomial(long m) {
    static std::map<long, IntPolynomial> table;
    static std::mutex mutex;
    if (m < 1) throw Error("cyclotomic_polynomial: order must be positive");
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = table.find(m);
        if (it != table.end()) return it->second;
    }
    IntPolynomial result;
    if (m == 1) {
        result = IntPolynomial({-1, 1});  // x - 1
    } else {
        IntPolynomial xm1 = IntPolynomial::monomial(1, m) - IntPolynomial::constant(1);
        IntPolynomial lower = IntPolynomial::constant(1);
        for (long d : divisors(m))
            if (d < m) lower = lower * cyclotomic_polynomial(d);
        result = xm1.divide_exact(lower);
    }
    std::lock_guard<std::mutex> lock(mutex);
    table.emplace(m, result);
    return result;
}

// Residue class of a value in Z[xi] modulo the m-th cyclotomic polynomial.
// The value is an integer exactly when the residue is constant.
struct CyclotomicValue {
    long order = 1;
    IntPolynomial residue;

    bool is_integer() const { return residue.degree() <= 0; }

    Int as_integer() const {
        if (!is_integer())
            throw NonIntegerValue("evaluation at root of unity is not an integer: (" +
                                  residue.to_string() + ") mod Phi_" + std::to_string(order));
        return residue.coeff(0);
    }
};

// Class of p(xi^d) mod Phi_m, where xi is a primitive n-th root of unity.
// xi^d is a primitive m-th root for m = n/gcd(n,d), namely zeta^e with
// e = d/gcd(n,d) coprime to m; exponents fold to e*k mod m.
inline CyclotomicValue reduce_at_root(const IntPolynomial& p, long n, long d) {
    if (n < 1) throw Error("reduce_at_root: order must be positive");
    long dd = ((d % n) + n) % n;
    if (dd == 0) return {1, IntPolynomial::constant(p.eval_at_one())};
    long g = std::gcd(n, dd);
    long m = n / g;
    long e = dd / g;
    std::vector<Int> folded(m);
    for (int k = 0; k <= p.degree(); ++k)
        folded[static_cast<std::size_t>((static_cast<long>(k) * e) % m)] += p.coeff(k);
    IntPolynomial residue = IntPolynomial(std::move(folded)).mod_monic(cyclotomic_polynomial(m));
    return {m, std::move(residue)};
}

// Exact value of p(xi^d); throws NonIntegerValue when the result is not an
// integer (legitimate for arbitrary polynomials, a bug for fake degrees).
inline Int eval_at_root(const IntPolynomial& p, long n, long d) {
    return reduce_at_root(p, n, d).as_integer();
}

}  // namespace skewsieve
