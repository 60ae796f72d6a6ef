#pragma once

#include <string>
#include <vector>

#include "skewsieve/errors.hpp"
#include "skewsieve/numeric.hpp"

namespace skewsieve {

// Dense polynomial over arbitrary-precision integers, index = exponent.
// Trailing zero coefficients are trimmed; degree() of the zero polynomial
// is the sentinel -1.
class IntPolynomial {
  public:
    IntPolynomial() = default;

    explicit IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static IntPolynomial constant(Int c) { return IntPolynomial({std::move(c)}); }

    static IntPolynomial monomial(Int c, int e) {
        std::vector<Int> v(e + 1);
        v[e] = std::move(c);
        return IntPolynomial(std::move(v));
    }

    const std::vector<Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Int& coeff(int e) const {
        static const Int zero = 0;
        return (e >= 0 && e <= degree()) ? coeffs_[e] : zero;
    }

    Int operator()(const Int& x) const {
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Int eval_at_one() const {
        Int acc = 0;
        for (const Int& c : coeffs_) acc += c;
        return acc;
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    IntPolynomial& operator-=(const IntPolynomial& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Int> prod(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return IntPolynomial(std::move(prod));
    }

    friend IntPolynomial operator*(const Int& s, const IntPolynomial& p) {
        std::vector<Int> v = p.coeffs_;
        for (Int& c : v) c *= s;
        return IntPolynomial(std::move(v));
    }

    // Multiply by q^k; negative k requires the k lowest coefficients to vanish.
    IntPolynomial shifted(int k) const {
        if (is_zero()) return {};
        if (k >= 0) {
            std::vector<Int> v(coeffs_.size() + k);
            std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
            return IntPolynomial(std::move(v));
        }
        for (int i = 0; i < -k; ++i)
            if (coeff(i) != 0) throw Error("shifted: negative shift loses terms");
        return IntPolynomial(std::vector<Int>(coeffs_.begin() - k, coeffs_.end()));
    }

    // Quotient by a divisor that divides exactly; throws otherwise.
    IntPolynomial divide_exact(const IntPolynomial& div) const {
        if (div.is_zero()) throw Error("divide_exact: division by zero");
        if (is_zero()) return {};
        if (degree() < div.degree()) throw Error("divide_exact: nonzero remainder");
        std::vector<Int> rem = coeffs_;
        std::vector<Int> quot(degree() - div.degree() + 1);
        const Int& lead = div.coeffs_.back();
        for (int i = static_cast<int>(quot.size()) - 1; i >= 0; --i) {
            Int& top = rem[i + div.degree()];
            if (top % lead != 0) throw Error("divide_exact: nonzero remainder");
            Int q = top / lead;
            if (q != 0)
                for (int j = 0; j <= div.degree(); ++j) rem[i + j] -= q * div.coeffs_[j];
            quot[i] = std::move(q);
        }
        for (const Int& c : rem)
            if (c != 0) throw Error("divide_exact: nonzero remainder");
        return IntPolynomial(std::move(quot));
    }

    // Remainder modulo a monic divisor.
    IntPolynomial mod_monic(const IntPolynomial& div) const {
        std::vector<Int> rem = coeffs_;
        while (static_cast<int>(rem.size()) - 1 >= div.degree()) {
            int top = static_cast<int>(rem.size()) - 1;
            Int q = rem[top];
            if (q != 0)
                for (int j = 0; j <= div.degree(); ++j)
                    rem[top - div.degree() + j] -= q * div.coeffs_[j];
            rem.pop_back();
        }
        return IntPolynomial(std::move(rem));
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (int e = degree(); e >= 0; --e) {
            if (coeffs_[e] == 0) continue;
            if (!s.empty()) s += coeffs_[e] > 0 ? " + " : " - ";
            else if (coeffs_[e] < 0) s += "-";
            Int a = abs(coeffs_[e]);
            if (a != 1 || e == 0) s += a.str();
            if (e >= 1) s += e == 1 ? "q" : "q^" + std::to_string(e);
        }
        return s;
    }

    bool operator==(const IntPolynomial&) const = default;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

// q-integer [k]_q = 1 + q + ... + q^(k-1)
inline IntPolynomial q_int(int k) {
    return IntPolynomial(std::vector<Int>(k, 1));
}

inline IntPolynomial q_factorial(int n) {
    IntPolynomial r = IntPolynomial::constant(1);
    for (int k = 2; k <= n; ++k) r = r * q_int(k);
    return r;
}

inline IntPolynomial q_binomial(int n, int k) {
    if (k < 0 || k > n) return {};
    return q_factorial(n).divide_exact(q_factorial(k)).divide_exact(q_factorial(n - k));
}

inline IntPolynomial q_multinomial(const std::vector<int>& parts) {
    int total = 0;
    for (int p : parts) total += p;
    IntPolynomial r = q_factorial(total);
    for (int p : parts) r = r.divide_exact(q_factorial(p));
    return r;
}

}  // namespace skewsieve
