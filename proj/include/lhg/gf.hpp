#pragma once

#include <vector>

#include "lhg/hypergraph.hpp"

namespace lhg {

namespace detail {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

/// GF(p^e) for prime powers q <= 1024. Elements are encoded 0..q-1 as base-p
/// digit vectors (coefficients of the residue polynomial, low degree first).
/// The reducing polynomial is the lexicographically least monic irreducible
/// of degree e over Z_p, found by trial division, so the tables are
/// reproducible across runs.
class GF {
public:
    explicit GF(int q) : q_(q) {
        if (q < 2 || q > 1024) throw Error(Errc::unsupported, "field order " + std::to_string(q) + " outside 2..1024");
        p_ = smallest_prime_factor(q);
        e_ = 0;
        int t = q;
        while (t > 1) {
            if (t % p_ != 0) throw Error(Errc::unsupported, std::to_string(q) + " is not a prime power");
            t /= p_;
            ++e_;
        }
        if (e_ > 1) modulus_ = least_irreducible(p_, e_);
    }

    int q() const { return q_; }
    int p() const { return p_; }

    int add(int a, int b) const {
        if (e_ == 1) return (a + b) % p_;
        int out = 0, place = 1;
        for (int i = 0; i < e_; ++i) {
            out += ((a % p_ + b % p_) % p_) * place;
            a /= p_;
            b /= p_;
            place *= p_;
        }
        return out;
    }

    int mul(int a, int b) const {
        if (e_ == 1) return (a * b) % p_;
        std::vector<int> prod(2 * e_ - 1, 0);
        std::vector<int> da = digits(a), db = digits(b);
        for (int i = 0; i < e_; ++i)
            for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        reduce(prod);
        int out = 0, place = 1;
        for (int i = 0; i < e_; ++i) {
            out += prod[i] * place;
            place *= p_;
        }
        return out;
    }

    static bool is_prime_power(int q) {
        if (q < 2) return false;
        int p = smallest_prime_factor(q);
        while (q > 1) {
            if (q % p != 0) return false;
            q /= p;
        }
        return true;
    }

private:
    static int smallest_prime_factor(int q) {
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) return d;
        return q;
    }

    std::vector<int> digits(int a) const {
        std::vector<int> out(e_, 0);
        for (int i = 0; i < e_; ++i) {
            out[i] = a % p_;
            a /= p_;
        }
        return out;
    }

    // in-place reduction mod the irreducible modulus (monic, degree e_)
    void reduce(std::vector<int>& poly) const {
        for (int d = static_cast<int>(poly.size()) - 1; d >= e_; --d) {
            int c = poly[d];
            if (c == 0) continue;
            poly[d] = 0;
            for (int i = 0; i < e_; ++i) poly[d - e_ + i] = ((poly[d - e_ + i] - c * modulus_[i]) % p_ + p_) % p_;
        }
        poly.resize(e_);
    }

    // polynomial arithmetic over Z_p on coefficient vectors (low first)
    static std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
        while (a.size() >= b.size()) {
            int shift = static_cast<int>(a.size() - b.size());
            int lead_b = b.back();
            int inv = 1;
            for (int x = 1; x < p; ++x)
                if (lead_b * x % p == 1) inv = x;
            int c = a.back() * inv % p;
            for (std::size_t i = 0; i < b.size(); ++i)
                a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
            while (!a.empty() && a.back() == 0) a.pop_back();
            if (a.empty()) break;
        }
        return a;
    }

    static bool divisible(const std::vector<int>& a, const std::vector<int>& b, int p) {
        return poly_mod(a, b, p).empty();
    }

    // lexicographically least (by low-order coefficients) monic irreducible
    static std::vector<int> least_irreducible(int p, int e) {
        // enumerate lower coefficient vectors in counting order
        long long total = 1;
        for (int i = 0; i < e; ++i) total *= p;
        for (long long code = 0; code < total; ++code) {
            std::vector<int> poly(e + 1, 0);
            long long c = code;
            for (int i = 0; i < e; ++i) {
                poly[i] = static_cast<int>(c % p);
                c /= p;
            }
            poly[e] = 1;
            if (poly[0] == 0) continue;  // divisible by x
            bool irr = true;
            // trial division by all monic polynomials of degree 1..e/2
            for (int d = 1; irr && 2 * d <= e; ++d) {
                long long count = 1;
                for (int i = 0; i < d; ++i) count *= p;
                for (long long dc = 0; irr && dc < count; ++dc) {
                    std::vector<int> div(d + 1, 0);
                    long long t = dc;
                    for (int i = 0; i < d; ++i) {
                        div[i] = static_cast<int>(t % p);
                        t /= p;
                    }
                    div[d] = 1;
                    if (divisible(poly, div, p)) irr = false;
                }
            }
            if (irr) return poly;
        }
        throw Error(Errc::unsupported, "no irreducible polynomial found");  // unreachable
    }

    int q_, p_, e_ = 1;
    std::vector<int> modulus_;
};

}  // namespace lhg
