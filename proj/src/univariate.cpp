/*
   Copyright 2026 The zdscheme Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Univariate helpers used to certify residue fields.

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "zdscheme/groebner.hpp"

namespace zds::univariate {

UPoly trim(UPoly f) {
    while (!f.empty() && is_zero(f.back())) f.pop_back();
    return f;
}

int degree(const UPoly& f) { return static_cast<int>(trim(f).size()) - 1; }

UPoly derivative(const UPoly& f) {
    UPoly d;
    for (size_t k = 1; k < f.size(); ++k) d.push_back(f[k] * static_cast<long>(k));
    return trim(d);
}

UPoly remainder(UPoly f, const UPoly& g0) {
    const UPoly g = trim(g0);
    if (g.empty()) throw std::invalid_argument("division by the zero polynomial");
    f = trim(f);
    while (f.size() >= g.size()) {
        const Rational c = f.back() / g.back();
        const size_t shift = f.size() - g.size();
        for (size_t k = 0; k < g.size(); ++k) f[shift + k] -= c * g[k];
        f = trim(f);
    }
    return f;
}

UPoly gcd(UPoly f, UPoly g) {
    f = trim(f);
    g = trim(g);
    while (!g.empty()) {
        UPoly r = remainder(f, g);
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.empty()) {
        const Rational lc = f.back();
        for (auto& c : f) c /= lc;
    }
    return f;
}

namespace {

// Primitive integer multiple of f.
std::vector<Integer> integer_form(const UPoly& f) {
    const Integer l = common_denominator(f);
    std::vector<Integer> out;
    Integer g = 0;
    for (const auto& c : f) {
        out.push_back(c.get_num() * (l / c.get_den()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
    }
    if (g != 0)
        for (auto& c : out) c /= g;
    return out;
}

constexpr unsigned long kTrialLimit = 1000000;

// Positive divisors of |a|, or nullopt if |a| cannot be factored by trial
// division up to kTrialLimit.
std::optional<std::vector<Integer>> divisors(Integer a) {
    a = abs(a);
    if (a > Integer(kTrialLimit) * Integer(kTrialLimit)) return std::nullopt;
    std::vector<std::pair<Integer, int>> factors;
    for (unsigned long p = 2; Integer(p) * Integer(p) <= a; ++p) {
        int e = 0;
        while (a % p == 0) {
            a /= p;
            ++e;
        }
        if (e) factors.emplace_back(Integer(p), e);
    }
    if (a > 1) factors.emplace_back(a, 1);
    std::vector<Integer> out{1};
    for (const auto& [p, e] : factors) {
        const size_t n = out.size();
        Integer pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < n; ++i) out.push_back(out[i] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Rational evaluate(const UPoly& f, const Rational& x) {
    Rational v = 0;
    for (size_t k = f.size(); k-- > 0;) v = v * x + f[k];
    return v;
}

// ----- arithmetic in F_p[t], coefficients low to high, no trailing zeros

using Mod = std::vector<int64_t>;

void mtrim(Mod& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int64_t inv_mod(int64_t a, int64_t p) {
    int64_t r = 1, e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

Mod mrem(Mod f, const Mod& g, int64_t p) {
    const int64_t li = inv_mod(g.back(), p);
    while (f.size() >= g.size()) {
        const int64_t c = f.back() * li % p;
        const size_t s = f.size() - g.size();
        for (size_t k = 0; k < g.size(); ++k) f[s + k] = ((f[s + k] - c * g[k]) % p + p) % p;
        mtrim(f);
    }
    return f;
}

Mod mquot(Mod f, const Mod& g, int64_t p) {
    const int64_t li = inv_mod(g.back(), p);
    Mod q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0);
    while (f.size() >= g.size()) {
        const int64_t c = f.back() * li % p;
        const size_t s = f.size() - g.size();
        q[s] = c;
        for (size_t k = 0; k < g.size(); ++k) f[s + k] = ((f[s + k] - c * g[k]) % p + p) % p;
        mtrim(f);
    }
    return q;
}

Mod mmul(const Mod& a, const Mod& b, const Mod& m, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Mod r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    mtrim(r);
    return mrem(r, m, p);
}

Mod mgcd(Mod a, Mod b, int64_t p) {
    while (!b.empty()) {
        Mod r = mrem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Degrees of the irreducible factors of a squarefree f over F_p.
std::vector<int> factor_degrees(Mod f, int64_t p) {
    std::vector<int> out;
    Mod h{0, 1};
    h = mrem(h, f, p);
    for (int d = 1; 2 * d <= static_cast<int>(f.size()) - 1; ++d) {
        // h <- h^p mod f
        Mod base = h, acc{1};
        for (int64_t e = p; e; e >>= 1) {
            if (e & 1) acc = mmul(acc, base, f, p);
            base = mmul(base, base, f, p);
        }
        h = acc;
        Mod hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] - 1 + p) % p;
        mtrim(hx);
        const Mod g = mgcd(f, hx, p);
        const int dg = static_cast<int>(g.size()) - 1;
        if (dg > 0) {
            for (int k = 0; k < dg / d; ++k) out.push_back(d);
            f = mquot(f, g, p);
            h = mrem(h, f, p);
        }
    }
    if (f.size() > 1) out.push_back(static_cast<int>(f.size()) - 1);
    return out;
}

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t k = 2; k * k <= n; ++k)
        if (n % k == 0) return false;
    return true;
}

UPoly poly_mul(const UPoly& a, const UPoly& b) {
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Lagrange interpolation through (xs[i], ys[i]).
UPoly interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
    UPoly g(xs.size(), Rational(0));
    for (size_t i = 0; i < xs.size(); ++i) {
        UPoly basis{Rational(1)};
        Rational denom = 1;
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = poly_mul(basis, UPoly{Rational(-xs[j]), Rational(1)});
            denom *= Rational(xs[i] - xs[j]);
        }
        const Rational c = Rational(ys[i]) / denom;
        for (size_t k = 0; k < basis.size(); ++k) g[k] += c * basis[k];
    }
    return trim(g);
}

constexpr unsigned long kKroneckerLimit = 2000000;

// Kronecker's method: a degree-k integer factor g of f takes values g(a)
// dividing f(a). Returns true (factor found), false (none exists), or
// nullopt when the search would exceed kKroneckerLimit candidates.
std::optional<bool> kronecker_has_factor(const UPoly& f, const std::vector<Integer>& z, int k) {
    // sample points with few divisors first
    std::vector<std::vector<Integer>> divs;
    std::vector<std::pair<size_t, long>> ranked;
    std::vector<std::vector<Integer>> cand_divs;
    for (long a = -24; a <= 24; ++a) {
        Integer v = 0;
        for (size_t c = z.size(); c-- > 0;) v = v * a + z[c];
        if (v == 0) return true;  // rational root
        auto d = divisors(v);
        if (!d) continue;
        ranked.emplace_back(d->size(), a);
        cand_divs.push_back(std::move(*d));
    }
    if (ranked.size() < static_cast<size_t>(k) + 1) return std::nullopt;
    std::vector<size_t> order(ranked.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return ranked[a].first < ranked[b].first; });
    std::vector<Integer> xs;
    unsigned long total = 1;
    for (int i = 0; i <= k; ++i) {
        const size_t o = order[static_cast<size_t>(i)];
        xs.emplace_back(ranked[o].second);
        divs.push_back(cand_divs[o]);
        total *= static_cast<unsigned long>(divs.back().size()) * (i == 0 ? 1 : 2);
        if (total > kKroneckerLimit) return std::nullopt;
    }
    // g and -g give the same factor, so the first value stays positive
    std::vector<size_t> idx(xs.size(), 0);
    std::vector<int> sign(xs.size(), 1);
    std::vector<Integer> ys(xs.size());
    for (;;) {
        for (size_t i = 0; i < xs.size(); ++i) ys[i] = sign[i] * divs[i][idx[i]];
        const UPoly g = interpolate(xs, ys);
        if (degree(g) == k) {
            bool integral = true;
            for (const auto& c : g) integral = integral && c.get_den() == 1;
            if (integral && remainder(f, g).empty()) return true;
        }
        size_t i = 0;
        for (; i < xs.size(); ++i) {
            if (i > 0 && sign[i] == 1) {
                sign[i] = -1;
                break;
            }
            sign[i] = 1;
            if (++idx[i] < divs[i].size()) break;
            idx[i] = 0;
        }
        if (i == xs.size()) return false;
    }
}

}  // namespace

std::optional<std::vector<Rational>> rational_roots(const UPoly& f0) {
    UPoly f = trim(f0);
    std::vector<Rational> roots;
    if (f.size() <= 1) return roots;
    size_t low = 0;
    while (is_zero(f[low])) ++low;
    if (low > 0) {
        roots.push_back(0);
        f.erase(f.begin(), f.begin() + static_cast<long>(low));
    }
    if (f.size() <= 1) return roots;
    const auto z = integer_form(f);
    const auto ps = divisors(z.front());
    const auto qs = divisors(z.back());
    if (!ps || !qs) return std::nullopt;
    std::set<Rational> found;
    for (const auto& p : *ps)
        for (const auto& q : *qs)
            for (int s : {1, -1}) {
                Rational x(Integer(s * p), q);
                x.canonicalize();
                if (is_zero(evaluate(f, x))) found.insert(x);
            }
    roots.insert(roots.end(), found.begin(), found.end());
    return roots;
}

Irreducibility irreducibility(const UPoly& f0) {
    const UPoly f = trim(f0);
    const int n = static_cast<int>(f.size()) - 1;
    if (n <= 0) return Irreducibility::Reducible;
    if (n == 1) return Irreducibility::Irreducible;
    const auto roots = rational_roots(f);
    if (roots && !roots->empty()) return Irreducibility::Reducible;
    if (roots && n <= 3) return Irreducibility::Irreducible;

    // A factor of degree k over Q gives a subset of the factor degrees mod
    // p summing to k, for every good prime p.
    const auto z = integer_form(f);
    std::vector<bool> possible(static_cast<size_t>(n), true);
    possible[0] = false;
    for (int64_t p = 3; p < 3000; p += 2) {
        if (!is_prime(p)) continue;
        if (z.back() % p == 0) continue;
        Mod fp;
        for (const auto& c : z) {
            Integer r = c % p;
            if (r < 0) r += p;
            fp.push_back(r.get_si());
        }
        mtrim(fp);
        Mod d;
        for (size_t k = 1; k < fp.size(); ++k) d.push_back(fp[k] * static_cast<int64_t>(k) % p);
        mtrim(d);
        if (mgcd(fp, d, p).size() > 1) continue;
        std::vector<bool> sums(static_cast<size_t>(n) + 1, false);
        sums[0] = true;
        for (int deg : factor_degrees(fp, p))
            for (int s = n; s >= deg; --s)
                if (sums[static_cast<size_t>(s - deg)]) sums[static_cast<size_t>(s)] = true;
        bool any = false;
        for (int k = 1; k < n; ++k) {
            possible[static_cast<size_t>(k)] = possible[static_cast<size_t>(k)] && sums[static_cast<size_t>(k)];
            any = any || possible[static_cast<size_t>(k)];
        }
        if (!any) return Irreducibility::Irreducible;
    }
    // the sieve cannot rule out factors when f splits modulo every prime
    // (for example Q(sqrt 2, sqrt 3)); search for them directly
    for (int k = 1; 2 * k <= n; ++k) {
        if (!possible[static_cast<size_t>(k)] && !possible[static_cast<size_t>(n - k)]) continue;
        const auto found = kronecker_has_factor(f, z, k);
        if (!found) return Irreducibility::Unknown;
        if (*found) return Irreducibility::Reducible;
    }
    return Irreducibility::Irreducible;
}

}  // namespace zds::univariate
