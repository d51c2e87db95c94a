#include <algorithm>
#include <utility>
#include <vector>

#include "ratdec/errors.hpp"
#include "ratdec/factor.hpp"

namespace ratdec {

namespace {

// ---------------------------------------------------------------------------
// Dense arithmetic over F_p (p small enough that p^2 fits in long long).

using ZpPoly = std::vector<long>;  // ascending coefficients in [0, p)

long zp_inv(long a, long p) {
    long t = 0, new_t = 1, r = p, new_r = ((a % p) + p) % p;
    while (new_r != 0) {
        long q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    return ((t % p) + p) % p;
}

void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zp_deg(const ZpPoly& a) {
    return static_cast<int>(a.size()) - 1;
}

ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<long>((r[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    zp_trim(r);
    return r;
}

ZpPoly zp_scale(ZpPoly a, long c, long p) {
    for (auto& x : a) x = static_cast<long>((static_cast<long long>(x) * c) % p);
    zp_trim(a);
    return a;
}

std::pair<ZpPoly, ZpPoly> zp_divmod(ZpPoly a, const ZpPoly& b, long p) {
    long inv = zp_inv(b.back(), p);
    ZpPoly q(a.size() > b.size() ? a.size() - b.size() + 1 : 1, 0);
    while (zp_deg(a) >= zp_deg(b)) {
        long c = static_cast<long>((static_cast<long long>(a.back()) * inv) % p);
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<long>(
                (((a[shift + i] - static_cast<long long>(c) * b[i]) % p) + p) % p);
        zp_trim(a);
        if (a.empty()) break;
    }
    zp_trim(q);
    return {std::move(q), std::move(a)};
}

ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, long p) {
    return zp_divmod(std::move(a), b, p).second;
}

ZpPoly zp_gcd(ZpPoly a, ZpPoly b, long p) {
    while (!b.empty()) {
        ZpPoly r = zp_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) a = zp_scale(std::move(a), zp_inv(a.back(), p), p);
    return a;
}

ZpPoly zp_deriv(const ZpPoly& a, long p) {
    if (a.size() <= 1) return {};
    ZpPoly r(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i)
        r[i - 1] = static_cast<long>((static_cast<long long>(a[i]) * (i % p)) % p);
    zp_trim(r);
    return r;
}

bool zp_squarefree(const ZpPoly& a, long p) {
    ZpPoly d = zp_deriv(a, p);
    if (d.empty()) return false;
    return zp_deg(zp_gcd(a, d, p)) == 0;
}

// Inverse of a modulo f over F_p; pre: gcd(a, f) == 1.
ZpPoly zp_inverse_mod(const ZpPoly& a, const ZpPoly& f, long p) {
    ZpPoly r0 = f, r1 = zp_rem(a, f, p);
    ZpPoly s0 = {}, s1 = {1};
    while (!r1.empty()) {
        auto [q, r2] = zp_divmod(r0, r1, p);
        ZpPoly qs1 = zp_mul(q, s1, p);
        ZpPoly s2 = s0;
        if (s2.size() < qs1.size()) s2.resize(qs1.size(), 0);
        for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] = ((s2[i] - qs1[i]) % p + p) % p;
        zp_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is a unit; scale s0 so that s0 * a == 1 mod f.
    return zp_rem(zp_scale(std::move(s0), zp_inv(r0[0], p), p), f, p);
}

// x^p mod f by square and multiply.
ZpPoly zp_pow_x(const ZpPoly& f, long p) {
    ZpPoly base = zp_rem({0, 1}, f, p);
    ZpPoly result = {1};
    long e = p;
    while (e > 0) {
        if (e & 1) result = zp_rem(zp_mul(result, base, p), f, p);
        e >>= 1;
        if (e > 0) base = zp_rem(zp_mul(base, base, p), f, p);
    }
    return result;
}

// Right kernel basis of a d x d matrix over F_p, rows as basis vectors.
std::vector<std::vector<long>> zp_kernel(std::vector<std::vector<long>> m, long p) {
    int d = static_cast<int>(m.size());
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < d && row < d; ++col) {
        int sel = row;
        while (sel < d && m[sel][col] == 0) ++sel;
        if (sel == d) continue;
        std::swap(m[sel], m[row]);
        long inv = zp_inv(m[row][col], p);
        for (int j = 0; j < d; ++j)
            m[row][j] = static_cast<long>((static_cast<long long>(m[row][j]) * inv) % p);
        for (int i = 0; i < d; ++i) {
            if (i == row || m[i][col] == 0) continue;
            long f = m[i][col];
            for (int j = 0; j < d; ++j)
                m[i][j] = static_cast<long>(
                    (((m[i][j] - static_cast<long long>(f) * m[row][j]) % p) + p) % p);
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(d, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<long>> basis;
    for (int fc = 0; fc < d; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<long> v(d, 0);
        v[fc] = 1;
        for (std::size_t k = 0; k < pivot_col.size(); ++k)
            v[pivot_col[k]] = (p - m[k][fc]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// Basis of the subalgebra {v : v^p == v mod f}; its dimension equals the
// number of irreducible factors of the monic squarefree f over F_p.
std::vector<ZpPoly> berlekamp_basis(const ZpPoly& f, long p) {
    int d = zp_deg(f);
    ZpPoly xp = zp_pow_x(f, p);
    std::vector<std::vector<long>> m(d, std::vector<long>(d, 0));
    ZpPoly cur = {1};
    for (int i = 0; i < d; ++i) {
        // column i of the matrix of (Frobenius - identity) holds x^(i*p) - x^i.
        for (int j = 0; j <= zp_deg(cur); ++j) m[j][i] = cur[j];
        m[i][i] = ((m[i][i] - 1) % p + p) % p;
        if (i + 1 < d) cur = zp_rem(zp_mul(cur, xp, p), f, p);
    }
    std::vector<ZpPoly> basis;
    for (auto& v : zp_kernel(std::move(m), p)) {
        ZpPoly b(v.begin(), v.end());
        zp_trim(b);
        basis.push_back(std::move(b));
    }
    return basis;
}

// Deterministic splitting with gcd(u, v - s) over all basis elements v and
// all s in F_p.
std::vector<ZpPoly> berlekamp_split(const ZpPoly& f, const std::vector<ZpPoly>& basis, long p) {
    std::size_t target = basis.size();
    std::vector<ZpPoly> factors = {f};
    for (const ZpPoly& v : basis) {
        if (factors.size() == target) break;
        if (zp_deg(v) < 1) continue;
        for (long s = 0; s < p && factors.size() < target; ++s) {
            ZpPoly vs = v;
            vs[0] = ((vs[0] - s) % p + p) % p;
            zp_trim(vs);
            if (vs.empty()) continue;
            std::vector<ZpPoly> next;
            for (ZpPoly& u : factors) {
                ZpPoly g = zp_deg(u) > 1 ? zp_gcd(u, vs, p) : ZpPoly{1};
                if (zp_deg(g) > 0 && zp_deg(g) < zp_deg(u)) {
                    next.push_back(zp_divmod(u, g, p).first);
                    next.push_back(std::move(g));
                } else {
                    next.push_back(std::move(u));
                }
            }
            factors = std::move(next);
        }
    }
    return factors;
}

// ---------------------------------------------------------------------------
// Integer polynomial helpers (ascending coefficient vectors).

using ZPoly = std::vector<Integer>;

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void z_mod(ZPoly& a, const Integer& q) {
    for (auto& c : a) {
        c %= q;
        if (c < 0) c += q;
    }
    z_trim(a);
}

// Division by a monic divisor; returns {quotient, true} on exact division.
std::pair<ZPoly, bool> z_div_monic(ZPoly a, const ZPoly& b) {
    z_trim(a);
    if (a.empty()) return {{}, true};
    if (a.size() < b.size()) return {{}, false};
    ZPoly q(a.size() - b.size() + 1, Integer(0));
    while (a.size() >= b.size()) {
        Integer c = a.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        z_trim(a);
        if (a.empty()) return {std::move(q), true};
    }
    return {{}, false};
}

ZpPoly z_to_zp(const ZPoly& a, long p) {
    ZpPoly r(a.size());
    Integer pp(p);
    for (std::size_t i = 0; i < a.size(); ++i) {
        Integer c = a[i] % pp;
        if (c < 0) c += pp;
        r[i] = c.get_si();
    }
    zp_trim(r);
    return r;
}

// ---------------------------------------------------------------------------
// Hensel lifting of the mod-p factorization of a monic integer polynomial to
// modulus p^k >= bound, one power of p per step.

std::vector<ZPoly> hensel_lift(const ZPoly& g, std::vector<ZpPoly> base, long p,
                               const Integer& bound) {
    std::size_t r = base.size();
    // Partial fractions of 1 over the base factors: sigma[i] is the inverse
    // of prod_{j != i} base[j] modulo base[i].
    std::vector<ZpPoly> sigma(r);
    for (std::size_t i = 0; i < r; ++i) {
        ZpPoly prod = {1};
        for (std::size_t j = 0; j < r; ++j)
            if (j != i) prod = zp_rem(zp_mul(prod, base[j], p), base[i], p);
        sigma[i] = zp_inverse_mod(prod, base[i], p);
    }

    std::vector<ZPoly> lifted(r);
    for (std::size_t i = 0; i < r; ++i) {
        lifted[i].assign(base[i].size(), Integer(0));
        for (std::size_t j = 0; j < base[i].size(); ++j) lifted[i][j] = base[i][j];
    }

    Integer q(p);
    while (q < bound) {
        // error = (g - prod lifted) / q, taken mod p
        ZPoly prod = {Integer(1)};
        for (const ZPoly& f : lifted) prod = z_mul(prod, f);
        ZPoly err(std::max(g.size(), prod.size()), Integer(0));
        for (std::size_t i = 0; i < g.size(); ++i) err[i] = g[i];
        for (std::size_t i = 0; i < prod.size(); ++i) err[i] -= prod[i];
        for (auto& c : err) c /= q;  // exact by the lifting invariant
        ZpPoly e = z_to_zp(err, p);

        Integer qp = q * p;
        for (std::size_t i = 0; i < r; ++i) {
            ZpPoly delta = zp_rem(zp_mul(e, sigma[i], p), base[i], p);
            for (std::size_t j = 0; j < delta.size(); ++j) lifted[i][j] += q * delta[j];
            z_mod(lifted[i], qp);
            // keep the representative monic
            lifted[i].resize(base[i].size(), Integer(0));
            lifted[i].back() = 1;
        }
        q = qp;
    }
    for (auto& f : lifted) z_trim(f);
    return lifted;
}

// ---------------------------------------------------------------------------
// Subset recombination of lifted modular factors into true integer factors.

Integer symmetric_rep(Integer c, const Integer& q) {
    c %= q;
    if (c < 0) c += q;
    if (2 * c > q) c -= q;
    return c;
}

std::vector<ZPoly> recombine(ZPoly g, std::vector<ZPoly> modular, const Integer& q) {
    std::vector<ZPoly> out;
    std::size_t card = 1;
    while (!modular.empty() && 2 * card <= modular.size()) {
        std::vector<std::size_t> pick(card);
        for (std::size_t i = 0; i < card; ++i) pick[i] = i;
        bool found = false;
        while (true) {
            ZPoly cand = {Integer(1)};
            for (std::size_t i : pick) cand = z_mul(cand, modular[i]);
            z_mod(cand, q);
            for (auto& c : cand) c = symmetric_rep(c, q);
            z_trim(cand);
            bool plausible = g[0] == 0 || (cand[0] != 0 && g[0] % cand[0] == 0);
            if (plausible) {
                auto [quot, exact] = z_div_monic(g, cand);
                if (exact) {
                    out.push_back(cand);
                    g = std::move(quot);
                    std::vector<ZPoly> rest;
                    for (std::size_t i = 0; i < modular.size(); ++i)
                        if (std::find(pick.begin(), pick.end(), i) == pick.end())
                            rest.push_back(std::move(modular[i]));
                    modular = std::move(rest);
                    found = true;
                    break;
                }
            }
            // next cardinality-card combination in lexicographic order
            std::size_t i = card;
            while (i > 0 && pick[i - 1] == modular.size() - card + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < card; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) ++card;
    }
    if (static_cast<int>(g.size()) > 1) out.push_back(std::move(g));
    return out;
}

// ---------------------------------------------------------------------------
// Rational/integer bridges.

UniPoly primitivize(const UniPoly& f) {
    Integer den_lcm(1);
    for (const Rational& c : f.coeffs()) {
        Integer d = c.get_den();
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    Integer num_gcd(0);
    for (const Rational& c : f.coeffs()) {
        Integer n = Rational(c * Rational(den_lcm)).get_num();
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    }
    if (num_gcd == 0) return f;
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    if (f.leading_coeff() < 0) scale = -scale;
    return f * scale;
}

ZPoly to_zpoly(const UniPoly& f) {
    ZPoly r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.coeffs()[i].get_num();
    return r;
}

UniPoly from_zpoly(const ZPoly& f) {
    std::vector<Rational> cs(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) cs[i] = Rational(f[i]);
    return UniPoly(std::move(cs));
}

// Yun decomposition: f == const * prod parts[i].first ^ parts[i].second with
// squarefree pairwise-coprime parts, each primitive with positive leading
// coefficient.
std::vector<std::pair<UniPoly, int>> yun_squarefree(const UniPoly& f) {
    std::vector<std::pair<UniPoly, int>> parts;
    UniPoly g = gcd(f, f.derivative());
    if (g.degree() == 0) {
        parts.emplace_back(primitivize(f), 1);
        return parts;
    }
    UniPoly b = divmod(f, g).first;
    UniPoly c = divmod(f.derivative(), g).first;
    UniPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UniPoly a = gcd(b, d);
        if (a.degree() > 0) parts.emplace_back(primitivize(a), i);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
        ++i;
    }
    return parts;
}

// Complete factorization of a squarefree primitive integer polynomial with
// positive leading coefficient.
std::vector<UniPoly> factor_squarefree(const UniPoly& s) {
    int d = s.degree();
    if (d == 1) return {s};

    // Monic companion: ghat(T) = b^(d-1) * s(T/b), an integer monic polynomial
    // whose factorizations correspond to those of s.
    Integer b = s.leading_coeff().get_num();
    ZPoly ghat(d + 1);
    ghat[d] = 1;
    Integer bpow(1);
    for (int i = d - 1; i >= 0; --i) {
        ghat[i] = s.coeff(static_cast<unsigned>(i)).get_num() * bpow;
        bpow *= b;
    }

    // Prime selection: smallest primes >= 31 keeping ghat squarefree; among a
    // few candidates prefer the one with the fewest modular factors.
    long best_p = 0;
    std::vector<ZpPoly> best_basis;
    ZpPoly best_image;
    int tried = 0;
    for (long p = 31; tried < 4 && p < 10000; ++p) {
        bool prime = p > 1;
        for (long q = 2; q * q <= p && prime; ++q)
            if (p % q == 0) prime = false;
        if (!prime) continue;
        ZpPoly image = z_to_zp(ghat, p);
        if (zp_deg(image) != d || !zp_squarefree(image, p)) continue;
        ++tried;
        std::vector<ZpPoly> basis = berlekamp_basis(image, p);
        if (best_p == 0 || basis.size() < best_basis.size()) {
            best_p = p;
            best_basis = std::move(basis);
            best_image = std::move(image);
        }
        if (best_basis.size() == 1) break;
    }
    if (best_p == 0) throw InternalError("no usable prime for factoring");
    if (best_basis.size() == 1) return {s};
    if (best_basis.size() > 20) throw InternalError("modular factor count exceeds supported bound");

    std::vector<ZpPoly> modular = berlekamp_split(best_image, best_basis, best_p);

    // Coefficient bound for monic factors: sqrt(d+1) * 2^d * height(ghat);
    // lift to p^k >= 2*bound + 1 so symmetric residues identify them.
    Integer height(0);
    for (const Integer& c : ghat) {
        Integer a = c >= 0 ? c : Integer(-c);
        if (a > height) height = a;
    }
    Integer bound = Integer(d + 1);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
    bound += 1;
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(d));
    bound = 2 * bound * two_pow * height + 1;

    std::vector<ZPoly> lifted = hensel_lift(ghat, std::move(modular), best_p, bound);
    Integer q(best_p);
    while (q < bound) q *= best_p;

    std::vector<UniPoly> out;
    for (const ZPoly& fz : recombine(ghat, std::move(lifted), q)) {
        // Undo the monic substitution: factor of s is pp(fhat(b*T)).
        UniPoly fhat = from_zpoly(fz);
        std::vector<Rational> cs(fhat.coeffs());
        Rational scale(1);
        for (std::size_t i = 0; i < cs.size(); ++i) {
            cs[i] *= scale;
            scale *= Rational(b);
        }
        out.push_back(primitivize(UniPoly(std::move(cs))));
    }
    return out;
}

}  // namespace

UniPoly UniFactorization::expand() const {
    UniPoly r = UniPoly::constant(unit);
    for (const auto& [f, e] : factors) r = r * pow(f, static_cast<unsigned>(e));
    return r;
}

UniFactorization factor_univariate(const UniPoly& p) {
    if (p.is_zero()) throw InputError("cannot factor the zero polynomial");
    UniFactorization out;
    if (p.is_constant()) {
        out.unit = p.coeff(0);
        return out;
    }
    UniPoly prim = primitivize(p);
    for (const auto& [part, mult] : yun_squarefree(prim))
        for (const UniPoly& f : factor_squarefree(part)) out.factors.emplace_back(f, mult);

    std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
        return compare_display(from_unipoly(a.first, 0, 1), from_unipoly(b.first, 0, 1)) < 0;
    });

    Rational lc_prod(1);
    for (const auto& [f, e] : out.factors)
        for (int i = 0; i < e; ++i) lc_prod *= f.leading_coeff();
    out.unit = p.leading_coeff() / lc_prod;
    return out;
}

}  // namespace ratdec
