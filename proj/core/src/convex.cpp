#include "ratdec/convex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "ratdec/errors.hpp"

namespace ratdec {

long map_det(const AffineMap& m) { return m.a11 * m.a22 - m.a12 * m.a21; }

LatticePoint map_apply(const AffineMap& m, const LatticePoint& p) {
    return {m.a11 * p[0] + m.a12 * p[1] + m.b1, m.a21 * p[0] + m.a22 * p[1] + m.b2};
}

AffineMap map_compose(const AffineMap& o, const AffineMap& i) {
    AffineMap r;
    r.a11 = o.a11 * i.a11 + o.a12 * i.a21;
    r.a12 = o.a11 * i.a12 + o.a12 * i.a22;
    r.a21 = o.a21 * i.a11 + o.a22 * i.a21;
    r.a22 = o.a21 * i.a12 + o.a22 * i.a22;
    r.b1 = o.a11 * i.b1 + o.a12 * i.b2 + o.b1;
    r.b2 = o.a21 * i.b1 + o.a22 * i.b2 + o.b2;
    return r;
}

AffineMap map_inverse(const AffineMap& m) {
    long d = map_det(m);
    if (d != 1 && d != -1) throw InternalError("affine map is not unimodular");
    AffineMap r;
    r.a11 = d * m.a22;
    r.a12 = -d * m.a12;
    r.a21 = -d * m.a21;
    r.a22 = d * m.a11;
    r.b1 = -(r.a11 * m.b1 + r.a12 * m.b2);
    r.b2 = -(r.a21 * m.b1 + r.a22 * m.b2);
    return r;
}

std::vector<LatticePoint> support(const MultiPoly& p) {
    if (p.nvars() != 2) throw InternalError("support requires a bivariate polynomial");
    std::vector<LatticePoint> out;
    for (const auto& term : p.terms())
        out.push_back({static_cast<long>(term.first[0]), static_cast<long>(term.first[1])});
    return out;
}

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

std::vector<LatticePoint> newton_polygon(std::vector<LatticePoint> pts) {
    if (pts.empty()) throw InputError("empty support");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<LatticePoint> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {  // upper chain
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);  // last point repeats the first
    return hull;
}

long lattice_size(const std::vector<LatticePoint>& pts) {
    std::vector<LatticePoint> hull = newton_polygon(pts);
    if (hull.size() == 1) return 1;
    if (hull.size() == 2) {
        long dx = hull[1][0] - hull[0][0], dy = hull[1][1] - hull[0][1];
        return std::gcd(std::abs(dx), std::abs(dy)) + 1;
    }
    long minx = hull[0][0], maxx = hull[0][0], miny = hull[0][1], maxy = hull[0][1];
    for (const LatticePoint& p : hull) {
        minx = std::min(minx, p[0]);
        maxx = std::max(maxx, p[0]);
        miny = std::min(miny, p[1]);
        maxy = std::max(maxy, p[1]);
    }
    long count = 0;
    for (long x = minx; x <= maxx; ++x)
        for (long y = miny; y <= maxy; ++y) {
            LatticePoint p{x, y};
            bool inside = true;
            for (std::size_t i = 0; i < hull.size() && inside; ++i)
                if (cross(hull[i], hull[(i + 1) % hull.size()], p) < 0) inside = false;
            if (inside) ++count;
        }
    return count;
}

bool is_normalized(const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return false;
    long minx = pts[0][0], miny = pts[0][1];
    for (const LatticePoint& p : pts) {
        if (p[0] < 0 || p[1] < 0) return false;
        minx = std::min(minx, p[0]);
        miny = std::min(miny, p[1]);
    }
    return minx == 0 && miny == 0;
}

AffineMap normalize_translation(const std::vector<LatticePoint>& pts) {
    if (pts.empty()) throw InputError("empty support");
    long minx = pts[0][0], miny = pts[0][1];
    for (const LatticePoint& p : pts) {
        minx = std::min(minx, p[0]);
        miny = std::min(miny, p[1]);
    }
    AffineMap m;
    m.b1 = -minx;
    m.b2 = -miny;
    return m;
}

long dense_size(const std::vector<LatticePoint>& pts) {
    if (pts.empty()) return 0;
    long minx = pts[0][0], maxx = pts[0][0], miny = pts[0][1], maxy = pts[0][1];
    for (const LatticePoint& p : pts) {
        minx = std::min(minx, p[0]);
        maxx = std::max(maxx, p[0]);
        miny = std::min(miny, p[1]);
        maxy = std::max(maxy, p[1]);
    }
    return (maxx - minx + 1) * (maxy - miny + 1);
}

namespace {

using Linear = std::array<long, 4>;  // a11 a12 a21 a22, row major

std::vector<LatticePoint> apply_linear(const Linear& l, const std::vector<LatticePoint>& pts) {
    std::vector<LatticePoint> out;
    out.reserve(pts.size());
    for (const LatticePoint& p : pts)
        out.push_back({l[0] * p[0] + l[1] * p[1], l[2] * p[0] + l[3] * p[1]});
    return out;
}

Linear mul(const Linear& a, const Linear& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// x*p + y*q = gcd(p, q), |x|, |y| kept small by the classical recursion.
void extgcd(long p, long q, long& x, long& y) {
    if (q == 0) {
        x = p >= 0 ? 1 : -1;
        y = 0;
        return;
    }
    long x1, y1;
    extgcd(q, p % q, x1, y1);
    x = y1;
    y = x1 - (p / q) * y1;
}

// Unimodular maps sending one primitive hull-edge direction of pts to (1, 0);
// flattening an edge against the x axis is what shrinks the bounding box.
std::vector<Linear> edge_shears(const std::vector<LatticePoint>& pts) {
    std::vector<Linear> out;
    std::vector<LatticePoint> hull = newton_polygon(pts);
    if (hull.size() < 2) return out;
    std::size_t nedges = hull.size() == 2 ? 2 : hull.size();
    for (std::size_t i = 0; i < nedges; ++i) {
        const LatticePoint& a = hull[i % hull.size()];
        const LatticePoint& b = hull[(i + 1) % hull.size()];
        long p = b[0] - a[0], q = b[1] - a[1];
        long g = std::gcd(std::abs(p), std::abs(q));
        if (g == 0) continue;
        p /= g;
        q /= g;
        long s, t;
        extgcd(p, q, s, t);  // s*p + t*q = 1
        out.push_back({s, t, -q, p});
    }
    return out;
}

}  // namespace

AffineMap find_reduction_map(const std::vector<LatticePoint>& pts) {
    AffineMap best;  // identity
    if (pts.empty()) return best;

    auto finalize = [&pts](const Linear& l) {
        std::vector<LatticePoint> img = apply_linear(l, pts);
        long minx = img[0][0], miny = img[0][1];
        for (const LatticePoint& p : img) {
            minx = std::min(minx, p[0]);
            miny = std::min(miny, p[1]);
        }
        AffineMap m;
        m.a11 = l[0];
        m.a12 = l[1];
        m.a21 = l[2];
        m.a22 = l[3];
        m.b1 = -minx;
        m.b2 = -miny;
        return m;
    };
    auto key = [](const AffineMap& m) {
        return std::make_tuple(m.a11, m.a12, m.a21, m.a22, m.b1, m.b2);
    };

    Linear ident{1, 0, 0, 1};
    best = finalize(ident);
    long best_size = dense_size(apply_linear(ident, pts));
    bool best_is_identity = true;

    std::set<Linear> seen{ident};
    std::vector<Linear> frontier{ident};
    for (int depth = 0; depth < 3; ++depth) {
        std::vector<Linear> next;
        for (const Linear& l : frontier) {
            std::vector<LatticePoint> img = apply_linear(l, pts);
            std::vector<Linear> atoms = edge_shears(img);
            atoms.push_back({0, 1, 1, 0});  // swap
            for (const Linear& a : atoms) {
                Linear c = mul(a, l);
                if (!seen.insert(c).second) continue;
                next.push_back(c);
                long size = dense_size(apply_linear(c, pts));
                if (size > best_size) continue;
                // the identity concedes only to a strict improvement
                if (size == best_size && best_is_identity) continue;
                AffineMap cand = finalize(c);
                if (size < best_size || key(cand) < key(best)) {
                    best = cand;
                    best_size = size;
                    best_is_identity = false;
                }
            }
        }
        frontier = std::move(next);
    }
    return best;
}

RationalFunction apply_map_to_function(const RationalFunction& f, const AffineMap& m) {
    if (f.nvars() != 2) throw InternalError("map application requires two variables");
    if (map_det(m) != 1 && map_det(m) != -1) throw InternalError("affine map is not unimodular");

    // Transform the exponents of both parts, then translate jointly so the
    // pair lands in the first quadrant; the joint monomial factor cancels in
    // the quotient, so only the linear part affects the function.
    auto transform = [&m](const MultiPoly& p) {
        std::map<LatticePoint, Rational> out;
        for (const auto& term : p.terms()) {
            LatticePoint e{static_cast<long>(term.first[0]), static_cast<long>(term.first[1])};
            out[{m.a11 * e[0] + m.a12 * e[1], m.a21 * e[0] + m.a22 * e[1]}] = term.second;
        }
        return out;
    };
    std::map<LatticePoint, Rational> tn = transform(f.num()), td = transform(f.den());

    long minx = 0, miny = 0;
    bool first = true;
    for (const auto* part : {&tn, &td})
        for (const auto& e : *part) {
            if (first || e.first[0] < minx) minx = e.first[0];
            if (first || e.first[1] < miny) miny = e.first[1];
            first = false;
        }

    auto build = [minx, miny](const std::map<LatticePoint, Rational>& t) {
        MultiPoly p(2);
        for (const auto& e : t)
            p.add_term({static_cast<unsigned>(e.first[0] - minx),
                        static_cast<unsigned>(e.first[1] - miny)},
                       e.second);
        return p;
    };
    return RationalFunction::reduced(build(tn), build(td));
}

Decomposition convex_decompose(const RationalFunction& f, const DecomposeOptions& opts) {
    RationalFunction g = RationalFunction::reduced(f.num(), f.den());
    if (g.nvars() != 2)
        throw InputError("convex preprocessing requires exactly two variables");
    if (g.num().is_zero() || g.degree() <= 1) return decompose(g, opts);

    std::vector<LatticePoint> pts = support(g.num());
    std::vector<LatticePoint> den_pts = support(g.den());
    pts.insert(pts.end(), den_pts.begin(), den_pts.end());
    AffineMap m = find_reduction_map(pts);

    RationalFunction t = apply_map_to_function(g, m);
    Decomposition inner = decompose(t, opts);
    Decomposition out = inner;
    if (inner.status == DecomposeStatus::NonComposite) {
        // compositeness is preserved by any invertible monomial substitution
        out.h = g;
        return out;
    }
    out.h = apply_map_to_function(inner.h, map_inverse(m));
    if (!equal_as_functions(compose_uni(out.u, out.h), g))
        throw InternalError("convex decomposition failed verification");
    return out;
}

}  // namespace ratdec
