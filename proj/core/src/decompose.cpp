#include "ratdec/decompose.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <string>

#include "ratdec/errors.hpp"

namespace ratdec {

std::pair<UniPoly, UniPoly> axis_restriction(const RationalFunction& f) {
    int n = f.nvars();
    std::vector<std::optional<Rational>> at(n);
    for (int v = 0; v + 1 < n; ++v) at[v] = Rational(0);
    return {to_unipoly(f.num().eval_partial(at), n - 1),
            to_unipoly(f.den().eval_partial(at), n - 1)};
}

HypothesisReport check_hypothesis(const RationalFunction& f) {
    HypothesisReport rep;
    int d = std::max(f.num().degree(), f.den().degree());
    int n = f.nvars();
    int dn = std::max(f.num().degree_in(n - 1), f.den().degree_in(n - 1));
    rep.degree_condition = dn == d;
    auto [b1, b2] = axis_restriction(f);
    // Pencil restricted to the axis, with the pencil parameter as variable 0
    // and X_n as variable 1.
    MultiPoly lam = MultiPoly::variable(2, 0);
    MultiPoly a = from_unipoly(b1, 1, 2) + lam * from_unipoly(b2, 1, 2);
    MultiPoly b = from_unipoly(b1.derivative(), 1, 2) + lam * from_unipoly(b2.derivative(), 1, 2);
    MultiPoly r = resultant_wrt_last(a, b);
    rep.resultant_r = to_unipoly(drop_var(r, 1), 0);
    rep.satisfied = rep.degree_condition && !rep.resultant_r.is_zero();
    return rep;
}

RationalFunction apply_variable_shift(const RationalFunction& f,
                                      const std::vector<Integer>& shift) {
    int n = f.nvars();
    if (static_cast<int>(shift.size()) != n - 1)
        throw InternalError("shift length must be one less than the variable count");
    MultiPoly num = f.num(), den = f.den();
    MultiPoly xn = MultiPoly::variable(n, n - 1);
    for (int v = 0; v + 1 < n; ++v) {
        if (shift[v] == 0) continue;
        MultiPoly value = MultiPoly::variable(n, v) + xn * Rational(shift[v]);
        num = num.substitute(v, value);
        den = den.substitute(v, value);
    }
    return RationalFunction::from_coprime(std::move(num), std::move(den));
}

GoodHomographyResult good_homography(const RationalFunction& f) {
    int d = f.degree();
    auto [b1, b2] = axis_restriction(f);
    long target = 2L * d * d + 2 * d;
    std::vector<Rational> candidates;
    long evals = 0;
    for (long i = 0; evals < target && i <= target + d + 1; ++i) {
        Rational x(i);
        Rational den = b2.eval(x);
        if (den == 0) continue;
        ++evals;
        Rational lambda = b1.eval(x) / den;
        if (std::find(candidates.begin(), candidates.end(), lambda) == candidates.end())
            candidates.push_back(lambda);
    }
    // A value survives when its pencil member keeps full degree on the axis
    // and is squarefree there; squarefreeness of the full member is accepted
    // as the fallback when only the axis restriction degenerates.
    std::vector<Rational> survivors;
    std::size_t scan = std::min<std::size_t>(candidates.size(), 2 * d + 2);
    for (std::size_t k = 0; k < scan && survivors.size() < 2; ++k) {
        const Rational& lambda = candidates[k];
        UniPoly member = b1 - b2 * lambda;
        if (member.degree() != d) continue;
        if (!is_squarefree(member) && !is_squarefree(f.num() - f.den() * lambda)) continue;
        survivors.push_back(lambda);
    }
    if (survivors.size() < 2)
        throw InsufficientCandidatesError("found fewer than two usable pencil values");
    GoodHomographyResult out;
    out.lambda_a = survivors[0];
    out.lambda_b = survivors[1];
    out.U = Mobius{Rational(1), -out.lambda_a, Rational(1), -out.lambda_b};
    out.F = RationalFunction::from_coprime(f.num() - f.den() * out.lambda_a,
                                           f.num() - f.den() * out.lambda_b);
    return out;
}

std::vector<Monomial> system_monomials(int nvars, int max_total) {
    std::vector<Monomial> out;
    Monomial cur(nvars, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            cur[var] = static_cast<unsigned>(e);
            self(self, var + 1, remaining - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, max_total);
    std::sort(out.begin(), out.end(), [nvars](const Monomial& a, const Monomial& b) {
        for (int v = nvars - 1; v >= 0; --v)
            if (a[v] != b[v]) return a[v] < b[v];
        return false;
    });
    return out;
}

RecombinationSystem build_recombination_system(const std::vector<CofactorVector>& cofactors,
                                               int ncols_num, int nvars, int max_total) {
    RecombinationSystem sys;
    sys.monomials = system_monomials(nvars, max_total);
    sys.ncols_num = ncols_num;
    std::size_t ncols = cofactors.size();
    std::size_t ncomp = static_cast<std::size_t>(nvars) - 1;
    std::size_t nmono = sys.monomials.size();
    sys.matrix.assign(ncomp * nmono, VectorQ(ncols, Rational(0)));
    for (std::size_t col = 0; col < ncols; ++col)
        for (std::size_t l = 0; l < ncomp; ++l)
            for (std::size_t r = 0; r < nmono; ++r)
                sys.matrix[l * nmono + r][col] = cofactors[col][l].coeff(sys.monomials[r]);
    return sys;
}

RecombineResult recombine(const RationalFunction& F,
                          const std::optional<std::vector<MultiPoly>>& oracle_num,
                          const std::optional<std::vector<MultiPoly>>& oracle_den) {
    RecombineResult out;
    out.fac_num = factor_with_oracle(F.num(), oracle_num);
    out.fac_den = factor_with_oracle(F.den(), oracle_den);
    for (const auto& fm : out.fac_num.factors) out.cof_num.push_back(cofactor(F, fm.first));
    for (const auto& fm : out.fac_den.factors) out.cof_den.push_back(cofactor(F, fm.first));

    std::vector<CofactorVector> all = out.cof_num;
    all.insert(all.end(), out.cof_den.begin(), out.cof_den.end());
    int k1 = static_cast<int>(out.fac_num.factors.size());
    int k2 = static_cast<int>(out.fac_den.factors.size());
    out.system = build_recombination_system(all, k1, F.nvars(), 2 * F.degree() - 2);

    out.kernel = kernel_basis(out.system.matrix, k1 + k2);
    if (out.kernel.empty()) throw InternalError("recombination kernel is trivial");
    out.basis_num = project_rebase(out.kernel, 0, k1);
    out.basis_den = project_rebase(out.kernel, k1, k2);

    auto validate = [](const MatrixQ& basis) {
        for (const VectorQ& v : basis)
            for (const Rational& c : v)
                if (c != 0 && c != 1)
                    throw BasisNotBooleanError("projected kernel basis is not 0/1");
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                Rational dot(0);
                for (std::size_t k = 0; k < basis[i].size(); ++k)
                    dot += basis[i][k] * basis[j][k];
                if (dot != 0)
                    throw BasisNotBooleanError("projected kernel basis blocks overlap");
            }
    };
    validate(out.basis_num);
    validate(out.basis_den);
    if (out.basis_num.empty() || out.basis_den.empty())
        throw InternalError("projected kernel basis is empty");

    auto choose = [](const MatrixQ& basis, const Factorization& fac) {
        std::size_t best = 0;
        int best_deg = -1;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            int deg = 0;
            for (std::size_t k = 0; k < basis[i].size(); ++k)
                if (basis[i][k] == 1) deg += fac.factors[k].first.degree();
            if (best_deg < 0 || deg < best_deg) {
                best = i;
                best_deg = deg;
            }
        }
        return basis[best];
    };
    out.v_num = choose(out.basis_num, out.fac_num);
    out.v_den = choose(out.basis_den, out.fac_den);

    MultiPoly h1 = MultiPoly::constant(F.nvars(), Rational(1));
    MultiPoly h2 = h1;
    for (int k = 0; k < k1; ++k)
        if (out.v_num[k] == 1) h1 = h1 * out.fac_num.factors[k].first;
    for (int k = 0; k < k2; ++k)
        if (out.v_den[k] == 1) h2 = h2 * out.fac_den.factors[k].first;
    out.H = RationalFunction::from_coprime(std::move(h1), std::move(h2));
    return out;
}

UniRationalFunction recover_u(const RationalFunction& f, const RationalFunction& h) {
    int df = f.degree(), dh = h.degree();
    if (dh <= 0) throw NoSolutionError("inner function must be nonconstant");
    if (df % dh != 0)
        throw NoSolutionError("inner function degree does not divide the input degree");
    int k = df / dh;
    // Unknowns (a_0..a_k, b_0..b_k) for u = A/B; the linear condition is
    // f1*B(h)*h2^k - f2*A(h)*h2^k == 0 coefficientwise.
    std::vector<MultiPoly> cols;
    for (int i = 0; i <= k; ++i)
        cols.push_back(-(f.den() * pow(h.num(), static_cast<unsigned>(i)) *
                         pow(h.den(), static_cast<unsigned>(k - i))));
    for (int i = 0; i <= k; ++i)
        cols.push_back(f.num() * pow(h.num(), static_cast<unsigned>(i)) *
                       pow(h.den(), static_cast<unsigned>(k - i)));

    std::map<Monomial, std::size_t, GrlexLess> row_of;
    for (const MultiPoly& c : cols)
        for (const auto& term : c.terms()) row_of.emplace(term.first, 0);
    std::size_t next = 0;
    for (auto& entry : row_of) entry.second = next++;

    MatrixQ m(row_of.size(), VectorQ(cols.size(), Rational(0)));
    for (std::size_t col = 0; col < cols.size(); ++col)
        for (const auto& term : cols[col].terms()) m[row_of[term.first]][col] = term.second;

    MatrixQ kernel = kernel_basis(m, static_cast<int>(cols.size()));
    if (kernel.empty()) throw NoSolutionError("no univariate outer function exists");
    if (kernel.size() > 1) throw AmbiguousSolutionError("outer function is not unique");

    std::vector<Rational> a(kernel[0].begin(), kernel[0].begin() + (k + 1));
    std::vector<Rational> b(kernel[0].begin() + (k + 1), kernel[0].end());
    return UniRationalFunction::reduced(UniPoly(std::move(a)), UniPoly(std::move(b)));
}

namespace {

UniRationalFunction identity_function() {
    return UniRationalFunction::reduced(UniPoly::variable(), UniPoly::constant(1));
}

RationalFunction apply_translation(const RationalFunction& f,
                                   const std::vector<Integer>& offset) {
    int n = f.nvars();
    MultiPoly num = f.num(), den = f.den();
    for (int v = 0; v < n; ++v) {
        if (offset[v] == 0) continue;
        MultiPoly value =
            MultiPoly::variable(n, v) + MultiPoly::constant(n, Rational(offset[v]));
        num = num.substitute(v, value);
        den = den.substitute(v, value);
    }
    return RationalFunction::from_coprime(std::move(num), std::move(den));
}

std::uint64_t effective_seed(const DecomposeOptions& opts) {
    if (const char* env = std::getenv("RATDEC_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
        }
    }
    return opts.seed;
}

}  // namespace

Decomposition decompose(const RationalFunction& f, const DecomposeOptions& opts) {
    RationalFunction g = RationalFunction::reduced(f.num(), f.den());
    int n = g.nvars();
    Decomposition out;
    if (g.num().is_zero() || g.degree() <= 1) {
        out.u = identity_function();
        out.h = g;
        return out;
    }
    if (n < 2) throw InputError("decomposition requires at least two variables");

    std::mt19937_64 rng(effective_seed(opts));
    std::uniform_int_distribution<int> sgn(0, 1);

    for (int attempt = 0;; ++attempt) {
        std::vector<Integer> shift(n - 1, Integer(0));
        std::vector<Integer> offset(n, Integer(0));
        RationalFunction work = g;
        if (attempt > 0) {
            // Shears repair a degree deficit in X_n; translations move the
            // axis off multiple points shared by numerator and denominator,
            // which no origin-fixing map can do.  Later attempts widen the
            // range so the finitely many bad choices cannot exhaust it.
            std::uniform_int_distribution<int> mag(1, 2 + attempt);
            for (auto& c : shift) c = Integer((sgn(rng) ? 1 : -1) * mag(rng));
            for (auto& c : offset) c = Integer((sgn(rng) ? 1 : -1) * mag(rng));
            work = apply_translation(apply_variable_shift(g, shift), offset);
        }
        try {
            PipelineTrace trace;
            if (attempt > 0) {
                trace.shift = shift;
                trace.translation = offset;
            }
            trace.hypothesis = check_hypothesis(work);
            if (!trace.hypothesis.satisfied)
                throw HypothesisError("the working hypotheses fail in these coordinates");
            GoodHomographyResult gh = good_homography(work);
            RecombineResult rec = recombine(gh.F, opts.oracle_num, opts.oracle_den);
            UniRationalFunction u_raw = recover_u(gh.F, rec.H);
            if (opts.capture_trace) {
                trace.homography = gh;
                trace.recombination = rec;
                trace.u_raw = u_raw;
            }
            if (u_raw.degree() == 1) {
                out.status = DecomposeStatus::NonComposite;
                out.u = identity_function();
                out.h = g;
            } else {
                out.status = DecomposeStatus::Composite;
                out.u = mobius_after(mobius_inverse(gh.U), u_raw);
                RationalFunction h = rec.H;
                if (attempt > 0) {
                    std::vector<Integer> back_off = offset, back = shift;
                    for (auto& c : back_off) c = -c;
                    for (auto& c : back) c = -c;
                    h = apply_variable_shift(apply_translation(h, back_off), back);
                }
                out.h = h;
                if (!equal_as_functions(compose_uni(out.u, out.h), g))
                    throw InternalError("decomposition failed verification");
            }
            out.certificate = Certificate{gh.lambda_a, gh.lambda_b, rec.basis_num,
                                          rec.basis_den,  rec.v_num,   rec.v_den};
            if (opts.capture_trace) out.trace = std::move(trace);
            return out;
        } catch (const RetryableError&) {
            if (attempt >= opts.shift_retries) throw;
        }
    }
}

}  // namespace ratdec
