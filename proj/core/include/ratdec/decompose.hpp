#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ratdec/derivation.hpp"
#include "ratdec/factor.hpp"
#include "ratdec/linalg.hpp"
#include "ratdec/rational_function.hpp"

namespace ratdec {

// Restriction of both parts to the X_n axis (all other variables at 0).
std::pair<UniPoly, UniPoly> axis_restriction(const RationalFunction& f);

struct HypothesisReport {
    // max(deg_{X_n} f1, deg_{X_n} f2) == max(deg f1, deg f2)
    bool degree_condition = false;
    // resultant in X_n of (fbar1 + L*fbar2, d/dX_n (fbar1 + L*fbar2)) as a
    // polynomial in L; the requirement is that it is not identically zero
    UniPoly resultant_r;
    bool satisfied = false;
};

HypothesisReport check_hypothesis(const RationalFunction& f);

// X_i <- X_i + shift[i] * X_n for i = 1..n-1 (shift has n-1 entries).
RationalFunction apply_variable_shift(const RationalFunction& f,
                                      const std::vector<Integer>& shift);

struct GoodHomographyResult {
    Mobius U;  // T -> (T - lambda_a) / (T - lambda_b)
    Rational lambda_a;
    Rational lambda_b;
    // (f1 - lambda_a*f2) / (f1 - lambda_b*f2), the pair kept verbatim
    RationalFunction F;
};

// Chooses two pencil values whose members keep full degree on the X_n axis
// and are squarefree, scanning lambda = f1/f2 at integer points of the axis.
// Throws InsufficientCandidatesError (retryable) when the scan fails.
GoodHomographyResult good_homography(const RationalFunction& f);

// Monomials of total degree <= max_total, ordered by exponent tuple read
// from the last variable backwards, ascending.
std::vector<Monomial> system_monomials(int nvars, int max_total);

struct RecombinationSystem {
    MatrixQ matrix;                   // one row per (component, monomial) pair
    std::vector<Monomial> monomials;  // row monomials of a single component block
    int ncols_num = 0;                // leading columns hold numerator factors
};

// Rows are indexed by derivation component (outer) and monomial (inner); the
// entry in a factor's column is that monomial's coefficient in the factor's
// cofactor component.
RecombinationSystem build_recombination_system(const std::vector<CofactorVector>& cofactors,
                                               int ncols_num, int nvars, int max_total);

struct RecombineResult {
    Factorization fac_num, fac_den;
    std::vector<CofactorVector> cof_num, cof_den;
    RecombinationSystem system;
    MatrixQ kernel;               // row-reduced kernel basis
    MatrixQ basis_num, basis_den; // kernel projected to each side's columns
    VectorQ v_num, v_den;         // chosen 0/1 exponent vectors
    RationalFunction H;
};

// Recombines the irreducible factors of both parts of F into the candidate
// inner function H by matching cofactors.  Optional factor lists stand in for
// the factorization when F has three or more variables.
RecombineResult recombine(const RationalFunction& F,
                          const std::optional<std::vector<MultiPoly>>& oracle_num,
                          const std::optional<std::vector<MultiPoly>>& oracle_den);

// Solves f == u(h) for the univariate u by linear algebra on the coefficients
// of f1*B(h) - f2*A(h); throws NoSolutionError / AmbiguousSolutionError when
// the solution space is not one-dimensional.
UniRationalFunction recover_u(const RationalFunction& f, const RationalFunction& h);

enum class DecomposeStatus { Composite, NonComposite };

struct Certificate {
    Rational lambda_a, lambda_b;
    MatrixQ basis_num, basis_den;
    VectorQ v_num, v_den;
};

struct PipelineTrace {
    HypothesisReport hypothesis;
    std::optional<GoodHomographyResult> homography;
    std::optional<RecombineResult> recombination;
    std::optional<UniRationalFunction> u_raw;  // before undoing the homography
    std::vector<Integer> shift;        // empty when no shift was needed
    std::vector<Integer> translation;  // empty when no translation was needed
};

struct Decomposition {
    DecomposeStatus status = DecomposeStatus::NonComposite;
    UniRationalFunction u;  // identity when non-composite
    RationalFunction h;     // the (normalized) input when non-composite
    std::optional<Certificate> certificate;
    std::optional<PipelineTrace> trace;
};

struct DecomposeOptions {
    int shift_retries = 5;
    std::uint64_t seed = 0x00c0ffee1234abcdULL;  // RATDEC_SEED overrides
    bool capture_trace = false;
    std::optional<std::vector<MultiPoly>> oracle_num, oracle_den;
};

// Writes f as u(h) with deg u >= 2 and h non-composite, or reports that no
// such decomposition exists.  Retries with small random variable shifts plus
// translations when the working hypotheses fail for the given coordinates;
// the shear alone cannot help when numerator and denominator share a multiple
// point on the axis, so retries also move the origin.
Decomposition decompose(const RationalFunction& f, const DecomposeOptions& opts = {});

}  // namespace ratdec
