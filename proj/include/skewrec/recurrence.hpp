#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "skewrec/execution.hpp"
#include "skewrec/multipoly.hpp"
#include "skewrec/partition.hpp"
#include "skewrec/tableau.hpp"

namespace skewrec {

/// Monic polynomial in the shift symbol t whose coefficients are
/// polynomials in x_1..x_n. coeffs()[j] is the coefficient of t^j.
class CharPoly {
public:
    /// The constant polynomial 1.
    explicit CharPoly(std::size_t nvars = 1);
    /// Throws unless the leading coefficient is the constant 1.
    static CharPoly from_coeffs(std::vector<MultiPoly> coeffs);
    /// prod (t - x^root), multiplying in one linear factor at a time.
    static CharPoly from_roots(std::size_t nvars, const std::vector<Monomial>& roots);

    std::size_t nvars() const noexcept { return nvars_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<MultiPoly>& coeffs() const noexcept { return coeffs_; }
    const MultiPoly& operator[](std::size_t j) const { return coeffs_.at(j); }

    friend CharPoly operator*(const CharPoly& a, const CharPoly& b);
    friend bool operator==(const CharPoly&, const CharPoly&) = default;

private:
    std::size_t nvars_;
    std::vector<MultiPoly> coeffs_;
};

struct PolyDivision {
    std::vector<MultiPoly> quotient;
    std::vector<MultiPoly> remainder;  ///< empty when the division is exact
};

/// Long division by a monic divisor; exact over the coefficient ring.
PolyDivision divide(const CharPoly& dividend, const CharPoly& divisor);
bool divides(const CharPoly& divisor, const CharPoly& dividend);

std::string to_string(const CharPoly& chi);

/// A stretched family (kappa + k mu)/(lambda + k nu) in n variables.
struct Family {
    Partition kappa;
    Partition lambda;
    Partition mu;
    Partition nu;
    int n = 1;
};

/// The sequence s_{(kappa + k mu)/(lambda + k nu)}(x_1..x_n), indexed by the
/// original k. Terms are computed on demand and cached; term() is safe to
/// call from several threads.
class SchurSequence {
public:
    /// Validates the family: mu must contain nu and some stretch must make
    /// the shapes valid (std::invalid_argument otherwise).
    explicit SchurSequence(Family family);

    const Family& family() const noexcept { return family_; }
    int n() const noexcept { return family_.n; }
    /// First k at which the shape is valid; 0 when kappa already contains lambda.
    int shift() const noexcept { return shift_; }
    /// kappa + shift mu and lambda + shift nu: the family re-indexed from its first valid shape.
    const Partition& effective_kappa() const noexcept { return kappa0_; }
    const Partition& effective_lambda() const noexcept { return lambda0_; }
    /// Index from which the recurrence holds: the stabilization index, or
    /// one past it when mu/nu has no tableau with n letters.
    int start() const noexcept { return start_; }

    SkewShape shape(int k) const;
    const MultiPoly& term(int k) const;
    /// Computes every missing term in [from, to], several k at a time.
    void prefetch(int from, int to, Execution exec = Execution::parallel) const;

private:
    Family family_;
    int shift_ = 0;
    int start_ = 0;
    Partition kappa0_;
    Partition lambda0_;
    mutable std::mutex mutex_;
    mutable std::map<int, MultiPoly> cache_;
};

SchurSequence build_sequence(const Partition& kappa, const Partition& lambda, const Partition& mu,
                             const Partition& nu, int n);

/// Weights of the tableaux of mu/nu in enumeration order (with repeats).
std::vector<Monomial> tableau_roots(const Partition& mu, const Partition& nu, int n);

/// prod over T in T^n_{mu/nu} of (t - x^{w(T)}).
CharPoly char_poly(const Partition& mu, const Partition& nu, int n);

struct VerifyResult {
    bool ok = true;
    int first_index = 0;
    int count = 0;
    std::optional<int> failing_index;
    MultiPoly residual;  ///< sum_j chi_j term(k + j) at the failing index
};

/// Checks sum_j chi_j term(k + j) == 0 exactly for k = from .. from + count - 1.
VerifyResult verify_recurrence(const SchurSequence& seq, const CharPoly& chi, int from, int count,
                               Execution exec = Execution::parallel);

struct MinimalReport {
    CharPoly poly;
    std::vector<Monomial> roots;          ///< root multiset, canonical order
    std::uint64_t seed = 0;
    bool exact_verified = false;          ///< exact annihilation at deg(chi) indices
    int certification_attempts = 0;
    std::vector<std::vector<Integer>> specializations;
    std::vector<int> scalar_degrees;      ///< Berlekamp-Massey degree per specialization
    bool scalar_agrees = false;
    bool permutation_invariant = false;
};

/// Least-degree monic divisor of chi annihilating seq from seq.start().
/// chi must be given as a product of known roots (char_poly output).
MinimalReport minimal_char_poly(const SchurSequence& seq, const std::vector<Monomial>& chi_roots,
                                std::uint64_t seed = 1, int specializations = 3);

/// True when the root multiset is unchanged by every permutation of the variables.
bool permutation_invariant(const std::vector<Monomial>& roots, std::size_t nvars);

/// Shortest recurrence for a scalar sequence, as monic coefficients in
/// ascending order: 1,2,4,8 gives [-2, 1].
std::vector<Rational> berlekamp_massey(const std::vector<Rational>& seq);

/// Weights w of length n with K_{mu/nu,w} > 0 whose sorted form dominates sorted(mu - nu).
std::vector<IntVector> conjectured_W(const Partition& mu, const Partition& nu, int n);

enum class Verdict { supported, refuted, inconclusive };

struct ConjectureReport {
    Family family;
    int start = 0;
    int degree = 0;                  ///< deg chi
    int verified_upto = 0;           ///< last index at which the conjectured product was checked
    int minimal_degree = 0;
    std::vector<IntVector> W;
    bool product_annihilates = false;
    bool multiset_matches = false;
    Verdict verdict = Verdict::inconclusive;
    std::optional<int> refuted_at;
    std::string reason;
    MultiPoly residual;
    std::uint64_t seed = 0;
    MinimalReport minimal;
};

/// "SUPPORTED", "REFUTED-AT(k)" or "INCONCLUSIVE".
std::string verdict_text(const ConjectureReport& report);

ConjectureReport conjecture_check(const Partition& kappa, const Partition& lambda, const Partition& mu,
                                  const Partition& nu, int n, int count, std::uint64_t seed = 1);

struct PolynomialityReport {
    std::vector<Integer> counts;                 ///< |T^n_{k mu/k nu}| for k = 0..kmax
    std::vector<std::vector<Integer>> differences;
    std::optional<int> degree;
    std::vector<Rational> polynomial;            ///< ascending coefficients in k
    bool conclusive = false;
};

PolynomialityReport polynomiality_check(const Partition& mu, const Partition& nu, int n, int kmax);

}  // namespace skewrec
