#pragma once

#include <vector>

#include "skewrec/execution.hpp"
#include "skewrec/multipoly.hpp"
#include "skewrec/partition.hpp"
#include "skewrec/tableau.hpp"

namespace skewrec {

/// x^{w(t)}: the weight monomial of a tableau in t.alphabet() variables.
MultiPoly phi(const Tableau& t);

/// Skew Schur polynomial s_{outer/inner}(x_1..x_n): the sum of x^{w(T)} over
/// all semistandard tableaux of the shape. Computed letter by letter as a
/// chain of horizontal strips, with the strips ending in each intermediate
/// shape gathered in one pass (OpenMP over intermediate shapes).
MultiPoly skew_schur(const SkewShape& shape, int n, Execution exec = Execution::parallel);

/// Same polynomial from the Jacobi-Trudi determinant det[h_{outer_i - inner_j - i + j}].
MultiPoly skew_schur_jacobi_trudi(const SkewShape& shape, int n);

/// Complete homogeneous symmetric polynomials h_0..h_kmax in n variables,
/// built one variable at a time: h_k(x_1..x_m) = sum_j x_m^j h_{k-j}(x_1..x_{m-1}).
/// Instances are not shared between threads.
class CompleteHomogeneous {
public:
    explicit CompleteHomogeneous(int n);
    const MultiPoly& operator()(int k);
    int variables() const noexcept { return n_; }

private:
    int n_;
    std::vector<MultiPoly> cache_;
};

/// m_lambda(x_1..x_n): sum of x^w over the distinct rearrangements w of lambda.
MultiPoly monomial_symmetric(const Partition& lambda, int n);

/// True when p is invariant under every transposition of adjacent variables.
bool is_symmetric(const MultiPoly& p);

}  // namespace skewrec
