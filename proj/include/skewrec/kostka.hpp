#pragma once

#include <map>
#include <optional>

#include "skewrec/multipoly.hpp"
#include "skewrec/partition.hpp"
#include "skewrec/tableau.hpp"

namespace skewrec {

/// Number of semistandard tableaux of `shape` with weight w, letters 1..|w|.
/// Zero when |w| differs from the number of ordinary boxes.
Integer kostka(const SkewShape& shape, const IntVector& w);

/// First tableau of weight w in enumeration order, if any.
std::optional<Tableau> first_tableau_with_weight(const SkewShape& shape, const IntVector& w);

/// Coefficients K_{shape,p} of s_shape = sum_p K_{shape,p} m_p over
/// partitions p with at most n parts; zero coefficients are omitted.
std::map<Partition, Integer> schur_in_m_basis(const SkewShape& shape, int n);

/// The k-fold insertion power of the first tableau of weight w: a tableau of
/// shape k*outer/k*inner and weight k*w. Throws std::invalid_argument when
/// no tableau of weight w exists.
Tableau stretch_positivity_check(const SkewShape& shape, const IntVector& w, int k);

}  // namespace skewrec
