#pragma once

#include <utility>
#include <vector>

#include "logbps/combinatorics.hpp"
#include "logbps/polynomial.hpp"

namespace logbps {

// Circle-action localization on the moduli of degree-d relative covers of
// P^1 fully ramified over 0 and infinity. Fixed loci are indexed by the
// partitions of d: the one-part partition is the isolated Galois cover, and a
// partition with k >= 2 parts is a rubber stratum whose contribution carries
// a relative psi-class integral. The lift of the action to O(1) is classified
// by an integer m (fiber weights (m+1, m) over the two fixed points);
// m = 1 - s kills every rubber stratum, while m = 1 matches the geometric
// normal-bundle action used for the k >= 2 strata.

/// Weights of the lifted action on H^1(P^1, h^* O(-1)): the d-1 values
/// -(j/d + m) for j = 1..d-1. Empty for d = 1.
std::vector<Rational> obstruction_weights(int d, long m);

/// Product of the obstruction weights in closed form:
/// ((-1)^{d-1} / d^{d-1}) * prod_{j=1}^{d-1} (j + m*d).
Rational ob_weight_product(int d, long m);

/// Localization contribution of the deformation space of the Galois cover:
/// d! / d^{d-1}.
Rational def_contribution(int d);

/// Contribution of the d-fold Galois cover for lift weight m:
/// (1/d) * ob_weight_product(d, m) / def_contribution(d)
///   = ((-1)^{d-1}/d^2) binom(d(m+1)-1, d-1) = (1/d^2) binom(-md-1, d-1).
Rational galois_cover_contribution(int d, long m);

/// Genus-0 psi-class integral over the moduli of (n = exponents.size())-marked
/// rational curves: multinomial (n-3)! / prod(a_i!) when sum(a_i) = n-3, else
/// zero. Requires n >= 3.
Rational genus0_psi_integral(const std::vector<int>& exponents);

/// Integral of psi^{k-2} over the rubber stratum of a k-part partition with
/// the marked points ORDERED, as a polynomial in the tangency symbol s:
/// (d*s)^{k-2}, where d is the partition total and the underlying moduli
/// integral int_{M_{0,k+1}} psi^{k-2} = 1 is supplied by genus0_psi_integral.
///
/// Ordering convention: the symmetry factor 1/|Aut(P)| is applied once, in
/// partition_contribution, and never here. This is the unique reading that
/// reproduces the d = 2, 3 stratum values and the closed form for all d.
/// Requires k >= 2 (the k = 1 Galois point is handled separately).
Polynomial relative_psi_integral(const Partition& p);

/// Full contribution of the rubber stratum of partition P (k >= 2 parts):
/// (s / |Aut(P)|) * relative_psi_integral(P)
///   * prod_i ((-1)^{d_i - 1}/d_i) binom(2 d_i - 1, d_i - 1),
/// the per-part factor being d_i times the m = 1 Galois contribution.
Polynomial partition_contribution(const Partition& p);

/// Per-stratum ledger for the localization sum at degree d.
struct LocalizationReport {
    int d = 0;
    /// One entry per partition, in enumeration order; the one-part entry is
    /// the Galois cover (a constant polynomial).
    std::vector<std::pair<Partition, Polynomial>> terms;
    Polynomial total;        ///< sum of all term polynomials
    Polynomial closed_form;  ///< poly_binomial_in_s(d)
    bool match = false;      ///< total == closed_form, coefficient by coefficient
};

/// Assembles the full localization sum at degree d and compares it, as an
/// exact polynomial identity in s, against the closed form.
LocalizationReport mc_localization(int d);

struct DegreeTermEntry {
    int k = 0;
    Polynomial term;                 ///< sum over partitions into k+1 parts
    bool homogeneous = false;        ///< term has degree-k monomials only
    bool matches_closed_form = false;///< term equals the degree-k monomial of the closed form
};

/// Splits the localization sum by parts count: entry k is the sum of the
/// contributions of all partitions of d into exactly k+1 parts (the Galois
/// term at k = 0). Each entry records whether the sum is homogeneous of
/// degree k in s and whether it equals the degree-k term of the closed form.
std::vector<DegreeTermEntry> degree_term_decomposition(int d);

}  // namespace logbps
