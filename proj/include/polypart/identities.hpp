#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "polypart/genfun.hpp"
#include "polypart/verification.hpp"

namespace polypart {

enum class IdentityId {
  HigherDiffQ,              // partitions into r-th order binomial coefficients
  HigherDiffFull,           // full product over the higher-difference cone
  NGonQ,
  NGonFull,
  HermiteQ,
  HermiteFull,
  CayleyPolynomialFormula,  // f_{C_j}(1, ..., 1, q) as a signed rational sum
  CayleyRecurrence,
};

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity_id(std::string_view name);
const std::vector<IdentityId>& all_identities();

/// Default truncation order: 30 for univariate identities, 12 otherwise.
int default_order(IdentityId id);

// ---------------------------------------------------------- higher differences

/// 1 / prod_{j=1}^{n} (1 - z^{d_j}), d_j = (C(r+j-2, r-1), ..., r, 1, 0, ..., 0).
RationalGF rhs_higherdiff_full(int r, int n);

/// prod_j 1/(1 - q^{C(j+r-1, r)}) through q^order.
TruncatedSeries rhs_higherdiff_q(int r, int order);

// ----------------------------------------------------------------------- n-gon

/// The two-term z-form, written in Z_j = z_j ... z_n variables.
RationalGF ngon_full_in_Z(int n);
/// Z_j -> z_j z_{j+1} ... z_n.
Substitution ngon_Z_to_z(int n);
/// z_j -> Z_j / Z_{j+1}, z_n -> Z_n.
Substitution ngon_z_to_Z(int n);
RationalGF rhs_ngon_full(int n);
RationalGF rhs_ngon_q(int n);

// --------------------------------------------------------------------- Hermite

RationalGF rhs_hermite_full(int n);
/// q^n/(1-q)^n - n q^{2n-1}/((1-q)^n (1+q)^{n-1}), the second term carried as
/// n q^{2n-1} (1-q)^{n-1} / ((1-q)^n (1-q^2)^{n-1}).
RationalGF rhs_hermite_q(int n);

// ---------------------------------------------------------------------- Cayley

/// Coefficient of q^{2^k - 1} in (1/(1-q)) prod_{m>=0} 1/(1 - q^{2^m}), via
/// series expansion of the truncated product.
BigInt cayley_b(int k);
/// Same number as a running sum of binary partition counts.
BigInt cayley_b_by_binary_partitions(int k);

/// The signed rational sum for f_{C_j}(1, ..., 1, q), expanded in q through
/// order 2^{j-1} + 10. The coefficients above 2^{j-1} must vanish.
TruncatedSeries rhs_cayley_formula(int j);
int cayley_formula_degree(int j);

/// (1 - z_{j-1}) f_j == z_{j-1} (f_{j-1}(z_1..z_{j-2}) - f_{j-1}(z_1..z_{j-3}, z_{j-2} z_{j-1}^2)),
/// both sides exact polynomials.
VerificationReport cayley_recurrence_check(int j, const Settings& settings = {});
VerificationReport cayley_recurrence_check(int j, const MultiPolynomial& f_j, const MultiPolynomial& f_prev,
                                           const Settings& settings = {});

/// f_{C_j} from the oracle.
MultiPolynomial cayley_polynomial(int j);

// ---------------------------------------------------------------------- driver

/// Signed sum of unimodular cone generating functions whose lattice points
/// are the family (higherdiff, ngon, hermite). Throws BadParams otherwise.
RationalGF geometric_gf(const FamilySpec& spec);

/// Checks one identity. Throws BadParams for missing or out-of-range params.
VerificationReport verify(IdentityId id, const Params& params, const Settings& settings);

}  // namespace polypart
