#pragma once

#include "qfock/context.hpp"
#include "qfock/gram.hpp"
#include "qfock/polynomial.hpp"

namespace qfock {

/// H_{p,r}(z, zbar) = p! r! sum_k (-1)^k / k! z^{p-k}/(p-k)! zbar^{r-k}/(r-k)!.
ZBarBasisPoly complex_hermite(int p, int r);

/**
 * Gaussian inner product int_C f conj(g) e^{-|z|^2} dx dy, evaluated exactly
 * from the moment rule int z^a zbar^b e^{-|z|^2} = pi a! delta_{ab}.
 */
cplx gaussian_inner(const ZBarBasisPoly& f, const ZBarBasisPoly& g);

/// Expand a (z, zbar) polynomial over H_{p,r}, using
///   z^p zbar^r = sum_k k! C(p,k) C(r,k) H_{p-k, r-k}.
HermiteExpansion to_hermite_expansion(const ZBarBasisPoly& f);
/// Sum c_{p,r} H_{p,r} back in the (z, zbar) basis.
ZBarBasisPoly from_hermite_expansion(const HermiteExpansion& h);

/**
 * Gram matrix of the mixed q-monomials {z_q^k zbar_q^h : k + h <= N} under
 * gaussian_inner. Labels are "k,h"; ordering is by total degree, then k
 * descending. No target is attached; rank and the smallest eigenvalue carry
 * the linear-independence verdict.
 */
GramReport mixed_basis_gram(int N, const QContext& ctx);

/// The same family at q = 1, i.e. {z^k zbar^h}, for q -> 1 comparisons.
GramReport classical_monomial_gram(int N);

}  // namespace qfock
