#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "bfc/boolean_function.hpp"
#include "bfc/rational.hpp"

namespace bfc
{

enum class Basis
{
  /// Monomials prod_{i in S} x_i over x in {0,1}^n.
  Boolean,
  /// Characters prod_{i in S} x_i over x in {+1,-1}^n, with bit 0 -> +1 and bit 1 -> -1.
  Sign
};

/// Sparse multilinear polynomial: coordinate subset (bitmask) -> coefficient.
/// Zero coefficients are never stored.
class MultilinearPolynomial
{
public:
  MultilinearPolynomial( Basis basis, int arity ) : basis_( basis ), arity_( arity ) {}

  Basis basis() const { return basis_; }
  int arity() const { return arity_; }

  const std::map<CoordinateMask, BigRational>& coefficients() const { return coefficients_; }
  BigRational coefficient( CoordinateMask monomial ) const;
  void set( CoordinateMask monomial, const BigRational& value );

  /// Largest monomial size with nonzero coefficient; 0 for the zero polynomial.
  int degree() const;

  /// Value at the cube point with table index x (interpreted in this basis).
  BigRational evaluate( std::uint32_t x ) const;

  /// Monomials sorted by (size, lexicographic order of their sorted 1-based index lists).
  std::vector<CoordinateMask> sorted_monomials() const;

  friend bool operator==( const MultilinearPolynomial&, const MultilinearPolynomial& ) = default;

private:
  Basis basis_;
  int arity_;
  std::map<CoordinateMask, BigRational> coefficients_;
};

/// Integer Moebius coefficients c_S indexed by subset mask (dense, length 2^n).
std::vector<std::int64_t> mobius_coefficients( const BooleanFunction& f );

/// Unnormalised Walsh coefficients W(S) = sum_x (-1)^{f(x) + |x & S|}; fhat(S) = W(S) / 2^n.
std::vector<std::int64_t> walsh_coefficients( const BooleanFunction& f );

/// In-place Moebius transform of an integer table indexed by subset mask.
void mobius_in_place( std::vector<std::int64_t>& values, int arity );

MultilinearPolynomial mobius_transform( const BooleanFunction& f );
MultilinearPolynomial fourier_transform( const BooleanFunction& f );

/// Symbolic substitution of a partial assignment into a {0,1}-basis polynomial,
/// renumbering the surviving coordinates in order.
MultilinearPolynomial substitute( const MultilinearPolynomial& p, const PartialAssignment& a );

/// "1,3,4" (1-based) or "empty".
std::string format_monomial( CoordinateMask monomial );

/// One line per monomial: "S=<indices>  c=<num>/<den>", in sorted_monomials() order.
void write_polynomial( std::ostream& out, const MultilinearPolynomial& p );

} // namespace bfc
