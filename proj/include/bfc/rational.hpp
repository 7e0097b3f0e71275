#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bfc
{

/// Arbitrary-precision rational, always canonical (lowest terms, positive denominator).
class BigRational
{
public:
  BigRational() = default;
  BigRational( long value ) : value_( value ) {}
  BigRational( int value ) : value_( value ) {}
  BigRational( long num, long den );
  explicit BigRational( const mpz_class& integer ) : value_( integer ) {}
  explicit BigRational( mpq_class value );

  /// Parses "num/den", "num" or a plain decimal integer.
  static BigRational parse( std::string_view text );

  /// 2^exponent (exponent may be negative).
  static BigRational pow2( int exponent );

  /// base^exponent for exponent >= 0.
  static BigRational power( const BigRational& base, unsigned exponent );

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn( value_ ) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn( value_ ); }

  double to_double() const { return value_.get_d(); }

  /// "num/den"; integers print with "/1".
  std::string str() const;

  const mpq_class& raw() const { return value_; }

  BigRational& operator+=( const BigRational& o )
  {
    value_ += o.value_;
    return *this;
  }
  BigRational& operator-=( const BigRational& o )
  {
    value_ -= o.value_;
    return *this;
  }
  BigRational& operator*=( const BigRational& o )
  {
    value_ *= o.value_;
    return *this;
  }
  BigRational& operator/=( const BigRational& o );

  friend BigRational operator+( BigRational a, const BigRational& b ) { return a += b; }
  friend BigRational operator-( BigRational a, const BigRational& b ) { return a -= b; }
  friend BigRational operator*( BigRational a, const BigRational& b ) { return a *= b; }
  friend BigRational operator/( BigRational a, const BigRational& b ) { return a /= b; }
  friend BigRational operator-( const BigRational& a ) { return BigRational( mpq_class( -a.value_ ) ); }

  friend bool operator==( const BigRational& a, const BigRational& b ) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>( const BigRational& a, const BigRational& b )
  {
    const int c = cmp( a.value_, b.value_ );
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<( std::ostream& os, const BigRational& r );

private:
  mpq_class value_{ 0 };
};

BigRational abs( const BigRational& r );

} // namespace bfc
