#include "bfc/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace bfc
{

BigRational::BigRational( long num, long den )
{
  if ( den == 0 )
  {
    throw std::domain_error( "BigRational: zero denominator" );
  }
  value_ = mpq_class( num, den );
  value_.canonicalize();
}

BigRational::BigRational( mpq_class value ) : value_( std::move( value ) )
{
  value_.canonicalize();
}

BigRational BigRational::parse( std::string_view text )
{
  const std::string s( text );
  if ( s.empty() )
  {
    throw std::invalid_argument( "BigRational: empty string" );
  }
  mpq_class q;
  if ( q.set_str( s, 10 ) != 0 )
  {
    throw std::invalid_argument( "BigRational: cannot parse '" + s + "'" );
  }
  if ( q.get_den() == 0 )
  {
    throw std::domain_error( "BigRational: zero denominator in '" + s + "'" );
  }
  q.canonicalize();
  return BigRational( std::move( q ) );
}

BigRational BigRational::pow2( int exponent )
{
  mpz_class p( 1 );
  const unsigned e = static_cast<unsigned>( exponent < 0 ? -exponent : exponent );
  mpz_mul_2exp( p.get_mpz_t(), p.get_mpz_t(), e );
  if ( exponent >= 0 )
  {
    return BigRational( p );
  }
  return BigRational( mpq_class( mpz_class( 1 ), p ) );
}

BigRational BigRational::power( const BigRational& base, unsigned exponent )
{
  mpz_class num, den;
  mpz_pow_ui( num.get_mpz_t(), base.value_.get_num_mpz_t(), exponent );
  mpz_pow_ui( den.get_mpz_t(), base.value_.get_den_mpz_t(), exponent );
  return BigRational( mpq_class( num, den ) );
}

BigRational& BigRational::operator/=( const BigRational& o )
{
  if ( o.is_zero() )
  {
    throw std::domain_error( "BigRational: division by zero" );
  }
  value_ /= o.value_;
  return *this;
}

std::string BigRational::str() const
{
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<( std::ostream& os, const BigRational& r )
{
  return os << r.str();
}

BigRational abs( const BigRational& r )
{
  return r.sign() < 0 ? -r : r;
}

} // namespace bfc
