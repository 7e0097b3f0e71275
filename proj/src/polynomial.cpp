#include "bfc/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

namespace bfc
{

namespace
{

std::vector<int> indices_of( CoordinateMask m )
{
  std::vector<int> out;
  for ( int i = 0; m; ++i, m >>= 1 )
  {
    if ( m & 1u )
    {
      out.push_back( i );
    }
  }
  return out;
}

} // namespace

BigRational MultilinearPolynomial::coefficient( CoordinateMask monomial ) const
{
  const auto it = coefficients_.find( monomial );
  return it == coefficients_.end() ? BigRational() : it->second;
}

void MultilinearPolynomial::set( CoordinateMask monomial, const BigRational& value )
{
  if ( value.is_zero() )
  {
    coefficients_.erase( monomial );
  }
  else
  {
    coefficients_[monomial] = value;
  }
}

int MultilinearPolynomial::degree() const
{
  int d = 0;
  for ( const auto& [m, c] : coefficients_ )
  {
    d = std::max( d, std::popcount( m ) );
  }
  return d;
}

BigRational MultilinearPolynomial::evaluate( std::uint32_t x ) const
{
  BigRational total;
  for ( const auto& [m, c] : coefficients_ )
  {
    if ( basis_ == Basis::Boolean )
    {
      if ( ( m & x ) == m )
      {
        total += c;
      }
    }
    else
    {
      total += ( std::popcount( m & x ) & 1 ) ? -c : c;
    }
  }
  return total;
}

std::vector<CoordinateMask> MultilinearPolynomial::sorted_monomials() const
{
  std::vector<CoordinateMask> out;
  out.reserve( coefficients_.size() );
  for ( const auto& [m, c] : coefficients_ )
  {
    out.push_back( m );
  }
  std::sort( out.begin(), out.end(), []( CoordinateMask a, CoordinateMask b ) {
    const int pa = std::popcount( a ), pb = std::popcount( b );
    if ( pa != pb )
    {
      return pa < pb;
    }
    return indices_of( a ) < indices_of( b );
  } );
  return out;
}

void mobius_in_place( std::vector<std::int64_t>& values, int arity )
{
  for ( int i = 0; i < arity; ++i )
  {
    const std::uint32_t bit = std::uint32_t{ 1 } << i;
    for ( std::uint32_t s = 0; s < values.size(); ++s )
    {
      if ( s & bit )
      {
        values[s] -= values[s ^ bit];
      }
    }
  }
}

std::vector<std::int64_t> mobius_coefficients( const BooleanFunction& f )
{
  std::vector<std::int64_t> c( f.size() );
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    c[x] = f( x ) ? 1 : 0;
  }
  mobius_in_place( c, f.arity() );
  return c;
}

std::vector<std::int64_t> walsh_coefficients( const BooleanFunction& f )
{
  std::vector<std::int64_t> w( f.size() );
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    w[x] = f( x ) ? -1 : 1;
  }
  for ( int i = 0; i < f.arity(); ++i )
  {
    const std::uint32_t bit = std::uint32_t{ 1 } << i;
    for ( std::uint32_t s = 0; s < w.size(); ++s )
    {
      if ( !( s & bit ) )
      {
        const auto a = w[s], b = w[s | bit];
        w[s] = a + b;
        w[s | bit] = a - b;
      }
    }
  }
  return w;
}

MultilinearPolynomial mobius_transform( const BooleanFunction& f )
{
  MultilinearPolynomial p( Basis::Boolean, f.arity() );
  const auto c = mobius_coefficients( f );
  for ( std::uint32_t s = 0; s < c.size(); ++s )
  {
    if ( c[s] != 0 )
    {
      p.set( s, BigRational( static_cast<long>( c[s] ) ) );
    }
  }
  return p;
}

MultilinearPolynomial fourier_transform( const BooleanFunction& f )
{
  MultilinearPolynomial p( Basis::Sign, f.arity() );
  const auto w = walsh_coefficients( f );
  const long scale = 1L << f.arity();
  for ( std::uint32_t s = 0; s < w.size(); ++s )
  {
    if ( w[s] != 0 )
    {
      p.set( s, BigRational( static_cast<long>( w[s] ), scale ) );
    }
  }
  return p;
}

MultilinearPolynomial substitute( const MultilinearPolynomial& p, const PartialAssignment& a )
{
  if ( p.basis() != Basis::Boolean )
  {
    throw std::invalid_argument( "substitute: only the {0,1} basis is supported" );
  }
  a.validate( p.arity() );
  const auto fixed = a.mask();
  const auto values = a.values();
  const CoordinateMask free_mask = ( ( CoordinateMask{ 1 } << p.arity() ) - 1 ) & ~fixed;

  std::map<CoordinateMask, BigRational> acc;
  for ( const auto& [m, c] : p.coefficients() )
  {
    // x_j = 0 kills the monomial; x_j = 1 drops the factor.
    if ( ( m & fixed & ~values ) != 0 )
    {
      continue;
    }
    CoordinateMask packed = 0;
    int pos = 0;
    for ( CoordinateMask rest = free_mask; rest; rest &= rest - 1, ++pos )
    {
      if ( m & rest & ( ~rest + 1 ) )
      {
        packed |= CoordinateMask{ 1 } << pos;
      }
    }
    acc[packed] += c;
  }
  MultilinearPolynomial out( Basis::Boolean, p.arity() - static_cast<int>( a.size() ) );
  for ( const auto& [m, c] : acc )
  {
    out.set( m, c );
  }
  return out;
}

std::string format_monomial( CoordinateMask monomial )
{
  if ( monomial == 0 )
  {
    return "empty";
  }
  std::string s;
  for ( int i : indices_of( monomial ) )
  {
    if ( !s.empty() )
    {
      s += ',';
    }
    s += std::to_string( i + 1 );
  }
  return s;
}

void write_polynomial( std::ostream& out, const MultilinearPolynomial& p )
{
  for ( auto m : p.sorted_monomials() )
  {
    out << "S=" << format_monomial( m ) << "  c=" << p.coefficient( m ) << '\n';
  }
}

} // namespace bfc
