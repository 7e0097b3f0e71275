#include "bfc/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <stdexcept>

namespace bfc
{

namespace
{

int require_parameter( std::optional<int> p, const char* name, int min_value )
{
  if ( !p )
  {
    throw std::invalid_argument( std::string( name ) + " needs a parameter" );
  }
  if ( *p < min_value )
  {
    throw std::invalid_argument( std::string( name ) + " parameter must be >= " + std::to_string( min_value ) );
  }
  return *p;
}

CoordinateMask mask_of( std::initializer_list<int> one_based )
{
  CoordinateMask m = 0;
  for ( int i : one_based )
  {
    m |= CoordinateMask{ 1 } << ( i - 1 );
  }
  return m;
}

} // namespace

Family parse_family( std::string_view name )
{
  std::string upper( name );
  std::transform( upper.begin(), upper.end(), upper.begin(), []( unsigned char c ) { return std::toupper( c ); } );
  static const std::array<std::pair<const char*, Family>, 10> table{ {
      { "CONST0", Family::Const0 },
      { "CONST1", Family::Const1 },
      { "DICT", Family::Dict },
      { "AND", Family::And },
      { "OR", Family::Or },
      { "PARITY", Family::Parity },
      { "MAJ", Family::Maj },
      { "ADDR", Family::Addr },
      { "MAF", Family::Maf },
      { "KUSHILEVITZ", Family::Kushilevitz },
  } };
  for ( const auto& [n, f] : table )
  {
    if ( upper == n )
    {
      return f;
    }
  }
  throw std::invalid_argument( "unknown family '" + std::string( name ) + "'" );
}

std::string family_name( Family family )
{
  switch ( family )
  {
  case Family::Const0: return "CONST0";
  case Family::Const1: return "CONST1";
  case Family::Dict: return "DICT";
  case Family::And: return "AND";
  case Family::Or: return "OR";
  case Family::Parity: return "PARITY";
  case Family::Maj: return "MAJ";
  case Family::Addr: return "ADDR";
  case Family::Maf: return "MAF";
  case Family::Kushilevitz: return "KUSHILEVITZ";
  }
  return "?";
}

MultilinearPolynomial kushilevitz_polynomial()
{
  MultilinearPolynomial p( Basis::Boolean, 6 );
  for ( int i = 0; i < 6; ++i )
  {
    p.set( CoordinateMask{ 1 } << i, 1 );
  }
  for ( int i = 0; i < 6; ++i )
  {
    for ( int j = i + 1; j < 6; ++j )
    {
      p.set( ( CoordinateMask{ 1 } << i ) | ( CoordinateMask{ 1 } << j ), -1 );
    }
  }
  for ( auto m : { mask_of( { 1, 3, 4 } ), mask_of( { 1, 2, 5 } ), mask_of( { 1, 4, 5 } ), mask_of( { 2, 3, 4 } ),
                   mask_of( { 2, 3, 5 } ), mask_of( { 1, 2, 6 } ), mask_of( { 1, 3, 6 } ), mask_of( { 2, 4, 6 } ),
                   mask_of( { 3, 5, 6 } ), mask_of( { 4, 5, 6 } ) } )
  {
    p.set( m, 1 );
  }
  return p;
}

std::vector<CoordinateMask> maf_selector_subsets( int k )
{
  std::vector<CoordinateMask> out;
  const int h = k / 2;
  for ( CoordinateMask m = 0; m < ( CoordinateMask{ 1 } << k ); ++m )
  {
    if ( std::popcount( m ) == h )
    {
      out.push_back( m );
    }
  }
  // Lexicographic order of the sorted index lists.
  std::sort( out.begin(), out.end(), []( CoordinateMask a, CoordinateMask b ) {
    while ( a && b )
    {
      const int ia = std::countr_zero( a ), ib = std::countr_zero( b );
      if ( ia != ib )
      {
        return ia < ib;
      }
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  } );
  return out;
}

BooleanFunction family( Family fam, std::optional<int> parameter )
{
  switch ( fam )
  {
  case Family::Const0:
    return BooleanFunction( require_parameter( parameter, "CONST0", 0 ) );
  case Family::Const1:
    return BooleanFunction( require_parameter( parameter, "CONST1", 0 ) ).complement();
  case Family::Dict:
  {
    const int n = require_parameter( parameter, "DICT", 1 );
    return BooleanFunction::from_callable( n, []( std::uint32_t x ) { return ( x & 1u ) != 0; } );
  }
  case Family::And:
  {
    const int n = require_parameter( parameter, "AND", 0 );
    const std::uint32_t all = ( std::uint32_t{ 1 } << n ) - 1;
    return BooleanFunction::from_callable( n, [all]( std::uint32_t x ) { return x == all; } );
  }
  case Family::Or:
    return BooleanFunction::from_callable( require_parameter( parameter, "OR", 0 ), []( std::uint32_t x ) { return x != 0; } );
  case Family::Parity:
    return BooleanFunction::from_callable( require_parameter( parameter, "PARITY", 0 ),
                                           []( std::uint32_t x ) { return ( std::popcount( x ) & 1 ) != 0; } );
  case Family::Maj:
  {
    const int n = require_parameter( parameter, "MAJ", 1 );
    if ( n % 2 == 0 )
    {
      throw std::invalid_argument( "MAJ needs odd arity" );
    }
    return BooleanFunction::from_callable( n, [n]( std::uint32_t x ) { return 2 * std::popcount( x ) > n; } );
  }
  case Family::Addr:
  {
    const int k = require_parameter( parameter, "ADDR", 1 );
    if ( k > 4 )
    {
      throw std::invalid_argument( "ADDR arity k + 2^k exceeds " + std::to_string( kMaxArity ) );
    }
    const std::uint32_t addr_mask = ( std::uint32_t{ 1 } << k ) - 1;
    return BooleanFunction::from_callable( k + ( 1 << k ), [k, addr_mask]( std::uint32_t x ) {
      const auto target = x & addr_mask;
      return ( ( x >> ( k + target ) ) & 1u ) != 0;
    } );
  }
  case Family::Maf:
  {
    const int k = require_parameter( parameter, "MAF", 1 );
    if ( k % 2 == 0 )
    {
      throw std::invalid_argument( "MAF needs odd k" );
    }
    const auto subsets = maf_selector_subsets( k );
    const int arity = k + static_cast<int>( subsets.size() );
    if ( arity > kMaxArity )
    {
      throw std::invalid_argument( "MAF arity " + std::to_string( arity ) + " exceeds " + std::to_string( kMaxArity ) );
    }
    const std::uint32_t sel_mask = ( std::uint32_t{ 1 } << k ) - 1;
    return BooleanFunction::from_callable( arity, [&]( std::uint32_t x ) {
      const auto sel = x & sel_mask;
      if ( 2 * std::popcount( sel ) > k )
      {
        return true;
      }
      for ( std::size_t s = 0; s < subsets.size(); ++s )
      {
        if ( ( sel & subsets[s] ) == subsets[s] && ( ( x >> ( k + s ) ) & 1u ) )
        {
          return true;
        }
      }
      return false;
    } );
  }
  case Family::Kushilevitz:
  {
    if ( parameter )
    {
      throw std::invalid_argument( "KUSHILEVITZ takes no parameter" );
    }
    const auto p = kushilevitz_polynomial();
    BooleanFunction f( 6 );
    for ( std::uint32_t x = 0; x < f.size(); ++x )
    {
      const auto v = p.evaluate( x );
      if ( v != BigRational( 0 ) && v != BigRational( 1 ) )
      {
        throw std::logic_error( "KUSHILEVITZ polynomial takes value " + v.str() + " at index " + std::to_string( x ) );
      }
      f.set( x, v == BigRational( 1 ) );
    }
    return f;
  }
  }
  throw std::invalid_argument( "unknown family" );
}

BooleanFunction family( std::string_view name, std::optional<int> parameter )
{
  return family( parse_family( name ), parameter );
}

} // namespace bfc
