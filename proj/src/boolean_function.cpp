#include "bfc/boolean_function.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace bfc
{

namespace
{

void check_arity( int arity )
{
  if ( arity < 0 || arity > kMaxArity )
  {
    throw std::invalid_argument( "arity " + std::to_string( arity ) + " outside [0, " + std::to_string( kMaxArity ) + "]" );
  }
}

std::size_t word_count( int arity )
{
  return arity <= 6 ? 1u : ( std::size_t{ 1 } << ( arity - 6 ) );
}

} // namespace

BooleanFunction::BooleanFunction( int arity ) : arity_( arity )
{
  check_arity( arity );
  words_.assign( word_count( arity ), 0u );
}

BooleanFunction BooleanFunction::from_table( int arity, std::span<const bool> table )
{
  BooleanFunction f( arity );
  if ( table.size() != f.size() )
  {
    throw std::invalid_argument( "table length " + std::to_string( table.size() ) + " != 2^" + std::to_string( arity ) );
  }
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    f.set( x, table[x] );
  }
  return f;
}

BooleanFunction BooleanFunction::from_string( std::string_view bits )
{
  const auto len = bits.size();
  if ( len == 0 || !std::has_single_bit( len ) )
  {
    throw std::invalid_argument( "truth table length must be a power of two" );
  }
  const int arity = std::countr_zero( len );
  BooleanFunction f( arity );
  for ( std::uint32_t x = 0; x < len; ++x )
  {
    if ( bits[x] != '0' && bits[x] != '1' )
    {
      throw std::invalid_argument( "truth table contains a character other than 0/1" );
    }
    f.set( x, bits[x] == '1' );
  }
  return f;
}

BooleanFunction BooleanFunction::from_callable( int arity, const std::function<bool( std::uint32_t )>& fn )
{
  BooleanFunction f( arity );
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    f.set( x, fn( x ) );
  }
  return f;
}

BooleanFunction BooleanFunction::from_word( int arity, std::uint64_t bits )
{
  if ( arity > 6 )
  {
    throw std::invalid_argument( "from_word needs arity <= 6" );
  }
  BooleanFunction f( arity );
  const auto n = f.size();
  f.words_[0] = n == 64 ? bits : ( bits & ( ( std::uint64_t{ 1 } << n ) - 1 ) );
  return f;
}

void BooleanFunction::set( std::uint32_t index, bool value )
{
  const auto bit = std::uint64_t{ 1 } << ( index & 63 );
  if ( value )
  {
    words_[index >> 6] |= bit;
  }
  else
  {
    words_[index >> 6] &= ~bit;
  }
}

bool BooleanFunction::evaluate( std::span<const int> x ) const
{
  if ( static_cast<int>( x.size() ) != arity_ )
  {
    throw std::invalid_argument( "input length " + std::to_string( x.size() ) + " does not match arity " + std::to_string( arity_ ) );
  }
  std::uint32_t index = 0;
  for ( int i = 0; i < arity_; ++i )
  {
    if ( x[i] != 0 && x[i] != 1 )
    {
      throw std::invalid_argument( "input bits must be 0 or 1" );
    }
    index |= static_cast<std::uint32_t>( x[i] ) << i;
  }
  return ( *this )( index );
}

std::uint32_t BooleanFunction::count_ones() const
{
  std::uint32_t total = 0;
  for ( auto w : words_ )
  {
    total += std::popcount( w );
  }
  return total;
}

bool BooleanFunction::is_constant() const
{
  const auto ones = count_ones();
  return ones == 0 || ones == size();
}

std::string BooleanFunction::table_string() const
{
  std::string s( size(), '0' );
  for ( std::uint32_t x = 0; x < size(); ++x )
  {
    if ( ( *this )( x ) )
    {
      s[x] = '1';
    }
  }
  return s;
}

BooleanFunction BooleanFunction::complement() const
{
  BooleanFunction g( *this );
  for ( auto& w : g.words_ )
  {
    w = ~w;
  }
  if ( arity_ < 6 )
  {
    g.words_[0] &= ( std::uint64_t{ 1 } << size() ) - 1;
  }
  return g;
}

std::size_t BooleanFunctionHash::operator()( const BooleanFunction& f ) const
{
  std::size_t h = std::hash<int>{}( f.arity() );
  for ( auto w : f.words() )
  {
    h ^= std::hash<std::uint64_t>{}( w ) + 0x9e3779b97f4a7c15ull + ( h << 6 ) + ( h >> 2 );
  }
  return h;
}

PartialAssignment::PartialAssignment( std::initializer_list<std::pair<Coordinate, bool>> items ) : items_( items ) {}

PartialAssignment::PartialAssignment( std::vector<std::pair<Coordinate, bool>> items ) : items_( std::move( items ) ) {}

PartialAssignment PartialAssignment::from_mask( CoordinateMask mask, std::uint32_t values )
{
  std::vector<std::pair<Coordinate, bool>> items;
  for ( int i = 0; mask >> i; ++i )
  {
    if ( ( mask >> i ) & 1u )
    {
      items.emplace_back( i, ( values >> i ) & 1u );
    }
  }
  return PartialAssignment( std::move( items ) );
}

CoordinateMask PartialAssignment::mask() const
{
  CoordinateMask m = 0;
  for ( const auto& [i, b] : items_ )
  {
    m |= CoordinateMask{ 1 } << i;
  }
  return m;
}

std::uint32_t PartialAssignment::values() const
{
  std::uint32_t v = 0;
  for ( const auto& [i, b] : items_ )
  {
    if ( b )
    {
      v |= std::uint32_t{ 1 } << i;
    }
  }
  return v;
}

void PartialAssignment::validate( int arity ) const
{
  CoordinateMask seen = 0;
  for ( const auto& [i, b] : items_ )
  {
    if ( i < 0 || i >= arity )
    {
      throw std::invalid_argument( "assignment coordinate " + std::to_string( i + 1 ) + " outside arity " + std::to_string( arity ) );
    }
    if ( ( seen >> i ) & 1u )
    {
      throw std::invalid_argument( "duplicate assignment coordinate " + std::to_string( i + 1 ) );
    }
    seen |= CoordinateMask{ 1 } << i;
  }
}

std::uint32_t deposit_bits( std::uint32_t value, CoordinateMask free_mask )
{
  std::uint32_t out = 0;
  for ( CoordinateMask m = free_mask; m; m &= m - 1 )
  {
    if ( value & 1u )
    {
      out |= m & ( ~m + 1 );
    }
    value >>= 1;
  }
  return out;
}

BooleanFunction restrict( const BooleanFunction& f, const PartialAssignment& a )
{
  a.validate( f.arity() );
  const auto fixed = a.mask();
  const auto values = a.values();
  const int n = f.arity();
  const CoordinateMask all = n == 32 ? ~0u : ( ( CoordinateMask{ 1 } << n ) - 1 );
  const CoordinateMask free_mask = all & ~fixed;
  BooleanFunction g( n - static_cast<int>( a.size() ) );
  for ( std::uint32_t y = 0; y < g.size(); ++y )
  {
    g.set( y, f( deposit_bits( y, free_mask ) | values ) );
  }
  return g;
}

BooleanFunction restrict( const BooleanFunction& f, Coordinate j, bool b )
{
  return restrict( f, PartialAssignment{ { j, b } } );
}

CoordinateMask relevant_mask( const BooleanFunction& f )
{
  CoordinateMask mask = 0;
  const int n = f.arity();
  for ( int i = 0; i < n; ++i )
  {
    const std::uint32_t bit = std::uint32_t{ 1 } << i;
    for ( std::uint32_t x = 0; x < f.size(); ++x )
    {
      if ( !( x & bit ) && f( x ) != f( x | bit ) )
      {
        mask |= bit;
        break;
      }
    }
  }
  return mask;
}

std::vector<Coordinate> relevant_variables( const BooleanFunction& f )
{
  std::vector<Coordinate> out;
  const auto mask = relevant_mask( f );
  for ( int i = 0; i < f.arity(); ++i )
  {
    if ( ( mask >> i ) & 1u )
    {
      out.push_back( i );
    }
  }
  return out;
}

bool is_relevant( const BooleanFunction& f, Coordinate i )
{
  const std::uint32_t bit = std::uint32_t{ 1 } << i;
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    if ( !( x & bit ) && f( x ) != f( x | bit ) )
    {
      return true;
    }
  }
  return false;
}

int num_relevant( const BooleanFunction& f )
{
  return std::popcount( relevant_mask( f ) );
}

bool is_monotone( const BooleanFunction& f )
{
  const int n = f.arity();
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    if ( !f( x ) )
    {
      continue;
    }
    for ( int i = 0; i < n; ++i )
    {
      const std::uint32_t bit = std::uint32_t{ 1 } << i;
      if ( !( x & bit ) && !f( x | bit ) )
      {
        return false;
      }
    }
  }
  return true;
}

BooleanFunction compose( const BooleanFunction& f, const BooleanFunction& g )
{
  const int n = f.arity();
  const int m = g.arity();
  if ( n * m > kMaxArity )
  {
    throw std::invalid_argument( "composition arity " + std::to_string( n * m ) + " exceeds " + std::to_string( kMaxArity ) );
  }
  const std::uint32_t block_mask = ( std::uint32_t{ 1 } << m ) - 1;
  return BooleanFunction::from_callable( n * m, [&]( std::uint32_t x ) {
    std::uint32_t outer = 0;
    for ( int j = 0; j < n; ++j )
    {
      if ( g( ( x >> ( j * m ) ) & block_mask ) )
      {
        outer |= std::uint32_t{ 1 } << j;
      }
    }
    return f( outer );
  } );
}

BooleanFunction monotone_closure( const BooleanFunction& f )
{
  BooleanFunction g( f );
  const int n = f.arity();
  // Superset sweep: after pass i, g(x) = OR of f over all y below x differing only in coordinates < i+1.
  for ( int i = 0; i < n; ++i )
  {
    const std::uint32_t bit = std::uint32_t{ 1 } << i;
    for ( std::uint32_t x = 0; x < g.size(); ++x )
    {
      if ( ( x & bit ) && g( x ^ bit ) )
      {
        g.set( x, true );
      }
    }
  }
  return g;
}

BooleanFunction translate( const BooleanFunction& f, std::uint32_t shift )
{
  return BooleanFunction::from_callable( f.arity(), [&]( std::uint32_t x ) { return f( x ^ shift ); } );
}

BooleanFunction read_truth_table( std::istream& in )
{
  std::string header;
  if ( !std::getline( in, header ) )
  {
    throw std::invalid_argument( "truth table: missing header line" );
  }
  if ( !header.empty() && header.back() == '\r' )
  {
    header.pop_back();
  }
  if ( header.rfind( "n=", 0 ) != 0 )
  {
    throw std::invalid_argument( "truth table: header must be 'n=<arity>'" );
  }
  int arity = 0;
  try
  {
    std::size_t used = 0;
    arity = std::stoi( header.substr( 2 ), &used );
    if ( used != header.size() - 2 )
    {
      throw std::invalid_argument( "trailing characters" );
    }
  }
  catch ( const std::exception& )
  {
    throw std::invalid_argument( "truth table: bad arity in '" + header + "'" );
  }
  check_arity( arity );
  std::string bits;
  std::getline( in, bits );
  if ( !bits.empty() && bits.back() == '\r' )
  {
    bits.pop_back();
  }
  if ( bits.size() != ( std::size_t{ 1 } << arity ) )
  {
    throw std::invalid_argument( "truth table: expected " + std::to_string( std::size_t{ 1 } << arity ) + " bits, got " + std::to_string( bits.size() ) );
  }
  std::string rest;
  while ( std::getline( in, rest ) )
  {
    if ( !rest.empty() && rest != "\r" )
    {
      throw std::invalid_argument( "truth table: unexpected trailing content" );
    }
  }
  return BooleanFunction::from_string( bits );
}

BooleanFunction read_truth_table_file( const std::string& path )
{
  std::ifstream in( path );
  if ( !in )
  {
    throw std::runtime_error( "cannot open " + path );
  }
  return read_truth_table( in );
}

void write_truth_table( std::ostream& out, const BooleanFunction& f )
{
  out << "n=" << f.arity() << '\n' << f.table_string() << '\n';
}

} // namespace bfc
