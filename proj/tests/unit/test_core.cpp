#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "bfc/families.hpp"
#include "bfc/measures.hpp"
#include "bfc/polynomial.hpp"
#include "oracles.hpp"

using namespace bfc;

namespace
{

BooleanFunction tt( const char* bits ) { return BooleanFunction::from_string( bits ); }

std::vector<BooleanFunction> all_functions( int n )
{
  std::vector<BooleanFunction> out;
  for ( std::uint64_t w = 0; w < ( std::uint64_t{ 1 } << ( 1u << n ) ); ++w )
  {
    out.push_back( BooleanFunction::from_word( n, w ) );
  }
  return out;
}

} // namespace

TEST( BigRational, CanonicalForm )
{
  const BigRational a( 6, -4 );
  EXPECT_EQ( a.str(), "-3/2" );
  EXPECT_EQ( BigRational::parse( "10/4" ), BigRational( 5, 2 ) );
  EXPECT_EQ( BigRational::parse( "7" ).str(), "7/1" );
  EXPECT_EQ( BigRational::pow2( -3 ), BigRational( 1, 8 ) );
  EXPECT_EQ( BigRational::power( BigRational( 2, 3 ), 3 ), BigRational( 8, 27 ) );
  EXPECT_THROW( BigRational( 1, 0 ), std::domain_error );
  EXPECT_THROW( BigRational::parse( "1/x" ), std::invalid_argument );
  EXPECT_LT( BigRational( 1, 3 ), BigRational( 1, 2 ) );
}

TEST( BooleanFunction, EvaluateFollowsIndexConvention )
{
  const auto or2 = family( "OR", 2 );
  EXPECT_FALSE( or2.evaluate( std::vector<int>{ 0, 0 } ) );
  EXPECT_TRUE( or2.evaluate( std::vector<int>{ 1, 0 } ) );
  EXPECT_TRUE( family( "PARITY", 3 ).evaluate( std::vector<int>{ 1, 1, 1 } ) );
  EXPECT_THROW( or2.evaluate( std::vector<int>{ 1 } ), std::invalid_argument );
  // Coordinate 0 is the low index bit.
  const auto dict = family( "DICT", 2 );
  EXPECT_EQ( dict.table_string(), "0101" );
}

TEST( BooleanFunction, TruthTableRoundTrip )
{
  std::mt19937_64 rng( 7 );
  for ( int n = 0; n <= 7; ++n )
  {
    const auto f = oracle::random_function( n, rng );
    std::stringstream ss;
    write_truth_table( ss, f );
    EXPECT_EQ( read_truth_table( ss ), f );
  }
  std::istringstream bad( "n=2\n010\n" );
  EXPECT_THROW( read_truth_table( bad ), std::invalid_argument );
}

TEST( BooleanFunction, RestrictExamples )
{
  const auto or2 = family( "OR", 2 );
  EXPECT_EQ( restrict( or2, 1, true ), family( "CONST1", 1 ) );
  EXPECT_EQ( restrict( or2, 1, false ), family( "DICT", 1 ) );
  EXPECT_EQ( restrict( family( "MAJ", 3 ), 2, true ), or2 );
  EXPECT_THROW( restrict( or2, PartialAssignment{ { 0, true }, { 0, false } } ), std::invalid_argument );
  EXPECT_THROW( restrict( or2, 2, true ), std::invalid_argument );
}

TEST( BooleanFunction, RestrictionIsSubsampling )
{
  std::mt19937_64 rng( 11 );
  for ( int trial = 0; trial < 200; ++trial )
  {
    const int n = 1 + static_cast<int>( rng() % 6 );
    const auto f = oracle::random_function( n, rng );
    const CoordinateMask mask = static_cast<CoordinateMask>( rng() ) & ( ( 1u << n ) - 1 );
    const std::uint32_t vals = static_cast<std::uint32_t>( rng() ) & mask;
    const auto g = restrict( f, PartialAssignment::from_mask( mask, vals ) );
    ASSERT_EQ( g.arity(), n - std::popcount( mask ) );
    const CoordinateMask free = ( ( 1u << n ) - 1 ) & ~mask;
    for ( std::uint32_t y = 0; y < g.size(); ++y )
    {
      // Spread y over the free coordinates by hand.
      std::uint32_t x = vals;
      int k = 0;
      for ( int i = 0; i < n; ++i )
      {
        if ( ( free >> i ) & 1u )
        {
          x |= ( ( y >> k++ ) & 1u ) << i;
        }
      }
      ASSERT_EQ( g( y ), f( x ) );
    }
  }
}

TEST( BooleanFunction, RelevantVariables )
{
  EXPECT_EQ( num_relevant( family( "CONST0", 5 ) ), 0 );
  EXPECT_EQ( relevant_variables( family( "OR", 2 ) ), ( std::vector<Coordinate>{ 0, 1 } ) );
  EXPECT_EQ( num_relevant( family( "MAF", 3 ) ), 6 );
  EXPECT_EQ( num_relevant( family( "ADDR", 2 ) ), 6 );
  std::mt19937_64 rng( 3 );
  for ( int trial = 0; trial < 100; ++trial )
  {
    const auto f = oracle::random_function( 1 + static_cast<int>( rng() % 6 ), rng );
    EXPECT_EQ( num_relevant( f ), oracle::num_relevant( f ) );
  }
}

TEST( BooleanFunction, Monotonicity )
{
  EXPECT_TRUE( is_monotone( family( "AND", 3 ) ) );
  EXPECT_FALSE( is_monotone( family( "PARITY", 2 ) ) );
  EXPECT_TRUE( is_monotone( family( "MAF", 3 ) ) );
  EXPECT_TRUE( is_monotone( family( "MAF", 5 ) ) );
  for ( const auto& f : all_functions( 3 ) )
  {
    ASSERT_EQ( is_monotone( f ), oracle::is_monotone( f ) );
    const auto g = monotone_closure( f );
    ASSERT_TRUE( oracle::is_monotone( g ) );
    for ( std::uint32_t x = 0; x < f.size(); ++x )
    {
      ASSERT_LE( f( x ), g( x ) );
    }
  }
}

TEST( BooleanFunction, Compose )
{
  const auto p2 = family( "PARITY", 2 );
  EXPECT_EQ( compose( p2, p2 ), family( "PARITY", 4 ) );
  EXPECT_EQ( degree( compose( family( "OR", 2 ), family( "AND", 2 ) ) ), 4 );
  const auto maj = family( "MAJ", 3 );
  EXPECT_EQ( compose( family( "DICT", 1 ), maj ), maj );
  EXPECT_THROW( compose( family( "AND", 5 ), family( "AND", 5 ) ), std::invalid_argument );
}

TEST( BooleanFunction, ComposeMultipliesDegree )
{
  // Every pair on at most 3 inputs, up to the 20-input cap, sampled over all tables of size <= 2.
  std::vector<BooleanFunction> fs;
  for ( int n = 1; n <= 2; ++n )
  {
    for ( const auto& f : all_functions( n ) )
    {
      if ( oracle::degree( f ) >= 1 )
      {
        fs.push_back( f );
      }
    }
  }
  std::mt19937_64 rng( 5 );
  for ( int k = 0; k < 40; ++k )
  {
    fs.push_back( oracle::random_function( 3, rng ) );
  }
  for ( const auto& f : fs )
  {
    for ( const auto& g : fs )
    {
      if ( oracle::degree( f ) == 0 || oracle::degree( g ) == 0 || f.arity() * g.arity() > 9 )
      {
        continue;
      }
      ASSERT_EQ( degree( compose( f, g ) ), degree( f ) * degree( g ) );
    }
  }
}

TEST( Polynomial, MobiusExamples )
{
  const auto p = mobius_transform( family( "OR", 2 ) );
  EXPECT_EQ( p.coefficient( 0 ), BigRational( 0 ) );
  EXPECT_EQ( p.coefficient( 1 ), BigRational( 1 ) );
  EXPECT_EQ( p.coefficient( 2 ), BigRational( 1 ) );
  EXPECT_EQ( p.coefficient( 3 ), BigRational( -1 ) );
  const auto d = mobius_transform( family( "DICT", 2 ) );
  EXPECT_EQ( d.coefficients().size(), 1u );
  EXPECT_EQ( d.coefficient( 1 ), BigRational( 1 ) );
  EXPECT_EQ( mobius_transform( family( "KUSHILEVITZ" ) ), kushilevitz_polynomial() );
  std::ostringstream out;
  write_polynomial( out, p );
  EXPECT_EQ( out.str(), "S=1  c=1/1\nS=2  c=1/1\nS=1,2  c=-1/1\n" );
}

TEST( Polynomial, KushilevitzShape )
{
  const auto p = kushilevitz_polynomial();
  int cubic = 0;
  for ( const auto& [s, c] : p.coefficients() )
  {
    switch ( std::popcount( s ) )
    {
    case 1: EXPECT_EQ( c, BigRational( 1 ) ); break;
    case 2: EXPECT_EQ( c, BigRational( -1 ) ); break;
    case 3:
      EXPECT_EQ( c, BigRational( 1 ) );
      ++cubic;
      break;
    default: ADD_FAILURE() << "unexpected monomial size";
    }
  }
  EXPECT_EQ( cubic, 10 );
  EXPECT_EQ( p.coefficients().size(), 6u + 15u + 10u );
}

TEST( Polynomial, MobiusMatchesDefinitionAndRoundTrips )
{
  for ( int n = 0; n <= 4; ++n )
  {
    for ( const auto& f : all_functions( n ) )
    {
      const auto c = mobius_coefficients( f );
      const auto ref = oracle::mobius( f );
      for ( std::uint32_t s = 0; s < f.size(); ++s )
      {
        ASSERT_EQ( c[s], ref[s] );
      }
      const auto p = mobius_transform( f );
      for ( std::uint32_t x = 0; x < f.size(); ++x )
      {
        ASSERT_EQ( p.evaluate( x ), BigRational( f( x ) ? 1 : 0 ) );
      }
    }
  }
}

TEST( Polynomial, FourierExamples )
{
  const auto p2 = fourier_transform( family( "PARITY", 2 ) );
  ASSERT_EQ( p2.coefficients().size(), 1u );
  EXPECT_EQ( abs( p2.coefficient( 3 ) ), BigRational( 1 ) );
  EXPECT_EQ( fourier_transform( family( "CONST0", 2 ) ).coefficient( 0 ), BigRational( 1 ) );
  const auto maj = fourier_transform( family( "MAJ", 3 ) );
  EXPECT_EQ( maj.coefficient( 1 ), maj.coefficient( 2 ) );
  EXPECT_EQ( maj.coefficient( 2 ), maj.coefficient( 4 ) );
  EXPECT_FALSE( maj.coefficient( 1 ).is_zero() );
}

TEST( Polynomial, ParsevalIsExact )
{
  for ( int n = 0; n <= 4; ++n )
  {
    for ( const auto& f : all_functions( n ) )
    {
      const auto p = fourier_transform( f );
      const auto ref = oracle::fourier( f );
      BigRational total;
      for ( std::uint32_t s = 0; s < f.size(); ++s )
      {
        ASSERT_EQ( p.coefficient( s ), ref[s] );
        total += ref[s] * ref[s];
      }
      ASSERT_EQ( total, BigRational( 1 ) );
      const BigRational ones( static_cast<long>( f.count_ones() ), static_cast<long>( f.size() ) );
      ASSERT_EQ( p.coefficient( 0 ), BigRational( 1 ) - BigRational( 2 ) * ones );
      for ( std::uint32_t x = 0; x < f.size(); ++x )
      {
        ASSERT_EQ( p.evaluate( x ), BigRational( f( x ) ? -1 : 1 ) );
      }
    }
  }
}

TEST( Polynomial, RestrictionCommutesWithMobius )
{
  std::mt19937_64 rng( 19 );
  for ( int trial = 0; trial < 300; ++trial )
  {
    const int n = 1 + static_cast<int>( rng() % 6 );
    const auto f = oracle::random_function( n, rng );
    const CoordinateMask mask = static_cast<CoordinateMask>( rng() ) & ( ( 1u << n ) - 1 );
    const auto a = PartialAssignment::from_mask( mask, static_cast<std::uint32_t>( rng() ) & mask );
    ASSERT_EQ( mobius_transform( restrict( f, a ) ), substitute( mobius_transform( f ), a ) );
  }
}

TEST( Families, Examples )
{
  const auto k = family( "KUSHILEVITZ" );
  EXPECT_EQ( k.arity(), 6 );
  EXPECT_EQ( family( "MAF", 3 ).arity(), 6 );
  EXPECT_EQ( family( "MAF", 5 ).arity(), 15 );
  EXPECT_EQ( family( "ADDR", 2 ).arity(), 6 );
  EXPECT_EQ( family( "maj", 3 ), family( Family::Maj, 3 ) );
  EXPECT_THROW( family( "MAJ", 4 ), std::invalid_argument );
  EXPECT_THROW( family( "MAF", 7 ), std::invalid_argument );
  EXPECT_THROW( family( "NOPE", 1 ), std::invalid_argument );
  EXPECT_THROW( family( "KUSHILEVITZ", 3 ), std::invalid_argument );
}

TEST( Families, AddressAndMafSemantics )
{
  // ADDR_2: address bits 0,1 select one of the targets 2..5.
  const auto addr = family( "ADDR", 2 );
  for ( std::uint32_t x = 0; x < addr.size(); ++x )
  {
    ASSERT_EQ( addr( x ), ( ( x >> ( 2 + ( x & 3u ) ) ) & 1u ) != 0 );
  }
  // MAF_3: MAJ_3(x) or some x_i with its selector y_{i}.
  const auto maf = family( "MAF", 3 );
  for ( std::uint32_t v = 0; v < maf.size(); ++v )
  {
    const std::uint32_t x = v & 7u, y = v >> 3;
    ASSERT_EQ( maf( v ), std::popcount( x ) >= 2 || ( x & y ) != 0 );
  }
}

TEST( Families, MajorityAndConstants )
{
  EXPECT_EQ( family( "MAJ", 3 ), tt( "00010111" ) );
  EXPECT_EQ( family( "CONST1", 2 ), tt( "1111" ) );
  EXPECT_EQ( family( "AND", 2 ), tt( "0001" ) );
}
