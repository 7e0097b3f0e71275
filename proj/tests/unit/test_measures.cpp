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

void expect_matches_oracles( const BooleanFunction& f )
{
  ASSERT_EQ( degree( f ), oracle::degree( f ) );
  ASSERT_EQ( sensitivity( f ).s, oracle::sensitivity( f ) );
  const auto bs = block_sensitivity( f );
  ASSERT_EQ( bs.bs, oracle::block_sensitivity( f ) );
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    ASSERT_EQ( bs.per_point[x], oracle::block_sensitivity_at( f, x ) );
  }
  const auto c = certificate_complexity( f );
  ASSERT_EQ( c.c, oracle::certificate( f ) );
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    ASSERT_EQ( c.per_point[x], oracle::certificate_at( f, x ) );
  }
  ASSERT_EQ( dt_depth( f ), oracle::dt_depth( f ) );
  const auto inf = influence( f );
  ASSERT_EQ( inf.per_coordinate, oracle::influences( f ) );
}

} // namespace

TEST( Measures, Examples )
{
  EXPECT_EQ( degree( family( "CONST1", 3 ) ), 0 );
  EXPECT_EQ( degree( family( "PARITY", 5 ) ), 5 );
  EXPECT_EQ( degree( family( "KUSHILEVITZ" ) ), 3 );

  EXPECT_EQ( sensitivity( family( "DICT", 1 ) ).s, 1 );
  const auto or4 = sensitivity( family( "OR", 4 ) );
  EXPECT_EQ( or4.s, 4 );
  EXPECT_EQ( or4.per_point[0], 4 );
  EXPECT_EQ( or4.s1, 1 );
  EXPECT_EQ( sensitivity( family( "MAJ", 3 ) ).s, 2 );

  EXPECT_EQ( block_sensitivity( family( "OR", 5 ) ).bs, 5 );
  EXPECT_EQ( block_sensitivity( family( "MAJ", 3 ) ).bs, 2 );
  EXPECT_EQ( block_sensitivity( family( "KUSHILEVITZ" ) ).bs, 6 );

  const auto and4 = certificate_complexity( family( "AND", 4 ) );
  EXPECT_EQ( and4.c1, 4 );
  EXPECT_EQ( and4.c0, 1 );
  EXPECT_EQ( and4.c_min, 1 );
  EXPECT_EQ( certificate_complexity( family( "DICT", 1 ) ).c, 1 );
  EXPECT_EQ( certificate_complexity( family( "MAJ", 3 ) ).c, 2 );

  EXPECT_EQ( dt_depth( family( "CONST0", 3 ) ), 0 );
  EXPECT_EQ( dt_depth( family( "DICT", 3 ) ), 1 );
  EXPECT_EQ( dt_depth( family( "MAJ", 3 ) ), 3 );

  const auto dict = influence( family( "DICT", 1 ) );
  EXPECT_EQ( dict.total, BigRational( 1 ) );
  const auto par = influence( family( "PARITY", 4 ) );
  EXPECT_EQ( par.total, BigRational( 4 ) );
  const auto maj = influence( family( "MAJ", 3 ) );
  EXPECT_EQ( maj.per_coordinate, std::vector<BigRational>( 3, BigRational( 1, 2 ) ) );
  EXPECT_EQ( maj.total, BigRational( 3, 2 ) );
}

TEST( Measures, BlockWitnessIsDisjointAndSensitive )
{
  const auto f = family( "KUSHILEVITZ" );
  const auto r = block_sensitivity( f );
  ASSERT_EQ( static_cast<int>( r.blocks.size() ), r.bs );
  CoordinateMask used = 0;
  for ( auto b : r.blocks )
  {
    EXPECT_EQ( used & b, 0u );
    used |= b;
    EXPECT_NE( f( r.witness ), f( r.witness ^ b ) );
  }
}

TEST( Measures, AgreeWithBruteForceOnAllThreeInputFunctions )
{
  for ( std::uint64_t w = 0; w < 256; ++w )
  {
    expect_matches_oracles( BooleanFunction::from_word( 3, w ) );
  }
}

TEST( Measures, AgreeWithBruteForceOnRandomFunctions )
{
  std::mt19937_64 rng( 2024 );
  for ( int trial = 0; trial < 150; ++trial )
  {
    const int n = 4 + static_cast<int>( rng() % 3 );
    expect_matches_oracles( oracle::random_function( n, rng ) );
  }
  expect_matches_oracles( family( "KUSHILEVITZ" ) );
  expect_matches_oracles( family( "MAF", 3 ) );
  expect_matches_oracles( family( "ADDR", 2 ) );
}

TEST( Measures, ClassicalChainOnFourInputs )
{
  for ( std::uint64_t w = 0; w < 65536; ++w )
  {
    const auto f = BooleanFunction::from_word( 4, w );
    const int s = sensitivity( f ).s;
    const int bs = block_sensitivity( f ).bs;
    const int c = certificate_complexity( f ).c;
    const int dt = dt_depth( f );
    const int deg = degree( f );
    ASSERT_LE( s, bs );
    ASSERT_LE( bs, c );
    ASSERT_LE( c, dt );
    ASSERT_LE( deg, dt );
    ASSERT_LE( deg, s * s );
    ASSERT_LE( 3 * ( bs * bs - bs ), 2 * ( deg * deg * deg * deg - deg * deg ) );
    if ( is_monotone( f ) )
    {
      ASSERT_EQ( s, bs );
      ASSERT_EQ( bs, c );
    }
  }
}

TEST( Measures, InfluenceCountingMatchesFourier )
{
  // influence() throws on a mismatch; the oracle sum is recomputed here too.
  for ( std::uint64_t w = 0; w < 65536; ++w )
  {
    const auto f = BooleanFunction::from_word( 4, w );
    const auto inf = influence( f );
    const auto fh = oracle::fourier( f );
    for ( int i = 0; i < 4; ++i )
    {
      BigRational sum;
      for ( std::uint32_t s = 0; s < 16; ++s )
      {
        if ( ( s >> i ) & 1u )
        {
          sum += fh[s] * fh[s];
        }
      }
      ASSERT_EQ( inf.per_coordinate[i], sum );
    }
  }
}

TEST( Measures, InfluenceAveragesOverRestrictions )
{
  std::mt19937_64 rng( 99 );
  for ( int trial = 0; trial < 100; ++trial )
  {
    const int n = 2 + static_cast<int>( rng() % 5 );
    const auto f = oracle::random_function( n, rng );
    const int i = static_cast<int>( rng() % n );
    const CoordinateMask h = static_cast<CoordinateMask>( rng() ) & ( ( 1u << n ) - 1 ) & ~( 1u << i );
    // Coordinate i after removing H.
    const int shifted = i - std::popcount( h & ( ( 1u << i ) - 1 ) );
    BigRational avg;
    const int k = std::popcount( h );
    for ( std::uint32_t a = 0; a < ( 1u << k ); ++a )
    {
      const auto g = restrict( f, PartialAssignment::from_mask( h, deposit_bits( a, h ) ) );
      avg += oracle::influences( g )[shifted];
    }
    avg /= BigRational( 1L << k );
    ASSERT_EQ( avg, oracle::influences( f )[i] );
  }
}

TEST( Measures, ApproximateDegree )
{
  const BigRational third( 1, 3 );
  EXPECT_EQ( approx_degree( family( "CONST0", 2 ), third ), 0 );
  EXPECT_EQ( approx_degree( family( "DICT", 2 ), third ), 1 );
  // AND_2: degree 1 is enough, e.g. p = (x1 + x2)/2 - 1/4 misses by at most 1/4.
  EXPECT_EQ( approx_degree( family( "AND", 2 ), third ), 1 );
  EXPECT_EQ( approx_degree( family( "PARITY", 3 ), third ), 3 );
  EXPECT_THROW( approx_degree( family( "AND", 11 ), third ), std::invalid_argument );
  EXPECT_THROW( approx_degree( family( "AND", 2 ), BigRational( 1, 2 ) ), std::invalid_argument );
}

TEST( Measures, ApproximateDegreeBoundsOnThreeInputs )
{
  for ( std::uint64_t w = 0; w < 256; ++w )
  {
    const auto f = BooleanFunction::from_word( 3, w );
    const int a = approx_degree( f, BigRational( 1, 3 ) );
    const int bs = oracle::block_sensitivity( f );
    ASSERT_LE( a, oracle::degree( f ) );
    ASSERT_LE( bs, 5 * a * a );
    ASSERT_LE( bs, 6 * a * a );
  }
}

TEST( Measures, ReportFormat )
{
  std::ostringstream out;
  write_measure_report( out, measure_report( family( "MAJ", 3 ) ) );
  const std::string s = out.str();
  EXPECT_EQ( s.rfind( "arity\t3\ndeg\t3\ns\t2\n", 0 ), 0u );
  EXPECT_NE( s.find( "I\t3/2\n" ), std::string::npos );
  EXPECT_NE( s.find( "Inf_1\t1/2\n" ), std::string::npos );
  EXPECT_NE( s.find( "adeg\t-\n" ), std::string::npos );
}

TEST( Measures, SearchCapIsEnforced )
{
  EXPECT_THROW( block_sensitivity( family( "AND", 15 ) ), std::invalid_argument );
  EXPECT_THROW( dt_depth( family( "AND", 15 ) ), std::invalid_argument );
}
