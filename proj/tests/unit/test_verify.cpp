#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "bfc/families.hpp"
#include "bfc/measures.hpp"
#include "bfc/polynomial.hpp"
#include "bfc/verify.hpp"
#include "oracles.hpp"

using namespace bfc;

namespace
{

std::vector<BigRational> rationals( std::initializer_list<long> xs )
{
  return { xs.begin(), xs.end() };
}

} // namespace

TEST( StandardForm, Examples )
{
  const auto or2 = standard_form( family( "OR", 2 ) );
  EXPECT_EQ( or2.g, family( "OR", 2 ) );
  EXPECT_FALSE( or2.complemented );
  const auto and2 = standard_form( family( "AND", 2 ) );
  EXPECT_EQ( and2.g, family( "OR", 2 ) );
  EXPECT_TRUE( and2.complemented );
  const auto k = standard_form( family( "KUSHILEVITZ" ) );
  EXPECT_EQ( k.g.arity(), 6 );
  EXPECT_LE( degree( k.g ), 3 );
  EXPECT_TRUE( is_standard_form( k.g ) );
  EXPECT_THROW( standard_form( family( "CONST1", 2 ) ), std::invalid_argument );
  EXPECT_FALSE( is_standard_form( family( "AND", 2 ) ) );
}

TEST( StandardForm, PropertiesOverAllFourInputFunctions )
{
  for ( std::uint64_t w = 1; w + 1 < 65536; ++w )
  {
    const auto f = BooleanFunction::from_word( 4, w );
    const auto sf = standard_form( f );
    const int bs = oracle::block_sensitivity( f );
    ASSERT_EQ( sf.g.arity(), bs );
    ASSERT_TRUE( is_standard_form( sf.g ) );
    ASSERT_LE( oracle::degree( sf.g ), oracle::degree( f ) );
    // The blocks are disjoint and each one flips f at z.
    CoordinateMask used = 0;
    for ( auto b : sf.blocks )
    {
      ASSERT_EQ( used & b, 0u );
      used |= b;
      ASSERT_NE( f( sf.z ), f( sf.z ^ b ) );
    }
    const auto p = symmetrize( sf.g );
    ASSERT_GE( p.size(), 2u );
    ASSERT_EQ( p[0], BigRational( 0 ) );
    ASSERT_EQ( p[1], BigRational( bs ) );
    // Idempotent up to relabeling: the standard form of g has the same arity.
    ASSERT_EQ( standard_form( sf.g ).g.arity(), bs );
  }
}

TEST( Symmetrize, Examples )
{
  EXPECT_EQ( symmetrize( family( "OR", 2 ) ), rationals( { 0, 2, -1 } ) );
  EXPECT_EQ( symmetrize( family( "PARITY", 2 ) ), rationals( { 0, 2, -2 } ) );
  EXPECT_TRUE( symmetrize( family( "CONST0", 3 ) ).empty() );
  const auto p = symmetrize( family( "MAJ", 3 ) );
  // p(mu) is the probability that MAJ_3 outputs 1 under independent mu-biased inputs.
  for ( int k = 0; k <= 8; ++k )
  {
    const BigRational mu( k, 8 );
    const auto expect = BigRational( 3 ) * mu * mu * ( BigRational( 1 ) - mu ) + mu * mu * mu;
    ASSERT_EQ( evaluate_polynomial( p, mu ), expect );
  }
}

TEST( StandardForm, Lemmas )
{
  const auto or2 = check_standard_form_lemmas( family( "OR", 2 ) );
  EXPECT_TRUE( or2.pass() );
  EXPECT_EQ( or2.p2, BigRational( -2 ) );
  const auto a3 = check_standard_form_lemmas( standard_form( family( "AND", 3 ) ).g );
  EXPECT_TRUE( a3.pass() );
  EXPECT_EQ( a3.p2, BigRational( -6 ) );
  EXPECT_TRUE( check_standard_form_lemmas( family( "DICT", 1 ) ).pass() );
  EXPECT_TRUE( check_standard_form_lemmas( standard_form( family( "KUSHILEVITZ" ) ).g ).pass() );
  EXPECT_THROW( check_standard_form_lemmas( family( "AND", 2 ) ), std::invalid_argument );
}

TEST( Markov, Consequence )
{
  const auto k = check_markov_consequence( family( "KUSHILEVITZ" ) );
  EXPECT_EQ( k.bs, 6 );
  EXPECT_EQ( k.deg, 3 );
  EXPECT_TRUE( k.pass() );
  EXPECT_TRUE( check_markov_consequence( family( "PARITY", 4 ) ).pass() );
  EXPECT_FALSE( check_markov_consequence( 7, 2 ).quadratic );
  EXPECT_TRUE( check_markov_consequence( 3, 2 ).pass() );
}

TEST( DtIntersect, Examples )
{
  const auto maj = check_dt_intersect( family( "MAJ", 3 ), 0 );
  EXPECT_EQ( maj.status, CheckStatus::Pass );
  EXPECT_EQ( maj.left, 2 );
  EXPECT_EQ( maj.right, 3 );
  EXPECT_EQ( check_dt_intersect( family( "AND", 2 ), 0 ).status, CheckStatus::Skip );
  EXPECT_EQ( check_dt_intersect( family( "PARITY", 2 ), 0 ).status, CheckStatus::Skip );
  EXPECT_EQ( check_status_name( CheckStatus::Fail ), "FAIL" );
  EXPECT_THROW( check_dt_intersect( family( "MAJ", 3 ), 3 ), std::out_of_range );
}

TEST( DtIntersect, AllMonotoneUpToFive )
{
  for ( const auto& f : enumerate_monotone( 5 ) )
  {
    for ( int root = 0; root < 5; ++root )
    {
      ASSERT_NE( check_dt_intersect( f, root ).status, CheckStatus::Fail ) << f.table_string() << " root " << root;
    }
  }
}

TEST( FormulaTest, EvaluateAndRelevance )
{
  Formula f( 3 );
  const int a = f.input( 0 ), b = f.input( 1 ), c = f.input( 2 );
  // (x1 and x2) or (x1 and not x2), independent of x3 and x2.
  f.set_root( f.disj( { f.conj( { a, b } ), f.conj( { a, f.negate( b ) } ), f.conj( { c, f.constant( false ) } ) } ) );
  EXPECT_EQ( f.truth_table(), family( "DICT", 3 ) );
  EXPECT_TRUE( formula_input_relevant( f, 0 ) );
  EXPECT_FALSE( formula_input_relevant( f, 1 ) );
  EXPECT_FALSE( formula_input_relevant( f, 2 ) );
  EXPECT_EQ( formula_num_relevant( f ), 1 );
  EXPECT_TRUE( f.evaluate( { true, false, false } ) );
  EXPECT_THROW( f.input( 3 ), std::out_of_range );
  Formula empty( 1 );
  EXPECT_THROW( empty.truth_table(), std::logic_error );
}

TEST( FormulaTest, RelevanceMatchesTablesOnRandomFormulas )
{
  std::mt19937_64 rng( 31337 );
  for ( int trial = 0; trial < 300; ++trial )
  {
    const int n = 2 + static_cast<int>( rng() % 5 );
    Formula f( n );
    std::vector<int> pool;
    for ( int i = 0; i < n; ++i )
    {
      pool.push_back( f.input( i ) );
    }
    for ( int g = 0; g < 8; ++g )
    {
      const int x = pool[rng() % pool.size()];
      const int y = pool[rng() % pool.size()];
      switch ( rng() % 3 )
      {
      case 0: pool.push_back( f.conj( { x, y } ) ); break;
      case 1: pool.push_back( f.disj( { x, y } ) ); break;
      default: pool.push_back( f.negate( x ) ); break;
      }
    }
    f.set_root( pool.back() );
    const auto t = f.truth_table();
    const auto inf = oracle::influences( t );
    for ( int i = 0; i < n; ++i )
    {
      ASSERT_EQ( formula_input_relevant( f, i ), !inf[i].is_zero() ) << "trial " << trial << " input " << i;
    }
  }
}

TEST( Doubling, ArityFollowsRecurrence )
{
  const std::vector<int> expect{ 0, 1, 2, 4, 6, 10, 14, 22, 30, 46 };
  for ( int d = 0; d <= 9; ++d )
  {
    const auto m = dt_doubling_family( d );
    ASSERT_EQ( formula_num_relevant( m.formula ), expect[d] ) << "d=" << d;
    if ( d >= 2 )
    {
      ASSERT_EQ( expect[d], 2 * expect[d - 2] + 2 );
    }
  }
  EXPECT_THROW( dt_doubling_family( 14 ), std::invalid_argument );
}

TEST( Doubling, TablesAgreeWithFormulas )
{
  for ( int d = 0; d <= 6; ++d )
  {
    const auto m = dt_doubling_family( d );
    ASSERT_TRUE( m.table.has_value() ) << "d=" << d;
    const auto& t = *m.table;
    EXPECT_TRUE( oracle::is_monotone( t ) );
    EXPECT_EQ( oracle::num_relevant( t ), formula_num_relevant( m.formula ) );
    if ( t.arity() <= 10 )
    {
      EXPECT_EQ( oracle::dt_depth( t ), d ) << "d=" << d;
    }
  }
  EXPECT_FALSE( dt_doubling_family( 7 ).table.has_value() );
}

TEST( CorpusTest, MonotoneCountsAreDedekindNumbers )
{
  const std::vector<std::uint64_t> dedekind{ 2, 3, 6, 20, 168, 7581 };
  for ( int n = 0; n <= 5; ++n )
  {
    const auto fs = enumerate_monotone( n );
    ASSERT_EQ( fs.size(), dedekind[n] ) << "n=" << n;
    ASSERT_EQ( Corpus::monotone( n ).size(), dedekind[n] );
    std::set<std::string> seen;
    for ( const auto& f : fs )
    {
      ASSERT_TRUE( oracle::is_monotone( f ) );
      seen.insert( f.table_string() );
    }
    ASSERT_EQ( seen.size(), fs.size() );
  }
  // Brute force: count monotone tables among all of them.
  for ( int n = 0; n <= 4; ++n )
  {
    std::uint64_t count = 0;
    for ( std::uint64_t w = 0; w < ( std::uint64_t{ 1 } << ( 1u << n ) ); ++w )
    {
      count += oracle::is_monotone( BooleanFunction::from_word( n, w ) );
    }
    ASSERT_EQ( count, dedekind[n] );
  }
  EXPECT_THROW( enumerate_monotone( 6 ), std::invalid_argument );
}

TEST( CorpusTest, ParseAndSizes )
{
  EXPECT_EQ( Corpus::parse( "all:3" ).size(), 256u );
  EXPECT_EQ( Corpus::parse( "all:4" ).size(), 65536u );
  EXPECT_EQ( Corpus::parse( "all:2" ).at( 6 ).f, family( "PARITY", 2 ) );
  EXPECT_EQ( Corpus::parse( "all:2" ).at( 6 ).id, "#6 tt=0110" );
  EXPECT_THROW( Corpus::parse( "all:5" ), std::invalid_argument );
  EXPECT_THROW( Corpus::parse( "all:3" ).at( 256 ), std::out_of_range );
  EXPECT_THROW( Corpus::parse( "bogus" ), std::invalid_argument );
  EXPECT_THROW( Corpus::parse( "random:4:10" ), std::invalid_argument );

  const auto named = Corpus::parse( "named:KUSHILEVITZ,MAJ_3,ADDR_2" );
  ASSERT_EQ( named.size(), 3u );
  EXPECT_EQ( named.at( 0 ).id, "KUSHILEVITZ" );
  EXPECT_EQ( named.at( 1 ).f, family( "MAJ", 3 ) );
  EXPECT_EQ( named.at( 2 ).f.arity(), 6 );
  EXPECT_THROW( Corpus::parse( "named:NOPE_3" ), std::invalid_argument );
}

TEST( CorpusTest, RandomIsReproducible )
{
  const auto a = Corpus::parse( "random:5:20:9" );
  const auto b = Corpus::random( 5, 20, 9 );
  const auto c = Corpus::random( 5, 20, 10 );
  ASSERT_EQ( a.size(), 20u );
  bool differs = false;
  for ( std::uint64_t k = 0; k < 20; ++k )
  {
    ASSERT_EQ( a.at( k ).f, b.at( k ).f );
    differs = differs || !( a.at( k ).f == c.at( k ).f );
  }
  EXPECT_TRUE( differs );
  const auto m = Corpus::random_monotone( 6, 30, 4 );
  for ( std::uint64_t k = 0; k < m.size(); ++k )
  {
    ASSERT_TRUE( oracle::is_monotone( m.at( k ).f ) );
  }
}

TEST( Suite, NamedFunctionsPass )
{
  const auto r = run_theorem_suite( Corpus::parse( "named:KUSHILEVITZ,MAJ_3,PARITY_4,ADDR_2,MAF_3" ) );
  EXPECT_EQ( r.functions, 5u );
  EXPECT_TRUE( r.errors.empty() );
  EXPECT_EQ( r.total_failures(), 0u );
  const auto* markov = r.find( "markov-bs-deg" );
  ASSERT_NE( markov, nullptr );
  EXPECT_EQ( markov->evaluated, 5u );
  const auto* chain = r.find( "s<=bs" );
  ASSERT_NE( chain, nullptr );
  EXPECT_TRUE( chain->external );
  EXPECT_EQ( r.find( "no-such-check" ), nullptr );
  std::ostringstream out;
  write_suite_report( out, r );
  EXPECT_NE( out.str().find( "markov-bs-deg" ), std::string::npos );
}

TEST( Suite, AllThreeInputFunctionsPass )
{
  const auto r = run_theorem_suite( Corpus::all( 3 ) );
  EXPECT_EQ( r.functions, 256u );
  EXPECT_EQ( r.total_failures(), 0u );
  const auto* adeg = r.find( "adeg:bs<=5adeg^2" );
  ASSERT_NE( adeg, nullptr );
  EXPECT_GT( adeg->evaluated, 0u );
  for ( const auto& t : r.theorems )
  {
    EXPECT_LE( t.worst_ratio, 1.0 + kSuiteSlack ) << t.id;
  }
}
