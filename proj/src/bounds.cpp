#include "bfc/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <ostream>
#include <stdexcept>

namespace bfc
{

/* caps */

std::int64_t markov_cap( std::int64_t d )
{
  if ( d < 1 )
  {
    throw std::invalid_argument( "markov_cap: d >= 1 required" );
  }
  const std::int64_t rhs = 2 * ( d * d * d * d - d * d );
  auto b = static_cast<std::int64_t>( std::sqrt( static_cast<double>( rhs ) / 3.0 ) ) + 2;
  while ( 3 * ( b * b - b ) > rhs )
  {
    --b;
  }
  return std::max<std::int64_t>( b, 1 );
}

std::int64_t CapProfile::cap( std::int64_t d ) const
{
  if ( d < 1 )
  {
    throw std::invalid_argument( "cap: d >= 1 required" );
  }
  const bool tabled = d <= static_cast<std::int64_t>( kLpCapTable.size() );
  switch ( mode )
  {
  case CapMode::Square:
    return d * d;
  case CapMode::LpTable:
    if ( tabled )
    {
      return kLpCapTable[d - 1];
    }
    return fallback == CapMode::Markov ? markov_cap( d ) : d * d;
  case CapMode::Markov:
    return tabled ? std::min<std::int64_t>( kLpCapTable[d - 1], markov_cap( d ) ) : markov_cap( d );
  }
  return d * d;
}

std::string CapProfile::source( std::int64_t d ) const
{
  const bool tabled = d <= static_cast<std::int64_t>( kLpCapTable.size() );
  switch ( mode )
  {
  case CapMode::Square:
    return "SQUARE";
  case CapMode::LpTable:
    return tabled ? "LP_TABLE" : fallback == CapMode::Markov ? "MARKOV" : "SQUARE";
  case CapMode::Markov:
    return tabled && kLpCapTable[d - 1] <= markov_cap( d ) ? "LP_TABLE" : "MARKOV";
  }
  return "?";
}

std::string CapProfile::name() const
{
  switch ( mode )
  {
  case CapMode::Square: return "SQUARE";
  case CapMode::LpTable: return fallback == CapMode::Markov ? "LP_TABLE+MARKOV" : "LP_TABLE";
  case CapMode::Markov: return "MARKOV";
  }
  return "?";
}

CapProfile parse_cap_profile( const std::string& text )
{
  if ( text == "SQUARE" || text == "square" )
    return CapProfile::square();
  if ( text == "LP_TABLE" || text == "lp" || text == "lp-table" )
    return CapProfile::lp_table();
  if ( text == "LP_TABLE+MARKOV" )
    return CapProfile::lp_table( CapMode::Markov );
  if ( text == "MARKOV" || text == "markov" )
    return CapProfile::markov();
  throw std::invalid_argument( "unknown cap profile '" + text + "'" );
}

/* tail sums */

double tail_power_sum( int p, double r, std::int64_t a )
{
  if ( p < 0 || p > 3 || !( r > 0 && r < 1 ) )
  {
    throw std::invalid_argument( "tail_power_sum: need 0 <= p <= 3 and 0 < r < 1" );
  }
  // sum_{j>=0} j^q r^j for q = 0..3.
  const double q = 1 - r;
  const std::array<double, 4> s{ 1 / q, r / ( q * q ), r * ( 1 + r ) / ( q * q * q ), r * ( 1 + 4 * r + r * r ) / ( q * q * q * q ) };
  static constexpr int binom[4][4] = { { 1, 0, 0, 0 }, { 1, 1, 0, 0 }, { 1, 2, 1, 0 }, { 1, 3, 3, 1 } };
  // sum_{i>=a} i^p r^i = r^a sum_j (j + a)^p r^j.
  double total = 0;
  const double da = static_cast<double>( a );
  for ( int k = 0; k <= p; ++k )
  {
    total += binom[p][k] * std::pow( da, p - k ) * s[k];
  }
  return std::pow( r, da ) * total;
}

/* generic DP */

namespace
{

using Weight = std::function<double( int )>;

void fill_grid( BoundGrid& g, const Weight& w, const std::function<double( int )>& ceiling )
{
  const int dm = g.d_max;
  g.cap_by_d.assign( dm + 2, 0 );
  for ( int d = 1; d <= dm + 1; ++d )
  {
    g.cap_by_d[d] = g.caps.cap( d );
  }
  const std::int64_t bmax = g.cap_by_d[dm];
  g.values.assign( bmax + 1, std::vector<double>( dm + 1, 0.0 ) );
  for ( std::int64_t b = 1; b <= bmax; ++b )
  {
    const auto& prev = g.values[b - 1];
    auto& row = g.values[b];
    for ( int d = 1; d <= dm; ++d )
    {
      if ( b > g.cap_by_d[d] )
      {
        row[d] = 0;
        continue;
      }
      double best = 0;
      for ( int k = 1; k <= d; ++k )
      {
        best = std::max( best, w( d ) + prev[k] );
      }
      row[d] = std::min( ceiling( d ), best );
    }
  }
}

/* headline = corner + w(d+1) B_{d+1} + sum_{k>=d+2} w(k)(B_k - B_{k-1}).
 * `envelope(k)` bounds w(k) from above by c k r^k, which with B_k - B_{k-1} <= 2k+1 bounds the rest. */
void fill_headline( BoundGrid& g, const Weight& w, double env_c, double env_r, bool closed_square )
{
  const int dm = g.d_max;
  auto& h = g.headline;
  h.corner = g.values[g.cap_by_d[dm]][dm];
  h.edge = w( dm + 1 ) * static_cast<double>( g.caps.cap( dm + 1 ) );
  if ( closed_square )
  {
    // w(k) = c k r^k and B_k - B_{k-1} = 2k - 1.
    h.series = env_c * ( 2 * tail_power_sum( 2, env_r, dm + 2 ) - tail_power_sum( 1, env_r, dm + 2 ) );
    h.remainder = 0;
  }
  else
  {
    std::int64_t k = dm + 2;
    double series = 0;
    for ( ; k < dm + 2 + 4000; ++k )
    {
      series += w( static_cast<int>( k ) ) * static_cast<double>( g.caps.cap( k ) - g.caps.cap( k - 1 ) );
      if ( env_c * std::pow( static_cast<double>( k ), 2 ) * std::pow( env_r, static_cast<double>( k ) ) < 1e-18 )
      {
        ++k;
        break;
      }
    }
    h.series = series;
    h.remainder = env_c * ( 2 * tail_power_sum( 2, env_r, k ) + tail_power_sum( 1, env_r, k ) );
  }
  h.headline = h.corner + h.edge + h.series + h.remainder;
}

void check_d_max( int d_max )
{
  if ( d_max < 2 || d_max > 64 )
  {
    throw std::invalid_argument( "d_max must lie in [2, 64]" );
  }
}

} // namespace

double BoundGrid::at( std::int64_t b, int d ) const
{
  if ( d < 1 || d > d_max || b < 0 )
  {
    throw std::out_of_range( "BoundGrid::at" );
  }
  if ( b >= static_cast<std::int64_t>( values.size() ) )
  {
    return 0;
  }
  return values[b][d];
}

BoundGrid dp_degree( int d_max, const CapProfile& caps )
{
  check_d_max( d_max );
  BoundGrid g;
  g.d_max = d_max;
  g.caps = caps;
  const Weight w = []( int d ) { return std::ldexp( static_cast<double>( d ), -d ); };
  fill_grid( g, w, []( int d ) { return d / 2.0; } );
  fill_headline( g, w, 1.0, 0.5, caps.mode == CapMode::Square );
  const double d1 = d_max + 1;
  g.headline.alternative_tail = d1 * d1 * d1 / std::ldexp( 1.0, d_max + 1 ) +
                                2 * tail_power_sum( 2, 0.5, d_max + 2 ) - tail_power_sum( 1, 0.5, d_max + 2 );
  return g;
}

MonotoneDegreeResult dp_monotone_degree( int d_max )
{
  if ( d_max < 2 )
  {
    throw std::invalid_argument( "dp_monotone_degree: d_max >= 2 required" );
  }
  MonotoneDegreeResult r;
  r.values.assign( d_max + 1, BigRational( 0 ) );
  r.values[1] = BigRational( 1, 2 );
  r.values[2] = BigRational( 1, 2 );
  for ( int d = 3; d <= d_max; ++d )
  {
    const auto& prev = r.values[d - 1];
    BigRational best;
    for ( int k = 1; k <= d; ++k )
    {
      const auto pk = BigRational::pow2( -k );
      const auto a = BigRational( k ) * pk + ( BigRational( 1 ) - pk ) * prev;
      const auto b = BigRational( k ) * BigRational::pow2( -d ) + prev;
      const auto m = std::min( a, b );
      if ( k == 1 || m > best )
      {
        best = m;
      }
    }
    r.values[d] = best;
  }
  // sum_{d > d_max} d / 2^d = (d_max + 2) / 2^{d_max}.
  r.headline = r.values[d_max] + BigRational( d_max + 2 ) * BigRational::pow2( -d_max );
  return r;
}

InfluenceMinResult ds_influence_min( double beta )
{
  if ( !( beta > 0 && beta <= 1 ) )
  {
    throw std::invalid_argument( "ds_influence_min: need 0 < beta <= 1" );
  }
  const double r = std::pow( 2.0, -beta );
  const double scale = std::pow( 2.0, 2 - beta );
  InfluenceMinResult out;
  out.profile.assign( 201, 0.0 );
  for ( int k = 1; k <= 200; ++k )
  {
    const double v = ( k + tail_power_sum( 3, r, k + 1 ) ) / scale;
    out.profile[k] = v;
    if ( k == 1 || v < out.value )
    {
      out.k = k;
      out.value = v;
    }
  }
  return out;
}

std::string ds_weight_name( DsWeight w )
{
  return w == DsWeight::MonomialSens ? "MONOMIAL_SENS" : "SENS_FLOOR";
}

double ds_step_weight( double beta, int d, DsWeight weight )
{
  if ( weight == DsWeight::SensFloor )
  {
    return d * std::pow( 2.0, -( beta * d + 2 * ( 1 - beta ) ) );
  }
  // At most (k-1)^2 coordinates of the monomial have sens_i <= k, so level k holds at most 2k - 3 of them.
  double sum = 0;
  int placed = 0;
  for ( int k = 2; placed < d; ++k )
  {
    const int here = std::min( 2 * k - 3, d - placed );
    sum += here * std::pow( 2.0, -( 1 - beta ) * k );
    placed += here;
  }
  return std::pow( 2.0, -beta * d ) * sum;
}

BoundGrid dp_mixed_ds( double beta, int d_max, const CapProfile& caps, DsWeight weight )
{
  check_d_max( d_max );
  if ( !( beta > 0 && beta <= 1 ) )
  {
    throw std::invalid_argument( "dp_mixed_ds: need 0 < beta <= 1" );
  }
  BoundGrid g;
  g.d_max = d_max;
  g.caps = caps;
  const Weight w = [beta, weight]( int d ) { return ds_step_weight( beta, d, weight ); };
  const double ceiling_scale = std::pow( 2.0, 2 - beta );
  fill_grid( g, w, [ceiling_scale]( int d ) { return d / ceiling_scale; } );
  // Both weights are at most c k r^k with c = 2^{-2(1-beta)}, r = 2^{-beta}.
  const double c = std::pow( 2.0, -2 * ( 1 - beta ) );
  const double r = std::pow( 2.0, -beta );
  fill_headline( g, w, c, r, caps.mode == CapMode::Square && weight == DsWeight::SensFloor );
  return g;
}

BigRational cs_harmonic_bound( int d )
{
  if ( d < 1 )
  {
    throw std::invalid_argument( "cs_harmonic_bound: d >= 1 required" );
  }
  BigRational h;
  for ( int i = 1; i <= d; ++i )
  {
    h += BigRational( 1, i );
  }
  return h * BigRational( 1, 2 );
}

double cs_sens_bound( int s )
{
  if ( s < 1 )
  {
    throw std::invalid_argument( "cs_sens_bound: s >= 1 required" );
  }
  return std::log( static_cast<double>( s ) ) + kEulerGamma / 2;
}

TechnicalRecursionResult technical_recursion( double b, double alpha, int d_max, double a1 )
{
  if ( !( b > 0 ) || !( alpha > 0 && alpha < 1 ) || d_max < 1 )
  {
    throw std::invalid_argument( "technical_recursion: need B > 0, 0 < alpha < 1, d_max >= 1" );
  }
  TechnicalRecursionResult r;
  r.values.assign( d_max + 1, 0.0 );
  r.bounds.assign( d_max + 1, 0.0 );
  r.values[1] = a1;
  for ( int d = 1; d < d_max; ++d )
  {
    const double prev = r.values[d];
    // As h grows the bracket tends to A_d, which is the supremum when no finite h beats it.
    double best = prev;
    for ( int h = 1; h < 2000; ++h )
    {
      const double gain = b * h * std::pow( alpha, h );
      best = std::max( best, gain + ( 1 - std::ldexp( 1.0, -h ) ) * prev );
      if ( h > 8 && gain < 1e-15 )
      {
        break;
      }
    }
    r.values[d + 1] = best;
  }
  const bool harmonic = std::abs( alpha - 0.5 ) < 1e-15;
  if ( harmonic )
  {
    r.constant = std::max( a1, b );
  }
  else
  {
    double m = 0;
    for ( int h = 1; h < 2000; ++h )
    {
      m = std::max( m, b * h * std::pow( 2 * alpha, h ) );
    }
    r.constant = std::max( a1, m );
  }
  r.corrected_constant = harmonic ? std::max( a1, b / std::log( 2.0 ) ) : r.constant;
  double hd = 0;
  for ( int d = 1; d <= d_max; ++d )
  {
    hd += 1.0 / d;
    r.bounds[d] = harmonic ? r.constant * hd : r.constant;
    if ( r.values[d] > r.bounds[d] + 1e-12 && r.verdict )
    {
      r.verdict = false;
      r.first_failure = d;
    }
    const double corrected = harmonic ? r.corrected_constant * hd : r.corrected_constant;
    r.corrected_verdict = r.corrected_verdict && r.values[d] <= corrected + 1e-12;
  }
  return r;
}

MonotoneDtResult monotone_dt_table( int d_max )
{
  if ( d_max < 1 || d_max > 62 )
  {
    throw std::invalid_argument( "monotone_dt_table: d_max must lie in [1, 62]" );
  }
  MonotoneDtResult r;
  r.values.assign( d_max + 1, 0 );
  r.values[1] = 1;
  for ( int d = 2; d <= d_max; ++d )
  {
    const auto p = r.values[d - 1];
    const auto pp = r.values[d - 2];
    r.values[d] = std::max( { 2 * p >= 2 ? 2 * p - 2 : 0, 2 + 2 * pp, 1 + p } );
    if ( d >= 4 && r.values[d] != ( std::uint64_t{ 1 } << ( d - 2 ) ) + 2 )
    {
      throw std::logic_error( "monotone_dt_table: closed form fails at d = " + std::to_string( d ) );
    }
  }
  r.ratio = std::ldexp( static_cast<double>( r.values[d_max] ), -d_max );
  return r;
}

/* output */

void write_grid( std::ostream& out, const BoundGrid& g )
{
  out << "b\\d";
  for ( int d = 1; d <= g.d_max; ++d )
  {
    out << '\t' << d;
  }
  out << '\n';
  out << std::setprecision( 10 );
  for ( std::size_t b = 0; b < g.values.size(); ++b )
  {
    out << b;
    for ( int d = 1; d <= g.d_max; ++d )
    {
      out << '\t' << g.values[b][d];
    }
    out << '\n';
  }
}

void write_headline( std::ostream& out, const HeadlineBreakdown& h )
{
  out << std::setprecision( 10 );
  out << "corner\t" << h.corner << '\n';
  out << "edge\t" << h.edge << '\n';
  out << "series\t" << h.series << '\n';
  out << "remainder\t" << h.remainder << '\n';
  out << "headline\t" << h.headline << '\n';
}

} // namespace bfc
