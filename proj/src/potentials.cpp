#include "bfc/potentials.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <ostream>
#include <stdexcept>

#include "bfc/families.hpp"
#include "bfc/measures.hpp"
#include "bfc/polynomial.hpp"

namespace bfc
{

Real to_real( const BigRational& r )
{
  return Real( r.numerator().get_str() ) / Real( r.denominator().get_str() );
}

/* kinds */

CoordinateMeasureKind CoordinateMeasureKind::mix_ds( const BigRational& beta )
{
  if ( beta.sign() < 0 || beta > BigRational( 1 ) )
  {
    throw std::invalid_argument( "mixing weight must lie in [0,1]" );
  }
  return { MeasureTag::MixDS, beta };
}

CoordinateMeasureKind CoordinateMeasureKind::mix_cs( const BigRational& beta )
{
  if ( beta.sign() < 0 || beta > BigRational( 1 ) )
  {
    throw std::invalid_argument( "mixing weight must lie in [0,1]" );
  }
  return { MeasureTag::MixCS, beta };
}

std::string CoordinateMeasureKind::name() const
{
  auto beta_text = [this] { return beta.is_integer() ? beta.numerator().get_str() : beta.str(); };
  switch ( tag )
  {
  case MeasureTag::DegI: return "DEG_I";
  case MeasureTag::SensI: return "SENS_I";
  case MeasureTag::CertI: return "CERT_I";
  case MeasureTag::MixDS: return "MIX_DS(" + beta_text() + ")";
  case MeasureTag::MixCS: return "MIX_CS(" + beta_text() + ")";
  }
  return "?";
}

CoordinateMeasureKind CoordinateMeasureKind::parse( std::string_view text )
{
  if ( text == "DEG_I" )
    return deg();
  if ( text == "SENS_I" )
    return sens();
  if ( text == "CERT_I" )
    return cert();
  for ( auto [prefix, tag] : { std::pair{ std::string_view( "MIX_DS(" ), MeasureTag::MixDS }, std::pair{ std::string_view( "MIX_CS(" ), MeasureTag::MixCS } } )
  {
    if ( text.substr( 0, prefix.size() ) == prefix && text.size() > prefix.size() + 1 && text.back() == ')' )
    {
      const auto beta = BigRational::parse( text.substr( prefix.size(), text.size() - prefix.size() - 1 ) );
      return tag == MeasureTag::MixDS ? mix_ds( beta ) : mix_cs( beta );
    }
  }
  throw std::invalid_argument( "unknown coordinate measure '" + std::string( text ) + "'" );
}

std::vector<CoordinateMeasureKind> standard_kinds()
{
  const BigRational half( 1, 2 );
  return { CoordinateMeasureKind::deg(), CoordinateMeasureKind::sens(), CoordinateMeasureKind::cert(),
           CoordinateMeasureKind::mix_ds( half ), CoordinateMeasureKind::mix_cs( half ) };
}

/* per-coordinate measures */

namespace
{

void check_coordinate( const BooleanFunction& f, Coordinate i )
{
  if ( i < 0 || i >= f.arity() )
  {
    throw std::out_of_range( "coordinate " + std::to_string( i ) + " out of range for arity " + std::to_string( f.arity() ) );
  }
}

int deg_i_unchecked( const BooleanFunction& f, Coordinate i )
{
  const std::uint32_t bit = std::uint32_t{ 1 } << i;
  std::vector<std::int64_t> diff( f.size() );
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    diff[x] = static_cast<int>( f( x ) ) - static_cast<int>( f( x ^ bit ) );
  }
  mobius_in_place( diff, f.arity() );
  int d = 0;
  for ( std::uint32_t s = 0; s < diff.size(); ++s )
  {
    if ( diff[s] != 0 )
    {
      d = std::max( d, std::popcount( s ) );
    }
  }
  return d;
}

/* max over sensitive edges of (value at x) + (value at x^i) */
int edge_max( const BooleanFunction& f, Coordinate i, const std::vector<int>& per_point )
{
  const std::uint32_t bit = std::uint32_t{ 1 } << i;
  int best = 0;
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    if ( !( x & bit ) && f( x ) != f( x ^ bit ) )
    {
      best = std::max( best, per_point[x] + per_point[x ^ bit] );
    }
  }
  return best;
}

} // namespace

int deg_i( const BooleanFunction& f, Coordinate i )
{
  check_coordinate( f, i );
  return deg_i_unchecked( f, i );
}

int sens_i( const BooleanFunction& f, Coordinate i )
{
  check_coordinate( f, i );
  return edge_max( f, i, sensitivity( f ).per_point );
}

int cert_i( const BooleanFunction& f, Coordinate i )
{
  check_coordinate( f, i );
  return edge_max( f, i, certificate_complexity( f ).per_point );
}

BigRational CoordinateProfile::value( Coordinate i, const CoordinateMeasureKind& kind ) const
{
  switch ( kind.tag )
  {
  case MeasureTag::DegI: return deg[i];
  case MeasureTag::SensI: return sens[i];
  case MeasureTag::CertI: return cert[i];
  case MeasureTag::MixDS: return kind.beta * BigRational( deg[i] ) + ( BigRational( 1 ) - kind.beta ) * BigRational( sens[i] );
  case MeasureTag::MixCS: return kind.beta * BigRational( cert[i] ) + ( BigRational( 1 ) - kind.beta ) * BigRational( sens[i] );
  }
  return 0;
}

CoordinateProfile coordinate_profile( const BooleanFunction& f, bool with_cert )
{
  CoordinateProfile p;
  p.arity = f.arity();
  p.relevant = relevant_mask( f );
  p.deg.assign( f.arity(), 0 );
  p.sens.assign( f.arity(), 0 );
  p.cert.assign( f.arity(), 0 );
  if ( p.relevant == 0 )
  {
    return p;
  }
  const auto s = sensitivity( f ).per_point;
  const bool cert = with_cert && f.arity() <= kSearchMaxArity;
  std::vector<int> c;
  if ( cert )
  {
    c = analyze_subcubes( f ).certificate;
  }
  for ( int i = 0; i < f.arity(); ++i )
  {
    if ( !p.is_relevant( i ) )
    {
      continue;
    }
    p.deg[i] = deg_i_unchecked( f, i );
    p.sens[i] = edge_max( f, i, s );
    if ( cert )
    {
      p.cert[i] = edge_max( f, i, c );
    }
  }
  return p;
}

const CoordinateProfile& ProfileCache::get( const BooleanFunction& f )
{
  if ( f.arity() > max_arity_ )
  {
    scratch_ = coordinate_profile( f );
    return scratch_;
  }
  auto it = cache_.find( f );
  if ( it == cache_.end() )
  {
    it = cache_.emplace( f, coordinate_profile( f ) ).first;
  }
  return it->second;
}

BigRational coordinate_measure( const BooleanFunction& f, Coordinate i, const CoordinateMeasureKind& kind )
{
  check_coordinate( f, i );
  const bool cert = kind.tag == MeasureTag::CertI || kind.tag == MeasureTag::MixCS;
  if ( cert && f.arity() > kSearchMaxArity )
  {
    throw std::invalid_argument( "cert_i: arity above the certificate search cap" );
  }
  return coordinate_profile( f, cert ).value( i, kind );
}

/* potentials */

PotentialTerm potential_term( Coordinate i, const BigRational& m )
{
  PotentialTerm t{ i, m, std::nullopt, 0 };
  if ( m.is_integer() )
  {
    const int e = static_cast<int>( m.numerator().get_si() );
    t.exact = BigRational::pow2( -e );
    t.value = Real( std::ldexp( 1.0, -e ) );
  }
  else
  {
    t.value = boost::multiprecision::pow( Real( 2 ), -to_real( m ) );
  }
  return t;
}

namespace
{

/* cpp_dec_float_50 carries 50 decimal digits; each inexact term is within this of 2^{-m}. */
const Real kTermError( "1e-45" );

void accumulate( PotentialValue& v, PotentialTerm t )
{
  v.value += t.value;
  if ( t.exact )
  {
    if ( v.exact )
    {
      *v.exact += *t.exact;
    }
  }
  else
  {
    v.exact.reset();
    v.error += kTermError;
  }
  v.terms.push_back( std::move( t ) );
}

} // namespace

PotentialValue potential_from_profile( const CoordinateProfile& p, const CoordinateMeasureKind& kind, CoordinateMask h )
{
  PotentialValue v;
  v.exact = BigRational( 0 );
  for ( int i = 0; i < p.arity; ++i )
  {
    if ( ( ( h >> i ) & 1u ) && p.is_relevant( i ) )
    {
      accumulate( v, potential_term( i, p.value( i, kind ) ) );
    }
  }
  return v;
}

PotentialValue restricted_potential( const BooleanFunction& f, const CoordinateMeasureKind& kind, CoordinateMask h )
{
  const bool cert = kind.tag == MeasureTag::CertI || kind.tag == MeasureTag::MixCS;
  if ( cert && f.arity() > kSearchMaxArity )
  {
    throw std::invalid_argument( "potential: arity above the certificate search cap" );
  }
  return potential_from_profile( coordinate_profile( f, cert ), kind, h );
}

PotentialValue potential( const BooleanFunction& f, const CoordinateMeasureKind& kind )
{
  const CoordinateMask all = f.arity() == 32 ? ~CoordinateMask{ 0 } : ( CoordinateMask{ 1 } << f.arity() ) - 1;
  return restricted_potential( f, kind, all );
}

void write_potential( std::ostream& out, const PotentialValue& v )
{
  for ( const auto& t : v.terms )
  {
    out << t.coordinate + 1 << '\t' << t.m << '\t' << ( t.exact ? t.exact->str() : t.value.str( 30 ) ) << '\n';
  }
  out << "total\t" << ( v.exact ? v.exact->str() : v.value.str( 30 ) ) << '\n';
}

bool potential_leq( const PotentialValue& a, const PotentialValue& b, double slack )
{
  if ( a.exact && b.exact )
  {
    return *a.exact <= *b.exact;
  }
  return a.value <= b.value + a.error + b.error + Real( slack );
}

/* r constants */

BigRational dictator_minimum( const CoordinateMeasureKind& kind )
{
  const auto x = family( Family::Dict, 1 );
  return std::min( coordinate_measure( x, 0, kind ), coordinate_measure( x.complement(), 0, kind ) );
}

BigRational r_constant( const CoordinateMeasureKind& kind )
{
  switch ( kind.tag )
  {
  case MeasureTag::DegI: return 1;
  case MeasureTag::SensI: return 2;
  case MeasureTag::CertI: return 2;
  case MeasureTag::MixDS: return kind.beta * BigRational( 1 ) + ( BigRational( 1 ) - kind.beta ) * BigRational( 2 );
  case MeasureTag::MixCS: return kind.beta * BigRational( 2 ) + ( BigRational( 1 ) - kind.beta ) * BigRational( 2 );
  }
  return 0;
}

void verify_r_constants()
{
  static std::once_flag once;
  std::call_once( once, [] {
    for ( const auto& kind : standard_kinds() )
    {
      if ( dictator_minimum( kind ) != r_constant( kind ) )
      {
        throw std::logic_error( "r constant for " + kind.name() + " disagrees with the dictators" );
      }
    }
  } );
}

/* checks */

RrcmResult check_rrcm( const BooleanFunction& f, Coordinate i, const CoordinateMeasureKind& kind, ProfileCache* cache )
{
  check_coordinate( f, i );
  ProfileCache local;
  ProfileCache& pc = cache ? *cache : local;
  const CoordinateProfile pf = pc.get( f );
  const BigRational mi = pf.value( i, kind );
  const bool relevant = pf.is_relevant( i );
  for ( int j = 0; j < f.arity(); ++j )
  {
    if ( j == i )
    {
      continue;
    }
    const int ii = j < i ? i - 1 : i;
    for ( int b = 0; b <= 1; ++b )
    {
      const auto& pg = pc.get( restrict( f, j, b ) );
      if ( pg.value( ii, kind ) > mi )
      {
        return { false, std::pair{ j, b == 1 }, 1 };
      }
      if ( relevant && !pg.is_relevant( ii ) )
      {
        const auto& ph = pc.get( restrict( f, j, b == 0 ) );
        if ( ph.value( ii, kind ) > mi - BigRational( 1 ) )
        {
          return { false, std::pair{ j, b == 1 }, 2 };
        }
      }
    }
  }
  return {};
}

InequalityResult check_restriction_inequality( const BooleanFunction& f, Coordinate i, const CoordinateMeasureKind& kind,
                                               CoordinateMask h, ProfileCache* cache )
{
  check_coordinate( f, i );
  if ( ( h >> i ) & 1u )
  {
    throw std::invalid_argument( "check_restriction_inequality: i must not lie in H" );
  }
  if ( f.arity() < 32 && ( h >> f.arity() ) != 0 )
  {
    throw std::invalid_argument( "check_restriction_inequality: H out of range" );
  }
  ProfileCache local;
  ProfileCache& pc = cache ? *cache : local;
  const CoordinateProfile pf = pc.get( f );
  const CoordinateMask single = CoordinateMask{ 1 } << i;
  const auto lhs = potential_from_profile( pf, kind, single );

  const int k = std::popcount( h );
  const int ii = i - std::popcount( h & ( single - 1 ) );
  const CoordinateMask ii_mask = CoordinateMask{ 1 } << ii;
  std::optional<BigRational> sum_exact = BigRational( 0 );
  Real sum = 0, error = 0;
  for ( std::uint32_t a = 0; a < ( std::uint32_t{ 1 } << k ); ++a )
  {
    const auto g = restrict( f, PartialAssignment::from_mask( h, deposit_bits( a, h ) ) );
    const auto t = potential_from_profile( pc.get( g ), kind, ii_mask );
    sum += t.value;
    error += t.error;
    if ( t.exact && sum_exact )
    {
      *sum_exact += *t.exact;
    }
    else
    {
      sum_exact.reset();
    }
  }
  InequalityResult r;
  const Real denom = Real( std::uint64_t{ 1 } << k );
  r.lhs = lhs.value;
  r.rhs = sum / denom;
  if ( lhs.exact && sum_exact )
  {
    r.pass = *lhs.exact * BigRational::pow2( k ) <= *sum_exact;
  }
  else
  {
    r.pass = r.lhs <= r.rhs + lhs.error + error / denom + Real( 1e-30 );
  }
  return r;
}

InfluenceBoundResult check_influence_bound( const BooleanFunction& f, const CoordinateMeasureKind& kind, const CoordinateProfile* profile )
{
  verify_r_constants();
  CoordinateProfile local;
  if ( !profile )
  {
    local = coordinate_profile( f, kind.tag == MeasureTag::CertI || kind.tag == MeasureTag::MixCS );
    profile = &local;
  }
  const BigRational r = r_constant( kind );
  InfluenceBoundResult out;
  BigRational total_influence;
  for ( int i = 0; i < f.arity(); ++i )
  {
    total_influence += BigRational( static_cast<long>( sensitive_edge_count( f, i ) ), static_cast<long>( f.size() ) );
  }
  // 2^{-r} * x, exact when r is an integer.
  auto scaled = [&r]( const BigRational& x ) { return potential_term( 0, r ).value * to_real( x ); };
  const bool exact_r = r.is_integer();
  const BigRational two_r = exact_r ? BigRational::pow2( -static_cast<int>( r.numerator().get_si() ) ) : BigRational( 0 );

  for ( int i = 0; i < f.arity(); ++i )
  {
    if ( !profile->is_relevant( i ) )
    {
      continue;
    }
    const auto t = potential_term( i, profile->value( i, kind ) );
    const BigRational inf( static_cast<long>( sensitive_edge_count( f, i ) ), static_cast<long>( f.size() ) );
    const bool ok = ( t.exact && exact_r ) ? *t.exact <= two_r * inf : t.value <= scaled( inf ) + Real( 1e-30 );
    if ( !ok && out.pass )
    {
      out.pass = false;
      out.failing_coordinate = i;
    }
  }
  const CoordinateMask all = ( CoordinateMask{ 1 } << f.arity() ) - 1;
  const auto m = potential_from_profile( *profile, kind, all );
  out.potential_pass = ( m.exact && exact_r ) ? *m.exact <= two_r * total_influence : m.value <= scaled( total_influence ) + m.error + Real( 1e-30 );
  return out;
}

MonomialSensitivityResult check_monomial_sensitivity( const BooleanFunction& f, int k, const CoordinateProfile* profile )
{
  if ( f.arity() > kMonomialCheckMaxArity )
  {
    throw std::invalid_argument( "check_monomial_sensitivity: arity above 10" );
  }
  CoordinateProfile local;
  if ( !profile )
  {
    local = coordinate_profile( f, false );
    profile = &local;
  }
  CoordinateMask low = 0;
  for ( int i = 0; i < f.arity(); ++i )
  {
    if ( profile->is_relevant( i ) && profile->sens[i] <= k )
    {
      low |= CoordinateMask{ 1 } << i;
    }
  }
  const auto c = mobius_coefficients( f );
  const auto w = walsh_coefficients( f );
  const int limit = ( k - 1 ) * ( k - 1 );
  for ( std::uint32_t s = 0; s < c.size(); ++s )
  {
    if ( ( c[s] != 0 || w[s] != 0 ) && std::popcount( s & low ) > limit )
    {
      return { false, s };
    }
  }
  return {};
}

bool check_junta_count( const BooleanFunction& f, int k, const CoordinateProfile* profile )
{
  CoordinateProfile local;
  if ( !profile )
  {
    local = coordinate_profile( f, false );
    profile = &local;
  }
  int count = 0;
  for ( int i = 0; i < f.arity(); ++i )
  {
    count += profile->is_relevant( i ) && profile->sens[i] <= k;
  }
  return count <= kJuntaConstant * std::pow( k, 3 ) * std::ldexp( 1.0, k );
}

SplitBoundResult check_split_bound( const BooleanFunction& f, CoordinateMask y )
{
  const auto rel = relevant_mask( f );
  if ( ( y & ~rel ) != 0 )
  {
    throw std::invalid_argument( "check_split_bound: Y contains an irrelevant coordinate" );
  }
  SplitBoundResult r;
  r.hypothesis_holds = true;
  int s = 0;
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    CoordinateMask sensitive = 0;
    for ( int i = 0; i < f.arity(); ++i )
    {
      if ( f( x ) != f( x ^ ( std::uint32_t{ 1 } << i ) ) )
      {
        sensitive |= CoordinateMask{ 1 } << i;
      }
    }
    s = std::max( s, std::popcount( sensitive ) );
    if ( std::popcount( sensitive & y ) > 1 )
    {
      r.hypothesis_holds = false;
    }
  }
  if ( r.hypothesis_holds )
  {
    r.bound_holds = static_cast<std::uint64_t>( std::popcount( y ) ) < ( std::uint64_t{ 1 } << ( 2 * s ) );
  }
  return r;
}

BigRational monomial_sens_bound( int d )
{
  if ( d < 0 )
  {
    throw std::invalid_argument( "monomial_sens_bound: negative size" );
  }
  int root = 0;
  while ( ( root + 1 ) * ( root + 1 ) <= d )
  {
    ++root;
  }
  BigRational total;
  for ( int k = 2; k <= root + 1; ++k )
  {
    total += BigRational( 2 * k - 3 ) * BigRational::pow2( -k );
  }
  total += BigRational( d - root * root ) * BigRational::pow2( -( root + 2 ) );
  return total;
}

} // namespace bfc
