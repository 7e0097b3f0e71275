#include "bfc/measures.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "bfc/lp.hpp"
#include "bfc/polynomial.hpp"

namespace bfc
{

namespace
{

void require_search_arity( const BooleanFunction& f, const char* what )
{
  if ( f.arity() > kSearchMaxArity )
  {
    throw std::invalid_argument( std::string( what ) + ": arity " + std::to_string( f.arity() ) + " exceeds exact-mode cap " +
                                 std::to_string( kSearchMaxArity ) );
  }
}

/* Maximum disjoint packing of the minimal sensitive blocks at one point. */
class BlockPacker
{
public:
  explicit BlockPacker( int arity ) : size_( std::uint32_t{ 1 } << arity ), sensitive_( size_ ), has_sub_( size_ ), memo_( size_ ), by_low_( arity ) {}

  int run( const BooleanFunction& f, std::uint32_t x, std::vector<CoordinateMask>* blocks )
  {
    const bool v = f( x );
    for ( std::uint32_t b = 0; b < size_; ++b )
    {
      sensitive_[b] = f( x ^ b ) != v;
    }
    for ( auto& list : by_low_ )
    {
      list.clear();
    }
    has_sub_[0] = 0;
    for ( std::uint32_t b = 1; b < size_; ++b )
    {
      std::uint8_t has = 0;
      for ( std::uint32_t rest = b; rest; rest &= rest - 1 )
      {
        const std::uint32_t p = b ^ ( rest & ( ~rest + 1 ) );
        if ( sensitive_[p] || has_sub_[p] )
        {
          has = 1;
          break;
        }
      }
      has_sub_[b] = has;
      if ( sensitive_[b] && !has )
      {
        by_low_[std::countr_zero( b )].push_back( b );
      }
    }
    std::fill( memo_.begin(), memo_.end(), -1 );
    const std::uint32_t all = size_ - 1;
    const int best = solve( all );
    if ( blocks )
    {
      blocks->clear();
      for ( std::uint32_t avail = all; avail; )
      {
        const int c = std::countr_zero( avail );
        const int target = solve( avail );
        if ( solve( avail & ~( std::uint32_t{ 1 } << c ) ) == target )
        {
          avail &= ~( std::uint32_t{ 1 } << c );
          continue;
        }
        for ( auto b : by_low_[c] )
        {
          if ( ( b & ~avail ) == 0 && 1 + solve( avail & ~b ) == target )
          {
            blocks->push_back( b );
            avail &= ~b;
            break;
          }
        }
      }
    }
    return best;
  }

private:
  int solve( std::uint32_t avail )
  {
    if ( avail == 0 )
    {
      return 0;
    }
    if ( memo_[avail] >= 0 )
    {
      return memo_[avail];
    }
    const int c = std::countr_zero( avail );
    int best = solve( avail & ~( std::uint32_t{ 1 } << c ) );
    for ( auto b : by_low_[c] )
    {
      if ( ( b & ~avail ) == 0 )
      {
        best = std::max( best, 1 + solve( avail & ~b ) );
      }
    }
    memo_[avail] = static_cast<std::int8_t>( best );
    return best;
  }

  std::uint32_t size_;
  std::vector<std::uint8_t> sensitive_, has_sub_;
  std::vector<std::int8_t> memo_;
  std::vector<std::vector<std::uint32_t>> by_low_;
};

} // namespace

int degree( const BooleanFunction& f )
{
  const auto c = mobius_coefficients( f );
  int d = 0;
  for ( std::uint32_t s = 0; s < c.size(); ++s )
  {
    if ( c[s] != 0 )
    {
      d = std::max( d, std::popcount( s ) );
    }
  }
  return d;
}

int sensitivity_at( const BooleanFunction& f, std::uint32_t x )
{
  const bool v = f( x );
  int s = 0;
  for ( int i = 0; i < f.arity(); ++i )
  {
    s += f( x ^ ( std::uint32_t{ 1 } << i ) ) != v;
  }
  return s;
}

SensitivityResult sensitivity( const BooleanFunction& f )
{
  SensitivityResult r;
  r.per_point.resize( f.size() );
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    const int s = sensitivity_at( f, x );
    r.per_point[x] = s;
    r.s = std::max( r.s, s );
    ( f( x ) ? r.s1 : r.s0 ) = std::max( f( x ) ? r.s1 : r.s0, s );
  }
  return r;
}

int block_sensitivity_at( const BooleanFunction& f, std::uint32_t x, std::vector<CoordinateMask>* blocks )
{
  require_search_arity( f, "block_sensitivity" );
  BlockPacker packer( f.arity() );
  return packer.run( f, x, blocks );
}

BlockSensitivityResult block_sensitivity( const BooleanFunction& f )
{
  require_search_arity( f, "block_sensitivity" );
  BlockSensitivityResult r;
  r.per_point.resize( f.size() );
  BlockPacker packer( f.arity() );
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    r.per_point[x] = packer.run( f, x, nullptr );
    if ( r.per_point[x] > r.bs )
    {
      r.bs = r.per_point[x];
      r.witness = x;
    }
  }
  packer.run( f, r.witness, &r.blocks );
  return r;
}

SubcubeAnalysis analyze_subcubes( const BooleanFunction& f )
{
  require_search_arity( f, "subcube analysis" );
  const int n = f.arity();
  std::vector<std::uint32_t> pow3( n + 1, 1 );
  for ( int i = 1; i <= n; ++i )
  {
    pow3[i] = pow3[i - 1] * 3;
  }
  const std::uint32_t states = pow3[n];
  std::vector<std::int8_t> constant( states );
  std::vector<std::uint8_t> dt( states );
  std::vector<std::uint8_t> cert( states );
  std::vector<std::uint8_t> digit( n, 0 );

  for ( std::uint32_t idx = 0; idx < states; ++idx )
  {
    if ( idx > 0 )
    {
      for ( int i = 0; i < n; ++i )
      {
        if ( ++digit[i] < 3 )
        {
          break;
        }
        digit[i] = 0;
      }
    }
    int first_free = -1;
    std::uint32_t point = 0;
    for ( int i = 0; i < n; ++i )
    {
      if ( digit[i] == 2 )
      {
        first_free = first_free < 0 ? i : first_free;
      }
      else if ( digit[i] == 1 )
      {
        point |= std::uint32_t{ 1 } << i;
      }
    }
    if ( first_free < 0 )
    {
      constant[idx] = f( point ) ? 1 : 0;
      dt[idx] = 0;
      continue;
    }
    const auto c0 = constant[idx - 2 * pow3[first_free]];
    const auto c1 = constant[idx - pow3[first_free]];
    constant[idx] = ( c0 >= 0 && c0 == c1 ) ? c0 : -1;
    if ( constant[idx] >= 0 )
    {
      dt[idx] = 0;
      continue;
    }
    int best = std::numeric_limits<int>::max();
    for ( int i = first_free; i < n; ++i )
    {
      if ( digit[i] == 2 )
      {
        best = std::min<int>( best, std::max( dt[idx - 2 * pow3[i]], dt[idx - pow3[i]] ) );
      }
    }
    dt[idx] = static_cast<std::uint8_t>( 1 + best );
  }

  // Smallest codimension of a constant subcube containing each subcube, top-down.
  constexpr std::uint8_t kNone = 0xff;
  std::fill( digit.begin(), digit.end(), 2 );
  for ( std::uint32_t idx = states; idx-- > 0; )
  {
    if ( idx + 1 < states )
    {
      for ( int i = 0; i < n; ++i )
      {
        if ( digit[i]-- > 0 )
        {
          break;
        }
        digit[i] = 2;
      }
    }
    int fixed = 0;
    std::uint8_t best = kNone;
    for ( int i = 0; i < n; ++i )
    {
      if ( digit[i] != 2 )
      {
        ++fixed;
        best = std::min( best, cert[idx + ( 2 - digit[i] ) * pow3[i]] );
      }
    }
    if ( constant[idx] >= 0 )
    {
      best = std::min<std::uint8_t>( best, static_cast<std::uint8_t>( fixed ) );
    }
    cert[idx] = best;
  }

  SubcubeAnalysis out;
  const std::uint32_t root = states - 1;
  out.dt = dt[root];
  if ( constant[root] < 0 )
  {
    for ( int i = 0; i < n; ++i )
    {
      if ( 1 + std::max( dt[root - 2 * pow3[i]], dt[root - pow3[i]] ) == out.dt )
      {
        out.dt_root = i;
        break;
      }
    }
  }
  out.certificate.resize( f.size() );
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    std::uint32_t idx = 0;
    for ( int i = 0; i < n; ++i )
    {
      idx += ( ( x >> i ) & 1u ) * pow3[i];
    }
    out.certificate[x] = cert[idx];
  }
  return out;
}

CertificateResult certificate_complexity( const BooleanFunction& f )
{
  CertificateResult r;
  r.per_point = analyze_subcubes( f ).certificate;
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    const int c = r.per_point[x];
    r.c = std::max( r.c, c );
    auto& signed_max = f( x ) ? r.c1 : r.c0;
    signed_max = std::max( signed_max, c );
    auto& signed_min = f( x ) ? r.c_min1 : r.c_min0;
    signed_min = signed_min ? std::min( *signed_min, c ) : c;
    r.c_min = r.c_min ? std::min( *r.c_min, c ) : c;
  }
  return r;
}

int dt_depth( const BooleanFunction& f )
{
  return analyze_subcubes( f ).dt;
}

std::uint32_t sensitive_edge_count( const BooleanFunction& f, Coordinate i )
{
  if ( i < 0 || i >= f.arity() )
  {
    throw std::out_of_range( "coordinate out of range" );
  }
  const std::uint32_t bit = std::uint32_t{ 1 } << i;
  std::uint32_t count = 0;
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    count += f( x ) != f( x ^ bit );
  }
  return count;
}

InfluenceResult influence( const BooleanFunction& f )
{
  const auto w = walsh_coefficients( f );
  const int n = f.arity();
  InfluenceResult r;
  for ( int i = 0; i < n; ++i )
  {
    const std::uint32_t bit = std::uint32_t{ 1 } << i;
    const std::uint64_t count = sensitive_edge_count( f, i );
    // count / 2^n must equal sum_{S contains i} W(S)^2 / 4^n.
    std::uint64_t fourier = 0;
    for ( std::uint32_t s = 0; s < w.size(); ++s )
    {
      if ( s & bit )
      {
        fourier += static_cast<std::uint64_t>( w[s] * w[s] );
      }
    }
    if ( count * f.size() != fourier )
    {
      throw std::logic_error( "influence: counting and Fourier disagree on coordinate " + std::to_string( i + 1 ) );
    }
    r.per_coordinate.push_back( BigRational( static_cast<long>( count ), static_cast<long>( f.size() ) ) );
    r.total += r.per_coordinate.back();
  }
  return r;
}

int approx_degree( const BooleanFunction& f, const BigRational& eps )
{
  if ( f.arity() > kApproxDegreeMaxArity )
  {
    throw std::invalid_argument( "approx_degree: arity above " + std::to_string( kApproxDegreeMaxArity ) );
  }
  if ( eps.sign() <= 0 || eps >= BigRational( 1, 2 ) )
  {
    throw std::invalid_argument( "approx_degree: need 0 < eps < 1/2" );
  }
  const int top = degree( f );
  for ( int d = 0; d < top; ++d )
  {
    if ( simplex_feasible( adeg_lp( f, d, eps ) ).feasible )
    {
      return d;
    }
  }
  if ( !simplex_feasible( adeg_lp( f, top, eps ) ).feasible )
  {
    throw std::logic_error( "approx_degree: exact degree infeasible" );
  }
  return top;
}

MeasureReport measure_report( const BooleanFunction& f, std::optional<BigRational> eps )
{
  MeasureReport r;
  r.arity = f.arity();
  r.degree = degree( f );
  const auto s = sensitivity( f );
  r.s = s.s;
  r.s0 = s.s0;
  r.s1 = s.s1;
  r.bs = block_sensitivity( f ).bs;
  const auto sub = analyze_subcubes( f );
  r.dt = sub.dt;
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    const int c = sub.certificate[x];
    r.c = std::max( r.c, c );
    auto& signed_max = f( x ) ? r.c1 : r.c0;
    signed_max = std::max( signed_max, c );
    auto& signed_min = f( x ) ? r.c_min1 : r.c_min0;
    signed_min = signed_min ? std::min( *signed_min, c ) : c;
    r.c_min = r.c_min ? std::min( *r.c_min, c ) : c;
  }
  auto inf = influence( f );
  r.influences = std::move( inf.per_coordinate );
  r.total_influence = inf.total;
  if ( eps )
  {
    r.eps = *eps;
    r.approx_degree = approx_degree( f, *eps );
  }
  return r;
}

void write_measure_report( std::ostream& out, const MeasureReport& r )
{
  auto opt = []( const std::optional<int>& v ) { return v ? std::to_string( *v ) : std::string( "-" ); };
  out << "arity\t" << r.arity << '\n';
  out << "deg\t" << r.degree << '\n';
  out << "s\t" << r.s << '\n';
  out << "s0\t" << r.s0 << '\n';
  out << "s1\t" << r.s1 << '\n';
  out << "bs\t" << r.bs << '\n';
  out << "C\t" << r.c << '\n';
  out << "C0\t" << r.c0 << '\n';
  out << "C1\t" << r.c1 << '\n';
  out << "Cmin\t" << opt( r.c_min ) << '\n';
  out << "Cmin0\t" << opt( r.c_min0 ) << '\n';
  out << "Cmin1\t" << opt( r.c_min1 ) << '\n';
  out << "DT\t" << r.dt << '\n';
  out << "I\t" << r.total_influence << '\n';
  for ( std::size_t i = 0; i < r.influences.size(); ++i )
  {
    out << "Inf_" << i + 1 << '\t' << r.influences[i] << '\n';
  }
  out << "eps\t" << ( r.eps ? r.eps->str() : std::string( "-" ) ) << '\n';
  out << "adeg\t" << opt( r.approx_degree ) << '\n';
}

} // namespace bfc
