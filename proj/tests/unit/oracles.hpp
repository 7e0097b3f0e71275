#pragma once

// Brute-force reference implementations. They read truth tables only and
// share no code with the library beyond BooleanFunction access.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "bfc/boolean_function.hpp"
#include "bfc/lp.hpp"
#include "bfc/rational.hpp"

namespace oracle
{

using bfc::BigRational;
using bfc::BooleanFunction;

inline int bit( const BooleanFunction& f, std::uint32_t x ) { return f( x ) ? 1 : 0; }

/// c_S = sum_{T subset S} (-1)^{|S \ T|} f(1_T), straight from the definition.
inline std::vector<long> mobius( const BooleanFunction& f )
{
  std::vector<long> c( f.size() );
  for ( std::uint32_t s = 0; s < f.size(); ++s )
  {
    long acc = 0;
    for ( std::uint32_t t = s;; t = ( t - 1 ) & s )
    {
      acc += ( ( std::popcount( s ^ t ) & 1 ) ? -1 : 1 ) * bit( f, t );
      if ( t == 0 )
      {
        break;
      }
    }
    c[s] = acc;
  }
  return c;
}

inline int degree( const BooleanFunction& f )
{
  const auto c = oracle::mobius( f );
  int d = 0;
  for ( std::uint32_t s = 0; s < c.size(); ++s )
  {
    if ( c[s] )
    {
      d = std::max( d, std::popcount( s ) );
    }
  }
  return d;
}

/// fhat(S) with outputs and inputs mapped 0 -> +1, 1 -> -1.
inline std::vector<BigRational> fourier( const BooleanFunction& f )
{
  std::vector<BigRational> out( f.size() );
  for ( std::uint32_t s = 0; s < f.size(); ++s )
  {
    long acc = 0;
    for ( std::uint32_t x = 0; x < f.size(); ++x )
    {
      acc += ( ( bit( f, x ) + std::popcount( x & s ) ) & 1 ) ? -1 : 1;
    }
    out[s] = BigRational( acc, static_cast<long>( f.size() ) );
  }
  return out;
}

inline int sensitivity_at( const BooleanFunction& f, std::uint32_t x )
{
  int s = 0;
  for ( int i = 0; i < f.arity(); ++i )
  {
    s += f( x ) != f( x ^ ( 1u << i ) );
  }
  return s;
}

inline int sensitivity( const BooleanFunction& f )
{
  int s = 0;
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    s = std::max( s, oracle::sensitivity_at( f, x ) );
  }
  return s;
}

/// Largest disjoint family of sensitive blocks (any blocks, not only minimal ones).
inline int block_sensitivity_at( const BooleanFunction& f, std::uint32_t x )
{
  std::vector<std::uint32_t> blocks;
  for ( std::uint32_t b = 1; b < f.size(); ++b )
  {
    if ( f( x ) != f( x ^ b ) )
    {
      blocks.push_back( b );
    }
  }
  std::map<std::uint32_t, int> memo;
  auto best = [&]( auto&& self, std::uint32_t used ) -> int {
    if ( auto it = memo.find( used ); it != memo.end() )
    {
      return it->second;
    }
    int r = 0;
    for ( auto b : blocks )
    {
      if ( !( b & used ) )
      {
        r = std::max( r, 1 + self( self, used | b ) );
      }
    }
    return memo[used] = r;
  };
  return best( best, 0 );
}

inline int block_sensitivity( const BooleanFunction& f )
{
  int r = 0;
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    r = std::max( r, oracle::block_sensitivity_at( f, x ) );
  }
  return r;
}

/// Smallest set S such that every y agreeing with x on S has f(y) = f(x).
inline int certificate_at( const BooleanFunction& f, std::uint32_t x )
{
  const std::uint32_t full = f.size() - 1;
  int best = f.arity();
  for ( std::uint32_t s = 0; s < f.size(); ++s )
  {
    if ( std::popcount( s ) >= best )
    {
      continue;
    }
    bool ok = true;
    for ( std::uint32_t y = 0; y < f.size() && ok; ++y )
    {
      if ( ( ( y ^ x ) & s & full ) == 0 && f( y ) != f( x ) )
      {
        ok = false;
      }
    }
    if ( ok )
    {
      best = std::popcount( s );
    }
  }
  return best;
}

inline int certificate( const BooleanFunction& f )
{
  int c = 0;
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    c = std::max( c, oracle::certificate_at( f, x ) );
  }
  return c;
}

/// Minimax over query orders on subcubes (fixed mask, fixed values).
inline int dt_depth( const BooleanFunction& f )
{
  std::map<std::pair<std::uint32_t, std::uint32_t>, int> memo;
  auto go = [&]( auto&& self, std::uint32_t fixed, std::uint32_t vals ) -> int {
    if ( auto it = memo.find( { fixed, vals } ); it != memo.end() )
    {
      return it->second;
    }
    int first = -1;
    bool constant = true;
    for ( std::uint32_t y = 0; y < f.size() && constant; ++y )
    {
      if ( ( y & fixed ) == vals )
      {
        if ( first < 0 )
        {
          first = bit( f, y );
        }
        else if ( bit( f, y ) != first )
        {
          constant = false;
        }
      }
    }
    int r = 0;
    if ( !constant )
    {
      r = 1 << 20;
      for ( int i = 0; i < f.arity(); ++i )
      {
        const std::uint32_t m = 1u << i;
        if ( !( fixed & m ) )
        {
          r = std::min( r, 1 + std::max( self( self, fixed | m, vals ), self( self, fixed | m, vals | m ) ) );
        }
      }
    }
    return memo[{ fixed, vals }] = r;
  };
  return go( go, 0, 0 );
}

inline std::vector<BigRational> influences( const BooleanFunction& f )
{
  std::vector<BigRational> out;
  for ( int i = 0; i < f.arity(); ++i )
  {
    long n = 0;
    for ( std::uint32_t x = 0; x < f.size(); ++x )
    {
      n += f( x ) != f( x ^ ( 1u << i ) );
    }
    out.emplace_back( n, static_cast<long>( f.size() ) );
  }
  return out;
}

inline int num_relevant( const BooleanFunction& f )
{
  int n = 0;
  for ( const auto& inf : oracle::influences( f ) )
  {
    n += !inf.is_zero();
  }
  return n;
}

inline bool is_monotone( const BooleanFunction& f )
{
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    for ( std::uint32_t y = 0; y < f.size(); ++y )
    {
      if ( ( x & y ) == x && f( x ) && !f( y ) )
      {
        return false;
      }
    }
  }
  return true;
}

/// Fourier-Motzkin elimination over the rationals. Exponential, fine for a handful of variables.
inline bool fm_feasible( const bfc::LinearProgram& lp )
{
  struct Row
  {
    std::vector<BigRational> a;
    BigRational b;
  };
  std::vector<Row> rows;
  for ( const auto& c : lp.constraints() )
  {
    std::vector<BigRational> neg;
    for ( const auto& v : c.coefficients )
    {
      neg.push_back( -v );
    }
    if ( c.relation != bfc::Relation::GreaterEqual )
    {
      rows.push_back( { c.coefficients, c.rhs } );
    }
    if ( c.relation != bfc::Relation::LessEqual )
    {
      rows.push_back( { neg, -c.rhs } );
    }
  }
  for ( int j = 0; j < lp.num_variables(); ++j )
  {
    std::vector<Row> pos, negs, keep;
    for ( auto& r : rows )
    {
      const int s = r.a[j].sign();
      ( s > 0 ? pos : s < 0 ? negs : keep ).push_back( r );
    }
    for ( const auto& p : pos )
    {
      for ( const auto& n : negs )
      {
        const BigRational lp_ = p.a[j], ln = -n.a[j];
        Row r{ std::vector<BigRational>( p.a.size() ), p.b * ln + n.b * lp_ };
        for ( std::size_t k = 0; k < p.a.size(); ++k )
        {
          r.a[k] = p.a[k] * ln + n.a[k] * lp_;
        }
        keep.push_back( std::move( r ) );
      }
    }
    rows = std::move( keep );
  }
  return std::all_of( rows.begin(), rows.end(), []( const Row& r ) { return r.b.sign() >= 0; } );
}

inline double direct_power_sum( int p, double r, long a )
{
  double s = 0;
  for ( long i = a; i < a + 20000; ++i )
  {
    s += std::pow( static_cast<double>( i ), p ) * std::pow( r, static_cast<double>( i ) );
  }
  return s;
}

inline BooleanFunction random_function( int n, std::mt19937_64& rng )
{
  BooleanFunction f( n );
  std::bernoulli_distribution coin( 0.5 );
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    f.set( x, coin( rng ) );
  }
  return f;
}

} // namespace oracle
