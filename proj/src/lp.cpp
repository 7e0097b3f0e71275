#include "bfc/lp.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace bfc
{

LinearProgram::LinearProgram( int num_variables ) : num_variables_( num_variables )
{
  if ( num_variables < 0 )
  {
    throw std::invalid_argument( "LinearProgram: negative variable count" );
  }
}

void LinearProgram::add( std::vector<BigRational> coefficients, Relation relation, BigRational rhs )
{
  if ( static_cast<int>( coefficients.size() ) != num_variables_ )
  {
    throw std::invalid_argument( "LinearProgram: expected " + std::to_string( num_variables_ ) + " coefficients, got " +
                                 std::to_string( coefficients.size() ) );
  }
  constraints_.push_back( { std::move( coefficients ), relation, std::move( rhs ) } );
}

bool LinearProgram::satisfied_by( const std::vector<BigRational>& x ) const
{
  if ( static_cast<int>( x.size() ) != num_variables_ )
  {
    return false;
  }
  for ( const auto& c : constraints_ )
  {
    BigRational lhs;
    for ( int j = 0; j < num_variables_; ++j )
    {
      if ( !c.coefficients[j].is_zero() )
      {
        lhs += c.coefficients[j] * x[j];
      }
    }
    const bool ok = c.relation == Relation::Equal ? lhs == c.rhs : c.relation == Relation::LessEqual ? lhs <= c.rhs : lhs >= c.rhs;
    if ( !ok )
    {
      return false;
    }
  }
  return true;
}

/* IncrementalSimplex */

IncrementalSimplex::IncrementalSimplex( int num_variables ) : num_original_( num_variables )
{
  bounds_.resize( num_variables );
  value_.resize( num_variables );
  position_.resize( num_variables );
  for ( int j = 0; j < num_variables; ++j )
  {
    col_var_.push_back( j );
    position_[j] = -( j + 1 );
  }
}

int IncrementalSimplex::add_row( const std::vector<BigRational>& coefficients, std::optional<BigRational> lo,
                                 std::optional<BigRational> hi )
{
  if ( static_cast<int>( coefficients.size() ) != num_original_ )
  {
    throw std::invalid_argument( "IncrementalSimplex: coefficient count mismatch" );
  }
  const int cols = static_cast<int>( col_var_.size() );
  std::vector<BigRational> row( cols );
  BigRational value;
  for ( int j = 0; j < num_original_; ++j )
  {
    const auto& a = coefficients[j];
    if ( a.is_zero() )
    {
      continue;
    }
    value += a * value_[j];
    if ( position_[j] < 0 )
    {
      row[-position_[j] - 1] += a;
    }
    else
    {
      const auto& basic_row = tableau_[position_[j]];
      for ( int c = 0; c < cols; ++c )
      {
        if ( !basic_row[c].is_zero() )
        {
          row[c] += a * basic_row[c];
        }
      }
    }
  }
  const int var = total_variables();
  bounds_.push_back( { std::move( lo ), std::move( hi ) } );
  value_.push_back( std::move( value ) );
  position_.push_back( static_cast<int>( tableau_.size() ) );
  tableau_.push_back( std::move( row ) );
  row_var_.push_back( var );
  slack_of_row_.push_back( var );
  return static_cast<int>( slack_of_row_.size() ) - 1;
}

void IncrementalSimplex::set_row_bounds( int row, std::optional<BigRational> lo, std::optional<BigRational> hi )
{
  const int var = slack_of_row_.at( row );
  bounds_[var] = { std::move( lo ), std::move( hi ) };
  if ( position_[var] < 0 )
  {
    const int col = -position_[var] - 1;
    if ( below( var ) )
    {
      update_nonbasic( col, *bounds_[var].lo );
    }
    else if ( above( var ) )
    {
      update_nonbasic( col, *bounds_[var].hi );
    }
  }
}

bool IncrementalSimplex::below( int var ) const
{
  return bounds_[var].lo && value_[var] < *bounds_[var].lo;
}

bool IncrementalSimplex::above( int var ) const
{
  return bounds_[var].hi && value_[var] > *bounds_[var].hi;
}

void IncrementalSimplex::update_nonbasic( int col, const BigRational& v )
{
  const int var = col_var_[col];
  const BigRational theta = v - value_[var];
  for ( std::size_t r = 0; r < tableau_.size(); ++r )
  {
    if ( !tableau_[r][col].is_zero() )
    {
      value_[row_var_[r]] += tableau_[r][col] * theta;
    }
  }
  value_[var] = v;
}

void IncrementalSimplex::pivot_and_update( int r, int c, const BigRational& v )
{
  const int xi = row_var_[r];
  const int xj = col_var_[c];
  const BigRational a = tableau_[r][c];
  const BigRational theta = ( v - value_[xi] ) / a;
  value_[xi] = v;
  value_[xj] += theta;
  for ( std::size_t k = 0; k < tableau_.size(); ++k )
  {
    if ( static_cast<int>( k ) != r && !tableau_[k][c].is_zero() )
    {
      value_[row_var_[k]] += tableau_[k][c] * theta;
    }
  }

  // Solve row r for xj.
  auto& pivot_row = tableau_[r];
  const BigRational inv = BigRational( 1 ) / a;
  for ( std::size_t cc = 0; cc < pivot_row.size(); ++cc )
  {
    if ( static_cast<int>( cc ) == c )
    {
      pivot_row[cc] = inv;
    }
    else if ( !pivot_row[cc].is_zero() )
    {
      pivot_row[cc] = -pivot_row[cc] * inv;
    }
  }
  for ( std::size_t k = 0; k < tableau_.size(); ++k )
  {
    if ( static_cast<int>( k ) == r )
    {
      continue;
    }
    auto& row = tableau_[k];
    if ( row[c].is_zero() )
    {
      continue;
    }
    const BigRational factor = row[c];
    for ( std::size_t cc = 0; cc < row.size(); ++cc )
    {
      if ( static_cast<int>( cc ) == c )
      {
        row[cc] = factor * pivot_row[cc];
      }
      else if ( !pivot_row[cc].is_zero() )
      {
        row[cc] += factor * pivot_row[cc];
      }
    }
  }

  row_var_[r] = xj;
  col_var_[c] = xi;
  position_[xj] = r;
  position_[xi] = -( c + 1 );
  ++pivots_;
}

bool IncrementalSimplex::check()
{
  for ( std::size_t pivots_since_check = 0;; ++pivots_since_check )
  {
    const bool bland = pivots_since_check >= kBlandAfter;
    int r = -1;
    BigRational worst;
    for ( std::size_t k = 0; k < tableau_.size(); ++k )
    {
      const int var = row_var_[k];
      if ( !below( var ) && !above( var ) )
      {
        continue;
      }
      if ( bland )
      {
        if ( r < 0 || var < row_var_[r] )
        {
          r = static_cast<int>( k );
        }
        continue;
      }
      const BigRational gap = below( var ) ? *bounds_[var].lo - value_[var] : value_[var] - *bounds_[var].hi;
      if ( r < 0 || gap > worst )
      {
        r = static_cast<int>( k );
        worst = gap;
      }
    }
    if ( r < 0 )
    {
      return true;
    }
    const int xi = row_var_[r];
    const bool raise = below( xi );
    int best = -1;
    for ( std::size_t c = 0; c < col_var_.size(); ++c )
    {
      const auto& a = tableau_[r][c];
      if ( a.is_zero() )
      {
        continue;
      }
      const int xj = col_var_[c];
      const bool can_increase = !bounds_[xj].hi || value_[xj] < *bounds_[xj].hi;
      const bool can_decrease = !bounds_[xj].lo || value_[xj] > *bounds_[xj].lo;
      const bool positive = a.sign() > 0;
      const bool suitable = raise ? ( positive ? can_increase : can_decrease ) : ( positive ? can_decrease : can_increase );
      if ( suitable && ( best < 0 || xj < col_var_[best] ) )
      {
        best = static_cast<int>( c );
      }
    }
    if ( best < 0 )
    {
      return false;
    }
    pivot_and_update( r, best, raise ? *bounds_[xi].lo : *bounds_[xi].hi );
  }
}

std::vector<BigRational> IncrementalSimplex::values() const
{
  return { value_.begin(), value_.begin() + num_original_ };
}

/* one-shot solve */

LpResult simplex_feasible( const LinearProgram& lp )
{
  const int k = lp.num_variables();
  struct Row
  {
    std::vector<BigRational> coefficients;
    std::optional<BigRational> lo, hi;
  };
  std::vector<Row> rows;
  std::map<std::vector<BigRational>, std::size_t> index;
  for ( const auto& c : lp.constraints() )
  {
    auto [it, inserted] = index.try_emplace( c.coefficients, rows.size() );
    if ( inserted )
    {
      rows.push_back( { c.coefficients, std::nullopt, std::nullopt } );
    }
    auto& row = rows[it->second];
    if ( c.relation != Relation::LessEqual && ( !row.lo || c.rhs > *row.lo ) )
    {
      row.lo = c.rhs;
    }
    if ( c.relation != Relation::GreaterEqual && ( !row.hi || c.rhs < *row.hi ) )
    {
      row.hi = c.rhs;
    }
  }

  IncrementalSimplex simplex( k );
  for ( auto& row : rows )
  {
    if ( row.lo && row.hi && *row.lo > *row.hi )
    {
      return {};
    }
    const bool zero = std::all_of( row.coefficients.begin(), row.coefficients.end(), []( const BigRational& a ) { return a.is_zero(); } );
    if ( zero )
    {
      if ( ( row.lo && row.lo->sign() > 0 ) || ( row.hi && row.hi->sign() < 0 ) )
      {
        return {};
      }
      continue;
    }
    simplex.add_row( row.coefficients, row.lo, row.hi );
  }
  if ( !simplex.check() )
  {
    return {};
  }
  LpResult result{ true, simplex.values() };
  if ( !lp.satisfied_by( result.witness ) )
  {
    throw std::logic_error( "simplex_feasible: witness fails re-substitution" );
  }
  return result;
}

/* builders */

namespace
{

std::vector<BigRational> moments( int d, int t )
{
  std::vector<BigRational> m;
  m.reserve( d );
  BigRational power( 1 );
  for ( int j = 1; j <= d; ++j )
  {
    power *= BigRational( t );
    m.push_back( power );
  }
  return m;
}

} // namespace

LinearProgram moment_lp( int d, int b, int tau )
{
  if ( d < 1 || b < 2 || ( tau != 0 && tau != 1 ) )
  {
    throw std::invalid_argument( "moment_lp: need d >= 1, b >= 2, tau in {0,1}" );
  }
  LinearProgram lp( d );
  lp.add( moments( d, 1 ), Relation::Equal, 1 );
  for ( int k = 2; k < b; ++k )
  {
    lp.add( moments( d, k ), Relation::GreaterEqual, 0 );
    lp.add( moments( d, k ), Relation::LessEqual, 1 );
  }
  lp.add( moments( d, b ), Relation::Equal, tau );
  return lp;
}

CapScan lp_bs_cap_scan( int d )
{
  if ( d < 1 || d > kLpCapMaxDegree )
  {
    throw std::invalid_argument( "lp_bs_cap: d must lie in [1, " + std::to_string( kLpCapMaxDegree ) + "]" );
  }
  CapScan scan;
  scan.d = d;
  const int first = std::max( 2, d );
  const int last = std::max( first, 2 * d * d );
  for ( int b = first; b <= last; ++b )
  {
    scan.profile.push_back( { b, { false, false } } );
  }

  // Going from b to b + 1 relaxes row b from {tau} to [0, 1] and appends row b + 1.
  for ( int tau = 0; tau <= 1; ++tau )
  {
    const BigRational t( tau );
    IncrementalSimplex simplex( d );
    simplex.add_row( moments( d, 1 ), BigRational( 1 ), BigRational( 1 ) );
    for ( int k = 2; k < first; ++k )
    {
      simplex.add_row( moments( d, k ), BigRational( 0 ), BigRational( 1 ) );
    }
    int last_row = simplex.add_row( moments( d, first ), t, t );
    for ( int b = first; b <= last; ++b )
    {
      if ( b > first )
      {
        simplex.set_row_bounds( last_row, BigRational( 0 ), BigRational( 1 ) );
        last_row = simplex.add_row( moments( d, b ), t, t );
      }
      const bool ok = simplex.check();
      if ( ok && !moment_lp( d, b, tau ).satisfied_by( simplex.values() ) )
      {
        throw std::logic_error( "lp_bs_cap: incremental witness fails the moment system" );
      }
      scan.profile[b - first].feasible[tau] = ok;
    }
  }

  scan.cap = 1;
  bool seen_infeasible = false;
  for ( const auto& e : scan.profile )
  {
    const bool any = e.feasible[0] || e.feasible[1];
    if ( any )
    {
      scan.cap = e.b;
      scan.non_monotone = scan.non_monotone || seen_infeasible;
    }
    else
    {
      seen_infeasible = true;
    }
  }
  return scan;
}

int lp_bs_cap( int d )
{
  return lp_bs_cap_scan( d ).cap;
}

std::vector<CoordinateMask> monomials_up_to( int arity, int d )
{
  std::vector<CoordinateMask> out;
  for ( CoordinateMask m = 0; m < ( CoordinateMask{ 1 } << arity ); ++m )
  {
    if ( std::popcount( m ) <= d )
    {
      out.push_back( m );
    }
  }
  std::sort( out.begin(), out.end(), []( CoordinateMask a, CoordinateMask b ) {
    const int pa = std::popcount( a ), pb = std::popcount( b );
    if ( pa != pb )
    {
      return pa < pb;
    }
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
    return false;
  } );
  return out;
}

LinearProgram adeg_lp( const BooleanFunction& f, int d, const BigRational& eps )
{
  if ( f.arity() > kApproxDegreeMaxArity )
  {
    throw std::invalid_argument( "adeg_lp: arity above " + std::to_string( kApproxDegreeMaxArity ) );
  }
  if ( d < 0 || d > f.arity() )
  {
    throw std::invalid_argument( "adeg_lp: need 0 <= d <= arity" );
  }
  const auto monomials = monomials_up_to( f.arity(), d );
  LinearProgram lp( static_cast<int>( monomials.size() ) );
  for ( std::uint32_t x = 0; x < f.size(); ++x )
  {
    std::vector<BigRational> row( monomials.size() );
    for ( std::size_t j = 0; j < monomials.size(); ++j )
    {
      if ( ( monomials[j] & x ) == monomials[j] )
      {
        row[j] = 1;
      }
    }
    const BigRational target( f( x ) ? 1 : 0 );
    lp.add( row, Relation::GreaterEqual, target - eps );
    lp.add( std::move( row ), Relation::LessEqual, target + eps );
  }
  return lp;
}

/* text format */

LinearProgram read_linear_program( std::istream& in )
{
  std::string line;
  if ( !std::getline( in, line ) || line.rfind( "vars=", 0 ) != 0 )
  {
    throw std::runtime_error( "LP text: expected 'vars=<k>' header" );
  }
  const int k = std::stoi( line.substr( 5 ) );
  LinearProgram lp( k );
  int line_no = 1;
  while ( std::getline( in, line ) )
  {
    ++line_no;
    std::istringstream ls( line );
    std::vector<std::string> tokens;
    for ( std::string t; ls >> t; )
    {
      tokens.push_back( t );
    }
    if ( tokens.empty() )
    {
      continue;
    }
    if ( static_cast<int>( tokens.size() ) != k + 2 )
    {
      throw std::runtime_error( "LP text line " + std::to_string( line_no ) + ": expected " + std::to_string( k + 2 ) + " tokens" );
    }
    std::vector<BigRational> coefficients;
    for ( int j = 0; j < k; ++j )
    {
      coefficients.push_back( BigRational::parse( tokens[j] ) );
    }
    Relation rel;
    const auto& r = tokens[k];
    if ( r == "<=" )
      rel = Relation::LessEqual;
    else if ( r == "=" )
      rel = Relation::Equal;
    else if ( r == ">=" )
      rel = Relation::GreaterEqual;
    else
      throw std::runtime_error( "LP text line " + std::to_string( line_no ) + ": bad relation '" + r + "'" );
    lp.add( std::move( coefficients ), rel, BigRational::parse( tokens[k + 1] ) );
  }
  return lp;
}

void write_linear_program( std::ostream& out, const LinearProgram& lp )
{
  out << "vars=" << lp.num_variables() << '\n';
  for ( const auto& c : lp.constraints() )
  {
    for ( const auto& a : c.coefficients )
    {
      out << a << ' ';
    }
    out << ( c.relation == Relation::LessEqual ? "<=" : c.relation == Relation::Equal ? "=" : ">=" ) << ' ' << c.rhs << '\n';
  }
}

} // namespace bfc
