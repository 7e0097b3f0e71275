#include "bfc/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "bfc/bounds.hpp"
#include "bfc/families.hpp"
#include "bfc/lp.hpp"
#include "bfc/measures.hpp"
#include "bfc/polynomial.hpp"
#include "bfc/potentials.hpp"

namespace bfc
{

StandardForm standard_form( const BooleanFunction& f )
{
  if ( f.is_constant() )
  {
    throw std::invalid_argument( "standard_form: constant function" );
  }
  const auto bs = block_sensitivity( f );
  StandardForm out;
  out.z = bs.witness;
  out.blocks = bs.blocks;
  out.complemented = f( bs.witness );
  const int b = static_cast<int>( bs.blocks.size() );
  out.g = BooleanFunction::from_callable( b, [&]( std::uint32_t y ) {
    std::uint32_t x = out.z;
    for ( int i = 0; i < b; ++i )
    {
      if ( ( y >> i ) & 1u )
      {
        x ^= out.blocks[i];
      }
    }
    return f( x ) != out.complemented;
  } );
  if ( b != bs.bs || !is_standard_form( out.g ) )
  {
    throw std::logic_error( "standard_form: result is not in standard form" );
  }
  return out;
}

bool is_standard_form( const BooleanFunction& g )
{
  if ( g( 0 ) )
  {
    return false;
  }
  for ( int i = 0; i < g.arity(); ++i )
  {
    if ( !g( std::uint32_t{ 1 } << i ) )
    {
      return false;
    }
  }
  return true;
}

std::vector<BigRational> symmetrize( const BooleanFunction& g )
{
  const auto c = mobius_coefficients( g );
  std::vector<BigRational> p( g.arity() + 1 );
  for ( std::uint32_t s = 0; s < c.size(); ++s )
  {
    if ( c[s] != 0 )
    {
      p[std::popcount( s )] += BigRational( static_cast<long>( c[s] ) );
    }
  }
  while ( !p.empty() && p.back().is_zero() )
  {
    p.pop_back();
  }
  return p;
}

BigRational evaluate_polynomial( const std::vector<BigRational>& p, const BigRational& mu )
{
  BigRational acc;
  for ( auto it = p.rbegin(); it != p.rend(); ++it )
  {
    acc = acc * mu + *it;
  }
  return acc;
}

StandardFormLemmas check_standard_form_lemmas( const BooleanFunction& g )
{
  if ( !is_standard_form( g ) )
  {
    throw std::invalid_argument( "check_standard_form_lemmas: not in standard form" );
  }
  StandardFormLemmas out;
  const int b = g.arity();
  const auto c = mobius_coefficients( g );
  long pair_sum = 0;
  for ( std::uint32_t s = 0; s < c.size(); ++s )
  {
    if ( std::popcount( s ) == 2 )
    {
      out.pairwise = out.pairwise && ( c[s] == -1 || c[s] == -2 );
      pair_sum += c[s];
    }
  }
  const auto p = symmetrize( g );
  out.p2 = p.size() > 2 ? BigRational( 2 ) * p[2] : BigRational( 0 );
  const long pairs = static_cast<long>( b ) * ( b - 1 ) / 2;
  out.second_derivative = out.p2 == BigRational( 2 * pair_sum ) && out.p2 >= BigRational( -4 * pairs ) && out.p2 <= BigRational( -2 * pairs );
  out.degree = static_cast<int>( p.size() ) - 1 <= degree( g );
  for ( int k = 0; k <= b && b > 0; ++k )
  {
    if ( abs( evaluate_polynomial( p, BigRational( k, b ) ) ) > BigRational( 1 ) )
    {
      out.grid = false;
    }
  }
  return out;
}

MarkovConsequence check_markov_consequence( int bs, int deg )
{
  MarkovConsequence out;
  out.bs = bs;
  out.deg = deg;
  const std::int64_t b = bs, d = deg;
  const std::int64_t d2 = d * d;
  out.quadratic = 3 * ( b * b - b ) <= 2 * ( d2 * d2 - d2 );
  out.linear = b <= 1 || 3 * ( b - 1 ) * ( b - 1 ) <= 2 * d2 * d2;
  return out;
}

MarkovConsequence check_markov_consequence( const BooleanFunction& f )
{
  return check_markov_consequence( block_sensitivity( f ).bs, degree( f ) );
}

std::string check_status_name( CheckStatus s )
{
  switch ( s )
  {
  case CheckStatus::Pass: return "PASS";
  case CheckStatus::Fail: return "FAIL";
  case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

DtIntersectResult check_dt_intersect( const BooleanFunction& f, Coordinate root )
{
  if ( root < 0 || root >= f.arity() )
  {
    throw std::out_of_range( "check_dt_intersect: root out of range" );
  }
  DtIntersectResult out;
  if ( !is_monotone( f ) )
  {
    return out;
  }
  const auto f0 = restrict( f, root, false );
  const auto f1 = restrict( f, root, true );
  if ( f0.is_constant() || f1.is_constant() )
  {
    return out;
  }
  const auto c0 = certificate_complexity( f0 );
  const auto c1 = certificate_complexity( f1 );
  out.left = *c0.c_min0 + *c1.c_min1;
  out.right = std::popcount( relevant_mask( f0 ) & relevant_mask( f1 ) ) + 1;
  out.status = out.left <= out.right ? CheckStatus::Pass : CheckStatus::Fail;
  return out;
}

// ---------------------------------------------------------------- formulas

int Formula::add( Node n )
{
  for ( int c : n.children )
  {
    if ( c < 0 || c >= static_cast<int>( nodes_.size() ) )
    {
      throw std::invalid_argument( "Formula: unknown child node" );
    }
  }
  nodes_.push_back( std::move( n ) );
  return static_cast<int>( nodes_.size() ) - 1;
}

int Formula::input( int index )
{
  if ( index < 0 || index >= arity_ )
  {
    throw std::out_of_range( "Formula: input out of range" );
  }
  return add( { Op::Input, index, {} } );
}

int Formula::constant( bool value ) { return add( { Op::Const, value ? 1 : 0, {} } ); }
int Formula::negate( int child ) { return add( { Op::Not, 0, { child } } ); }
int Formula::conj( std::vector<int> children ) { return add( { Op::And, 0, std::move( children ) } ); }
int Formula::disj( std::vector<int> children ) { return add( { Op::Or, 0, std::move( children ) } ); }

bool Formula::evaluate( const std::vector<bool>& x ) const
{
  if ( root_ < 0 )
  {
    throw std::logic_error( "Formula: no root" );
  }
  std::vector<char> v( nodes_.size() );
  for ( std::size_t k = 0; k < nodes_.size(); ++k )
  {
    const Node& n = nodes_[k];
    switch ( n.op )
    {
    case Op::Input: v[k] = x.at( n.value ); break;
    case Op::Const: v[k] = n.value != 0; break;
    case Op::Not: v[k] = !v[n.children[0]]; break;
    case Op::And:
      v[k] = std::all_of( n.children.begin(), n.children.end(), [&]( int c ) { return v[c] != 0; } );
      break;
    case Op::Or:
      v[k] = std::any_of( n.children.begin(), n.children.end(), [&]( int c ) { return v[c] != 0; } );
      break;
    }
  }
  return v[root_];
}

BooleanFunction Formula::truth_table() const
{
  if ( arity_ > kMaxArity )
  {
    throw std::invalid_argument( "Formula::truth_table: arity above 20" );
  }
  std::vector<bool> x( arity_ );
  return BooleanFunction::from_callable( arity_, [&]( std::uint32_t idx ) {
    for ( int i = 0; i < arity_; ++i )
    {
      x[i] = ( idx >> i ) & 1u;
    }
    return evaluate( x );
  } );
}

namespace
{

// Kleene values.
constexpr char K0 = 0, K1 = 1, KX = 2;

char k_not( char a ) { return a == KX ? KX : static_cast<char>( 1 - a ); }

// Value of each node in the world v = 0 and the world v = 1, and whether the
// two worlds can still disagree at that node under some completion.
struct PairValue
{
  char w0 = KX, w1 = KX;
  bool may_differ = false;
};

class RelevanceSearch
{
public:
  RelevanceSearch( const Formula& f, int v, std::uint64_t budget )
      : f_( f ), v_( v ), budget_( budget ), assign_( f.arity(), KX ), vals_( f.nodes().size() )
  {
  }

  bool run() { return dfs(); }

private:
  void propagate()
  {
    const auto& nodes = f_.nodes();
    for ( std::size_t k = 0; k < nodes.size(); ++k )
    {
      const auto& n = nodes[k];
      PairValue& out = vals_[k];
      switch ( n.op )
      {
      case Formula::Op::Input:
        if ( n.value == v_ )
        {
          out = { K0, K1, true };
        }
        else
        {
          out = { assign_[n.value], assign_[n.value], false };
        }
        break;
      case Formula::Op::Const: out = { static_cast<char>( n.value ), static_cast<char>( n.value ), false }; break;
      case Formula::Op::Not:
      {
        const auto& c = vals_[n.children[0]];
        out = { k_not( c.w0 ), k_not( c.w1 ), c.may_differ };
        break;
      }
      case Formula::Op::And:
      case Formula::Op::Or:
      {
        const char absorbing = n.op == Formula::Op::And ? K0 : K1;
        const char neutral = static_cast<char>( 1 - absorbing );
        auto fold = [&]( auto pick ) {
          bool unknown = false;
          for ( int c : n.children )
          {
            const char x = pick( vals_[c] );
            if ( x == absorbing )
            {
              return absorbing;
            }
            unknown = unknown || x == KX;
          }
          return unknown ? KX : neutral;
        };
        out.w0 = fold( []( const PairValue& p ) { return p.w0; } );
        out.w1 = fold( []( const PairValue& p ) { return p.w1; } );
        const bool any = std::any_of( n.children.begin(), n.children.end(), [&]( int c ) { return vals_[c].may_differ; } );
        out.may_differ = any && !( out.w0 == out.w1 && out.w0 != KX );
        break;
      }
      }
    }
  }

  // An unassigned input feeding an undetermined node on the way to the root.
  int backtrace( int node ) const
  {
    const auto& n = f_.nodes()[node];
    if ( n.op == Formula::Op::Input )
    {
      return n.value != v_ && assign_[n.value] == KX ? n.value : -1;
    }
    for ( int pass = 0; pass < 2; ++pass )
    {
      for ( int c : n.children )
      {
        const auto& pv = vals_[c];
        if ( pv.may_differ == ( pass == 0 ) && ( pv.w0 == KX || pv.w1 == KX ) )
        {
          if ( const int r = backtrace( c ); r >= 0 )
          {
            return r;
          }
        }
      }
    }
    return -1;
  }

  bool dfs()
  {
    if ( ++visited_ > budget_ )
    {
      throw std::runtime_error( "formula_input_relevant: search budget exhausted" );
    }
    propagate();
    const PairValue& r = vals_[f_.root()];
    if ( r.w0 != KX && r.w1 != KX )
    {
      return r.w0 != r.w1;
    }
    if ( !r.may_differ )
    {
      return false;
    }
    const int next = backtrace( f_.root() );
    if ( next < 0 )
    {
      throw std::logic_error( "formula_input_relevant: no branching input" );
    }
    for ( char b : { K0, K1 } )
    {
      assign_[next] = b;
      if ( dfs() )
      {
        return true;
      }
    }
    assign_[next] = KX;
    return false;
  }

  const Formula& f_;
  int v_;
  std::uint64_t budget_;
  std::uint64_t visited_ = 0;
  std::vector<char> assign_;
  std::vector<PairValue> vals_;
};

} // namespace

bool formula_input_relevant( const Formula& f, int v, std::uint64_t budget )
{
  if ( v < 0 || v >= f.arity() )
  {
    throw std::out_of_range( "formula_input_relevant: input out of range" );
  }
  if ( f.root() < 0 )
  {
    throw std::logic_error( "formula_input_relevant: no root" );
  }
  return RelevanceSearch( f, v, budget ).run();
}

int formula_num_relevant( const Formula& f )
{
  int n = 0;
  for ( int v = 0; v < f.arity(); ++v )
  {
    n += formula_input_relevant( f, v );
  }
  return n;
}

namespace
{

int doubling_arity( int d )
{
  return d <= 1 ? d : 2 + 2 * doubling_arity( d - 2 );
}

int build_doubling( Formula& out, int d, int offset )
{
  if ( d == 0 )
  {
    return out.constant( true );
  }
  if ( d == 1 )
  {
    return out.input( offset );
  }
  const int inner = doubling_arity( d - 2 );
  const int a = out.input( offset );
  const int b = out.input( offset + 1 );
  const int gx = build_doubling( out, d - 2, offset + 2 );
  const int gy = build_doubling( out, d - 2, offset + 2 + inner );
  const int left = out.conj( { out.negate( a ), b, gx } );
  const int right = out.conj( { a, out.disj( { b, gy } ) } );
  return out.disj( { left, right } );
}

} // namespace

DoublingMember dt_doubling_family( int d )
{
  if ( d < 0 || d > 13 )
  {
    throw std::invalid_argument( "dt_doubling_family: d must lie in [0, 13]" );
  }
  DoublingMember m;
  m.d = d;
  m.formula = Formula( doubling_arity( d ) );
  m.formula.set_root( build_doubling( m.formula, d, 0 ) );
  if ( m.formula.arity() <= kMaxArity )
  {
    m.table = m.formula.truth_table();
    if ( !is_monotone( *m.table ) )
    {
      throw std::logic_error( "dt_doubling_family: not monotone" );
    }
    if ( m.table->arity() <= kSearchMaxArity && dt_depth( *m.table ) > d )
    {
      throw std::logic_error( "dt_doubling_family: depth above d" );
    }
  }
  return m;
}

// ---------------------------------------------------------------- corpora

std::vector<BooleanFunction> enumerate_monotone( int n )
{
  if ( n < 0 || n > 5 )
  {
    throw std::invalid_argument( "enumerate_monotone: n must lie in [0, 5]" );
  }
  // Tables as words; n <= 5 fits in 32 bits.
  std::vector<std::uint64_t> level{ 0, 1 };
  for ( int k = 1; k <= n; ++k )
  {
    const int half = 1 << ( k - 1 );
    std::vector<std::uint64_t> next;
    for ( auto f0 : level )
    {
      for ( auto f1 : level )
      {
        if ( ( f0 & ~f1 ) == 0 )
        {
          next.push_back( f0 | ( f1 << half ) );
        }
      }
    }
    level = std::move( next );
  }
  std::vector<BooleanFunction> out;
  out.reserve( level.size() );
  for ( auto w : level )
  {
    out.push_back( BooleanFunction::from_word( n, w ) );
  }
  return out;
}

namespace
{

std::string entry_id( std::uint64_t index, const BooleanFunction& f )
{
  std::string id = "#" + std::to_string( index );
  if ( f.arity() <= 6 )
  {
    id += " tt=" + f.table_string();
  }
  return id;
}

int parse_int( std::string_view s, const char* what )
{
  try
  {
    std::size_t used = 0;
    const int v = std::stoi( std::string( s ), &used );
    if ( used == s.size() )
    {
      return v;
    }
  }
  catch ( const std::exception& )
  {
  }
  throw std::invalid_argument( std::string( "corpus: bad " ) + what + " '" + std::string( s ) + "'" );
}

std::uint64_t parse_u64( std::string_view s, const char* what )
{
  try
  {
    std::size_t used = 0;
    const auto v = std::stoull( std::string( s ), &used );
    if ( used == s.size() )
    {
      return v;
    }
  }
  catch ( const std::exception& )
  {
  }
  throw std::invalid_argument( std::string( "corpus: bad " ) + what + " '" + std::string( s ) + "'" );
}

std::vector<std::string_view> split( std::string_view s, char sep )
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while ( true )
  {
    const auto pos = s.find( sep, start );
    out.push_back( s.substr( start, pos == std::string_view::npos ? std::string_view::npos : pos - start ) );
    if ( pos == std::string_view::npos )
    {
      return out;
    }
    start = pos + 1;
  }
}

BooleanFunction random_table( int n, std::mt19937_64& rng )
{
  BooleanFunction f( n );
  for ( std::uint32_t x = 0; x < f.size(); x += 64 )
  {
    const std::uint64_t w = rng();
    for ( std::uint32_t k = 0; k < 64 && x + k < f.size(); ++k )
    {
      f.set( x + k, ( w >> k ) & 1u );
    }
  }
  return f;
}

} // namespace

Corpus Corpus::all( int n )
{
  if ( n < 0 || n > 4 )
  {
    throw std::invalid_argument( "corpus all:N needs N <= 4" );
  }
  Corpus c;
  c.source_ = Source::All;
  c.n_ = n;
  c.spec_ = "all:" + std::to_string( n );
  return c;
}

Corpus Corpus::monotone( int n )
{
  Corpus c;
  c.spec_ = "monotone:" + std::to_string( n );
  std::uint64_t k = 0;
  for ( auto& f : enumerate_monotone( n ) )
  {
    c.entries_.push_back( { entry_id( k++, f ), std::move( f ) } );
  }
  return c;
}

Corpus Corpus::random( int n, std::uint64_t count, std::uint64_t seed )
{
  if ( n < 0 || n > kMaxArity )
  {
    throw std::invalid_argument( "corpus random: arity out of range" );
  }
  Corpus c;
  c.spec_ = "random:" + std::to_string( n ) + ":" + std::to_string( count ) + ":" + std::to_string( seed );
  std::mt19937_64 rng( seed );
  for ( std::uint64_t k = 0; k < count; ++k )
  {
    auto f = random_table( n, rng );
    c.entries_.push_back( { entry_id( k, f ), std::move( f ) } );
  }
  return c;
}

Corpus Corpus::random_monotone( int n, std::uint64_t count, std::uint64_t seed )
{
  if ( n < 0 || n > kMaxArity )
  {
    throw std::invalid_argument( "corpus random-monotone: arity out of range" );
  }
  Corpus c;
  c.spec_ = "random-monotone:" + std::to_string( n ) + ":" + std::to_string( count ) + ":" + std::to_string( seed );
  std::mt19937_64 rng( seed );
  for ( std::uint64_t k = 0; k < count; ++k )
  {
    auto f = monotone_closure( random_table( n, rng ) );
    c.entries_.push_back( { entry_id( k, f ), std::move( f ) } );
  }
  return c;
}

Corpus Corpus::named( const std::vector<std::string>& names )
{
  Corpus c;
  c.spec_ = "named:";
  for ( std::size_t k = 0; k < names.size(); ++k )
  {
    const std::string& name = names[k];
    c.spec_ += ( k ? "," : "" ) + name;
    const auto us = name.rfind( '_' );
    std::optional<int> param;
    std::string base = name;
    if ( us != std::string::npos && us + 1 < name.size() &&
         std::all_of( name.begin() + us + 1, name.end(), []( unsigned char ch ) { return std::isdigit( ch ); } ) )
    {
      base = name.substr( 0, us );
      param = parse_int( std::string_view( name ).substr( us + 1 ), "parameter" );
    }
    c.entries_.push_back( { name, family( base, param ) } );
  }
  return c;
}

Corpus Corpus::parse( std::string_view spec )
{
  const auto colon = spec.find( ':' );
  if ( colon == std::string_view::npos )
  {
    throw std::invalid_argument( "corpus: expected KIND:ARGS, got '" + std::string( spec ) + "'" );
  }
  const auto kind = spec.substr( 0, colon );
  const auto rest = spec.substr( colon + 1 );
  if ( kind == "named" )
  {
    std::vector<std::string> names;
    for ( auto s : split( rest, ',' ) )
    {
      if ( !s.empty() )
      {
        names.emplace_back( s );
      }
    }
    return named( names );
  }
  const auto parts = split( rest, ':' );
  if ( kind == "all" && parts.size() == 1 )
  {
    return all( parse_int( parts[0], "arity" ) );
  }
  if ( kind == "monotone" && parts.size() == 1 )
  {
    return monotone( parse_int( parts[0], "arity" ) );
  }
  if ( ( kind == "random" || kind == "random-monotone" ) && parts.size() == 3 )
  {
    const int n = parse_int( parts[0], "arity" );
    const auto count = parse_u64( parts[1], "count" );
    const auto seed = parse_u64( parts[2], "seed" );
    return kind == "random" ? random( n, count, seed ) : random_monotone( n, count, seed );
  }
  throw std::invalid_argument( "corpus: cannot parse '" + std::string( spec ) + "'" );
}

std::uint64_t Corpus::size() const
{
  return source_ == Source::All ? std::uint64_t{ 1 } << ( 1u << n_ ) : entries_.size();
}

CorpusEntry Corpus::at( std::uint64_t index ) const
{
  if ( index >= size() )
  {
    throw std::out_of_range( "Corpus::at" );
  }
  if ( source_ == Source::All )
  {
    auto f = BooleanFunction::from_word( n_, index );
    return { entry_id( index, f ), std::move( f ) };
  }
  return entries_[index];
}

// ---------------------------------------------------------------- theorem suite

std::uint64_t SuiteReport::total_failures() const
{
  std::uint64_t n = errors.size();
  for ( const auto& t : theorems )
  {
    n += t.failures;
  }
  return n;
}

const TheoremSummary* SuiteReport::find( std::string_view id ) const
{
  for ( const auto& t : theorems )
  {
    if ( t.id == id )
    {
      return &t;
    }
  }
  return nullptr;
}

namespace
{

double to_d( const BigRational& r ) { return r.to_double(); }

class Ledger
{
public:
  explicit Ledger( SuiteReport& report ) : report_( report ) {}

  // Registration fixes the output order, independent of which checks a function reaches.
  void declare( const std::string& id, const std::string& text, bool external = false )
  {
    index_[id] = report_.theorems.size();
    TheoremSummary t;
    t.id = id;
    t.text = text;
    t.external = external;
    report_.theorems.push_back( std::move( t ) );
  }

  void record( const std::string& id, double left, double right, bool pass, const std::string& witness )
  {
    auto& t = report_.theorems.at( index_.at( id ) );
    ++t.evaluated;
    if ( right > 0 )
    {
      const double ratio = left / right;
      if ( ratio > t.worst_ratio )
      {
        t.worst_ratio = ratio;
        t.worst_witness = witness;
      }
    }
    if ( !pass )
    {
      ++t.failures;
      if ( !t.first_failure )
      {
        t.first_failure = TheoremCheck{ t.id, t.text, left, right, false, witness };
      }
    }
  }

  void exact( const std::string& id, const BigRational& left, const BigRational& right, const std::string& witness )
  {
    record( id, to_d( left ), to_d( right ), left <= right, witness );
  }

  void real( const std::string& id, double left, double right, const std::string& witness )
  {
    record( id, left, right, left <= right + kSuiteSlack, witness );
  }

  void skip( const std::string& id ) { ++report_.theorems.at( index_.at( id ) ).skipped; }

private:
  SuiteReport& report_;
  std::map<std::string, std::size_t> index_;
};

void declare_all( Ledger& l )
{
  l.declare( "s<=bs", "s(f) <= bs(f)", true );
  l.declare( "bs<=C", "bs(f) <= C(f)", true );
  l.declare( "C<=DT", "C(f) <= DT(f)", true );
  l.declare( "deg<=DT", "deg(f) <= DT(f)", true );
  l.declare( "deg<=s^2", "deg(f) <= s(f)^2", true );
  l.declare( "markov-bs-deg", "3(bs^2 - bs) <= 2(deg^4 - deg^2)" );
  l.declare( "markov-bs-linear", "bs <= sqrt(2/3) deg^2 + 1" );
  l.declare( "standard-form", "standard form: arity bs, c_ij in {-1,-2}, p''(0) range, deg p <= deg g, |p(k/b)| <= 1, p'(0) = bs" );
  l.declare( "n<=4.394*2^deg", "n(f) <= 4.394 * 2^deg(f)" );
  l.declare( "n<=4^C/2", "n(f) <= (1/2) * 4^C(f)" );
  l.declare( "n<=8.277*2^(deg/2+s)", "n(f) <= 8.277 * 2^(deg(f)/2 + s(f))" );
  l.declare( "n<=(ln s+gamma/2)*4^((C+s)/2)", "n(f) <= (ln s(f) + gamma/2) * 4^((C(f)+s(f))/2)" );
  l.declare( "n<=(ln s+0.29)*4^((C+s)/2)", "n(f) <= (ln s(f) + 0.29) * 4^((C(f)+s(f))/2)" );
  l.declare( "n<=I*2^(deg-1)", "n(f) <= I[f] * 2^(deg(f)-1)" );
  l.declare( "n<=I*4^(s-1)", "n(f) <= I[f] * 4^(s(f)-1)" );
  l.declare( "C-potential<=1/2", "sum_i 2^-cert_i(f) <= 1/2" );
  for ( const auto& k : standard_kinds() )
  {
    l.declare( "rrcm[" + k.name() + "]", "restriction axioms for m_i = " + k.name() + ", every i" );
  }
  for ( const auto& k : standard_kinds() )
  {
    l.declare( "inf-bound[" + k.name() + "]", "2^-m_i <= 2^-r Inf_i for every relevant i, m_i = " + k.name() );
  }
  l.declare( "num-sens", "#{i in M : sens_i <= k} <= (k-1)^2 for monomials M, k <= 6" );
  l.declare( "junta-count", "#{i relevant : sens_i <= k} <= (pi^2/6) k^3 2^k, k <= 6" );
  l.declare( "S(M)<3/2", "sum_{i in M} 2^-sens_i(f) < 3/2 for every monomial M" );
  l.declare( "S(M)<=level-bound", "sum_{i in M} 2^-sens_i(f) <= level bound for |M|" );
  l.declare( "top-monomial-deg_i", "deg_i(f) = deg(f) for i in a top-degree monomial" );
  l.declare( "adeg:bs<=5adeg^2", "bs(f) <= 5 adeg_1/3(f)^2 (arity <= 3)" );
  l.declare( "adeg<=deg", "adeg_1/3(f) <= deg(f) (arity <= 3)" );
  l.declare( "mon:s=bs=C", "monotone: s(f) = bs(f) = C(f)" );
  l.declare( "mon:triple", "monotone: n(f) <= min{1.325 * 2^deg, (1/2) 4^s, (1/4) 2^DT + 2}" );
  l.declare( "mon:dt-intersect", "monotone: Cmin0(f_0) + Cmin1(f_1) <= |R(f_0) & R(f_1)| + 1, every root" );
}

void check_function( Ledger& l, const CorpusEntry& e, ProfileCache& cache )
{
  const BooleanFunction& f = e.f;
  const std::string& w = e.id;
  const auto m = measure_report( f );
  const int n = num_relevant( f );
  const BigRational nr( n );
  // A copy: the cache reuses one slot for large arities.
  const CoordinateProfile prof = cache.get( f );

  l.exact( "s<=bs", m.s, m.bs, w );
  l.exact( "bs<=C", m.bs, m.c, w );
  l.exact( "C<=DT", m.c, m.dt, w );
  l.exact( "deg<=DT", m.degree, m.dt, w );
  l.exact( "deg<=s^2", m.degree, m.s * m.s, w );

  const auto mk = check_markov_consequence( m.bs, m.degree );
  const long b = m.bs, d = m.degree;
  l.record( "markov-bs-deg", 3.0 * ( b * b - b ), 2.0 * ( d * d * d * d - d * d ), mk.quadratic, w );
  l.record( "markov-bs-linear", b, std::sqrt( 2.0 / 3.0 ) * d * d + 1, mk.linear, w );

  if ( f.is_constant() )
  {
    l.skip( "standard-form" );
  }
  else
  {
    const auto sf = standard_form( f );
    const auto lem = check_standard_form_lemmas( sf.g );
    const auto p = symmetrize( sf.g );
    const bool ok = sf.g.arity() == m.bs && lem.pass() && p.size() > 1 && p[1] == BigRational( m.bs );
    l.record( "standard-form", ok ? 0 : 1, 0, ok, w );
  }

  l.real( "n<=4.394*2^deg", n, 4.394 * std::ldexp( 1.0, m.degree ), w );
  l.exact( "n<=4^C/2", nr, BigRational::pow2( 2 * m.c - 1 ), w );
  l.real( "n<=8.277*2^(deg/2+s)", n, 8.277 * std::exp2( m.degree / 2.0 + m.s ), w );
  const double cs_scale = std::exp2( m.c + m.s );
  l.real( "n<=(ln s+gamma/2)*4^((C+s)/2)", n, m.s == 0 ? 0.0 : cs_sens_bound( m.s ) * cs_scale, w );
  l.real( "n<=(ln s+0.29)*4^((C+s)/2)", n, m.s == 0 ? 0.0 : ( std::log( m.s ) + 0.29 ) * cs_scale, w );
  l.exact( "n<=I*2^(deg-1)", nr, m.total_influence * BigRational::pow2( m.degree - 1 ), w );
  l.exact( "n<=I*4^(s-1)", nr, m.total_influence * BigRational::pow2( 2 * m.s - 2 ), w );

  const CoordinateMask all = f.arity() == 0 ? 0 : ( ( CoordinateMask{ 1 } << f.arity() ) - 1 );
  const auto cpot = potential_from_profile( prof, CoordinateMeasureKind::cert(), all );
  l.exact( "C-potential<=1/2", *cpot.exact, BigRational( 1, 2 ), w );

  for ( const auto& k : standard_kinds() )
  {
    bool ok = true;
    for ( int i = 0; i < f.arity() && ok; ++i )
    {
      ok = check_rrcm( f, i, k, &cache ).pass;
    }
    l.record( "rrcm[" + k.name() + "]", ok ? 0 : 1, 0, ok, w );
  }
  for ( const auto& k : standard_kinds() )
  {
    const auto r = check_influence_bound( f, k, &prof );
    const bool ok = r.pass && r.potential_pass;
    l.record( "inf-bound[" + k.name() + "]", ok ? 0 : 1, 0, ok, w );
  }

  if ( f.arity() <= kMonomialCheckMaxArity )
  {
    bool ok = true;
    bool junta = true;
    for ( int k = 1; k <= 6; ++k )
    {
      ok = ok && check_monomial_sensitivity( f, k, &prof ).pass;
      junta = junta && check_junta_count( f, k, &prof );
    }
    l.record( "num-sens", ok ? 0 : 1, 0, ok, w );
    l.record( "junta-count", junta ? 0 : 1, 0, junta, w );

    const auto c = mobius_coefficients( f );
    const auto wal = walsh_coefficients( f );
    BigRational worst_s, worst_gap;
    bool within_level = true;
    bool top_ok = true;
    for ( std::uint32_t s = 1; s < c.size(); ++s )
    {
      if ( c[s] == 0 && wal[s] == 0 )
      {
        continue;
      }
      const auto v = potential_from_profile( prof, CoordinateMeasureKind::sens(), s );
      worst_s = std::max( worst_s, *v.exact );
      within_level = within_level && *v.exact <= monomial_sens_bound( std::popcount( s ) );
      if ( c[s] != 0 && std::popcount( s ) == m.degree )
      {
        for ( int i = 0; i < f.arity(); ++i )
        {
          top_ok = top_ok && ( !( ( s >> i ) & 1u ) || prof.deg[i] == m.degree );
        }
      }
    }
    l.record( "S(M)<3/2", to_d( worst_s ), 1.5, worst_s < BigRational( 3, 2 ), w );
    l.record( "S(M)<=level-bound", within_level ? 0 : 1, 0, within_level, w );
    l.record( "top-monomial-deg_i", top_ok ? 0 : 1, 0, top_ok, w );
  }
  else
  {
    for ( const char* id : { "num-sens", "junta-count", "S(M)<3/2", "S(M)<=level-bound", "top-monomial-deg_i" } )
    {
      l.skip( id );
    }
  }

  if ( f.arity() <= kSuiteApproxDegreeMaxArity )
  {
    const int a = approx_degree( f, BigRational( 1, 3 ) );
    l.exact( "adeg:bs<=5adeg^2", m.bs, 5 * a * a, w );
    l.exact( "adeg<=deg", a, m.degree, w );
  }
  else
  {
    l.skip( "adeg:bs<=5adeg^2" );
    l.skip( "adeg<=deg" );
  }

  if ( is_monotone( f ) )
  {
    const bool eq = m.s == m.bs && m.bs == m.c;
    l.record( "mon:s=bs=C", eq ? 0 : 1, 0, eq, w );
    const double tri = std::min( { 1.325 * std::ldexp( 1.0, m.degree ), std::ldexp( 0.5, 2 * m.s ), std::ldexp( 0.25, m.dt ) + 2 } );
    l.real( "mon:triple", n, tri, w );
    for ( int i = 0; i < f.arity(); ++i )
    {
      const auto r = check_dt_intersect( f, i );
      if ( r.status == CheckStatus::Skip )
      {
        l.skip( "mon:dt-intersect" );
      }
      else
      {
        l.record( "mon:dt-intersect", r.left, r.right, r.status == CheckStatus::Pass, w + " root=" + std::to_string( i + 1 ) );
      }
    }
  }
  else
  {
    l.skip( "mon:s=bs=C" );
    l.skip( "mon:triple" );
    l.skip( "mon:dt-intersect" );
  }
}

} // namespace

SuiteReport run_theorem_suite( const Corpus& corpus )
{
  verify_r_constants();
  SuiteReport report;
  report.corpus = corpus.spec();
  Ledger ledger( report );
  declare_all( ledger );
  ProfileCache cache( 4 );
  for ( std::uint64_t k = 0; k < corpus.size(); ++k )
  {
    const auto entry = corpus.at( k );
    ++report.functions;
    try
    {
      check_function( ledger, entry, cache );
    }
    catch ( const std::exception& ex )
    {
      report.errors.push_back( entry.id + ": " + ex.what() );
    }
  }
  return report;
}

void write_suite_report( std::ostream& out, const SuiteReport& r )
{
  std::ostringstream num;
  auto fmt = [&num]( double v ) {
    num.str( "" );
    num << std::setprecision( 10 ) << v;
    return num.str();
  };
  out << "corpus\t" << r.corpus << "\n";
  out << "functions\t" << r.functions << "\n";
  out << "status\tid\tevaluated\tfailures\tskipped\tworst_ratio\tworst_witness\tstatement\n";
  for ( const auto& t : r.theorems )
  {
    const char* status = t.failures ? "FAIL" : t.evaluated ? "PASS" : "SKIP";
    out << status << "\t" << t.id << ( t.external ? " (EXTERNAL)" : "" ) << "\t" << t.evaluated << "\t" << t.failures << "\t"
        << t.skipped << "\t" << fmt( t.worst_ratio ) << "\t" << ( t.worst_witness.empty() ? "-" : t.worst_witness ) << "\t" << t.text
        << "\n";
    if ( t.first_failure )
    {
      out << "  counterexample\t" << t.first_failure->witness << "\tleft=" << fmt( t.first_failure->left )
          << "\tright=" << fmt( t.first_failure->right ) << "\n";
    }
  }
  for ( const auto& e : r.errors )
  {
    out << "ERROR\t" << e << "\n";
  }
  out << "failures\t" << r.total_failures() << "\n";
}

} // namespace bfc
