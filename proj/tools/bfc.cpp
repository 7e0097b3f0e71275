// Command-line front end: measures, LP caps, bound tables and corpus verification.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bfc/bounds.hpp"
#include "bfc/families.hpp"
#include "bfc/lp.hpp"
#include "bfc/measures.hpp"
#include "bfc/potentials.hpp"
#include "bfc/verify.hpp"

using namespace bfc;

namespace
{

BooleanFunction load_function( const std::string& path, const std::string& family_name, std::optional<int> k )
{
  if ( !family_name.empty() )
  {
    return family( family_name, k );
  }
  if ( path.empty() )
  {
    throw std::invalid_argument( "give a .tt file or --family" );
  }
  return read_truth_table_file( path );
}

void analyze( const BooleanFunction& f, const std::optional<std::string>& eps )
{
  std::optional<BigRational> e;
  if ( eps )
  {
    e = BigRational::parse( *eps );
  }
  write_measure_report( std::cout, measure_report( f, e ) );
  const auto prof = coordinate_profile( f );
  std::cout << "\ncoord\trelevant\tdeg_i\tsens_i\tcert_i\n";
  for ( int i = 0; i < f.arity(); ++i )
  {
    std::cout << i + 1 << '\t' << prof.is_relevant( i ) << '\t' << prof.deg[i] << '\t' << prof.sens[i] << '\t' << prof.cert[i] << '\n';
  }
  const CoordinateMask all = f.arity() == 0 ? 0 : ( ( CoordinateMask{ 1 } << f.arity() ) - 1 );
  for ( const auto& kind : standard_kinds() )
  {
    std::cout << "\npotential\t" << kind.name() << '\n';
    write_potential( std::cout, potential_from_profile( prof, kind, all ) );
  }
}

void lp_caps( int dmax )
{
  std::cout << "d\tB_d\n";
  for ( int d = 1; d <= dmax; ++d )
  {
    std::cout << d << '\t' << lp_bs_cap( d ) << '\n';
  }
}

void print_grid( const BoundGrid& g, bool grid )
{
  std::cout << "caps\t" << g.caps.name() << '\n';
  if ( grid )
  {
    write_grid( std::cout, g );
  }
  write_headline( std::cout, g.headline );
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Relevant-variable bounds for Boolean functions" };
  app.require_subcommand( 1 );

  std::string tt_path, family_arg;
  std::optional<int> k_arg;
  std::optional<std::string> eps_arg;
  auto* an = app.add_subcommand( "analyze", "Measures, coordinate measures and potentials of one function" );
  an->add_option( "file", tt_path, "Truth table (.tt)" );
  an->add_option( "--family", family_arg, "Named family instead of a file" );
  an->add_option( "--k", k_arg, "Family parameter" );
  an->add_option( "--eps", eps_arg, "Also compute adeg_eps (num/den)" );

  int caps_dmax = 14;
  auto* lc = app.add_subcommand( "lp-caps", "Largest feasible b of the moment LP per degree" );
  lc->add_option( "--dmax", caps_dmax, "Largest degree" )->check( CLI::Range( 1, kLpCapMaxDegree ) );

  std::string table_kind, caps_arg = "lp", beta_arg = "1/2", weight_arg = "monomial";
  int table_dmax = 30;
  bool no_grid = false;
  auto* tb = app.add_subcommand( "table", "Bound tables" );
  tb->add_option( "kind", table_kind, "degree | monotone-degree | monotone-dt | ds | cs" )
      ->required()
      ->check( CLI::IsMember( { "degree", "monotone-degree", "monotone-dt", "ds", "cs" } ) );
  tb->add_option( "--dmax", table_dmax, "Largest degree" );
  tb->add_option( "--caps", caps_arg, "square | lp | markov" );
  tb->add_option( "--beta", beta_arg, "Mixing weight for ds (num/den)" );
  tb->add_option( "--weight", weight_arg, "ds step weight: monomial | floor" )->check( CLI::IsMember( { "monomial", "floor" } ) );
  tb->add_flag( "--no-grid", no_grid, "Print only the headline" );

  std::string corpus_arg;
  auto* vf = app.add_subcommand( "verify", "Run the theorem suite over a corpus" );
  vf->add_option( "--corpus", corpus_arg, "all:N | monotone:N | random:N:COUNT:SEED | random-monotone:N:COUNT:SEED | named:LIST" )
      ->required();

  std::string fam_name, out_path;
  std::optional<int> fam_k;
  auto* fm = app.add_subcommand( "family", "Write a family member as a truth table" );
  fm->add_option( "name", fam_name, "Family name" )->required();
  fm->add_option( "--k", fam_k, "Family parameter" );
  fm->add_option( "--out", out_path, "Output .tt file (stdout when omitted)" );

  CLI11_PARSE( app, argc, argv );

  try
  {
    if ( *an )
    {
      analyze( load_function( tt_path, family_arg, k_arg ), eps_arg );
    }
    else if ( *lc )
    {
      lp_caps( caps_dmax );
    }
    else if ( *tb )
    {
      std::cout << std::setprecision( 12 );
      if ( table_kind == "degree" )
      {
        print_grid( dp_degree( table_dmax, parse_cap_profile( caps_arg ) ), !no_grid );
      }
      else if ( table_kind == "monotone-degree" )
      {
        const auto r = dp_monotone_degree( table_dmax );
        std::cout << "d\tvalue\tdecimal\n";
        for ( int d = 1; d <= table_dmax; ++d )
        {
          std::cout << d << '\t' << r.values[d].str() << '\t' << r.values[d].to_double() << '\n';
        }
        std::cout << "headline\t" << r.headline.str() << '\t' << r.headline.to_double() << '\n';
      }
      else if ( table_kind == "monotone-dt" )
      {
        const auto r = monotone_dt_table( table_dmax );
        std::cout << "d\tR_d\n";
        for ( int d = 1; d <= table_dmax; ++d )
        {
          std::cout << d << '\t' << r.values[d] << '\n';
        }
        std::cout << "ratio\t" << r.ratio << '\n';
        std::cout << "d\tn(doubling f_d)\n";
        for ( int d = 1; d <= std::min( table_dmax, 9 ); ++d )
        {
          const auto m = dt_doubling_family( d );
          std::cout << d << '\t' << ( m.table ? num_relevant( *m.table ) : formula_num_relevant( m.formula ) ) << '\n';
        }
      }
      else if ( table_kind == "ds" )
      {
        const double beta = BigRational::parse( beta_arg ).to_double();
        const auto inf = ds_influence_min( beta );
        std::cout << "influence_min_k\t" << inf.k << "\ninfluence_min_value\t" << inf.value << '\n';
        const auto weight = weight_arg == "floor" ? DsWeight::SensFloor : DsWeight::MonomialSens;
        std::cout << "weight\t" << ds_weight_name( weight ) << '\n';
        print_grid( dp_mixed_ds( beta, table_dmax, parse_cap_profile( caps_arg ), weight ), !no_grid );
      }
      else
      {
        std::cout << "d\tH_d/2\tdecimal\tln(d)+gamma/2\n";
        for ( int d = 1; d <= table_dmax; ++d )
        {
          const auto h = cs_harmonic_bound( d );
          std::cout << d << '\t' << h.str() << '\t' << h.to_double() << '\t' << cs_sens_bound( d ) << '\n';
        }
      }
    }
    else if ( *vf )
    {
      const auto report = run_theorem_suite( Corpus::parse( corpus_arg ) );
      write_suite_report( std::cout, report );
      return report.total_failures() == 0 ? 0 : 1;
    }
    else if ( *fm )
    {
      const auto f = family( fam_name, fam_k );
      if ( out_path.empty() )
      {
        write_truth_table( std::cout, f );
      }
      else
      {
        std::ofstream out( out_path );
        if ( !out )
        {
          throw std::runtime_error( "cannot write " + out_path );
        }
        write_truth_table( out, f );
      }
    }
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
