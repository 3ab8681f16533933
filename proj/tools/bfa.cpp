// bfa: command-line front end for the Boolean function analysis toolkit.

#include <CLI11.hpp>

#include <bfa/bfa.hpp>

#include <iostream>
#include <optional>
#include <string>

namespace
{

void emit( const std::string& content, const std::string& out_path )
{
  if ( out_path.empty() )
    std::cout << content;
  else
    bfa::write_file_atomic( out_path, content );
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "Exact analysis of Boolean functions as multilinear polynomials" };
  app.require_subcommand( 1 );
  app.set_version_flag( "--version", bfa::version );

  std::string out_path;

  auto* analyze = app.add_subcommand( "analyze", "Degree, weights, maxonomials and hitting set of one function" );
  std::string analyze_input;
  bool analyze_bs = false;
  analyze->add_option( "input", analyze_input, "bf:v1 string or file containing one" )->required();
  analyze->add_flag( "--bs", analyze_bs, "also compute exact block sensitivity" );
  analyze->add_option( "--out", out_path, "write the report here instead of stdout" );

  auto* verify = app.add_subcommand( "verify", "Run an inequality suite over all small functions" );
  std::string suite;
  uint32_t verify_n = 3;
  bfa::verify_options vopts;
  verify->add_option( "--suite", suite, "suite name, or 'all'" )->required();
  verify->add_option( "--n", verify_n, "largest arity checked" );
  verify->add_option( "--samples", vopts.samples, "random tables per arity beyond the exhaustive limit" );
  verify->add_option( "--seed", vopts.seed, "seed for sampled arities" );
  verify->add_option( "--out", out_path );

  auto* search = app.add_subcommand( "search", "Exhaustive per-degree maxima of R, W, h" );
  uint32_t search_n = 4, jobs = 1;
  std::optional<uint32_t> search_degree;
  std::string cache_dir = ".bfa-cache";
  bool no_cache = false;
  search->add_option( "--n", search_n, "arity (at most 5)" );
  search->add_option( "--degree", search_degree, "only report this degree" );
  search->add_option( "--jobs", jobs, "worker threads" );
  search->add_option( "--out", out_path );
  search->add_option( "--cache-dir", cache_dir );
  search->add_flag( "--no-cache", no_cache );

  auto* construct = app.add_subcommand( "construct", "Emit a constructed function in bf:v1 format" );
  construct->require_subcommand( 1 );
  uint32_t level = 1;
  std::string f_arg, g_arg;
  auto* c_xi = construct->add_subcommand( "xi", "Xi_d on 3*2^(d-1)-2 variables" );
  c_xi->add_option( "--d", level )->required();
  c_xi->add_option( "--out", out_path );
  auto* c_chain = construct->add_subcommand( "selector-chain", "read-once decision tree of depth d" );
  c_chain->add_option( "--d", level )->required();
  c_chain->add_option( "--out", out_path );
  auto* c_compose = construct->add_subcommand( "compose", "f o g, row-major variables" );
  c_compose->add_option( "--f", f_arg, "bf:v1 string or file" )->required();
  c_compose->add_option( "--g", g_arg, "bf:v1 string or file" )->required();
  c_compose->add_option( "--out", out_path );

  auto* bounds = app.add_subcommand( "bounds", "Exact bounds on C_d and C*" );
  bool table = false;
  uint32_t dmax = 30, digits = 4;
  bounds->add_flag( "--table", table, "emit the per-d CSV table" );
  bounds->add_option( "--dmax", dmax );
  bounds->add_option( "--digits", digits, "significant digits of decimal renderings" );
  bounds->add_option( "--out", out_path );

  CLI11_PARSE( app, argc, argv );

  try
  {
    if ( *analyze )
    {
      const auto tt = bfa::load_table( analyze_input );
      emit( bfa::format_key_values( bfa::analyze( tt, analyze_bs ).to_key_values() ), out_path );
      return 0;
    }
    if ( *verify )
    {
      std::string text;
      bool ok = true;
      if ( suite == "all" )
      {
        for ( auto name : bfa::suite_names )
        {
          const auto r = bfa::run_suite( name, verify_n, vopts );
          ok = ok && r.passed();
          text += r.to_text();
        }
      }
      else
      {
        const auto r = bfa::run_suite( suite, verify_n, vopts );
        ok = r.passed();
        text = r.to_text();
      }
      emit( text, out_path );
      return ok ? 0 : 1;
    }
    if ( *search )
    {
      const std::string key = std::string( "search|n=" ) + std::to_string( search_n ) + "|degree=" +
                              ( search_degree ? std::to_string( *search_degree ) : "all" ) + "|version=" + bfa::version;
      const bfa::result_cache cache( cache_dir );
      std::optional<std::string> csv;
      if ( !no_cache )
        csv = cache.lookup( key );
      if ( !csv )
      {
        csv = bfa::search_csv( bfa::extremal_table( search_n, jobs ), search_degree );
        if ( !no_cache )
          cache.store( key, *csv );
      }
      emit( *csv, out_path );
      return 0;
    }
    if ( *c_xi )
    {
      emit( bfa::xi( level ).table.to_string() + "\n", out_path );
      return 0;
    }
    if ( *c_chain )
    {
      emit( bfa::iterate_selector( level ).to_string() + "\n", out_path );
      return 0;
    }
    if ( *c_compose )
    {
      emit( bfa::compose( bfa::load_table( f_arg ), bfa::load_table( g_arg ) ).to_string() + "\n", out_path );
      return 0;
    }
    if ( *bounds )
    {
      emit( table ? bfa::bounds_csv( dmax, digits ) : bfa::format_key_values( bfa::bounds_summary( dmax, digits ) ),
            out_path );
      return 0;
    }
  }
  catch ( const bfa::error& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
