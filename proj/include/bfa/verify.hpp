/*!
  \file verify.hpp
  \brief Instance-level verification suites over all (or sampled) small functions

  Arities up to 4 are swept exhaustively; larger arities use a fixed-seed
  random sample so reruns are reproducible.
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "bits.hpp"
#include "config.hpp"
#include "construct.hpp"
#include "maxonomial.hpp"
#include "measures.hpp"
#include "npn.hpp"
#include "report.hpp"
#include "search.hpp"
#include "truth_table.hpp"

namespace bfa
{

inline constexpr std::string_view suite_names[] = { "claim-wi",     "lemma1-decomposition", "hcube",
                                                    "hbs",          "npn-invariance",       "composition-multiplicativity",
                                                    "prop1-weight-report" };

struct verify_options
{
  uint32_t exhaustive_up_to = 4u;
  uint32_t samples = 2000u;
  uint64_t seed = 0x5eed5eedull;
  std::size_t max_dumped = 20u;
};

struct suite_result
{
  std::string suite;
  uint32_t scope = 0u;
  uint64_t checked = 0u;
  uint64_t failures = 0u;
  std::vector<std::string> counterexamples; // first few failures, replayable
  key_values notes;

  bool passed() const noexcept { return failures == 0u; }

  std::string to_text() const
  {
    key_values kv;
    kv.emplace_back( "suite", suite );
    kv.emplace_back( "scope", std::to_string( scope ) );
    kv.emplace_back( "checked", std::to_string( checked ) );
    kv.emplace_back( "counterexamples", std::to_string( failures ) );
    for ( auto const& n : notes )
      kv.push_back( n );
    for ( auto const& c : counterexamples )
      kv.emplace_back( "counterexample", c );
    kv.emplace_back( "status", passed() ? "pass" : "fail" );
    return format_key_values( kv );
  }
};

namespace detail
{

class suite_context
{
public:
  suite_context( std::string name, uint32_t scope, const verify_options& opts ) : opts_( opts ), rng_( opts.seed )
  {
    result_.suite = std::move( name );
    result_.scope = scope;
  }

  const verify_options& options() const noexcept { return opts_; }
  std::mt19937_64& rng() noexcept { return rng_; }

  void check( bool ok, const truth_table& tt, const std::string& detail )
  {
    ++result_.checked;
    if ( ok )
      return;
    ++result_.failures;
    if ( result_.counterexamples.size() < opts_.max_dumped )
      result_.counterexamples.push_back( tt.to_string() + ( detail.empty() ? "" : " " + detail ) );
  }

  void note( std::string key, std::string value ) { result_.notes.emplace_back( std::move( key ), std::move( value ) ); }

  truth_table random_table( uint32_t n )
  {
    truth_table tt( n );
    for ( uint64_t k = 0; k < tt.num_bits(); ++k )
      tt.set_bit( k, rng_() & 1u );
    return tt;
  }

  /* every table on n variables, or a sample when n is beyond the exhaustive limit */
  template<typename Fn>
  void for_each_table( uint32_t n, Fn&& fn )
  {
    if ( n <= opts_.exhaustive_up_to && n <= 5u )
    {
      const uint64_t count = uint64_t{ 1 } << ( 1u << n );
      for ( uint64_t t = 0; t < count; ++t )
        fn( truth_table::from_word( n, t ) );
    }
    else
    {
      for ( uint32_t s = 0; s < opts_.samples; ++s )
        fn( random_table( n ) );
    }
  }

  suite_result take() { return std::move( result_ ); }

private:
  verify_options opts_;
  std::mt19937_64 rng_;
  suite_result result_;
};

inline std::string describe_claim( uint32_t fixed, uint32_t var, const claim_report& r )
{
  return "J=" + format_var_set( fixed ) + " i=" + std::to_string( var ) + " lhs=" + r.lhs.to_string() +
         " rhs=" + r.rhs.to_string();
}

inline void suite_claim_wi( suite_context& ctx, uint32_t scope )
{
  for ( uint32_t n = 1; n <= scope; ++n )
  {
    ctx.for_each_table( n, [&]( const truth_table& f ) {
      for ( uint32_t fixed = 1; fixed <= full_mask( n ); ++fixed )
      {
        for ( uint32_t var = 1; var <= n; ++var )
        {
          if ( fixed & var_bit( var ) )
            continue;
          const auto r = check_claim_wi( f, fixed, var );
          ctx.check( r.holds, f, describe_claim( fixed, var, r ) );
        }
      }
    } );
  }
}

inline void suite_lemma1( suite_context& ctx, uint32_t scope )
{
  for ( uint32_t n = 1; n <= scope; ++n )
  {
    ctx.for_each_table( n, [&]( const truth_table& f ) {
      if ( f.is_constant() )
        return;
      const auto hs = min_hitting_set( f );
      const auto r = check_lemma1_decomposition( f, hs.set );
      ctx.check( r.holds(), f,
                 "H=" + format_var_set( hs.set ) + " W=" + r.total_weight.to_string() + " decomposed=" +
                     r.decomposed_weight.to_string() + " outside=" + r.outside_weight.to_string() +
                     " average=" + r.restricted_average.to_string() +
                     " max_restricted_degree=" + std::to_string( r.max_restricted_degree ) );
    } );
  }
}

inline void suite_hcube( suite_context& ctx, uint32_t scope )
{
  uint32_t worst_h = 0, worst_d = 0;
  for ( uint32_t n = 1; n <= scope; ++n )
  {
    ctx.for_each_table( n, [&]( const truth_table& f ) {
      const uint64_t d = degree( f );
      const auto h = min_hitting_set( f ).size;
      if ( h > worst_h )
      {
        worst_h = h;
        worst_d = static_cast<uint32_t>( d );
      }
      ctx.check( h <= d * d * d, f, "h=" + std::to_string( h ) + " deg=" + std::to_string( d ) );
    } );
  }
  ctx.note( "max_h", std::to_string( worst_h ) + " (at degree " + std::to_string( worst_d ) + ")" );
}

inline void suite_hbs( suite_context& ctx, uint32_t scope )
{
  for ( uint32_t n = 1; n <= scope; ++n )
  {
    ctx.for_each_table( n, [&]( const truth_table& f ) {
      const uint64_t d = degree( f );
      const uint64_t h = min_hitting_set( f ).size;
      const uint64_t bs = block_sensitivity( f );
      ctx.check( h <= d * bs && bs <= 2u * d * d, f,
                 "h=" + std::to_string( h ) + " deg=" + std::to_string( d ) + " bs=" + std::to_string( bs ) );
    } );
  }
}

inline void suite_npn( suite_context& ctx, uint32_t scope )
{
  for ( uint32_t n = 1; n <= std::min( scope, config::search_max_arity ); ++n )
  {
    ctx.for_each_table( n, [&]( const truth_table& f ) {
      const auto canon = npn_canonical( f );
      auto wf = weight_total( f ).weights;
      auto wc = weight_total( canon ).weights;
      std::sort( wf.begin(), wf.end() );
      std::sort( wc.begin(), wc.end() );
      ctx.check( compute_metrics( f ) == compute_metrics( canon ) && wf == wc, f, "canonical=" + canon.to_string() );
    } );
  }
}

inline void suite_composition( suite_context& ctx, uint32_t scope )
{
  auto check_pair = [&]( const truth_table& f, const truth_table& g ) {
    if ( f.is_constant() || g.is_constant() )
      return;
    const auto fg = compose( f, g );
    const uint64_t df = degree( f ), dg = degree( g ), dfg = degree( fg );
    const uint64_t hf = min_hitting_set( f ).size, hg = min_hitting_set( g ).size, hfg = min_hitting_set( fg ).size;
    ctx.check( dfg == df * dg && hfg == hf * hg, fg,
               "f=" + f.to_string() + " g=" + g.to_string() + " deg=" + std::to_string( dfg ) + " expected " +
                   std::to_string( df * dg ) + " h=" + std::to_string( hfg ) + " expected " + std::to_string( hf * hg ) );
  };
  for ( uint32_t a = 1; a <= scope; ++a )
  {
    for ( uint32_t b = 1; b <= scope; ++b )
    {
      if ( uint64_t{ a } * b > config::max_arity() )
        continue;
      if ( a <= 2u && b <= 2u )
      {
        for ( uint64_t x = 0; x < ( uint64_t{ 1 } << ( 1u << a ) ); ++x )
          for ( uint64_t y = 0; y < ( uint64_t{ 1 } << ( 1u << b ) ); ++y )
            check_pair( truth_table::from_word( a, x ), truth_table::from_word( b, y ) );
      }
      else
      {
        const uint32_t pairs = std::max( 1u, ctx.options().samples / 10u );
        for ( uint32_t s = 0; s < pairs; ++s )
        {
          const auto f = ctx.random_table( a );
          const auto g = ctx.random_table( b );
          check_pair( f, g );
        }
      }
    }
  }
}

/* structural facts about and_split, plus a tally of how W(g) compares with W(f) */
inline void suite_prop1( suite_context& ctx, uint32_t scope )
{
  uint64_t equal = 0, decreased = 0, decreased_below_top = 0;
  std::string first_decrease;
  for ( uint32_t n = 1; n <= scope && n < config::max_arity(); ++n )
  {
    ctx.for_each_table( n, [&]( const truth_table& f ) {
      const auto degs = per_variable_degrees( f );
      const uint32_t d = degree( f );
      const auto wf = weight_total( f ).total;
      const uint32_t r = num_relevant( f );
      for ( uint32_t var = 1; var <= n; ++var )
      {
        if ( !degs[var - 1u] )
          continue;
        const uint32_t di = *degs[var - 1u];
        const auto g = and_split( f, var );
        const auto gdegs = per_variable_degrees( g );
        const auto wg = weight_total( g );
        bool ok = num_relevant( g ) == r + 1u && degree( g ) == std::max( d, di + 1u );
        ok = ok && wg.weights[var - 1u] == dyadic_rational::pow2_neg( di + 1u ) &&
             wg.weights[n] == dyadic_rational::pow2_neg( di + 1u );
        for ( uint32_t j = 1; j <= n; ++j )
        {
          if ( j == var || !degs[j - 1u] )
            continue;
          ok = ok && gdegs[j - 1u] && ( *gdegs[j - 1u] == *degs[j - 1u] || *gdegs[j - 1u] == *degs[j - 1u] + 1u );
        }
        ok = ok && wg.total <= wf;
        ctx.check( ok, f, "split=" + std::to_string( var ) );
        if ( wg.total == wf )
        {
          ++equal;
        }
        else if ( wg.total < wf )
        {
          ++decreased;
          if ( di < d )
          {
            ++decreased_below_top;
            if ( first_decrease.empty() )
              first_decrease = f.to_string() + " split=" + std::to_string( var ) + " W(f)=" + wf.to_string() +
                               " W(g)=" + wg.total.to_string();
          }
        }
      }
    } );
  }
  ctx.note( "weight_equal", std::to_string( equal ) );
  ctx.note( "weight_decreased", std::to_string( decreased ) );
  ctx.note( "weight_decreased_with_deg_i_below_deg", std::to_string( decreased_below_top ) );
  if ( !first_decrease.empty() )
    ctx.note( "first_decrease_with_deg_i_below_deg", first_decrease );
}

} // namespace detail

/*! \brief Runs a named suite over arities 1..scope. Throws UnknownSuite. */
inline suite_result run_suite( std::string_view name, uint32_t scope, const verify_options& opts = {} )
{
  detail::suite_context ctx( std::string( name ), scope, opts );
  if ( name == "claim-wi" )
    detail::suite_claim_wi( ctx, scope );
  else if ( name == "lemma1-decomposition" )
    detail::suite_lemma1( ctx, scope );
  else if ( name == "hcube" )
    detail::suite_hcube( ctx, scope );
  else if ( name == "hbs" )
    detail::suite_hbs( ctx, scope );
  else if ( name == "npn-invariance" )
    detail::suite_npn( ctx, scope );
  else if ( name == "composition-multiplicativity" )
    detail::suite_composition( ctx, scope );
  else if ( name == "prop1-weight-report" )
    detail::suite_prop1( ctx, scope );
  else
    throw error( errc::unknown_suite, std::string( name ) );
  return ctx.take();
}

} // namespace bfa
