/*!
  \file report.hpp
  \brief Analysis reports and the line-oriented output formats

  Key/value reports are `key=value` lines. Exact rationals are always written
  as `num/den`.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bits.hpp"
#include "bounds.hpp"
#include "dyadic.hpp"
#include "maxonomial.hpp"
#include "measures.hpp"
#include "multilinear.hpp"
#include "search.hpp"
#include "truth_table.hpp"

namespace bfa
{

inline constexpr const char* version = "1.0.0";

using key_values = std::vector<std::pair<std::string, std::string>>;

inline std::string format_key_values( const key_values& kv )
{
  std::string out;
  for ( auto const& [k, v] : kv )
  {
    out += k;
    out += '=';
    out += v;
    out += '\n';
  }
  return out;
}

template<typename T, typename Fn>
std::string join( const std::vector<T>& items, char sep, Fn&& fmt )
{
  std::string out;
  for ( std::size_t i = 0; i < items.size(); ++i )
  {
    if ( i )
      out += sep;
    out += fmt( items[i] );
  }
  return out;
}

struct analysis_report
{
  truth_table input;
  uint32_t degree = 0u;
  uint32_t relevant_mask = 0u;
  uint32_t relevant = 0u;
  std::vector<std::optional<uint32_t>> var_degrees;
  weight_profile weights;
  std::vector<uint32_t> maxonomials;
  hitting_set_result hitting;
  std::optional<uint32_t> block_sensitivity;
  bool h_within_cube = false; // h <= deg^3

  key_values to_key_values() const
  {
    key_values kv;
    if ( input.num_vars() <= 12u )
    {
      kv.emplace_back( "input", input.to_string() );
    }
    else
    {
      std::ostringstream h;
      h << std::hex << input.hash();
      kv.emplace_back( "input_hash", h.str() );
    }
    kv.emplace_back( "arity", std::to_string( input.num_vars() ) );
    kv.emplace_back( "degree", std::to_string( degree ) );
    kv.emplace_back( "relevant", format_var_set( relevant_mask ) );
    kv.emplace_back( "R", std::to_string( relevant ) );
    kv.emplace_back( "deg_i", join( var_degrees, ',', []( auto const& d ) {
                       return d ? std::to_string( *d ) : std::string( "-" );
                     } ) );
    kv.emplace_back( "w_i", join( weights.weights, ',', []( auto const& w ) { return w.to_string(); } ) );
    kv.emplace_back( "W", weights.total.to_string() );
    kv.emplace_back( "maxonomial_count", std::to_string( maxonomials.size() ) );
    kv.emplace_back( "maxonomials", join( maxonomials, ';', []( uint32_t m ) { return format_var_set( m ); } ) );
    kv.emplace_back( "hitting_set", format_var_set( hitting.set ) );
    kv.emplace_back( "h", std::to_string( hitting.size ) );
    kv.emplace_back( "packing", join( hitting.packing, ';', []( uint32_t m ) { return format_var_set( m ); } ) );
    kv.emplace_back( "h_certified", hitting.certified() ? "true" : "false" );
    kv.emplace_back( "h_le_deg_cubed", h_within_cube ? "true" : "false" );
    if ( block_sensitivity )
    {
      kv.emplace_back( "bs", std::to_string( *block_sensitivity ) );
    }
    return kv;
  }
};

inline analysis_report analyze( const truth_table& tt, bool with_block_sensitivity = false )
{
  analysis_report r;
  r.input = tt;
  r.degree = degree( tt );
  r.relevant_mask = relevant_vars( tt );
  r.relevant = popcount( r.relevant_mask );
  r.var_degrees = per_variable_degrees( tt );
  r.weights = weight_total( tt );
  if ( !tt.is_constant() )
  {
    r.maxonomials = bfa::maxonomials( tt ).masks;
  }
  r.hitting = min_hitting_set( tt );
  const uint64_t d = r.degree;
  r.h_within_cube = r.hitting.size <= d * d * d;
  if ( with_block_sensitivity )
  {
    r.block_sensitivity = bfa::block_sensitivity( tt );
  }
  return r;
}

/*! \brief CSV `n,degree,maxR,maxW_num,maxW_exp,maxH,witness`; witness attains maxR. */
inline std::string search_csv( const extremal_record& rec, std::optional<uint32_t> only_degree = std::nullopt )
{
  std::string out = "n,degree,maxR,maxW_num,maxW_exp,maxH,witness\n";
  for ( auto const& e : rec.by_degree )
  {
    if ( !e.present || ( only_degree && *only_degree != e.degree ) )
      continue;
    out += std::to_string( rec.num_vars ) + ',' + std::to_string( e.degree ) + ',' + std::to_string( e.max_r ) + ',' +
           std::to_string( e.max_w.numerator() ) + ',' + std::to_string( e.max_w.exponent() ) + ',' +
           std::to_string( e.max_h ) + ',' + e.witness_r.to_string() + '\n';
  }
  return out;
}

/*! \brief CSV of exact and decimal cd_lower / cstar_upper for d = 1..dmax, with a summary. */
inline std::string bounds_csv( uint32_t dmax, uint32_t significant = 4u )
{
  std::string out = "d,cd_lower,cstar_upper,cd_lower_decimal,cstar_upper_decimal\n";
  for ( uint32_t d = 1; d <= dmax; ++d )
  {
    const auto lo = cd_lower( d );
    const auto up = cstar_upper( d );
    out += std::to_string( d ) + ',' + to_fraction_string( lo ) + ',' + to_fraction_string( up ) + ',' +
           to_decimal( lo, significant ) + ',' + to_decimal( up, significant ) + '\n';
  }
  return out;
}

/*! \brief Key/value summary of the C* upper bound minimisation. */
inline key_values bounds_summary( uint32_t dmax, uint32_t significant = 4u )
{
  const auto best = cstar_upper_best( dmax );
  const auto threshold = largest_d_with_summand_above_half();
  key_values kv;
  kv.emplace_back( "dmax", std::to_string( dmax ) );
  kv.emplace_back( "tail_sum_0", to_fraction_string( tail_sum( 0 ) ) );
  kv.emplace_back( "argmin_d", std::to_string( best.d ) );
  kv.emplace_back( "min_value", to_fraction_string( best.value ) );
  kv.emplace_back( "min_value_decimal", to_decimal( best.value, significant ) );
  kv.emplace_back( "largest_d_with_cube_term_above_half", std::to_string( threshold ) );
  kv.emplace_back( "value_at_d12", to_fraction_string( cstar_upper( 12 ) ) );
  kv.emplace_back( "value_at_d12_decimal", to_decimal( cstar_upper( 12 ), significant ) );
  kv.emplace_back( "note", best.d == 12u ? "minimum at d=12"
                                          : "minimum is at d=" + std::to_string( best.d ) +
                                                ", not d=12; d=12 gives " + to_decimal( cstar_upper( 12 ), significant ) );
  return kv;
}

} // namespace bfa
