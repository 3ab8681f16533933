/*!
  \file construct.hpp
  \brief Selector combination, AND-splitting, the Xi family and composition

  Variable layouts:
  - selector(f, g): z, then f's variables, then g's variables
  - xi(d): s, t, then the x-block and the y-block of xi(d-1)
  - and_split(f, i): y takes position i, z is appended as variable n+1
  - compose(f, g): variable (i, j) is flat index (i-1)*m + j
*/

#pragma once

#include <cstdint>
#include <string>

#include "bits.hpp"
#include "config.hpp"
#include "multilinear.hpp"
#include "truth_table.hpp"

namespace bfa
{

namespace detail
{
inline void check_arity( uint64_t n, const char* what )
{
  if ( n > config::max_arity() )
  {
    throw error( errc::arity_overflow, std::string( what ) + " needs " + std::to_string( n ) +
                                           " variables, limit is " + std::to_string( config::max_arity() ) );
  }
}
} // namespace detail

/*! \brief z f + (1 - z) g on disjoint variables: g when z = 0, f when z = 1. */
inline truth_table selector( const truth_table& f, const truth_table& g )
{
  const uint64_t n = 1u + uint64_t{ f.num_vars() } + g.num_vars();
  detail::check_arity( n, "selector" );
  truth_table out( static_cast<uint32_t>( n ) );
  const uint64_t fmask = f.num_bits() - 1u;
  for ( uint64_t k = 0; k < out.num_bits(); ++k )
  {
    const bool value = ( k & 1u ) ? f.get_bit( ( k >> 1 ) & fmask ) : g.get_bit( k >> ( 1u + f.num_vars() ) );
    out.set_bit( k, value );
  }
  return out;
}

/*! \brief Read-once decision tree of depth d: degree d, 2^d - 1 relevant variables. */
inline truth_table iterate_selector( uint32_t d )
{
  if ( d == 0u )
  {
    throw error( errc::invalid_argument, "selector chain needs d >= 1" );
  }
  detail::check_arity( ( uint64_t{ 1 } << d ) - 1u, "selector chain" );
  truth_table t = truth_table::projection( 1, 1 );
  for ( uint32_t level = 2; level <= d; ++level )
  {
    t = selector( t, t );
  }
  return t;
}

/*! \brief l(d) = 3 * 2^(d-1) - 2 */
inline constexpr uint64_t xi_arity( uint32_t d ) { return 3u * ( uint64_t{ 1 } << ( d - 1u ) ) - 2u; }

struct xi_function
{
  uint32_t level;
  truth_table table;
};

/*! \brief The Xi family, built over {-1,1} and stored over {0,1} with bit 0 <-> +1.

  Xi_1 is the identity. In +-1 terms Xi_d(s,t,x,y) is s*Xi_{d-1}(x) when s = t
  and s*Xi_{d-1}(y) otherwise; in bits that is s XOR Xi_{d-1}(x or y).
*/
inline xi_function xi( uint32_t d )
{
  if ( d == 0u )
  {
    throw error( errc::invalid_argument, "xi needs d >= 1" );
  }
  if ( d > 31u )
  {
    throw error( errc::arity_overflow, "xi level " + std::to_string( d ) );
  }
  detail::check_arity( xi_arity( d ), "xi" );
  truth_table t = truth_table::projection( 1, 1 );
  for ( uint32_t level = 2; level <= d; ++level )
  {
    const uint32_t sub = t.num_vars();
    truth_table next( 2u + 2u * sub );
    const uint64_t sub_mask = t.num_bits() - 1u;
    for ( uint64_t k = 0; k < next.num_bits(); ++k )
    {
      const bool s = k & 1u;
      const bool tv = ( k >> 1 ) & 1u;
      const uint64_t x = ( k >> 2 ) & sub_mask;
      const uint64_t y = k >> ( 2u + sub );
      next.set_bit( k, s != ( s == tv ? t.get_bit( x ) : t.get_bit( y ) ) );
    }
    t = std::move( next );
  }
  return { d, std::move( t ) };
}

/*! \brief Replaces x_var by y AND z: y keeps position `var`, z becomes variable n+1. */
inline truth_table and_split( const truth_table& f, uint32_t var )
{
  if ( var == 0u || var > f.num_vars() )
  {
    throw error( errc::index_out_of_range, "variable " + std::to_string( var ) );
  }
  if ( !( relevant_vars( f ) & var_bit( var ) ) )
  {
    throw error( errc::irrelevant_variable, "variable " + std::to_string( var ) + " is irrelevant" );
  }
  const uint32_t n = f.num_vars();
  detail::check_arity( uint64_t{ n } + 1u, "and_split" );
  truth_table out( n + 1u );
  const uint64_t ybit = uint64_t{ 1 } << ( var - 1u );
  const uint64_t base_mask = f.num_bits() - 1u;
  for ( uint64_t k = 0; k < out.num_bits(); ++k )
  {
    const bool z = ( k >> n ) & 1u;
    uint64_t x = k & base_mask;
    if ( !z )
      x &= ~ybit;
    out.set_bit( k, f.get_bit( x ) );
  }
  return out;
}

/*! \brief f(g(t_{1,*}), ..., g(t_{n,*})) on n*m variables, row-major. */
inline truth_table compose( const truth_table& f, const truth_table& g )
{
  const uint32_t n = f.num_vars(), m = g.num_vars();
  detail::check_arity( uint64_t{ n } * m, "compose" );
  truth_table out( n * m );
  const uint64_t gmask = g.num_bits() - 1u;
  for ( uint64_t k = 0; k < out.num_bits(); ++k )
  {
    uint64_t x = 0;
    for ( uint32_t i = 0; i < n; ++i )
    {
      if ( g.get_bit( ( k >> ( i * m ) ) & gmask ) )
        x |= uint64_t{ 1 } << i;
    }
    out.set_bit( k, f.get_bit( x ) );
  }
  return out;
}

} // namespace bfa
