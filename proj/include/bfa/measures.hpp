/*!
  \file measures.hpp
  \brief Per-variable degrees, dyadic weights, block sensitivity, and the
         weight-averaging inequality over restrictions
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bits.hpp"
#include "config.hpp"
#include "dyadic.hpp"
#include "multilinear.hpp"
#include "partial_assignment.hpp"
#include "truth_table.hpp"

namespace bfa
{

/*! \brief deg_i for every variable (index i-1); empty for irrelevant variables. */
inline std::vector<std::optional<uint32_t>> per_variable_degrees( const truth_table& tt )
{
  std::vector<std::optional<uint32_t>> degs( tt.num_vars() );
  const auto dense = mobius_dense( tt );
  for ( std::size_t s = 1; s < dense.size(); ++s )
  {
    if ( dense[s] == 0 )
      continue;
    const auto mask = static_cast<uint32_t>( s );
    const uint32_t size = popcount( mask );
    for ( auto m = mask; m != 0u; m &= m - 1u )
    {
      auto& slot = degs[static_cast<std::size_t>( std::countr_zero( m ) )];
      if ( !slot || *slot < size )
        slot = size;
    }
  }
  return degs;
}

namespace detail
{
inline void check_var( const truth_table& tt, uint32_t var )
{
  if ( var == 0u || var > tt.num_vars() )
  {
    throw error( errc::index_out_of_range,
                 "variable " + std::to_string( var ) + " not in [1," + std::to_string( tt.num_vars() ) + "]" );
  }
}
} // namespace detail

/*! \brief Largest monomial degree containing x_var; empty when x_var is irrelevant. */
inline std::optional<uint32_t> deg_i( const truth_table& tt, uint32_t var )
{
  detail::check_var( tt, var );
  return per_variable_degrees( tt )[var - 1u];
}

inline dyadic_rational weight_from_degree( std::optional<uint32_t> d )
{
  return d ? dyadic_rational::pow2_neg( *d ) : dyadic_rational{};
}

/*! \brief w_i = 2^-deg_i, and 0 for an irrelevant variable. */
inline dyadic_rational weight_i( const truth_table& tt, uint32_t var )
{
  return weight_from_degree( deg_i( tt, var ) );
}

struct weight_profile
{
  std::vector<dyadic_rational> weights; // index i-1
  dyadic_rational total;
};

inline weight_profile weight_total( const truth_table& tt )
{
  weight_profile p;
  for ( auto const& d : per_variable_degrees( tt ) )
  {
    p.weights.push_back( weight_from_degree( d ) );
    p.total += p.weights.back();
  }
  return p;
}

/*! \brief Exact block sensitivity.

  For every input x the minimal sensitive blocks are found with a subset DP,
  then the largest family of pairwise-disjoint minimal blocks is found by a
  memoised search over the set of still-available variables. Any disjoint
  sensitive family can be shrunk to minimal blocks, so this is exact.
*/
inline uint32_t block_sensitivity( const truth_table& tt )
{
  const uint32_t n = tt.num_vars();
  if ( n > config::bs_max_arity() )
  {
    throw error( errc::arity_too_large_for_exact,
                 "arity " + std::to_string( n ) + " above bs limit " + std::to_string( config::bs_max_arity() ) );
  }
  if ( tt.is_constant() )
    return 0u;

  const std::size_t size = std::size_t{ 1 } << n;
  std::vector<uint8_t> sensitive( size ), below( size );
  std::vector<std::vector<uint32_t>> blocks_by_low( n );
  std::vector<int8_t> memo( size );
  uint32_t best = 0u;

  for ( std::size_t x = 0; x < size && best < n; ++x )
  {
    const bool fx = tt.get_bit( x );
    for ( std::size_t b = 0; b < size; ++b )
    {
      sensitive[b] = tt.get_bit( x ^ b ) != fx;
    }
    for ( auto& list : blocks_by_low )
      list.clear();
    below[0] = 0;
    for ( std::size_t b = 1; b < size; ++b )
    {
      uint8_t any = 0;
      for ( auto m = static_cast<uint32_t>( b ); m != 0u && !any; m &= m - 1u )
      {
        const auto sub = b & ~( std::size_t{ 1 } << std::countr_zero( m ) );
        any = sensitive[sub] | below[sub];
      }
      below[b] = any;
      if ( sensitive[b] && !any )
      {
        blocks_by_low[static_cast<std::size_t>( std::countr_zero( static_cast<uint32_t>( b ) ) )].push_back(
            static_cast<uint32_t>( b ) );
      }
    }

    std::fill( memo.begin(), memo.end(), int8_t{ -1 } );
    memo[0] = 0;
    /* packing(avail): the lowest available variable is either unused or lies in a block inside avail */
    auto packing = [&]( auto&& self, uint32_t avail ) -> int8_t {
      if ( memo[avail] >= 0 )
        return memo[avail];
      const auto low = static_cast<uint32_t>( std::countr_zero( avail ) );
      int8_t result = self( self, avail & ( avail - 1u ) );
      for ( auto blk : blocks_by_low[low] )
      {
        if ( ( blk & ~avail ) == 0u )
        {
          result = std::max<int8_t>( result, static_cast<int8_t>( 1 + self( self, avail & ~blk ) ) );
        }
      }
      return memo[avail] = result;
    };
    best = std::max( best, static_cast<uint32_t>( packing( packing, full_mask( n ) ) ) );
  }
  return best;
}

struct claim_report
{
  dyadic_rational lhs;
  dyadic_rational rhs;
  bool holds;
};

/*! \brief Compares w_i(f) with 2^-|J| sum_{alpha in PA(J)} w_i(f_alpha), exactly. */
inline claim_report check_claim_wi( const truth_table& tt, uint32_t fixed, uint32_t var )
{
  detail::check_var( tt, var );
  if ( ( fixed & ~full_mask( tt.num_vars() ) ) != 0u )
  {
    throw error( errc::index_out_of_range, "J not contained in [n]" );
  }
  if ( fixed & var_bit( var ) )
  {
    throw error( errc::i_in_j, "variable " + std::to_string( var ) + " lies in J" );
  }
  const auto lhs = weight_i( tt, var );
  const auto inner = renumbered_var( var, fixed );
  dyadic_rational sum;
  for ( auto const& alpha : assignments_over( fixed ) )
  {
    sum += weight_i( restrict( tt, alpha ), inner );
  }
  const auto rhs = sum.scaled( popcount( fixed ) );
  return { lhs, rhs, lhs <= rhs };
}

} // namespace bfa
