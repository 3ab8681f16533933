/*!
  \file bits.hpp
  \brief Helpers on 32-bit variable masks

  Variable i (1-based) corresponds to bit i-1 of a mask.
*/

#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace bfa
{

inline constexpr uint32_t var_bit( uint32_t var ) { return 1u << ( var - 1u ); }

inline constexpr uint32_t full_mask( uint32_t num_vars )
{
  return num_vars >= 32u ? ~0u : ( ( 1u << num_vars ) - 1u );
}

inline constexpr uint32_t popcount( uint32_t mask ) { return static_cast<uint32_t>( std::popcount( mask ) ); }

/*! \brief Scatters the low bits of `value` into the set positions of `positions` (software pdep). */
inline constexpr uint32_t deposit_bits( uint32_t value, uint32_t positions )
{
  uint32_t result = 0u;
  for ( uint32_t bit = 1u; positions != 0u; bit <<= 1 )
  {
    const uint32_t low = positions & ( ~positions + 1u );
    if ( value & bit )
    {
      result |= low;
    }
    positions ^= low;
  }
  return result;
}

/*! \brief Gathers the bits of `value` at the set positions of `positions` into the low bits (software pext). */
inline constexpr uint32_t extract_bits( uint32_t value, uint32_t positions )
{
  uint32_t result = 0u;
  for ( uint32_t bit = 1u; positions != 0u; bit <<= 1 )
  {
    const uint32_t low = positions & ( ~positions + 1u );
    if ( value & low )
    {
      result |= bit;
    }
    positions ^= low;
  }
  return result;
}

/*! \brief 1-based variable indices in a mask, ascending. */
inline std::vector<uint32_t> mask_to_vars( uint32_t mask )
{
  std::vector<uint32_t> vars;
  while ( mask != 0u )
  {
    vars.push_back( static_cast<uint32_t>( std::countr_zero( mask ) ) + 1u );
    mask &= mask - 1u;
  }
  return vars;
}

/*! \brief Formats a mask as `{1,3,4}`. */
inline std::string format_var_set( uint32_t mask )
{
  std::string out = "{";
  bool first = true;
  for ( auto v : mask_to_vars( mask ) )
  {
    if ( !first )
    {
      out += ',';
    }
    out += std::to_string( v );
    first = false;
  }
  out += '}';
  return out;
}

} // namespace bfa
