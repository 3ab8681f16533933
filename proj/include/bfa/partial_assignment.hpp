/*!
  \file partial_assignment.hpp
  \brief Partial assignments and restrictions f_alpha
*/

#pragma once

#include <cstdint>
#include <vector>

#include "bits.hpp"
#include "config.hpp"
#include "truth_table.hpp"

namespace bfa
{

/*! \brief alpha : [n] -> {0,1,*}, stored as the fixed set and the values of the fixed variables. */
class partial_assignment
{
public:
  partial_assignment() = default;

  partial_assignment( uint32_t fixed_mask, uint32_t value_mask ) : fixed_( fixed_mask ), values_( value_mask )
  {
    if ( ( value_mask & ~fixed_mask ) != 0u )
    {
      throw error( errc::invalid_argument, "value mask not contained in fixed mask" );
    }
  }

  static partial_assignment single( uint32_t var, bool value )
  {
    return { var_bit( var ), value ? var_bit( var ) : 0u };
  }

  uint32_t fixed_mask() const noexcept { return fixed_; }
  uint32_t value_mask() const noexcept { return values_; }

  /*! \brief Combines two assignments with disjoint fixed sets over the same variables. */
  partial_assignment merged( const partial_assignment& other ) const
  {
    if ( ( fixed_ & other.fixed_ ) != 0u )
    {
      throw error( errc::invalid_argument, "merging assignments with overlapping fixed sets" );
    }
    return { fixed_ | other.fixed_, values_ | other.values_ };
  }

  /*! \brief Lifts `inner`, given over the variables left free by *this on n variables,
             back to the original numbering and merges it. */
  partial_assignment then( const partial_assignment& inner, uint32_t num_vars ) const
  {
    const uint32_t free = full_mask( num_vars ) & ~fixed_;
    return merged( { deposit_bits( inner.fixed_, free ), deposit_bits( inner.values_, free ) } );
  }

  friend bool operator==( const partial_assignment&, const partial_assignment& ) = default;

private:
  uint32_t fixed_ = 0u;
  uint32_t values_ = 0u;
};

/*! \brief PA(J): all 2^|J| assignments fixing exactly J, ordered by value mask. */
inline std::vector<partial_assignment> assignments_over( uint32_t fixed_mask )
{
  std::vector<partial_assignment> out;
  out.reserve( std::size_t{ 1 } << popcount( fixed_mask ) );
  uint32_t sub = 0u;
  do
  {
    out.emplace_back( fixed_mask, sub );
    sub = ( sub - fixed_mask ) & fixed_mask;
  } while ( sub != 0u );
  return out;
}

/*! \brief Index of `var` after the variables in `fixed_mask` are removed and the rest renumbered densely. */
inline uint32_t renumbered_var( uint32_t var, uint32_t fixed_mask )
{
  return var - popcount( fixed_mask & ( var_bit( var ) - 1u ) );
}

/*! \brief f_alpha on the n - |Fixed(alpha)| free variables, renumbered in increasing original order. */
inline truth_table restrict( const truth_table& tt, const partial_assignment& alpha )
{
  const uint32_t n = tt.num_vars();
  const uint32_t all = full_mask( n );
  if ( ( alpha.fixed_mask() & ~all ) != 0u )
  {
    throw error( errc::index_out_of_range, "assignment fixes a variable outside [n]" );
  }
  const uint32_t free = all & ~alpha.fixed_mask();
  truth_table out( popcount( free ) );
  /* submasks of `free` in increasing order enumerate the restricted points in order */
  uint32_t sub = 0u;
  uint64_t y = 0;
  do
  {
    out.set_bit( y++, tt.get_bit( alpha.value_mask() | sub ) );
    sub = ( sub - free ) & free;
  } while ( sub != 0u );
  return out;
}

} // namespace bfa
