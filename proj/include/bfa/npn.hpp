/*!
  \file npn.hpp
  \brief NPN canonical forms and class enumeration for n <= 5

  The group acting on tables is generated by variable permutations,
  per-variable input complementation and output negation. The canonical
  representative is the orbit element with the smallest table value.
*/

#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "config.hpp"
#include "truth_table.hpp"

namespace bfa
{

struct npn_class
{
  truth_table representative;
  uint64_t size;
};

namespace detail
{

class npn_group
{
public:
  explicit npn_group( uint32_t n ) : n_( n )
  {
    if ( n > config::search_max_arity )
    {
      throw error( errc::arity_too_large_for_search,
                   "arity " + std::to_string( n ) + " above " + std::to_string( config::search_max_arity ) );
    }
    const uint32_t bits = 1u << n;
    all_ = bits == 64u ? ~uint64_t{ 0 } : ( ( uint64_t{ 1 } << bits ) - 1u );
    for ( uint32_t i = 0; i < n; ++i )
    {
      uint64_t m = 0;
      for ( uint32_t k = 0; k < bits; ++k )
      {
        if ( ( k >> i ) & 1u )
          m |= uint64_t{ 1 } << k;
      }
      pos_[i] = m;
    }
    /* Heap's algorithm: n! - 1 transpositions visiting every permutation */
    std::vector<uint32_t> c( n, 0u );
    for ( uint32_t i = 1; i < n; )
    {
      if ( c[i] < i )
      {
        swaps_.emplace_back( i % 2u == 0u ? 0u : c[i], i );
        ++c[i];
        i = 1;
      }
      else
      {
        c[i] = 0;
        ++i;
      }
    }
  }

  uint64_t all() const noexcept { return all_; }

  uint64_t flip( uint64_t t, uint32_t i ) const noexcept
  {
    const uint32_t s = 1u << i;
    return ( ( t & pos_[i] ) >> s ) | ( ( t & ~pos_[i] & all_ ) << s );
  }

  uint64_t swap( uint64_t t, uint32_t a, uint32_t b ) const noexcept
  {
    const uint64_t m = pos_[a] & ~pos_[b] & all_;
    const uint32_t delta = ( 1u << b ) - ( 1u << a );
    return ( t & ~( m | ( m << delta ) ) ) | ( ( t & m ) << delta ) | ( ( t >> delta ) & m );
  }

  /*! \brief Calls fn on every group image of t (with repetitions). */
  template<typename Fn>
  void for_each_image( uint64_t t, Fn&& fn ) const
  {
    uint64_t perm = t;
    for ( std::size_t step = 0;; ++step )
    {
      uint64_t q = perm;
      fn( q );
      fn( ~q & all_ );
      for ( uint32_t g = 1; g < ( 1u << n_ ); ++g )
      {
        q = flip( q, static_cast<uint32_t>( std::countr_zero( g ) ) );
        fn( q );
        fn( ~q & all_ );
      }
      if ( step == swaps_.size() )
        break;
      perm = swap( perm, swaps_[step].first, swaps_[step].second );
    }
  }

private:
  uint32_t n_;
  uint64_t all_ = 0;
  uint64_t pos_[6] = {};
  std::vector<std::pair<uint32_t, uint32_t>> swaps_;
};

} // namespace detail

/*! \brief Smallest table in the NPN orbit of tt (n <= 5). Idempotent. */
inline truth_table npn_canonical( const truth_table& tt )
{
  const detail::npn_group group( tt.num_vars() );
  uint64_t best = tt.as_word();
  group.for_each_image( tt.as_word(), [&best]( uint64_t v ) {
    if ( v < best )
      best = v;
  } );
  return truth_table::from_word( tt.num_vars(), best );
}

/*! \brief Streams every NPN class on n variables in increasing representative order.

  Tables are swept in increasing order; the first unvisited one is the minimum
  of its orbit, whose members are then marked. Needs a 2^(2^n)-bit map
  (512 MiB at n = 5).
*/
template<typename Fn>
void for_each_npn_class( uint32_t n, Fn&& fn )
{
  const detail::npn_group group( n );
  const uint64_t total = uint64_t{ 1 } << ( 1u << n );
  std::vector<uint64_t> visited( static_cast<std::size_t>( ( total + 63u ) / 64u ), 0u );
  for ( uint64_t t = 0; t < total; ++t )
  {
    if ( ( visited[t >> 6] >> ( t & 63u ) ) & 1u )
      continue;
    uint64_t size = 0;
    group.for_each_image( t, [&]( uint64_t v ) {
      auto& w = visited[v >> 6];
      const uint64_t bit = uint64_t{ 1 } << ( v & 63u );
      if ( !( w & bit ) )
      {
        w |= bit;
        ++size;
      }
    } );
    fn( npn_class{ truth_table::from_word( n, t ), size } );
  }
}

inline std::vector<npn_class> enumerate_classes( uint32_t n )
{
  std::vector<npn_class> out;
  for_each_npn_class( n, [&out]( npn_class c ) { out.push_back( std::move( c ) ); } );
  return out;
}

} // namespace bfa
