/*!
  \file search.hpp
  \brief Exhaustive per-degree maxima of R, W and h over small arities
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "config.hpp"
#include "dyadic.hpp"
#include "maxonomial.hpp"
#include "measures.hpp"
#include "multilinear.hpp"
#include "npn.hpp"
#include "truth_table.hpp"

namespace bfa
{

struct function_metrics
{
  uint32_t degree = 0u;
  uint32_t relevant = 0u; // R(f)
  dyadic_rational weight; // W(f)
  uint32_t hitting = 0u;  // h(f)

  friend bool operator==( const function_metrics&, const function_metrics& ) = default;
};

inline function_metrics compute_metrics( const truth_table& tt )
{
  function_metrics m;
  m.degree = degree( tt );
  m.relevant = num_relevant( tt );
  m.weight = weight_total( tt ).total;
  m.hitting = min_hitting_set( tt ).size;
  return m;
}

/*! \brief Maxima for one degree; each witness is the smallest table attaining its maximum. */
struct extremal_entry
{
  uint32_t degree = 0u;
  bool present = false;
  uint32_t max_r = 0u;
  truth_table witness_r;
  dyadic_rational max_w;
  truth_table witness_w;
  uint32_t max_h = 0u;
  truth_table witness_h;

  friend bool operator==( const extremal_entry&, const extremal_entry& ) = default;
};

struct extremal_record
{
  uint32_t num_vars = 0u;
  std::vector<extremal_entry> by_degree; // index = degree, 0..n

  explicit extremal_record( uint32_t n = 0u ) : num_vars( n ), by_degree( n + 1u )
  {
    for ( uint32_t d = 0; d <= n; ++d )
      by_degree[d].degree = d;
  }

  /*! \brief Folds one function in; max-merge with smallest-witness tie-break. */
  void add( const truth_table& tt, const function_metrics& m )
  {
    auto& e = by_degree[m.degree];
    if ( !e.present )
    {
      e.present = true;
      e.max_r = m.relevant;
      e.max_w = m.weight;
      e.max_h = m.hitting;
      e.witness_r = e.witness_w = e.witness_h = tt;
      return;
    }
    update( e.max_r, e.witness_r, m.relevant, tt );
    update( e.max_w, e.witness_w, m.weight, tt );
    update( e.max_h, e.witness_h, m.hitting, tt );
  }

  /*! \brief Associative, commutative merge. */
  void merge( const extremal_record& other )
  {
    for ( auto const& o : other.by_degree )
    {
      if ( !o.present )
        continue;
      auto& e = by_degree[o.degree];
      if ( !e.present )
      {
        e = o;
        continue;
      }
      update( e.max_r, e.witness_r, o.max_r, o.witness_r );
      update( e.max_w, e.witness_w, o.max_w, o.witness_w );
      update( e.max_h, e.witness_h, o.max_h, o.witness_h );
    }
  }

  /*! \brief max W over all functions of degree at most d. */
  std::optional<dyadic_rational> max_w_up_to( uint32_t d ) const
  {
    std::optional<dyadic_rational> best;
    for ( uint32_t k = 0; k <= std::min( d, num_vars ); ++k )
    {
      if ( by_degree[k].present && ( !best || by_degree[k].max_w > *best ) )
        best = by_degree[k].max_w;
    }
    return best;
  }

  friend bool operator==( const extremal_record&, const extremal_record& ) = default;

private:
  template<typename V>
  static void update( V& best, truth_table& witness, const V& value, const truth_table& candidate )
  {
    if ( value > best || ( value == best && candidate < witness ) )
    {
      best = value;
      witness = candidate;
    }
  }
};

/*! \brief Exact per-degree maxima over all 2^(2^n) functions on n <= 5 variables.

  Metrics are NPN invariants, so only class representatives are evaluated. The
  smallest table attaining a maximum is always a class representative, so the
  witnesses equal those of a brute-force sweep. Classes are sharded by the hash
  of the representative; the result does not depend on `jobs`.
*/
inline extremal_record extremal_table( uint32_t n, uint32_t jobs = 1u )
{
  if ( n > config::search_max_arity )
  {
    throw error( errc::arity_too_large_for_search, "arity " + std::to_string( n ) );
  }
  jobs = std::max( jobs, 1u );
  const auto classes = enumerate_classes( n );

  std::vector<extremal_record> shards( jobs, extremal_record( n ) );
  auto work = [&]( uint32_t shard ) {
    for ( auto const& c : classes )
    {
      if ( c.representative.hash() % jobs == shard )
        shards[shard].add( c.representative, compute_metrics( c.representative ) );
    }
  };
  if ( jobs == 1u )
  {
    work( 0u );
  }
  else
  {
    std::vector<std::thread> pool;
    for ( uint32_t s = 0; s < jobs; ++s )
      pool.emplace_back( work, s );
    for ( auto& t : pool )
      t.join();
  }

  extremal_record result( n );
  for ( auto const& s : shards )
    result.merge( s );
  return result;
}

} // namespace bfa
