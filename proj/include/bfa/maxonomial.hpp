/*!
  \file maxonomial.hpp
  \brief Maxonomials, exact minimum maxonomial hitting sets, and the weight
         decomposition around a minimum hitting set
*/

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bits.hpp"
#include "config.hpp"
#include "dyadic.hpp"
#include "measures.hpp"
#include "multilinear.hpp"
#include "partial_assignment.hpp"
#include "truth_table.hpp"

namespace bfa
{

struct maxonomial_set
{
  uint32_t degree = 0u;
  std::vector<uint32_t> masks; // ascending
};

/*! \brief Supports of the top-degree monomials. Throws ConstantFunction on constants. */
inline maxonomial_set maxonomials( const truth_table& tt )
{
  const auto dense = mobius_dense( tt );
  maxonomial_set result;
  for ( std::size_t s = 0; s < dense.size(); ++s )
  {
    if ( dense[s] == 0 )
      continue;
    const auto mask = static_cast<uint32_t>( s );
    const auto size = popcount( mask );
    if ( size > result.degree )
    {
      result.degree = size;
      result.masks.clear();
    }
    if ( size == result.degree )
      result.masks.push_back( mask );
  }
  if ( result.degree == 0u )
  {
    throw error( errc::constant_function, "constant function has no maxonomials of positive size" );
  }
  return result;
}

struct hitting_set_result
{
  uint32_t set = 0u;
  uint32_t size = 0u;
  std::vector<uint32_t> packing; // pairwise-disjoint maxonomials; certifies optimality when its length equals size

  bool certified() const noexcept { return packing.size() == size; }
};

namespace detail
{

/* variable hitting the most sets (restricted to `allowed`), lowest index on ties */
inline int most_frequent_var( std::span<const uint32_t> sets, uint32_t allowed )
{
  uint32_t counts[32] = {};
  for ( auto s : sets )
  {
    for ( auto m = s & allowed; m != 0u; m &= m - 1u )
      ++counts[std::countr_zero( m )];
  }
  int best = -1;
  for ( int v = 0; v < 32; ++v )
  {
    if ( counts[v] > 0u && ( best < 0 || counts[v] > counts[best] ) )
      best = v;
  }
  return best;
}

inline uint32_t greedy_packing_size( std::span<const uint32_t> sets, uint32_t allowed )
{
  uint32_t used = 0u, count = 0u;
  for ( auto s : sets )
  {
    const auto r = s & allowed;
    if ( ( r & used ) == 0u )
    {
      used |= r;
      ++count;
    }
  }
  return count;
}

class hitting_set_solver
{
public:
  explicit hitting_set_solver( std::span<const uint32_t> sets ) : sets_( sets.begin(), sets.end() ) {}

  uint32_t solve()
  {
    best_ = greedy();
    best_size_ = popcount( best_ );
    search( sets_, ~0u, 0u );
    return best_;
  }

private:
  uint32_t greedy() const
  {
    std::vector<uint32_t> open = sets_;
    uint32_t chosen = 0u;
    while ( !open.empty() )
    {
      const auto v = most_frequent_var( open, ~0u );
      chosen |= 1u << v;
      std::erase_if( open, [v]( uint32_t s ) { return ( s >> v ) & 1u; } );
    }
    return chosen;
  }

  void search( const std::vector<uint32_t>& open, uint32_t allowed, uint32_t chosen )
  {
    const auto size = popcount( chosen );
    if ( open.empty() )
    {
      if ( size < best_size_ )
      {
        best_ = chosen;
        best_size_ = size;
      }
      return;
    }
    if ( size + greedy_packing_size( open, allowed ) >= best_size_ )
      return;

    const int v = most_frequent_var( open, allowed );
    const uint32_t bit = 1u << v;

    std::vector<uint32_t> rest;
    rest.reserve( open.size() );
    for ( auto s : open )
    {
      if ( !( s & bit ) )
        rest.push_back( s );
    }
    search( rest, allowed, chosen | bit );

    const uint32_t narrowed = allowed & ~bit;
    if ( std::all_of( open.begin(), open.end(), [narrowed]( uint32_t s ) { return ( s & narrowed ) != 0u; } ) )
      search( open, narrowed, chosen );
  }

  std::vector<uint32_t> sets_;
  uint32_t best_ = 0u;
  uint32_t best_size_ = 0u;
};

/* largest disjoint sub-family found, stopping at `target` or after `budget` nodes */
inline std::vector<uint32_t> disjoint_packing( std::span<const uint32_t> sets, uint32_t target, uint64_t budget = 1u << 20 )
{
  std::vector<uint32_t> best, current;
  uint64_t nodes = 0;
  auto rec = [&]( auto&& self, std::size_t from, uint32_t used ) -> void {
    if ( current.size() > best.size() )
      best = current;
    if ( best.size() >= target || ++nodes > budget )
      return;
    for ( std::size_t k = from; k < sets.size(); ++k )
    {
      if ( sets[k] & used )
        continue;
      current.push_back( sets[k] );
      self( self, k + 1, used | sets[k] );
      current.pop_back();
      if ( best.size() >= target || nodes > budget )
        return;
    }
  };
  rec( rec, 0, 0u );
  return best;
}

} // namespace detail

/*! \brief Exact minimum hitting set of a family of nonempty variable masks.

  Branch and bound: a greedy cover seeds the upper bound, a greedy disjoint
  packing of the uncovered sets gives the lower bound, and each node branches
  on the most frequent variable (take it, or forbid it), lowest index first.
*/
inline hitting_set_result min_hitting_set( std::span<const uint32_t> sets )
{
  hitting_set_result r;
  if ( sets.empty() )
    return r;
  r.set = detail::hitting_set_solver( sets ).solve();
  r.size = popcount( r.set );
  r.packing = detail::disjoint_packing( sets, r.size );
  return r;
}

/*! \brief h(f) with a hitting set and packing certificate; h = 0 for constants. */
inline hitting_set_result min_hitting_set( const truth_table& tt )
{
  if ( tt.is_constant() )
    return {};
  const auto mx = maxonomials( tt );
  return min_hitting_set( mx.masks );
}

/*! \brief True iff `set` meets every maxonomial (vacuously true for constants). */
inline bool verify_hitting_set( const truth_table& tt, uint32_t set )
{
  if ( tt.is_constant() )
    return true;
  const auto mx = maxonomials( tt );
  return std::all_of( mx.masks.begin(), mx.masks.end(), [set]( uint32_t m ) { return ( m & set ) != 0u; } );
}

struct lemma1_report
{
  uint32_t degree = 0u;
  uint32_t hitting_set = 0u;
  bool hitting_vars_have_full_degree = false; // deg_i(f) = d for every i in H
  dyadic_rational total_weight;               // W(f)
  dyadic_rational decomposed_weight;          // 2^-d |H| + sum_{i not in H} w_i(f)
  bool decomposition_exact = false;
  dyadic_rational outside_weight;             // sum_{i not in H} w_i(f)
  dyadic_rational restricted_average;         // 2^-|H| sum_{alpha in PA(H)} W(f_alpha)
  bool averaging_holds = false;
  uint32_t max_restricted_degree = 0u;
  bool restrictions_drop_degree = false;       // deg(f_alpha) <= d-1 for all alpha

  bool holds() const noexcept
  {
    return hitting_vars_have_full_degree && decomposition_exact && averaging_holds && restrictions_drop_degree;
  }
};

/*! \brief Checks the four facts a minimum hitting set H gives about W(f).

  Throws NotAHittingSet if H misses a maxonomial and NotMinimum if a smaller
  hitting set exists.
*/
inline lemma1_report check_lemma1_decomposition( const truth_table& tt, uint32_t hitting_set )
{
  if ( tt.is_constant() )
  {
    throw error( errc::constant_function, "decomposition needs a non-constant function" );
  }
  if ( ( hitting_set & ~full_mask( tt.num_vars() ) ) != 0u )
  {
    throw error( errc::index_out_of_range, "H not contained in [n]" );
  }
  if ( !verify_hitting_set( tt, hitting_set ) )
  {
    throw error( errc::not_a_hitting_set, format_var_set( hitting_set ) + " misses a maxonomial" );
  }
  const auto optimum = min_hitting_set( tt );
  if ( optimum.size < popcount( hitting_set ) )
  {
    throw error( errc::not_minimum, format_var_set( optimum.set ) + " is smaller than " + format_var_set( hitting_set ) );
  }

  lemma1_report r;
  r.hitting_set = hitting_set;
  const auto degs = per_variable_degrees( tt );
  r.degree = degree( tt );
  const auto profile = weight_total( tt );
  r.total_weight = profile.total;

  r.hitting_vars_have_full_degree = true;
  for ( auto v : mask_to_vars( hitting_set ) )
  {
    r.hitting_vars_have_full_degree &= degs[v - 1u] == r.degree;
  }
  for ( uint32_t v = 1; v <= tt.num_vars(); ++v )
  {
    if ( !( hitting_set & var_bit( v ) ) )
      r.outside_weight += profile.weights[v - 1u];
  }
  r.decomposed_weight = dyadic_rational::pow2_neg( r.degree ) * popcount( hitting_set ) + r.outside_weight;
  r.decomposition_exact = r.decomposed_weight == r.total_weight;

  dyadic_rational restricted_sum;
  for ( auto const& alpha : assignments_over( hitting_set ) )
  {
    const auto sub = restrict( tt, alpha );
    restricted_sum += weight_total( sub ).total;
    r.max_restricted_degree = std::max( r.max_restricted_degree, degree( sub ) );
  }
  r.restricted_average = restricted_sum.scaled( popcount( hitting_set ) );
  r.averaging_holds = r.outside_weight <= r.restricted_average;
  r.restrictions_drop_degree = r.max_restricted_degree + 1u <= r.degree;
  return r;
}

} // namespace bfa
