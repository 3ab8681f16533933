/*!
  \file multilinear.hpp
  \brief Multilinear representation over the reals and the Moebius transform

  Every f : {0,1}^n -> {0,1} has a unique expansion sum_S a_S prod_{i in S} x_i
  with integer coefficients a_S = sum_{T subset S} (-1)^{|S|-|T|} f(T).
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "bits.hpp"
#include "config.hpp"
#include "truth_table.hpp"

namespace bfa
{

struct monomial
{
  uint32_t mask;
  int64_t coeff;

  friend bool operator==( const monomial&, const monomial& ) = default;
};

/*! \brief Sparse multilinear polynomial: sorted (mask, nonzero coefficient) pairs. */
class multilinear_poly
{
public:
  explicit multilinear_poly( uint32_t num_vars ) : num_vars_( num_vars ) {}

  multilinear_poly( uint32_t num_vars, std::vector<monomial> terms ) : num_vars_( num_vars )
  {
    std::erase_if( terms, []( const monomial& m ) { return m.coeff == 0; } );
    std::sort( terms.begin(), terms.end(), []( auto const& a, auto const& b ) { return a.mask < b.mask; } );
    for ( std::size_t i = 0; i < terms.size(); ++i )
    {
      if ( ( terms[i].mask & ~full_mask( num_vars ) ) != 0u )
      {
        throw error( errc::index_out_of_range, "monomial mask outside [n]" );
      }
      if ( i > 0 && terms[i].mask == terms[i - 1].mask )
      {
        throw error( errc::invalid_argument, "duplicate monomial " + format_var_set( terms[i].mask ) );
      }
    }
    terms_ = std::move( terms );
  }

  uint32_t num_vars() const noexcept { return num_vars_; }
  std::span<const monomial> terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }

  int64_t coefficient( uint32_t mask ) const noexcept
  {
    auto it = std::lower_bound( terms_.begin(), terms_.end(), mask,
                                []( const monomial& m, uint32_t key ) { return m.mask < key; } );
    return ( it != terms_.end() && it->mask == mask ) ? it->coeff : 0;
  }

  /*! \brief Value at a 0/1 point: the sum of coefficients of monomials inside `point`. */
  int64_t evaluate( uint32_t point ) const noexcept
  {
    int64_t v = 0;
    for ( auto const& m : terms_ )
    {
      if ( ( m.mask & ~point ) == 0u )
      {
        v += m.coeff;
      }
    }
    return v;
  }

  uint32_t degree() const noexcept
  {
    uint32_t d = 0;
    for ( auto const& m : terms_ )
    {
      d = std::max( d, popcount( m.mask ) );
    }
    return d;
  }

  uint32_t support() const noexcept
  {
    uint32_t s = 0;
    for ( auto const& m : terms_ )
    {
      s |= m.mask;
    }
    return s;
  }

  friend bool operator==( const multilinear_poly&, const multilinear_poly& ) = default;

private:
  uint32_t num_vars_;
  std::vector<monomial> terms_;
};

namespace detail
{

/* in-place subset Moebius transform: v[S] <- sum_{T subset S} (-1)^{|S|-|T|} v[T] */
template<typename T>
void mobius_in_place( std::vector<T>& v )
{
  const std::size_t size = v.size();
  for ( std::size_t step = 1; step < size; step <<= 1 )
  {
    for ( std::size_t base = 0; base < size; base += step << 1 )
    {
      for ( std::size_t k = base; k < base + step; ++k )
      {
        v[k + step] -= v[k];
      }
    }
  }
}

/* in-place subset zeta transform: v[S] <- sum_{T subset S} v[T] */
template<typename T>
void zeta_in_place( std::vector<T>& v )
{
  const std::size_t size = v.size();
  for ( std::size_t step = 1; step < size; step <<= 1 )
  {
    for ( std::size_t base = 0; base < size; base += step << 1 )
    {
      for ( std::size_t k = base; k < base + step; ++k )
      {
        v[k + step] += v[k];
      }
    }
  }
}

} // namespace detail

/*! \brief Dense coefficient vector indexed by subset mask.

  |a_S| <= 2^(|S|-1), so 32-bit entries suffice for every admissible arity.
*/
inline std::vector<int32_t> mobius_dense( const truth_table& tt )
{
  std::vector<int32_t> v( tt.num_bits() );
  for ( uint64_t k = 0; k < tt.num_bits(); ++k )
  {
    v[k] = tt.get_bit( k ) ? 1 : 0;
  }
  detail::mobius_in_place( v );
  return v;
}

inline multilinear_poly mobius( const truth_table& tt )
{
  const auto dense = mobius_dense( tt );
  std::vector<monomial> terms;
  for ( std::size_t s = 0; s < dense.size(); ++s )
  {
    if ( dense[s] != 0 )
    {
      terms.push_back( { static_cast<uint32_t>( s ), dense[s] } );
    }
  }
  return multilinear_poly( tt.num_vars(), std::move( terms ) );
}

namespace detail
{
inline std::vector<int64_t> poly_values( const multilinear_poly& poly )
{
  std::vector<int64_t> v( std::size_t{ 1 } << poly.num_vars(), 0 );
  for ( auto const& m : poly.terms() )
  {
    v[m.mask] = m.coeff;
  }
  zeta_in_place( v );
  return v;
}
} // namespace detail

inline bool is_boolean_poly( const multilinear_poly& poly )
{
  const auto values = detail::poly_values( poly );
  return std::all_of( values.begin(), values.end(), []( int64_t x ) { return x == 0 || x == 1; } );
}

/*! \brief Inverse of `mobius`; throws NotBooleanValued when some vertex is outside {0,1}. */
inline truth_table unmobius( const multilinear_poly& poly )
{
  const auto values = detail::poly_values( poly );
  truth_table tt( poly.num_vars() );
  for ( std::size_t k = 0; k < values.size(); ++k )
  {
    if ( values[k] != 0 && values[k] != 1 )
    {
      throw error( errc::not_boolean_valued,
                   "value " + std::to_string( values[k] ) + " at point " + std::to_string( k ) );
    }
    tt.set_bit( k, values[k] == 1 );
  }
  return tt;
}

inline uint32_t degree( const truth_table& tt )
{
  const auto dense = mobius_dense( tt );
  uint32_t d = 0;
  for ( std::size_t s = 0; s < dense.size(); ++s )
  {
    if ( dense[s] != 0 )
    {
      d = std::max( d, popcount( static_cast<uint32_t>( s ) ) );
    }
  }
  return d;
}

/*! \brief Union of the supports of all nonzero monomials. */
inline uint32_t relevant_vars( const truth_table& tt )
{
  const auto dense = mobius_dense( tt );
  uint32_t mask = 0;
  for ( std::size_t s = 0; s < dense.size(); ++s )
  {
    if ( dense[s] != 0 )
    {
      mask |= static_cast<uint32_t>( s );
    }
  }
  return mask;
}

/*! \brief Variables i such that flipping x_i changes f at some input. */
inline uint32_t relevant_vars_by_flip( const truth_table& tt )
{
  uint32_t mask = 0;
  for ( uint32_t i = 0; i < tt.num_vars(); ++i )
  {
    const uint64_t bit = uint64_t{ 1 } << i;
    for ( uint64_t k = 0; k < tt.num_bits(); ++k )
    {
      if ( ( k & bit ) == 0u && tt.get_bit( k ) != tt.get_bit( k | bit ) )
      {
        mask |= 1u << i;
        break;
      }
    }
  }
  return mask;
}

inline uint32_t num_relevant( const truth_table& tt ) { return popcount( relevant_vars( tt ) ); }

} // namespace bfa
