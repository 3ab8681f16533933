/*!
  \file bounds.hpp
  \brief Exact arithmetic for the bounds on C_d and C* = lim C_d

  With h_i <= i^3 the upper bound is C* <= min_d ( d/2 + sum_{i>d} i^3 2^-i ),
  and the tail has the closed form 2^-d (d^3 + 6d^2 + 18d + 26).
*/

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>

namespace bfa
{

using big_int = boost::multiprecision::cpp_int;
using big_rational = boost::multiprecision::cpp_rational;

inline big_rational pow2_neg_q( uint32_t k ) { return big_rational( big_int( 1 ), big_int( 1 ) << k ); }

/*! \brief sum_{i >= d+1} i^3 2^-i */
inline big_rational tail_sum( uint32_t d )
{
  const big_int dd = d;
  return big_rational( dd * dd * dd + 6 * dd * dd + 18 * dd + 26, big_int( 1 ) << d );
}

/*! \brief i^3 2^-i */
inline big_rational cube_term( uint32_t i )
{
  const big_int ii = i;
  return big_rational( ii * ii * ii, big_int( 1 ) << i );
}

/*! \brief d/2 + tail_sum(d) */
inline big_rational cstar_upper( uint32_t d ) { return big_rational( d, 2 ) + tail_sum( d ); }

struct cstar_minimum
{
  uint32_t d;
  big_rational value;
};

/*! \brief argmin of cstar_upper over 1..dmax; lowest d on ties. */
inline cstar_minimum cstar_upper_best( uint32_t dmax )
{
  cstar_minimum best{ 1u, cstar_upper( 1u ) };
  for ( uint32_t d = 2; d <= dmax; ++d )
  {
    auto v = cstar_upper( d );
    if ( v < best.value )
      best = { d, std::move( v ) };
  }
  return best;
}

/*! \brief Largest d in [1, limit] whose summand d^3 2^-d exceeds 1/2. */
inline uint32_t largest_d_with_summand_above_half( uint32_t limit = 64u )
{
  uint32_t last = 0u;
  for ( uint32_t d = 1; d <= limit; ++d )
  {
    if ( cube_term( d ) > big_rational( 1, 2 ) )
      last = d;
  }
  return last;
}

/*! \brief 1 - 2^-d */
inline big_rational cd_lower( uint32_t d ) { return big_rational( 1 ) - pow2_neg_q( d ); }

/*! \brief sum_i h_i 2^-i for h_1..h_d */
inline big_rational cd_upper_from_h( std::span<const uint64_t> hs )
{
  big_rational sum = 0;
  for ( std::size_t i = 0; i < hs.size(); ++i )
  {
    sum += big_rational( big_int( hs[i] ) ) * pow2_neg_q( static_cast<uint32_t>( i + 1u ) );
  }
  return sum;
}

/*! \brief `num/den`, or `num` for integers. */
inline std::string to_fraction_string( const big_rational& q )
{
  const auto num = boost::multiprecision::numerator( q );
  const auto den = boost::multiprecision::denominator( q );
  if ( den == 1 )
    return num.str();
  return num.str() + "/" + den.str();
}

/*! \brief Decimal rendering with `significant` digits, rounding half away from zero. */
inline std::string to_decimal( const big_rational& q, uint32_t significant = 4u )
{
  if ( q == 0 )
    return "0";
  const bool negative = q < 0;
  const big_rational a = negative ? big_rational( -q ) : q;
  const big_int num = boost::multiprecision::numerator( a );
  const big_int den = boost::multiprecision::denominator( a );

  /* e = floor(log10(a)) */
  int e = 0;
  big_rational scaled = a;
  while ( scaled >= 10 )
  {
    scaled /= 10;
    ++e;
  }
  while ( scaled < 1 )
  {
    scaled *= 10;
    --e;
  }

  auto rounded = [&]( int k ) {
    big_int n = num, d = den;
    big_int p = 1;
    for ( int j = 0; j < ( k < 0 ? -k : k ); ++j )
      p *= 10;
    if ( k >= 0 )
      n *= p;
    else
      d *= p;
    return big_int( ( 2 * n + d ) / ( 2 * d ) );
  };

  int k = static_cast<int>( significant ) - 1 - e;
  big_int digits = rounded( k );
  big_int limit = 1;
  for ( uint32_t j = 0; j < significant; ++j )
    limit *= 10;
  if ( digits >= limit )
  {
    --k;
    digits = rounded( k );
  }

  std::string s = digits.str();
  if ( k <= 0 )
  {
    s.append( static_cast<std::size_t>( -k ), '0' );
  }
  else
  {
    if ( s.size() <= static_cast<std::size_t>( k ) )
      s.insert( 0, static_cast<std::size_t>( k ) + 1u - s.size(), '0' );
    s.insert( s.size() - static_cast<std::size_t>( k ), 1, '.' );
  }
  return negative ? "-" + s : s;
}

} // namespace bfa
