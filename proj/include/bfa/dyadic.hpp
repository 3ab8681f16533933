/*!
  \file dyadic.hpp
  \brief Exact rationals with power-of-two denominators
*/

#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bfa
{

/*! \brief numerator / 2^exponent in canonical form (odd numerator, or 0/2^0). */
class dyadic_rational
{
public:
  static constexpr uint32_t max_exponent = 62u;

  constexpr dyadic_rational() = default;
  constexpr dyadic_rational( int64_t numerator, uint32_t exponent = 0u ) : num_( numerator ), exp_( exponent )
  {
    normalize();
  }

  /*! \brief 2^-k */
  static constexpr dyadic_rational pow2_neg( uint32_t k ) { return { 1, k }; }

  constexpr int64_t numerator() const noexcept { return num_; }
  constexpr uint32_t exponent() const noexcept { return exp_; }
  constexpr uint64_t denominator() const noexcept { return uint64_t{ 1 } << exp_; }
  constexpr bool is_zero() const noexcept { return num_ == 0; }

  /*! \brief Multiplies by 2^-k. */
  constexpr dyadic_rational scaled( uint32_t k ) const
  {
    if ( num_ == 0 )
      return {};
    return from_wide( num_, exp_ + k );
  }

  constexpr dyadic_rational operator-() const { return from_wide( -static_cast<__int128>( num_ ), exp_ ); }

  friend constexpr dyadic_rational operator+( const dyadic_rational& a, const dyadic_rational& b )
  {
    const uint32_t e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    const __int128 na = static_cast<__int128>( a.num_ ) << ( e - a.exp_ );
    const __int128 nb = static_cast<__int128>( b.num_ ) << ( e - b.exp_ );
    return from_wide( na + nb, e );
  }

  friend constexpr dyadic_rational operator-( const dyadic_rational& a, const dyadic_rational& b ) { return a + -b; }

  friend constexpr dyadic_rational operator*( const dyadic_rational& a, int64_t k )
  {
    return from_wide( static_cast<__int128>( a.num_ ) * k, a.exp_ );
  }

  dyadic_rational& operator+=( const dyadic_rational& o ) { return *this = *this + o; }

  friend constexpr bool operator==( const dyadic_rational&, const dyadic_rational& ) = default;

  friend constexpr std::strong_ordering operator<=>( const dyadic_rational& a, const dyadic_rational& b )
  {
    const uint32_t e = a.exp_ > b.exp_ ? a.exp_ : b.exp_;
    const __int128 na = static_cast<__int128>( a.num_ ) << ( e - a.exp_ );
    const __int128 nb = static_cast<__int128>( b.num_ ) << ( e - b.exp_ );
    return na < nb ? std::strong_ordering::less : ( na > nb ? std::strong_ordering::greater : std::strong_ordering::equal );
  }

  double to_double() const noexcept { return static_cast<double>( num_ ) / static_cast<double>( denominator() ); }

  /*! \brief `num/den`, or just `num` when the denominator is 1. */
  std::string to_string() const
  {
    if ( exp_ == 0u )
      return std::to_string( num_ );
    return std::to_string( num_ ) + "/" + std::to_string( denominator() );
  }

  friend std::ostream& operator<<( std::ostream& os, const dyadic_rational& q ) { return os << q.to_string(); }

private:
  static constexpr dyadic_rational from_wide( __int128 num, uint32_t exp )
  {
    while ( exp > 0u && num != 0 && ( num & 1 ) == 0 )
    {
      num >>= 1;
      --exp;
    }
    if ( num == 0 )
      exp = 0u;
    if ( num > std::numeric_limits<int64_t>::max() || num < std::numeric_limits<int64_t>::min() ||
         exp > max_exponent )
    {
      throw std::overflow_error( "dyadic_rational out of range" );
    }
    dyadic_rational r;
    r.num_ = static_cast<int64_t>( num );
    r.exp_ = exp;
    return r;
  }

  constexpr void normalize()
  {
    *this = from_wide( num_, exp_ );
  }

  int64_t num_ = 0;
  uint32_t exp_ = 0u;
};

} // namespace bfa
