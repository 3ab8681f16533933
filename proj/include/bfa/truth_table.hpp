/*!
  \file truth_table.hpp
  \brief Packed truth table of a Boolean function and its `bf:v1` text form

  Bit k of the table is f(x) for the point whose variable i takes the value
  (k >> (i-1)) & 1, variables being numbered 1..n.
*/

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bits.hpp"
#include "config.hpp"

namespace bfa
{

class truth_table
{
public:
  truth_table() : truth_table( 0u ) {}

  /*! \brief Constant-0 function on `num_vars` variables. */
  explicit truth_table( uint32_t num_vars ) : num_vars_( num_vars )
  {
    if ( num_vars > config::max_arity() )
    {
      throw error( errc::arity_overflow, "arity " + std::to_string( num_vars ) + " exceeds limit " +
                                             std::to_string( config::max_arity() ) );
    }
    words_.assign( num_vars <= 6u ? 1u : ( std::size_t{ 1 } << ( num_vars - 6u ) ), 0u );
  }

  /*! \brief Table for n <= 6 given as one integer; bits at or above 2^n must be clear. */
  static truth_table from_word( uint32_t num_vars, uint64_t bits )
  {
    if ( num_vars > 6u )
    {
      throw error( errc::invalid_argument, "from_word needs arity <= 6" );
    }
    truth_table tt( num_vars );
    if ( ( bits & ~tt.last_word_mask() ) != 0u )
    {
      throw error( errc::invalid_argument, "bits beyond 2^n are set" );
    }
    tt.words_[0] = bits;
    return tt;
  }

  static truth_table constant( uint32_t num_vars, bool value )
  {
    truth_table tt( num_vars );
    if ( value )
    {
      std::fill( tt.words_.begin(), tt.words_.end(), ~uint64_t{ 0 } );
      tt.words_.back() &= tt.last_word_mask();
    }
    return tt;
  }

  /*! \brief The function x_var on `num_vars` variables. */
  static truth_table projection( uint32_t num_vars, uint32_t var )
  {
    if ( var == 0u || var > num_vars )
    {
      throw error( errc::index_out_of_range, "variable " + std::to_string( var ) );
    }
    truth_table tt( num_vars );
    for ( uint64_t k = 0; k < tt.num_bits(); ++k )
    {
      if ( ( k >> ( var - 1u ) ) & 1u )
      {
        tt.set_bit( k, true );
      }
    }
    return tt;
  }

  uint32_t num_vars() const noexcept { return num_vars_; }
  uint64_t num_bits() const noexcept { return uint64_t{ 1 } << num_vars_; }
  std::span<const uint64_t> words() const noexcept { return words_; }

  bool get_bit( uint64_t k ) const noexcept { return ( words_[k >> 6] >> ( k & 63u ) ) & 1u; }

  void set_bit( uint64_t k, bool value ) noexcept
  {
    const uint64_t m = uint64_t{ 1 } << ( k & 63u );
    if ( value )
    {
      words_[k >> 6] |= m;
    }
    else
    {
      words_[k >> 6] &= ~m;
    }
  }

  /*! \brief f(point), where `point` is a subset mask of the variables. */
  bool evaluate( uint64_t point ) const
  {
    if ( point >= num_bits() )
    {
      throw error( errc::index_out_of_range, "point " + std::to_string( point ) + " outside 2^" +
                                                 std::to_string( num_vars_ ) );
    }
    return get_bit( point );
  }

  /*! \brief Low word of the table; the whole table when n <= 6. */
  uint64_t as_word() const noexcept { return words_[0]; }

  uint64_t count_ones() const noexcept
  {
    uint64_t c = 0;
    for ( auto w : words_ )
    {
      c += static_cast<uint64_t>( std::popcount( w ) );
    }
    return c;
  }

  bool is_constant() const noexcept
  {
    const auto ones = count_ones();
    return ones == 0u || ones == num_bits();
  }

  truth_table operator~() const
  {
    truth_table r = *this;
    for ( auto& w : r.words_ )
    {
      w = ~w;
    }
    r.words_.back() &= r.last_word_mask();
    return r;
  }

  friend bool operator==( const truth_table& a, const truth_table& b ) noexcept
  {
    return a.num_vars_ == b.num_vars_ && a.words_ == b.words_;
  }

  /*! \brief Orders by arity, then by the table read as an unsigned integer. */
  friend std::strong_ordering operator<=>( const truth_table& a, const truth_table& b ) noexcept
  {
    if ( auto c = a.num_vars_ <=> b.num_vars_; c != 0 )
    {
      return c;
    }
    for ( std::size_t i = a.words_.size(); i-- > 0; )
    {
      if ( auto c = a.words_[i] <=> b.words_[i]; c != 0 )
      {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  /*! \brief Platform-independent 64-bit FNV-1a hash of arity and table. */
  uint64_t hash() const noexcept
  {
    uint64_t h = 0xcbf29ce484222325ull;
    auto mix = [&h]( uint64_t v ) {
      for ( int i = 0; i < 8; ++i )
      {
        h ^= ( v >> ( 8 * i ) ) & 0xffu;
        h *= 0x100000001b3ull;
      }
    };
    mix( num_vars_ );
    for ( auto w : words_ )
    {
      mix( w );
    }
    return h;
  }

  /*! \brief `bf:v1:n=<arity>:0x<hex>` with no leading zero digits. */
  std::string to_string() const
  {
    static constexpr char digits[] = "0123456789abcdef";
    std::string hex;
    bool started = false;
    for ( std::size_t i = words_.size(); i-- > 0; )
    {
      for ( int nib = 15; nib >= 0; --nib )
      {
        const auto d = static_cast<unsigned>( ( words_[i] >> ( 4 * nib ) ) & 0xfu );
        if ( d != 0u || started )
        {
          hex += digits[d];
          started = true;
        }
      }
    }
    if ( hex.empty() )
    {
      hex = "0";
    }
    return "bf:v1:n=" + std::to_string( num_vars_ ) + ":0x" + hex;
  }

  /*! \brief Parses the `bf:v1` format; errors carry the byte offset of the problem. */
  static truth_table parse( std::string_view text )
  {
    auto fail = [&text]( std::size_t offset, const std::string& why ) -> error {
      return error( errc::parse_error, "at byte " + std::to_string( offset ) + ": " + why + " in '" +
                                           std::string( text.substr( 0, 64 ) ) + "'" );
    };

    constexpr std::string_view prefix = "bf:v1:n=";
    if ( text.substr( 0, prefix.size() ) != prefix )
    {
      std::size_t off = 0;
      while ( off < text.size() && off < prefix.size() && text[off] == prefix[off] )
      {
        ++off;
      }
      throw fail( off, "expected prefix 'bf:v1:n='" );
    }
    std::size_t pos = prefix.size();
    uint32_t n = 0;
    const std::size_t arity_start = pos;
    while ( pos < text.size() && text[pos] >= '0' && text[pos] <= '9' )
    {
      n = n * 10u + static_cast<uint32_t>( text[pos] - '0' );
      if ( n > 1000u )
      {
        throw fail( pos, "arity too large" );
      }
      ++pos;
    }
    if ( pos == arity_start )
    {
      throw fail( pos, "expected arity digits" );
    }
    if ( text.substr( pos, 3 ) != ":0x" )
    {
      throw fail( pos, "expected ':0x'" );
    }
    pos += 3;
    if ( n > config::max_arity() )
    {
      throw error( errc::arity_overflow, "arity " + std::to_string( n ) + " exceeds limit " +
                                             std::to_string( config::max_arity() ) );
    }
    if ( pos == text.size() )
    {
      throw fail( pos, "expected hex digits" );
    }

    truth_table tt( n );
    const uint64_t nbits = tt.num_bits();
    const std::size_t first_digit = pos;
    const std::size_t ndigits = text.size() - first_digit;
    for ( std::size_t j = 0; j < ndigits; ++j )
    {
      const std::size_t off = text.size() - 1u - j;
      const char c = text[off];
      unsigned d = 0;
      if ( c >= '0' && c <= '9' )
        d = static_cast<unsigned>( c - '0' );
      else if ( c >= 'a' && c <= 'f' )
        d = static_cast<unsigned>( c - 'a' + 10 );
      else if ( c >= 'A' && c <= 'F' )
        d = static_cast<unsigned>( c - 'A' + 10 );
      else
        throw fail( off, std::string( "invalid hex digit '" ) + c + "'" );
      for ( unsigned b = 0; b < 4u; ++b )
      {
        if ( ( d >> b ) & 1u )
        {
          const uint64_t k = 4u * static_cast<uint64_t>( j ) + b;
          if ( k >= nbits )
          {
            throw fail( off, "value has bits beyond 2^" + std::to_string( n ) );
          }
          tt.set_bit( k, true );
        }
      }
    }
    return tt;
  }

  friend std::ostream& operator<<( std::ostream& os, const truth_table& tt ) { return os << tt.to_string(); }

private:
  uint64_t last_word_mask() const noexcept
  {
    return num_vars_ >= 6u ? ~uint64_t{ 0 } : ( ( uint64_t{ 1 } << ( uint64_t{ 1 } << num_vars_ ) ) - 1u );
  }

  uint32_t num_vars_;
  std::vector<uint64_t> words_;
};

} // namespace bfa
