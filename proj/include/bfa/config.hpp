/*!
  \file config.hpp
  \brief Error type and run-time limits shared by the whole library
*/

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bfa
{

enum class errc
{
  parse_error,
  arity_overflow,
  index_out_of_range,
  invalid_argument,
  not_boolean_valued,
  i_in_j,
  constant_function,
  irrelevant_variable,
  not_a_hitting_set,
  not_minimum,
  arity_too_large_for_exact,
  arity_too_large_for_search,
  unknown_suite,
  io_error
};

inline std::string_view to_string( errc code )
{
  switch ( code )
  {
  case errc::parse_error: return "ParseError";
  case errc::arity_overflow: return "ArityOverflow";
  case errc::index_out_of_range: return "IndexOutOfRange";
  case errc::invalid_argument: return "InvalidArgument";
  case errc::not_boolean_valued: return "NotBooleanValued";
  case errc::i_in_j: return "IInJ";
  case errc::constant_function: return "ConstantFunction";
  case errc::irrelevant_variable: return "IrrelevantVariable";
  case errc::not_a_hitting_set: return "NotAHittingSet";
  case errc::not_minimum: return "NotMinimum";
  case errc::arity_too_large_for_exact: return "ArityTooLargeForExact";
  case errc::arity_too_large_for_search: return "ArityTooLargeForSearch";
  case errc::unknown_suite: return "UnknownSuite";
  case errc::io_error: return "IOError";
  }
  return "Unknown";
}

/*! \brief Exception thrown by every operation of the library. */
class error : public std::runtime_error
{
public:
  error( errc code, const std::string& what )
      : std::runtime_error( std::string( to_string( code ) ) + ": " + what ), code_( code )
  {
  }

  errc code() const noexcept { return code_; }

private:
  errc code_;
};

namespace config
{

/* variable subsets are stored as 32-bit masks */
inline constexpr uint32_t hard_max_arity = 30u;
inline constexpr uint32_t default_max_arity = 24u;
inline constexpr uint32_t default_bs_max_arity = 12u;
inline constexpr uint32_t search_max_arity = 5u;

namespace detail
{
inline uint32_t& max_arity_slot()
{
  static uint32_t value = [] {
    if ( const char* env = std::getenv( "BF_NMAX" ); env != nullptr && *env != '\0' )
    {
      char* end = nullptr;
      const auto parsed = std::strtoul( env, &end, 10 );
      if ( end != env && *end == '\0' )
      {
        return static_cast<uint32_t>( std::min<unsigned long>( parsed, hard_max_arity ) );
      }
    }
    return default_max_arity;
  }();
  return value;
}

inline uint32_t& bs_max_arity_slot()
{
  static uint32_t value = default_bs_max_arity;
  return value;
}
} // namespace detail

/*! \brief Largest arity accepted by truth-table constructors (N_MAX, env `BF_NMAX`). */
inline uint32_t max_arity() { return detail::max_arity_slot(); }

inline void set_max_arity( uint32_t n )
{
  if ( n > hard_max_arity )
  {
    throw error( errc::arity_overflow, "arity limit above " + std::to_string( hard_max_arity ) );
  }
  detail::max_arity_slot() = n;
}

/*! \brief Largest arity for which exact block sensitivity is attempted. */
inline uint32_t bs_max_arity() { return detail::bs_max_arity_slot(); }
inline void set_bs_max_arity( uint32_t n ) { detail::bs_max_arity_slot() = n; }

} // namespace config

} // namespace bfa
