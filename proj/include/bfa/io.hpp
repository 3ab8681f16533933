/*!
  \file io.hpp
  \brief File helpers: atomic writes, table loading, and the result cache
*/

#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "config.hpp"
#include "truth_table.hpp"

namespace bfa
{

inline std::string read_file( const std::filesystem::path& path )
{
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw error( errc::io_error, "cannot read " + path.string() );
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/*! \brief Writes to a sibling temporary file, then renames it over `path`. */
inline void write_file_atomic( const std::filesystem::path& path, std::string_view content )
{
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out( tmp, std::ios::binary | std::ios::trunc );
    if ( !out )
    {
      throw error( errc::io_error, "cannot write " + tmp.string() );
    }
    out.write( content.data(), static_cast<std::streamsize>( content.size() ) );
    if ( !out.flush() )
    {
      throw error( errc::io_error, "short write to " + tmp.string() );
    }
  }
  std::error_code ec;
  std::filesystem::rename( tmp, path, ec );
  if ( ec )
  {
    std::filesystem::remove( tmp );
    throw error( errc::io_error, "cannot rename onto " + path.string() + ": " + ec.message() );
  }
}

inline std::string_view trim( std::string_view s )
{
  while ( !s.empty() && ( s.front() == ' ' || s.front() == '\t' || s.front() == '\n' || s.front() == '\r' ) )
    s.remove_prefix( 1 );
  while ( !s.empty() && ( s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r' ) )
    s.remove_suffix( 1 );
  return s;
}

/*! \brief Accepts a `bf:v1` string directly, otherwise reads one from the named file. */
inline truth_table load_table( std::string_view arg )
{
  if ( arg.substr( 0, 3 ) == "bf:" )
  {
    return truth_table::parse( trim( arg ) );
  }
  const auto content = read_file( std::filesystem::path( arg ) );
  return truth_table::parse( trim( content ) );
}

inline std::string content_hash( std::string_view text )
{
  uint64_t h = 0xcbf29ce484222325ull;
  for ( unsigned char c : text )
  {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  std::ostringstream ss;
  ss << std::hex << h;
  return ss.str();
}

/*! \brief Directory of previously computed outputs keyed by a hash of the request. */
class result_cache
{
public:
  explicit result_cache( std::filesystem::path dir ) : dir_( std::move( dir ) ) {}

  std::filesystem::path path_for( std::string_view key ) const { return dir_ / ( content_hash( key ) + ".out" ); }

  std::optional<std::string> lookup( std::string_view key ) const
  {
    const auto p = path_for( key );
    if ( !std::filesystem::exists( p ) )
      return std::nullopt;
    return read_file( p );
  }

  void store( std::string_view key, std::string_view content ) const
  {
    std::filesystem::create_directories( dir_ );
    write_file_atomic( path_for( key ), content );
  }

private:
  std::filesystem::path dir_;
};

} // namespace bfa
