#include <gtest/gtest.h>

#include <bfa/construct.hpp>
#include <bfa/maxonomial.hpp>
#include <bfa/npn.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <random>

using namespace bfa;

namespace
{
const auto and2 = truth_table::from_word( 2, 0x8 );
const auto xor2 = truth_table::from_word( 2, 0x6 );
const auto mux = truth_table::from_word( 3, 0xD8 ); // z = x1, x = x2, y = x3
} // namespace

TEST( Maxonomials, Examples )
{
  EXPECT_EQ( maxonomials( and2 ).masks, std::vector<uint32_t>{ 0b11 } );
  EXPECT_EQ( maxonomials( mux ).masks, ( std::vector<uint32_t>{ 0b011, 0b101 } ) );
  const auto x3 = truth_table::from_word( 3, 0x96 );
  EXPECT_EQ( maxonomials( x3 ).masks, std::vector<uint32_t>{ 0b111 } );
  EXPECT_EQ( mobius( x3 ).coefficient( 0b111 ), 4 );
  try
  {
    maxonomials( truth_table::constant( 2, true ) );
    FAIL();
  }
  catch ( const error& e )
  {
    EXPECT_EQ( e.code(), errc::constant_function );
  }
}

TEST( HittingSet, Examples )
{
  const auto m = min_hitting_set( mux );
  EXPECT_EQ( m.size, 1u );
  EXPECT_EQ( m.set, 0b001u );
  EXPECT_EQ( min_hitting_set( and2 ).size, 1u );
  EXPECT_EQ( min_hitting_set( compose( xor2, xor2 ) ).size, 1u );
  EXPECT_EQ( min_hitting_set( truth_table( 3 ) ).size, 0u );
  EXPECT_EQ( min_hitting_set( truth_table::constant( 3, true ) ).size, 0u );
}

TEST( HittingSet, Verify )
{
  EXPECT_TRUE( verify_hitting_set( mux, 0b001 ) );
  EXPECT_FALSE( verify_hitting_set( mux, 0b010 ) );
  std::mt19937_64 rng( 1 );
  for ( int rep = 0; rep < 200; ++rep )
  {
    const auto tt = truth_table::from_word( 4, rng() & 0xffff );
    if ( !tt.is_constant() )
    {
      EXPECT_TRUE( verify_hitting_set( tt, 0xf ) );
    }
  }
}

TEST( HittingSet, SolverOnExplicitFamilies )
{
  // triangle: needs two vertices, packing has only one set
  const std::vector<uint32_t> triangle{ 0b011, 0b110, 0b101 };
  const auto r = min_hitting_set( triangle );
  EXPECT_EQ( r.size, 2u );
  EXPECT_FALSE( r.certified() );
  // disjoint pairs: packing certifies
  const std::vector<uint32_t> pairs{ 0b0011, 0b1100 };
  const auto p = min_hitting_set( pairs );
  EXPECT_EQ( p.size, 2u );
  EXPECT_TRUE( p.certified() );

  std::mt19937_64 rng( 2 );
  for ( int rep = 0; rep < 500; ++rep )
  {
    const uint32_t n = 2u + static_cast<uint32_t>( rng() % 7u );
    std::vector<uint32_t> sets;
    const auto count = 1u + rng() % 12u;
    for ( uint32_t k = 0; k < count; ++k )
    {
      uint32_t s = static_cast<uint32_t>( rng() ) & full_mask( n );
      if ( s == 0u )
        s = 1u;
      sets.push_back( s );
    }
    const auto res = min_hitting_set( sets );
    ASSERT_EQ( res.size, oracle::brute_hitting_size( sets, n ) );
    for ( auto s : sets )
      ASSERT_NE( s & res.set, 0u );
    for ( std::size_t a = 0; a < res.packing.size(); ++a )
      for ( std::size_t b = a + 1; b < res.packing.size(); ++b )
        ASSERT_EQ( res.packing[a] & res.packing[b], 0u );
    ASSERT_LE( res.packing.size(), res.size );
  }
}

TEST( HittingSet, DeterministicTieBreak )
{
  // every singleton is optimal; the lowest index wins
  const std::vector<uint32_t> sets{ 0b111 };
  EXPECT_EQ( min_hitting_set( sets ).set, 0b001u );
  EXPECT_EQ( min_hitting_set( mux ).set, min_hitting_set( mux ).set );
}

TEST( HittingSet, ExhaustiveAgainstOracleAndBounds )
{
  for ( uint32_t n = 0; n <= 4; ++n )
  {
    for ( uint64_t t = 0; t < ( uint64_t{ 1 } << ( 1u << n ) ); ++t )
    {
      const auto tt = truth_table::from_word( n, t );
      const auto r = min_hitting_set( tt );
      ASSERT_EQ( r.size, oracle::brute_h( tt ) ) << tt;
      const uint64_t d = degree( tt );
      ASSERT_LE( r.size, d * d * d ) << tt;
      ASSERT_LE( r.size, d * block_sensitivity( tt ) ) << tt;
      if ( d <= 1u )
      {
        ASSERT_EQ( r.size, d ) << tt;
      }
    }
  }
}

TEST( HittingSet, NpnInvariantProperty )
{
  std::mt19937_64 rng( 4 );
  for ( int rep = 0; rep < 2000; ++rep )
  {
    const auto tt = truth_table::from_word( 4, rng() & 0xffff );
    const auto canon = npn_canonical( tt );
    ASSERT_EQ( min_hitting_set( tt ).size, min_hitting_set( canon ).size );
    ASSERT_EQ( degree( tt ), degree( canon ) );
    if ( tt.is_constant() )
      continue;
    auto sizes = []( const truth_table& f ) {
      std::vector<uint32_t> out;
      for ( auto m : maxonomials( f ).masks )
        out.push_back( popcount( m ) );
      return out;
    };
    ASSERT_EQ( maxonomials( tt ).masks.size(), maxonomials( canon ).masks.size() );
    ASSERT_EQ( sizes( tt ), sizes( canon ) );
  }
}

TEST( Lemma1, MuxExample )
{
  const auto r = check_lemma1_decomposition( mux, 0b001 );
  EXPECT_EQ( r.total_weight, dyadic_rational( 3, 2 ) );
  EXPECT_EQ( r.decomposed_weight, dyadic_rational( 3, 2 ) );
  EXPECT_EQ( r.outside_weight, dyadic_rational( 1, 1 ) );
  EXPECT_EQ( r.max_restricted_degree, 1u );
  EXPECT_TRUE( r.holds() );
}

TEST( Lemma1, AndExample )
{
  const auto r = check_lemma1_decomposition( and2, 0b01 );
  EXPECT_EQ( r.total_weight, dyadic_rational( 1, 1 ) );
  EXPECT_EQ( r.outside_weight, dyadic_rational( 1, 2 ) );
  EXPECT_TRUE( r.holds() );
}

TEST( Lemma1, XiTwo )
{
  const auto x2 = xi( 2 ).table;
  const auto hs = min_hitting_set( x2 );
  const auto r = check_lemma1_decomposition( x2, hs.set );
  EXPECT_TRUE( r.hitting_vars_have_full_degree );
  EXPECT_TRUE( r.decomposition_exact );
  EXPECT_TRUE( r.averaging_holds );
  EXPECT_TRUE( r.restrictions_drop_degree );
}

TEST( Lemma1, Errors )
{
  try
  {
    check_lemma1_decomposition( mux, 0b010 );
    FAIL();
  }
  catch ( const error& e )
  {
    EXPECT_EQ( e.code(), errc::not_a_hitting_set );
  }
  try
  {
    check_lemma1_decomposition( mux, 0b011 );
    FAIL();
  }
  catch ( const error& e )
  {
    EXPECT_EQ( e.code(), errc::not_minimum );
  }
  EXPECT_THROW( check_lemma1_decomposition( truth_table( 2 ), 0 ), error );
}

TEST( Lemma1, ExhaustiveAtFour )
{
  for ( uint64_t t = 1; t + 1 < 65536; ++t )
  {
    const auto tt = truth_table::from_word( 4, t );
    if ( tt.is_constant() )
      continue;
    ASSERT_TRUE( check_lemma1_decomposition( tt, min_hitting_set( tt ).set ).holds() ) << tt;
  }
}
