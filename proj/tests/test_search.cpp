#include <gtest/gtest.h>

#include <bfa/npn.hpp>
#include <bfa/search.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace bfa;

namespace
{

/* the search without any class reduction */
extremal_record brute_extremal( uint32_t n )
{
  extremal_record rec( n );
  for ( uint64_t t = 0; t < ( uint64_t{ 1 } << ( 1u << n ) ); ++t )
  {
    const auto tt = truth_table::from_word( n, t );
    rec.add( tt, compute_metrics( tt ) );
  }
  return rec;
}

} // namespace

TEST( Npn, DeMorganPair )
{
  EXPECT_EQ( npn_canonical( truth_table::from_word( 2, 0xE ) ), npn_canonical( truth_table::from_word( 2, 0x8 ) ) );
  EXPECT_EQ( npn_canonical( truth_table::from_word( 2, 0x8 ) ), truth_table::from_word( 2, 0x1 ) );
}

TEST( Npn, ArityLimit )
{
  try
  {
    npn_canonical( truth_table( 6 ) );
    FAIL();
  }
  catch ( const error& e )
  {
    EXPECT_EQ( e.code(), errc::arity_too_large_for_search );
  }
  EXPECT_THROW( enumerate_classes( 6 ), error );
  EXPECT_THROW( extremal_table( 6 ), error );
}

TEST( Npn, CanonicalIsOrbitMinimumAndIdempotent )
{
  // orbit computed independently by applying every (perm, flips, negation) directly
  for ( uint64_t t = 0; t < 256; ++t )
  {
    const auto tt = truth_table::from_word( 3, t );
    std::vector<uint32_t> perm{ 0, 1, 2 };
    truth_table best = tt;
    do
    {
      for ( uint32_t flips = 0; flips < 8; ++flips )
        for ( bool neg : { false, true } )
          best = std::min( best, oracle::transform( tt, perm, flips, neg ) );
    } while ( std::next_permutation( perm.begin(), perm.end() ) );
    const auto canon = npn_canonical( tt );
    ASSERT_EQ( canon, best ) << tt;
    ASSERT_EQ( npn_canonical( canon ), canon );
    ASSERT_EQ( compute_metrics( tt ), compute_metrics( canon ) ) << tt;
  }
}

TEST( Npn, CanonicalInvariantUnderRandomTransforms )
{
  std::mt19937_64 rng( 12 );
  for ( int rep = 0; rep < 300; ++rep )
  {
    const uint32_t n = 1u + static_cast<uint32_t>( rng() % 5u );
    const auto tt = oracle::random_table( n, rng );
    std::vector<uint32_t> perm( n );
    std::iota( perm.begin(), perm.end(), 0u );
    std::shuffle( perm.begin(), perm.end(), rng );
    const auto image = oracle::transform( tt, perm, static_cast<uint32_t>( rng() ) & full_mask( n ), rng() & 1u );
    ASSERT_EQ( npn_canonical( tt ), npn_canonical( image ) );
  }
}

TEST( Npn, ClassCounts )
{
  const uint64_t expected[] = { 1, 2, 4, 14, 222 };
  for ( uint32_t n = 0; n <= 4; ++n )
  {
    const auto classes = enumerate_classes( n );
    EXPECT_EQ( classes.size(), expected[n] );
    uint64_t total = 0;
    std::set<uint64_t> reps;
    for ( auto const& c : classes )
    {
      total += c.size;
      reps.insert( c.representative.as_word() );
      ASSERT_EQ( npn_canonical( c.representative ), c.representative );
    }
    EXPECT_EQ( total, uint64_t{ 1 } << ( 1u << n ) );
    EXPECT_EQ( reps.size(), classes.size() );
  }
}

TEST( Npn, EveryTableMapsToOneEmittedClass )
{
  const auto classes = enumerate_classes( 3 );
  std::map<uint64_t, uint64_t> counted;
  for ( uint64_t t = 0; t < 256; ++t )
    ++counted[npn_canonical( truth_table::from_word( 3, t ) ).as_word()];
  ASSERT_EQ( counted.size(), classes.size() );
  for ( auto const& c : classes )
    EXPECT_EQ( counted.at( c.representative.as_word() ), c.size );
}

TEST( Search, LosslessAgainstBruteForce )
{
  for ( uint32_t n = 0; n <= 4; ++n )
    EXPECT_EQ( extremal_table( n ), brute_extremal( n ) ) << "n=" << n;
}

TEST( Search, DegreeTwoAtFour )
{
  const auto rec = extremal_table( 4 );
  EXPECT_EQ( rec.by_degree[2].max_r, 4u );
  EXPECT_EQ( rec.by_degree[2].max_w, dyadic_rational( 1 ) );
  EXPECT_EQ( rec.max_w_up_to( 2 ), dyadic_rational( 1 ) );
  EXPECT_EQ( rec.by_degree[1].max_w, dyadic_rational( 1, 1 ) );
  for ( uint32_t d = 0; d <= 4; ++d )
  {
    const auto& e = rec.by_degree[d];
    ASSERT_TRUE( e.present );
    EXPECT_LE( e.max_h, d * d * d );
    EXPECT_EQ( compute_metrics( e.witness_r ).relevant, e.max_r );
    EXPECT_EQ( compute_metrics( e.witness_w ).weight, e.max_w );
    EXPECT_EQ( compute_metrics( e.witness_h ).hitting, e.max_h );
    EXPECT_EQ( degree( e.witness_r ), d );
    EXPECT_EQ( degree( e.witness_w ), d );
    EXPECT_EQ( degree( e.witness_h ), d );
  }
}

TEST( Search, DeterministicAcrossWorkers )
{
  const auto one = extremal_table( 4, 1 );
  EXPECT_EQ( extremal_table( 4, 2 ), one );
  EXPECT_EQ( extremal_table( 4, 8 ), one );
  EXPECT_EQ( extremal_table( 4, 3 ), one );
}

TEST( Search, MaxRMonotoneInArity )
{
  std::vector<extremal_record> recs;
  for ( uint32_t n = 0; n <= 4; ++n )
    recs.push_back( extremal_table( n ) );
  for ( uint32_t n = 1; n <= 4; ++n )
    for ( uint32_t d = 0; d < n; ++d )
      EXPECT_GE( recs[n].by_degree[d].max_r, recs[n - 1].by_degree[d].max_r );
  EXPECT_EQ( recs[3].by_degree[2].max_r, 3u );
}

TEST( Search, MergeIsOrderIndependent )
{
  std::mt19937_64 rng( 6 );
  extremal_record a( 3 ), b( 3 ), c( 3 );
  for ( int rep = 0; rep < 60; ++rep )
  {
    const auto tt = truth_table::from_word( 3, rng() & 0xff );
    ( rep % 3 == 0 ? a : rep % 3 == 1 ? b : c ).add( tt, compute_metrics( tt ) );
  }
  auto ab_c = a;
  ab_c.merge( b );
  ab_c.merge( c );
  auto c_ba = c;
  auto ba = b;
  ba.merge( a );
  c_ba.merge( ba );
  EXPECT_EQ( ab_c, c_ba );
}
