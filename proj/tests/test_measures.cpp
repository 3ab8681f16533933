#include <gtest/gtest.h>

#include <bfa/construct.hpp>
#include <bfa/measures.hpp>

#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace bfa;

namespace
{
const auto and2 = truth_table::from_word( 2, 0x8 );
const auto mux = truth_table::from_word( 3, 0xD8 ); // z = x1, x = x2, y = x3
const dyadic_rational quarter = dyadic_rational::pow2_neg( 2 );
const dyadic_rational half = dyadic_rational::pow2_neg( 1 );
} // namespace

TEST( Dyadic, CanonicalFormAndArithmetic )
{
  EXPECT_EQ( dyadic_rational( 4, 3 ), dyadic_rational( 1, 1 ) );
  EXPECT_EQ( dyadic_rational( 0, 5 ).exponent(), 0u );
  EXPECT_EQ( quarter + quarter, half );
  EXPECT_EQ( ( half + quarter ).to_string(), "3/4" );
  EXPECT_EQ( dyadic_rational( 3 ).to_string(), "3" );
  EXPECT_LT( quarter, half );
  EXPECT_GT( dyadic_rational( -1, 3 ), dyadic_rational( -1, 2 ) );
  EXPECT_EQ( half.scaled( 3 ), dyadic_rational( 1, 4 ) );
  EXPECT_EQ( quarter * 4, dyadic_rational( 1 ) );
  EXPECT_EQ( half - quarter, quarter );
  EXPECT_THROW( dyadic_rational( 1, 63 ), std::overflow_error );
}

TEST( Measures, DegIExamples )
{
  EXPECT_EQ( deg_i( and2, 1 ), 2u );
  EXPECT_EQ( deg_i( mux, 3 ), 2u ); // monomial zy
  EXPECT_EQ( deg_i( truth_table( 2 ), 1 ), std::nullopt );
  EXPECT_THROW( deg_i( and2, 0 ), error );
  EXPECT_THROW( deg_i( and2, 3 ), error );
}

TEST( Measures, WeightExamples )
{
  EXPECT_EQ( weight_i( and2, 1 ), quarter );
  EXPECT_EQ( weight_i( mux, 1 ), quarter );
  EXPECT_EQ( weight_total( mux ).total, dyadic_rational( 3, 2 ) );
  EXPECT_EQ( weight_i( truth_table::projection( 2, 1 ), 2 ), dyadic_rational() );
  EXPECT_EQ( weight_total( and2 ).total, half );
  EXPECT_EQ( weight_total( truth_table::constant( 3, true ) ).total, dyadic_rational() );
  EXPECT_THROW( weight_i( and2, 5 ), error );
}

TEST( Measures, XiTwoHasUnitWeight )
{
  // frozen from the brute-force Moebius oracle: every variable has deg_i = 2
  const auto x2 = xi( 2 ).table;
  for ( uint32_t v = 1; v <= 4; ++v )
    ASSERT_EQ( oracle::brute_deg_i( x2, v ), 2u );
  EXPECT_EQ( weight_total( x2 ).total, dyadic_rational( 1 ) );
}

TEST( Measures, AgreesWithOracleExhaustively )
{
  for ( uint32_t n = 0; n <= 3; ++n )
  {
    for ( uint64_t t = 0; t < ( uint64_t{ 1 } << ( 1u << n ) ); ++t )
    {
      const auto tt = truth_table::from_word( n, t );
      const auto degs = per_variable_degrees( tt );
      for ( uint32_t v = 1; v <= n; ++v )
        EXPECT_EQ( degs[v - 1u], oracle::brute_deg_i( tt, v ) );
      const auto w = weight_total( tt ).total;
      EXPECT_EQ( w, dyadic_rational( oracle::brute_weight_times_2n( tt ), n ) );
    }
  }
}

TEST( Measures, ProfileInvariants )
{
  for ( uint64_t t = 0; t < 65536; ++t )
  {
    const auto tt = truth_table::from_word( 4, t );
    const auto p = weight_total( tt );
    const auto d = degree( tt );
    const auto r = num_relevant( tt );
    dyadic_rational sum;
    bool all_top = true;
    for ( uint32_t v = 0; v < 4; ++v )
    {
      sum += p.weights[v];
      if ( !p.weights[v].is_zero() )
      {
        EXPECT_EQ( p.weights[v].numerator(), 1 );
        EXPECT_GE( p.weights[v].exponent(), 1u );
        EXPECT_LE( p.weights[v].exponent(), d );
        all_top = all_top && p.weights[v].exponent() == d;
      }
    }
    ASSERT_EQ( sum, p.total );
    const auto floor = dyadic_rational::pow2_neg( d ) * r;
    EXPECT_GE( p.total, floor );
    EXPECT_EQ( p.total == floor, all_top );
  }
}

TEST( Measures, WeightsInvariantUnderNpnProperty )
{
  std::mt19937_64 rng( 5 );
  for ( int rep = 0; rep < 2000; ++rep )
  {
    const auto tt = truth_table::from_word( 4, rng() & 0xffff );
    std::vector<uint32_t> perm( 4 );
    std::iota( perm.begin(), perm.end(), 0u );
    std::shuffle( perm.begin(), perm.end(), rng );
    const auto flips = static_cast<uint32_t>( rng() & 0xf );
    const bool neg = rng() & 1u;
    const auto image = oracle::transform( tt, perm, flips, neg );
    // variable i of tt is read from position perm[i] of the image
    for ( uint32_t i = 0; i < 4; ++i )
      ASSERT_EQ( weight_i( tt, i + 1u ), weight_i( image, perm[i] + 1u ) );
  }
}

TEST( BlockSensitivity, Examples )
{
  EXPECT_EQ( block_sensitivity( and2 ), 2u );
  EXPECT_EQ( block_sensitivity( truth_table::from_word( 3, 0x96 ) ), 3u );
  EXPECT_EQ( block_sensitivity( truth_table( 3 ) ), 0u );
  EXPECT_EQ( block_sensitivity( truth_table::constant( 2, true ) ), 0u );
}

TEST( BlockSensitivity, ArityLimit )
{
  truth_table big( config::bs_max_arity() + 1u );
  big.set_bit( 1, true );
  try
  {
    block_sensitivity( big );
    FAIL();
  }
  catch ( const error& e )
  {
    EXPECT_EQ( e.code(), errc::arity_too_large_for_exact );
  }
}

TEST( BlockSensitivity, AgreesWithOracleAndQuadraticBound )
{
  for ( uint32_t n = 1; n <= 3; ++n )
  {
    for ( uint64_t t = 0; t < ( uint64_t{ 1 } << ( 1u << n ) ); ++t )
    {
      const auto tt = truth_table::from_word( n, t );
      ASSERT_EQ( block_sensitivity( tt ), oracle::brute_bs( tt ) ) << tt;
    }
  }
  std::mt19937_64 rng( 9 );
  for ( int rep = 0; rep < 300; ++rep )
  {
    const auto tt = truth_table::from_word( 4, rng() & 0xffff );
    ASSERT_EQ( block_sensitivity( tt ), oracle::brute_bs( tt ) ) << tt;
  }
  for ( uint64_t t = 0; t < 65536; ++t )
  {
    const auto tt = truth_table::from_word( 4, t );
    const uint32_t d = degree( tt );
    ASSERT_LE( block_sensitivity( tt ), 2u * d * d ) << tt;
  }
}

TEST( Claim, Examples )
{
  const auto mux_report = check_claim_wi( mux, 0b001, 2 );
  EXPECT_EQ( mux_report.lhs, quarter );
  EXPECT_EQ( mux_report.rhs, quarter );
  EXPECT_TRUE( mux_report.holds );

  const auto and_report = check_claim_wi( and2, 0b01, 2 );
  EXPECT_EQ( and_report.lhs, quarter );
  EXPECT_EQ( and_report.rhs, quarter );
  EXPECT_TRUE( and_report.holds );

  const auto irrelevant = check_claim_wi( truth_table::projection( 3, 1 ), 0b001, 3 );
  EXPECT_EQ( irrelevant.lhs, dyadic_rational() );
  EXPECT_TRUE( irrelevant.holds );
}

TEST( Claim, Errors )
{
  try
  {
    check_claim_wi( mux, 0b011, 2 );
    FAIL();
  }
  catch ( const error& e )
  {
    EXPECT_EQ( e.code(), errc::i_in_j );
  }
  EXPECT_THROW( check_claim_wi( mux, 0b001, 4 ), error );
  EXPECT_THROW( check_claim_wi( mux, 0b1000, 2 ), error );
}

TEST( Claim, ExhaustiveUpToThree )
{
  for ( uint32_t n = 1; n <= 3; ++n )
  {
    for ( uint64_t t = 0; t < ( uint64_t{ 1 } << ( 1u << n ) ); ++t )
    {
      const auto tt = truth_table::from_word( n, t );
      for ( uint32_t fixed = 1; fixed < ( 1u << n ); ++fixed )
        for ( uint32_t v = 1; v <= n; ++v )
          if ( !( fixed & var_bit( v ) ) )
          {
            ASSERT_TRUE( check_claim_wi( tt, fixed, v ).holds ) << tt << " J=" << fixed << " i=" << v;
          }
    }
  }
}

TEST( Claim, SingleVariableBaseCaseAtFour )
{
  for ( uint64_t t = 0; t < 65536; ++t )
  {
    const auto tt = truth_table::from_word( 4, t );
    for ( uint32_t j = 1; j <= 4; ++j )
    {
      const auto f0 = restrict( tt, partial_assignment::single( j, false ) );
      const auto f1 = restrict( tt, partial_assignment::single( j, true ) );
      for ( uint32_t i = 1; i <= 4; ++i )
      {
        if ( i == j )
          continue;
        const auto inner = renumbered_var( i, var_bit( j ) );
        const auto avg = ( weight_i( f0, inner ) + weight_i( f1, inner ) ).scaled( 1 );
        ASSERT_LE( weight_i( tt, i ), avg ) << tt;
      }
    }
  }
}

TEST( Claim, RandomContinuationAtFive )
{
  std::mt19937_64 rng( 21 );
  for ( int rep = 0; rep < 200; ++rep )
  {
    const auto tt = oracle::random_table( 5, rng );
    const auto fixed = static_cast<uint32_t>( 1u + rng() % 31u );
    for ( uint32_t v = 1; v <= 5; ++v )
      if ( !( fixed & var_bit( v ) ) )
      {
        ASSERT_TRUE( check_claim_wi( tt, fixed, v ).holds ) << tt;
      }
  }
}
