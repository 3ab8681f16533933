#pragma once

#include "bits.hpp"
#include "bounds.hpp"
#include "config.hpp"
#include "construct.hpp"
#include "dyadic.hpp"
#include "io.hpp"
#include "maxonomial.hpp"
#include "measures.hpp"
#include "multilinear.hpp"
#include "npn.hpp"
#include "partial_assignment.hpp"
#include "report.hpp"
#include "search.hpp"
#include "truth_table.hpp"
#include "verify.hpp"
