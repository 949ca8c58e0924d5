#pragma once

#include "galois/context.hpp"
#include "galois/error.hpp"
#include "galois/exportio.hpp"
#include "galois/hsub.hpp"
#include "galois/lattice.hpp"
#include "galois/msub.hpp"
#include "galois/rational.hpp"
#include "galois/rules.hpp"
#include "galois/taxonomy.hpp"
