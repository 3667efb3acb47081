#pragma once

// Umbrella header.

#include "hodgeblocks/cli.hpp"
#include "hodgeblocks/errors.hpp"
#include "hodgeblocks/frobenius.hpp"
#include "hodgeblocks/hodge_engine.hpp"
#include "hodgeblocks/laurent.hpp"
#include "hodgeblocks/numeric.hpp"
#include "hodgeblocks/oracles.hpp"
#include "hodgeblocks/selftest.hpp"
#include "hodgeblocks/su2_model.hpp"
#include "hodgeblocks/unipoly.hpp"
