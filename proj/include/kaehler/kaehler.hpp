#pragma once

#include "kaehler/alpha.hpp"
#include "kaehler/differential.hpp"
#include "kaehler/errors.hpp"
#include "kaehler/format.hpp"
#include "kaehler/io.hpp"
#include "kaehler/linalg.hpp"
#include "kaehler/names.hpp"
#include "kaehler/parse.hpp"
#include "kaehler/poly_map.hpp"
#include "kaehler/polynomial.hpp"
#include "kaehler/rational.hpp"
#include "kaehler/ring.hpp"
#include "kaehler/rng.hpp"
#include "kaehler/series.hpp"
#include "kaehler/symbolic.hpp"
#include "kaehler/weights.hpp"
