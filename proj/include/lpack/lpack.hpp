#pragma once

#include "lpack/bench.hpp"
#include "lpack/bounds.hpp"
#include "lpack/coloring.hpp"
#include "lpack/cubic.hpp"
#include "lpack/errors.hpp"
#include "lpack/exact.hpp"
#include "lpack/field.hpp"
#include "lpack/generators.hpp"
#include "lpack/graph.hpp"
#include "lpack/greedy.hpp"
#include "lpack/io.hpp"
#include "lpack/random_packing.hpp"
#include "lpack/rng.hpp"
#include "lpack/verify.hpp"
