#pragma once

// Umbrella header for the exact osp_q(1|2) verification kernel.

#include "qkernel/catalog.hpp"
#include "qkernel/hopf.hpp"
#include "qkernel/limits.hpp"
#include "qkernel/ncalg.hpp"
#include "qkernel/parser.hpp"
#include "qkernel/presentations.hpp"
#include "qkernel/reps.hpp"
#include "qkernel/rewrite.hpp"
#include "qkernel/scalar.hpp"
#include "qkernel/suite.hpp"
