// Umbrella header.
#pragma once

#include "ybx/matrix.hpp"
#include "ybx/eigen.hpp"
#include "ybx/partial.hpp"
#include "ybx/halfint.hpp"
#include "ybx/xform.hpp"
#include "ybx/ybe.hpp"
#include "ybx/entangle.hpp"
#include "ybx/hamiltonian.hpp"
#include "ybx/yangian.hpp"
#include "ybx/random.hpp"
