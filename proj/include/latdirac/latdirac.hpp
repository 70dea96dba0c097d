#pragma once

#include <latdirac/chebyshev.hpp>
#include <latdirac/clifford.hpp>
#include <latdirac/io.hpp>
#include <latdirac/lattice.hpp>
#include <latdirac/mittag_leffler.hpp>
#include <latdirac/rational.hpp>
#include <latdirac/solvers.hpp>
#include <latdirac/spectral.hpp>
#include <latdirac/umbral.hpp>
