#pragma once

#include "gainswitch/errors.hpp"
#include "gainswitch/gain.hpp"
#include "gainswitch/simple_graph.hpp"
#include "gainswitch/gain_graph.hpp"
#include "gainswitch/cycles.hpp"
#include "gainswitch/blocks.hpp"
#include "gainswitch/switching.hpp"
#include "gainswitch/hermitian_eigen.hpp"
#include "gainswitch/spectral.hpp"
#include "gainswitch/census.hpp"
#include "gainswitch/faces.hpp"
#include "gainswitch/symmetry.hpp"
#include "gainswitch/gg_format.hpp"
