#pragma once

#include "ptdirac/dirac_hamiltonian.hpp"
#include "ptdirac/gamma_algebra.hpp"
#include "ptdirac/grid.hpp"
#include "ptdirac/mass_parametrization.hpp"
#include "ptdirac/pseudo_hermitian_metric.hpp"
#include "ptdirac/region_classifier.hpp"
