// Umbrella header.
#pragma once

#include "einfty/coefficient.hpp"
#include "einfty/free_module.hpp"
#include "einfty/permutation.hpp"
#include "einfty/cube.hpp"
#include "einfty/simplex.hpp"
#include "einfty/chain_model.hpp"
#include "einfty/term.hpp"
#include "einfty/evaluate.hpp"
#include "einfty/parser.hpp"
#include "einfty/comparison.hpp"
#include "einfty/complexes.hpp"
#include "einfty/complex_io.hpp"
#include "einfty/linalg.hpp"
#include "einfty/homology.hpp"
#include "einfty/verify.hpp"
