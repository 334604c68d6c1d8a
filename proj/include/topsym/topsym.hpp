#pragma once

#include "topsym/complex.hpp"
#include "topsym/errors.hpp"
#include "topsym/exactness.hpp"
#include "topsym/gf2.hpp"
#include "topsym/homology.hpp"
#include "topsym/morse.hpp"
#include "topsym/report.hpp"
#include "topsym/space_file.hpp"
#include "topsym/spaces.hpp"
#include "topsym/split.hpp"
#include "topsym/symmetry.hpp"
#include "topsym/verify.hpp"
