#pragma once

#include "lcsc/arith.hpp"
#include "lcsc/catalog.hpp"
#include "lcsc/cohomology.hpp"
#include "lcsc/exterior.hpp"
#include "lcsc/lcs.hpp"
#include "lcsc/liealg.hpp"
#include "lcsc/poly.hpp"
#include "lcsc/report.hpp"
