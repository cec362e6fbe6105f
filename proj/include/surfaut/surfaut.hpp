// surfaut - umbrella header.

#pragma once

#include "surfaut/arith.hpp"
#include "surfaut/classify.hpp"
#include "surfaut/cyclotomic.hpp"
#include "surfaut/error.hpp"
#include "surfaut/fuchsian.hpp"
#include "surfaut/genvec.hpp"
#include "surfaut/golden.hpp"
#include "surfaut/group.hpp"
#include "surfaut/jacobian.hpp"
#include "surfaut/oracles.hpp"
#include "surfaut/report.hpp"
#include "surfaut/reptheory.hpp"
#include "surfaut/selftest.hpp"
