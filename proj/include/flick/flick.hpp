#pragma once

#include "flick/bell.hpp"
#include "flick/bigint.hpp"
#include "flick/genfunc.hpp"
#include "flick/io.hpp"
#include "flick/known_values.hpp"
#include "flick/poly.hpp"
#include "flick/powersum.hpp"
#include "flick/series.hpp"
#include "flick/stirling.hpp"
#include "flick/todd.hpp"
#include "flick/triangle.hpp"
#include "flick/verify.hpp"
