#pragma once

#include "m3s/analysis.hpp"
#include "m3s/bits.hpp"
#include "m3s/dimacs.hpp"
#include "m3s/generate.hpp"
#include "m3s/instance.hpp"
#include "m3s/mmst.hpp"
#include "m3s/operators.hpp"
#include "m3s/px.hpp"
#include "m3s/pyramid.hpp"
#include "m3s/rng.hpp"
#include "m3s/vig.hpp"
