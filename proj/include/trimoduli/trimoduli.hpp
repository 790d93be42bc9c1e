#pragma once

#include "cevian.hpp"
#include "classops.hpp"
#include "core.hpp"
#include "desitter.hpp"
#include "geom2.hpp"
#include "pompeiu.hpp"
#include "rng.hpp"
#include "shape.hpp"
#include "space3.hpp"
#include "verify.hpp"
