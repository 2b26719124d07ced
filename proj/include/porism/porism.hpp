#pragma once

#include "porism/billiard.hpp"
#include "porism/centers.hpp"
#include "porism/conics.hpp"
#include "porism/error.hpp"
#include "porism/geom.hpp"
#include "porism/poristic.hpp"
