#pragma once

#include "diamond.hpp"
#include "enumerate.hpp"
#include "genfun.hpp"
#include "io.hpp"
#include "lattice.hpp"
#include "matching.hpp"
#include "render.hpp"
#include "shuffle.hpp"
#include "verify.hpp"
